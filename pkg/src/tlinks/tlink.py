"""T-link parameters, their standard braids, and the braid-level procedures.

A T-link T((r_1,s_1),...,(r_k,s_k)) with 2 <= r_1 < ... < r_k and s_i >= 1 is
the closure of the positive braid

    (sigma_1...sigma_{r_1-1})^{s_1} ... (sigma_1...sigma_{r_k-1})^{s_k}

on r_k strands.  The constrained shape handled by the classifier keeps full
twists on a_1 < ... < a_n strands in front of a torus base (p, q): pairs
(a_i, s_i*a_i) followed by (p, q) with 1 < q < p, a_i != q and a_n < p.

Three procedures operate on these words:

* strand absorption: for q < a_n, pull the strand that travels once around
  the closure into the twisted block, one strand at a time, producing a
  verified trace from the p-strand standard word down to an a_n-strand word;
* the base flip: for a_n < q, exchange the torus base (p, q) for (q, p),
  giving an equivalent T-link presented on q strands;
* Markov reduction: trailing exponent-1 syllables collapse into the previous
  pair, destabilizing the closure presentation without changing the link.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braid import BraidWord


class TLinkParseError(ValueError):
    """Parse failure with the byte offset of the offending input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class TLinkSpec:
    """Parameter pairs (r_i, s_i) of a T-link."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(r), int(s)) for r, s in self.pairs))
        if not self.pairs:
            raise ValueError("a T-link needs at least one pair")
        if self.pairs[0][0] < 2:
            raise ValueError("r-values must be at least 2")
        for (r1, _), (r2, _) in zip(self.pairs, self.pairs[1:]):
            if r2 <= r1:
                raise ValueError("r-values must be strictly increasing")
        if any(s < 1 for _, s in self.pairs):
            raise ValueError("s-values must be at least 1")

    @property
    def strands(self) -> int:
        return self.pairs[-1][0]

    def __str__(self) -> str:
        return render_tlink(self)


@dataclass(frozen=True)
class FullTwistForm:
    """Full twists on a_1 < ... < a_n strands over a torus base (p, q)."""

    twist_pairs: tuple[tuple[int, int], ...]
    base: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(
            self, "twist_pairs", tuple((int(a), int(s)) for a, s in self.twist_pairs)
        )
        object.__setattr__(self, "base", (int(self.base[0]), int(self.base[1])))
        p, q = self.base
        if not self.twist_pairs:
            raise ValueError("at least one twist pair is required")
        if not 1 < q < p:
            raise ValueError(f"base requires 1 < q < p, got (p, q) = ({p}, {q})")
        a_values = [a for a, _ in self.twist_pairs]
        if a_values[0] <= 1:
            raise ValueError("twist strand counts must exceed 1")
        if any(a2 <= a1 for a1, a2 in zip(a_values, a_values[1:])):
            raise ValueError("twist strand counts must be strictly increasing")
        if a_values[-1] >= p:
            raise ValueError("twist strand counts must stay below p")
        if any(a == q for a in a_values):
            raise ValueError(f"twist strand count equal to q = {q} is not supported")
        if any(s < 1 for _, s in self.twist_pairs):
            raise ValueError("twist counts must be at least 1")

    @property
    def n(self) -> int:
        return len(self.twist_pairs)

    @property
    def p(self) -> int:
        return self.base[0]

    @property
    def q(self) -> int:
        return self.base[1]

    @property
    def a_max(self) -> int:
        return self.twist_pairs[-1][0]

    def spec(self) -> TLinkSpec:
        """The same link as a generic T-link parameter list."""
        pairs = [(a, s * a) for a, s in self.twist_pairs]
        pairs.append(self.base)
        return TLinkSpec(tuple(pairs))

    def gcd_base(self) -> int:
        return gcd(self.p, self.q)


@dataclass(frozen=True)
class RewriteTrace:
    """Strand-absorption trace; step j lives on p - j strands."""

    form: FullTwistForm
    steps: tuple[BraidWord, ...]

    @property
    def first(self) -> BraidWord:
        return self.steps[0]

    @property
    def final(self) -> BraidWord:
        return self.steps[-1]


def _run(width: int) -> tuple[int, ...]:
    """Ascending run sigma_1...sigma_{width-1}."""
    return tuple(range(1, width))


def standard_braid(spec: TLinkSpec) -> BraidWord:
    """The defining positive braid of the T-link, on r_k strands."""
    letters: list[int] = []
    for r, s in spec.pairs:
        letters.extend(_run(r) * s)
    return BraidWord(spec.strands, tuple(letters))


def to_full_twist_form(spec: TLinkSpec) -> FullTwistForm | None:
    """Recognize the full-twist shape; None signals "not of that form".

    Every non-final pair must be a whole number of full twists (r | s) and
    the resulting parameters must satisfy the constraint block, including the
    standing assumption a_i != q.  This is the single gateway between generic
    specs and classifier inputs.
    """
    if len(spec.pairs) < 2:
        return None
    twists = []
    for r, s in spec.pairs[:-1]:
        if s % r != 0:
            return None
        twists.append((r, s // r))
    try:
        return FullTwistForm(tuple(twists), spec.pairs[-1])
    except ValueError:
        return None


def flip_base(form: FullTwistForm) -> TLinkSpec:
    """Exchange the torus base (p, q) for (q, p); requires a_n < q.

    The flipped T-link T((a_1,s_1a_1),...,(a_n,s_na_n),(q,p)) is equivalent
    to the original and is presented on q < p strands, where its trailing
    syllable exponent p > q supplies a full twist.
    """
    if form.a_max > form.q:
        raise ValueError(
            f"flip requires a_n < q, got a_n = {form.a_max} > q = {form.q}"
        )
    pairs = [(a, s * a) for a, s in form.twist_pairs]
    pairs.append((form.q, form.p))
    return TLinkSpec(tuple(pairs))


def absorb_strands(form: FullTwistForm) -> RewriteTrace:
    """Strand-absorption trace for q < a_n < p.

    Step j (0 <= j <= p - a_n) is the word on p - j strands

        (sigma_{a_n-1}...sigma_{a_n-q+1})^j
        (sigma_1...sigma_{a_1-1})^{s_1 a_1} ... (sigma_1...sigma_{a_n-1})^{s_n a_n}
        (sigma_1...sigma_{p-1-j})^q.

    Each absorption pulls the strand that goes once around the closure into
    the twisted block, trading one strand and one crossing; the closure's
    link type is unchanged, which callers verify through invariants.  The
    last step merges the leftover base syllable into the a_n-strand block,
    whose exponent becomes s_n a_n + q > a_n, so the final word carries a
    full twist on a_n strands.
    """
    p, q = form.base
    a_n = form.a_max
    if not q < a_n:
        raise ValueError(f"absorption requires q < a_n, got q = {q}, a_n = {a_n}")
    block = tuple(range(a_n - 1, a_n - q, -1))
    middle: list[int] = []
    for a, s in form.twist_pairs:
        middle.extend(_run(a) * (s * a))
    steps = []
    for j in range(p - a_n + 1):
        letters = block * j + tuple(middle) + _run(p - j) * q
        steps.append(BraidWord(p - j, letters))
    return RewriteTrace(form, tuple(steps))


def markov_reduce(spec: TLinkSpec) -> TLinkSpec:
    """Collapse trailing exponent-1 syllables.

    While the final pair is (r_k, 1) and a preceding pair exists, the braid
    destabilizes from r_k down to r_{k-1} strands and the dangling ascending
    run merges into the previous syllable:

        (..., (r_{k-1}, s_{k-1}), (r_k, 1))  ->  (..., (r_{k-1}, s_{k-1} + 1)).

    Identity when no reduction applies.
    """
    pairs = list(spec.pairs)
    while len(pairs) >= 2 and pairs[-1][1] == 1:
        pairs.pop()
        r, s = pairs[-1]
        pairs[-1] = (r, s + 1)
    return TLinkSpec(tuple(pairs))


def remove_trailing_twists(w: BraidWord, syllable_strands: int, count: int) -> BraidWord:
    """Delete a literal trailing syllable (sigma_1...sigma_{m-1})^count.

    Equivalent to appending the inverse syllable and freely reducing; the
    suffix must be present letter for letter.
    """
    if syllable_strands < 2 or count < 0:
        raise ValueError("need syllable_strands >= 2 and count >= 0")
    suffix = _run(syllable_strands) * count
    k = len(suffix)
    if k == 0:
        return w
    if w.letters[-k:] != suffix:
        raise ValueError(
            f"word does not end with (sigma_1..sigma_{syllable_strands - 1})^{count}"
        )
    return BraidWord(w.strands, w.letters[:-k])


# -- the T((r,s),...) expression grammar -------------------------------------


def render_tlink(spec: TLinkSpec) -> str:
    inner = ",".join(f"({r},{s})" for r, s in spec.pairs)
    return f"T({inner})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def byte_offset(self, pos: int | None = None) -> int:
        end = self.pos if pos is None else pos
        return len(self.text[:end].encode("utf-8"))

    def error(self, message: str, pos: int | None = None) -> TLinkParseError:
        return TLinkParseError(message, self.byte_offset(pos))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an unsigned integer")
        return int(self.text[start : self.pos]), start


def parse_tlink(text: str) -> TLinkSpec:
    """Parse `T((r1,s1),(r2,s2),...)`; errors carry byte offsets.

    Constraint violations (r-values not strictly increasing, zero s-values)
    are reported at the offending number.
    """
    sc = _Scanner(text)
    sc.skip_ws()
    if sc.peek() != "T":
        raise sc.error("expected 'T'")
    sc.pos += 1
    sc.expect("(")
    pairs: list[tuple[int, int]] = []
    positions: list[int] = []
    while True:
        sc.expect("(")
        r, r_pos = sc.integer()
        sc.expect(",")
        s, s_pos = sc.integer()
        sc.expect(")")
        if s < 1:
            raise sc.error("s-values must be at least 1", s_pos)
        pairs.append((r, s))
        positions.append(r_pos)
        nxt = sc.peek()
        if nxt == ",":
            sc.pos += 1
            continue
        break
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise sc.error("trailing input after T-link expression")
    if pairs[0][0] < 2:
        raise TLinkParseError("r-values must be at least 2", sc.byte_offset(positions[0]))
    for i in range(1, len(pairs)):
        if pairs[i][0] <= pairs[i - 1][0]:
            raise TLinkParseError(
                "r-values must be strictly increasing", sc.byte_offset(positions[i])
            )
    return TLinkSpec(tuple(pairs))
