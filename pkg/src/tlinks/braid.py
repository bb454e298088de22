"""Braid words and the elementary moves on their closures.

A braid word on n strands is an ordered sequence of nonzero letters e with
1 <= |e| <= n-1; positive e is the generator sigma_e, negative its inverse.
Strand positions are 1-based and letters act left to right; closures join the
bottom of each position to the top of the same position.  This one global
composition convention is shared by every module that consumes braid words.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple (images[i-1] = image of i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite in diagram order: apply self first, then other."""
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[other.images[j] - 1] for j in range(self.size)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = []
            j = start
            while not seen[j - 1]:
                seen[j - 1] = True
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))


class LetterStats(NamedTuple):
    positive: int
    negative: int
    exponent_sum: int


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on `strands` strands."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for pos, e in enumerate(self.letters):
            if e == 0 or abs(e) > self.strands - 1:
                raise ValueError(
                    f"letter {e} at index {pos} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def letter_stats(self) -> LetterStats:
        pos = sum(1 for e in self.letters if e > 0)
        neg = len(self.letters) - pos
        return LetterStats(pos, neg, sum(1 if e > 0 else -1 for e in self.letters))

    def permutation(self) -> Permutation:
        """Bottom-position labelling: images[j-1] = top strand arriving at slot j."""
        labels = list(range(1, self.strands + 1))
        for e in self.letters:
            i = abs(e)
            labels[i - 1], labels[i] = labels[i], labels[i - 1]
        return Permutation(tuple(labels))

    def component_count(self) -> int:
        """Number of link components of the closure."""
        return self.permutation().cycle_count()

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return self.concat(other)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def conjugated_by(self, g: "BraidWord") -> "BraidWord":
        """g^-1 * self * g; the closure's link type is unchanged."""
        if g.strands != self.strands:
            raise ValueError("strand counts differ")
        return g.inverse().concat(self).concat(g)

    def stabilized(self) -> "BraidWord":
        """Markov stabilization: same closure on one more strand."""
        return BraidWord(self.strands + 1, self.letters + (self.strands,))

    def destabilized(self) -> "BraidWord":
        """Markov destabilization.

        Requires sigma_{n-1}^{+-1} to occur exactly once; rotates the word
        cyclically (a conjugation, harmless to the closure) to bring that
        letter last, deletes it, and drops to n-1 strands.
        """
        top = self.strands - 1
        if top < 1:
            raise ValueError("cannot destabilize a 1-strand braid")
        hits = [i for i, e in enumerate(self.letters) if abs(e) == top]
        if len(hits) != 1:
            raise ValueError(
                f"sigma_{top} must occur exactly once, found {len(hits)} occurrences"
            )
        i = hits[0]
        rotated = self.letters[i + 1 :] + self.letters[:i]
        return BraidWord(self.strands - 1, rotated)

    def __str__(self) -> str:
        return braid_text(self)


def identity_braid(n: int) -> BraidWord:
    return BraidWord(n, ())


def torus_braid(p: int, q: int) -> BraidWord:
    """The standard braid (sigma_1...sigma_{q-1})^p of T(p,q) on q strands."""
    if q < 1 or p < 1:
        raise ValueError("torus parameters must be positive")
    run = tuple(range(1, q))
    return BraidWord(q, run * p)


def torus_component_count(p: int, q: int) -> int:
    return gcd(p, q)


def braid_text(w: BraidWord) -> str:
    """Wire format "n=K: e1,e2,..."."""
    if not w.letters:
        return f"n={w.strands}:"
    return f"n={w.strands}: " + ",".join(str(e) for e in w.letters)


def parse_braid_text(text: str) -> BraidWord:
    """Parse the "n=K: e1,e2,..." format; an empty letter list is allowed."""
    head, sep, tail = text.partition(":")
    head = head.strip()
    if not sep or not head.startswith("n="):
        raise ValueError(f"expected 'n=K: letters', got {text!r}")
    try:
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"bad strand count in {head!r}") from None
    tail = tail.strip()
    if not tail:
        return BraidWord(n, ())
    try:
        letters = tuple(int(part.strip()) for part in tail.split(","))
    except ValueError:
        raise ValueError(f"bad letter list in {tail!r}") from None
    return BraidWord(n, letters)


def concat_all(words: Iterable[BraidWord]) -> BraidWord:
    words = list(words)
    if not words:
        raise ValueError("nothing to concatenate")
    out = words[0]
    for w in words[1:]:
        out = out.concat(w)
    return out
