"""Exact one-variable Laurent polynomials over the integers.

Coefficients are arbitrary-precision Python ints and the representation is a
sparse map from exponent to nonzero coefficient, so polynomial equality is
exact and cheap.  This is the coefficient ring for Burau matrices and
Kauffman bracket sums; determinants of matrices over this ring are computed
fraction-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial sum(c_k * t^k) with integer coefficients.

    Immutable by convention: no method mutates an existing instance.
    The zero polynomial is the empty map.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def t(cls, exp: int = 1) -> "LaurentPoly":
        return cls({exp: 1})

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self._coeffs)

    def evaluate(self, x: int) -> Fraction:
        """Exact value at an integer point (Fraction because of t^-k terms)."""
        if x == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += Fraction(c) * (Fraction(x) ** e)
        return total

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def scaled(self, factor: int) -> "LaurentPoly":
        return LaurentPoly({e: c * factor for e, c in self._coeffs.items()})

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raises ValueError if not divisible."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        shift = self.min_exp - divisor.min_exp
        rem = {e - self.min_exp: c for e, c in self._coeffs.items()}
        den = {e - divisor.min_exp: c for e, c in divisor._coeffs.items()}
        dmax = max(den)
        dlead = den[dmax]
        quot: dict[int, int] = {}
        while rem:
            rmax = max(rem)
            if rmax < dmax or rem[rmax] % dlead != 0:
                raise ValueError("polynomial division is not exact")
            q = rem[rmax] // dlead
            pos = rmax - dmax
            quot[pos] = q
            for e, c in den.items():
                s = rem.get(e + pos, 0) - q * c
                if s:
                    rem[e + pos] = s
                else:
                    rem.pop(e + pos, None)
        return LaurentPoly({e + shift: c for e, c in quot.items()})

    def unit_normalized(self) -> "LaurentPoly":
        """Canonical representative modulo units +-t^k.

        Shifts the lowest exponent to 0, then flips the overall sign so the
        lowest-degree coefficient is positive.  Idempotent; rejects zero.
        """
        if self.is_zero:
            raise ValueError("the zero polynomial has no unit normalization")
        m = self.min_exp
        sign = 1 if self._coeffs[m] > 0 else -1
        return LaurentPoly({e - m: sign * c for e, c in self._coeffs.items()})

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return poly_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))!r})"


def poly_text(p: LaurentPoly, var: str = "t", quarter_exponents: bool = False) -> str:
    """Render as "c_k*t^k + ..." with terms in ascending exponent order.

    With quarter_exponents=True the stored exponent k denotes t^(k/4); the
    fraction is reduced and printed as t^(k/4), t^(k/2) or an integer power.
    """
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for e, c in p.terms():
        if quarter_exponents:
            num, den = e, 4
            while num % 2 == 0 and den > 1:
                num //= 2
                den //= 2
            if den == 1:
                mon = _monomial(var, num)
            else:
                mon = f"{var}^({num}/{den})"
        else:
            mon = _monomial(var, e)
        if mon is None:
            term = str(abs(c))
        elif abs(c) == 1:
            term = mon
        else:
            term = f"{abs(c)}*{mon}"
        if not pieces:
            pieces.append(term if c > 0 else "-" + term)
        else:
            pieces.append(("+ " if c > 0 else "- ") + term)
    return " ".join(pieces)


def _monomial(var: str, e: int) -> str | None:
    if e == 0:
        return None
    if e == 1:
        return var
    return f"{var}^{e}"


@dataclass(frozen=True)
class PolyMatrix:
    """A square matrix over LaurentPoly."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[LaurentPoly]]) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        one = LaurentPoly.one()
        zero = LaurentPoly.zero()
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(tuple(rows))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        return PolyMatrix(
            tuple(
                tuple(self.entries[i][j] - other.entries[i][j] for j in range(n))
                for i in range(n)
            )
        )


def determinant(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All intermediate divisions are exact over the Laurent ring, so the result
    carries no rounding or denominator bookkeeping.
    """
    n = m.size
    if n == 0:
        return LaurentPoly.one()
    a = [list(row) for row in m.entries]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if pivot_row is None:
                return LaurentPoly.zero()
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.divide_exact(prev)
            a[i][k] = LaurentPoly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return det.scaled(sign)
