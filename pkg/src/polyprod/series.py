"""Exact rational power series in one variable over Z.

Polynomials are plain coefficient lists (index = exponent).  A RationalSeries
is a reduced fraction num/den of integer polynomials with den(0) > 0; equality
is exact cross-multiplication, expansion is exact integer long division
(requires den(0) = 1, which every series built by this package satisfies).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import SeriesError

DEFAULT_TRUNCATION = 32


# -- integer polynomial helpers ------------------------------------------------

def poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                      for i in range(n)])


def poly_neg(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in a)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly_trim(out)


def poly_pow(a: Sequence[int], k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_substitute_power(a: Sequence[int], d: int) -> tuple[int, ...]:
    """p(t) -> p(t^d)."""
    if d < 1:
        raise SeriesError("substitution power must be >= 1")
    out = [0] * (len(a) * d)
    for i, x in enumerate(a):
        if x:
            out[i * d] = x
    return poly_trim(out)


def poly_divmod_exact(num: Sequence[int], den: Sequence[int]):
    """(quotient, remainder) of integer polynomial division; needs den[0] = +-1.

    Division runs from the constant term upward, which is the right direction
    for series denominators like (1 - t^d)^k.
    """
    den = poly_trim(den)
    if not den or abs(den[0]) != 1:
        raise SeriesError("exact division requires a unit constant term")
    rem = list(num)
    if len(rem) < len(den):
        rem += [0] * (len(den) - len(rem))
    quot = [0] * max(len(rem) - len(den) + 1, 1)
    for i in range(len(rem) - len(den) + 1):
        q = rem[i] * den[0]          # den[0] in {1, -1}
        quot[i] = q
        if q:
            for j, y in enumerate(den):
                rem[i + j] -= q * y
    return poly_trim(quot), poly_trim(rem)


def geometric_denominator(d: int, k: int) -> tuple[int, ...]:
    """(1 - t^d)^k as a coefficient tuple."""
    base = [1] + [0] * (d - 1) + [-1]
    return poly_pow(base, k)


def _content(p: Sequence[int]) -> int:
    g = 0
    for x in p:
        g = gcd(g, abs(x))
    return g


# -- rational series -----------------------------------------------------------

@dataclass(frozen=True)
class RationalSeries:
    """num/den with den(0) > 0, reduced by integer content.

    Use RationalSeries.make (or the module helpers) rather than the raw
    constructor so normalization always runs.
    """

    num: tuple[int, ...]
    den: tuple[int, ...]
    trunc: int = DEFAULT_TRUNCATION

    @classmethod
    def make(cls, num: Sequence[int], den: Sequence[int] = (1,),
             trunc: int = DEFAULT_TRUNCATION) -> "RationalSeries":
        num = poly_trim(num)
        den = poly_trim(den)
        if not den:
            raise SeriesError("zero denominator")
        if den[0] == 0:
            raise SeriesError("denominator must have a nonzero constant term")
        if not num:
            return cls((), (1,), trunc)
        g = gcd(_content(num), _content(den))
        if g > 1:
            num = tuple(x // g for x in num)
            den = tuple(x // g for x in den)
        if den[0] < 0:
            num = poly_neg(num)
            den = poly_neg(den)
        return cls(num, den, trunc)

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int],
                        trunc: int = DEFAULT_TRUNCATION) -> "RationalSeries":
        return cls.make(coeffs, (1,), trunc)

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls.make(())

    @classmethod
    def one(cls) -> "RationalSeries":
        return cls.make((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "RationalSeries":
        return cls.make([0] * degree + [coeff])

    # arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries.make(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
            max(self.trunc, other.trunc))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + RationalSeries.make(poly_neg(other.num), other.den, other.trunc)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries.make(
            poly_mul(self.num, other.num), poly_mul(self.den, other.den),
            max(self.trunc, other.trunc))

    def __pow__(self, k: int) -> "RationalSeries":
        if k < 0:
            raise SeriesError("negative powers are not supported")
        out = RationalSeries.make((1,), (1,), self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return poly_mul(self.num, other.den) == poly_mul(other.num, self.den)

    # cross-multiplied equality has no cheap consistent hash; keep unhashable
    __hash__ = None

    # queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def constant_term(self) -> int:
        if not self.num:
            return 0
        if abs(self.den[0]) != 1:
            raise SeriesError("constant term not integral")
        return self.num[0] * self.den[0]

    def is_polynomial(self) -> bool:
        if not self.num:
            return True
        if abs(self.den[0]) != 1:
            return False
        _, rem = poly_divmod_exact(self.num, self.den)
        return not rem

    def as_polynomial(self) -> tuple[int, ...]:
        quot, rem = poly_divmod_exact(self.num, self.den)
        if rem:
            raise SeriesError("series is not a polynomial")
        return quot

    def expansion(self, order: int | None = None) -> tuple[int, ...]:
        """Coefficients through degree `order` (inclusive), exact integers."""
        if order is None:
            order = self.trunc
        if order < 0:
            raise SeriesError("expansion order must be >= 0")
        if not self.num:
            return (0,) * (order + 1)
        if abs(self.den[0]) != 1:
            raise SeriesError("expansion requires a unit constant term")
        out = []
        rem = list(self.num[:order + 1]) + [0] * max(0, order + 1 - len(self.num))
        den = self.den
        for i in range(order + 1):
            c = rem[i] * den[0]
            out.append(c)
            if c:
                for j in range(1, min(len(den), order + 1 - i)):
                    rem[i + j] -= c * den[j]
        return tuple(out)

    def coefficient(self, degree: int) -> int:
        return self.expansion(degree)[degree]

    def with_truncation(self, trunc: int) -> "RationalSeries":
        return RationalSeries(self.num, self.den, trunc)

    def __str__(self) -> str:
        if self.den == (1,):
            return _poly_str(self.num)
        return f"({_poly_str(self.num)}) / ({_poly_str(self.den)})"


def _poly_str(p: Sequence[int]) -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "t" if i == 1 else f"t^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
    out = " + ".join(terms)
    return out.replace("+ -", "- ")
