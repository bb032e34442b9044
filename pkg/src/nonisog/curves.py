"""Elliptic curves y^2 = cubic in short Weierstrass form, exact
j-invariants, and genus bookkeeping for y^2 = f(x).

The only arithmetic on curves this library needs is the j-invariant (an
isomorphism invariant over the algebraic closure) and membership in the
three-element set of rational j-invariants whose curves have endomorphism
algebra Q(sqrt(-3)) — the CM curves isogenous to y^2 = x^3 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .polys import Polynomial

#: j-invariants of the rational elliptic curves with CM by Q(sqrt(-3)):
#: 0, 2^4*3^3*5^3 and -2^15*3*5^3.
CM_J_INVARIANTS = (Fraction(0), Fraction(54000), Fraction(-12288000))


@dataclass(frozen=True)
class ShortWeierstrass:
    """y^2 = x^3 + a*x + b, nonsingular."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if 4 * self.a**3 + 27 * self.b**2 == 0:
            raise InvalidInputError("singular cubic: 4a^3 + 27b^2 = 0")

    @property
    def j(self) -> Fraction:
        a3 = 4 * self.a**3
        return 6912 * self.a**3 / (a3 + 27 * self.b**2)

    def __str__(self) -> str:
        return f"y^2 = {Polynomial((self.b, self.a, 0, 1))}"


def short_weierstrass(f: Polynomial) -> ShortWeierstrass:
    """Short Weierstrass model of y^2 = f(x) for a squarefree cubic f.

    A leading coefficient c is absorbed by x -> x/c, y -> y/c (multiply
    through by c^2), then the square term is removed by the usual shift;
    both moves leave the curve class over the closure unchanged.
    """
    if f.degree != 3:
        raise InvalidInputError(f"a cubic is required, got degree {f.degree}")
    c = f.lc
    # c^2 * f(x/c) = x^3 + a2 x^2 + a1 c x + a0 c^2 for f = c x^3 + a2' ...
    monic = Polynomial((f[0] * c * c, f[1] * c, f[2], Fraction(1)))
    depressed = monic.shift(-monic[2] / 3)
    if depressed[2] != 0:
        raise InvalidInputError("depression failed")  # pragma: no cover
    try:
        return ShortWeierstrass(depressed[1], depressed[0])
    except InvalidInputError:
        raise InvalidInputError("the cubic has a repeated root") from None


def j_invariant(f: Polynomial) -> Fraction:
    """j-invariant of the elliptic curve y^2 = f(x), f a squarefree cubic."""
    return short_weierstrass(f).j


def in_cm_j_set(j: Fraction | int) -> bool:
    """Whether j belongs to {0, 54000, -12288000}."""
    return Fraction(j) in CM_J_INVARIANTS


def genus(n: int) -> int:
    """Genus of y^2 = f(x) with deg f = n odd: (n-1)/2."""
    if n < 3 or n % 2 == 0:
        raise InvalidInputError(f"an odd n >= 3 is required, got {n}")
    return (n - 1) // 2
