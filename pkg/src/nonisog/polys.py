"""Dense univariate polynomials over the rationals, with exact resultants.

Coefficients are stored in ascending order (index = degree of the monomial)
as ``fractions.Fraction`` values; the leading coefficient is never zero.
Resultants go through the subresultant polynomial remainder sequence over
the integers, which keeps intermediate coefficients polynomially bounded —
necessary for the degree-25 norms produced by factoring over quintic fields.

No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError

Coeff = Fraction | int


def _fr(v: Coeff) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Polynomial:
    """An immutable dense polynomial over Q."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutability
        raise AttributeError("Polynomial is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, c: Coeff) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    # -- basic structure -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (of the zero polynomial: 0)."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self._coeffs))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return -(self - other)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError("polynomial exponent must be a nonnegative integer")
        result = Polynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dlc = other.lc
        dd = other.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                q = c / dlc
                quot[i - dd] = q
                for j, oc in enumerate(other._coeffs):
                    rem[i - dd + j] -= q * oc
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    @staticmethod
    def _coerce(v) -> Polynomial:
        if isinstance(v, Polynomial):
            return v
        if isinstance(v, (int, Fraction)):
            return Polynomial((v,))
        return NotImplemented

    # -- calculus and substitution -------------------------------------------

    def __call__(self, x: Coeff) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(i * c for i, c in enumerate(self._coeffs) if i))

    def compose(self, inner: Polynomial) -> Polynomial:
        """self(inner(x)), by Horner over Q[x]."""
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial((c,))
        return acc

    def shift(self, c: Coeff) -> Polynomial:
        """self(x + c)."""
        return self.compose(Polynomial((c, 1)))

    def monic(self) -> Polynomial:
        if self.is_zero:
            raise InvalidInputError("the zero polynomial has no monic associate")
        if self.lc == 1:
            return self
        inv = 1 / self.lc
        return Polynomial(tuple(c * inv for c in self._coeffs))

    # -- integer normal form ---------------------------------------------------

    def cleared(self) -> tuple[list[int], int]:
        """(integer coefficient list, d) with d > 0 and d*self integral."""
        d = 1
        for c in self._coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return [int(c * d) for c in self._coeffs], d

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


X = Polynomial.x()


def poly_from_ints(coeffs: Sequence[int]) -> Polynomial:
    return Polynomial(coeffs)


# -- integer coefficient utilities (used here and by the factorization engine) --


def zz_content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def zz_primitive(cs: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return []
    g = zz_content(cs)
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def _zz_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """prem(a, b) = lc(b)**(deg a - deg b + 1) * a mod b, over Z."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    e = len(a) - len(b) + 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        a = [c * lb for c in a]
        shift = len(a) - 1 - db
        for j in range(len(b)):
            a[shift + j] -= la * b[j]
        while a and a[-1] == 0:
            a.pop()
        e -= 1
    if e > 0:
        f = lb**e
        a = [c * f for c in a]
    return a


def _zz_resultant(a: list[int], b: list[int]) -> int:
    """Resultant of two nonzero integer polynomials (subresultant PRS)."""
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if (da & 1) and (db & 1):
            sign = -sign
    if db == 0:
        return sign * b[0] ** da
    ca, cb = abs(zz_content(a)), abs(zz_content(b))
    t = sign * ca**db * cb**da
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            t = -t
        r = _zz_pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = [c // denom for c in r]
        g = a[-1]
        h = h if delta == 0 else g**delta // h ** (delta - 1)
        if len(b) - 1 == 0:
            da = len(a) - 1
            return t * b[0] ** da // h ** (da - 1)


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Res(f, g), via a subresultant remainder sequence over Z."""
    if f.is_zero and g.is_zero:
        raise InvalidInputError("the resultant of two zero polynomials is undefined")
    if f.is_zero or g.is_zero:
        if f.degree <= 0 and g.degree <= 0:
            return Fraction(1)
        return Fraction(0)
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    fz, df = f.cleared()
    gz, dg = g.cleared()
    r = _zz_resultant(fz, gz)
    return Fraction(r, df**g.degree * dg**f.degree)


def discriminant(f: Polynomial) -> Fraction:
    """disc(f) = (-1)**(n(n-1)/2) * Res(f, f') / lc(f); zero iff f has a
    repeated root."""
    n = f.degree
    if n < 2:
        raise InvalidInputError("discriminant requires degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over Q (primitive remainder sequence over Z)."""
    if f.is_zero and g.is_zero:
        return Polynomial()
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    a = zz_primitive(f.cleared()[0])
    b = zz_primitive(g.cleared()[0])
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _zz_pseudo_rem(a, b)
        if not r:
            return Polynomial(b).monic()
        if len(r) == 1:
            return Polynomial((1,))
        a, b = b, zz_primitive(r)


def poly_xgcd(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(d, u, v) with d = monic gcd(f, g) and u*f + v*g = d."""
    r0, r1 = f, g
    s0, s1 = Polynomial((1,)), Polynomial()
    t0, t1 = Polynomial(), Polynomial((1,))
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return Polynomial(), s0, t0
    inv = 1 / r0.lc
    return r0.monic(), s0 * inv, t0 * inv


def interpolate(points: Sequence[tuple[Coeff, Coeff]]) -> Polynomial:
    """The unique polynomial of degree < len(points) through the points
    (Newton's divided differences, exact)."""
    xs = [_fr(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InvalidInputError("interpolation nodes must be distinct")
    coeffs = [_fr(y) for _, y in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    result = Polynomial()
    for i in range(len(points) - 1, -1, -1):
        result = result * Polynomial((-xs[i], 1)) + Polynomial((coeffs[i],))
    return result
