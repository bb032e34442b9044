"""Stem fields K = Q[x]/(m) and factorization of polynomials over them.

Elements live in the power basis of the class of x, with exact rational
coordinates.  Factorization over K is Trager's method: push a polynomial
down to Q through the norm N(x) = Res_y(m(y), f(x - s*y)), factor the norm
over Q, and pull each rational factor back up with a gcd over K.  The norm
is evaluated pointwise and interpolated, which is legitimate because m is
monic (Res(m, g) is the product of g over the roots of m, whatever the
degree of g) and keeps all the work inside the univariate resultant engine.

Everything here is pure and immutable; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapabilityError, InternalInconsistencyError, InvalidInputError
from .factor import DEGREE_CAP, factor_over_Q, is_squarefree
from .polys import Polynomial, interpolate, poly_xgcd, resultant

NORM_DEGREE_CAP = DEGREE_CAP


@dataclass(frozen=True)
class NumberField:
    """K = Q[x]/(min_poly), min_poly monic irreducible (checked)."""

    min_poly: Polynomial

    def __post_init__(self):
        m = self.min_poly
        if m.degree < 1:
            raise InvalidInputError("a number field needs a minimal polynomial of degree >= 1")
        if m.lc != 1:
            raise InvalidInputError("the minimal polynomial must be monic")
        if m.degree > 1 and not factor_over_Q(m).is_irreducible:
            raise InvalidInputError(f"{m} is reducible over Q")

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def element(self, coeffs: Iterable[Fraction | int] | Polynomial) -> FieldElement:
        poly = coeffs if isinstance(coeffs, Polynomial) else Polynomial(coeffs)
        return FieldElement(self, (poly % self.min_poly).coeffs)

    def zero(self) -> FieldElement:
        return FieldElement(self, ())

    def one(self) -> FieldElement:
        return self.element((1,))

    def generator(self) -> FieldElement:
        """The class of x (a root of min_poly)."""
        return self.element((0, 1))

    def __str__(self) -> str:
        return f"Q[x]/({self.min_poly})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a stem field, as a polynomial of degree < [K:Q] in the
    generator."""

    field: NumberField
    coeffs: tuple[Fraction, ...]

    @property
    def poly(self) -> Polynomial:
        return Polynomial(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_same_field(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise InvalidInputError("elements belong to different fields")

    def _coerce(self, v) -> FieldElement | None:
        if isinstance(v, FieldElement):
            self._require_same_field(v)
            return v
        if isinstance(v, (int, Fraction)):
            return self.field.element((v,))
        if isinstance(v, Polynomial):
            return self.field.element(v)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.element(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return self.field.element(-self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.element(self.poly - other.poly)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.element(self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """1/self, by the extended euclidean algorithm against min_poly."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in a number field")
        d, u, _ = poly_xgcd(self.poly, self.field.min_poly)
        if d.degree != 0:
            raise InternalInconsistencyError("nonunit gcd against an irreducible minimal polynomial")
        return self.field.element(u)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        return str(self.poly).replace("x", "t")


@dataclass(frozen=True)
class PolyOverK:
    """Dense polynomial with coefficients in a stem field K."""

    field: NumberField
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, field: NumberField, coeffs: Sequence) -> PolyOverK:
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                out.append(c)
            else:
                out.append(field.element(c if isinstance(c, Polynomial) else Polynomial((c,))))
        return cls(field, tuple(out))

    @classmethod
    def from_rational(cls, field: NumberField, f: Polynomial) -> PolyOverK:
        return cls(field, tuple(field.element((c,)) for c in f.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def __add__(self, other: PolyOverK) -> PolyOverK:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyOverK(self.field, tuple(out))

    def __neg__(self) -> PolyOverK:
        return PolyOverK(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: PolyOverK) -> PolyOverK:
        return self + (-other)

    def __mul__(self, other: PolyOverK) -> PolyOverK:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyOverK(self.field, ())
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return PolyOverK(self.field, tuple(out))

    def scale(self, c: FieldElement) -> PolyOverK:
        return PolyOverK(self.field, tuple(c * a for a in self.coeffs))

    def monic(self) -> PolyOverK:
        if self.is_zero:
            raise InvalidInputError("the zero polynomial has no monic associate")
        return self.scale(self.lc.inverse())

    def __divmod__(self, other: PolyOverK) -> tuple[PolyOverK, PolyOverK]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero over K")
        field = self.field
        inv = other.lc.inverse()
        rem = list(self.coeffs)
        dd = other.degree
        quot = [field.zero()] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c.is_zero:
                q = c * inv
                quot[i - dd] = q
                for j, oc in enumerate(other.coeffs):
                    rem[i - dd + j] = rem[i - dd + j] - q * oc
        return PolyOverK(field, tuple(quot)), PolyOverK(field, tuple(rem))

    def __mod__(self, other: PolyOverK) -> PolyOverK:
        return divmod(self, other)[1]

    def __floordiv__(self, other: PolyOverK) -> PolyOverK:
        return divmod(self, other)[0]

    def derivative(self) -> PolyOverK:
        return PolyOverK(self.field, tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift_by_generator(self, s: int) -> PolyOverK:
        """self(x + s*theta), theta the field generator."""
        field = self.field
        lin = PolyOverK.of(field, (s * field.generator(), field.one()))
        acc = PolyOverK(field, ())
        for c in reversed(self.coeffs):
            acc = acc * lin + PolyOverK(field, (c,))
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = f"({c})" if c.poly.degree > 0 or k == 0 else ("" if c.poly == Polynomial((1,)) else f"({c})")
            parts.append((body + ("*" if body and var else "") + var) or "1")
        return " + ".join(parts)


def poly_over_k_gcd(a: PolyOverK, b: PolyOverK) -> PolyOverK:
    """Monic gcd over K, by the euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def _norm_from_shift(f: PolyOverK, s: int) -> Polynomial:
    """Res_y(m(y), fhat(x - s*y)) by evaluation and interpolation; with f
    monic this is monic of degree deg(m) * deg(f)."""
    field = f.field
    m = field.min_poly
    deg_n = field.degree * f.degree
    coeff_polys = [c.poly for c in f.coeffs]
    points: list[tuple[int, Fraction]] = []
    x0 = 0
    while len(points) < deg_n + 1:
        # G(y) = sum_i c_i(y) * (x0 - s*y)**i
        base = Polynomial((x0, -s))
        power = Polynomial((1,))
        acc = Polynomial()
        for i, cp in enumerate(coeff_polys):
            if i:
                power = power * base
            if not cp.is_zero:
                acc = acc + cp * power
        points.append((x0, resultant(m, acc)))
        x0 = -x0 + (1 if x0 <= 0 else 0)
    norm = interpolate(points)
    if norm.degree != deg_n:
        raise InternalInconsistencyError("norm degree mismatch")
    return norm


@lru_cache(maxsize=None)
def _trager_squarefree(f: PolyOverK) -> tuple[PolyOverK, ...]:
    """Monic irreducible factors of a squarefree monic f over K."""
    field = f.field
    if f.degree == 1:
        return (f,)
    if field.degree * f.degree > NORM_DEGREE_CAP:
        raise CapabilityError(
            f"norm degree {field.degree * f.degree} exceeds the cap {NORM_DEGREE_CAP}"
        )
    s = 0
    while True:
        norm = _norm_from_shift(f, s)
        if is_squarefree(norm):
            break
        s = -s + (1 if s <= 0 else 0)
    factors = []
    for q, _ in factor_over_Q(norm).factors:
        g = poly_over_k_gcd(f, PolyOverK.from_rational(field, q).shift_by_generator(s))
        if g.degree >= 1:
            factors.append(g)
    if sum(g.degree for g in factors) != f.degree:
        raise InternalInconsistencyError("Trager factors do not account for the full degree")
    return tuple(factors)


def trager_factor(f: PolyOverK) -> list[tuple[PolyOverK, int]]:
    """Complete factorization over K into monic irreducible factors with
    multiplicities (the unit lc(f) is dropped)."""
    if f.is_zero:
        raise InvalidInputError("cannot factor the zero polynomial over K")
    if f.degree == 0:
        return []
    work = f.monic()
    d = poly_over_k_gcd(work, work.derivative())
    squarefree_part = work // d if d.degree >= 1 else work
    out = []
    for g in _trager_squarefree(squarefree_part):
        mult = 0
        while True:
            q, r = divmod(work, g)
            if not r.is_zero:
                break
            work = q
            mult += 1
        out.append((g, mult))
    if work.degree != 0:
        raise InternalInconsistencyError("leftover degree after multiplicity extraction")
    out.sort(key=lambda gm: (gm[0].degree, tuple(c.coeffs for c in gm[0].coeffs)))
    return out


@lru_cache(maxsize=None)
def stem_factor_pattern(f: Polynomial) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of f over its own stem
    field Q[x]/(f) — the orbit sizes of a point stabilizer of the Galois
    group."""
    if f.degree < 1 or not is_squarefree(f):
        raise InvalidInputError("stem_factor_pattern needs a squarefree polynomial")
    if not factor_over_Q(f).is_irreducible:
        raise InvalidInputError("stem_factor_pattern needs an irreducible polynomial")
    field = NumberField(f.monic())
    facs = trager_factor(PolyOverK.from_rational(field, f.monic()))
    pattern = tuple(sorted(g.degree for g, _ in facs))
    if sum(pattern) != f.degree:
        raise InternalInconsistencyError("stem factor pattern does not sum to the degree")
    return pattern


def poly_over_k_has_root(f: PolyOverK) -> bool:
    """Whether f has a linear factor over its field of coefficients."""
    if f.is_zero:
        raise InvalidInputError("the zero polynomial has every root")
    if f.degree == 0:
        return False
    return any(g.degree == 1 for g, _ in trager_factor(f))


@lru_cache(maxsize=None)
def has_root_in(field: NumberField, f: Polynomial) -> bool:
    """Whether the rational polynomial f has a root in the given field."""
    if f.is_zero:
        raise InvalidInputError("the zero polynomial has every root")
    return poly_over_k_has_root(PolyOverK.from_rational(field, f))


@lru_cache(maxsize=None)
def fields_isomorphic(k1: NumberField, k2: NumberField) -> bool:
    """Field isomorphism test: equal degrees and min_poly(k1) has a root in
    k2."""
    if k1.degree != k2.degree:
        return False
    return has_root_in(k2, k1.min_poly)
