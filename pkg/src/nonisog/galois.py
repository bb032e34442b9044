"""Exact Galois group identification for squarefree cubics and quintics
over Q.

Cubics are classical: reducible / cyclic (square discriminant) / full
symmetric group.  Quintics are identified from the factorization pattern
of f over its own stem field (the orbit sizes of a point stabilizer),
refined by the discriminant-square test and, to separate the Frobenius
group of order 20 from S5, by whether the resolvent cubic of the quartic
stem factor acquires a root in the stem field.  Every step is exact; the
mod-p cycle-type scan is an advisory cross-check only and can never decide
a group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapabilityError, InternalInconsistencyError, InvalidInputError
from .factor import ModPPolynomial, factor_mod_p, factor_over_Q, is_squarefree
from .ints import is_square, primes_below
from .numberfield import NumberField, PolyOverK, poly_over_k_has_root, trager_factor
from .polys import Polynomial, discriminant, zz_primitive


class GaloisGroupId(enum.Enum):
    C3 = "C3"
    S3 = "S3"
    C5 = "C5"
    D5 = "D5"
    F20 = "F20"
    A5 = "A5"
    S5 = "S5"
    REDUCIBLE = "Reducible"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GroupProperties:
    order: int
    doubly_transitive: bool
    cyclic_of_order_n: bool
    has_cn_quotient: bool


_GROUP_TABLE: dict[GaloisGroupId, GroupProperties] = {
    GaloisGroupId.C3: GroupProperties(3, False, True, True),
    GaloisGroupId.S3: GroupProperties(6, True, False, False),
    GaloisGroupId.C5: GroupProperties(5, False, True, True),
    GaloisGroupId.D5: GroupProperties(10, False, False, False),
    GaloisGroupId.F20: GroupProperties(20, True, False, False),
    GaloisGroupId.A5: GroupProperties(60, True, False, False),
    GaloisGroupId.S5: GroupProperties(120, True, False, False),
}

# Cycle types as descending partitions of n; the advisory mod-p scan must
# stay inside the identified group's set.
GROUP_CYCLE_TYPES: dict[GaloisGroupId, frozenset[tuple[int, ...]]] = {
    GaloisGroupId.C3: frozenset({(1, 1, 1), (3,)}),
    GaloisGroupId.S3: frozenset({(1, 1, 1), (2, 1), (3,)}),
    GaloisGroupId.C5: frozenset({(1, 1, 1, 1, 1), (5,)}),
    GaloisGroupId.D5: frozenset({(1, 1, 1, 1, 1), (2, 2, 1), (5,)}),
    GaloisGroupId.F20: frozenset({(1, 1, 1, 1, 1), (2, 2, 1), (4, 1), (5,)}),
    GaloisGroupId.A5: frozenset({(1, 1, 1, 1, 1), (2, 2, 1), (3, 1, 1), (5,)}),
    GaloisGroupId.S5: frozenset(
        {(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)}
    ),
}


def group_properties(group: GaloisGroupId) -> GroupProperties:
    if group is GaloisGroupId.REDUCIBLE:
        raise InvalidInputError("a reducible polynomial has no transitive group to describe")
    return _GROUP_TABLE[group]


def _require_squarefree_degree(f: Polynomial, degree: int, who: str) -> None:
    if f.degree != degree:
        raise InvalidInputError(f"{who} needs degree {degree}, got {f.degree}")
    if not is_squarefree(f):
        raise InvalidInputError(f"{who} needs a squarefree polynomial")


@lru_cache(maxsize=None)
def galois_cubic(f: Polynomial) -> GaloisGroupId:
    """Reducible / C3 (square discriminant) / S3."""
    _require_squarefree_degree(f, 3, "galois_cubic")
    if not factor_over_Q(f).is_irreducible:
        return GaloisGroupId.REDUCIBLE
    return GaloisGroupId.C3 if is_square(discriminant(f)) else GaloisGroupId.S3


def resolvent_cubic(c3, c2, c1, c0):
    """Resolvent cubic of the monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0,
    over any coefficient arithmetic supporting + - * (its roots are the
    pair sums x1 x2 + x3 x4 etc.)."""
    return (
        -c2,
        c1 * c3 - 4 * c0,
        -(c1 * c1 + c0 * c3 * c3 - 4 * c0 * c2),
    )


@lru_cache(maxsize=None)
def galois_quintic(f: Polynomial) -> GaloisGroupId:
    """One of Reducible, C5, D5, F20, A5, S5, by stem-field factorization."""
    _require_squarefree_degree(f, 5, "galois_quintic")
    if not factor_over_Q(f).is_irreducible:
        return GaloisGroupId.REDUCIBLE
    monic = f.monic()
    field = NumberField(monic)
    factors = trager_factor(PolyOverK.from_rational(field, monic))
    pattern = tuple(sorted(g.degree for g, _ in factors))
    square_disc = is_square(discriminant(f))
    if pattern == (1, 1, 1, 1, 1):
        if not square_disc:
            raise InternalInconsistencyError("all-linear stem pattern with nonsquare discriminant")
        return GaloisGroupId.C5
    if pattern == (1, 2, 2):
        if not square_disc:
            raise InternalInconsistencyError("dihedral stem pattern with nonsquare discriminant")
        return GaloisGroupId.D5
    if pattern == (1, 4):
        if square_disc:
            return GaloisGroupId.A5
        quartic = next(g for g, _ in factors if g.degree == 4).monic()
        c0, c1, c2, c3 = quartic.coeffs[0], quartic.coeffs[1], quartic.coeffs[2], quartic.coeffs[3]
        r2, r1, r0 = resolvent_cubic(c3, c2, c1, c0)
        one = field.one()
        resolvent = PolyOverK(field, (r0, r1, r2, one))
        return GaloisGroupId.F20 if poly_over_k_has_root(resolvent) else GaloisGroupId.S5
    raise InternalInconsistencyError(f"impossible stem factor pattern {pattern}")


def galois_group(f: Polynomial) -> GaloisGroupId:
    """Dispatch on degree; only 3 and 5 are implemented."""
    if f.degree == 3:
        return galois_cubic(f)
    if f.degree == 5:
        return galois_quintic(f)
    raise CapabilityError(f"Galois identification is implemented for degrees 3 and 5, got {f.degree}")


def cycle_type_prefilter(f: Polynomial, prime_bound: int) -> set[tuple[int, ...]]:
    """Degree patterns of f mod p over odd primes p <= prime_bound with p
    coprime to lc(f)*disc(f).  Advisory only: a sample of Frobenius cycle
    types, never a certificate."""
    if f.degree < 1 or not is_squarefree(f):
        raise InvalidInputError("cycle_type_prefilter needs a squarefree polynomial")
    fz = zz_primitive(f.cleared()[0])
    disc_num = discriminant(Polynomial(fz)).numerator
    patterns: set[tuple[int, ...]] = set()
    for p in primes_below(prime_bound + 1):
        if p == 2 or fz[-1] % p == 0 or disc_num % p == 0:
            continue
        degs = []
        for g, mult in factor_mod_p(ModPPolynomial(p, tuple(fz))):
            degs.extend([g.degree] * mult)
        patterns.add(tuple(sorted(degs, reverse=True)))
    return patterns


def reducible_cubic_splitting_degree(f: Polynomial) -> int:
    """Degree of the splitting field of a reducible squarefree cubic:
    1 when it splits into linears, else 2 (never divisible by 3)."""
    _require_squarefree_degree(f, 3, "reducible_cubic_splitting_degree")
    factors = factor_over_Q(f)
    if factors.is_irreducible:
        raise InvalidInputError("the cubic is irreducible")
    quadratics = [g for g, _ in factors.factors if g.degree == 2]
    if not quadratics:
        return 1
    return 1 if is_square(discriminant(quadratics[0])) else 2
