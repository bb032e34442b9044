"""Independent oracles used by the test suite.

Each function here recomputes something the library computes, by a
different algorithm (determinants instead of remainder sequences, brute
force enumeration instead of Zassenhaus, full subspace enumeration instead
of vector spinning, permutation group closure instead of static tables).
They must stay independent of the code paths they check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from nonisog.gf2 import Permutation, generated_group
from nonisog.polys import Polynomial


def sylvester_matrix(f: Polynomial, g: Polynomial) -> list[list[Fraction]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - i - len(fc)))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - i - len(gc)))
    return rows


def bareiss_determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Fraction-free Gaussian elimination (Bareiss) on an exact matrix."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Res(f, g) as the Sylvester determinant (empty matrix: 1)."""
    if f.degree == 0 and g.degree == 0:
        return Fraction(1)
    return bareiss_determinant(sylvester_matrix(f, g))


# -- brute-force factor search (monic integer polynomials) -------------------


def _l2_ceiling(f: Polynomial) -> int:
    s = sum(int(c) ** 2 for c in f.coeffs)
    r = math.isqrt(s)
    return r if r * r == s else r + 1


def _monic_integer_divisors(f: Polynomial, degree: int):
    """Monic integer candidates of the given degree with coefficients inside
    the per-factor Landau-Mignotte box, that divide f exactly."""
    bound = 2**degree * _l2_ceiling(f)
    ranges = [range(-bound, bound + 1)] * degree
    for tail in itertools.product(*ranges):
        cand = Polynomial(tuple(tail) + (1,))
        q, r = divmod(f, cand)
        if r.is_zero and all(c.denominator == 1 for c in q.coeffs):
            yield cand


def brute_force_monic_factors(f: Polynomial) -> list[Polynomial]:
    """Irreducible monic factorization of a monic integer polynomial by
    exhaustive search over small-degree divisors (Kronecker-style box)."""
    assert f.lc == 1
    factors: list[Polynomial] = []
    work = f
    while work.degree > 0:
        found = None
        for d in range(1, work.degree // 2 + 1):
            for cand in _monic_integer_divisors(work, d):
                found = cand
                break
            if found is not None:
                break
        if found is None:
            factors.append(work)
            break
        factors.append(found)
        work = work // found
    factors.sort(key=lambda p: (p.degree, p.coeffs))
    return factors


# -- subspace enumeration over F2 ---------------------------------------------


def all_nontrivial_proper_subspaces(dim: int):
    """Every subspace of F2^dim with 0 < dim(S) < dim, as a tuple of
    echelon basis vectors (pivot-position enumeration)."""
    for k in range(1, dim):
        for pivots in itertools.combinations(range(dim), k):
            free_positions = []
            for row, pivot in enumerate(pivots):
                cols = [c for c in range(pivot + 1, dim) if c not in pivots]
                free_positions.append(cols)
            choices = [itertools.product([0, 1], repeat=len(cols)) for cols in free_positions]
            for assignment in itertools.product(*choices):
                basis = []
                for row, pivot in enumerate(pivots):
                    v = 1 << pivot
                    for bit, col in zip(assignment[row], free_positions[row]):
                        if bit:
                            v |= 1 << col
                    basis.append(v)
                yield tuple(basis)


def subspace_invariant(basis: tuple[int, ...], matrices) -> bool:
    span = {0}
    for b in basis:
        span |= {v ^ b for v in span}
    return all(m.apply(b) in span for m in matrices for b in basis)


# -- permutation-group-derived facts ------------------------------------------


def group_facts(gens: list[Permutation], n: int) -> dict:
    """order / double transitivity / cyclicity / existence of a cyclic
    order-n quotient, all from explicit enumeration."""
    group = generated_group(gens)
    order = len(group)
    pairs = {(g(1), g(2)) for g in group}
    doubly_transitive = len(pairs) == n * (n - 1)
    cyclic = any(_perm_order(g) == order for g in group)
    commutators = {g * h * g.inverse() * h.inverse() for g in group for h in group}
    derived = generated_group(list(commutators)) if commutators else set()
    abelianization = order // len(derived)
    return {
        "order": order,
        "doubly_transitive": doubly_transitive,
        "cyclic_of_order_n": cyclic and order == n,
        "has_cn_quotient": abelianization % n == 0,
        "cycle_types": {g.cycle_type() for g in group},
    }


def _perm_order(p: Permutation) -> int:
    k = 1
    q = p
    while not q.is_identity:
        q = q * p
        k += 1
    return k
