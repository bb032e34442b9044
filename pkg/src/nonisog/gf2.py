"""The (n-1)-dimensional F2 heart of a permutation module, and its
simplicity analysis.

For an odd n, the space of F2-valued functions on n points splits as
constants + heart (the sum-zero functions).  A permutation group acting on
the points acts on the heart; this is exactly the 2-torsion of the
jacobian of y^2 = f(x) when the points are the roots of f.  The module is
simple iff spinning every nonzero vector under the generators fills the
space (over F2 every nonzero submodule contains a nonzero vector, so the
cyclic test is complete), and the endomorphism algebra is the solution
space of the commutant system.

Vectors are ints used as bit masks; matrices are tuples of row masks acting
on row vectors from the right.  Permutations compose left-to-right:
(p * q)(i) = q(p(i)), which makes the heart representation a homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapabilityError, InternalInconsistencyError, InvalidInputError
from .galois import GaloisGroupId
from .ints import is_prime

ANALYZE_DIM_CAP = 24


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] = image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidInputError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            if any(not 1 <= v <= n for v in cycle):
                raise InvalidInputError(f"cycle entry out of range 1..{n}: {cycle}")
            for i, v in enumerate(cycle):
                images[v - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        if other.size != self.size:
            raise InvalidInputError("permutation sizes differ")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> Permutation:
        out = [0] * self.size
        for i, v in enumerate(self.images):
            out[v - 1] = i + 1
        return Permutation(tuple(out))

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.size
        lengths = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            length = 0
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                i = self(i)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __str__(self) -> str:
        parts = []
        seen = [False] * self.size
        for start in range(1, self.size + 1):
            if seen[start - 1] or self(start) == start:
                seen[start - 1] = True
                continue
            cycle = [start]
            seen[start - 1] = True
            i = self(start)
            while i != start:
                cycle.append(i)
                seen[i - 1] = True
                i = self(i)
            parts.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(parts) or "()"


def generated_group(gens: Sequence[Permutation]) -> set[Permutation]:
    """Closure of the generators (breadth-first multiplication)."""
    if not gens:
        raise InvalidInputError("no generators")
    n = gens[0].size
    group = {Permutation.identity(n)}
    frontier = list(group)
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in group:
                    group.add(h)
                    new.append(h)
        frontier = new
    return group


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over F2; rows[i] is a bit mask of width n_cols.  Acts on row
    vectors: apply(v) = xor of the rows selected by the bits of v."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n_rows or any(r >> self.n_cols for r in self.rows):
            raise InvalidInputError("matrix storage does not match the stated dimensions")

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def apply(self, v: int) -> int:
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= self.rows[i]
            v >>= 1
            i += 1
        return out

    def __mul__(self, other: BitMatrix) -> BitMatrix:
        if self.n_cols != other.n_rows:
            raise InvalidInputError("matrix shapes do not compose")
        return BitMatrix(self.n_rows, other.n_cols, tuple(other.apply(r) for r in self.rows))

    def rank(self) -> int:
        basis: list[int] = []
        for r in self.rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
                basis.sort(reverse=True)
        return len(basis)

    @property
    def is_invertible(self) -> bool:
        return self.n_rows == self.n_cols and self.rank() == self.n_rows


@dataclass(frozen=True)
class HeartModule:
    """Generator matrices of a permutation action restricted to the
    sum-zero subspace, in the basis v_i = e_i + e_n (i = 1..n-1)."""

    n: int
    generators: tuple[BitMatrix, ...]

    @property
    def dim(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class ModuleReport:
    simple: bool
    endomorphism_dim: int
    absolutely_simple: bool


def permutation_heart_matrix(sigma: Permutation) -> BitMatrix:
    """Restriction of e_i -> e_sigma(i) to the heart, basis v_i = e_i + e_n."""
    n = sigma.size
    dim = n - 1
    rows = []
    sn = sigma(n)
    for i in range(1, n):
        si = sigma(i)
        if si == n:
            row = 1 << (sn - 1)  # e_n + e_sn = v_sn
        elif sn == n:
            row = 1 << (si - 1)
        else:
            row = (1 << (si - 1)) ^ (1 << (sn - 1))
        rows.append(row)
    return BitMatrix(dim, dim, tuple(rows))


def heart_module(n: int, gens: Sequence[Permutation]) -> HeartModule:
    """Build the heart; n odd is essential (the constants/heart splitting
    fails for even n)."""
    if n < 3 or n % 2 == 0:
        raise InvalidInputError(f"the heart needs an odd n >= 3, got {n}")
    if not gens:
        raise InvalidInputError("no generators")
    if any(g.size != n for g in gens):
        raise InvalidInputError("generator size does not match n")
    mats = tuple(permutation_heart_matrix(g) for g in gens)
    if any(not m.is_invertible for m in mats):
        raise InternalInconsistencyError("a permutation restricted to a singular matrix")
    return HeartModule(n, mats)


def _spin_basis(generators: Sequence[BitMatrix], v: int) -> list[int]:
    """Echelonized basis of the smallest invariant subspace containing v."""
    basis: list[int] = []

    def reduce(w: int) -> int:
        for b in basis:
            w = min(w, w ^ b)
        return w

    queue = [v]
    while queue:
        w = reduce(queue.pop())
        if not w:
            continue
        basis.append(w)
        basis.sort(reverse=True)
        for g in generators:
            queue.append(g.apply(w))
    return basis


def spin(module: HeartModule, v: int) -> BitMatrix:
    """Basis (as matrix rows) of the cyclic submodule generated by v."""
    if v == 0:
        raise InvalidInputError("spin needs a nonzero vector")
    if v >> module.dim:
        raise InvalidInputError("vector width exceeds the module dimension")
    basis = _spin_basis(module.generators, v)
    return BitMatrix(len(basis), module.dim, tuple(basis))


def _commutant_dimension(module: HeartModule) -> int:
    """Dimension over F2 of {X : X A = A X for every generator A}."""
    d = module.dim
    nn = d * d
    eqs: list[int] = []
    for mat in module.generators:
        a = mat.rows
        for i in range(d):
            for j in range(d):
                # coefficient of X[r][c] in (X A - A X)[i][j]
                mask = 0
                for c in range(d):
                    if (a[c] >> j) & 1:
                        mask ^= 1 << (i * d + c)
                for r in range(d):
                    if (a[i] >> r) & 1:
                        mask ^= 1 << (r * d + j)
                if mask:
                    eqs.append(mask)
    rank = 0
    basis: list[int] = []
    for e in eqs:
        for b in basis:
            e = min(e, e ^ b)
        if e:
            basis.append(e)
            basis.sort(reverse=True)
            rank += 1
    return nn - rank


def analyze(module: HeartModule) -> ModuleReport:
    """Simplicity by spinning every nonzero vector (complete over F2), and
    the endomorphism dimension from the commutant system."""
    d = module.dim
    if d > ANALYZE_DIM_CAP:
        raise CapabilityError(f"exhaustive analysis is capped at dimension {ANALYZE_DIM_CAP}")
    simple = True
    for v in range(1, 1 << d):
        if len(_spin_basis(module.generators, v)) != d:
            simple = False
            break
    end_dim = _commutant_dimension(module)
    if end_dim < 1:
        raise InternalInconsistencyError("the identity endomorphism went missing")
    return ModuleReport(simple, end_dim, simple and end_dim == 1)


def standard_generators(tag: GaloisGroupId | str, n: int) -> list[Permutation]:
    """Concrete generators for the named transitive group of degree n.

    C3/S3 need n = 3; C5/D5/F20/A5/S5 need n = 5; a cyclic tag C<q> is
    accepted for any odd prime q = n.
    """
    name = tag.value if isinstance(tag, GaloisGroupId) else str(tag)
    cyc = list(range(1, n + 1))
    if name == f"C{n}":
        if n < 3 or n % 2 == 0 or not is_prime(n):
            raise InvalidInputError(f"cyclic heart generators need an odd prime degree, got {n}")
        return [Permutation.from_cycles(n, [cyc])]
    table = {
        ("S3", 3): [[(1, 2)], [cyc]],
        ("S5", 5): [[(1, 2)], [cyc]],
        ("A5", 5): [[(1, 2, 3)], [cyc]],
        ("D5", 5): [[cyc], [(2, 5), (3, 4)]],
        ("F20", 5): [[cyc], [(2, 3, 5, 4)]],
    }
    key = (name, n)
    if key not in table:
        raise InvalidInputError(f"no standard generators for group {name} in degree {n}")
    return [Permutation.from_cycles(n, cycles) for cycles in table[key]]
