"""Complete factorization of univariate polynomials over Q.

Pipeline: Yun's squarefree decomposition, then per squarefree part the
Zassenhaus route — Berlekamp factorization modulo a small odd prime that
keeps the polynomial squarefree, quadratic Hensel lifting past twice the
Landau-Mignotte bound, and exhaustive subset recombination with symmetric
remainders.  Exponential recombination is fine at the degree cap of 32;
degree-25 norms coming from quintic stem fields factor in well under a
second.

Everything is exact; a wrong answer is never possible, only an explicit
``CapabilityError`` past the documented caps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import CapabilityError, InternalInconsistencyError, InvalidInputError
from .ints import is_prime
from .polys import Polynomial, poly_gcd, zz_content, zz_primitive

DEGREE_CAP = 32

# ---------------------------------------------------------------------------
# polynomials over F_p, as trimmed ascending coefficient lists
# ---------------------------------------------------------------------------


def _mp_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mp_reduce(cs: Sequence[int], p: int) -> list[int]:
    return _mp_trim([c % p for c in cs])


def _mp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _mp_trim([c % p for c in out])


def _mp_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _mp_trim(out)


def _mp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _mp_trim(out)


def _mp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial mod p")
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            t = c * inv % p
            q[i - db] = t
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - t * b[j]) % p
    return _mp_trim(q), _mp_trim(a)


def _mp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _mp_reduce(a, p)
    b = _mp_reduce(b, p)
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mp_monic(a: Sequence[int], p: int) -> list[int]:
    a = _mp_reduce(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mp_deriv(a: Sequence[int], p: int) -> list[int]:
    return _mp_trim([i * c % p for i, c in enumerate(a)][1:])


def _mp_pow_x(e: int, f: Sequence[int], p: int) -> list[int]:
    """x**e mod f."""
    result = _mp_divmod([1], f, p)[1]
    base = _mp_divmod([0, 1], f, p)[1]
    while e:
        if e & 1:
            result = _mp_divmod(_mp_mul(result, base, p), f, p)[1]
        e >>= 1
        if e:
            base = _mp_divmod(_mp_mul(base, base, p), f, p)[1]
    return result


# ---------------------------------------------------------------------------
# Berlekamp
# ---------------------------------------------------------------------------


def _nullspace(eqs: list[list[int]], n: int, p: int) -> list[list[int]]:
    """Basis of {v in F_p^n : every equation row . v = 0}."""
    rows = [r[:] for r in eqs]
    pivots: dict[int, int] = {}
    rr = 0
    for col in range(n):
        piv = next((r for r in range(rr, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = pow(rows[rr][col], -1, p)
        rows[rr] = [c * inv % p for c in rows[rr]]
        for r in range(len(rows)):
            if r != rr and rows[r][col]:
                t = rows[r][col]
                rows[r] = [(rc - t * pc) % p for rc, pc in zip(rows[r], rows[rr])]
        pivots[col] = rr
        rr += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free] = 1
        for col, r in pivots.items():
            v[col] = -rows[r][free] % p
        basis.append(v)
    return basis


def _berlekamp_basis(f: Sequence[int], p: int) -> list[list[int]]:
    """Basis of the Berlekamp subalgebra {v : v**p = v mod f} of F_p[x]/(f)."""
    n = len(f) - 1
    xp = _mp_pow_x(p, f, p)
    rows = []
    cur = [1]
    for i in range(n):
        if i:
            cur = _mp_divmod(_mp_mul(cur, xp, p), f, p)[1]
        row = list(cur) + [0] * (n - len(cur))
        row[i] = (row[i] - 1) % p
        rows.append(row)
    # v . Q = v  <=>  for every column j: sum_i v_i (Q - I)[i][j] = 0
    eqs = [[rows[i][j] for i in range(n)] for j in range(n)]
    return _nullspace(eqs, n, p)


def _berlekamp_split(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree f mod p."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    basis = _berlekamp_basis(f, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        if len(factors) == r:
            break
        vp = _mp_trim([c % p for c in v])
        if len(vp) <= 1:
            continue
        refined: list[list[int]] = []
        for u in factors:
            du = len(u) - 1
            if du <= 1:
                refined.append(u)
                continue
            got = 0
            for c in range(p):
                shifted = list(vp)
                shifted[0] = (shifted[0] - c) % p
                g = _mp_gcd(u, _mp_trim(shifted), p)
                if len(g) - 1 >= 1:
                    refined.append(g)
                    got += len(g) - 1
                    if got == du:
                        break
        factors = refined
    if sum(len(u) - 1 for u in factors) != n or len(factors) != r:
        raise InternalInconsistencyError("Berlekamp refinement lost degrees")
    return factors


def _mp_squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """(monic squarefree part, multiplicity) pairs for monic f mod p."""
    result: dict[tuple[int, ...], int] = {}

    def rec(g: list[int], outer: int) -> None:
        d = _mp_deriv(g, p)
        if not d:
            root = [g[i] for i in range(0, len(g), p)]  # p-th root in F_p[x]
            rec(root, outer * p)
            return
        c = _mp_gcd(g, d, p)
        w = _mp_divmod(g, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _mp_gcd(w, c, p)
            part = _mp_divmod(w, y, p)[0]
            if len(part) > 1:
                key = tuple(part)
                result[key] = result.get(key, 0) + i * outer
            w = y
            c = _mp_divmod(c, y, p)[0]
            i += 1
        if len(c) > 1:
            if any(c[i] for i in range(len(c)) if i % p):
                raise InternalInconsistencyError("residual part is not a p-th power")
            rec([c[i] for i in range(0, len(c), p)], outer * p)

    rec(f, 1)
    return [(list(k), m) for k, m in result.items()]


# ---------------------------------------------------------------------------
# public mod-p interface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModPPolynomial:
    """Dense polynomial over F_p (coefficients reduced, top one nonzero)."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 3 or self.p > 2**31 or not is_prime(self.p):
            raise InvalidInputError(f"modulus must be an odd prime <= 2**31, got {self.p}")
        object.__setattr__(self, "coeffs", tuple(_mp_reduce(self.coeffs, self.p)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return f"{Polynomial(self.coeffs)} (mod {self.p})"


def factor_mod_p(f: ModPPolynomial) -> list[tuple[ModPPolynomial, int]]:
    """Monic irreducible factors of f with multiplicities; their product
    reconstructs f up to the leading unit."""
    if f.is_zero:
        raise InvalidInputError("cannot factor the zero polynomial")
    p = f.p
    monic = _mp_monic(list(f.coeffs), p)
    if len(monic) == 1:
        return []
    out: list[tuple[ModPPolynomial, int]] = []
    for part, mult in _mp_squarefree_decomposition(monic, p):
        for irr in _berlekamp_split(part, p):
            out.append((ModPPolynomial(p, tuple(irr)), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------


def _zp_mul(a: Sequence[int], b: Sequence[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _mp_trim([c % m for c in out])


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from a factorization mod sqrt(m) to mod m.

    Preconditions: f = g*h and s*g + t*h = 1 (mod sqrt(m)), f, g, h monic.
    """
    e = _mp_sub(f, _zp_mul(g, h, m), m)
    q, r = _mp_divmod(_zp_mul(s, e, m), h, m)
    g1 = _mp_add(_mp_add(g, _zp_mul(t, e, m), m), _zp_mul(q, g, m), m)
    h1 = _mp_add(h, r, m)
    b = _mp_sub(_mp_add(_zp_mul(s, g1, m), _zp_mul(t, h1, m), m), [1], m)
    c, d = _mp_divmod(_zp_mul(s, b, m), h1, m)
    s1 = _mp_sub(s, d, m)
    t1 = _mp_sub(_mp_sub(t, _zp_mul(t, b, m), m), _zp_mul(c, g1, m), m)
    if len(g1) != len(g) or len(h1) != len(h):
        raise InternalInconsistencyError("Hensel step changed factor degrees")
    return g1, h1, s1, t1


def _bezout_mod_p(g: list[int], h: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    r0, r1 = _mp_reduce(g, p), _mp_reduce(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mp_sub(s0, _mp_mul(q, s1, p), p)
        t0, t1 = t1, _mp_sub(t0, _mp_mul(q, t1, p), p)
    if len(r0) != 1:
        raise InvalidInputError("mod-p factors are not pairwise coprime")
    inv = pow(r0[0], -1, p)
    s = [c * inv % p for c in s0]
    t = [c * inv % p for c in t0]
    s = _mp_divmod(s, h, p)[1]
    # recover the matching t exactly: t = (1 - s*g) / h
    num = _mp_sub([1], _mp_mul(s, g, p), p)
    t, rem = _mp_divmod(num, h, p)
    if rem:
        raise InternalInconsistencyError("Bezout normalization failed")
    return s, t


def _lift_tree(f_mod: list[int], leaves: list[list[int]], p: int, big: int) -> list[list[int]]:
    """Lift monic mod-p factors `leaves` of the monic f_mod (given mod `big`,
    a power p**(2**t)) to factors mod `big`."""
    if len(leaves) == 1:
        return [f_mod]
    mid = len(leaves) // 2
    g = [1]
    for leaf in leaves[:mid]:
        g = _mp_mul(g, leaf, p)
    h = [1]
    for leaf in leaves[mid:]:
        h = _mp_mul(h, leaf, p)
    s, t = _bezout_mod_p(g, h, p)
    q = p
    while q < big:
        q = q * q
        fq = _mp_trim([c % q for c in f_mod])
        g, h, s, t = _hensel_step(fq, g, h, s, t, q)
    return _lift_tree(g, leaves[:mid], p, big) + _lift_tree(h, leaves[mid:], p, big)


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _require_integer_coeffs(f: Polynomial, what: str) -> list[int]:
    if f.is_zero:
        raise InvalidInputError(f"{what} requires a nonzero polynomial")
    if any(c.denominator != 1 for c in f.coeffs):
        raise InvalidInputError(f"{what} requires integer coefficients")
    return [int(c) for c in f.coeffs]


def mignotte_bound(f: Polynomial) -> int:
    """An integer B >= every coefficient magnitude of every integer factor
    of f (Landau-Mignotte form ceil(2**deg(f) * l2norm(f) * |lc(f)|))."""
    cs = _require_integer_coeffs(f, "mignotte_bound")
    s = sum(c * c for c in cs)
    t = 4 ** (len(cs) - 1) * cs[-1] * cs[-1] * s
    r = math.isqrt(t)
    return r if r * r == t else r + 1


def hensel_lift(f: Polynomial, factors: Sequence[ModPPolynomial], k: int) -> list[Polynomial]:
    """Lift pairwise-coprime monic mod-p factors of f to factors mod p**k
    (coefficients in the symmetric range).

    The lifted factors are monic and congruent to the inputs mod p; their
    product is congruent to the monic associate of f mod p**k (to f itself
    whenever f is monic).
    """
    if k < 1:
        raise InvalidInputError("target exponent must be >= 1")
    if not factors:
        raise InvalidInputError("no factors to lift")
    p = factors[0].p
    if any(g.p != p for g in factors):
        raise InvalidInputError("factors carry mixed moduli")
    fz = _require_integer_coeffs(f, "hensel_lift")
    if fz[-1] % p == 0:
        raise InvalidInputError("p divides the leading coefficient")
    fbar = _mp_monic(fz, p)
    if len(_mp_gcd(fbar, _mp_deriv(fbar, p), p)) != 1:
        raise InvalidInputError("f is not squarefree mod p")
    leaves = [_mp_monic(list(g.coeffs), p) for g in factors]
    prod = [1]
    for leaf in leaves:
        if len(leaf) <= 1:
            raise InvalidInputError("constant factors cannot be lifted")
        prod = _mp_mul(prod, leaf, p)
    if prod != fbar:
        raise InvalidInputError("factors do not multiply to f mod p")
    for a, b in itertools.combinations(leaves, 2):
        if len(_mp_gcd(a, b, p)) != 1:
            raise InvalidInputError("mod-p factors are not pairwise coprime")
    e2 = 1
    while e2 < k:
        e2 *= 2
    big = p**e2
    fstar = _mp_trim([c * pow(fz[-1], -1, big) % big for c in fz])
    lifted = _lift_tree(fstar, leaves, p, big)
    m = p**k
    return [Polynomial([_sym(c, m) for c in g]) for g in lifted]


# ---------------------------------------------------------------------------
# factorization over Q
# ---------------------------------------------------------------------------


def _select_prime(fz: list[int]) -> int:
    """Smallest odd prime keeping fz squarefree with its degree intact."""
    p = 3
    while True:
        if is_prime(p) and fz[-1] % p:
            fbar = _mp_monic(fz, p)
            if len(fbar) == len(fz) and len(_mp_gcd(fbar, _mp_deriv(fbar, p), p)) == 1:
                return p
        p += 2


def _zz_exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """a / b over Z if the division is exact, else None."""
    if len(a) < len(b):
        return None
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            if c % lb:
                return None
            t = c // lb
            quot[i - db] = t
            for j in range(db + 1):
                rem[i - db + j] -= t * b[j]
    return quot if not any(rem) else None


def _zassenhaus(fz: list[int]) -> list[list[int]]:
    """Irreducible factors (primitive, positive lc) of a primitive
    squarefree integer polynomial with positive leading coefficient."""
    n = len(fz) - 1
    if n == 1:
        return [fz]
    p = _select_prime(fz)
    modular = _berlekamp_split(_mp_monic(fz, p), p)
    if len(modular) == 1:
        return [fz]
    modular.sort(key=lambda g: (len(g), tuple(g)))
    bound = mignotte_bound(Polynomial(fz))
    k = 1
    m = p
    while m <= 2 * bound:
        m *= p
        k += 1
    lifted_polys = hensel_lift(Polynomial(fz), [ModPPolynomial(p, tuple(g)) for g in modular], k)
    lifted = [[int(c) % m for c in poly.coeffs] for poly in lifted_polys]

    result: list[list[int]] = []
    remaining = list(range(len(lifted)))
    current = list(fz)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        d = current[-1]
        c0 = current[0]
        for combo in itertools.combinations(remaining, size):
            degs = sum(len(lifted[i]) - 1 for i in combo)
            if not 0 < degs < len(current) - 1:
                continue
            if c0:
                prod0 = d
                for i in combo:
                    prod0 = prod0 * lifted[i][0] % m
                prod0 = _sym(prod0, m)
                if prod0 == 0 or (d * c0) % prod0:
                    continue
            cand = [d]
            for i in combo:
                cand = [x % m for x in _zp_mul(cand, lifted[i], m)]
            cand = [_sym(x, m) for x in cand]
            cand = zz_primitive(cand)
            quot = _zz_exact_div(current, cand)
            if quot is not None:
                result.append(cand)
                current = zz_primitive(quot)
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if len(current) > 1:
        result.append(zz_primitive(current))
    return result


@dataclass(frozen=True)
class FactorList:
    """unit * prod(poly**mult) = the factored polynomial, exactly; the
    factors are monic, irreducible over Q, pairwise distinct, and sorted
    by (degree, coefficients)."""

    unit: Fraction
    factors: tuple[tuple[Polynomial, int], ...]

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1 and self.factors[0][0].degree >= 1

    def expand(self) -> Polynomial:
        out = Polynomial((self.unit,))
        for poly, mult in self.factors:
            out = out * poly**mult
        return out

    def __str__(self) -> str:
        parts = [] if self.unit == 1 and self.factors else [str(self.unit)]
        for poly, mult in self.factors:
            body = f"({poly})"
            parts.append(body if mult == 1 else f"{body}^{mult}")
        return " * ".join(parts) if parts else "1"


def _yun_squarefree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """(monic squarefree part, multiplicity) pairs, product = f/lc(f)."""
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f.monic(), 1)]
    w = f // g
    y = f.derivative() // g
    z = y - w.derivative()
    out = []
    i = 1
    while w.degree > 0:
        a = poly_gcd(w, z)
        if a.degree > 0:
            out.append((a, i))
        w = w // a
        y, _ = divmod(z, a)
        z = y - w.derivative()
        i += 1
    return out


@lru_cache(maxsize=None)
def factor_over_Q(f: Polynomial) -> FactorList:
    """Complete factorization over Q into monic irreducible factors."""
    if f.is_zero:
        raise InvalidInputError("cannot factor the zero polynomial")
    if f.degree > DEGREE_CAP:
        raise CapabilityError(f"factorization is capped at degree {DEGREE_CAP}, got {f.degree}")
    if f.degree == 0:
        return FactorList(f.lc, ())
    fz, den = f.cleared()
    prim = zz_primitive(fz)
    cont = zz_content(fz) * (-1 if fz[-1] < 0 else 1)
    unit = Fraction(cont, den) * Fraction(prim[-1])
    collected: list[tuple[Polynomial, int]] = []
    for part, mult in _yun_squarefree(Polynomial(prim)):
        pz = zz_primitive(part.cleared()[0])
        for gz in _zassenhaus(pz):
            collected.append((Polynomial(gz).monic(), mult))
    collected.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return FactorList(unit, tuple(collected))


def is_squarefree(f: Polynomial) -> bool:
    """Whether f has no repeated roots (gcd(f, f') is constant)."""
    if f.degree < 1:
        raise InvalidInputError("squarefreeness needs degree >= 1")
    return poly_gcd(f, f.derivative()).degree == 0
