"""Elementary number theory over arbitrary-precision integers.

Primality is decided by a deterministic Miller-Rabin witness set that is
valid for all 64-bit inputs; factorization runs trial division first and
escalates to Brent's cycle-finding variant of Pollard rho for cofactors
below 2**64.  Anything larger raises ``CapabilityError`` rather than
risking a wrong answer.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CapabilityError, InvalidInputError

# Valid for every n < 3.3 * 10**24, hence for all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

PRIMALITY_LIMIT = 1 << 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= |n| < 2**64."""
    n = abs(n)
    if n >= PRIMALITY_LIMIT:
        raise CapabilityError(f"primality testing is limited to 64-bit inputs, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    """All primes p < bound, by sieve."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound, p)))
    return [p for p in range(bound) if sieve[p]]


def multiplicative_order(a: int, n: int) -> int:
    """Smallest k >= 1 with a**k = 1 mod n."""
    if n < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {n}")
    if math.gcd(a, n) != 1:
        raise InvalidInputError(f"{a} is not invertible mod {n}")
    a %= n
    k = 1
    x = a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def is_primitive_root(a: int, n: int) -> bool:
    """Whether a generates the full multiplicative group mod an odd prime n."""
    if n == 2 or not is_prime(n):
        raise InvalidInputError(f"modulus must be an odd prime, got {n}")
    if math.gcd(a, n) != 1:
        raise InvalidInputError(f"{a} is not invertible mod {n}")
    return multiplicative_order(a, n) == n - 1


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(m, e) with n = m**e and e >= 2 maximal, or None."""
    for e in range(n.bit_length(), 1, -1):
        m = _iroot(n, e)
        if m >= 2 and m**e == n:
            return m, e
    return None


def _brent_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n (Brent's variant),
    sweeping the polynomial offset deterministically."""
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise CapabilityError(f"Pollard rho failed to split {n}")  # pragma: no cover


def factor_integer(n: int, trial_bound: int = 100_000) -> list[tuple[int, int]]:
    """Complete factorization |n| = prod p**e, as a sorted list of (p, e).

    Raises ``CapabilityError`` for composite cofactors >= 2**64 that are not
    perfect powers (explicit "unfactored" failure, never a guess).
    """
    n = abs(n)
    if n == 0:
        raise InvalidInputError("cannot factor 0")
    factors: dict[int, int] = {}

    def _accumulate(m: int, mult: int) -> None:
        while m % 2 == 0:
            factors[2] = factors.get(2, 0) + mult
            m //= 2
        d = 3
        while d <= trial_bound and d * d <= m:
            while m % d == 0:
                factors[d] = factors.get(d, 0) + mult
                m //= d
            d += 2
        _crack(m, mult)

    def _crack(m: int, mult: int) -> None:
        if m == 1:
            return
        if m < trial_bound * trial_bound or (m < PRIMALITY_LIMIT and is_prime(m)):
            factors[m] = factors.get(m, 0) + mult
            return
        power = _perfect_power(m)
        if power is not None:
            base, e = power
            _accumulate(base, mult * e)
            return
        if m >= PRIMALITY_LIMIT:
            raise CapabilityError(f"unfactored cofactor {m} exceeds the 64-bit factorization capability")
        d = _brent_rho(m)
        _crack(d, mult)
        _crack(m // d, mult)

    _accumulate(n, 1)
    return sorted(factors.items())


def squarefree_part(n: int) -> int:
    """The squarefree d with n = d * m**2, sign preserved."""
    if n == 0:
        raise InvalidInputError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    d = 1
    for p, e in factor_integer(n):
        if e % 2:
            d *= p
    return sign * d


def is_square(q: Fraction | int) -> bool:
    """Whether q is the square of a rational."""
    q = Fraction(q)
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den
