#!/usr/bin/env python3
# Complete factorization over Q: Berlekamp mod p, Hensel lifting, and
# subset recombination, all in exact arithmetic.

from nonisog import ModPPolynomial, X, factor_mod_p, factor_over_Q, hensel_lift, mignotte_bound

# A reducible cubic: x^3 - 15x + 22 = (x - 2)(x^2 + 2x - 11).
print("x^3 - 15x + 22 =", factor_over_Q(X**3 - 15 * X + 22))

# x^5 - 1 splits off the fifth cyclotomic polynomial.
print("x^5 - 1       =", factor_over_Q(X**5 - 1))

# These two stay irreducible (the engine proves it, not a heuristic):
for f in (X**5 - X - 1, X**5 - 2):
    print(f, "->", "irreducible" if factor_over_Q(f).is_irreducible else "reducible")

# Non-monic inputs work too; the unit keeps the product exact.
fl = factor_over_Q(4 * X**2 + 8 * X + 3)
print("4x^2 + 8x + 3 =", fl, "| reconstruction exact:", fl.expand() == 4 * X**2 + 8 * X + 3)

# The machinery underneath, step by step, for x^2 + 1:
print()
print("mod 5:", [(str(g), m) for g, m in factor_mod_p(ModPPolynomial(5, (1, 0, 1)))])
print("mod 3:", [(str(g), m) for g, m in factor_mod_p(ModPPolynomial(3, (1, 0, 1)))])

# Hensel lifting refines a factorization mod p to mod p^k: the factors of
# x^2 - 7 mod 3 become +-4 mod 9 (and 4^2 = 16 = 7 mod 9).
lifted = hensel_lift(X**2 - 7, [ModPPolynomial(3, (-1, 1)), ModPPolynomial(3, (1, 1))], 2)
print("x^2 - 7 mod 9:", [str(g) for g in lifted])

# The lift must clear twice the Landau-Mignotte bound before recombination:
print("mignotte_bound(x^5 - x - 1) =", mignotte_bound(X**5 - X - 1))
