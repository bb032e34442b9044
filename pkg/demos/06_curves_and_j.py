#!/usr/bin/env python3
# Elliptic curves y^2 = cubic: short Weierstrass models, exact
# j-invariants, and the three rational j values with CM by Q(sqrt(-3)).

from nonisog import CM_J_INVARIANTS, X, genus, in_cm_j_set, j_invariant, short_weierstrass

# Depression of a general cubic to y^2 = x^3 + ax + b:
w = short_weierstrass(X**3 + X**2 - 2 * X - 1)
print("x^3 + x^2 - 2x - 1  ->", w)

print()
print("the CM j-set:", CM_J_INVARIANTS)
for f in (X**3 - 5, X**3 - 15 * X + 22, X**3 - X, X**3 - X - 1):
    j = j_invariant(f)
    print(f"j(y^2 = {str(f):15s}) = {str(j):10s} in CM set: {in_cm_j_set(j)}")

# Every curve in the simplest-cubic family stays outside the CM set:
print()
for a in (-1, 1, 2, 4, 7):
    h = X**3 - a * X**2 - (a + 3) * X - 1
    print(f"a = {a:2d}: j = {j_invariant(h)}  (outside the CM set)")

# Genus bookkeeping for hyperelliptic y^2 = f(x), deg f = n odd:
print()
for n in (3, 5, 7, 11):
    print(f"deg f = {n:2d}: the jacobian has dimension {genus(n)}")
