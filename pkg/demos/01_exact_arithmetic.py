#!/usr/bin/env python3
# Exact polynomial arithmetic: resultants, discriminants, squarefree parts.
# Everything is a Python int or fractions.Fraction -- no floating point.

from nonisog import Polynomial, X, discriminant, factor_integer, resultant, squarefree_part

# Polynomials are built from the generator X with ordinary operators.
f1 = X**5 - X - 1
f2 = X**5 + 15 * X + 12

print("f1 =", f1)
print("f2 =", f2)

# The discriminant detects repeated roots (disc = 0) and, through its
# squarefree part, pins down the quadratic subfield of the splitting field.
d1 = discriminant(f1)
d2 = discriminant(f2)
print("disc(f1) =", d1, "=", factor_integer(int(d1)))
print("disc(f2) =", d2, "=", factor_integer(int(d2)))

# Q(sqrt(disc)) only depends on the squarefree part:
print("squarefree part of disc(f1):", squarefree_part(int(d1)))   # 2869
print("squarefree part of disc(f2):", squarefree_part(int(d2)))   # 5

# The "simplest cubic" family x^3 - a x^2 - (a+3) x - 1 has a perfect
# square discriminant for every integer a -- the telltale sign of a cyclic
# cubic field:
for a in (-1, 1, 2, 4, 7):
    h = X**3 - a * X**2 - (a + 3) * X - 1
    print(f"a = {a:2d}: disc = {discriminant(h)} = ({a * a + 3 * a + 9})^2")

# Resultants come from a subresultant remainder sequence over Z;
# Res(x - 3, g) is just g(3):
print("Res(x - 3, x^2 + 1) =", resultant(X - 3, X**2 + 1))
