#!/usr/bin/env python3
# Stem fields Q[x]/(m) and factorization over them (Trager's norm method).

from nonisog import NumberField, PolyOverK, X, fields_isomorphic, has_root_in, stem_factor_pattern, trager_factor

# Arithmetic in Q(cbrt(2)): inverses come from the extended euclidean
# algorithm against the minimal polynomial.
K = NumberField(X**3 - 2)
theta = K.generator()
print("K =", K)
print("theta^-1 =", theta.inverse(), " (check: theta * theta^-1 =", (theta * theta.inverse()).poly, ")")

# Over its own stem field, x^3 - 2 picks up the linear factor x - theta:
for g, mult in trager_factor(PolyOverK.from_rational(K, X**3 - 2)):
    print("  factor:", g, " multiplicity", mult)

# The degrees of those factors are the orbit sizes of a point stabilizer
# of the Galois group -- the key invariant behind group identification:
print("pattern of x^3 - 5:        ", stem_factor_pattern(X**3 - 5))          # (1, 2): S3
print("pattern of x^5 + 15x + 12: ", stem_factor_pattern(X**5 + 15 * X + 12))  # (1, 4): F20/S5/A5
print("pattern of the cyclic quintic:", stem_factor_pattern(X**5 - 110 * X**3 - 55 * X**2 + 2310 * X + 979))

# Root tests and field isomorphism (equal degree + shared root):
print("sqrt(8) in Q(sqrt(2))?", has_root_in(NumberField(X**2 - 2), X**2 - 8))
shanks_m1 = X**3 + X**2 - 2 * X - 1   # a = -1
shanks_p1 = X**3 - X**2 - 4 * X - 1   # a = +1
print(
    "the two simplest cubic fields (a = -1, a = 1) isomorphic?",
    fields_isomorphic(NumberField(shanks_m1), NumberField(shanks_p1)),
)
print(
    "same field, shifted generator:",
    fields_isomorphic(NumberField(X**3 - 2), NumberField((X + 1) ** 3 - 2)),
)
