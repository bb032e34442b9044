#!/usr/bin/env python3
# The 2-torsion of the jacobian of y^2 = f(x) as an F2 module: the
# (n-1)-dimensional "heart" of the permutation action on the roots.

from nonisog import analyze, heart_module, spin, standard_generators

# For each group we build the heart in the basis v_i = e_i + e_n and ask:
# is it simple (no proper invariant subspace), and how large is its
# endomorphism algebra?  Absolutely simple = simple with endomorphisms F2.
table = [
    ("S3", 3), ("C3", 3),
    ("C5", 5), ("D5", 5), ("F20", 5), ("A5", 5), ("S5", 5),
    ("C7", 7), ("C11", 11), ("C13", 13),
]
print(f"{'group':>5} {'n':>3} {'dim':>4} {'simple':>7} {'End dim':>8} {'abs simple':>11}")
for tag, n in table:
    module = heart_module(n, standard_generators(tag, n))
    report = analyze(module)
    print(f"{tag:>5} {n:>3} {module.dim:>4} {str(report.simple):>7} {report.endomorphism_dim:>8} {str(report.absolutely_simple):>11}")

# The pattern: a cyclic heart is simple exactly when 2 generates the
# multiplicative group mod n (true for 3, 5, 11, 13 -- false for 7), and a
# doubly transitive group forces endomorphisms F2.

# The C7 failure is explicit: x^7 - 1 has two cubic factors over F2, and
# each one spans a 3-dimensional invariant subspace.
module = heart_module(7, standard_generators("C7", 7))
sub = spin(module, 0b0001011)  # v1 + v2 + v4
print()
print("C7 heart: spinning v1 + v2 + v4 gives an invariant subspace of dimension", sub.n_rows)
