#!/usr/bin/env python3
# Exact Galois group identification for cubics and quintics.

from nonisog import cycle_type_prefilter, galois_cubic, galois_quintic, group_properties

cubics = [
    "x^3 - 5",
    "x^3 - x - 1",
    "x^3 + x^2 - 2*x - 1",   # simplest cubic, a = -1
    "x^3 - 15*x + 22",       # reducible
]
quintics = [
    "x^5 - x - 1",                              # S5
    "x^5 + 15*x + 12",                          # Frobenius group of order 20
    "x^5 - 110*x^3 - 55*x^2 + 2310*x + 979",    # cyclic
    "x^5 - 5*x + 12",                           # dihedral
    "x^5 + 20*x + 16",                          # alternating
    "x^5 - 2",                                  # Frobenius again
]

from nonisog import parse_polynomial

for src in cubics:
    print(f"{src:42s} -> {galois_cubic(parse_polynomial(src))}")
for src in quintics:
    f = parse_polynomial(src)
    group = galois_quintic(f)
    props = group_properties(group)
    print(f"{src:42s} -> {group}  (order {props.order}, doubly transitive: {props.doubly_transitive})")

# The mod-p cycle-type scan is an advisory cross-check: every pattern seen
# must be a cycle type of the identified group.  It can expose a bug but
# never decides a group by itself.
f = parse_polynomial("x^5 + 15*x + 12")
print()
print("cycle types of x^5 + 15x + 12 mod p < 200:", sorted(cycle_type_prefilter(f, 200)))
