#!/usr/bin/env python3
# The certificate engine end to end: verdicts with full hypothesis traces.

from nonisog import certificate_to_json, certify, parse_polynomial

C5 = "x^5 - 110*x^3 - 55*x^2 + 2310*x + 979"

pairs = [
    # Two quintic jacobians with provably zero Hom groups: the S5 trinomial
    # against the cyclic quintic (cyclic vs doubly transitive => disjoint
    # splitting fields).
    ("x^5 - x - 1", C5),
    # S5 against the order-20 Frobenius quintic: distinct quadratic
    # subfields (sqrt(2869) vs sqrt(5)) do the work.
    ("x^5 - x - 1", "x^5 + 15*x + 12"),
    # Two non-isomorphic cyclic cubic fields: not isogenous over Q-bar.
    ("x^3 + x^2 - 2*x - 1", "x^3 - x^2 - 4*x - 1"),
    # A classical CM pair: both j-invariants land in {0, 54000, -12288000},
    # so no sound engine may declare non-isogeny (these curves ARE
    # isogenous) -- the certificate stays Inconclusive.
    ("x^3 - 5", "x^3 - 15*x + 22"),
    # Mixed reducibility in degree 5: isogeny would force CM by the fifth
    # cyclotomic field; these two actually become isomorphic over Q-bar,
    # so nothing stronger may be claimed.
    ("x^5 - 2", "x^5 - 1"),
    # The setting matters: 2 is not a primitive root mod 7.
    ("x^7 - x - 1", "x^7 - 1"),
]

for f_src, h_src in pairs:
    cert = certify(parse_polynomial(f_src), parse_polynomial(h_src))
    print("=" * 72)
    print(cert)
    print()

# Certificates serialize to a canonical JSON document (fixed key order,
# exact rationals as strings) for downstream checking:
cert = certify(parse_polynomial("x^5 - x - 1"), parse_polynomial(C5))
print("=" * 72)
print(certificate_to_json(cert))
