"""The certificate engine.

Given squarefree degree-n rational polynomials f and h (n an odd prime with
2 a primitive root mod n), decide which obstruction rules apply to the pair
of jacobians of y^2 = f and y^2 = h, and assemble a machine-checkable
certificate: a verdict, a characteristic-p parity table, and an ordered
trace of every hypothesis that was checked, each tagged with the rule of
the engine's rule book that consumes it.

Verdicts are deliberately conservative.  ``HomZero`` and
``NotIsogenousOverClosure`` are only ever emitted from a chain of verified
hypotheses; a single failed or unknown hypothesis forces ``Inconclusive``.
The engine never guesses: linear disjointness, for instance, is proven by
one of four rules or reported Unknown.

Rule book (the ``citation`` field of every hypothesis names one of these):

rule:inputs
    Both polynomials must have the same degree n and no repeated roots;
    every statement below assumes it.
rule:setting
    n is an odd prime and 2 generates the multiplicative group mod n.
    Under this hypothesis the 2-torsion of the jacobian of y^2 = f is the
    (n-1)-dimensional heart of the root permutation module, and it is a
    simple Galois module whenever f is irreducible.
rule:cm-mixed
    If exactly one of f, h is irreducible and the two jacobians are
    isogenous over the algebraic closure, both jacobians are of CM type
    with multiplication by the n-th cyclotomic field.
rule:cm-j-set
    A rational elliptic curve has endomorphism algebra Q(sqrt(-3)) exactly
    when its j-invariant lies in {0, 54000, -12288000}.  Combined with
    rule:cm-mixed for n = 3 over Q: either the curves are not isogenous
    over the closure, or both j-invariants lie in that set.
rule:group-id
    Exact identification of the Galois group (degrees 3 and 5).
rule:disjoint-identical
    Identical polynomials generate identical splitting fields, which are
    never linearly disjoint (n >= 3).
rule:disjoint-cyclic-vs-2transitive
    For prime n, a degree-n cyclic splitting field and the splitting field
    of an irreducible polynomial with doubly transitive group are linearly
    disjoint: a containment would make the doubly transitive group act
    through a cyclic order-n quotient, forcing order n < n(n-1).
rule:disjoint-quadratic-subfields
    In degree 5, if one group is S5 and the other is the order-20
    Frobenius group, distinct squarefree parts of the discriminants force
    trivial intersection: a nontrivial intersection must be the unique
    quadratic subfield of the S5 splitting field, and the Frobenius
    group's cyclic Sylow 2-subgroup rules out a second quadratic subfield
    on its side.
rule:hom-zero
    f irreducible with doubly transitive Galois group, h irreducible,
    splitting fields linearly disjoint: in characteristic zero every
    homomorphism between the two jacobians vanishes.  (In characteristic
    p > 0 the only escape is both jacobians supersingular, constrained by
    rule:supersingular-parity.)
rule:cyclic-cubic-fields
    Two cyclic cubic fields that are not isomorphic give non-isogenous
    curves y^2 = h, y^2 = u over the rationals.
rule:supersingular-parity
    For p != n, the supersingular escape embeds the n-th cyclotomic field
    into a matrix algebra over the quaternion algebra ramified at p, which
    forces the multiplicative order of p mod n to be even.  Odd order
    closes the escape in characteristic p.
rule:reducible-splitting-degree
    A reducible squarefree polynomial of degree <= n (n prime) has
    splitting field degree free of the prime n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .curves import in_cm_j_set, j_invariant
from .errors import CapabilityError, InvalidInputError
from .factor import factor_over_Q, is_squarefree
from .galois import GaloisGroupId, galois_cubic, galois_quintic, group_properties
from .ints import is_prime, multiplicative_order, primes_below, squarefree_part
from .numberfield import NumberField, fields_isomorphic
from .polys import Polynomial, discriminant

RULEBOOK: dict[str, str] = {
    "rule:inputs": "equal degrees and no repeated roots",
    "rule:setting": "n is an odd prime and 2 is a primitive root mod n",
    "rule:cm-mixed": "mixed reducibility + isogeny forces CM by the n-th cyclotomic field",
    "rule:cm-j-set": "endomorphism algebra Q(sqrt(-3)) over Q <=> j in {0, 54000, -12288000}",
    "rule:group-id": "exact Galois group identification (degrees 3 and 5)",
    "rule:disjoint-identical": "identical splitting fields are not linearly disjoint",
    "rule:disjoint-cyclic-vs-2transitive": "cyclic vs doubly transitive splitting fields are linearly disjoint",
    "rule:disjoint-quadratic-subfields": "distinct quadratic subfields separate S5 from the Frobenius group of order 20",
    "rule:hom-zero": "doubly transitive + irreducible + disjoint splitting fields: Hom = 0 in characteristic 0",
    "rule:cyclic-cubic-fields": "non-isomorphic cyclic cubic fields give non-isogenous curves",
    "rule:supersingular-parity": "supersingular escape needs even multiplicative order of p mod n",
    "rule:reducible-splitting-degree": "a reducible polynomial's splitting degree avoids the prime n",
}

VERIFIED = "verified"
FAILED = "failed"
UNKNOWN = "unknown"

CHAR_P_TABLE_BOUND = 50


@dataclass(frozen=True)
class Hypothesis:
    name: str
    citation: str
    status: str
    detail: str

    def __post_init__(self):
        if not self.citation:
            raise InvalidInputError("a hypothesis needs a citation")
        if self.status not in (VERIFIED, FAILED, UNKNOWN):
            raise InvalidInputError(f"bad hypothesis status {self.status}")


@dataclass(frozen=True)
class DisjointnessResult:
    """Outcome of the linear-disjointness prover: ``disjoint`` is True,
    False (with a witness) or None for Unknown; ``rule`` names the rule
    that decided it."""

    disjoint: bool | None
    rule: str
    detail: str


@dataclass(frozen=True)
class Verdict:
    tag: str
    cyclotomic_degree: int | None = None
    reason: str | None = None

    NOT_ISOGENOUS = "NotIsogenousOverClosure"
    CM = "IsogenyImpliesCM"
    HOM_ZERO = "HomZero"
    INCONCLUSIVE = "Inconclusive"

    @classmethod
    def not_isogenous(cls) -> Verdict:
        return cls(cls.NOT_ISOGENOUS)

    @classmethod
    def cm(cls, n: int) -> Verdict:
        return cls(cls.CM, cyclotomic_degree=n)

    @classmethod
    def hom_zero(cls) -> Verdict:
        return cls(cls.HOM_ZERO)

    @classmethod
    def inconclusive(cls, reason: str) -> Verdict:
        return cls(cls.INCONCLUSIVE, reason=reason)

    @property
    def is_definitive(self) -> bool:
        return self.tag != self.INCONCLUSIVE

    def __str__(self) -> str:
        if self.tag == self.CM:
            return f"{self.tag}({self.cyclotomic_degree})"
        if self.tag == self.INCONCLUSIVE:
            return f"{self.tag}({self.reason})"
        return self.tag


@dataclass(frozen=True)
class CharPConstraint:
    p: int
    order: int | None  # multiplicative order of p mod n; None when p = n
    allowed: bool  # whether the supersingular escape stays open in char p


@dataclass(frozen=True)
class Certificate:
    f: Polynomial
    h: Polynomial
    n: int
    verdict: Verdict
    char_p_constraints: tuple[CharPConstraint, ...]
    trace: tuple[Hypothesis, ...]

    def __str__(self) -> str:
        lines = [
            f"f = {self.f}",
            f"h = {self.h}",
            f"n = {self.n}",
            f"verdict: {self.verdict}",
        ]
        if self.char_p_constraints:
            rows = ", ".join(
                f"p={c.p}:{'-' if c.order is None else c.order}:{'open' if c.allowed else 'closed'}"
                for c in self.char_p_constraints
            )
            lines.append(f"char-p supersingular escape (p:order:status): {rows}")
        lines.append("trace:")
        for hyp in self.trace:
            lines.append(f"  [{hyp.status:>8}] {hyp.name} ({hyp.citation}) -- {hyp.detail}")
        return "\n".join(lines)


def check_setting(n: int) -> Hypothesis:
    """Verified iff n is an odd prime with 2 a primitive root mod n."""
    name = "2 is a primitive root mod n"
    if n < 3 or n % 2 == 0 or not is_prime(n):
        return Hypothesis(name, "rule:setting", FAILED, f"n = {n} is not an odd prime")
    order = multiplicative_order(2, n)
    if order == n - 1:
        return Hypothesis(name, "rule:setting", VERIFIED, f"n = {n}; order of 2 mod n is {order} = n - 1")
    return Hypothesis(name, "rule:setting", FAILED, f"n = {n}; order of 2 mod n is {order} < {n - 1}")


def supersingular_constraint(n: int, p: int) -> tuple[int | None, bool]:
    """(multiplicative order of p mod n or None when p = n, whether the
    supersingular escape remains possible in characteristic p)."""
    if not is_prime(n) or n % 2 == 0:
        raise InvalidInputError(f"n must be an odd prime, got {n}")
    if not is_prime(p):
        raise InvalidInputError(f"p must be prime, got {p}")
    if p == n:
        return None, True
    order = multiplicative_order(p, n)
    return order, order % 2 == 0


def _char_p_table(n: int) -> tuple[CharPConstraint, ...]:
    # p = 2 is excluded: characteristic 2 is outside every rule's setting.
    out = []
    for p in primes_below(CHAR_P_TABLE_BOUND):
        if p == 2:
            continue
        order, allowed = supersingular_constraint(n, p)
        out.append(CharPConstraint(p, order, allowed))
    return tuple(out)


def _group_of(f: Polynomial, n: int) -> GaloisGroupId:
    return galois_cubic(f) if n == 3 else galois_quintic(f)


def prove_linear_disjointness(f: Polynomial, h: Polynomial) -> DisjointnessResult:
    """Linear disjointness of the splitting fields of two irreducible
    squarefree polynomials of equal prime degree n in {3, 5}.

    Rules, in order: identical inputs are never disjoint; a cyclic group
    on one side and a doubly transitive group on the other side are
    disjoint (either orientation); S5 against the order-20 Frobenius group
    with distinct discriminant squarefree parts is disjoint.  Anything
    else is Unknown — never guessed.
    """
    n = f.degree
    if n not in (3, 5) or h.degree != n:
        raise CapabilityError(f"disjointness rules cover equal degrees 3 and 5, got {f.degree}, {h.degree}")
    if not (is_squarefree(f) and is_squarefree(h)):
        raise InvalidInputError("disjointness needs squarefree inputs")
    if not (factor_over_Q(f).is_irreducible and factor_over_Q(h).is_irreducible):
        raise InvalidInputError("disjointness needs irreducible inputs")
    if f.monic() == h.monic():
        return DisjointnessResult(False, "rule:disjoint-identical", "f and h define the same splitting field")
    gf, gh = _group_of(f, n), _group_of(h, n)
    pf, ph = group_properties(gf), group_properties(gh)
    if ph.cyclic_of_order_n and pf.doubly_transitive:
        return DisjointnessResult(
            True,
            "rule:disjoint-cyclic-vs-2transitive",
            f"Gal(h) = {gh} is cyclic of order {n}; Gal(f) = {gf} is doubly transitive",
        )
    if pf.cyclic_of_order_n and ph.doubly_transitive:
        return DisjointnessResult(
            True,
            "rule:disjoint-cyclic-vs-2transitive",
            f"Gal(f) = {gf} is cyclic of order {n}; Gal(h) = {gh} is doubly transitive",
        )
    if n == 5 and {gf, gh} == {GaloisGroupId.S5, GaloisGroupId.F20}:
        df, dh = discriminant(f), discriminant(h)
        sf = squarefree_part(df.numerator * df.denominator)
        sh = squarefree_part(dh.numerator * dh.denominator)
        if sf != sh:
            return DisjointnessResult(
                True,
                "rule:disjoint-quadratic-subfields",
                f"discriminant squarefree parts {sf} != {sh} separate the quadratic subfields",
            )
        return DisjointnessResult(
            None,
            "rule:disjoint-quadratic-subfields",
            f"equal discriminant squarefree parts ({sf}); the quadratic subfields coincide",
        )
    return DisjointnessResult(None, "rule:inputs", f"no disjointness rule applies to ({gf}, {gh})")


def enforce_complete_chain(verdict: Verdict, trace: tuple[Hypothesis, ...]) -> Verdict:
    """Downgrade any definitive verdict to Inconclusive unless every
    hypothesis in the chain is verified."""
    if not verdict.is_definitive:
        return verdict
    bad = [hyp for hyp in trace if hyp.status != VERIFIED]
    if bad:
        names = ", ".join(f"{hyp.name} ({hyp.status})" for hyp in bad)
        return Verdict.inconclusive(f"incomplete hypothesis chain: {names}")
    return verdict


def _gate(f: Polynomial, h: Polynomial, n: int, verdict: Verdict,
          char_p: tuple[CharPConstraint, ...], trace: list[Hypothesis]) -> Certificate:
    final = enforce_complete_chain(verdict, tuple(trace))
    if not final.is_definitive:
        char_p = ()
    return Certificate(f, h, n, final, char_p, tuple(trace))


def _validate_pair(f: Polynomial, h: Polynomial, label_f: str = "f", label_h: str = "h") -> tuple[list[Hypothesis], bool]:
    trace: list[Hypothesis] = []
    ok = True
    if f.degree == h.degree and f.degree >= 1:
        trace.append(Hypothesis("equal degrees", "rule:inputs", VERIFIED, f"deg {label_f} = deg {label_h} = {f.degree}"))
    else:
        trace.append(
            Hypothesis("equal degrees", "rule:inputs", FAILED, f"deg {label_f} = {f.degree}, deg {label_h} = {h.degree}")
        )
        ok = False
    for label, poly in ((label_f, f), (label_h, h)):
        if poly.degree < 1:
            trace.append(Hypothesis(f"{label} squarefree", "rule:inputs", FAILED, f"{label} is constant"))
            ok = False
        elif is_squarefree(poly):
            trace.append(Hypothesis(f"{label} squarefree", "rule:inputs", VERIFIED, f"{label} has no repeated roots"))
        else:
            trace.append(Hypothesis(f"{label} squarefree", "rule:inputs", FAILED, f"{label} has a repeated root"))
            ok = False
    return trace, ok


def _route_mixed(irr: Polynomial, red: Polynomial, n: int, label_irr: str, label_red: str) -> tuple[Verdict, list[Hypothesis]]:
    trace, ok = _validate_pair(irr, red, label_irr, label_red)
    setting = check_setting(n)
    trace.append(setting)
    ok = ok and setting.status == VERIFIED

    irr_ok = factor_over_Q(irr).is_irreducible
    red_fact = factor_over_Q(red)
    red_ok = not red_fact.is_irreducible
    if irr_ok and red_ok:
        trace.append(
            Hypothesis(
                "exactly one polynomial irreducible",
                "rule:cm-mixed",
                VERIFIED,
                f"{label_irr} is irreducible; {label_red} = {red_fact}",
            )
        )
    else:
        trace.append(
            Hypothesis(
                "exactly one polynomial irreducible",
                "rule:cm-mixed",
                FAILED,
                f"{label_irr} irreducible: {irr_ok}; {label_red} reducible: {red_ok}",
            )
        )
        ok = False
    if not ok:
        return Verdict.inconclusive("hypotheses failed"), trace

    if n == 3:
        j_irr, j_red = j_invariant(irr), j_invariant(red)
        in_irr, in_red = in_cm_j_set(j_irr), in_cm_j_set(j_red)
        trace.append(
            Hypothesis(
                "j-invariants against the CM set",
                "rule:cm-j-set",
                VERIFIED,
                f"j({label_irr}) = {j_irr} ({'in' if in_irr else 'not in'} set); "
                f"j({label_red}) = {j_red} ({'in' if in_red else 'not in'} set)",
            )
        )
        if not (in_irr and in_red):
            return Verdict.not_isogenous(), trace
        return Verdict.inconclusive("both j-invariants lie in the CM set {0, 54000, -12288000}"), trace
    return Verdict.cm(n), trace


def apply_route_one_reducible(f: Polynomial, h: Polynomial, n: int) -> Certificate:
    """f irreducible, h reducible (checked): any isogeny over the closure
    forces CM by the n-th cyclotomic field; over Q with n = 3 the CM j-set
    refines this to a definitive verdict whenever some j escapes the set."""
    verdict, trace = _route_mixed(f, h, n, "f", "h")
    return _gate(f, h, n, verdict, (), trace)


def apply_route_both_irreducible(f: Polynomial, h: Polynomial, n: int) -> Certificate:
    """Both irreducible (checked): prove linear disjointness and apply the
    doubly-transitive vanishing rule, or fall back to the cyclic-cubic
    field comparison for n = 3."""
    trace, ok = _validate_pair(f, h)
    setting = check_setting(n)
    trace.append(setting)
    ok = ok and setting.status == VERIFIED

    both_irr = factor_over_Q(f).is_irreducible and factor_over_Q(h).is_irreducible
    trace.append(
        Hypothesis(
            "both polynomials irreducible",
            "rule:inputs",
            VERIFIED if both_irr else FAILED,
            "f and h are irreducible over Q" if both_irr else "an input factors over Q",
        )
    )
    ok = ok and both_irr
    if not ok:
        return _gate(f, h, n, Verdict.inconclusive("hypotheses failed"), (), trace)

    if n not in (3, 5):
        trace.append(
            Hypothesis(
                "Galois groups identified",
                "rule:group-id",
                UNKNOWN,
                f"group identification is implemented for degrees 3 and 5, not {n}",
            )
        )
        return _gate(f, h, n, Verdict.inconclusive("no group identification in this degree"), (), trace)

    gf, gh = _group_of(f, n), _group_of(h, n)
    trace.append(
        Hypothesis("Galois groups identified", "rule:group-id", VERIFIED, f"Gal(f) = {gf}; Gal(h) = {gh}")
    )

    if n == 3 and gf is GaloisGroupId.C3 and gh is GaloisGroupId.C3:
        # Two cyclic cubics can never be proven disjoint by the rules below
        # (none has a doubly transitive side), so go straight to the
        # field-isomorphism comparison; its chain is independent.
        iso = fields_isomorphic(NumberField(f.monic()), NumberField(h.monic()))
        trace.append(
            Hypothesis(
                "cyclic cubic stem fields non-isomorphic",
                "rule:cyclic-cubic-fields",
                FAILED if iso else VERIFIED,
                "the stem fields are isomorphic" if iso else "min poly of f has no root in the stem field of h",
            )
        )
        if not iso:
            return _gate(f, h, n, Verdict.not_isogenous(), (), trace)
        return _gate(f, h, n, Verdict.inconclusive("the cyclic cubic fields are isomorphic"), (), trace)

    disjoint = prove_linear_disjointness(f, h)
    if disjoint.disjoint is True:
        trace.append(Hypothesis("splitting fields linearly disjoint", disjoint.rule, VERIFIED, disjoint.detail))
        dt = group_properties(gf).doubly_transitive or group_properties(gh).doubly_transitive
        trace.append(
            Hypothesis(
                "a doubly transitive group is present",
                "rule:hom-zero",
                VERIFIED if dt else FAILED,
                f"Gal(f) = {gf}, Gal(h) = {gh}",
            )
        )
        if dt:
            return _gate(f, h, n, Verdict.hom_zero(), _char_p_table(n), trace)
        return _gate(f, h, n, Verdict.inconclusive("disjoint, but neither group is doubly transitive"), (), trace)

    status = FAILED if disjoint.disjoint is False else UNKNOWN
    trace.append(Hypothesis("splitting fields linearly disjoint", disjoint.rule, status, disjoint.detail))
    return _gate(f, h, n, Verdict.inconclusive("linear disjointness not established"), (), trace)


def certify(f: Polynomial, h: Polynomial) -> Certificate:
    """Dispatch on the reducibility pattern of the pair and certify.

    Never raises on bad inputs: every violated precondition is recorded as
    a failed hypothesis in an Inconclusive certificate.
    """
    trace, ok = _validate_pair(f, h)
    if not ok:
        n = f.degree if f.degree == h.degree else 0
        return _gate(f, h, n, Verdict.inconclusive("input validation failed"), (), trace)
    n = f.degree
    setting = check_setting(n)
    if setting.status != VERIFIED:
        trace.append(setting)
        return _gate(f, h, n, Verdict.inconclusive("the degree is not an odd prime with 2 primitive"), (), trace)

    if n > 31:
        trace.append(
            Hypothesis("degree within factorization capability", "rule:inputs", FAILED, f"degree {n} exceeds the cap")
        )
        return _gate(f, h, n, Verdict.inconclusive("degree beyond capability"), (), trace)

    f_irr = factor_over_Q(f).is_irreducible
    h_irr = factor_over_Q(h).is_irreducible
    if f_irr and h_irr:
        return apply_route_both_irreducible(f, h, n)
    if f_irr != h_irr:
        if f_irr:
            return apply_route_one_reducible(f, h, n)
        verdict, mixed_trace = _route_mixed(h, f, n, "h", "f")
        return _gate(f, h, n, verdict, (), mixed_trace)
    trace.append(
        Hypothesis(
            "exactly one polynomial irreducible",
            "rule:cm-mixed",
            FAILED,
            "both polynomials are reducible over Q",
        )
    )
    return _gate(f, h, n, Verdict.inconclusive("no rule covers two reducible polynomials"), (), trace)


# -- serialization -----------------------------------------------------------


def _rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_coeff_strings(p: Polynomial) -> list[str]:
    return [_rational_str(c) for c in p.coeffs]


def certificate_to_dict(cert: Certificate) -> dict:
    """Canonical JSON-style document; key order is part of the format."""
    verdict_params: dict = {}
    if cert.verdict.cyclotomic_degree is not None:
        verdict_params["n"] = cert.verdict.cyclotomic_degree
    if cert.verdict.reason is not None:
        verdict_params["reason"] = cert.verdict.reason
    return {
        "inputs": {
            "f": _poly_coeff_strings(cert.f),
            "h": _poly_coeff_strings(cert.h),
            "n": cert.n,
        },
        "verdict": {"tag": cert.verdict.tag, "parameters": verdict_params},
        "char_p_constraints": [
            {"p": c.p, "f_p": c.order, "allowed": c.allowed} for c in cert.char_p_constraints
        ],
        "trace": [
            {"name": hyp.name, "citation": hyp.citation, "status": hyp.status, "detail": hyp.detail}
            for hyp in cert.trace
        ],
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2)
