"""nonisog: exact-arithmetic non-isogeny certificates for the jacobians of
hyperelliptic curves y^2 = f(x).

Given a pair of squarefree degree-n rational polynomials (n an odd prime
with 2 a primitive root mod n), the certifier decides whether classical
Galois-theoretic obstructions rule out an isogeny between the two jacobians
over the algebraic closure, and emits a machine-checkable certificate with
the full hypothesis trace.  Everything is computed in exact rational
arithmetic: polynomial factorization over Q, factorization over stem
fields, Galois group identification for cubics and quintics, and the
2-torsion heart module over F2.
"""

from .errors import CapabilityError, InternalInconsistencyError, InvalidInputError
from .ints import (
    factor_integer,
    is_prime,
    is_primitive_root,
    is_square,
    multiplicative_order,
    squarefree_part,
)
from .polys import Polynomial, X, discriminant, poly_gcd, resultant
from .factor import FactorList, ModPPolynomial, factor_mod_p, factor_over_Q, hensel_lift, is_squarefree, mignotte_bound
from .numberfield import (
    FieldElement,
    NumberField,
    PolyOverK,
    fields_isomorphic,
    has_root_in,
    stem_factor_pattern,
    trager_factor,
)
from .galois import GaloisGroupId, GroupProperties, cycle_type_prefilter, galois_cubic, galois_quintic, group_properties
from .gf2 import BitMatrix, HeartModule, ModuleReport, Permutation, analyze, heart_module, spin, standard_generators
from .curves import CM_J_INVARIANTS, ShortWeierstrass, genus, in_cm_j_set, j_invariant, short_weierstrass
from .certify import (
    Certificate,
    Hypothesis,
    Verdict,
    certificate_to_dict,
    certificate_to_json,
    certify,
    check_setting,
    prove_linear_disjointness,
    supersingular_constraint,
)
from .polyparse import ParseError, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "CM_J_INVARIANTS",
    "BitMatrix",
    "CapabilityError",
    "Certificate",
    "FactorList",
    "FieldElement",
    "GaloisGroupId",
    "GroupProperties",
    "HeartModule",
    "Hypothesis",
    "InternalInconsistencyError",
    "InvalidInputError",
    "ModPPolynomial",
    "ModuleReport",
    "NumberField",
    "ParseError",
    "Permutation",
    "PolyOverK",
    "Polynomial",
    "ShortWeierstrass",
    "Verdict",
    "X",
    "analyze",
    "certificate_to_dict",
    "certificate_to_json",
    "certify",
    "check_setting",
    "cycle_type_prefilter",
    "discriminant",
    "factor_integer",
    "factor_mod_p",
    "factor_over_Q",
    "fields_isomorphic",
    "galois_cubic",
    "galois_quintic",
    "genus",
    "group_properties",
    "has_root_in",
    "heart_module",
    "hensel_lift",
    "in_cm_j_set",
    "is_prime",
    "is_primitive_root",
    "is_square",
    "is_squarefree",
    "j_invariant",
    "mignotte_bound",
    "multiplicative_order",
    "parse_polynomial",
    "poly_gcd",
    "prove_linear_disjointness",
    "resultant",
    "short_weierstrass",
    "spin",
    "squarefree_part",
    "standard_generators",
    "stem_factor_pattern",
    "supersingular_constraint",
    "trager_factor",
    "__version__",
]
