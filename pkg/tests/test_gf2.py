import random

import pytest

from helpers import all_nontrivial_proper_subspaces, subspace_invariant
from nonisog.errors import CapabilityError, InvalidInputError
from nonisog.gf2 import (
    BitMatrix,
    Permutation,
    analyze,
    generated_group,
    heart_module,
    permutation_heart_matrix,
    spin,
    standard_generators,
)


class TestPermutation:
    def test_bijectivity_enforced(self):
        with pytest.raises(InvalidInputError):
            Permutation((1, 1, 3))

    def test_cycles_and_composition(self):
        p = Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])
        q = Permutation.from_cycles(5, [(1, 2)])
        assert (p * q)(1) == 1  # 1 -> 2 -> 1 (apply p, then q)
        assert (q * p)(1) == 3  # 1 -> 2 -> 3
        assert p.inverse() * p == Permutation.identity(5)
        assert p.cycle_type() == (5,)
        assert q.cycle_type() == (2, 1, 1, 1)

    def test_str(self):
        assert str(Permutation.from_cycles(5, [(2, 3, 5, 4)])) == "(2 3 5 4)"
        assert str(Permutation.identity(3)) == "()"


class TestStandardGenerators:
    @pytest.mark.parametrize(
        "tag,n,order",
        [
            ("C5", 5, 5),
            ("D5", 5, 10),
            ("F20", 5, 20),
            ("A5", 5, 60),
            ("S5", 5, 120),
            ("C3", 3, 3),
            ("S3", 3, 6),
            ("C7", 7, 7),
            ("C11", 11, 11),
        ],
    )
    def test_orders(self, tag, n, order):
        assert len(generated_group(standard_generators(tag, n))) == order

    def test_c5_is_single_cycle(self):
        gens = standard_generators("C5", 5)
        assert len(gens) == 1 and gens[0].cycle_type() == (5,)

    def test_s3_generators(self):
        gens = standard_generators("S3", 3)
        assert [str(g) for g in gens] == ["(1 2)", "(1 2 3)"]

    def test_incompatible_pairs(self):
        with pytest.raises(InvalidInputError):
            standard_generators("F20", 3)
        with pytest.raises(InvalidInputError):
            standard_generators("S5", 7)
        with pytest.raises(InvalidInputError):
            standard_generators("C9", 9)
        with pytest.raises(InvalidInputError):
            standard_generators("Reducible", 5)


class TestHeartConstruction:
    def test_transposition_swaps_basis(self):
        m = permutation_heart_matrix(Permutation.from_cycles(3, [(1, 2)]))
        assert m.rows == (0b10, 0b01)

    def test_identity(self):
        m = permutation_heart_matrix(Permutation.identity(3))
        assert m.rows == BitMatrix.identity(2).rows

    def test_five_cycle_satisfies_cyclotomic_minimal_polynomial(self):
        a = permutation_heart_matrix(Permutation.from_cycles(5, [(1, 2, 3, 4, 5)]))
        powers = [BitMatrix.identity(4)]
        for _ in range(5):
            powers.append(powers[-1] * a)
        acc = tuple(
            powers[0].rows[i] ^ powers[1].rows[i] ^ powers[2].rows[i] ^ powers[3].rows[i] ^ powers[4].rows[i]
            for i in range(4)
        )
        assert all(r == 0 for r in acc)  # 1 + A + A^2 + A^3 + A^4 = 0
        assert powers[5].rows == powers[0].rows  # A^5 = 1
        assert a.rows != powers[0].rows

    def test_representation_is_homomorphism(self):
        rng = random.Random(19)
        for n in (3, 5, 7):
            for _ in range(40):
                images = list(range(1, n + 1))
                rng.shuffle(images)
                p = Permutation(tuple(images))
                rng.shuffle(images)
                q = Permutation(tuple(images))
                assert permutation_heart_matrix(p * q).rows == (
                    permutation_heart_matrix(p) * permutation_heart_matrix(q)
                ).rows

    def test_generators_invertible(self):
        for tag, n in [("S5", 5), ("C7", 7), ("A5", 5)]:
            for m in heart_module(n, standard_generators(tag, n)).generators:
                assert m.is_invertible

    def test_even_n_rejected(self):
        with pytest.raises(InvalidInputError):
            heart_module(4, [Permutation.identity(4)])
        with pytest.raises(InvalidInputError):
            heart_module(5, [])


class TestSpin:
    def test_full_space_in_simple_module(self):
        module = heart_module(5, standard_generators("C5", 5))
        for v in range(1, 16):
            assert spin(module, v).n_rows == 4

    def test_cubic_factor_subspace_mod_7(self):
        module = heart_module(7, standard_generators("C7", 7))
        # v1 + v2 + v4: supported on a residue pattern aligned with a cubic
        # factor of x^7 - 1 over F2
        assert spin(module, 0b0001011).n_rows == 3

    def test_identity_generators(self):
        module = heart_module(3, [Permutation.identity(3)])
        assert spin(module, 0b01).n_rows == 1

    def test_zero_vector_rejected(self):
        module = heart_module(3, standard_generators("S3", 3))
        with pytest.raises(InvalidInputError):
            spin(module, 0)
        with pytest.raises(InvalidInputError):
            spin(module, 1 << 5)


ANALYSIS_TABLE = [
    ("S3", 3, True, 1),
    ("C3", 3, True, 2),
    ("C5", 5, True, 4),
    ("D5", 5, True, 2),
    ("F20", 5, True, 1),
    ("A5", 5, True, 1),
    ("S5", 5, True, 1),
    ("C7", 7, False, 6),
    ("C11", 11, True, 10),
    ("C13", 13, True, 12),
]


class TestAnalyze:
    @pytest.mark.parametrize("tag,n,simple,end_dim", ANALYSIS_TABLE)
    def test_table(self, tag, n, simple, end_dim):
        report = analyze(heart_module(n, standard_generators(tag, n)))
        assert report.simple == simple
        assert report.endomorphism_dim == end_dim
        assert report.absolutely_simple == (simple and end_dim == 1)

    def test_simplicity_tracks_2_being_primitive(self):
        # cyclic heart simple exactly when 2 generates the residues mod n
        from nonisog.ints import is_primitive_root

        for n in (3, 5, 7, 11, 13):
            report = analyze(heart_module(n, standard_generators(f"C{n}", n)))
            assert report.simple == is_primitive_root(2, n)

    @pytest.mark.parametrize("tag,n", [("S3", 3), ("C3", 3), ("C5", 5), ("D5", 5), ("F20", 5), ("A5", 5), ("S5", 5), ("C7", 7)])
    def test_against_subspace_enumeration_oracle(self, tag, n):
        module = heart_module(n, standard_generators(tag, n))
        assert module.dim <= 6
        has_invariant = any(
            subspace_invariant(basis, module.generators)
            for basis in all_nontrivial_proper_subspaces(module.dim)
        )
        assert analyze(module).simple == (not has_invariant)

    def test_dimension_cap(self):
        with pytest.raises(CapabilityError):
            analyze(heart_module(29, standard_generators("C29", 29)))
