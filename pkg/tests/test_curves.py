import random
from fractions import Fraction

import pytest

from nonisog.curves import CM_J_INVARIANTS, ShortWeierstrass, genus, in_cm_j_set, j_invariant, short_weierstrass
from nonisog.errors import InvalidInputError
from nonisog.polys import X


class TestShortWeierstrass:
    def test_already_depressed(self):
        w = short_weierstrass(X**3 - 15 * X + 22)
        assert (w.a, w.b) == (-15, 22)

    def test_depression(self):
        w = short_weierstrass(X**3 + X**2 - 2 * X - 1)
        assert (w.a, w.b) == (Fraction(-7, 3), Fraction(-7, 27))

    def test_repeated_root_rejected(self):
        with pytest.raises(InvalidInputError):
            short_weierstrass(X**3)
        with pytest.raises(InvalidInputError):
            short_weierstrass((X - 1) ** 2 * (X + 2))

    def test_degree_check(self):
        with pytest.raises(InvalidInputError):
            short_weierstrass(X**2 - 1)

    def test_singular_model_rejected(self):
        with pytest.raises(InvalidInputError):
            ShortWeierstrass(Fraction(-3), Fraction(2))  # 4*(-27) + 27*4 = 0


class TestJInvariant:
    @pytest.mark.parametrize(
        "f,expected",
        [
            (X**3 - 5, 0),
            (X**3 - 15 * X + 22, 54000),
            (X**3 - X, 1728),
            (X**3 - X - 1, Fraction(-6912, 23)),
            (X**3 - 1, 0),
        ],
    )
    def test_values(self, f, expected):
        assert j_invariant(f) == expected

    def test_cm_set_membership(self):
        assert in_cm_j_set(0)
        assert in_cm_j_set(54000)
        assert in_cm_j_set(-12288000)
        assert not in_cm_j_set(1728)
        assert CM_J_INVARIANTS == (0, 2**4 * 3**3 * 5**3, -(2**15) * 3 * 5**3)

    @pytest.mark.parametrize("a", [-1, 1, 2, 4, 7])
    def test_shanks_curves_outside_cm_set(self, a):
        h = X**3 - a * X**2 - (a + 3) * X - 1
        assert not in_cm_j_set(j_invariant(h))

    def test_twist_invariance_100_cases(self):
        rng = random.Random(1001)
        done = 0
        while done < 100:
            a, b = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
            u = Fraction(rng.randint(1, 6))
            if 4 * a**3 + 27 * b**2 == 0:
                continue
            assert j_invariant(X**3 + a * u**4 * X + b * u**6) == j_invariant(X**3 + a * X + b)
            done += 1

    def test_translation_invariance_100_cases(self):
        rng = random.Random(1002)
        done = 0
        while done < 100:
            f = X**3 + rng.randint(-9, 9) * X**2 + rng.randint(-9, 9) * X + rng.randint(-9, 9)
            c = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            try:
                j = j_invariant(f)
            except InvalidInputError:
                continue
            assert j_invariant(f.shift(c)) == j
            done += 1

    def test_leading_coefficient_absorbed(self):
        assert j_invariant(2 * X**3 - 2 * X) == j_invariant(X**3 - X)
        assert j_invariant(-X**3 + X + 1) == j_invariant((-X**3 + X + 1))  # well-defined


def test_genus():
    assert genus(3) == 1
    assert genus(5) == 2
    assert genus(11) == 5
    with pytest.raises(InvalidInputError):
        genus(4)
    with pytest.raises(InvalidInputError):
        genus(1)
