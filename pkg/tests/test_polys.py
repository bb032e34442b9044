import random
from fractions import Fraction

import pytest

from helpers import sylvester_resultant
from nonisog.errors import InvalidInputError
from nonisog.polys import Polynomial, X, discriminant, interpolate, poly_gcd, poly_xgcd, resultant


def rand_poly(rng, max_deg, lo=-9, hi=9, nonzero=True):
    deg = rng.randint(0, max_deg)
    cs = [rng.randint(lo, hi) for _ in range(deg)]
    lead = rng.randint(lo, hi)
    while nonzero and lead == 0:
        lead = rng.randint(lo, hi)
    return Polynomial(cs + [lead])


class TestPolynomialBasics:
    def test_canonical_form(self):
        assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert Polynomial(()).is_zero
        assert Polynomial((0,)).is_zero
        assert Polynomial((0, 0)).degree == -1

    def test_arithmetic(self):
        f = X**2 + 3 * X + 2
        g = X + 1
        assert f == (X + 1) * (X + 2)
        q, r = divmod(f, g)
        assert q == X + 2 and r.is_zero
        assert f % (X + 3) == Polynomial((2,))
        assert (f - f).is_zero
        assert f(2) == 12

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(X, Polynomial(()))

    def test_compose_shift(self):
        f = X**3 + X**2 - 2 * X - 1
        assert f.shift(Fraction(-1, 3))[2] == 0
        assert f.compose(X) == f

    def test_immutability_and_hash(self):
        f = X + 1
        with pytest.raises(AttributeError):
            f._coeffs = ()
        assert hash(X + 1) == hash(Polynomial((1, 1)))

    def test_power(self):
        assert (X + 1) ** 0 == Polynomial((1,))
        with pytest.raises(InvalidInputError):
            (X + 1) ** -1


class TestResultant:
    def test_linear_against_quadratic(self):
        # Res(x - a, g) = g(a)
        assert resultant(X - 3, X**2 + 1) == 10

    def test_equal_degree_pair(self):
        assert resultant(X**2 + 1, X**2 - 1) == 4

    def test_derivative_pair_matches_discriminant_relation(self):
        f = X**3 - 5
        assert resultant(f, f.derivative()) == 675
        assert discriminant(f) == -675

    def test_zero_inputs(self):
        with pytest.raises(InvalidInputError):
            resultant(Polynomial(()), Polynomial(()))
        assert resultant(Polynomial(()), X + 1) == 0
        assert resultant(Polynomial((3,)), X**2 + 1) == 9

    def test_sylvester_oracle_200_cases(self):
        rng = random.Random(20240)
        checked = 0
        while checked < 200:
            f = rand_poly(rng, 5)
            g = rand_poly(rng, 5)
            if f.degree < 1 and g.degree < 1:
                continue
            assert resultant(f, g) == sylvester_resultant(f, g)
            checked += 1

    def test_symmetry(self):
        rng = random.Random(77)
        for _ in range(100):
            f = rand_poly(rng, 6)
            g = rand_poly(rng, 6)
            sign = -1 if (f.degree * g.degree) % 2 else 1
            assert resultant(f, g) == sign * resultant(g, f)

    def test_rational_coefficients(self):
        f = Fraction(1, 2) * X**2 + 1
        g = X - 2
        assert resultant(g, f) == f(2)


class TestDiscriminant:
    def test_quadratic_formula(self):
        rng = random.Random(9)
        for _ in range(50):
            b, c = rng.randint(-20, 20), rng.randint(-20, 20)
            assert discriminant(X**2 + b * X + c) == b * b - 4 * c
        assert discriminant(X**2 - 1) == 4

    def test_known_quintics(self):
        assert discriminant(X**5 - X - 1) == 2869
        assert discriminant(X**5 + 15 * X + 12) == 259200000

    def test_shanks_family(self):
        for a in range(-20, 21):
            h = X**3 - a * X**2 - (a + 3) * X - 1
            assert discriminant(h) == (a * a + 3 * a + 9) ** 2

    def test_zero_iff_repeated_root(self):
        assert discriminant((X - 1) ** 2 * (X + 2)) == 0
        assert discriminant(X**3 - 15 * X + 22) != 0

    def test_degree_requirement(self):
        with pytest.raises(InvalidInputError):
            discriminant(X + 1)

    def test_multiplicativity(self):
        # disc(fg) = disc(f) disc(g) Res(f, g)^2 for coprime squarefree f, g
        rng = random.Random(4242)
        done = 0
        while done < 100:
            f = rand_poly(rng, 4)
            g = rand_poly(rng, 4)
            if f.degree < 2 or g.degree < 2:
                continue
            if poly_gcd(f, f.derivative()).degree or poly_gcd(g, g.derivative()).degree:
                continue
            if poly_gcd(f, g).degree:
                continue
            assert discriminant(f * g) == discriminant(f) * discriminant(g) * resultant(f, g) ** 2
            done += 1


class TestGcd:
    def test_gcd_monic(self):
        f = (X - 1) ** 2 * (X + 3)
        assert poly_gcd(f, f.derivative()) == X - 1
        assert poly_gcd(f, Polynomial(())) == f.monic()

    def test_xgcd_identity(self):
        rng = random.Random(31)
        for _ in range(50):
            f, g = rand_poly(rng, 4), rand_poly(rng, 4)
            d, u, v = poly_xgcd(f, g)
            assert u * f + v * g == d
            if not d.is_zero:
                assert d.lc == 1


def test_interpolation_roundtrip():
    rng = random.Random(8)
    for _ in range(30):
        f = rand_poly(rng, 6)
        pts = [(i, f(i)) for i in range(f.degree + 1)]
        assert interpolate(pts) == f
    with pytest.raises(InvalidInputError):
        interpolate([(1, 1), (1, 2)])
