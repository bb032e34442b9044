import random
from fractions import Fraction

import pytest

from nonisog.polyparse import ParseError, parse_polynomial, render_polynomial
from nonisog.polys import Polynomial, X


class TestParsing:
    def test_reducible_cubic(self):
        assert parse_polynomial("x^3 - 15*x + 22").coeffs == (22, -15, 0, 1)

    def test_cyclic_quintic(self):
        f = parse_polynomial("x^5 - 110*x^3 - 55*x^2 + 2310*x + 979")
        assert f == X**5 - 110 * X**3 - 55 * X**2 + 2310 * X + 979

    def test_whitespace_insensitive(self):
        assert parse_polynomial("x^3-15*x+22") == parse_polynomial("  x^3 -  15 * x  + 22 ")

    def test_rational_literals(self):
        assert parse_polynomial("1/2*x^2 - 3/4") == Fraction(1, 2) * X**2 - Fraction(3, 4)

    def test_coefficient_adjacent_implicit_product(self):
        assert parse_polynomial("15x") == 15 * X
        assert parse_polynomial("x^5+15x+12") == X**5 + 15 * X + 12
        assert parse_polynomial("1/2x^3") == Fraction(1, 2) * X**3

    def test_unary_signs(self):
        assert parse_polynomial("-x^3 + 2") == -(X**3) + 2
        assert parse_polynomial("+x - 1") == X - 1
        assert parse_polynomial("-5") == Polynomial((-5,))

    def test_parentheses(self):
        assert parse_polynomial("(x+1)*(x-1)") == X**2 - 1
        assert parse_polynomial("(x+1)^2") == X**2 + 2 * X + 1

    def test_constant_and_zero(self):
        assert parse_polynomial("0").is_zero
        assert parse_polynomial("7") == Polynomial((7,))


class TestParseErrors:
    def test_dangling_caret_position(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("x^")
        assert err.value.position == 2

    def test_negative_exponent(self):
        with pytest.raises(ParseError):
            parse_polynomial("x^-1")

    def test_non_integer_exponent(self):
        with pytest.raises(ParseError):
            parse_polynomial("x^(2)")

    def test_foreign_variable(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("x + y")
        assert err.value.position == 4

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_polynomial("x 5")

    def test_unmatched_paren(self):
        with pytest.raises(ParseError):
            parse_polynomial("(x+1")

    def test_huge_exponent(self):
        with pytest.raises(ParseError):
            parse_polynomial("x^100000")

    def test_general_division_not_supported(self):
        with pytest.raises(ParseError):
            parse_polynomial("x/2")


class TestRoundTrip:
    def test_round_trip_200_random(self):
        rng = random.Random(777)
        for _ in range(200):
            deg = rng.randint(0, 8)
            coeffs = [
                Fraction(rng.randint(-99, 99), rng.randint(1, 12)) if rng.random() < 0.4 else rng.randint(-99, 99)
                for _ in range(deg + 1)
            ]
            f = Polynomial(coeffs)
            assert parse_polynomial(render_polynomial(f)) == f

    def test_round_trip_zero(self):
        assert parse_polynomial(render_polynomial(Polynomial(()))).is_zero
