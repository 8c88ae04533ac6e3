from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indexlab.exact import (
    ExactReal,
    FieldMismatchError,
    compare,
    floor_scaled,
    fractional_part,
    is_irrational,
    make,
)

from conftest import approx

SQRT2_M1 = make(-1, 1, 1, 2)  # sqrt(2) - 1


class TestMake:
    def test_irrational_value(self):
        x = SQRT2_M1
        assert (x.a, x.b, x.c, x.D) == (-1, 1, 1, 2)
        assert is_irrational(x)

    def test_gcd_normalization(self):
        x = make(2, 0, 4, 0)
        assert (x.a, x.b, x.c, x.D) == (1, 0, 2, 0)
        assert not is_irrational(x)

    def test_perfect_square_folds(self):
        # (0 + 2*sqrt(4))/2 = 2; cross-checked against the rational approximation
        x = make(0, 2, 2, 4)
        assert (x.a, x.b, x.c, x.D) == (2, 0, 1, 0)
        assert approx(x) == 2

    def test_negative_denominator_absorbed(self):
        x = make(1, 1, -2, 2)
        assert x.c == 2 and x.a == -1 and x.b == -1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            make(1, 0, 0, 0)

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            make(0, 1, 1, -2)


class TestIsIrrational:
    def test_quadratic_irrational(self):
        assert is_irrational(SQRT2_M1)

    def test_rational(self):
        assert not is_irrational(make(1, 0, 2, 0))

    def test_perfect_square_radicand(self):
        assert not is_irrational(make(0, 3, 1, 9))


class TestCompare:
    def test_cross_field_examples(self):
        # (sqrt(2)-1)^2 = 3 - 2 sqrt(2) < 1/4 by integer cross-multiplication
        assert compare(SQRT2_M1, make(1, 0, 2, 0)) < 0
        assert compare(make(3, 0, 2, 0), make(0, 1, 1, 2)) > 0

    def test_reflexive(self):
        assert compare(SQRT2_M1, SQRT2_M1) == 0

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatchError):
            compare(make(0, 1, 1, 2), make(0, 1, 1, 3))

    def test_rational_mixes_with_any_field(self):
        assert compare(make(1, 0, 1, 0), make(0, 1, 1, 3)) < 0


class TestFloorScaled:
    def test_unit_interval(self):
        assert floor_scaled(SQRT2_M1, 1) == 0

    def test_three_times(self):
        # 16 < 18 < 25 so 4 < 3 sqrt(2) < 5, hence floor(3 sqrt(2) - 3) = 1
        assert floor_scaled(SQRT2_M1, 3) == 1

    def test_rational_exact(self):
        assert floor_scaled(make(1, 0, 2, 0), 4) == 2

    def test_negative_value(self):
        assert floor_scaled(make(1, -1, 1, 2), 1) == -1  # 1 - sqrt(2)

    def test_against_rational_approximation(self):
        for m in (1, 7, 99, 12345):
            got = floor_scaled(SQRT2_M1, m)
            a = m * approx(SQRT2_M1)
            # approximation error way below the distance to any integer here
            assert got == a.numerator // a.denominator


exact_reals = st.builds(
    make,
    st.integers(-50, 50),
    st.integers(-20, 20),
    st.integers(1, 30),
    st.just(7),
)


class TestProperties:
    @given(exact_reals, st.integers(1, 10 ** 5))
    def test_floor_brackets_value(self, x, m):
        f = floor_scaled(x, m)
        mx = x * m
        assert ExactReal(f) <= mx < ExactReal(f + 1)

    @given(exact_reals, exact_reals, exact_reals)
    def test_total_order(self, x, y, z):
        assert (compare(x, y) == 0) == (x == y)
        assert compare(x, y) == -compare(y, x)
        if x <= y <= z:
            assert x <= z

    @given(exact_reals, st.integers(1, 10 ** 5))
    def test_strict_fractional_part_when_irrational(self, x, m):
        if x.is_irrational:
            assert fractional_part(x * m).sign() > 0

    @given(exact_reals, exact_reals, st.fractions())
    def test_arithmetic_closure_and_canonical_form(self, x, y, q):
        for z in (x + y, x - y, x * q, x * y):
            assert z.c > 0
            if z.b == 0:
                assert z.D == 0
            else:
                import math

                g = math.gcd(math.gcd(abs(z.a), abs(z.b)), z.c)
                assert g == 1

    @given(exact_reals)
    def test_serialization_round_trip(self, x):
        assert ExactReal.parse(x.serialize()) == x

    @given(exact_reals)
    def test_inverse(self, x):
        if x.sign() != 0:
            assert x * x.inverse() == ExactReal(1)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        ExactReal.parse("3.14")


def test_division_by_rational():
    assert SQRT2_M1 / 2 == make(-1, 1, 2, 2)
