import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnitudes.core import Rel
from magnitudes.errors import NotAboveOneError
from magnitudes.models import PosRat, real_from_rat
from magnitudes.power import (
    MulReal,
    int_nth_root,
    into_mul,
    mul_combine,
    mul_compare,
    mul_multiple,
    nth_root,
    pow as mul_pow,
)

from conftest import isqrt_real, opaque


def as_mul(num, den=1) -> MulReal:
    return into_mul(real_from_rat(PosRat(num, den)))


class TestIntoMul:
    def test_rational_above_one(self):
        x = as_mul(3, 2)
        assert x.value.approx(x.certified_above_one).lo > PosRat(1, 1)

    def test_one_rejected(self):
        with pytest.raises(NotAboveOneError):
            as_mul(1, 1)

    def test_below_one_rejected(self):
        with pytest.raises(NotAboveOneError):
            as_mul(2, 3)

    def test_sqrt2_certifies(self, sqrt2):
        x = into_mul(sqrt2)
        assert x.value.approx(x.certified_above_one).lo > PosRat(1, 1)


class TestMulCombine:
    def test_exact(self):
        got = mul_combine(as_mul(3, 2), as_mul(4, 3))
        assert got.value.exact == PosRat(2, 1)

    def test_sqrt2_squared(self, sqrt2):
        got = mul_combine(into_mul(sqrt2), into_mul(sqrt2))
        assert got.approx(25).contains(PosRat(2, 1))

    def test_product_exceeds_factor(self, sqrt2):
        x, y = into_mul(sqrt2), as_mul(3, 2)
        assert mul_compare(mul_combine(x, y), y) is Rel.GREATER


class TestMulMultiple:
    def test_examples(self):
        assert mul_multiple(3, as_mul(2)).value.exact == PosRat(8, 1)
        assert mul_multiple(1, as_mul(5)).value.exact == PosRat(5, 1)
        assert mul_multiple(10, as_mul(3, 2)).value.exact == PosRat(59049, 1024)

    def test_agrees_with_repeated_combine(self, sqrt2):
        x = into_mul(sqrt2)
        by_multiple = mul_multiple(4, x)
        by_combine = mul_combine(mul_combine(x, x), mul_combine(x, x))
        assert by_multiple.approx(25).intersects(by_combine.approx(25))

    @given(st.integers(2, 40), st.integers(1, 12))
    def test_exact_powers(self, base, n):
        got = mul_multiple(n, as_mul(base))
        assert got.value.exact == PosRat(base**n, 1)


class TestIntNthRoot:
    @given(st.integers(1, 10**18), st.integers(1, 12))
    def test_floor_root(self, k, n):
        r = int_nth_root(k, n)
        assert r**n <= k < (r + 1) ** n

    def test_matches_isqrt(self):
        for k in (1, 2, 3, 99, 10**12, 10**12 + 1):
            assert int_nth_root(k, 2) == math.isqrt(k)

    def test_validation(self):
        with pytest.raises(ValueError):
            int_nth_root(0, 2)


class TestNthRoot:
    def test_sqrt2_against_isqrt_oracle(self):
        r = nth_root(as_mul(2), 2, 30)
        assert r.approx(30).intersects(isqrt_real(2).approx(30))

    def test_exact_cube(self):
        r = nth_root(as_mul(8), 3, 20)
        assert r.value.exact == PosRat(2, 1)

    def test_exact_rational_root(self):
        r = nth_root(as_mul(9, 4), 2, 20)
        assert r.value.exact == PosRat(3, 2)

    def test_identity_root(self, sqrt2):
        x = into_mul(sqrt2)
        assert nth_root(x, 1, 10) is x

    def test_width_contract(self):
        r = nth_root(as_mul(5), 3, 4)
        for p in (4, 10, 25):
            assert r.approx(p).width_at_most(p)

    def test_opaque_base(self, sqrt2):
        # sqrt(sqrt(2)) = 2^(1/4)
        r = nth_root(into_mul(sqrt2), 2, 25)
        fourth = mul_multiple(4, r)
        assert fourth.approx(20).contains(PosRat(2, 1))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 60), st.integers(2, 5))
    def test_roundtrip(self, base, n):
        r = nth_root(as_mul(base), n, 34)
        back = mul_multiple(n, r)
        assert back.approx(30).contains(PosRat(base, 1))

    def test_validation(self):
        with pytest.raises(ValueError):
            nth_root(as_mul(2), 0, 10)
        with pytest.raises(ValueError):
            nth_root(as_mul(2), 2, -1)


class TestPow:
    def test_integer_exponent(self):
        assert mul_pow(as_mul(2), 3, 10).value.exact == PosRat(8, 1)

    def test_unit_exponent(self, sqrt2):
        x = into_mul(sqrt2)
        got = mul_pow(x, PosRat(1, 1), 20)
        assert got.approx(20).intersects(x.approx(20))

    def test_sqrt_via_pow_matches_isqrt_oracle(self):
        got = mul_pow(as_mul(2), PosRat(1, 2), 40)
        iv = got.approx(40)
        oracle = isqrt_real(2).approx(80)
        assert iv.lo <= oracle.lo and oracle.hi <= iv.hi
        assert iv.width_at_most(40)

    def test_fractional_exponent(self):
        # 8^(2/3) = 4
        got = mul_pow(as_mul(8), PosRat(2, 3), 30)
        assert got.approx(30).contains(PosRat(4, 1))

    def test_large_denominator_uses_dyadic_path(self):
        y = PosRat(100001, 100000)
        got = mul_pow(as_mul(2), y, 20)
        iv = got.approx(20)
        mid = iv.midpoint()
        assert abs(mid.num / mid.den - 2.0 ** (100001 / 100000)) < 1e-5

    def test_real_exponent(self, sqrt2):
        got = mul_pow(as_mul(2), sqrt2, 16)
        iv = got.approx(16)
        mid = iv.midpoint()
        assert abs(mid.num / mid.den - 2.0 ** (2.0**0.5)) < 1e-3

    def test_exact_real_exponent_delegates(self):
        got = mul_pow(as_mul(3), real_from_rat(PosRat(2, 1)), 10)
        assert got.value.exact == PosRat(9, 1)

    def test_base_law_instance(self):
        p = 40
        y = PosRat(1, 3)
        lhs = mul_pow(mul_combine(as_mul(3, 2), as_mul(5, 2)), y, p)
        rhs = mul_combine(mul_pow(as_mul(3, 2), y, p), mul_pow(as_mul(5, 2), y, p))
        assert lhs.approx(p).intersects(rhs.approx(p))

    def test_exponent_law_instance(self):
        p = 40
        x = as_mul(2)
        lhs = mul_pow(x, PosRat(1, 2) + PosRat(1, 3), p)
        rhs = mul_combine(mul_pow(x, PosRat(1, 2), p), mul_pow(x, PosRat(1, 3), p))
        assert lhs.approx(p).intersects(rhs.approx(p))

    def test_monotone_in_exponent(self):
        low = mul_pow(as_mul(2), PosRat(1, 3), 30)
        high = mul_pow(as_mul(2), PosRat(1, 2), 30)
        assert mul_compare(low, high) is Rel.LESS

    def test_validation(self):
        with pytest.raises(ValueError):
            mul_pow(as_mul(2), PosRat(1, 2), -1)
        with pytest.raises(TypeError):
            mul_pow(as_mul(2), 1.5, 10)

    @settings(max_examples=12, deadline=None)
    @given(st.integers(2, 12), st.integers(1, 6), st.integers(2, 6))
    def test_root_path_agrees_with_dyadic_path(self, base, m, n):
        # two independent evaluators of one embedding must agree wherever
        # their intervals are queried
        from magnitudes.power import _pow_bracketed, _rat_dyadic_bounds

        y = PosRat(m, n)
        p = 24
        via_root = mul_pow(as_mul(base), y, p)
        via_dyadic = _pow_bracketed(as_mul(base), _rat_dyadic_bounds(y), p)
        assert via_root.approx(p).intersects(via_dyadic.approx(p))
