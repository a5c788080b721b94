import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from magnitudes.core import Rel
from magnitudes.errors import (
    InexactModelError,
    ModelMismatchError,
    OracleFailureError,
    ParseError,
)
from magnitudes.models import (
    NAT,
    RAT,
    REAL,
    Interval,
    Overlap,
    PosRat,
    PosRealValue,
    format_element,
    model_of,
    nat_make,
    parse_element,
    rat_make,
    real_add,
    real_approx,
    real_compare,
    real_from_rat,
    real_mul,
    real_subtract,
)

from conftest import isqrt_real

rationals = st.builds(PosRat, st.integers(1, 1 << 16), st.integers(1, 1 << 16))


class TestNatMake:
    def test_parse(self):
        assert nat_make("17") == 17
        assert nat_make("340282366920938463463374607431768211456") == 1 << 128

    @pytest.mark.parametrize("bad", ["0", "-3", "+2", "2.5", "x", ""])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            nat_make(bad)


class TestPosRat:
    def test_reduction(self):
        assert rat_make(4, 6) == PosRat(2, 3)
        assert str(rat_make(7, 1)) == "7/1"
        assert rat_make(100, 100) == PosRat(1, 1)

    def test_no_zero(self):
        with pytest.raises(ValueError):
            PosRat(0, 3)
        with pytest.raises(ValueError):
            PosRat(3, 0)

    def test_partial_subtraction(self):
        from magnitudes.errors import NotGreaterError

        with pytest.raises(NotGreaterError):
            PosRat(1, 2) - PosRat(1, 2)

    def test_from_text(self):
        assert PosRat.from_text("7/3") == PosRat(7, 3)
        assert PosRat.from_text("7") == PosRat(7, 1)
        with pytest.raises(ParseError):
            PosRat.from_text("7/3/2")
        with pytest.raises(ParseError):
            PosRat.from_text("0/3")

    @given(rationals)
    def test_ceil_log2(self, q):
        e = q.ceil_log2()
        assert q._le_pow2(e) and not q._le_pow2(e - 1)

    @given(rationals, rationals)
    def test_field_ops_roundtrip(self, a, b):
        assert (a * b) / b == a
        assert (a + b) - b == a

    def test_decimal_truncates(self):
        assert PosRat(1, 3).decimal(4) == "0.3333"
        assert PosRat(3, 2).decimal(2) == "1.50"
        assert PosRat(7, 1).decimal(0) == "7"


class TestInterval:
    def test_order_enforced(self):
        with pytest.raises(ValueError):
            Interval(PosRat(2, 1), PosRat(1, 1))

    def test_width_zero_allowed(self):
        point = Interval(PosRat(1, 3), PosRat(1, 3))
        assert point.width_at_most(100)

    def test_round_out_encloses(self):
        iv = Interval(PosRat(10, 7), PosRat(11, 7))
        out = iv.round_out(8)
        assert out.lo <= iv.lo and iv.hi <= out.hi
        assert out.lo.den == 256 and out.hi.den in (1, 2, 4, 8, 16, 32, 64, 128, 256)

    @given(rationals, rationals)
    def test_intersect(self, a, b):
        lo, hi = (a, b) if a <= b else (b, a)
        iv = Interval(lo, hi)
        assert iv.intersects(iv)
        assert iv.contains(iv.midpoint())


class TestPosRealValue:
    def test_exact_point(self):
        x = real_from_rat(PosRat(1, 3))
        iv = real_approx(x, 10)
        assert iv.lo == iv.hi == PosRat(1, 3)
        assert x.exact == PosRat(1, 3)

    def test_memoization_identity(self):
        x = isqrt_real(2)
        assert x.approx(12) == x.approx(12)

    def test_width_contract_enforced(self):
        wide = PosRealValue(lambda p: Interval(PosRat(1, 1), PosRat(3, 1)))
        with pytest.raises(OracleFailureError):
            wide.approx(2)

    def test_inconsistent_oracle_rejected(self):
        calls = []

        def refine(p):
            calls.append(p)
            if len(calls) == 1:
                return Interval(PosRat(1, 1), PosRat(1, 1))
            return Interval(PosRat(2, 1), PosRat(2, 1))

        x = PosRealValue(refine)
        x.approx(4)
        with pytest.raises(OracleFailureError):
            x.approx(8)

    def test_nested_refinements_intersect(self):
        x = isqrt_real(3)
        ivs = [x.approx(p) for p in (0, 3, 9, 20, 5)]
        for a in ivs:
            for b in ivs:
                assert a.intersects(b)

    def test_precision_validation(self):
        x = real_from_rat(PosRat(1, 1))
        with pytest.raises(ValueError):
            x.approx(-1)

    def test_concurrent_queries_identical(self):
        x = isqrt_real(5)
        seen = []

        def worker():
            seen.append(x.approx(40))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(iv == seen[0] for iv in seen)


class TestRealArithmetic:
    def test_add_exact_points(self):
        s = real_add(real_from_rat(PosRat(1, 4)), real_from_rat(PosRat(3, 4)))
        for p in (0, 5, 20):
            assert s.approx(p).contains(PosRat(1, 1))

    def test_add_width_contract(self, sqrt2):
        s = real_add(sqrt2, sqrt2)
        for p in (4, 10, 30):
            assert s.approx(p).width_at_most(p)

    def test_add_contains_double_sqrt2(self, sqrt2):
        s = real_add(sqrt2, sqrt2)
        eight = isqrt_real(8)
        assert s.approx(25).intersects(eight.approx(25))

    def test_mul_contains(self, sqrt2):
        prod = real_mul(sqrt2, sqrt2)
        assert prod.approx(30).contains(PosRat(2, 1))

    def test_subtract_needs_gap(self, sqrt2):
        three = real_from_rat(PosRat(3, 1))
        d = real_subtract(three, sqrt2)
        iv = d.approx(20)
        assert iv.width_at_most(20)
        # 3 - sqrt2 = 1.5857864...
        assert iv.lo < PosRat(158579, 100000)
        assert iv.hi > PosRat(158578, 100000)


class TestRealCompare:
    def test_exact_points_certify(self):
        a = real_from_rat(PosRat(1, 3))
        b = real_from_rat(PosRat(1, 2))
        assert real_compare(a, b, 4) is Rel.LESS

    def test_sqrt2_below_3_2(self, sqrt2):
        assert real_compare(sqrt2, real_from_rat(PosRat(3, 2)), 8) is Rel.LESS

    def test_self_overlaps(self, sqrt2):
        out = real_compare(sqrt2, sqrt2, 16)
        assert isinstance(out, Overlap) and out.precision == 16

    def test_certificates_stable(self, sqrt2):
        alt = real_from_rat(PosRat(141, 100))
        first = None
        for p in (4, 8, 16, 32, 64):
            out = real_compare(sqrt2, alt, p)
            if isinstance(out, Overlap):
                continue
            if first is None:
                first = out
            assert out is first

    def test_exact_order_refused(self, sqrt2):
        with pytest.raises(InexactModelError):
            REAL.order(sqrt2, sqrt2)


class TestModelDispatch:
    def test_model_of(self):
        assert model_of(3) is NAT
        assert model_of(PosRat(1, 2)) is RAT
        assert model_of(real_from_rat(PosRat(1, 2))) is REAL

    @pytest.mark.parametrize("bad", [0, -1, True, 1.5, "x"])
    def test_rejects(self, bad):
        with pytest.raises(ModelMismatchError):
            model_of(bad)

    def test_parse_and_format(self):
        assert parse_element(NAT, "12") == 12
        assert parse_element(RAT, "4/6") == PosRat(2, 3)
        real = parse_element(REAL, "3/2")
        assert real.exact == PosRat(3, 2)
        assert format_element(PosRat(2, 3)) == "2/3"
        assert format_element(12) == "12"
        assert format_element(real, precision=10) == "1.500 ± 2^-10"

    def test_descriptors(self):
        assert NAT.descriptor.discrete and NAT.descriptor.smallest == 1
        assert RAT.descriptor.symmetric and not RAT.descriptor.discrete
        assert REAL.descriptor.continuous_at_oracle and not REAL.descriptor.exact_order
