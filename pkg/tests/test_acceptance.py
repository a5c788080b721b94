"""Acceptance gate: one test per shipping criterion, at its stated tolerance.

Each test prints a single PASS line on success (run with -s to see them all);
a failure reads as the criterion's name.
"""

import random
import time
from fractions import Fraction

from magnitudes import core, laws, ratio
from magnitudes.embed import anchor_embedding, evaluate, fourth_proportional, nat_embedding
from magnitudes.hom import product, psi, quotient
from magnitudes.models import PosRat, model_of, real_from_rat
from magnitudes.power import into_mul, mul_combine, pow as mul_pow
from magnitudes.ratio import ratio_compare, verify_witness

from conftest import isqrt_real, opaque


def _report(name):
    print(f"ACCEPTANCE PASS: {name}")


def _rand_rat(rng, bound=1 << 16):
    return PosRat(rng.randint(1, bound), rng.randint(1, bound))


def test_axiom_suite_core_axioms_exact():
    """core_axioms: 1000 seeded trials per law on nat and rat, exact, < 10 s."""
    start = time.time()
    failures = []
    for model_id, seed in (("nat", 7), ("rat", 7)):
        for report in laws.run_suite(model_id, "core_axioms", trials=1000, seed=seed):
            failures.extend(report.failures)
    elapsed = time.time() - start
    assert not failures, failures
    assert elapsed < 10.0, f"core axiom suite took {elapsed:.1f}s"
    _report(f"axiom suite (12 law runs x 1000 trials, {elapsed:.1f}s)")


def test_euclid_suite_24_laws():
    """All 24 registered classical laws: 1000 trials each on rat, < 60 s."""
    start = time.time()
    reports = laws.run_suite("rat", "euclid_v", trials=1000, seed=42)
    elapsed = time.time() - start
    assert len(reports) == 24
    bad = [(r.law_id, r.failures) for r in reports if not r.passed]
    assert not bad, bad
    assert elapsed < 60.0, f"euclid suite took {elapsed:.1f}s"
    _report(f"euclid suite (24 laws x 1000 trials, {elapsed:.1f}s)")


def test_ratio_engine_against_cross_multiplication():
    """10,000 random rational ratio pairs: full agreement, verified witnesses,
    no Unknown on exact models."""
    rng = random.Random(1234)
    strict = 0
    for _ in range(10_000):
        a, b, c, d = (_rand_rat(rng, 1000) for _ in range(4))
        verdict = ratio_compare(a, b, c, d)
        assert not verdict.is_unknown
        v1 = Fraction(a.num, a.den) / Fraction(b.num, b.den)
        v2 = Fraction(c.num, c.den) / Fraction(d.num, d.den)
        if v1 == v2:
            assert verdict.is_equal, (a, b, c, d)
        elif v1 > v2:
            assert verdict.is_greater, (a, b, c, d)
            assert verify_witness(verdict.witness, a, b, c, d), (a, b, c, d, verdict)
            strict += 1
        else:
            assert verdict.is_less, (a, b, c, d)
            assert verify_witness(verdict.witness, c, d, a, b), (a, b, c, d, verdict)
            strict += 1
    _report(f"ratio engine vs oracle (10000 pairs, {strict} strict verdicts verified)")


def test_multiple_fast_path_equals_naive():
    """multiple == multiple_naive for every n <= 1024 on 100 random rats."""
    rng = random.Random(99)
    from magnitudes.models import RAT

    for _ in range(100):
        a = _rand_rat(rng)
        acc = a
        assert core.multiple(1, a, RAT) == acc
        for n in range(2, 1025):
            acc = RAT.combine(acc, a)
            assert core.multiple(n, a, RAT) == acc, (a, n)
    _report("multiple fast path (100 elements x n <= 1024, exact)")


def test_fourth_proportional_at_53_bits():
    """200 random (a, b, c): interval at p=53 contains c*b/a, width <= 2^-53."""
    rng = random.Random(53)
    for _ in range(200):
        a, b, c = _rand_rat(rng, 4096), _rand_rat(rng, 4096), _rand_rat(rng, 4096)
        got = fourth_proportional(a, b, real_from_rat(c), 53)
        iv = got.approx(53)
        assert iv.width_at_most(53), (a, b, c)
        assert iv.contains(c * (b / a)), (a, b, c)
    _report("fourth proportional (200 instances at p=53)")


def test_product_quotient_real_and_rational():
    """Real product commutativity/associativity and quotient round-trip as
    interval intersection at p=53 (200 instances, inputs in [2^-8, 2^8]);
    rational fast path matches fraction arithmetic on 10,000 pairs."""
    rng = random.Random(6)
    for _ in range(200):
        qa, qb, qc = (PosRat(rng.randint(1, 256), rng.randint(1, 256)) for _ in range(3))
        x, y, z = (opaque(real_from_rat(q)) for q in (qa, qb, qc))
        assert product(x, y).approx(53).intersects(product(y, x).approx(53))
        assoc_l = product(product(x, y), z)
        assoc_r = product(x, product(y, z))
        assert assoc_l.approx(53).intersects(assoc_r.approx(53))
        back = product(quotient(x, y), y)
        assert back.approx(53).intersects(x.approx(53))

    for _ in range(10_000):
        qa, qb = _rand_rat(rng), _rand_rat(rng)
        got_mul = product(qa, qb)
        got_div = quotient(qa, qb)
        fa, fb = Fraction(qa.num, qa.den), Fraction(qb.num, qb.den)
        assert Fraction(got_mul.num, got_mul.den) == fa * fb
        assert Fraction(got_div.num, got_div.den) == fa / fb
    _report("product/quotient (200 real instances at p=53; 10000 rational pairs)")


def test_power_laws_at_40_bits():
    """pow(2, 1/2, 40) brackets the integer-square-root oracle within 2^-40;
    base and exponent laws intersect at p=40 on the fixed grid plus 100
    random cases; < 30 s."""
    start = time.time()
    p = 40
    two = into_mul(real_from_rat(PosRat(2, 1)))
    root = mul_pow(two, PosRat(1, 2), p)
    iv = root.approx(p)
    oracle = isqrt_real(2).approx(100)
    assert iv.width_at_most(p)
    assert iv.lo <= oracle.lo and oracle.hi <= iv.hi

    grid_x = [PosRat(3, 2), PosRat(2, 1), PosRat(5, 2)]
    grid_y = [PosRat(1, 3), PosRat(1, 2), PosRat(1, 1), PosRat(7, 4)]
    for x1 in grid_x:
        for x2 in grid_x:
            for y in grid_y:
                m1, m2 = into_mul(real_from_rat(x1)), into_mul(real_from_rat(x2))
                lhs = mul_pow(mul_combine(m1, m2), y, p)
                rhs = mul_combine(mul_pow(m1, y, p), mul_pow(m2, y, p))
                assert lhs.approx(p).intersects(rhs.approx(p)), (x1, x2, y)
    for x in grid_x:
        for y1 in grid_y:
            for y2 in grid_y:
                m = into_mul(real_from_rat(x))
                lhs = mul_pow(m, y1 + y2, p)
                rhs = mul_combine(mul_pow(m, y1, p), mul_pow(m, y2, p))
                assert lhs.approx(p).intersects(rhs.approx(p)), (x, y1, y2)

    rng = random.Random(40)
    for _ in range(100):
        x1 = PosRat(rng.randint(2, 40), 1) + PosRat(rng.randint(1, 16), 16)
        x2 = PosRat(rng.randint(2, 40), 1) + PosRat(rng.randint(1, 16), 16)
        y = PosRat(rng.randint(1, 8), rng.randint(1, 8))
        y2 = PosRat(rng.randint(1, 8), rng.randint(1, 8))
        m1, m2 = into_mul(real_from_rat(x1)), into_mul(real_from_rat(x2))
        lhs = mul_pow(mul_combine(m1, m2), y, p)
        rhs = mul_combine(mul_pow(m1, y, p), mul_pow(m2, y, p))
        assert lhs.approx(p).intersects(rhs.approx(p)), (x1, x2, y)
        lhs = mul_pow(m1, y + y2, p)
        rhs = mul_combine(mul_pow(m1, y, p), mul_pow(m1, y2, p))
        assert lhs.approx(p).intersects(rhs.approx(p)), (x1, y, y2)
    elapsed = time.time() - start
    assert elapsed < 30.0, f"power laws took {elapsed:.1f}s"
    _report(f"power laws (sqrt oracle + grid + 100 random at p=40, {elapsed:.1f}s)")


def test_embedding_uniqueness_and_multiple_transport():
    """nat embedding vs anchored embedding Equal at 3 probes for 100 random
    images; chi(n*a) = n*chi(a) exactly for 1000 random (chi, n <= 256, a)."""
    from magnitudes.core import Rel
    from magnitudes.embed import embeddings_compare

    rng = random.Random(8)
    for _ in range(100):
        image = _rand_rat(rng, 4096)
        phi = nat_embedding(image)
        chi = anchor_embedding(1, image)
        probes = rng.sample(range(1, 1 << 12), 3)
        for probe in probes:
            assert embeddings_compare(phi, chi, probe) is Rel.EQUAL, (image, probe)

    from magnitudes.models import RAT

    for _ in range(1000):
        chi = psi(RAT, _rand_rat(rng, 4096))
        a = _rand_rat(rng, 4096)
        n = rng.randint(1, 256)
        lhs = chi(core.multiple(n, a, RAT))
        rhs = core.multiple(n, chi(a), RAT)
        assert lhs == rhs, (a, n)
    _report("embedding uniqueness (100 images x 3 probes; 1000 multiple transports)")


def test_hom_operator_laws_exact():
    """Distributivity both sides, composition commutativity, identity laws,
    order preservation: 1000 probe-evaluated trials on rat, exact."""
    required = {
        "endo-distributes-left",
        "endo-distributes-right",
        "endo-compose-commutative",
        "endo-identity",
        "endo-compose-preserves-order",
    }
    reports = laws.run_suite("rat", "hom_operators", trials=1000, seed=13)
    seen = {r.law_id for r in reports}
    assert required <= seen, required - seen
    bad = [(r.law_id, r.failures) for r in reports if not r.passed]
    assert not bad, bad
    _report(f"hom operator laws ({len(reports)} laws x 1000 trials, exact)")


def test_mutation_smoke(monkeypatch):
    """Broken subtract and broken witness verification must each surface as
    at least one failing law with a shrunk counterexample."""
    original = core.subtract

    def doubled(b, a, model=None):
        d = original(b, a, model)
        m = model if model is not None else model_of(b)
        return m.combine(d, d)

    monkeypatch.setattr(core, "subtract", doubled)
    reports = laws.run_suite("rat", "euclid_v", trials=50, seed=3)
    failed = {r.law_id: r for r in reports if not r.passed}
    monkeypatch.setattr(core, "subtract", original)
    assert failed, "broken subtract went unnoticed"
    assert "V.17-separation" in failed
    sample = next(iter(failed.values())).failures[0]
    assert sample["inputs"] and sample["observed"] and sample["expected"]

    monkeypatch.setattr(ratio, "verify_witness", lambda *a, **k: True)
    reports = laws.run_suite("rat", "ratio_engine", trials=50, seed=3)
    accepting = {r.law_id for r in reports if not r.passed}
    assert "engine-rejects-bogus-witness" in accepting
    _report("mutation smoke (broken subtract and broken verifier both caught)")
