"""The executable law suite.

Every fact stated in the other demos is registered as a seeded, shrinking
property.  Suites run deterministically; a failure is reported as a
locally minimal counterexample.  To show the machinery actually bites, the
second half of this script deliberately breaks subtraction and watches the
separation law catch it.
"""

from magnitudes import core, law_sets, list_laws, run_suite
from magnitudes.models import model_of

print("== registry ==")
index = list_laws()
print(f"{len(index)} laws across sets: {', '.join(law_sets())}")
classical = [e["lawId"] for e in index if e["lawId"].startswith("V.")]
print(f"{len(classical)} classical proportion laws, e.g.:")
for entry in index:
    if entry["lawId"] in ("V.12-sum-of-proportionals", "V.16-alternation", "V.17-separation"):
        print(f"  {entry['lawId']}: {entry['statement']}")

print("\n== a clean run ==")
for law_set, model in (("core_axioms", "nat"), ("euclid_v", "rat")):
    reports = run_suite(model, law_set, trials=300, seed=42)
    status = "all pass" if all(r.passed for r in reports) else "FAILURES"
    print(f"{law_set} on {model}: {len(reports)} laws x 300 trials -> {status}")

print("\n== breaking subtraction on purpose ==")
original = core.subtract


def doubled_difference(b, a, model=None):
    d = original(b, a, model)
    m = model if model is not None else model_of(b)
    return m.combine(d, d)


core.subtract = doubled_difference
try:
    reports = run_suite("rat", "euclid_v", trials=100, seed=3)
    for report in reports:
        if not report.passed:
            failure = report.failures[0]
            print(f"{report.law_id} FAILS with shrunk counterexample:")
            print(f"  inputs   {failure['inputs']}")
            print(f"  observed {failure['observed']}")
            print(f"  expected {failure['expected']}")
finally:
    core.subtract = original

print("\nrestored; clean again:",
      all(r.passed for r in run_suite("rat", "euclid_v", trials=50, seed=3)))
