"""Ratio comparison with certifying witnesses.

Two pairs (a, b) and (a2, b2), possibly from different models, stand in the
same ratio when every multiplier pair (m, n) orders m*a against n*b the same
way it orders m*a2 against n*b2.  A strict verdict is certified by a witness
(m, n) exhibiting m*a > n*b while m*a2 <= n*b2; equivalently, the fraction
n/m separates the two ratio values.

The engine decides exact-model comparisons outright by collapsing each ratio
to a reduced fraction.  Mixed or real comparisons walk the mediant tree of
candidate separating fractions, classifying each candidate with certified
interval comparisons at escalating precision; an explicit fuel budget makes
the search total, with Unknown as the honest out-of-budget answer: equal,
or closer than fuel resolves, never a wrong verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from . import core
from .core import Rel
from .errors import InexactModelError
from .mediants import simplest_in
from .models import (
    Model,
    Overlap,
    PosRat,
    model_of,
    real_compare,
)

__all__ = [
    "Ratio",
    "Witness",
    "RatioRel",
    "make_ratio",
    "have_ratio_witness",
    "ratio_value_exact",
    "ratio_compare",
    "verify_witness",
]


@dataclass(frozen=True)
class Ratio:
    """An ordered pair of elements from one model, read antecedent : consequent."""

    antecedent: object
    consequent: object
    model_id: str


def make_ratio(antecedent, consequent) -> Ratio:
    model = model_of(antecedent)
    model.check(consequent)
    return Ratio(antecedent, consequent, model.descriptor.model_id)


@dataclass(frozen=True)
class Witness:
    """Multiplier pair certifying a strict ratio inequality.

    For a Greater verdict on ((a, b), (a2, b2)): m*a > n*b and m*a2 <= n*b2.
    A Less verdict carries the same witness read against the swapped pairs.
    """

    m: int
    n: int

    def __str__(self) -> str:
        return f"m={self.m} n={self.n}"

    def as_json(self) -> dict:
        return {"m": str(self.m), "n": str(self.n)}


@dataclass(frozen=True)
class RatioRel:
    """Engine verdict: Equal, Greater(w), Less(w), or Unknown(fuel_spent)."""

    kind: str
    witness: Optional[Witness] = None
    fuel_spent: int = 0
    precision_cap: int = 0

    @staticmethod
    def equal(fuel_spent: int = 0) -> "RatioRel":
        return RatioRel("equal", fuel_spent=fuel_spent)

    @staticmethod
    def greater(witness: Witness, fuel_spent: int = 0) -> "RatioRel":
        return RatioRel("greater", witness, fuel_spent)

    @staticmethod
    def less(witness: Witness, fuel_spent: int = 0) -> "RatioRel":
        return RatioRel("less", witness, fuel_spent)

    @staticmethod
    def unknown(fuel_spent: int, precision_cap: int) -> "RatioRel":
        return RatioRel("unknown", None, fuel_spent, precision_cap)

    @property
    def is_equal(self) -> bool:
        return self.kind == "equal"

    @property
    def is_greater(self) -> bool:
        return self.kind == "greater"

    @property
    def is_less(self) -> bool:
        return self.kind == "less"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def kind_tag(self) -> Rel:
        """Decided verdict as an order tag; Unknown has none."""
        if self.is_unknown:
            raise ValueError("unknown verdict carries no order tag")
        return {"equal": Rel.EQUAL, "greater": Rel.GREATER, "less": Rel.LESS}[self.kind]


def have_ratio_witness(a, b) -> Tuple[int, int]:
    """Least (m, n) with m*a > b and n*b > a.

    Exists for every pair of an Archimedean model; this is the executable
    form of "the pair has a ratio".
    """
    model = model_of(a)
    model.check(b)
    return (
        core.find_multiple_exceeding(a, b, model),
        core.find_multiple_exceeding(b, a, model),
    )


def ratio_value_exact(r: Ratio) -> PosRat:
    """Collapse an exact-model ratio to its reduced fraction a/b.

    Two exact-model ratios are same-ratio precisely when these values match;
    scaling both terms by a common multiplier leaves the value unchanged.
    """
    from .models import model_by_id

    model = model_by_id(r.model_id)
    if not model.descriptor.exact_order:
        raise InexactModelError("ratio values collapse exactly only on nat/rat")
    if model.descriptor.model_id == "nat":
        return PosRat(r.antecedent, r.consequent)
    return r.antecedent / r.consequent


def _schedule_for(cap: int) -> Tuple[int, ...]:
    rungs = []
    p = 4
    while p < cap:
        rungs.append(p)
        p *= 2
    rungs.append(cap)
    return tuple(rungs)


def _rel_vs_fraction(x, y, n: int, m: int, model: Model, schedule) -> Tuple[Optional[Rel], Rel]:
    """Relation of the ratio x:y to the fraction n/m.

    Compares m*x against n*y.  Returns (certified, guess): certified is None
    when a real comparison stays overlapped at the schedule cap; guess is a
    best-effort direction used only to steer the search, never for verdicts.
    """
    u = core.multiple(m, x, model)
    v = core.multiple(n, y, model)
    if model.descriptor.exact_order:
        tag = model.order(u, v).tag
        return tag, tag
    out = None
    for p in schedule:
        out = real_compare(u, v, p)
        if not isinstance(out, Overlap):
            return out, out
    cap = schedule[-1]
    mid_u = u.approx(cap).midpoint()
    mid_v = v.approx(cap).midpoint()
    return None, (Rel.GREATER if mid_u > mid_v else Rel.LESS)


def _exact_separator(lower: PosRat, upper: PosRat) -> Witness:
    """Witness from the simplest fraction s with lower <= s < upper."""
    s = simplest_in(lower, upper, include_lo=True, include_hi=False)
    return Witness(m=s.den, n=s.num)


def _boundary_upgrade(j: int, k: int, eq_pair, lt_pair, schedule) -> Optional[Witness]:
    """Sharpen a boundary separator into a strictly certified witness.

    Inputs: j*a = k*b exactly on eq_pair while lt_pair's ratio is certified
    below k/j.  Then for a large enough multiplier p, the fraction
    (pk - 1)/(pj) still exceeds lt_pair's ratio but falls strictly below
    k/j, giving a witness with both inequalities strict.
    """
    a, b, model_eq = eq_pair
    a2, b2, model_lt = lt_pair
    p = 1
    for _ in range(64):
        m_star, n_star = p * j, p * k - 1
        if n_star >= 1:
            first, _ = _rel_vs_fraction(a, b, n_star, m_star, model_eq, schedule)
            second, _ = _rel_vs_fraction(a2, b2, n_star, m_star, model_lt, schedule)
            if first is Rel.GREATER and second is Rel.LESS:
                return Witness(m=m_star, n=n_star)
        p *= 2
    return None


def ratio_compare(a, b, a2, b2, fuel: int = 64) -> RatioRel:
    """Compare the ratio a:b with a2:b2 across (possibly different) models.

    Exact models are decided outright through their ratio values.  Otherwise
    the mediant walk searches for a separating fraction; each candidate costs
    one unit of fuel, and real sub-comparisons escalate precision up to a cap
    tied to the fuel budget.
    """
    if isinstance(fuel, bool) or not isinstance(fuel, int) or fuel < 1:
        raise ValueError("fuel must be an integer >= 1")
    model1 = model_of(a)
    model1.check(b)
    model2 = model_of(a2)
    model2.check(b2)

    if model1.descriptor.exact_order and model2.descriptor.exact_order:
        v1 = ratio_value_exact(Ratio(a, b, model1.descriptor.model_id))
        v2 = ratio_value_exact(Ratio(a2, b2, model2.descriptor.model_id))
        if v1 == v2:
            return RatioRel.equal()
        if v1 > v2:
            return RatioRel.greater(_exact_separator(v2, v1))
        return RatioRel.less(_exact_separator(v1, v2))

    cap = max(16, 4 * fuel)
    schedule = _schedule_for(cap)
    lo = (0, 1)  # fractions as (numerator, denominator); 0/1 and 1/0 bracket
    hi = (1, 0)
    spent = 0
    while spent < fuel:
        spent += 1
        sn, sm = lo[0] + hi[0], lo[1] + hi[1]
        r1, g1 = _rel_vs_fraction(a, b, sn, sm, model1, schedule)
        r2, g2 = _rel_vs_fraction(a2, b2, sn, sm, model2, schedule)

        if r1 is Rel.GREATER and r2 in (Rel.LESS, Rel.EQUAL):
            return RatioRel.greater(Witness(m=sm, n=sn), spent)
        if r2 is Rel.GREATER and r1 in (Rel.LESS, Rel.EQUAL):
            return RatioRel.less(Witness(m=sm, n=sn), spent)
        if r1 is Rel.EQUAL and r2 is Rel.LESS:
            w = _boundary_upgrade(sm, sn, (a, b, model1), (a2, b2, model2), schedule)
            if w is not None:
                return RatioRel.greater(w, spent)
        if r2 is Rel.EQUAL and r1 is Rel.LESS:
            w = _boundary_upgrade(sm, sn, (a2, b2, model2), (a, b, model1), schedule)
            if w is not None:
                return RatioRel.less(w, spent)
        if r1 is Rel.EQUAL and r2 is Rel.EQUAL:
            return RatioRel.equal(spent)

        # no separator here: steer by the certified tags when available,
        # by midpoint guesses otherwise
        d1 = r1 if r1 is not None else g1
        d2 = r2 if r2 is not None else g2
        if d1 is Rel.GREATER and d2 is Rel.GREATER:
            lo = (sn, sm)
        elif d1 is Rel.LESS and d2 is Rel.LESS:
            hi = (sn, sm)
        elif Rel.GREATER in (d1, d2):
            lo = (sn, sm)
        else:
            hi = (sn, sm)
    return RatioRel.unknown(spent, cap)


def verify_witness(w: Witness, a, b, a2, b2, fuel: int = 64) -> bool:
    """Check both witness inequalities for a Greater verdict on ((a,b),(a2,b2)).

    m*a > n*b must be exactly or certificate-grade strict; m*a2 <= n*b2 is
    accepted exactly on exact models, and on the real model when no strict
    'greater' certificate is obtainable on the precision schedule.
    """
    if w.m < 1 or w.n < 1:
        return False
    model1 = model_of(a)
    model2 = model_of(a2)
    schedule = _schedule_for(max(16, 4 * fuel))
    first, _ = _rel_vs_fraction(a, b, w.n, w.m, model1, schedule)
    if first is not Rel.GREATER:
        return False
    second, _ = _rel_vs_fraction(a2, b2, w.n, w.m, model2, schedule)
    if second is Rel.GREATER:
        return False
    if second is None and model2.descriptor.exact_order:
        return False
    return True
