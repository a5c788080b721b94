"""The magnitude space of embeddings, and the operators it induces.

Same-signature embeddings form a magnitude space of their own under
pointwise sum: comparison at any single probe decides the global order, and
a strict inequality yields a difference embedding reconstructing the larger
side.  Endomorphisms additionally compose, and composition is commutative,
associative, distributes over sum, and preserves order.

When the domain carries a designated unit, the map sending a' to the unique
embedding with unit -> a' is an isomorphism onto the embedding space; it
induces the product a * b = (embedding for b)(a) and, in symmetric models,
the quotient b / a.  On rationals these collapse to fraction arithmetic; on
reals the quotient is computed by bisection against certified product
comparisons rather than by a reciprocal primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Ordering3, Rel
from .errors import (
    ModelMismatchError,
    NoUnitError,
    NotSymmetricError,
    UndecidedError,
)
from .embed import (
    ApproxPolicy,
    DEFAULT_POLICY,
    ComposeOf,
    EmbeddingRepr,
    IdentityRepr,
    SumOf,
    anchor_embedding,
    evaluate,
    nat_embedding,
)
from .models import (
    NAT,
    RAT,
    Interval,
    Model,
    Overlap,
    PosRat,
    PosRealValue,
    model_of,
    real_compare,
    real_from_rat,
    real_scale,
    real_subtract,
)

__all__ = [
    "HomElement",
    "EndoElement",
    "identity_endo",
    "hom",
    "hom_add",
    "hom_compose",
    "hom_compare",
    "psi",
    "product",
    "quotient",
]


@dataclass(frozen=True)
class HomElement:
    """An embedding as an element of its hom magnitude space."""

    mapping: EmbeddingRepr

    @property
    def domain(self) -> Model:
        return self.mapping.domain

    @property
    def codomain(self) -> Model:
        return self.mapping.codomain

    def __call__(self, b, policy: ApproxPolicy = DEFAULT_POLICY):
        return evaluate(self.mapping, b, policy)


@dataclass(frozen=True)
class EndoElement(HomElement):
    """An embedding of a model into itself."""

    def __post_init__(self):
        if self.mapping.domain is not self.mapping.codomain:
            raise ModelMismatchError("endomorphisms need domain = codomain")


def hom(mapping: EmbeddingRepr) -> HomElement:
    if mapping.domain is mapping.codomain:
        return EndoElement(mapping)
    return HomElement(mapping)


def identity_endo(model: Model) -> EndoElement:
    return EndoElement(IdentityRepr(model))


def _require_same_signature(phi: HomElement, chi: HomElement):
    if phi.domain is not chi.domain or phi.codomain is not chi.codomain:
        raise ModelMismatchError("hom elements of different signatures")


def hom_add(phi: HomElement, chi: HomElement) -> HomElement:
    """Pointwise sum; the sum of two embeddings is again an embedding."""
    _require_same_signature(phi, chi)
    return hom(SumOf(phi.mapping, chi.mapping))


def hom_compose(phi: HomElement, chi: HomElement) -> HomElement:
    """phi after chi."""
    if chi.codomain is not phi.domain:
        raise ModelMismatchError("composition signatures do not chain")
    return hom(ComposeOf(outer=phi.mapping, inner=chi.mapping))


def _canonical_probe(model: Model):
    probe = model.descriptor.unit
    if probe is None:
        probe = model.descriptor.smallest
    if probe is None:
        raise NoUnitError(f"model {model!r} has no canonical probe")
    return probe


def hom_compare(
    phi: HomElement, chi: HomElement, policy: ApproxPolicy = DEFAULT_POLICY
) -> Ordering3:
    """Trichotomy in the hom space, witnessed by the difference embedding.

    One probe evaluation decides (embeddings agreeing at one point agree
    everywhere).  On strict inequality the witness delta is itself a
    HomElement with delta(b) = larger(b) - smaller(b) for every b.
    """
    _require_same_signature(phi, chi)
    probe = _canonical_probe(phi.domain)
    x = phi(probe, policy)
    y = chi(probe, policy)
    codomain = phi.codomain
    if codomain.descriptor.exact_order:
        outcome = codomain.order(x, y)
        if outcome.is_equal:
            return Ordering3.equal()
        delta = psi(phi.domain, outcome.gap)
        return Ordering3(outcome.tag, delta)
    for p in policy.schedule:
        out = real_compare(x, y, p)
        if isinstance(out, Overlap):
            continue
        big, small = (x, y) if out is Rel.GREATER else (y, x)
        gap = real_subtract(big, small, known_gap_precision=p)
        return Ordering3(out, psi(phi.domain, gap))
    raise UndecidedError(
        f"hom comparison overlapped through precision {policy.schedule[-1]}"
    )


def psi(model: Model, a_prime) -> HomElement:
    """The unique embedding of `model` sending its unit to a_prime.

    This map is an isomorphism from the codomain onto the hom space: it is
    additive, order-preserving, and every embedding out of `model` arises
    as psi of its value at the unit.
    """
    unit = model.descriptor.unit
    if unit is None:
        raise NoUnitError(f"model {model!r} has no designated unit")
    if model is NAT:
        return hom(nat_embedding(a_prime))
    return hom(anchor_embedding(unit, a_prime))


def product(a, b, policy: ApproxPolicy = DEFAULT_POLICY):
    """a * b on a unit-bearing model: apply the embedding for b to a.

    Exact fraction arithmetic on nat/rat; precision-bounded intervals on
    the real model.
    """
    model = model_of(a)
    model.check(b)
    return evaluate(psi(model, b).mapping, a, policy)


def quotient(b, a, policy: ApproxPolicy = DEFAULT_POLICY):
    """The unique d with product(d, a) = b.  Symmetric models only."""
    model = model_of(b)
    model.check(a)
    if not model.descriptor.symmetric:
        raise NotSymmetricError(
            f"model '{model.descriptor.model_id}' has no quotients"
        )
    if model is RAT:
        return b / a
    return _real_quotient(b, a, policy)


def _real_quotient(b: PosRealValue, a: PosRealValue, policy: ApproxPolicy) -> PosRealValue:
    """d = b / a by bisection on rational candidates.

    Candidates are judged only through certified comparisons of mid * a
    against b; when a comparison stays overlapped at the working precision
    the candidate is already within the provable sensitivity bound and the
    bracket collapses around it.
    """
    if b.exact is not None and a.exact is not None:
        return real_from_rat(b.exact / a.exact)

    state: dict = {"lo": None, "hi": None}

    def refine(p: int) -> Interval:
        a_floor = a.approx(0).lo  # certified positive lower bound on a
        cap = p + 2 + max(0, a_floor.reciprocal().ceil_log2())
        if state["lo"] is None:
            blo, bhi = b.approx(2).lo, b.approx(2).hi
            alo, ahi = a.approx(2).lo, a.approx(2).hi
            lo_raw = blo / (ahi + ahi)  # lo*a <= blo/2 < b
            hi_raw = (bhi + bhi) / alo  # hi*a >= 2*bhi > b
            # snap the bracket onto dyadic grids (down for lo, up for hi) so
            # every later midpoint stays dyadic and representation size is
            # linear in the bisection depth
            grid = max(4, lo_raw.reciprocal().ceil_log2() + 2)
            state["lo"] = PosRat((lo_raw.num << grid) // lo_raw.den, 1 << grid)
            state["hi"] = PosRat(-((-(hi_raw.num << 4)) // hi_raw.den), 1 << 4)
        lo, hi = state["lo"], state["hi"]
        while not Interval(lo, hi).width_at_most(p):
            mid = PosRat(
                lo.num * hi.den + hi.num * lo.den, 2 * lo.den * hi.den
            )
            scaled = real_scale(a, mid)
            verdict = None
            rung = 4
            while rung < cap:
                verdict = real_compare(scaled, b, rung)
                if not isinstance(verdict, Overlap):
                    break
                rung *= 2
            if isinstance(verdict, Overlap) or verdict is None:
                verdict = real_compare(scaled, b, cap)
            if isinstance(verdict, Overlap):
                # |mid*a - b| <= 2^(1-cap), so |mid - d| <= 2^(1-cap)/a
                eps = PosRat(2, 1) / (PosRat(2, 1) ** cap * a_floor)
                new_lo = lo if lo + eps > mid else mid - eps
                new_hi = hi if mid + eps > hi else mid + eps
                state["lo"], state["hi"] = new_lo, new_hi
                return Interval(new_lo, new_hi)
            if verdict is Rel.GREATER:
                hi = mid
            else:
                lo = mid
            state["lo"], state["hi"] = lo, hi
        return Interval(lo, hi)

    result = PosRealValue(refine)
    result.approx(policy.precision)
    return result
