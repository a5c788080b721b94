"""Embeddings between magnitude models, reified as data.

An embedding is an order-preserving additive map.  Rather than opaque
callables, embeddings are represented as small trees (unit-multiple maps
out of the naturals, anchored maps defined through fourth proportionals,
identity, pointwise sums, and compositions) with one pure evaluator.
Reification is what makes embeddings comparable, serializable, and usable
as elements of their own magnitude space (see :mod:`magnitudes.hom`).

The central construction is :func:`fourth_proportional`: given a, b in an
exact model and a' in the real model, produce b' with a : b = a' : b'.  The
ratio b : a is first recovered exactly with the mediant descent (using only
the exact model's own operations), then a' is scaled by it at whatever
precision the caller's oracle queries demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from . import core
from .core import Rel
from .errors import (
    ModelMismatchError,
    ParseError,
    UndecidedError,
    UnsupportedCodomainError,
)
from .mediants import ratio_as_fraction
from .models import (
    NAT,
    RAT,
    REAL,
    Model,
    Overlap,
    PosRat,
    PosRealValue,
    model_by_id,
    model_of,
    real_compare,
    real_mul,
    real_scale,
)

__all__ = [
    "ApproxPolicy",
    "DEFAULT_POLICY",
    "EmbeddingRepr",
    "UnitMultiple",
    "Anchor",
    "IdentityRepr",
    "SumOf",
    "ComposeOf",
    "nat_embedding",
    "anchor_embedding",
    "evaluate",
    "evaluate_naive",
    "fourth_proportional",
    "check_homomorphism",
    "HomCheckReport",
    "embeddings_compare",
    "embedding_to_json",
    "embedding_from_json",
]


@dataclass(frozen=True)
class ApproxPolicy:
    """Target precision plus the escalation ladder for certified comparisons."""

    precision: int = 30
    schedule: tuple = (4, 8, 16, 32, 64, 128, 256)

    def __post_init__(self):
        if self.precision < 0:
            raise ValueError("target precision must be >= 0")


DEFAULT_POLICY = ApproxPolicy()


class EmbeddingRepr:
    """Base class for embedding representations."""

    domain: Model
    codomain: Model


@dataclass(frozen=True)
class UnitMultiple(EmbeddingRepr):
    """n -> n * image: the unique embedding out of the naturals sending 1 to image."""

    image: object
    domain: Model
    codomain: Model


@dataclass(frozen=True)
class Anchor(EmbeddingRepr):
    """b -> the fourth proportional to (anchor, b, image)."""

    anchor: object
    image: object
    domain: Model
    codomain: Model


@dataclass(frozen=True)
class IdentityRepr(EmbeddingRepr):
    model: Model

    @property
    def domain(self) -> Model:
        return self.model

    @property
    def codomain(self) -> Model:
        return self.model


@dataclass(frozen=True)
class SumOf(EmbeddingRepr):
    left: EmbeddingRepr
    right: EmbeddingRepr

    @property
    def domain(self) -> Model:
        return self.left.domain

    @property
    def codomain(self) -> Model:
        return self.left.codomain


@dataclass(frozen=True)
class ComposeOf(EmbeddingRepr):
    outer: EmbeddingRepr
    inner: EmbeddingRepr

    @property
    def domain(self) -> Model:
        return self.inner.domain

    @property
    def codomain(self) -> Model:
        return self.outer.codomain


def nat_embedding(a_prime) -> UnitMultiple:
    """The unique embedding of the naturals mapping 1 to a_prime."""
    return UnitMultiple(image=a_prime, domain=NAT, codomain=model_of(a_prime))


def anchor_embedding(a, a_prime) -> Anchor:
    """The unique embedding mapping a to a_prime, when one is representable.

    Supported signatures: any domain anchored into the real model; exact
    rational domain and codomain (evaluated by exact division); naturals
    into naturals when the anchor divides its image.  A real-domain anchor
    must be an exact rational point.
    """
    domain = model_of(a)
    codomain = model_of(a_prime)
    if codomain is NAT and not (domain is NAT and a_prime % a == 0):
        raise UnsupportedCodomainError(
            "an embedding into the naturals needs a natural anchor dividing its image"
        )
    if domain is REAL:
        if codomain is not REAL or a.exact is None:
            raise UnsupportedCodomainError(
                "real-domain anchors must be exact rational points mapping into reals"
            )
    return Anchor(anchor=a, image=a_prime, domain=domain, codomain=codomain)


def fourth_proportional(a, b, a_prime: PosRealValue, p: int) -> PosRealValue:
    """b' in the real model with a : b = a' : b', refined to precision p.

    a and b live in one exact model.  The ratio b : a is recovered exactly
    by mediant descent over the model's own multiples and comparisons; the
    result is a' scaled by that fraction, an oracle honoring the width
    contract at every precision (uniqueness makes any two correct
    constructions agree).
    """
    model = model_of(a)
    model.check(b)
    REAL.check(a_prime)
    if isinstance(p, bool) or not isinstance(p, int) or p < 0:
        raise ValueError("precision must be an int >= 0")
    if model.order(a, b).is_equal:
        result = a_prime
    else:
        result = real_scale(a_prime, ratio_as_fraction(b, a, model))
    result.approx(p)
    return result


def evaluate(phi: EmbeddingRepr, b, policy: ApproxPolicy = DEFAULT_POLICY):
    """Apply an embedding to a domain element."""
    if isinstance(phi, UnitMultiple):
        NAT.check(b)
        return core.multiple(b, phi.image, phi.codomain)
    if isinstance(phi, IdentityRepr):
        phi.model.check(b)
        return b
    if isinstance(phi, SumOf):
        return phi.codomain.combine(
            evaluate(phi.left, b, policy), evaluate(phi.right, b, policy)
        )
    if isinstance(phi, ComposeOf):
        return evaluate(phi.outer, evaluate(phi.inner, b, policy), policy)
    if isinstance(phi, Anchor):
        return _evaluate_anchor(phi, b, policy)
    raise TypeError(f"not an embedding representation: {phi!r}")


def _evaluate_anchor(phi: Anchor, b, policy: ApproxPolicy):
    domain, codomain = phi.domain, phi.codomain
    domain.check(b)
    if domain is NAT:
        if codomain is NAT:
            return (phi.image // phi.anchor) * b
        if codomain is RAT:
            return phi.image * PosRat(b, phi.anchor)
        return fourth_proportional(phi.anchor, b, phi.image, policy.precision)
    if domain is RAT:
        scale = b / phi.anchor
        if codomain is RAT:
            return phi.image * scale
        return fourth_proportional(phi.anchor, b, phi.image, policy.precision)
    # real domain, exact rational anchor: b * image / anchor
    return real_scale(real_mul(b, phi.image), phi.anchor.exact.reciprocal())


def evaluate_naive(phi: UnitMultiple, n: int):
    """Evaluate a unit-multiple embedding by literal recursion: test oracle.

    phi(n) = phi(n - 1) + image, guarded to n <= 2**16.
    """
    if not isinstance(phi, UnitMultiple):
        raise TypeError("naive evaluation is defined for unit-multiple maps")
    return core.multiple_naive(n, phi.image, phi.codomain)


@dataclass(frozen=True)
class HomCheckReport:
    passed: bool
    samples: int
    counterexample: Optional[dict] = None


def check_homomorphism(
    phi: Union[EmbeddingRepr, Callable],
    samples: int = 100,
    seed: int = 0,
    policy: ApproxPolicy = DEFAULT_POLICY,
    domain: Optional[Model] = None,
    codomain: Optional[Model] = None,
) -> HomCheckReport:
    """Test additivity and order preservation on random domain pairs.

    Accepts either a reified embedding or a bare callable (then domain and
    codomain must be given).  Exact codomains demand equality; the real
    codomain demands interval intersection at the policy precision.  Stops
    at the first counterexample.
    """
    import random

    if samples < 1:
        raise ValueError("samples must be >= 1")
    if isinstance(phi, EmbeddingRepr):
        domain = phi.domain
        codomain = phi.codomain
        fn = lambda x: evaluate(phi, x, policy)
    else:
        if domain is None or codomain is None:
            raise ValueError("callable maps need explicit domain and codomain models")
        fn = phi

    rng = random.Random(seed)
    exact = codomain.descriptor.exact_order
    for _ in range(samples):
        b = domain.random_element(rng)
        c = domain.random_element(rng)
        lhs = fn(domain.combine(b, c))
        rhs = codomain.combine(fn(b), fn(c))
        if exact:
            additive = codomain.order(lhs, rhs).is_equal
        else:
            p = policy.precision
            additive = lhs.approx(p).intersects(rhs.approx(p))
        if not additive:
            return HomCheckReport(
                False, samples, {"kind": "additivity", "b": str(b), "c": str(c)}
            )
        if exact and domain.descriptor.exact_order:
            want = domain.order(b, c).tag
            got = codomain.order(fn(b), fn(c)).tag
            if want is not got:
                return HomCheckReport(
                    False, samples, {"kind": "order", "b": str(b), "c": str(c)}
                )
    return HomCheckReport(True, samples, None)


def embeddings_compare(
    phi: EmbeddingRepr,
    chi: EmbeddingRepr,
    probe,
    policy: ApproxPolicy = DEFAULT_POLICY,
) -> Rel:
    """Order of two same-signature embeddings, decided at one probe.

    Any probe decides the global relation (two embeddings agreeing anywhere
    agree everywhere); probe independence is a tested law, not an
    assumption.  Real codomains may refuse with UndecidedError when the
    certificates stay overlapped through the policy ladder.
    """
    if phi.domain is not chi.domain or phi.codomain is not chi.codomain:
        raise ModelMismatchError("embeddings of different signatures are not comparable")
    x = evaluate(phi, probe, policy)
    y = evaluate(chi, probe, policy)
    if phi.codomain.descriptor.exact_order:
        return phi.codomain.order(x, y).tag
    out = None
    for p in policy.schedule:
        out = real_compare(x, y, p)
        if not isinstance(out, Overlap):
            return out
    raise UndecidedError(
        f"embedding comparison overlapped through precision {policy.schedule[-1]}"
    )


# ---------------------------------------------------------------------------
# JSON form: a small tree of variant tags and operands.


def _element_to_text(x, model: Model) -> str:
    if model is REAL:
        if x.exact is None:
            raise ValueError("only exact rational points serialize")
        return str(x.exact)
    return str(x)


def embedding_to_json(phi: EmbeddingRepr) -> dict:
    if isinstance(phi, UnitMultiple):
        return {
            "kind": "unit-multiple",
            "codomain": phi.codomain.descriptor.model_id,
            "image": _element_to_text(phi.image, phi.codomain),
        }
    if isinstance(phi, Anchor):
        return {
            "kind": "anchor",
            "domain": phi.domain.descriptor.model_id,
            "codomain": phi.codomain.descriptor.model_id,
            "anchor": _element_to_text(phi.anchor, phi.domain),
            "image": _element_to_text(phi.image, phi.codomain),
        }
    if isinstance(phi, IdentityRepr):
        return {"kind": "identity", "model": phi.model.descriptor.model_id}
    if isinstance(phi, SumOf):
        return {
            "kind": "sum",
            "left": embedding_to_json(phi.left),
            "right": embedding_to_json(phi.right),
        }
    if isinstance(phi, ComposeOf):
        return {
            "kind": "compose",
            "outer": embedding_to_json(phi.outer),
            "inner": embedding_to_json(phi.inner),
        }
    raise TypeError(f"not an embedding representation: {phi!r}")


def embedding_from_json(data: dict) -> EmbeddingRepr:
    from .models import parse_element

    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("embedding JSON needs a 'kind' tag")
    kind = data["kind"]
    try:
        if kind == "unit-multiple":
            codomain = model_by_id(data["codomain"])
            return nat_embedding(parse_element(codomain, data["image"]))
        if kind == "anchor":
            domain = model_by_id(data["domain"])
            codomain = model_by_id(data["codomain"])
            return anchor_embedding(
                parse_element(domain, data["anchor"]),
                parse_element(codomain, data["image"]),
            )
        if kind == "identity":
            return IdentityRepr(model_by_id(data["model"]))
        if kind == "sum":
            left = embedding_from_json(data["left"])
            right = embedding_from_json(data["right"])
            if left.domain is not right.domain or left.codomain is not right.codomain:
                raise ParseError("sum parts must share one signature")
            return SumOf(left, right)
        if kind == "compose":
            outer = embedding_from_json(data["outer"])
            inner = embedding_from_json(data["inner"])
            if inner.codomain is not outer.domain:
                raise ParseError("composition signatures do not chain")
            return ComposeOf(outer, inner)
    except KeyError as missing:
        raise ParseError(f"embedding JSON missing field {missing}") from None
    raise ParseError(f"unknown embedding kind {kind!r}")
