"""Generic operations on magnitude spaces.

A magnitude space is a set with an associative, commutative combine
operation satisfying trichotomy: for any a, b exactly one of a = b + d,
a = b, b = a + d holds for some element d.  There is no zero and no
negatives; comparison is therefore inseparable from subtraction, and the
three-way result carries the difference d as a witness.

Everything here is generic over a model object (see :mod:`magnitudes.models`)
supplying the primitive combine/order operations.  The model argument is
optional on every function; when omitted it is inferred from the element
types.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .errors import DiscreteModelError, NotGreaterError

NAIVE_GUARD = 1 << 16


class Rel(enum.Enum):
    """Three-way order tag."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def swapped(self) -> "Rel":
        if self is Rel.LESS:
            return Rel.GREATER
        if self is Rel.GREATER:
            return Rel.LESS
        return Rel.EQUAL


@dataclass(frozen=True)
class Ordering3:
    """Trichotomy outcome for a pair (a, b), carrying the difference witness.

    ``gap`` is the element d reconstructing the larger side:
    LESS means combine(a, d) = b, GREATER means combine(b, d) = a,
    EQUAL carries no gap.
    """

    tag: Rel
    gap: Any = None

    @staticmethod
    def less_by(d) -> "Ordering3":
        return Ordering3(Rel.LESS, d)

    @staticmethod
    def equal() -> "Ordering3":
        return Ordering3(Rel.EQUAL, None)

    @staticmethod
    def greater_by(d) -> "Ordering3":
        return Ordering3(Rel.GREATER, d)

    @property
    def is_less(self) -> bool:
        return self.tag is Rel.LESS

    @property
    def is_equal(self) -> bool:
        return self.tag is Rel.EQUAL

    @property
    def is_greater(self) -> bool:
        return self.tag is Rel.GREATER

    def swapped(self) -> "Ordering3":
        """The outcome for the pair in reverse order; same witness."""
        return Ordering3(self.tag.swapped(), self.gap)


@dataclass(frozen=True)
class ModelDescriptor:
    """Static facts about a model, checked once at construction.

    discrete       -- has a smallest element (and then ``smallest`` holds it)
    symmetric      -- every pair a, b is related by an endomorphism a -> b,
                      equivalently quotients exist
    continuous_at_oracle -- completeness realized as interval refinement to
                      any requested precision
    exact_order    -- comparison decides without precision parameters
    """

    model_id: str
    discrete: bool
    symmetric: bool
    continuous_at_oracle: bool
    exact_order: bool
    unit: Any = None
    smallest: Any = None

    def __post_init__(self):
        if self.discrete != (self.smallest is not None):
            raise ValueError("discrete models must carry their smallest element")
        if self.continuous_at_oracle and self.discrete:
            raise ValueError("a continuous model cannot be discrete")


def _resolve(model, *elements):
    if model is None:
        from . import models as _models

        model = _models.model_of(elements[0])
    for x in elements:
        model.check(x)
    return model


def _check_multiplier(n: int, minimum: int = 1) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"multiplier must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"multiplier must be >= {minimum}, got {n}")
    return n


def combine(a, b, model=None):
    """Sum of two elements of one model."""
    model = _resolve(model, a, b)
    return model.combine(a, b)


def compare(a, b, model=None) -> Ordering3:
    """Trichotomous comparison with difference witness (exact models only)."""
    model = _resolve(model, a, b)
    return model.order(a, b)


def subtract(b, a, model=None):
    """The unique d with combine(a, d) = b.  Requires a < b."""
    model = _resolve(model, a, b)
    outcome = model.order(b, a)
    if not outcome.is_greater:
        raise NotGreaterError("subtraction needs a < b; magnitudes have no zero")
    return outcome.gap


def multiple(n: int, a, model=None):
    """n-fold sum of a, computed by binary doubling in O(log n) combines."""
    model = _resolve(model, a)
    n = _check_multiplier(n)
    acc = None
    chunk = a
    while True:
        if n & 1:
            acc = chunk if acc is None else model.combine(acc, chunk)
        n >>= 1
        if not n:
            return acc
        chunk = model.combine(chunk, chunk)


def multiple_naive(n: int, a, model=None):
    """n-fold sum by literal repeated addition.  Cross-check oracle only.

    Guarded to n <= 2**16 because it is linear.
    """
    model = _resolve(model, a)
    n = _check_multiplier(n)
    if n > NAIVE_GUARD:
        raise ValueError(f"naive multiple guarded to n <= {NAIVE_GUARD}")
    acc = a
    for _ in range(n - 1):
        acc = model.combine(acc, a)
    return acc


def find_multiple_exceeding(a, b, model=None) -> int:
    """Least n with multiple(n, a) > b.

    Exists for every pair in an Archimedean model (all shipped models are).
    Found by doubling then binary search, so O(log n) comparisons.
    """
    model = _resolve(model, a, b)
    if model.certainly_greater(a, b):
        return 1
    lo = 1  # known: lo * a <= b
    hi = 2
    while not model.certainly_greater(multiple(hi, a, model), b):
        lo = hi
        hi <<= 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if model.certainly_greater(multiple(mid, a, model), b):
            hi = mid
        else:
            lo = mid
    return hi


def shrink_below(a, n: int, model=None):
    """Some b with multiple(n, b) < a.  Requires a nondiscrete model.

    Returns a scaled by 1/(n+1), so n of them fall short of a by a/(n+1).
    """
    model = _resolve(model, a)
    n = _check_multiplier(n)
    if model.descriptor.discrete:
        raise DiscreteModelError(
            f"model '{model.descriptor.model_id}' has a smallest element; nothing shrinks below it"
        )
    from .models import PosRat

    return model.scale(a, PosRat(1, n + 1))
