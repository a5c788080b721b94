"""Concrete magnitude models: naturals, positive rationals, positive reals.

* nat  -- arbitrary-precision integers >= 1 (plain ``int``); well ordered.
* rat  -- strictly positive rationals in lowest terms (:class:`PosRat`);
          symmetric, nondiscrete, exact order.
* real -- computable positive reals as precision-indexed rational interval
          oracles (:class:`PosRealValue`); order is certified three-valued,
          never decided by guessing.

All values are immutable and freely shareable between threads.  A real
value's refinement cache is guarded by a lock so concurrent queries at the
same precision observe the identical interval.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Union

from .core import ModelDescriptor, Ordering3, Rel
from .errors import (
    InexactModelError,
    ModelMismatchError,
    OracleFailureError,
    ParseError,
)

__all__ = [
    "PosRat",
    "Interval",
    "PosRealValue",
    "Overlap",
    "nat_make",
    "rat_make",
    "real_from_rat",
    "real_approx",
    "real_add",
    "real_subtract",
    "real_mul",
    "real_scale",
    "real_compare",
    "real_compare_escalating",
    "NAT",
    "RAT",
    "REAL",
    "model_of",
    "model_by_id",
    "parse_element",
    "format_element",
]

# Precision ladder for certified real comparisons; the last rung is the
# default give-up point when no caller-specific cap applies.
DEFAULT_SCHEDULE = (4, 8, 16, 32, 64, 128, 256)


def _check_positive_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{what} must be >= 1, got {value}")
    return value


class PosRat:
    """Strictly positive rational, always in lowest terms.

    Subtraction is partial: ``a - b`` requires b < a, mirroring the ambient
    order structure (there is no zero to land on).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        _check_positive_int(num, "numerator")
        _check_positive_int(den, "denominator")
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g

    @classmethod
    def _reduced(cls, num: int, den: int) -> "PosRat":
        # Internal fast path: caller guarantees num, den >= 1 and gcd 1.
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_text(cls, text: str) -> "PosRat":
        parts = text.strip().split("/")
        if len(parts) == 1:
            num, den = parts[0], "1"
        elif len(parts) == 2:
            num, den = parts
        else:
            raise ParseError(f"malformed rational {text!r}")
        if not (num.strip().isdigit() and den.strip().isdigit()):
            raise ParseError(f"malformed rational {text!r}")
        n, d = int(num), int(den)
        if n < 1 or d < 1:
            raise ParseError(f"rational must be strictly positive: {text!r}")
        return cls(n, d)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "PosRat") -> "PosRat":
        return PosRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "PosRat") -> "PosRat":
        from .errors import NotGreaterError

        num = self.num * other.den - other.num * self.den
        if num <= 0:
            raise NotGreaterError("difference of positive rationals needs the minuend larger")
        return PosRat(num, self.den * other.den)

    def __mul__(self, other: "PosRat") -> "PosRat":
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        return PosRat._reduced(
            (self.num // g1) * (other.num // g2),
            (self.den // g2) * (other.den // g1),
        )

    def __truediv__(self, other: "PosRat") -> "PosRat":
        g1 = gcd(self.num, other.num)
        g2 = gcd(other.den, self.den)
        return PosRat._reduced(
            (self.num // g1) * (other.den // g2),
            (self.den // g2) * (other.num // g1),
        )

    def reciprocal(self) -> "PosRat":
        return PosRat._reduced(self.den, self.num)

    def scale_int(self, n: int) -> "PosRat":
        return PosRat(self.num * n, self.den)

    def __pow__(self, n: int) -> "PosRat":
        _check_positive_int(n, "exponent")
        return PosRat._reduced(self.num**n, self.den**n)

    # -- order --------------------------------------------------------

    def _cmp(self, other: "PosRat") -> int:
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PosRat) and self.num == other.num and self.den == other.den
        )

    def __lt__(self, other: "PosRat") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "PosRat") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "PosRat") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "PosRat") -> bool:
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.num, self.den))

    # -- rendering / misc ----------------------------------------------

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"PosRat({self.num}, {self.den})"

    def is_integer(self) -> bool:
        return self.den == 1

    def ceil_log2(self) -> int:
        """Smallest integer e with self <= 2**e (may be negative)."""
        # bit lengths bracket the answer within two candidates; walk up
        e = self.num.bit_length() - self.den.bit_length() - 1
        while not self._le_pow2(e):
            e += 1
        return e

    def _le_pow2(self, e: int) -> bool:
        if e >= 0:
            return self.num <= self.den << e
        return self.num << (-e) <= self.den

    def decimal(self, digits: int) -> str:
        """Decimal rendering truncated toward zero at ``digits`` places."""
        whole, rem = divmod(self.num, self.den)
        if digits <= 0:
            return str(whole)
        frac = rem * 10**digits // self.den
        return f"{whole}.{frac:0{digits}d}"


RAT_ONE = PosRat._reduced(1, 1)


def nat_make(text: str) -> int:
    """Parse a strictly positive decimal integer."""
    s = text.strip()
    if not s.isdigit():
        raise ParseError(f"not a decimal natural: {text!r}")
    value = int(s)
    if value < 1:
        raise ParseError("naturals start at 1; there is no zero magnitude")
    return value


def rat_make(num: int, den: int) -> PosRat:
    """Positive rational from positive integer parts, reduced."""
    return PosRat(num, den)


class Interval:
    """Closed interval with exact positive rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: PosRat, hi: PosRat):
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def width_at_most(self, p: int) -> bool:
        """hi - lo <= 2**-p, in exact integer arithmetic (width may be 0)."""
        wnum = self.hi.num * self.lo.den - self.lo.num * self.hi.den
        wden = self.hi.den * self.lo.den
        if p >= 0:
            return wnum << p <= wden
        return wnum <= wden << (-p)

    def contains(self, q: PosRat) -> bool:
        return self.lo <= q <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo = self.lo if self.lo >= other.lo else other.lo
        hi = self.hi if self.hi <= other.hi else other.hi
        return Interval(lo, hi)

    def add(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def mul(self, other: "Interval") -> "Interval":
        # positivity makes endpoint products monotone
        return Interval(self.lo * other.lo, self.hi * other.hi)

    def scale(self, q: PosRat) -> "Interval":
        return Interval(self.lo * q, self.hi * q)

    def midpoint(self) -> PosRat:
        return PosRat(
            self.lo.num * self.hi.den + self.hi.num * self.lo.den,
            2 * self.lo.den * self.hi.den,
        )

    def round_out(self, p: int) -> "Interval":
        """Enclosing interval with endpoints on the 2^-p dyadic grid.

        Keeps representation size linear under long oracle chains (exact
        endpoint arithmetic would otherwise square denominators at every
        composition).  Widens by at most 2^(1-p).  The lower endpoint keeps
        its exact value when the grid floor would reach zero.
        """
        lo_ticks = (self.lo.num << p) // self.lo.den
        hi_ticks = -((-(self.hi.num << p)) // self.hi.den)
        lo = self.lo if lo_ticks < 1 else PosRat(lo_ticks, 1 << p)
        return Interval(lo, PosRat(hi_ticks, 1 << p))


@dataclass(frozen=True)
class Overlap:
    """Undecided real comparison: the p-intervals were not disjoint."""

    precision: int


class PosRealValue:
    """Computable positive real: a refinement oracle plus its cache.

    ``approx(p)`` returns a rational interval of width at most 2**-p that
    contains the value.  Refinements are memoized and intersected with the
    best interval seen so far, so repeated queries are idempotent and any
    two cached intervals intersect.

    ``exact`` optionally records that the value is a known rational point,
    enabling exact fast paths downstream.
    """

    __slots__ = ("_refine", "_cache", "_best", "_lock", "exact")

    def __init__(self, refine: Callable[[int], Interval], exact: Optional[PosRat] = None):
        self._refine = refine
        self._cache: dict[int, Interval] = {}
        self._best: Optional[Interval] = None
        self._lock = threading.Lock()
        self.exact = exact

    def approx(self, p: int) -> Interval:
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError("precision must be an int")
        if p < 0:
            raise ValueError("precision must be >= 0")
        with self._lock:
            cached = self._cache.get(p)
            if cached is not None:
                return cached
            raw = self._refine(p)
            if not raw.width_at_most(p):
                raise OracleFailureError(f"refinement wider than 2^-{p}")
            if self._best is None:
                iv = raw
            else:
                if not raw.intersects(self._best):
                    raise OracleFailureError("inconsistent refinement oracle")
                iv = raw.intersect(self._best)
            self._best = iv
            self._cache[p] = iv
            return iv

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"PosRealValue(exact={self.exact})"
        if self._best is not None:
            return f"PosRealValue(~[{self._best.lo}, {self._best.hi}])"
        return "PosRealValue(<unrefined>)"


def real_from_rat(q: PosRat) -> PosRealValue:
    """Exact rational point as a real value: every interval is [q, q]."""
    point = Interval(q, q)
    return PosRealValue(lambda p: point, exact=q)


def real_approx(x: PosRealValue, p: int) -> Interval:
    """Interval of width <= 2**-p containing x.  Memoized."""
    return x.approx(p)


def real_add(x: PosRealValue, y: PosRealValue) -> PosRealValue:
    """Sum oracle: endpoint sums of slightly deeper input refinements.

    Results are rounded outward onto the dyadic grid; without that, chained
    sums and products square their denominators at every level.
    """
    exact = x.exact + y.exact if (x.exact is not None and y.exact is not None) else None

    def refine(p: int) -> Interval:
        return x.approx(p + 2).add(y.approx(p + 2)).round_out(p + 2)

    return PosRealValue(refine, exact=exact)


def real_scale(x: PosRealValue, q: PosRat) -> PosRealValue:
    """x scaled by an exact rational factor q > 0."""
    exact = x.exact * q if x.exact is not None else None
    extra = max(0, q.ceil_log2())

    def refine(p: int) -> Interval:
        return x.approx(p + 2 + extra).scale(q).round_out(p + 2)

    return PosRealValue(refine, exact=exact)


def real_mul(x: PosRealValue, y: PosRealValue) -> PosRealValue:
    """Product oracle; input precision chosen from coarse magnitude bounds."""
    if x.exact is not None and y.exact is not None:
        return real_from_rat(x.exact * y.exact)

    def refine(p: int) -> Interval:
        bound = x.approx(0).hi + y.approx(0).hi
        q = p + 2 + max(0, bound.ceil_log2())
        return x.approx(q).mul(y.approx(q)).round_out(p + 2)

    return PosRealValue(refine)


def real_subtract(x: PosRealValue, y: PosRealValue, known_gap_precision: int = 0) -> PosRealValue:
    """Difference oracle for certified y < x.

    ``known_gap_precision`` is a precision at which the inputs' intervals are
    already disjoint; positivity of the difference is then guaranteed from
    that rung onward.
    """
    exact = None
    if x.exact is not None and y.exact is not None:
        exact = x.exact - y.exact  # raises NotGreaterError when not y < x

    def refine(p: int) -> Interval:
        q = max(p + 2, known_gap_precision)
        budget = q + 64
        while True:
            a, b = x.approx(q), y.approx(q)
            if b.hi < a.lo:
                return Interval(a.lo - b.hi, a.hi - b.lo).round_out(q)
            q += 8
            if q > budget:
                raise OracleFailureError("difference not certified positive in budget")

    return PosRealValue(refine, exact=exact)


def real_compare(x: PosRealValue, y: PosRealValue, p: int) -> Union[Rel, Overlap]:
    """Certified comparison at one precision.

    Returns Rel.LESS / Rel.GREATER only when the p-intervals are disjoint
    (a true certificate); otherwise Overlap(p).  Equality of reals is not
    decidable and is never returned.
    """
    a = x.approx(p)
    b = y.approx(p)
    if a.hi < b.lo:
        return Rel.LESS
    if b.hi < a.lo:
        return Rel.GREATER
    return Overlap(p)


def real_compare_escalating(
    x: PosRealValue, y: PosRealValue, schedule=DEFAULT_SCHEDULE
) -> Union[Rel, Overlap]:
    """Walk the precision ladder until certified or exhausted."""
    last = 0
    for p in schedule:
        out = real_compare(x, y, p)
        if not isinstance(out, Overlap):
            return out
        last = p
    return Overlap(last)


# ---------------------------------------------------------------------------
# Model objects


class Model:
    """Primitive operations of one concrete magnitude model."""

    descriptor: ModelDescriptor

    def owns(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        if not self.owns(x):
            raise ModelMismatchError(
                f"{x!r} is not an element of model '{self.descriptor.model_id}'"
            )
        return x

    def combine(self, a, b):
        raise NotImplementedError

    def order(self, a, b) -> Ordering3:
        raise NotImplementedError

    def certainly_greater(self, a, b) -> bool:
        return self.order(a, b).is_greater

    def scale(self, a, q: PosRat):
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<model {self.descriptor.model_id}>"


class NatModel(Model):
    def __init__(self):
        self.descriptor = ModelDescriptor(
            model_id="nat",
            discrete=True,
            symmetric=False,
            continuous_at_oracle=False,
            exact_order=True,
            unit=1,
            smallest=1,
        )

    def owns(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and x >= 1

    def combine(self, a: int, b: int) -> int:
        return a + b

    def order(self, a: int, b: int) -> Ordering3:
        if a < b:
            return Ordering3.less_by(b - a)
        if a > b:
            return Ordering3.greater_by(a - b)
        return Ordering3.equal()

    def random_element(self, rng) -> int:
        return rng.randint(1, 1 << 32)


class RatModel(Model):
    def __init__(self):
        self.descriptor = ModelDescriptor(
            model_id="rat",
            discrete=False,
            symmetric=True,
            continuous_at_oracle=False,
            exact_order=True,
            unit=RAT_ONE,
            smallest=None,
        )

    def owns(self, x) -> bool:
        return isinstance(x, PosRat)

    def combine(self, a: PosRat, b: PosRat) -> PosRat:
        return a + b

    def order(self, a: PosRat, b: PosRat) -> Ordering3:
        c = a._cmp(b)
        if c < 0:
            return Ordering3.less_by(b - a)
        if c > 0:
            return Ordering3.greater_by(a - b)
        return Ordering3.equal()

    def scale(self, a: PosRat, q: PosRat) -> PosRat:
        return a * q

    def random_element(self, rng) -> PosRat:
        # spans magnitudes 2^-16 .. 2^16
        return PosRat(rng.randint(1, 1 << 16), rng.randint(1, 1 << 16))


class RealModel(Model):
    def __init__(self):
        self.descriptor = ModelDescriptor(
            model_id="real",
            discrete=False,
            symmetric=True,
            continuous_at_oracle=True,
            exact_order=False,
            unit=real_from_rat(RAT_ONE),
            smallest=None,
        )

    def owns(self, x) -> bool:
        return isinstance(x, PosRealValue)

    def combine(self, a: PosRealValue, b: PosRealValue) -> PosRealValue:
        return real_add(a, b)

    def order(self, a, b) -> Ordering3:
        raise InexactModelError(
            "real order is certified three-valued; use real_compare with a precision"
        )

    def certainly_greater(self, a, b) -> bool:
        # Overlap at the top of the default ladder counts as 'not greater':
        # honest for searches that only need a sound upper answer.
        return real_compare_escalating(a, b) is Rel.GREATER

    def scale(self, a: PosRealValue, q: PosRat) -> PosRealValue:
        return real_scale(a, q)

    def random_element(self, rng) -> PosRealValue:
        return real_from_rat(PosRat(rng.randint(1, 1 << 16), rng.randint(1, 1 << 16)))


NAT = NatModel()
RAT = RatModel()
REAL = RealModel()

_BY_ID = {"nat": NAT, "rat": RAT, "real": REAL}


def model_by_id(model_id: str) -> Model:
    try:
        return _BY_ID[model_id]
    except KeyError:
        raise ModelMismatchError(f"unknown model id {model_id!r}") from None


def model_of(x) -> Model:
    """Infer the shipped model owning a value."""
    if isinstance(x, bool):
        raise ModelMismatchError("booleans are not magnitude elements")
    if isinstance(x, int):
        if x < 1:
            raise ModelMismatchError(f"{x} is not a positive magnitude")
        return NAT
    if isinstance(x, PosRat):
        return RAT
    if isinstance(x, PosRealValue):
        return REAL
    raise ModelMismatchError(f"no shipped model owns {type(x).__name__} values")


def parse_element(model: Model, text: str):
    """Read an element in the model's canonical text form.

    nat: "123"; rat: "num/den"; real: a rational literal promoted to an
    exact real point (arbitrary oracles have no text form).
    """
    if model is NAT:
        return nat_make(text)
    if model is RAT:
        return PosRat.from_text(text)
    if model is REAL:
        return real_from_rat(PosRat.from_text(text))
    raise ModelMismatchError(f"cannot parse elements of {model!r}")


def format_element(x, precision: int = 30) -> str:
    """Canonical text form; reals render as 'mid ± 2^-p'."""
    model = model_of(x)
    if model is NAT:
        return str(x)
    if model is RAT:
        return str(x)
    iv = x.approx(precision)
    digits = max(1, precision * 30103 // 100000)
    return f"{iv.midpoint().decimal(digits)} ± 2^-{precision}"
