"""Convolution of finitely supported functions and the partial action
``(s * f)(x) = sum of f(t) over st = x``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .actions import acts_injectively, fibers, injective_partition
from .measures import WeightVector, fair_check_finite
from .semigroup import FiniteSubset, LiteralError, Semigroup, Side, as_side
from .sets import SetSpec

BOUNDED, UNBOUNDED_TREND, WINDOW_LIMITED = "Bounded", "UnboundedTrend", "WindowLimited"


@dataclass(frozen=True)
class FinFunc:
    """Finitely supported rational-valued function; zero values are not stored."""

    semigroup: Semigroup
    values: tuple  # of (element, Fraction), sorted by element

    @classmethod
    def from_dict(cls, S: Semigroup, values: dict) -> "FinFunc":
        clean = {}
        for x, v in values.items():
            S.check(x)
            v = Fraction(v)
            if v:
                clean[x] = v
        return cls(S, tuple(sorted(clean.items(), key=lambda kv: S.key(kv[0]))))

    @classmethod
    def delta(cls, S: Semigroup, x, value=1) -> "FinFunc":
        return cls.from_dict(S, {x: value})

    @classmethod
    def indicator(cls, S: Semigroup, xs: Iterable) -> "FinFunc":
        return cls.from_dict(S, {x: 1 for x in xs})

    @classmethod
    def from_callable(cls, S: Semigroup, xs: Iterable, fn: Callable) -> "FinFunc":
        return cls.from_dict(S, {x: fn(x) for x in xs})

    @classmethod
    def parse(cls, S: Semigroup, text: str) -> "FinFunc":
        """Lines ``element-literal rational``; ``#`` starts a comment line."""
        values: dict = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.rsplit(None, 1)
            if len(parts) != 2:
                raise LiteralError(f"function line needs an element and a value: {line!r}")
            try:
                v = Fraction(parts[1])
            except ValueError:
                raise LiteralError(f"bad rational {parts[1]!r}") from None
            x = S.parse(parts[0])
            values[x] = values.get(x, 0) + v
        return cls.from_dict(S, values)

    def __call__(self, x) -> Fraction:
        return self.as_dict().get(x, Fraction(0))

    def as_dict(self) -> dict:
        return dict(self.values)

    @property
    def support(self) -> FiniteSubset:
        return FiniteSubset(self.semigroup, (x for x, _ in self.values), trusted=True)

    def __add__(self, other: "FinFunc") -> "FinFunc":
        d = self.as_dict()
        for x, v in other.values:
            d[x] = d.get(x, 0) + v
        return FinFunc.from_dict(self.semigroup, d)

    def scale(self, c) -> "FinFunc":
        c = Fraction(c)
        return FinFunc.from_dict(self.semigroup, {x: c * v for x, v in self.values})

    def __eq__(self, other) -> bool:
        if isinstance(other, FinFunc):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def to_json(self) -> dict:
        S = self.semigroup
        return {S.format(x): _q(v) for x, v in self.values}


def _q(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def convolve(S: Semigroup, f: FinFunc, g: FinFunc) -> FinFunc:
    """``(f * g)(x) = sum of f(s) g(t) over st = x``."""
    out: dict = {}
    for s, a in f.values:
        for t, b in g.values:
            x = S.mul(s, t)
            out[x] = out.get(x, 0) + a * b
    return FinFunc.from_dict(S, out)


def act(S: Semigroup, s, f: FinFunc, side=Side.LEFT) -> FinFunc:
    """``s * f`` (left) or ``f * s`` (right) for finitely supported ``f``."""
    out: dict = {}
    for t, v in f.values:
        x = S.act(s, t, side)
        out[x] = out.get(x, 0) + v
    return FinFunc.from_dict(S, out)


@dataclass(frozen=True)
class PartialActionResult:
    element: object
    side: Side
    defined_everywhere: bool
    values: FinFunc
    fiber_counts: tuple        # of (image point, number of support points mapped there)
    max_fiber: int
    image_of_support: FiniteSubset
    verdict: str
    window: Optional[int] = None

    def to_json(self) -> dict:
        S = self.values.semigroup
        return {
            "element": S.format(self.element),
            "side": self.side.value,
            "defined_everywhere": self.defined_everywhere,
            "window": self.window,
            "verdict": self.verdict,
            "max_fiber": self.max_fiber,
            "values": self.values.to_json(),
            "fiber_counts": {S.format(x): k for x, k in self.fiber_counts},
            "support": self.values.support.format(),
            "image_of_support": self.image_of_support.format(),
        }


def partial_action(S: Semigroup, s, f: FinFunc, side=Side.LEFT,
                   window: Optional[int] = None, verdict: Optional[str] = None) -> PartialActionResult:
    """``s * f`` with fiber bookkeeping.

    For a genuinely finitely supported ``f`` every fiber sum is finite and the
    verdict is ``Bounded``. When ``f`` is a window truncation of an infinite
    function, pass ``window`` (and optionally a sweep verdict).
    """
    S.check(s)
    side = as_side(side)
    counts: dict = {}
    for t, _ in f.values:
        x = S.act(s, t, side)
        counts[x] = counts.get(x, 0) + 1
    ordered = tuple(sorted(counts.items(), key=lambda kv: S.key(kv[0])))
    return PartialActionResult(
        element=s, side=side, defined_everywhere=True, values=act(S, s, f, side),
        fiber_counts=ordered, max_fiber=max(counts.values(), default=0),
        image_of_support=FiniteSubset(S, counts, trusted=True),
        verdict=verdict or (BOUNDED if window is None else WINDOW_LIMITED), window=window)


def indicator_sweep(S: Semigroup, s, A: SetSpec, n_values: Sequence[int],
                    side=Side.LEFT) -> list[PartialActionResult]:
    """``s * chi_A`` truncated to each window; the verdict of every entry is
    ``UnboundedTrend`` when the largest fiber strictly grows along the sweep,
    ``Bounded`` when ``A`` is a listed finite set, ``WindowLimited`` otherwise."""
    results = []
    for n in n_values:
        f = FinFunc.indicator(S, A.restrict(S, n))
        results.append(partial_action(S, s, f, side, window=n))
    fibs = [r.max_fiber for r in results]
    if A.is_finite:
        tag = BOUNDED
    elif len(fibs) > 1 and all(a < b for a, b in zip(fibs, fibs[1:])):
        tag = UNBOUNDED_TREND
    else:
        tag = WINDOW_LIMITED
    return [PartialActionResult(**{**r.__dict__, "verdict": tag}) for r in results]


@dataclass(frozen=True)
class IndicatorVerdict:
    max_fiber: int
    parts: tuple               # of FiniteSubset
    parts_injective: bool
    peak_value: Fraction       # largest value of s * chi_A
    simple: bool               # s * chi_A equals the sum of chi over s * part

    @property
    def consistent(self) -> bool:
        return (self.parts_injective and self.simple
                and self.max_fiber == len(self.parts) == self.peak_value)

    def to_json(self) -> dict:
        return {"max_fiber": self.max_fiber, "parts": [p.format() for p in self.parts],
                "parts_injective": self.parts_injective, "peak_value": _q(self.peak_value),
                "simple": self.simple, "consistent": self.consistent}


def bounded_indicator_verdict(S: Semigroup, s, A, side=Side.LEFT) -> IndicatorVerdict:
    """Three independent views of ``s * chi_A`` on a finite set ``A``: the
    largest fiber, a partition into injectively-acted parts, and the values
    of the convolution itself."""
    side = as_side(side)
    A = A if isinstance(A, FiniteSubset) else FiniteSubset(S, A)
    biggest = fibers(S, s, A, side).max_fiber
    parts = injective_partition(S, s, A, side)
    injective = all(acts_injectively(S, s, p, side)[0] for p in parts)
    injective = injective and sum(map(len, parts)) == len(A) and set().union(*parts) == set(A)
    direct = convolve(S, FinFunc.delta(S, s), FinFunc.indicator(S, A)) if side is Side.LEFT \
        else convolve(S, FinFunc.indicator(S, A), FinFunc.delta(S, s))
    layered = FinFunc.from_dict(S, {})
    for p in parts:
        layered = layered + FinFunc.indicator(S, (S.act(s, a, side) for a in p))
    peak = max((v for _, v in direct.values), default=Fraction(0))
    return IndicatorVerdict(biggest, tuple(parts), injective, peak, direct == layered)


@dataclass(frozen=True)
class AstCheck:
    equal: bool
    acted: Fraction            # integral of s * f
    original: Fraction         # integral of f
    guaranteed: bool           # the weights are fairly invariant on this side


def integrate(f: FinFunc, w: WeightVector) -> Fraction:
    return sum((v * w(x) for x, v in f.values), Fraction(0))


def ast_invariance_check(S: Semigroup, w: WeightVector, f: FinFunc, s, side=Side.LEFT) -> AstCheck:
    """Exact comparison of the integrals of ``s * f`` and ``f`` against ``w``."""
    side = as_side(side)
    acted, original = integrate(act(S, s, f, side), w), integrate(f, w)
    guaranteed = fair_check_finite(S, w, side).passed
    return AstCheck(acted == original, acted, original, guaranteed)
