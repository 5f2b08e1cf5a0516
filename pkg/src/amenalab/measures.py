"""Exact fair-invariance on finite carriers.

On a finite semigroup a finitely-additive probability measure is a vector of
singleton masses ``w``. Since every translation is injective on a singleton
and finite additivity splits any injectively-acted set into singletons, ``w``
is left fairly invariant exactly when ``w(sa) = w(a)`` for all ``s, a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .actions import acts_injectively
from .derived import AdjoinZero, Product, Subsemigroup
from .finite import quotient
from .semigroup import FiniteSubset, LiteralError, NotFinite, Semigroup, Side, as_side


@dataclass(frozen=True)
class WeightVector:
    semigroup: Semigroup
    masses: tuple  # of (element, Fraction), sorted, zero masses omitted

    @classmethod
    def from_dict(cls, S: Semigroup, masses: dict) -> "WeightVector":
        clean = {}
        for x, m in masses.items():
            S.check(x)
            m = Fraction(m)
            if m < 0:
                raise ValueError(f"negative mass at {S.format(x)}")
            if m:
                clean[x] = clean.get(x, 0) + m
        return cls(S, tuple(sorted(clean.items(), key=lambda kv: S.key(kv[0]))))

    @classmethod
    def uniform(cls, S: Semigroup) -> "WeightVector":
        elems = list(_carrier(S))
        return cls.from_dict(S, {x: Fraction(1, len(elems)) for x in elems})

    @classmethod
    def dirac(cls, S: Semigroup, x) -> "WeightVector":
        return cls.from_dict(S, {x: 1})

    @classmethod
    def parse(cls, S: Semigroup, text: str) -> "WeightVector":
        """Lines ``element-literal num/den``; ``#`` starts a comment line."""
        masses = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.rsplit(None, 1)
            if len(parts) != 2:
                raise LiteralError(f"weight line needs an element and a mass: {line!r}")
            literal, mass = parts
            try:
                m = Fraction(mass)
            except ValueError:
                raise LiteralError(f"bad rational {mass!r}") from None
            x = S.parse(literal)
            masses[x] = masses.get(x, 0) + m
        return cls.from_dict(S, masses)

    def to_text(self) -> str:
        return "".join(f"{self.semigroup.format(x)} {_q(m)}\n" for x, m in self.masses)

    def __call__(self, x) -> Fraction:
        return self.as_dict().get(x, Fraction(0))

    def as_dict(self) -> dict:
        return dict(self.masses)

    def mass(self, xs: Iterable) -> Fraction:
        d = self.as_dict()
        return sum((d.get(x, Fraction(0)) for x in set(xs)), Fraction(0))

    @property
    def total(self) -> Fraction:
        return sum((m for _, m in self.masses), Fraction(0))

    def is_probability(self) -> bool:
        return self.total == 1

    def to_json(self) -> dict:
        return {self.semigroup.format(x): _q(m) for x, m in self.masses}


def _q(m: Fraction) -> str:
    m = Fraction(m)
    return f"{m.numerator}/{m.denominator}"


def _carrier(S: Semigroup) -> FiniteSubset:
    if not S.finite:
        raise NotFinite(f"{S.name} is infinite; fair checks need a finite carrier")
    return S.elements()


@dataclass(frozen=True)
class FairnessVerdict:
    passed: bool
    side: Side
    s: object = None
    a: object = None
    values: Optional[tuple] = None  # (w(sa), w(a)) or (w(as), w(a))
    semigroup: Optional[Semigroup] = None

    def to_json(self) -> dict:
        out = {"pass": self.passed, "side": self.side.value}
        if not self.passed:
            S = self.semigroup
            out["witness"] = {"s": S.format(self.s), "a": S.format(self.a),
                              "product": S.format(S.act(self.s, self.a, self.side))}
            out["values"] = [_q(v) for v in self.values]
        return out


def fair_check_finite(S: Semigroup, w: WeightVector, side=Side.LEFT) -> FairnessVerdict:
    side = as_side(side)
    elems = _carrier(S)
    if not w.is_probability():
        raise ValueError(f"weights sum to {w.total}, not 1")
    d = w.as_dict()
    zero = Fraction(0)
    for s in elems:
        for a in elems:
            left, right = d.get(S.act(s, a, side), zero), d.get(a, zero)
            if left != right:
                return FairnessVerdict(False, side, s, a, (left, right), S)
    return FairnessVerdict(True, side, semigroup=S)


def fair_check_subsets(S: Semigroup, w: WeightVector, side=Side.LEFT) -> bool:
    """The definition itself: ``w(sA) = w(A)`` for every ``s`` and every ``A``
    on which ``s`` acts injectively. Exponential; for small carriers only."""
    side = as_side(side)
    elems = list(_carrier(S))
    for s in elems:
        for k in range(1, len(elems) + 1):
            for A in combinations(elems, k):
                if acts_injectively(S, s, A, side)[0]:
                    if w.mass(S.act(s, a, side) for a in A) != w.mass(A):
                        return False
    return True


def _union_find(elems, pairs) -> list[list]:
    parent = {x: x for x in elems}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict = {}
    for x in elems:
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def solve_fair_classes(S: Semigroup, side=Side.LEFT) -> list[FiniteSubset]:
    """Classes of the equivalence generated by ``a ~ sa`` (or ``a ~ as``).

    A probability vector is fairly invariant iff it is constant on every
    class, so the solutions are the convex hull of the normalised class
    indicators.
    """
    side = as_side(side)
    elems = list(_carrier(S))
    pairs = ((a, S.act(s, a, side)) for s in elems for a in elems)
    classes = [FiniteSubset(S, c, trusted=True) for c in _union_find(elems, pairs)]
    return sorted(classes, key=lambda c: S.key(c[0]))


def extreme_solutions(S: Semigroup, side=Side.LEFT) -> list[WeightVector]:
    return [WeightVector.from_dict(S, {x: Fraction(1, len(c)) for x in c})
            for c in solve_fair_classes(S, side)]


# -- transfers -----------------------------------------------------------

INVOLUTION, PRODUCT, RESTRICT, ADJOIN_ZERO = "involution", "product", "restrict", "adjoin-zero"
TRANSFER_MODES = (INVOLUTION, PRODUCT, RESTRICT, ADJOIN_ZERO)


@dataclass(frozen=True)
class TransferResult:
    semigroup: Semigroup
    weights: WeightVector
    verdict: FairnessVerdict


def transfer_check(S: Semigroup, w: WeightVector, mode: str, side=Side.LEFT, *,
                   other: Optional[Semigroup] = None, other_weights: Optional[WeightVector] = None,
                   subset=None) -> TransferResult:
    """Move ``w`` along a construction and check the result.

    ``involution``  ``v(x) = w(x*)`` on ``S``, checked on the opposite side;
    ``product``     ``w (x) other_weights`` on ``S x other``;
    ``restrict``    ``w`` conditioned on the subsemigroup ``subset``;
    ``adjoin-zero`` ``w`` extended by mass 0 at a new zero.
    """
    side = as_side(side)
    _carrier(S)
    if mode == INVOLUTION:
        if not S.has_involution:
            raise ValueError(f"{S.name} has no involution")
        v = WeightVector.from_dict(S, {x: w(S.involution(x)) for x in S.elements()})
        return TransferResult(S, v, fair_check_finite(S, v, side.other))
    if mode == PRODUCT:
        if other is None or other_weights is None:
            raise ValueError("product transfer needs a second semigroup and its weights")
        P = Product(S, other)
        v = WeightVector.from_dict(P, {(a, b): m * n for a, m in w.masses for b, n in other_weights.masses})
        return TransferResult(P, v, fair_check_finite(P, v, side))
    if mode == RESTRICT:
        if subset is None:
            raise ValueError("restriction needs a subsemigroup")
        T = Subsemigroup(S, subset)
        total = w.mass(T.members)
        if total == 0:
            raise ValueError("the subsemigroup has zero mass")
        v = WeightVector.from_dict(T, {x: w(x) / total for x in T.members})
        return TransferResult(T, v, fair_check_finite(T, v, side))
    if mode == ADJOIN_ZERO:
        Z = AdjoinZero(S)
        v = WeightVector.from_dict(Z, w.as_dict())
        return TransferResult(Z, v, fair_check_finite(Z, v, side))
    raise ValueError(f"unknown transfer mode {mode!r}; expected one of {TRANSFER_MODES}")


def quotient_pushforward(S: Semigroup, w: WeightVector, classes, side=Side.LEFT) -> TransferResult:
    """Push ``w`` through the quotient by a congruence and check the image."""
    Q, index = quotient(S, classes)
    masses: dict = {}
    for x, m in w.masses:
        masses[index[x]] = masses.get(index[x], 0) + m
    v = WeightVector.from_dict(Q, masses)
    return TransferResult(Q, v, fair_check_finite(Q, v, side))


# -- the positive-mass question, finite shadow ------------------------------

@dataclass(frozen=True)
class MassRange:
    element: str
    least: Fraction
    greatest: Fraction


def singleton_mass_ranges(S: Semigroup, side=Side.LEFT) -> list[MassRange]:
    """For each element, the least and greatest mass a fairly invariant
    probability vector can give it.

    Solutions are mixtures of the normalised class indicators, so the
    greatest mass is ``1/|class|`` and the least is ``0`` unless there is a
    single class.
    """
    classes = solve_fair_classes(S, side)
    out = []
    for c in classes:
        hi = Fraction(1, len(c))
        lo = hi if len(classes) == 1 else Fraction(0)
        out.extend(MassRange(S.format(x), lo, hi) for x in c)
    return out


def forced_positive_mass(S: Semigroup, side=Side.LEFT) -> list[str]:
    """Elements that every fairly invariant vector must weigh positively."""
    return [r.element for r in singleton_mass_ranges(S, side) if r.least > 0]
