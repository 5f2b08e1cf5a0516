"""Følner-type ratios on window sequences.

For a window ``F_n``, an acting element ``s`` and a set ``A``, three
symmetric differences are available:

``classical``  ``s(A n F_n)  ^  (A n F_n)``
``proof``      ``s(A n F_n)  ^  (sA n F_n)``
``theorem``    ``s(A n F_n)  ^  (sS n F_n)``

With ``A = S`` the last two coincide. The ratio is the count over ``|F_n|``.
Right actions replace ``sX`` by ``Xs`` and ``sS`` by ``Ss``.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .families import CLASSICAL, PROOF, THEOREM
from .semigroup import AmenalabError, Semigroup, Side, as_side
from .sets import AllOfS, SetSpec

VARIANTS = (CLASSICAL, PROOF, THEOREM)
CSV_COLUMNS = ("family", "element", "side", "variant", "n", "window_size",
               "symdiff", "ratio_num", "ratio_den")


class NoPadding(AmenalabError):
    """``sA n F_n`` cannot be computed: no membership oracle and no padding bound."""


def _ideal_member(S: Semigroup, s, side: Side):
    """Membership test for ``sS`` (or ``Ss``), or ``None`` without an oracle."""
    test = S.in_right_ideal if side is Side.LEFT else S.in_left_ideal
    if test(s, s) is None:
        return None
    return lambda x: test(s, x)


def _translate_target(S: Semigroup, s, A: SetSpec, n: int, side: Side, window: set) -> set:
    """``sA n F_n`` (or ``As n F_n``)."""
    member = _ideal_member(S, s, side) if isinstance(A, AllOfS) else None
    if member is not None:
        return {x for x in window if member(x)}
    if A.is_finite:
        return {y for y in (S.act(s, a, side) for a in A.items) if y in window}
    pad = S.preimage_pad(s)
    if pad is None:
        raise NoPadding(f"cannot bound preimages of {S.format(s)} in {S.name}")
    big = S.window_set(n + pad)
    return {y for y in (S.act(s, a, side) for a in big if A.contains(S, a)) if y in window}


def symdiff_count(S: Semigroup, s, A: Optional[SetSpec] = None, n: int = 1,
                  variant: str = CLASSICAL, side=Side.LEFT, exact: bool = False) -> int:
    """Exact size of the chosen symmetric difference at window ``n``.

    With ``A = S`` a family's closed-form count is used when available,
    unless ``exact`` forces enumeration of the window.
    """
    S.check(s)
    side = as_side(side)
    A = A if A is not None else AllOfS()
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(A, AllOfS) and not exact:
        fast = S.symdiff_all(s, n, variant, side)
        if fast is not None:
            return fast
    window = S.window_set(n)
    if not window:
        return 0
    AF = window if isinstance(A, AllOfS) else {x for x in window if A.contains(S, x)}
    image = {S.act(s, a, side) for a in AF}
    if variant == CLASSICAL:
        other = AF
    elif variant == PROOF:
        other = _translate_target(S, s, A, n, side, window)
    else:
        other = _translate_target(S, s, AllOfS(), n, side, window)
    return len(image ^ other)


@dataclass(frozen=True)
class Record:
    n: int
    window_size: int
    symdiff: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.symdiff, self.window_size)


@dataclass
class RatioSeries:
    family: str
    element: str
    side: Side
    variant: str
    records: list = field(default_factory=list)
    threshold: Fraction = Fraction(1, 20)

    @property
    def ratios(self) -> list[Fraction]:
        return [r.ratio for r in self.records]

    def monotone_from(self) -> Optional[int]:
        """Least ``n`` from which the ratios never increase."""
        if not self.records:
            return None
        start = len(self.records) - 1
        while start > 0 and self.records[start - 1].ratio >= self.records[start].ratio:
            start -= 1
        return self.records[start].n

    def first_below(self, threshold: Optional[Fraction] = None) -> Optional[int]:
        t = self.threshold if threshold is None else threshold
        for r in self.records:
            if r.ratio <= t:
                return r.n
        return None

    def summary(self) -> dict:
        ratios = self.ratios
        if not ratios:
            return {"records": 0}
        tail = ratios[len(ratios) // 2:]
        return {
            "records": len(ratios),
            "min": min(ratios),
            "max": max(ratios),
            "last": ratios[-1],
            "monotone_decreasing": self.monotone_from() == self.records[0].n,
            "monotone_from": self.monotone_from(),
            # over the computed tail only; nothing is extrapolated
            "liminf_estimate": min(tail),
            "limsup_estimate": max(tail),
            "threshold": self.threshold,
            "below_threshold": ratios[-1] <= self.threshold,
            "first_below": self.first_below(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            q = r.ratio
            w.writerow([self.family, self.element, self.side.value, self.variant, r.n,
                        r.window_size, r.symdiff, q.numerator, q.denominator])
        return buf.getvalue()


def folner_sweep(S: Semigroup, s, A: Optional[SetSpec] = None, n_range: Iterable[int] = range(1, 11),
                 variant: str = CLASSICAL, side=Side.LEFT, threshold=Fraction(1, 20),
                 exact: bool = False) -> RatioSeries:
    side = as_side(side)
    series = RatioSeries(S.name, S.format(s), side, variant, threshold=Fraction(threshold))
    last = None
    for n in n_range:
        if last is not None and n <= last:
            raise ValueError("n range must be strictly increasing")
        last = n
        size = S.window_size(n)
        if size == 0:
            raise ValueError(f"window {n} of {S.name} is empty")
        series.records.append(Record(n, size, symdiff_count(S, s, A, n, variant, side, exact)))
    return series


def empirical_measure(A: SetSpec, S: Semigroup, n: int) -> Fraction:
    """``|A n F_n| / |F_n|``."""
    window = S.window(n)
    if not len(window):
        raise ValueError(f"window {n} of {S.name} is empty")
    if isinstance(A, AllOfS):
        return Fraction(1)
    return Fraction(sum(1 for x in window if A.contains(S, x)), len(window))


def measure_series(A: SetSpec, S: Semigroup, n_range: Iterable[int]) -> list[tuple[int, Fraction]]:
    return [(n, empirical_measure(A, S, n)) for n in n_range]


def growth_exponent(points: Iterable[tuple[int, int]]) -> float:
    """Least-squares slope of ``log y`` against ``log n`` (a growth-order estimate)."""
    pts = [(math.log(n), math.log(y)) for n, y in points if n > 0 and y > 0]
    if len(pts) < 2:
        raise ValueError("need at least two positive points")
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope
