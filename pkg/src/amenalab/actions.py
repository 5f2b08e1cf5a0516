"""Injectivity of translations on finite sets and the fiber partition of a
translation (the classes of ``t ~ t'`` iff ``st = st'``)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .semigroup import FiniteSubset, Semigroup, Side, as_side


def _as_subset(S: Semigroup, A) -> FiniteSubset:
    if isinstance(A, FiniteSubset):
        if A.semigroup is not S:
            S.check(*A)
        return A
    return FiniteSubset(S, A)


def acts_injectively(S: Semigroup, s, A, side=Side.LEFT) -> tuple[bool, Optional[tuple]]:
    """``(True, None)`` or ``(False, (a, b))`` with ``a != b`` and ``sa == sb``."""
    S.check(s)
    A = _as_subset(S, A)
    seen: dict = {}
    for a in A:
        img = S.act(s, a, side)
        if img in seen:
            return False, (seen[img], a)
        seen[img] = a
    return True, None


@dataclass(frozen=True)
class FiberPartition:
    s: object
    side: Side
    base: FiniteSubset
    fibers: tuple  # of (image, FiniteSubset), ordered by image

    @property
    def max_fiber(self) -> int:
        return max((len(f) for _, f in self.fibers), default=0)

    def fiber_sets(self) -> list[FiniteSubset]:
        return [f for _, f in self.fibers]

    def to_json(self) -> dict:
        S = self.base.semigroup
        return {
            "element": S.format(self.s),
            "side": self.side.value,
            "max_fiber": self.max_fiber,
            "fibers": [{"image": S.format(img), "members": f.format()} for img, f in self.fibers],
        }


def fibers(S: Semigroup, s, A, side=Side.LEFT) -> FiberPartition:
    S.check(s)
    side = as_side(side)
    A = _as_subset(S, A)
    groups: dict = {}
    for a in A:
        groups.setdefault(S.act(s, a, side), []).append(a)
    ordered = sorted(groups, key=S.key)
    return FiberPartition(s, side, A, tuple((img, FiniteSubset(S, groups[img], trusted=True))
                                            for img in ordered))


def injective_partition(S: Semigroup, s, A, side=Side.LEFT) -> list[FiniteSubset]:
    """Greedy partition of ``A`` into max-fiber-many parts on each of which
    ``s`` acts injectively: round ``i`` takes the ``i``-th smallest member of
    every fiber that still has one."""
    fp = fibers(S, s, A, side)
    parts = [[] for _ in range(fp.max_fiber)]
    for _, fiber in fp.fibers:
        for i, a in enumerate(fiber):
            parts[i].append(a)
    return [FiniteSubset(S, p, trusted=True) for p in parts]
