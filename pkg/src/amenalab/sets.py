"""Symbolic subsets of a semigroup, each with a membership oracle.

Sets are evaluated against a handle: ``A.contains(S, x)``. Restricting to a
window gives an explicit :class:`FiniteSubset`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .semigroup import FiniteSubset, LiteralError, Semigroup, Side, as_side


class SetSpec:
    label = "set"
    #: ``True`` when the set is known to be finite (its elements are listed)
    is_finite = False

    def contains(self, S: Semigroup, x) -> bool:
        raise NotImplementedError

    def restrict(self, S: Semigroup, n: int) -> FiniteSubset:
        return S.window(n).filter(lambda x: self.contains(S, x))

    def describe(self, S: Semigroup) -> str:
        return self.label


@dataclass(frozen=True)
class AllOfS(SetSpec):
    label = "S"

    def contains(self, S, x):
        return True


@dataclass(frozen=True)
class FiniteList(SetSpec):
    items: tuple
    is_finite = True

    def contains(self, S, x):
        return x in self.items

    def restrict(self, S, n):
        return S.subset(x for x in self.items if S.in_window(x, n))

    def describe(self, S):
        return "{" + ", ".join(S.format(x) for x in self.items) + "}"


def Singleton(x) -> FiniteList:
    return FiniteList((x,))


@dataclass(frozen=True)
class PrefixCylinder(SetSpec):
    """Elements whose canonical word starts with ``prefix``.

    ``proper=True`` excludes the word ``prefix`` itself, so on a free
    semigroup ``PrefixCylinder("a", proper=True)`` is ``aS``.
    """

    prefix: str
    proper: bool = False

    def contains(self, S, x):
        word = getattr(S, "word", None)
        if word is None:
            raise TypeError(f"{S.name} has no canonical words")
        try:
            w = word(x)
        except (TypeError, AttributeError):
            return False
        return w.startswith(self.prefix) and not (self.proper and w == self.prefix)

    def describe(self, S):
        return f"{self.prefix}S" if self.proper else f"H[{self.prefix}]"


@dataclass(frozen=True)
class RightIdeal(SetSpec):
    """``sS`` (side left) or ``Ss`` (side right)."""

    s: object
    side: Side = Side.LEFT

    def contains(self, S, x):
        side = as_side(self.side)
        verdict = S.in_right_ideal(self.s, x) if side is Side.LEFT else S.in_left_ideal(self.s, x)
        if verdict is None:
            raise TypeError(f"{S.name} has no ideal membership oracle")
        return verdict

    def describe(self, S):
        return f"{S.format(self.s)}S" if as_side(self.side) is Side.LEFT else f"S{S.format(self.s)}"


@dataclass(frozen=True)
class Column(SetSpec):
    """Bicyclic column ``{q^j p^k : j >= 0}`` for fixed ``k``."""

    k: int

    def contains(self, S, x):
        return x[1] == self.k

    def describe(self, S):
        return f"column p^{self.k}"


@dataclass(frozen=True)
class Row(SetSpec):
    """Bicyclic row ``{q^j p^k : k >= 0}`` for fixed ``j``."""

    j: int

    def contains(self, S, x):
        return x[0] == self.j

    def describe(self, S):
        return f"row q^{self.j}"


@dataclass(frozen=True)
class Interval(SetSpec):
    """Integers in ``[lo, hi]``; ``None`` means unbounded on that side."""

    lo: Optional[int] = None
    hi: Optional[int] = None

    def contains(self, S, x):
        return (self.lo is None or x >= self.lo) and (self.hi is None or x <= self.hi)

    def describe(self, S):
        lo = "-inf" if self.lo is None else self.lo
        hi = "inf" if self.hi is None else self.hi
        return f"[{lo}, {hi}]"


@dataclass(frozen=True)
class Union(SetSpec):
    parts: tuple

    def contains(self, S, x):
        return any(p.contains(S, x) for p in self.parts)

    def describe(self, S):
        return " u ".join(p.describe(S) for p in self.parts)


@dataclass(frozen=True)
class Difference(SetSpec):
    base: SetSpec
    removed: SetSpec

    def contains(self, S, x):
        return self.base.contains(S, x) and not self.removed.contains(S, x)

    def describe(self, S):
        return f"{self.base.describe(S)} \\ ({self.removed.describe(S)})"


def parse_set(S: Semigroup, text: str) -> SetSpec:
    """Parse a set literal.

    ``all`` | ``single:LIT`` | ``list:LIT;LIT;...`` | ``prefix:WORD`` |
    ``proper-prefix:WORD`` | ``ideal:LIT`` | ``left-ideal:LIT`` |
    ``column:K`` | ``row:J`` | ``interval:LO..HI`` (either bound may be empty)
    """
    text = text.strip()
    if text in ("all", "S"):
        return AllOfS()
    kind, _, arg = text.partition(":")
    try:
        if kind == "single":
            return Singleton(S.parse(arg))
        if kind == "list":
            return FiniteList(tuple(S.parse(t) for t in arg.split(";") if t.strip()))
        if kind == "prefix":
            return PrefixCylinder(arg)
        if kind == "proper-prefix":
            return PrefixCylinder(arg, proper=True)
        if kind == "ideal":
            return RightIdeal(S.parse(arg))
        if kind == "left-ideal":
            return RightIdeal(S.parse(arg), Side.RIGHT)
        if kind == "column":
            return Column(int(arg))
        if kind == "row":
            return Row(int(arg))
        if kind == "interval":
            lo, _, hi = arg.partition("..")
            return Interval(int(lo) if lo.strip() else None, int(hi) if hi.strip() else None)
    except ValueError as exc:
        raise LiteralError(f"bad set literal {text!r}: {exc}") from None
    raise LiteralError(f"unknown set literal {text!r}")
