"""Base semigroup handle, finite subsets and shared errors.

Elements are plain hashable canonical values (strings, int tuples, ints).
A handle knows how to multiply, order, print and parse its own elements;
membership of a value in the family is checked by :meth:`Semigroup.check`.
"""

from __future__ import annotations

import random
from enum import Enum
from typing import Any, Callable, Hashable, Iterable, Iterator, Optional

Element = Hashable


class AmenalabError(Exception):
    """Base class for all errors raised by the package."""


class FamilyMismatch(AmenalabError, ValueError):
    """An element does not belong to the semigroup it was used with."""


class NoInvolution(AmenalabError):
    pass


class NotFinite(AmenalabError):
    pass


class NonAssociative(AmenalabError, ValueError):
    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"table is not associative at (a, b, c) = {triple}")


class LiteralError(AmenalabError, ValueError):
    """An element literal could not be parsed."""


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


def as_side(side) -> Side:
    return side if isinstance(side, Side) else Side(str(side).lower())


class Semigroup:
    """A semigroup family with canonical-form elements.

    Subclasses implement ``mul``, ``contains``, ``key``, ``format`` and
    ``parse``; the remaining hooks are optional and return ``None`` (or
    raise) when the family does not support them.
    """

    name: str = "semigroup"
    finite: bool = False
    commutative: bool = False
    zero: Optional[Element] = None
    identity: Optional[Element] = None

    # -- required -----------------------------------------------------
    def mul(self, a, b):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def key(self, x):
        """Sort key; total order on canonical forms of this family."""
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    # -- optional -----------------------------------------------------
    @property
    def generators(self) -> tuple:
        return ()

    @property
    def has_involution(self) -> bool:
        return False

    def involution(self, a):
        raise NoInvolution(f"{self.name} has no involution")

    def window(self, n: int) -> "FiniteSubset":
        raise NotImplementedError(f"{self.name} has no window sequence")

    def in_window(self, x, n: int) -> bool:
        return x in self.window(n)

    def window_set(self, n: int) -> frozenset:
        """Window ``n`` as an unordered set (skips sorting in hot loops)."""
        return self.window(n).as_set()

    def in_right_ideal(self, s, x) -> Optional[bool]:
        """Closed-form test for ``x in sS``; ``None`` when unavailable."""
        return None

    def in_left_ideal(self, s, x) -> Optional[bool]:
        """Closed-form test for ``x in Ss``; ``None`` when unavailable."""
        return None

    def preimage_pad(self, s) -> Optional[int]:
        """Padding ``p`` with every ``t`` such that ``st`` (or ``ts``) lies in
        window ``n`` already lying in window ``n + p``; ``None`` if no such
        bound exists."""
        return 0 if self.finite else None

    def window_size(self, n: int) -> int:
        return len(self.window(n))

    def random_element(self, rng: random.Random, size: int = 6):
        raise NotImplementedError

    def canonicalize(self, raw):
        """Bring a raw payload into canonical form (identity on canonical ones)."""
        x = raw
        if not self.contains(x):
            raise FamilyMismatch(f"{raw!r} is not an element of {self.name}")
        return x

    def elements(self) -> "FiniteSubset":
        raise NotFinite(f"{self.name} is infinite")

    def symdiff_all(self, s, n: int, variant: str, side: Side) -> Optional[int]:
        """Closed-form symmetric-difference count with ``A = S``, if known."""
        return None

    # -- shared -------------------------------------------------------
    def check(self, *xs) -> None:
        for x in xs:
            if not self.contains(x):
                raise FamilyMismatch(f"{x!r} is not an element of {self.name}")

    def act(self, s, x, side=Side.LEFT):
        return self.mul(s, x) if as_side(side) is Side.LEFT else self.mul(x, s)

    def subset(self, xs: Iterable) -> "FiniteSubset":
        return FiniteSubset(self, xs)

    def order(self) -> int:
        return len(self.elements())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class FiniteSubset:
    """Sorted, deduplicated finite set of elements of one semigroup."""

    __slots__ = ("semigroup", "items", "_set")

    def __init__(self, semigroup: Semigroup, xs: Iterable = (), *, trusted: bool = False):
        xs = set(xs)
        if not trusted:
            semigroup.check(*xs)
        self.semigroup = semigroup
        self.items = tuple(sorted(xs, key=semigroup.key))
        self._set = frozenset(self.items)

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, x) -> bool:
        return x in self._set

    def __getitem__(self, i):
        return self.items[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, FiniteSubset):
            return self._set == other._set
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __le__(self, other: "FiniteSubset") -> bool:
        return self._set <= other._set

    def as_set(self) -> frozenset:
        return self._set

    def filter(self, pred: Callable[[Any], bool]) -> "FiniteSubset":
        return FiniteSubset(self.semigroup, (x for x in self.items if pred(x)), trusted=True)

    def image(self, s, side=Side.LEFT) -> "FiniteSubset":
        S = self.semigroup
        return FiniteSubset(S, (S.act(s, x, side) for x in self.items), trusted=True)

    def format(self) -> list[str]:
        return [self.semigroup.format(x) for x in self.items]

    def __repr__(self) -> str:
        body = ", ".join(self.format()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"{{{body}{more}}}"
