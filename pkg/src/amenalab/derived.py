"""Adjoined zero/identity and direct products."""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import FiniteSubset, LiteralError, NoInvolution, Semigroup


@dataclass(frozen=True)
class Adjoined:
    """Marker element added by :class:`AdjoinZero` / :class:`AdjoinIdentity`.

    ``owner`` is the derived semigroup's name, so repeated adjunctions
    produce distinct markers.
    """

    symbol: str
    owner: str

    def __repr__(self) -> str:
        return f"<{self.symbol}@{self.owner}>"


def split_top_level(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for c in text:
        if c in "(<[":
            depth += 1
        elif c in ")>]":
            depth -= 1
        if c == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


class _Adjoin(Semigroup):
    symbol = "?"
    literal = "?"

    def __init__(self, inner: Semigroup):
        self.inner = inner
        self.finite = inner.finite
        self.commutative = inner.commutative
        self.name = f"{inner.name}^{self.symbol}"
        self.marker = Adjoined(self.symbol, self.name)

    def contains(self, x) -> bool:
        return x == self.marker or self.inner.contains(x)

    def key(self, x):
        if x == self.marker:
            return (0,)
        return (1, self.inner.key(x))

    def format(self, x) -> str:
        return self.literal if x == self.marker else self.inner.format(x)

    def parse(self, text: str):
        if text.strip() == self.literal:
            return self.marker
        return self.inner.parse(text)

    @property
    def generators(self):
        return self.inner.generators + (self.marker,)

    @property
    def has_involution(self) -> bool:
        return self.inner.has_involution

    def involution(self, a):
        if a == self.marker:
            return a
        return self.inner.involution(a)

    def elements(self) -> FiniteSubset:
        return FiniteSubset(self, list(self.inner.elements()) + [self.marker], trusted=True)

    def window(self, n: int) -> FiniteSubset:
        return FiniteSubset(self, list(self.inner.window(n)) + [self.marker], trusted=True)

    def in_window(self, x, n: int) -> bool:
        return x == self.marker or self.inner.in_window(x, n)

    def preimage_pad(self, s):
        if s == self.marker:
            return 0 if self.finite else None
        return self.inner.preimage_pad(s)

    def random_element(self, rng, size=6):
        if rng.random() < 0.1:
            return self.marker
        return self.inner.random_element(rng, size)

    def order(self) -> int:
        return self.inner.order() + 1


class AdjoinZero(_Adjoin):
    symbol = "0"
    literal = "zero"

    def __init__(self, inner: Semigroup):
        super().__init__(inner)
        self.zero = self.marker
        self.identity = inner.identity

    def mul(self, a, b):
        if a == self.marker or b == self.marker:
            return self.marker
        return self.inner.mul(a, b)

    def in_right_ideal(self, s, x):
        if x == self.marker:
            return True
        if s == self.marker:
            return False
        return self.inner.in_right_ideal(s, x)

    def in_left_ideal(self, s, x):
        if x == self.marker:
            return True
        if s == self.marker:
            return False
        return self.inner.in_left_ideal(s, x)


class AdjoinIdentity(_Adjoin):
    symbol = "1"
    literal = "one"

    def __init__(self, inner: Semigroup):
        super().__init__(inner)
        self.identity = self.marker
        self.zero = inner.zero

    def mul(self, a, b):
        if a == self.marker:
            return b
        if b == self.marker:
            return a
        return self.inner.mul(a, b)

    def in_right_ideal(self, s, x):
        if s == self.marker or x == s:
            return True
        if x == self.marker:
            return False
        return self.inner.in_right_ideal(s, x)

    def in_left_ideal(self, s, x):
        if s == self.marker or x == s:
            return True
        if x == self.marker:
            return False
        return self.inner.in_left_ideal(s, x)


class Product(Semigroup):
    """Direct product with componentwise multiplication; elements are pairs."""

    def __init__(self, left: Semigroup, right: Semigroup):
        self.left = left
        self.right = right
        self.finite = left.finite and right.finite
        self.commutative = left.commutative and right.commutative
        self.name = f"({left.name})x({right.name})"
        if left.zero is not None and right.zero is not None:
            self.zero = (left.zero, right.zero)
        if left.identity is not None and right.identity is not None:
            self.identity = (left.identity, right.identity)

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and self.left.contains(x[0]) and self.right.contains(x[1]))

    def key(self, x):
        return (self.left.key(x[0]), self.right.key(x[1]))

    def format(self, x) -> str:
        return f"<{self.left.format(x[0])}, {self.right.format(x[1])}>"

    def parse(self, text: str):
        body = text.strip()
        if not (body.startswith("<") and body.endswith(">")):
            raise LiteralError(f"product literals look like <a, b>: {text!r}")
        parts = split_top_level(body[1:-1])
        if len(parts) != 2:
            raise LiteralError(f"product literal needs two components: {text!r}")
        return (self.left.parse(parts[0]), self.right.parse(parts[1]))

    @property
    def generators(self):
        return tuple((a, b) for a in self.left.generators for b in self.right.generators)

    @property
    def has_involution(self) -> bool:
        return self.left.has_involution and self.right.has_involution

    def involution(self, a):
        if not self.has_involution:
            raise NoInvolution(f"{self.name} has no involution")
        return (self.left.involution(a[0]), self.right.involution(a[1]))

    def elements(self) -> FiniteSubset:
        return FiniteSubset(self, ((a, b) for a in self.left.elements() for b in self.right.elements()),
                            trusted=True)

    def window(self, n: int) -> FiniteSubset:
        return FiniteSubset(self, ((a, b) for a in self.left.window(n) for b in self.right.window(n)),
                            trusted=True)

    def in_window(self, x, n: int) -> bool:
        return self.left.in_window(x[0], n) and self.right.in_window(x[1], n)

    def in_right_ideal(self, s, x):
        a = self.left.in_right_ideal(s[0], x[0])
        b = self.right.in_right_ideal(s[1], x[1])
        return None if a is None or b is None else a and b

    def in_left_ideal(self, s, x):
        a = self.left.in_left_ideal(s[0], x[0])
        b = self.right.in_left_ideal(s[1], x[1])
        return None if a is None or b is None else a and b

    def preimage_pad(self, s):
        a, b = self.left.preimage_pad(s[0]), self.right.preimage_pad(s[1])
        return None if a is None or b is None else max(a, b)

    def random_element(self, rng, size=6):
        return (self.left.random_element(rng, size), self.right.random_element(rng, size))

    def order(self) -> int:
        return self.left.order() * self.right.order()


ADJOIN_ZERO = "adjoin-zero"
ADJOIN_IDENTITY = "adjoin-identity"


def derive(S: Semigroup, mode, other: Semigroup | None = None) -> Semigroup:
    """``mode`` is ``"adjoin-zero"``, ``"adjoin-identity"`` or ``"product"``."""
    if mode == ADJOIN_ZERO:
        return AdjoinZero(S)
    if mode == ADJOIN_IDENTITY:
        return AdjoinIdentity(S)
    if mode == "product":
        if other is None:
            raise ValueError("product needs a second semigroup")
        return Product(S, other)
    raise ValueError(f"unknown derivation {mode!r}")


class Subsemigroup(Semigroup):
    """A finite subset of a finite semigroup that is closed under multiplication."""

    finite = True

    def __init__(self, parent: Semigroup, members):
        self.parent = parent
        self.members = FiniteSubset(parent, members)
        if not len(self.members):
            raise ValueError("a subsemigroup must be non-empty")
        for a in self.members:
            for b in self.members:
                if parent.mul(a, b) not in self.members:
                    raise ValueError(f"not closed: {parent.format(a)} * {parent.format(b)} leaves the set")
        self.name = f"{parent.name}|{{{','.join(self.members.format())}}}"
        self.commutative = parent.commutative
        z, e = parent.zero, parent.identity
        self.zero = z if z in self.members else None
        self.identity = e if e in self.members else None

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def contains(self, x) -> bool:
        return x in self.members

    def key(self, x):
        return self.parent.key(x)

    def format(self, x) -> str:
        return self.parent.format(x)

    def parse(self, text: str):
        x = self.parent.parse(text)
        if x not in self.members:
            raise LiteralError(f"{text!r} is not in the subsemigroup")
        return x

    def elements(self) -> FiniteSubset:
        return FiniteSubset(self, self.members, trusted=True)

    def window(self, n: int) -> FiniteSubset:
        return self.elements()

    def in_window(self, x, n: int) -> bool:
        return True

    def random_element(self, rng, size=6):
        return rng.choice(self.members.items)
