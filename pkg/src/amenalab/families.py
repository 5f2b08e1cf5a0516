"""Infinite semigroup families with canonical-form arithmetic.

============================  ================================  =========
family                        canonical payload                 literal
============================  ================================  =========
free semigroup FS_k           non-empty str over a, b, ...      ``abba``
free commutative semigroup    k-tuple of ints >= 0, not all 0   ``(1,0)``
(N, *)                        positive int                      ``12``
bicyclic monoid               (m, n) meaning q^m p^n            ``q^2 p``
polycyclic monoid P_2         "0" or (x, y) meaning x^-1 y      ``QPq``
free monogenic inverse        Munn triple (p, q, r)             ``(0,1,0)``
(Z, min)                      int                               ``-3``
============================  ================================  =========
"""

from __future__ import annotations

import itertools
import re
from typing import Optional

from .semigroup import (
    FiniteSubset,
    LiteralError,
    Semigroup,
    Side,
    as_side,
)

CLASSICAL = "classical"
PROOF = "proof"
THEOREM = "theorem"


def first_primes(n: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < n:
        if all(candidate % p for p in primes if p * p <= candidate):
            primes.append(candidate)
        candidate += 1
    return primes


def _interval_len(lo: int, hi: int) -> int:
    return max(0, hi - lo + 1)


def _rect_size(r) -> int:
    return _interval_len(r[0], r[1]) * _interval_len(r[2], r[3])


def _rect_meet(r, s):
    return (max(r[0], s[0]), min(r[1], s[1]), max(r[2], s[2]), min(r[3], s[3]))


def _rect_symdiff(r, s) -> int:
    if r is None:
        return _rect_size(s) if s is not None else 0
    if s is None:
        return _rect_size(r)
    return _rect_size(r) + _rect_size(s) - 2 * _rect_size(_rect_meet(r, s))


class FreeSemigroup(Semigroup):
    """Free semigroup on ``k`` letters; cancellative, reversal involution."""

    def __init__(self, k: int = 2):
        if not 1 <= k <= 26:
            raise ValueError("k must be in 1..26")
        self.k = k
        self.letters = "abcdefghijklmnopqrstuvwxyz"[:k]
        self._letterset = frozenset(self.letters)
        self.name = f"free:{k}"

    @property
    def generators(self):
        return tuple(self.letters)

    def mul(self, a, b):
        return a + b

    def contains(self, x) -> bool:
        return isinstance(x, str) and len(x) > 0 and set(x) <= self._letterset

    def key(self, x):
        return (len(x), x)

    def format(self, x) -> str:
        return x

    def parse(self, text: str):
        word = text.replace(" ", "")
        if not self.contains(word):
            raise LiteralError(f"not a word over {self.letters!r}: {text!r}")
        return word

    def word(self, x) -> str:
        return x

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        return a[::-1]

    def window(self, n: int) -> FiniteSubset:
        words = ("".join(t) for length in range(1, n + 1)
                 for t in itertools.product(self.letters, repeat=length))
        return FiniteSubset(self, words, trusted=True)

    def in_window(self, x, n: int) -> bool:
        return len(x) <= n

    def in_right_ideal(self, s, x):
        return len(x) > len(s) and x.startswith(s)

    def in_left_ideal(self, s, x):
        return len(x) > len(s) and x.endswith(s)

    def preimage_pad(self, s) -> int:
        return 0

    def window_size(self, n: int) -> int:
        return sum(self.k ** i for i in range(1, n + 1))

    def random_element(self, rng, size=6):
        return "".join(rng.choice(self.letters) for _ in range(rng.randint(1, size)))


class FreeCommutative(Semigroup):
    """Free commutative semigroup on ``k`` generators, as N^k minus the origin."""

    commutative = True

    def __init__(self, k: int = 2):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.name = f"freecomm:{k}"

    @property
    def generators(self):
        return tuple(tuple(int(i == j) for j in range(self.k)) for i in range(self.k))

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == self.k
                and all(isinstance(c, int) and c >= 0 for c in x) and any(x))

    def key(self, x):
        return (max(x), x)

    def format(self, x) -> str:
        if self.k == 1:
            return str(x[0])
        return "(" + ",".join(map(str, x)) + ")"

    def parse(self, text: str):
        body = text.strip().strip("()")
        try:
            x = tuple(int(c) for c in body.split(","))
        except ValueError:
            raise LiteralError(f"bad vector literal {text!r}") from None
        if not self.contains(x):
            raise LiteralError(f"{text!r} is not a non-zero vector of length {self.k}")
        return x

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        return a

    def window(self, n: int) -> FiniteSubset:
        pts = (v for v in itertools.product(range(n), repeat=self.k) if any(v))
        return FiniteSubset(self, pts, trusted=True)

    def in_window(self, x, n: int) -> bool:
        return max(x) < n

    def in_right_ideal(self, s, x):
        return x != s and all(a >= b for a, b in zip(x, s))

    in_left_ideal = in_right_ideal

    def preimage_pad(self, s) -> int:
        return 0

    def window_size(self, n: int) -> int:
        return n ** self.k - 1

    def random_element(self, rng, size=6):
        while True:
            v = tuple(rng.randint(0, size) for _ in range(self.k))
            if any(v):
                return v


class NatMul(Semigroup):
    """The positive integers under multiplication.

    Window ``n`` is the prime box: products of the first ``n`` primes with
    every exponent in ``[0, n]``; it has ``(n + 1) ** n`` elements, so the
    closed-form count in :meth:`symdiff_all` is what makes large ``n`` usable.
    """

    commutative = True
    name = "natmul"
    identity = 1

    @property
    def generators(self):
        return tuple(first_primes(8))

    def mul(self, a, b):
        return a * b

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and x >= 1

    def key(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        try:
            x = int(text)
        except ValueError:
            raise LiteralError(f"bad integer literal {text!r}") from None
        if x < 1:
            raise LiteralError("natmul elements are positive")
        return x

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        return a

    def exponents(self, x, n: int) -> Optional[list[int]]:
        """Exponents of ``x`` over the first ``n`` primes, or ``None`` if
        another prime divides ``x``."""
        out = []
        for p in first_primes(n):
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            out.append(e)
        return out if x == 1 else None

    def window(self, n: int) -> FiniteSubset:
        primes = first_primes(n)
        values = []
        for exps in itertools.product(range(n + 1), repeat=n):
            v = 1
            for p, e in zip(primes, exps):
                v *= p ** e
            values.append(v)
        return FiniteSubset(self, values, trusted=True)

    def in_window(self, x, n: int) -> bool:
        e = self.exponents(x, n)
        return e is not None and max(e, default=0) <= n

    def in_right_ideal(self, s, x):
        return x % s == 0

    in_left_ideal = in_right_ideal

    def preimage_pad(self, s) -> int:
        return 0

    def window_size(self, n: int) -> int:
        return (n + 1) ** n

    def random_element(self, rng, size=6):
        v = 1
        for p in first_primes(4):
            v *= p ** rng.randint(0, max(1, size // 2))
        return v

    def symdiff_all(self, s, n, variant, side):
        full = (n + 1) ** n
        e = self.exponents(s, n)
        if e is None:
            inside = 0
        else:
            inside = 1
            for ej in e:
                inside *= max(0, n + 1 - ej)
        # s*F_n meets F_n exactly in {y in F_n : s | y} = sS cap F_n
        if variant == CLASSICAL:
            return 2 * (full - inside)
        return full - inside


class Bicyclic(Semigroup):
    """Bicyclic monoid <p, q | pq = 1>; ``(m, n)`` stands for q^m p^n."""

    name = "bicyclic"
    identity = (0, 0)
    P = (0, 1)
    Q = (1, 0)
    _token = re.compile(r"([pq1])(?:\^(\d+))?")

    @property
    def generators(self):
        return (self.P, self.Q)

    def mul(self, a, b):
        m1, n1 = a
        m2, n2 = b
        if n1 >= m2:
            return (m1, n2 + n1 - m2)
        return (m1 + m2 - n1, n2)

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and all(isinstance(c, int) and c >= 0 for c in x))

    def key(self, x):
        return (max(x), x)

    def format(self, x) -> str:
        m, n = x
        parts = []
        if m:
            parts.append("q" if m == 1 else f"q^{m}")
        if n:
            parts.append("p" if n == 1 else f"p^{n}")
        return " ".join(parts) or "1"

    def parse(self, text: str):
        body = text.replace(" ", "").replace("*", "")
        if not body:
            raise LiteralError("empty bicyclic literal")
        pos, x = 0, self.identity
        for match in self._token.finditer(body):
            if match.start() != pos:
                break
            pos = match.end()
            letter, exp = match.group(1), int(match.group(2) or 1)
            if letter != "1":
                g = self.P if letter == "p" else self.Q
                for _ in range(exp):
                    x = self.mul(x, g)
        if pos != len(body):
            raise LiteralError(f"bad bicyclic literal {text!r}")
        return x

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        return (a[1], a[0])

    def window(self, n: int) -> FiniteSubset:
        return FiniteSubset(self, itertools.product(range(n), repeat=2), trusted=True)

    def window_set(self, n: int) -> frozenset:
        return frozenset(itertools.product(range(n), repeat=2))

    def in_window(self, x, n: int) -> bool:
        return x[0] < n and x[1] < n

    def in_right_ideal(self, s, x):
        return x[0] >= s[0]

    def in_left_ideal(self, s, x):
        return x[1] >= s[1]

    def preimage_pad(self, s) -> int:
        return s[0] + s[1]

    def window_size(self, n: int) -> int:
        return n * n

    def random_element(self, rng, size=6):
        return (rng.randint(0, size), rng.randint(0, size))


class Polycyclic(Semigroup):
    """Polycyclic monoid P_2 with zero.

    Non-zero elements are pairs ``(x, y)`` of words over ``p, q`` standing
    for ``x^-1 y``; ``("", "")`` is the identity. Literals write ``x^-1`` as
    the reversed word in upper case, so ``("pq", "q")`` prints as ``QPq``.
    """

    name = "polycyclic"
    ZERO = "0"
    zero = "0"
    identity = ("", "")
    _letters = frozenset("pq")

    @property
    def generators(self):
        return (("", "p"), ("", "q"), ("p", ""), ("q", ""))

    def mul(self, a, b):
        if a == self.ZERO or b == self.ZERO:
            return self.ZERO
        x, y = a
        u, v = b
        if y.endswith(u):
            return (x, y[: len(y) - len(u)] + v)
        if u.endswith(y):
            return (u[: len(u) - len(y)] + x, v)
        return self.ZERO

    def contains(self, x) -> bool:
        if x == self.ZERO:
            return True
        return (isinstance(x, tuple) and len(x) == 2
                and all(isinstance(w, str) and set(w) <= self._letters for w in x))

    def key(self, x):
        if x == self.ZERO:
            return (0, 0, "", "")
        return (1, len(x[0]) + len(x[1]), x[0], x[1])

    def format(self, x) -> str:
        if x == self.ZERO:
            return "0"
        if x == self.identity:
            return "1"
        return x[0][::-1].upper() + x[1]

    def word(self, x) -> str:
        return self.format(x)

    def parse(self, text: str):
        body = text.replace(" ", "")
        if not body or set(body) - set("pqPQ01"):
            raise LiteralError(f"bad polycyclic literal {text!r}")
        gens = {"p": ("", "p"), "q": ("", "q"), "P": ("p", ""), "Q": ("q", ""),
                "1": self.identity, "0": self.ZERO}
        x = self.identity
        for c in body:
            x = self.mul(x, gens[c])
        return x

    def canonicalize(self, raw):
        if isinstance(raw, str) and raw != self.ZERO:
            return self.parse(raw)
        return super().canonicalize(raw)

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        if a == self.ZERO:
            return a
        return (a[1], a[0])

    def size(self, x) -> int:
        return 0 if x == self.ZERO else len(x[0]) + len(x[1])

    def window(self, n: int) -> FiniteSubset:
        elems = [self.ZERO]
        words = [["".join(t) for t in itertools.product("pq", repeat=k)] for k in range(n + 1)]
        for total in range(n + 1):
            for i in range(total + 1):
                elems.extend(itertools.product(words[i], words[total - i]))
        return FiniteSubset(self, elems, trusted=True)

    def in_window(self, x, n: int) -> bool:
        return self.size(x) <= n

    def in_right_ideal(self, s, x):
        if x == self.ZERO:
            return True
        if s == self.ZERO:
            return False
        return x[0].endswith(s[0])

    def in_left_ideal(self, s, x):
        return self.in_right_ideal(self.involution(s), self.involution(x))

    def preimage_pad(self, s) -> int:
        return self.size(s)

    def random_element(self, rng, size=6):
        if rng.random() < 0.05:
            return self.ZERO
        w = lambda: "".join(rng.choice("pq") for _ in range(rng.randint(0, size // 2)))
        return (w(), w())


class FreeMonogenicInverse(Semigroup):
    """Free monogenic inverse monoid as Munn triples ``(p, q, r)``.

    ``p`` is the extent of the Munn interval to the left of the origin,
    ``q`` the end point and ``r`` the extent to the right of the end point.
    """

    name = "munn"
    identity = (0, 0, 0)
    X = (0, 1, 0)
    X_INV = (1, -1, 1)

    @property
    def generators(self):
        return (self.X, self.X_INV)

    def mul(self, a, b):
        p, q, r = a
        p2, q2, r2 = b
        return (max(p, p2 - q), q + q2, max(r2, r - q2))

    def contains(self, x) -> bool:
        if not (isinstance(x, tuple) and len(x) == 3 and all(isinstance(c, int) for c in x)):
            return False
        p, q, r = x
        return p >= 0 and p + q >= 0 and q + r >= 0 and r >= 0 and p + q + r >= 0

    def key(self, x):
        return (max(x), x)

    def format(self, x) -> str:
        return "(" + ",".join(map(str, x)) + ")"

    def parse(self, text: str):
        body = text.replace(" ", "")
        if body and set(body) <= set("xX1"):
            x = self.identity
            for c in body:
                if c != "1":
                    x = self.mul(x, self.X if c == "x" else self.X_INV)
            return x
        try:
            x = tuple(int(c) for c in body.strip("()").split(","))
        except ValueError:
            raise LiteralError(f"bad Munn triple literal {text!r}") from None
        if not self.contains(x):
            raise LiteralError(f"{text!r} violates the Munn triple constraints")
        return x

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        p, q, r = a
        return (p + q, -q, q + r)

    def window(self, n: int) -> FiniteSubset:
        pts = []
        for y in range(-n, n + 1):
            lo = max(0, -y)
            pts.extend((x, y, z) for x in range(lo, n + 1) for z in range(lo, n + 1))
        return FiniteSubset(self, pts, trusted=True)

    @staticmethod
    def house_number(n: int) -> int:
        return (n + 1) ** 3 + n * (n + 1) * (2 * n + 1) // 6

    def in_window(self, x, n: int) -> bool:
        return max(x) <= n

    def window_size(self, n: int) -> int:
        return self.house_number(n)

    def in_right_ideal(self, s, x):
        # sS = elements whose Munn interval contains the interval of s
        return x[0] >= s[0] and x[1] + x[2] >= s[1] + s[2]

    def in_left_ideal(self, s, x):
        return x[0] + x[1] >= s[0] + s[1] and x[2] >= s[2]

    def preimage_pad(self, s) -> int:
        return s[0] + abs(s[1]) + s[2]

    def random_element(self, rng, size=6):
        while True:
            x = (rng.randint(0, size), rng.randint(-size, size), rng.randint(0, size))
            if self.contains(x):
                return x

    def symdiff_all(self, s, n, variant, side):
        """Slice-by-slice count; translations preserve the middle coordinate
        offset, and on each slice both sets are rectangles."""
        p, q, r = s
        side = as_side(side)

        def window_slice(y):
            if -n <= y <= n:
                lo = max(0, -y)
                return (lo, n, lo, n)
            return None

        images = {}
        for y in range(-n, n + 1):
            lo = max(0, -y)
            if side is Side.LEFT:
                rect = (max(p, lo - q), max(p, n - q), max(lo, r - y), max(n, r - y))
            else:
                rect = (max(lo, p - y), max(n, p - y), max(r, lo - q), max(r, n - q))
            images[y + q] = rect

        total = 0
        if variant == CLASSICAL:
            for y in set(images) | set(range(-n, n + 1)):
                total += _rect_symdiff(images.get(y), window_slice(y))
            return total
        for y in set(images) | set(range(-n, n + 1)):
            w = window_slice(y)
            ideal = None
            if w is not None:
                if side is Side.LEFT:
                    ideal = _rect_meet(w, (p, n, q + r - y, n))
                else:
                    ideal = _rect_meet(w, (p + q - y, n, r, n))
            total += _rect_symdiff(images.get(y), ideal)
        return total


class MinSemilattice(Semigroup):
    """The integers under ``min``; window ``n`` is ``[-n, n]``."""

    commutative = True
    name = "zmin"

    def mul(self, a, b):
        return a if a <= b else b

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def key(self, x):
        return x

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        try:
            return int(text)
        except ValueError:
            raise LiteralError(f"bad integer literal {text!r}") from None

    @property
    def has_involution(self) -> bool:
        return True

    def involution(self, a):
        return a

    def window(self, n: int) -> FiniteSubset:
        return FiniteSubset(self, range(-n, n + 1), trusted=True)

    def in_window(self, x, n: int) -> bool:
        return -n <= x <= n

    def in_right_ideal(self, s, x):
        return x <= s

    in_left_ideal = in_right_ideal

    def random_element(self, rng, size=6):
        return rng.randint(-size, size)

