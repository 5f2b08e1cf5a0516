"""Independent reference implementations used to cross-check the closed-form
product rules in :mod:`amenalab.families`.

None of these share code with the fast paths they check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .semigroup import Semigroup

# P_2 as a string-rewriting system over p, q, P = p^-1, Q = q^-1 and 0.
POLYCYCLIC_RULES = (("pP", ""), ("qQ", ""), ("pQ", "0"), ("qP", "0"))


def rewrite_polycyclic(word: str) -> str:
    """Normal form of a word over ``pqPQ0``: ``"0"`` or ``INVERSES + positives``."""
    if "0" in word:
        return "0"
    changed = True
    while changed:
        changed = False
        for lhs, rhs in POLYCYCLIC_RULES:
            if lhs in word:
                word = word.replace(lhs, rhs, 1)
                changed = True
                if rhs == "0":
                    return "0"
    return word


def polycyclic_word(x) -> str:
    """Word for a canonical pair ``(x, y)`` (meaning ``x^-1 y``), or ``"0"``."""
    if x == "0":
        return "0"
    return x[0][::-1].upper() + x[1]


def polycyclic_from_normal_word(word: str):
    if word == "0":
        return "0"
    split = len(word) - len(word.lstrip("PQ"))
    inverses, positives = word[:split], word[split:]
    if set(positives) - set("pq"):
        raise ValueError(f"{word!r} is not in normal form")
    return (inverses[::-1].lower(), positives)


def polycyclic_product_by_rewriting(a, b):
    return polycyclic_from_normal_word(rewrite_polycyclic(polycyclic_word(a) + polycyclic_word(b)))


@dataclass(frozen=True)
class MunnTree:
    """Element of the free monogenic inverse monoid as a Munn tree: the
    interval ``[lo, hi]`` of visited integers and the end point."""

    lo: int
    hi: int
    end: int

    def __mul__(self, other: "MunnTree") -> "MunnTree":
        return MunnTree(min(self.lo, self.end + other.lo),
                        max(self.hi, self.end + other.hi),
                        self.end + other.end)

    @classmethod
    def from_word(cls, word: str) -> "MunnTree":
        """Walk ``x`` (step right) and ``X`` (step left) from the origin."""
        pos = lo = hi = 0
        for c in word:
            pos += 1 if c == "x" else -1
            lo, hi = min(lo, pos), max(hi, pos)
        return cls(lo, hi, pos)

    def to_triple(self):
        return (-self.lo, self.end, self.hi - self.end)

    @classmethod
    def from_triple(cls, t) -> "MunnTree":
        p, q, r = t
        return cls(-p, q + r, q)

    def word(self) -> str:
        """A word whose walk produces this tree."""
        return "X" * (-self.lo) + "x" * (self.hi - self.lo) + "X" * (self.hi - self.end)


def munn_product_by_trees(a, b):
    return (MunnTree.from_triple(a) * MunnTree.from_triple(b)).to_triple()


def munn_inverse_by_search(S: Semigroup, s, bound: int = 6):
    """Unique ``t`` with ``sts = s`` and ``tst = t`` among triples in a box."""
    found = []
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            for r in range(0, bound + 1):
                t = (p, q, r)
                if S.contains(t) and S.mul(S.mul(s, t), s) == s and S.mul(S.mul(t, s), t) == t:
                    found.append(t)
    return found


def check_associativity(S: Semigroup, samples: int = 10_000, seed: int = 0, size: int = 6):
    """Randomized (seeded) triple check; exhaustive for finite handles.

    Returns ``(checked, counterexample_or_None)``.
    """
    if S.finite:
        elems = list(S.elements())
        checked = 0
        for a in elems:
            for b in elems:
                ab = S.mul(a, b)
                for c in elems:
                    checked += 1
                    if S.mul(ab, c) != S.mul(a, S.mul(b, c)):
                        return checked, (a, b, c)
        return checked, None
    rng = random.Random(seed)
    for i in range(samples):
        a, b, c = (S.random_element(rng, size) for _ in range(3))
        if S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)):
            return i + 1, (a, b, c)
    return samples, None


def check_involution(S: Semigroup, samples: int = 2_000, seed: int = 0, size: int = 6):
    """Returns the first ``(a, b)`` violating ``a** = a`` or ``(ab)* = b*a*``."""
    rng = random.Random(seed)
    if S.finite:
        pairs = [(a, b) for a in S.elements() for b in S.elements()]
    else:
        pairs = [(S.random_element(rng, size), S.random_element(rng, size)) for _ in range(samples)]
    for a, b in pairs:
        if S.involution(S.involution(a)) != a:
            return (a, b)
        if S.involution(S.mul(a, b)) != S.mul(S.involution(b), S.involution(a)):
            return (a, b)
    return None
