"""Green's relations L, R, H, D on finite semigroups."""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import FiniteSubset, NotFinite, Semigroup

RELATIONS = ("L", "R", "H", "D")


@dataclass(frozen=True)
class GreenClasses:
    relation: str
    classes: tuple  # of FiniteSubset, ordered by least element

    def class_of(self, x) -> FiniteSubset:
        for c in self.classes:
            if x in c:
                return c
        raise KeyError(x)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def to_json(self) -> dict:
        return {"relation": self.relation, "classes": [c.format() for c in self.classes]}


def principal_ideals(S: Semigroup, side: str) -> dict:
    """``x -> S^1 x`` (side ``"L"``) or ``x -> x S^1`` (side ``"R"``) as frozensets."""
    elems = list(S.elements())
    if side == "L":
        return {x: frozenset([x, *(S.mul(t, x) for t in elems)]) for x in elems}
    return {x: frozenset([x, *(S.mul(x, t) for t in elems)]) for x in elems}


def _group_by(S: Semigroup, label) -> tuple:
    buckets: dict = {}
    for x in S.elements():
        buckets.setdefault(label(x), []).append(x)
    classes = [FiniteSubset(S, xs, trusted=True) for xs in buckets.values()]
    return tuple(sorted(classes, key=lambda c: S.key(c[0])))


def green_classes(S: Semigroup, rel: str) -> GreenClasses:
    if not S.finite:
        raise NotFinite(f"Green's classes need a finite semigroup, {S.name} is infinite")
    rel = rel.upper()
    if rel not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}")
    if rel in ("L", "R"):
        ideals = principal_ideals(S, rel)
        return GreenClasses(rel, _group_by(S, ideals.__getitem__))
    left, right = principal_ideals(S, "L"), principal_ideals(S, "R")
    if rel == "H":
        return GreenClasses(rel, _group_by(S, lambda x: (left[x], right[x])))

    # D: join of L and R, by union-find over both partitions
    parent = {x: x for x in S.elements()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ideals in (left, right):
        first: dict = {}
        for x, ideal in ideals.items():
            y = first.setdefault(ideal, x)
            parent[find(x)] = find(y)
    return GreenClasses(rel, _group_by(S, find))


def compose_relations(S: Semigroup, first: str, second: str) -> frozenset:
    """Pairs ``(a, c)`` with ``a first b`` and ``b second c`` for some ``b``."""
    a_cls, b_cls = green_classes(S, first), green_classes(S, second)
    pairs = set()
    for x in S.elements():
        for y in a_cls.class_of(x):
            pairs.update((x, z) for z in b_cls.class_of(y))
    return frozenset(pairs)
