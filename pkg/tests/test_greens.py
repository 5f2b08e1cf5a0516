from __future__ import annotations

import pytest

from amenalab import finite
from amenalab.greens import compose_relations, green_classes
from amenalab.registry import resolve
from amenalab.semigroup import NotFinite


def _partition(S, rel):
    return {frozenset(c) for c in green_classes(S, rel).classes}


def test_rectangular_band():
    R = resolve("left-zero:2*right-zero:3")
    assert [len(c) for c in green_classes(R, "R").classes] == [3, 3]
    assert [len(c) for c in green_classes(R, "L").classes] == [2, 2, 2]
    assert all(len(c) == 1 for c in green_classes(R, "H").classes)
    assert len(green_classes(R, "D").classes) == 1
    # rows share the first coordinate, columns the second
    assert all(len({x[0] for x in c}) == 1 for c in green_classes(R, "R").classes)
    assert all(len({x[1] for x in c}) == 1 for c in green_classes(R, "L").classes)


@pytest.mark.parametrize("G", [finite.cyclic(4), finite.symmetric_group3(), finite.trivial()],
                         ids=lambda S: S.name)
def test_group_is_one_class(G):
    for rel in "LRHD":
        assert len(green_classes(G, rel).classes) == 1


def test_two_chain_all_singletons():
    S = finite.two_chain()
    for rel in "LRHD":
        assert green_classes(S, rel).sizes() == [1, 1]


def test_brandt_frozen():
    # derived by brute-force ideal comparison: the zero and one 4-element D-class
    S = finite.brandt2()
    assert sorted(green_classes(S, "D").sizes()) == [1, 4]
    assert sorted(green_classes(S, "L").sizes()) == [1, 2, 2]
    assert sorted(green_classes(S, "H").sizes()) == [1, 1, 1, 1, 1]


@pytest.mark.parametrize("S", finite.catalog(), ids=lambda S: S.name)
def test_partition_laws(S):
    elems = set(S.elements())
    L, R, H, D = (_partition(S, r) for r in "LRHD")
    for part in (L, R, H, D):
        assert set().union(*part) == elems
        assert sum(map(len, part)) == len(elems)
    assert H == {a & b for a in L for b in R if a & b}
    for h in H:
        assert any(h <= l for l in L) and any(h <= r for r in R)
    for l in L | R:
        assert any(l <= d for d in D)


@pytest.mark.parametrize("S", finite.catalog(), ids=lambda S: S.name)
def test_l_and_r_commute(S):
    LR, RL = compose_relations(S, "L", "R"), compose_relations(S, "R", "L")
    assert LR == RL
    D = green_classes(S, "D")
    assert LR == {(x, y) for c in D.classes for x in c for y in c}


@pytest.mark.parametrize("S", finite.catalog(), ids=lambda S: S.name)
def test_equal_class_sizes_within_d(S):
    D = green_classes(S, "D")
    for rel in "LR":
        classes = green_classes(S, rel).classes
        for d in D.classes:
            sizes = {len(c) for c in classes if c[0] in d}
            assert len(sizes) == 1


def test_infinite_family_rejected():
    with pytest.raises(NotFinite):
        green_classes(resolve("bicyclic"), "L")


def test_bad_relation():
    with pytest.raises(ValueError):
        green_classes(finite.trivial(), "J")
