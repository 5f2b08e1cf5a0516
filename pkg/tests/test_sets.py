from __future__ import annotations

import pytest

from amenalab.families import Bicyclic, FreeSemigroup, MinSemilattice, Polycyclic
from amenalab.semigroup import LiteralError
from amenalab.sets import (AllOfS, Column, Difference, FiniteList, Interval, PrefixCylinder, RightIdeal,
                           Row, Union, parse_set)

B, F, P2, Z = Bicyclic(), FreeSemigroup(2), Polycyclic(), MinSemilattice()


def test_prefix_cylinders():
    aS = PrefixCylinder("a", proper=True)
    assert aS.contains(F, "ab") and not aS.contains(F, "a") and not aS.contains(F, "ba")
    assert PrefixCylinder("a").contains(F, "a")
    HP = PrefixCylinder("P")
    assert HP.contains(P2, P2.parse("Pq")) and not HP.contains(P2, P2.ZERO)


def test_right_and_left_ideals():
    qS = RightIdeal(B.Q)
    assert sorted(qS.restrict(B, 3).format()) == sorted(["q", "q p", "q^2", "q p^2", "q^2 p", "q^2 p^2"])
    Sp = RightIdeal(B.P, "right")
    assert all(x[1] >= 1 for x in Sp.restrict(B, 3))


def test_rows_columns_intervals():
    assert Column(0).restrict(B, 3).as_set() == {(0, 0), (1, 0), (2, 0)}
    assert Row(1).restrict(B, 2).as_set() == {(1, 0), (1, 1)}
    assert Interval(None, 1).restrict(Z, 3).as_set() == {-3, -2, -1, 0, 1}


def test_union_and_difference():
    U = Union((Column(0), Row(0)))
    D = Difference(AllOfS(), U)
    W = B.window(3)
    assert len(U.restrict(B, 3)) + len(D.restrict(B, 3)) == len(W)


def test_finite_list_restricts_to_window():
    A = FiniteList(((0, 0), (5, 5)))
    assert A.restrict(B, 3).as_set() == {(0, 0)}
    assert A.is_finite


def test_parse_set_literals():
    assert isinstance(parse_set(B, "all"), AllOfS)
    assert parse_set(B, "single:q p").items == ((1, 1),)
    assert parse_set(B, "list:1;q").items == ((0, 0), (1, 0))
    assert parse_set(B, "ideal:q") == RightIdeal((1, 0))
    assert parse_set(B, "column:2") == Column(2)
    assert parse_set(Z, "interval:..4") == Interval(None, 4)
    assert parse_set(F, "proper-prefix:ab") == PrefixCylinder("ab", True)
    with pytest.raises(LiteralError):
        parse_set(B, "blob:1")
    with pytest.raises(LiteralError):
        parse_set(B, "column:x")
