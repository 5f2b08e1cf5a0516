"""Finite semigroups given by Cayley tables, and a catalog of small examples."""

from __future__ import annotations

import itertools
import random
from pathlib import Path
from typing import Optional, Sequence

from .semigroup import (
    FiniteSubset,
    LiteralError,
    NonAssociative,
    NoInvolution,
    Semigroup,
)


def find_nonassociative(table: Sequence[Sequence[int]]):
    """First triple ``(a, b, c)`` with ``(ab)c != a(bc)``, or ``None``."""
    n = len(table)
    for a in range(n):
        row = table[a]
        for b in range(n):
            ab = row[b]
            for c in range(n):
                if table[ab][c] != row[table[b][c]]:
                    return (a, b, c)
    return None


class TableSemigroup(Semigroup):
    """Finite semigroup on ``0..n-1`` with an explicit multiplication table."""

    finite = True

    def __init__(self, table, name: str = "table", involution: Optional[Sequence[int]] = None,
                 labels: Optional[Sequence[str]] = None, validate: bool = True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.n = len(self.table)
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        if validate:
            self._validate()
        self._involution = tuple(involution) if involution is not None else None
        if self._involution is not None and validate:
            self._validate_involution()
        self.zero = self._find_zero()
        self.identity = self._find_identity()
        self.commutative = all(self.table[a][b] == self.table[b][a]
                               for a in range(self.n) for b in range(a))

    def _validate(self):
        if self.n == 0:
            raise ValueError("a semigroup table needs at least one row")
        for row in self.table:
            if len(row) != self.n:
                raise ValueError("Cayley table must be square")
            for v in row:
                if not 0 <= v < self.n:
                    raise ValueError(f"table entry {v} out of range [0, {self.n})")
        triple = find_nonassociative(self.table)
        if triple is not None:
            raise NonAssociative(triple)

    def _validate_involution(self):
        inv, t = self._involution, self.table
        if sorted(inv) != list(range(self.n)):
            raise ValueError("involution must be a permutation of the elements")
        for a in range(self.n):
            if inv[inv[a]] != a:
                raise ValueError(f"involution is not self-inverse at {a}")
            for b in range(self.n):
                if inv[t[a][b]] != t[inv[b]][inv[a]]:
                    raise ValueError(f"involution fails (ab)* = b*a* at ({a}, {b})")

    def _find_zero(self):
        for z in range(self.n):
            if all(self.table[z][x] == z == self.table[x][z] for x in range(self.n)):
                return z
        return None

    def _find_identity(self):
        for e in range(self.n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(self.n)):
                return e
        return None

    def mul(self, a, b):
        return self.table[a][b]

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def key(self, x):
        return x

    def format(self, x) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def parse(self, text: str):
        text = text.strip()
        if self.labels is not None and text in self.labels:
            return self.labels.index(text)
        try:
            x = int(text)
        except ValueError:
            raise LiteralError(f"bad table index {text!r}") from None
        if not self.contains(x):
            raise LiteralError(f"index {x} out of range for {self.name}")
        return x

    @property
    def generators(self):
        return tuple(range(self.n))

    @property
    def has_involution(self) -> bool:
        return self._involution is not None

    def involution(self, a):
        if self._involution is None:
            raise NoInvolution(f"{self.name} has no involution")
        return self._involution[a]

    def elements(self) -> FiniteSubset:
        return FiniteSubset(self, range(self.n), trusted=True)

    def window(self, n: int) -> FiniteSubset:
        return self.elements()

    def in_window(self, x, n: int) -> bool:
        return True

    def in_right_ideal(self, s, x):
        return any(self.table[s][t] == x for t in range(self.n))

    def in_left_ideal(self, s, x):
        return any(self.table[t][s] == x for t in range(self.n))

    def random_element(self, rng, size=6):
        return rng.randrange(self.n)

    def order(self) -> int:
        return self.n


def from_cayley_table(table, name: str = "table", involution=None) -> TableSemigroup:
    """Validated handle over a Cayley table (exhaustive O(n^3) associativity scan)."""
    return TableSemigroup(table, name=name, involution=involution)


def parse_table_text(text: str):
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise LiteralError("empty table file")
    try:
        n = int(lines[0][0])
        rows = [[int(v) for v in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise LiteralError(f"bad table file: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise LiteralError(f"table file declares n = {n} but has a different shape")
    return rows


def read_table(path, name: Optional[str] = None) -> TableSemigroup:
    path = Path(path)
    return from_cayley_table(parse_table_text(path.read_text()), name=name or path.stem)


def format_table(S: TableSemigroup) -> str:
    lines = [str(S.n)] + [" ".join(map(str, row)) for row in S.table]
    return "\n".join(lines) + "\n"


# -- catalog constructors -----------------------------------------------

def trivial() -> TableSemigroup:
    return TableSemigroup([[0]], name="trivial", involution=[0])


def left_zero(k: int) -> TableSemigroup:
    return TableSemigroup([[a] * k for a in range(k)], name=f"left-zero:{k}")


def right_zero(k: int) -> TableSemigroup:
    return TableSemigroup([list(range(k)) for _ in range(k)], name=f"right-zero:{k}")


def cyclic(k: int) -> TableSemigroup:
    return TableSemigroup([[(a + b) % k for b in range(k)] for a in range(k)],
                          name=f"cyclic:{k}", involution=[(-a) % k for a in range(k)])


def null(k: int) -> TableSemigroup:
    """Zero semigroup: every product is 0."""
    return TableSemigroup([[0] * k for _ in range(k)], name=f"null:{k}", involution=list(range(k)))


def chain(k: int) -> TableSemigroup:
    return TableSemigroup([[min(a, b) for b in range(k)] for a in range(k)],
                          name=f"chain:{k}", involution=list(range(k)))


def monogenic(index: int, period: int) -> TableSemigroup:
    """<a | a^(index+period) = a^index>; element i stands for a^(i+1)."""
    size = index + period - 1

    def reduce(e):
        while e >= index + period:
            e -= period
        return e

    table = [[reduce(a + b + 2) - 1 for b in range(size)] for a in range(size)]
    return TableSemigroup(table, name=f"monogenic:{index},{period}", involution=list(range(size)))


def _from_elements(elems, op, name, involution=None, labels=None):
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[op(a, b)] for b in elems] for a in elems]
    inv = [index[involution(e)] for e in elems] if involution else None
    return TableSemigroup(table, name=name, involution=inv, labels=labels)


def symmetric_group3() -> TableSemigroup:
    perms = sorted(itertools.permutations(range(3)))
    compose = lambda f, g: tuple(f[g[i]] for i in range(3))
    inverse = lambda f: tuple(sorted(range(3), key=lambda i: f[i]))
    return _from_elements(perms, compose, "sym:3", involution=inverse)


def full_transformations2() -> TableSemigroup:
    maps = list(itertools.product(range(2), repeat=2))
    compose = lambda f, g: tuple(f[g[i]] for i in range(2))
    return _from_elements(maps, compose, "T:2")


def symmetric_inverse2() -> TableSemigroup:
    """All partial bijections of {0, 1} under composition (7 elements)."""
    points = (None, 0, 1)
    maps = [m for m in itertools.product(points, repeat=2)
            if len({v for v in m if v is not None}) == len([v for v in m if v is not None])]

    def compose(f, g):
        return tuple(None if g[i] is None else f[g[i]] for i in range(2))

    def inverse(f):
        out = [None, None]
        for i, v in enumerate(f):
            if v is not None:
                out[v] = i
        return tuple(out)

    return _from_elements(maps, compose, "I:2", involution=inverse)


def brandt2() -> TableSemigroup:
    """Brandt semigroup B_2: matrix units e_ij of a 2x2 array plus zero."""
    elems = [None, (0, 0), (0, 1), (1, 0), (1, 1)]

    def op(a, b):
        if a is None or b is None or a[1] != b[0]:
            return None
        return (a[0], b[1])

    inverse = lambda a: None if a is None else (a[1], a[0])
    return _from_elements(elems, op, "brandt:2", involution=inverse,
                          labels=["0", "e11", "e12", "e21", "e22"])


def square_band(k: int) -> TableSemigroup:
    """k x k rectangular band (i, j)(k, l) = (i, l) with transpose involution."""
    elems = list(itertools.product(range(k), repeat=2))
    return _from_elements(elems, lambda a, b: (a[0], b[1]), f"square-band:{k}",
                          involution=lambda a: (a[1], a[0]))


def clifford3() -> TableSemigroup:
    """Strong semilattice of Z_2 over the trivial group {h}: elements 1, g, h."""
    elems = ["1", "g", "h"]

    def op(a, b):
        if "h" in (a, b):
            return "h"
        return "1" if a == b else "g"

    return _from_elements(elems, op, "clifford:3", involution=lambda a: a, labels=elems)


def free_semilattice2() -> TableSemigroup:
    elems = [frozenset("a"), frozenset("b"), frozenset("ab")]
    return _from_elements(elems, lambda a, b: a | b, "semilattice:ab",
                          involution=lambda a: a, labels=["a", "b", "ab"])


def two_chain() -> TableSemigroup:
    """{e, f} with ef = fe = f (the 2-element semilattice, e above f)."""
    return TableSemigroup([[0, 1], [1, 1]], name="two-chain", involution=[0, 1], labels=["e", "f"])


def catalog() -> list[TableSemigroup]:
    """Named finite semigroups used throughout the checks."""
    out: list[TableSemigroup] = [trivial()]
    for k in (2, 3, 4, 5):
        out += [left_zero(k), right_zero(k), chain(k)]
    for k in (1, 2, 3, 4, 5):
        out.append(cyclic(k))
    for k in (2, 3, 4):
        out.append(null(k))
    out += [monogenic(2, 1), monogenic(2, 2), monogenic(3, 2), monogenic(1, 4)]
    out += [two_chain(), free_semilattice2(), clifford3(), full_transformations2(),
            brandt2(), symmetric_group3(), symmetric_inverse2(), square_band(2)]
    return out


def all_associative_tables(n: int):
    """Every associative n x n table (brute force over n^(n*n) tables)."""
    for flat in itertools.product(range(n), repeat=n * n):
        table = [flat[i * n:(i + 1) * n] for i in range(n)]
        if find_nonassociative(table) is None:
            yield table


def sample_associative_tables(n: int, count: int, rng: random.Random, max_draws: int = 10 ** 7):
    """Rejection sampling of uniformly random n x n tables until ``count``
    associative ones have been drawn."""
    found, draws = [], 0
    while len(found) < count:
        draws += 1
        if draws > max_draws:
            raise RuntimeError(f"only {len(found)} associative tables in {max_draws} draws")
        table = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        if find_nonassociative(table) is None:
            found.append(table)
    return found, draws


def quotient(S: Semigroup, classes) -> tuple[TableSemigroup, dict]:
    """Quotient of a finite semigroup by the congruence with the given classes.

    Returns the quotient table (class ``i`` is the ``i``-th class, classes
    ordered by least element) and the map element -> class index. Raises
    ``ValueError`` if the partition is not a congruence.
    """
    elems = list(S.elements())
    blocks = [sorted(c, key=S.key) for c in classes]
    covered = {x for b in blocks for x in b}
    blocks += [[x] for x in elems if x not in covered]
    blocks.sort(key=lambda b: S.key(b[0]))
    index = {x: i for i, b in enumerate(blocks) for x in b}
    if len(index) != len(elems) or sum(map(len, blocks)) != len(elems):
        raise ValueError("classes must partition the carrier")
    table = [[None] * len(blocks) for _ in blocks]
    for a in elems:
        for b in elems:
            i, j, k = index[a], index[b], index[S.mul(a, b)]
            if table[i][j] is None:
                table[i][j] = k
            elif table[i][j] != k:
                raise ValueError(f"not a congruence: class products disagree at "
                                 f"({S.format(a)}, {S.format(b)})")
    labels = ["{" + ",".join(S.format(x) for x in b) + "}" for b in blocks]
    return TableSemigroup(table, name=f"{S.name}/~", labels=labels), index


def rees_quotient(S: Semigroup, ideal) -> tuple[TableSemigroup, dict]:
    """Collapse a two-sided ideal to a single zero."""
    return quotient(S, [list(ideal)])
