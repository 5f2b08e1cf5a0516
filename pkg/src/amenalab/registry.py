"""Resolve family strings such as ``bicyclic``, ``free:2``,
``cyclic:3^0`` or ``left-zero:2*right-zero:3`` into semigroup handles.

Grammar::

    spec    := factor ('*' factor)*        direct product, left-associative
    factor  := atom ('^0' | '^1')*         adjoin zero / identity
    atom    := NAME[:ARGS] | 'table:' PATH | '(' spec ')'
"""

from __future__ import annotations

from . import families, finite
from .derived import AdjoinIdentity, AdjoinZero, Product, split_top_level
from .semigroup import LiteralError, Semigroup

_SIMPLE = {
    "bicyclic": families.Bicyclic,
    "polycyclic": families.Polycyclic,
    "munn": families.FreeMonogenicInverse,
    "natmul": families.NatMul,
    "zmin": families.MinSemilattice,
    "trivial": finite.trivial,
    "two-chain": finite.two_chain,
    "semilattice:ab": finite.free_semilattice2,
    "clifford:3": finite.clifford3,
    "T:2": finite.full_transformations2,
    "brandt:2": finite.brandt2,
    "sym:3": finite.symmetric_group3,
    "I:2": finite.symmetric_inverse2,
}

_PARAM = {
    "free": families.FreeSemigroup,
    "freecomm": families.FreeCommutative,
    "left-zero": finite.left_zero,
    "right-zero": finite.right_zero,
    "cyclic": finite.cyclic,
    "null": finite.null,
    "chain": finite.chain,
    "square-band": finite.square_band,
}

FAMILY_NAMES = sorted(_SIMPLE) + [f"{k}:N" for k in sorted(_PARAM)] + ["monogenic:I,P", "table:PATH"]


def _atom(text: str) -> Semigroup:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return resolve(text[1:-1])
    if text in _SIMPLE:
        return _SIMPLE[text]()
    name, _, args = text.partition(":")
    if name == "table":
        return finite.read_table(args)
    try:
        if name in _PARAM:
            return _PARAM[name](int(args) if args else 2)
        if name == "monogenic":
            index, period = (int(v) for v in args.split(","))
            return finite.monogenic(index, period)
    except ValueError as exc:
        raise LiteralError(f"bad family parameters in {text!r}: {exc}") from None
    raise LiteralError(f"unknown family {text!r}; known: {', '.join(FAMILY_NAMES)}")


def resolve(spec: str) -> Semigroup:
    factors = split_top_level(spec, sep="*")
    handle = None
    for factor in factors:
        suffixes = []
        while factor.endswith("^0") or factor.endswith("^1"):
            suffixes.append(factor[-1])
            factor = factor[:-2]
        S = _atom(factor)
        for s in reversed(suffixes):
            S = AdjoinZero(S) if s == "0" else AdjoinIdentity(S)
        handle = S if handle is None else Product(handle, S)
    if handle is None:
        raise LiteralError("empty family string")
    return handle
