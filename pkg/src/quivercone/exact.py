"""Exact linear algebra over the rationals (Fraction-based, small matrices)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = tuple[Fraction, ...]


def _to_rows(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in mat]


def rref(mat: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = _to_rows(mat)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat: Sequence[Sequence]) -> int:
    return len(rref(mat)[0])


def nullspace_int(mat: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Integer basis of the rational nullspace (denominators cleared)."""
    rows = list(mat)
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(clear_denominators(vec))
    return basis


def clear_denominators(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def row_space_canonical(mat: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Canonical form of a row space: RREF rows, denominators cleared,
    sign fixed so the leading entry is positive."""
    red, _ = rref(mat)
    out = []
    for row in red:
        ints = list(clear_denominators(row))
        lead = next((x for x in ints if x != 0), 0)
        if lead < 0:
            ints = [-x for x in ints]
        out.append(tuple(ints))
    return tuple(out)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))
