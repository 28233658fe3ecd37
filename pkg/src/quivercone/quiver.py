"""Quivers, dimension vectors, weights and decompositions.

Conventions (also embedded in every CLI report):

* vertices are kept in a canonical topological order, ties broken by id;
  every integer vector is a tuple aligned with that order;
* Euler form  <a, b> = sum_s a(s) b(s) - sum_{arrows t->h} a(t) b(h);
* an ordered decomposition (b_1, ..., b_s) assigns one-parameter-subgroup
  weight s+1-k to part b_k, so the first part carries the largest weight.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CyclicQuiverError,
    DuplicateIdError,
    MismatchedQuiverError,
)

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic multigraph; vertices stored in topological order."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        object.__setattr__(self, "_index", index)
        object.__setattr__(
            self,
            "arrow_indices",
            tuple((index[a.tail], index[a.head]) for a in self.arrows),
        )

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        return self._index[vertex]

    def check_vector(self, vec: Sequence[int]) -> Vec:
        if len(vec) != self.n:
            raise MismatchedQuiverError(
                f"vector of length {len(vec)} on a quiver with {self.n} vertices"
            )
        return tuple(int(x) for x in vec)

    def describe(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.name, "tail": a.tail, "head": a.head} for a in self.arrows],
        }


def validate_quiver(vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> Quiver:
    """Build a Quiver from raw data, certifying acyclicity by topological sort.

    ``arrows`` holds (id, tail, head) triples.  Raises CyclicQuiverError or
    DuplicateIdError on bad input.
    """
    vs = [str(v) for v in vertices]
    if len(set(vs)) != len(vs):
        raise DuplicateIdError("duplicate vertex id")
    raw_arrows = [(str(i), str(t), str(h)) for (i, t, h) in arrows]
    names = [a[0] for a in raw_arrows]
    if len(set(names)) != len(names):
        raise DuplicateIdError("duplicate arrow id")
    vset = set(vs)
    for name, t, h in raw_arrows:
        if t not in vset or h not in vset:
            raise MismatchedQuiverError(f"arrow {name}: unknown endpoint")

    # Kahn's algorithm; ties broken by vertex id for a canonical order.
    indeg = {v: 0 for v in vs}
    for _, _, h in raw_arrows:
        indeg[h] += 1
    order: list[str] = []
    ready = sorted(v for v in vs if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        touched = False
        for _, t, h in raw_arrows:
            if t == v:
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
                    touched = True
        if touched:
            ready.sort()
    if len(order) != len(vs):
        raise CyclicQuiverError("oriented cycle found")
    arrows_sorted = tuple(sorted((Arrow(n, t, h) for n, t, h in raw_arrows), key=lambda a: a.name))
    return Quiver(tuple(order), arrows_sorted)


def quiver_from_dict(data: dict) -> Quiver:
    return validate_quiver(
        data["vertices"],
        [(a["id"], a["tail"], a["head"]) for a in data["arrows"]],
    )


def load_quiver(path: str) -> tuple[Quiver, list[str]]:
    """Read the quiver text format; returns the quiver and the declared vertex order.

    Dimension vectors in companion inputs are aligned with the declared order,
    not the canonical one, so the caller needs both.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    declared = [str(v) for v in data["vertices"]]
    return quiver_from_dict(data), declared


def realign(quiver: Quiver, declared: Sequence[str], vec: Sequence[int]) -> Vec:
    """Permute a vector given in declared order into canonical order."""
    if len(vec) != len(declared):
        raise MismatchedQuiverError("vector length differs from declared vertex count")
    by_name = dict(zip(declared, vec))
    return tuple(int(by_name[v]) for v in quiver.vertices)


# ---------------------------------------------------------------------------
# vector helpers

def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


def vec_leq(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vec_is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def vec_gcd(a: Vec) -> int:
    return math.gcd(*a) if len(a) > 1 else abs(a[0])


def vec_primitive(a: Vec) -> Vec:
    g = vec_gcd(a)
    return a if g in (0, 1) else tuple(x // g for x in a)


def vectors_below(beta: Vec) -> list[Vec]:
    """All integer vectors 0 <= a <= beta componentwise, lexicographic order."""
    out: list[Vec] = [()]
    for b in beta:
        out = [v + (x,) for v in out for x in range(b + 1)]
    return out


# ---------------------------------------------------------------------------
# forms and pairings

def euler_form(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Ringel form <alpha, beta>; hom - ext of generic representations."""
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    total = sum(x * y for x, y in zip(a, b))
    for t, h in quiver.arrow_indices:
        total -= a[t] * b[h]
    return total


def weight_apply(quiver: Quiver, sigma: Sequence[int], alpha: Sequence[int]) -> int:
    s = quiver.check_vector(sigma)
    a = quiver.check_vector(alpha)
    return sum(x * y for x, y in zip(s, a))


def canonical_weight(quiver: Quiver, beta: Sequence[int]) -> Vec:
    """The weight x -> <beta, x> - <x, beta>, as a coefficient vector."""
    b = quiver.check_vector(beta)
    coeffs = [0] * quiver.n
    for s in range(quiver.n):
        e = tuple(1 if i == s else 0 for i in range(quiver.n))
        coeffs[s] = euler_form(quiver, b, e) - euler_form(quiver, e, b)
    return tuple(coeffs)


@dataclass(frozen=True)
class OrderedDecomposition:
    """A sequence of nonzero dimension vectors summing to the ambient one."""

    parts: tuple[Vec, ...]

    def __post_init__(self):
        if any(vec_is_zero(p) for p in self.parts):
            raise MismatchedQuiverError("ordered decomposition with a zero part")

    @property
    def total(self) -> Vec:
        t = self.parts[0]
        for p in self.parts[1:]:
            t = vec_add(t, p)
        return t

    def __len__(self) -> int:
        return len(self.parts)


def mu(n: int, quiver: Quiver, sigma: Sequence[int], decomp: OrderedDecomposition) -> int:
    """Weight of the one-parameter subgroup of ``decomp`` on the fiber over 0.

    Independent of the twist degree ``n``: the base point (0, 1) has trivial
    O(1)-weight, so only the character contributes.
    """
    s = len(decomp)
    return sum((s + 1 - k) * weight_apply(quiver, sigma, part)
               for k, part in enumerate(decomp.parts, start=1))


def z_from_ordered(decomp: OrderedDecomposition) -> dict[int, Vec]:
    """Z-decomposition with part k placed at weight s+1-k (first part highest)."""
    s = len(decomp)
    return {s + 1 - k: part for k, part in enumerate(decomp.parts, start=1)}
