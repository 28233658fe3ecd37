"""Ground-truth brute force over prime fields.

Exhaustive subrepresentation counting, the alpha o beta pairing, and King
semistability of explicit representations.  Counts over a finite field can
miss Galois-conjugate points, so alpha o beta accepts a value only when it
reaches a quorum of identical raw counts spanning at least two primes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import NotBelowError, OracleInconclusiveError, TooLargeError
from .ffrep import FiniteFieldRepresentation, random_rep
from .homext import ext_recursive
from .quiver import Quiver, Vec, euler_form, vec_add, vec_leq, weight_apply

DEFAULT_TUPLE_BUDGET = 10_000_000


@dataclass(frozen=True)
class CountPolicy:
    primes: tuple[int, ...] = (101, 103)
    seeds_per_prime: int = 8
    quorum: int = 3
    budget: int = DEFAULT_TUPLE_BUDGET
    seed: int = 0


@dataclass(frozen=True)
class SubrepCount:
    alpha: Vec
    count: int
    infinite: bool = False
    reason: str = "counted"
    evidence: tuple = field(default_factory=tuple)  # (prime, seed, raw count)


# ---------------------------------------------------------------------------
# subspace enumeration (reduced echelon parametrization)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspaces(n: int, k: int, p: int) -> list[tuple[tuple[int, ...], ...]]:
    """All k-dimensional subspaces of F_p^n as RREF basis row tuples."""
    if k == 0:
        return [()]
    out = []
    for pivots in itertools.combinations(range(n), k):
        free_pos = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for vals in itertools.product(range(p), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(k)]
            for r, c in zip(range(k), pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free_pos, vals):
                rows[r][c] = v
            out.append(tuple(tuple(row) for row in rows))
    return out


def _in_span(vec, basis, pivots, p) -> bool:
    v = list(vec)
    for row, c in zip(basis, pivots):
        if v[c]:
            f = v[c]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def _pivots(basis) -> tuple[int, ...]:
    return tuple(next(i for i, x in enumerate(row) if x == 1) for row in basis)


def _closure_ok(rep: FiniteFieldRepresentation, chosen: dict, s: int) -> bool:
    """Check arrows whose endpoints are both assigned once vertex s joins."""
    p = rep.p
    for k, (t, h) in enumerate(rep.quiver.arrow_indices):
        if s not in (t, h) or t not in chosen or h not in chosen:
            continue
        u = rep.matrix(k)
        head_basis = chosen[h]
        piv = _pivots(head_basis)
        for row in chosen[t]:
            img = tuple(int(x) % p for x in (u @ np.array(row, dtype=np.int64)))
            if not _in_span(img, head_basis, piv, p):
                return False
    return True


def count_subreps(rep: FiniteFieldRepresentation, alpha, budget: int = DEFAULT_TUPLE_BUDGET) -> int:
    """Exhaustive count of alpha-dimensional subrepresentations of rep."""
    q = rep.quiver
    a = q.check_vector(alpha)
    if not (all(x >= 0 for x in a) and vec_leq(a, rep.dim)):
        raise NotBelowError(f"{a} not below {rep.dim}")
    total = 1
    for s in range(q.n):
        total *= gaussian_binomial(rep.dim[s], a[s], rep.p)
    if total > budget:
        raise TooLargeError(f"{total} subspace tuples exceed budget {budget}")
    per_vertex = [subspaces(rep.dim[s], a[s], rep.p) for s in range(q.n)]

    count = 0

    def assign(s: int, chosen: dict):
        nonlocal count
        if s == q.n:
            count += 1
            return
        for sub in per_vertex[s]:
            chosen[s] = sub
            if _closure_ok(rep, chosen, s):
                assign(s + 1, chosen)
        chosen.pop(s, None)

    assign(0, {})
    return count


def subrep_dimension_vectors(rep: FiniteFieldRepresentation, budget: int = DEFAULT_TUPLE_BUDGET) -> set[Vec]:
    """Dimension vectors of all subrepresentations of rep."""
    q = rep.quiver
    total = 1
    for s in range(q.n):
        total *= sum(gaussian_binomial(rep.dim[s], k, rep.p) for k in range(rep.dim[s] + 1))
    if total > budget:
        raise TooLargeError(f"{total} subspace tuples exceed budget {budget}")
    per_vertex = [
        [sub for k in range(rep.dim[s] + 1) for sub in subspaces(rep.dim[s], k, rep.p)]
        for s in range(q.n)
    ]
    dims: set[Vec] = set()

    def assign(s: int, chosen: dict):
        if s == q.n:
            dims.add(tuple(len(chosen[i]) for i in range(q.n)))
            return
        for sub in per_vertex[s]:
            chosen[s] = sub
            if _closure_ok(rep, chosen, s):
                assign(s + 1, chosen)
        chosen.pop(s, None)

    assign(0, {})
    return dims


# ---------------------------------------------------------------------------
# alpha o beta


def alpha_circ_beta(quiver: Quiver, alpha, beta, policy: CountPolicy = CountPolicy()) -> SubrepCount:
    """Number of alpha-dimensional subrepresentations of a general
    representation of dimension alpha+beta when finite, 0 otherwise."""
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise NotBelowError("negative dimension vector")
    ext = ext_recursive(quiver, a, b)
    if ext != 0:
        return SubrepCount(a, 0, reason=f"generic ext {ext} nonzero")
    if euler_form(quiver, a, b) != 0:
        return SubrepCount(a, 0, infinite=True, reason="positive-dimensional family")
    gamma = vec_add(a, b)
    evidence = []
    for p in policy.primes:
        for t in range(policy.seeds_per_prime):
            seed = policy.seed * 10_007 + t
            rep = random_rep(quiver, gamma, p, seed)
            raw = count_subreps(rep, a, policy.budget)
            evidence.append((p, seed, raw))
    # largest raw count backed by a quorum of samples from >= 2 primes;
    # smaller counts are expected when points are Galois-conjugate
    accepted = None
    for c in sorted({e[2] for e in evidence}, reverse=True):
        hits = [e for e in evidence if e[2] == c]
        if len(hits) >= policy.quorum and len({e[0] for e in hits}) >= 2:
            accepted = c
            break
    if accepted is None:
        raise OracleInconclusiveError(
            f"no quorum among raw counts for {a} o {b}", evidence
        )
    return SubrepCount(a, accepted, evidence=tuple(evidence))


# ---------------------------------------------------------------------------
# King semistability


def is_semistable(rep: FiniteFieldRepresentation, sigma, budget: int = DEFAULT_TUPLE_BUDGET) -> bool:
    """sigma(dim R) = 0 and sigma(alpha) <= 0 for the dimension vector of
    every actual subrepresentation of R."""
    q = rep.quiver
    s = q.check_vector(sigma)
    if weight_apply(q, s, rep.dim) != 0:
        return False
    for alpha in subrep_dimension_vectors(rep, budget):
        if weight_apply(q, s, alpha) > 0:
            return False
    return True
