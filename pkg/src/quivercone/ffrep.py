"""Explicit representations over prime fields.

Matrices are numpy int64 arrays with entries reduced mod p; the matrix of an
arrow has shape (head dimension, tail dimension).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import BadPrimeError, FieldMismatchError, MismatchedQuiverError
from .quiver import Quiver, Vec

MIN_PRIME = 101


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FiniteFieldRepresentation:
    quiver: Quiver
    dim: Vec
    p: int
    matrices: tuple  # one int64 array per arrow, aligned with quiver.arrows
    seed: int | None = None

    def matrix(self, arrow_index: int) -> np.ndarray:
        return self.matrices[arrow_index]


def random_rep(quiver: Quiver, beta, p: int, seed: int) -> FiniteFieldRepresentation:
    """Uniform independent entries, deterministic given the seed."""
    if p < MIN_PRIME or not _is_prime(p):
        raise BadPrimeError(f"p={p}: need a prime >= {MIN_PRIME}")
    b = quiver.check_vector(beta)
    mix = seed
    for x in (p, *b):
        mix = mix * 1_000_003 + x + 7919
    rng = random.Random(mix)
    mats = []
    for t, h in quiver.arrow_indices:
        mats.append(
            np.array(
                [[rng.randrange(p) for _ in range(b[t])] for _ in range(b[h])],
                dtype=np.int64,
            ).reshape(b[h], b[t])
        )
    return FiniteFieldRepresentation(quiver, b, p, tuple(mats), seed)


def hom_dim(rep_r: FiniteFieldRepresentation, rep_s: FiniteFieldRepresentation) -> int:
    """dim of {(f(s))_s : f(head) u_R(a) = u_S(a) f(tail) for every arrow a}."""
    if rep_r.quiver is not rep_s.quiver and rep_r.quiver != rep_s.quiver:
        raise MismatchedQuiverError("hom_dim across different quivers")
    if rep_r.p != rep_s.p:
        raise FieldMismatchError(f"fields F_{rep_r.p} vs F_{rep_s.p}")
    q = rep_r.quiver
    p = rep_r.p
    a, b = rep_r.dim, rep_s.dim  # f(s) is a b(s) x a(s) matrix
    offsets = []
    total = 0
    for s in range(q.n):
        offsets.append(total)
        total += b[s] * a[s]
    rows = []
    for k, (t, h) in enumerate(q.arrow_indices):
        ur = rep_r.matrix(k)  # a(h) x a(t)
        us = rep_s.matrix(k)  # b(h) x b(t)
        # equations indexed by (i < b(h), j < a(t)):
        #   sum_m f(h)[i,m] ur[m,j] - sum_m us[i,m] f(t)[m,j] = 0
        for i in range(b[h]):
            for j in range(a[t]):
                row = np.zeros(total, dtype=np.int64)
                for m in range(a[h]):
                    row[offsets[h] + i * a[h] + m] += int(ur[m, j])
                for m in range(b[t]):
                    row[offsets[t] + m * a[t] + j] -= int(us[i, m])
                rows.append(row % p)
    if not rows:
        return total
    from .modp import rank_mod

    return total - rank_mod(np.array(rows), p)
