"""Degree-bounded search for semi-invariant weights.

A polynomial f on Rep(Q, beta) of weight tau satisfies f(g.R) = chi_tau(g) f(R).
Torus weights are filtered combinatorially on monomials; invariance under the
special linear part is imposed as exact polynomial identities against random
integer transvection products (det 1, integer inverse).  The reported weight
is sigma = -tau, the convention under which the weights fill Sigma(Q, beta).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError
from .exact import nullspace_int
from .modp import RANK_PROBE_PRIME, rref_mod
from .quiver import Quiver, Vec

MAX_DEGREE_BUDGET = 8
VERIFY_PRIMES = (67108859, 67108837, 67108819, 67108777, 67108763, 67108693)


@dataclass(frozen=True)
class WeightSpace:
    sigma: Vec
    dims_by_degree: dict  # degree -> dimension of the weight space
    total_dim: int
    group_elements_used: int
    false_positive_note: str


def _transvection_product(n: int, rng: random.Random) -> tuple[list, list]:
    """A small random element of SL_n(Z) and its integer inverse."""
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return g, [row[:] for row in g]
    ops = []
    for _ in range(n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        ops.append((i, j, c))
        for col in range(n):
            g[i][col] += c * g[j][col]
    ginv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, c in reversed(ops):
        for col in range(n):
            ginv[i][col] -= c * ginv[j][col]
    return g, ginv


def _variables(quiver: Quiver, beta: Vec):
    """(arrow index, row, col) per coordinate on Rep(Q, beta)."""
    out = []
    for k, (t, h) in enumerate(quiver.arrow_indices):
        for i in range(beta[h]):
            for j in range(beta[t]):
                out.append((k, i, j))
    return out


def _monomials(nvars: int, degree: int):
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        yield tuple(exp)


def _torus_weight(quiver: Quiver, beta: Vec, variables, exp: Vec):
    """Blockwise torus weight; None if not constant within some vertex block."""
    counts = {}  # (vertex, copy) -> net head-tail occurrences
    for v, e in enumerate(exp):
        if e == 0:
            continue
        k, i, j = variables[v]
        t, h = quiver.arrow_indices[k]
        counts[(h, i)] = counts.get((h, i), 0) + e
        counts[(t, j)] = counts.get((t, j), 0) - e
    tau = [0] * quiver.n
    for s in range(quiver.n):
        vals = {counts.get((s, c), 0) for c in range(beta[s])}
        if len(vals) > 1:
            return None
        if vals:
            tau[s] = vals.pop()
    return tuple(tau)


def _substituted(exp, lin_forms, nvars):
    """Expand the monomial with each variable replaced by its linear form."""
    zero = tuple([0] * nvars)
    poly = {zero: 1}
    for v, e in enumerate(exp):
        for _ in range(e):
            new = {}
            for term, coeff in poly.items():
                for vi, c in lin_forms[v]:
                    t2 = list(term)
                    t2[vi] += 1
                    t2 = tuple(t2)
                    new[t2] = new.get(t2, 0) + coeff * c
            poly = {t: c for t, c in new.items() if c != 0}
    return poly


def _exact_kernel_dim_and_basis(rows: list, ncand: int):
    """Kernel of the integer matrix whose columns are the candidate monomials.

    ``rows`` holds (group element index, candidate index, polynomial dict)
    triples; equations are indexed by (group element, monomial).  Mod-p
    elimination selects an independent row subset, the exact kernel is
    computed on it with Fractions, then the full system is checked against
    the kernel over enough word-size primes to be exact.
    """
    if not rows:
        return ncand, None
    eq_index: dict = {}
    for gi, _, r in rows:
        for m in r:
            eq_index.setdefault((gi, m), len(eq_index))
    mat = [[0] * ncand for _ in range(len(eq_index))]
    for gi, ci, r in rows:
        for m, c in r.items():
            mat[eq_index[(gi, m)]][ci] = c
    a_mod = np.array([[x % RANK_PROBE_PRIME for x in row] for row in mat], dtype=np.int64)
    _, _, pivot_rows = rref_mod(a_mod, RANK_PROBE_PRIME)
    sub = [mat[i] for i in pivot_rows]
    kernel = nullspace_int(sub) if sub else [
        tuple(1 if j == i else 0 for j in range(ncand)) for i in range(ncand)
    ]
    if kernel:
        _verify_kernel(mat, kernel)
    return len(kernel), kernel


def _verify_kernel(mat, kernel):
    max_a = max((max(abs(x) for x in row) for row in mat if row), default=0)
    max_k = max((max(abs(x) for x in v) for v in kernel), default=0)
    ncand = len(kernel[0])
    bound = 2 * ncand * max_a * max_k + 1
    prod = 1
    needed = []
    for p in VERIFY_PRIMES:
        needed.append(p)
        prod *= p
        if prod > bound:
            break
    if prod <= bound:
        raise BudgetError("verification primes exhausted; coefficients too large")
    kt = list(zip(*kernel))  # ncand x nker
    for p in needed:
        a = np.array([[x % p for x in row] for row in mat], dtype=np.int64)
        k = np.array([[x % p for x in row] for row in kt], dtype=np.int64)
        if ((a @ k) % p).any():
            raise BudgetError("mod-p selected rows missed exact rank; retry needed")


def si_weights_by_degree(quiver: Quiver, beta, dmax: int, seed: int = 0, repetitions: int = 6):
    """All weights sigma with a nonzero semi-invariant of weight -sigma in some
    polynomial degree <= dmax, with exact weight-space dimensions per degree."""
    b = quiver.check_vector(beta)
    if dmax > MAX_DEGREE_BUDGET:
        raise BudgetError(f"dmax {dmax} exceeds budget {MAX_DEGREE_BUDGET}")
    variables = _variables(quiver, b)
    nvars = len(variables)
    needs_sl = any(x >= 2 for x in b)
    results: dict[Vec, dict[int, int]] = {tuple([0] * quiver.n): {0: 1}}
    gcount_used = 0

    for d in range(1, dmax + 1):
        groups: dict[Vec, list[Vec]] = {}
        for exp in _monomials(nvars, d):
            tau = _torus_weight(quiver, b, variables, exp)
            if tau is None:
                continue
            groups.setdefault(tau, []).append(exp)
        for tau, cands in sorted(groups.items()):
            sigma = tuple(-x for x in tau)
            if not needs_sl:
                dim = len(cands)
            else:
                dim = _sl_invariant_dim(quiver, b, variables, cands, seed, repetitions)
                gcount_used = max(gcount_used, repetitions)
            if dim > 0:
                results.setdefault(sigma, {})[d] = dim

    out = []
    note = (
        "invariance imposed against random SL transvection products; "
        "false positives vanish as elements are added until the rank is stable"
    )
    for sigma in sorted(results):
        dims = results[sigma]
        out.append(
            WeightSpace(sigma, dict(sorted(dims.items())), sum(dims.values()), gcount_used, note)
        )
    return out


def _sl_invariant_dim(quiver: Quiver, beta, variables, cands, seed, repetitions):
    nvars = len(variables)
    rng = random.Random(seed * 7919 + 13)
    rows: list[dict] = []
    prev_dim = None
    stable = 0
    used = 0
    dim = len(cands)
    while used < repetitions and stable < 2 and dim > 0:
        gs, ginvs = [], []
        for s in range(quiver.n):
            g, ginv = _transvection_product(max(beta[s], 1), rng)
            gs.append(g)
            ginvs.append(ginv)
        lin_forms = []
        for (k, i, j) in variables:
            t, h = quiver.arrow_indices[k]
            form = []
            for vi, (k2, i2, j2) in enumerate(variables):
                if k2 != k:
                    continue
                c = gs[h][i][i2] * ginvs[t][j2][j]
                if c:
                    form.append((vi, c))
            lin_forms.append(form)
        for ci, exp in enumerate(cands):
            poly = _substituted(exp, lin_forms, nvars)
            poly[exp] = poly.get(exp, 0) - 1
            rows.append((used, ci, {m: c for m, c in poly.items() if c != 0}))
        used += 1
        dim, _ = _exact_kernel_dim_and_basis(rows, len(cands))
        if dim == prev_dim:
            stable += 1
        else:
            stable = 0
        prev_dim = dim
    return dim
