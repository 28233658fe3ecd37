"""Generic hom/ext between dimension vectors, Schur roots, canonical decomposition.

Two routes are provided for ext and kept apart on purpose:

* a deterministic recursion on generic subdimension vectors
  (ext(a,b) = max -<a', b''> over generic subs a' of a and generic
  quotient dimensions b'' of b), and
* a randomized finite-field sampling of hom followed by
  ext = hom - <a,b>.

The test suite plays one against the other.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .errors import NegativeExtError, NotBelowError
from .ffrep import hom_dim, random_rep
from .quiver import (
    Quiver,
    Vec,
    euler_form,
    vec_gcd,
    vec_is_zero,
    vec_leq,
    vec_primitive,
    vec_sub,
    vectors_below,
)


@dataclass(frozen=True)
class SamplingPolicy:
    trials: int = 8
    primes: tuple[int, ...] = (32003, 65537)
    seed: int = 0


@dataclass(frozen=True)
class GenericHomExt:
    """A hom/ext answer together with how it was obtained."""

    alpha: Vec
    beta: Vec
    hom: int
    ext: int
    method: str  # "recursive" | "sampled"
    evidence: tuple = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# deterministic route: Schofield's recursion


@functools.lru_cache(maxsize=None)
def generic_subdims(quiver: Quiver, beta: Vec) -> tuple[Vec, ...]:
    """All generic subdimension vectors of beta, 0 and beta included."""
    beta = quiver.check_vector(beta)
    out = []
    for alpha in vectors_below(beta):
        if _is_generic_subdim(quiver, alpha, beta):
            out.append(alpha)
    return tuple(out)


def _is_generic_subdim(quiver: Quiver, alpha: Vec, beta: Vec) -> bool:
    if alpha == beta or vec_is_zero(alpha):
        return True
    gamma = vec_sub(beta, alpha)
    return all(
        euler_form(quiver, sub, gamma) >= 0 for sub in generic_subdims(quiver, alpha)
    )


def is_generic_subdim(quiver: Quiver, alpha, beta) -> bool:
    """True iff a general beta-dimensional representation has an
    alpha-dimensional subrepresentation (Schofield's criterion)."""
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    if not (all(x >= 0 for x in a) and vec_leq(a, b)):
        raise NotBelowError(f"{a} is not between 0 and {b}")
    return _is_generic_subdim(quiver, a, b)


@functools.lru_cache(maxsize=None)
def ext_recursive(quiver: Quiver, alpha: Vec, beta: Vec) -> int:
    """Generic ext, as the max of -<a', b''> over generic subs a' of alpha and
    generic quotient dimensions b'' of beta."""
    best = 0
    quotients = [vec_sub(beta, s) for s in generic_subdims(quiver, beta)]
    for sub in generic_subdims(quiver, alpha):
        for quo in quotients:
            v = -euler_form(quiver, sub, quo)
            if v > best:
                best = v
    return best


def hom_ext_recursive(quiver: Quiver, alpha, beta) -> GenericHomExt:
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    ext = ext_recursive(quiver, a, b)
    return GenericHomExt(a, b, euler_form(quiver, a, b) + ext, ext, "recursive")


# ---------------------------------------------------------------------------
# randomized route: finite-field sampling


def generic_hom(quiver: Quiver, alpha, beta, policy: SamplingPolicy = SamplingPolicy()) -> GenericHomExt:
    """Min over sampled pairs of the hom space dimension; an upper bound for
    the generic value that equals it with high probability."""
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    best = None
    evidence = []
    for t in range(policy.trials):
        p = policy.primes[t % len(policy.primes)]
        seed_r = policy.seed * 7919 + 2 * t
        seed_s = policy.seed * 7919 + 2 * t + 1
        d = hom_dim(random_rep(quiver, a, p, seed_r), random_rep(quiver, b, p, seed_s))
        evidence.append((p, seed_r, d))
        best = d if best is None else min(best, d)
    hom = 0 if best is None else best
    ext = hom - euler_form(quiver, a, b)
    if ext < 0:
        raise NegativeExtError(
            f"sampled hom {hom} below Euler form {euler_form(quiver, a, b)} "
            f"for {a}, {b}"
        )
    return GenericHomExt(a, b, hom, ext, "sampled", tuple(evidence))


def generic_ext(quiver: Quiver, alpha, beta, policy: SamplingPolicy = SamplingPolicy()) -> GenericHomExt:
    return generic_hom(quiver, alpha, beta, policy)


# ---------------------------------------------------------------------------
# Schur roots and the canonical decomposition


@functools.lru_cache(maxsize=None)
def _schur_stable(quiver: Quiver, beta: Vec) -> bool:
    """King stability of the generic representation for the weight
    x -> <beta,x> - <x,beta>; equivalent to beta being a Schur root."""
    from .quiver import canonical_weight, weight_apply

    sigma = canonical_weight(quiver, beta)
    for alpha in generic_subdims(quiver, beta):
        if vec_is_zero(alpha) or alpha == beta:
            continue
        if weight_apply(quiver, sigma, alpha) >= 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _canonical_decomposition(quiver: Quiver, beta: Vec) -> tuple[Vec, ...]:
    if _schur_stable(quiver, beta):
        return (beta,)

    # The decomposition into Schur roots with pairwise vanishing ext in both
    # directions is unique, so a depth-first search returning the first hit is
    # correct; parts are produced in non-increasing lexicographic order.
    parts_pool = [v for v in vectors_below(beta) if not vec_is_zero(v) and _schur_stable(quiver, v)]
    parts_pool.sort(reverse=True)

    def compatible(p: Vec, q: Vec) -> bool:
        return ext_recursive(quiver, p, q) == 0 and ext_recursive(quiver, q, p) == 0

    def search(remaining: Vec, chosen: tuple[Vec, ...], start: int):
        if vec_is_zero(remaining):
            return chosen
        for i in range(start, len(parts_pool)):
            cand = parts_pool[i]
            if not vec_leq(cand, remaining):
                continue
            if chosen and cand > chosen[-1]:
                continue
            if all(compatible(cand, c) for c in chosen):
                hit = search(vec_sub(remaining, cand), chosen + (cand,), i)
                if hit is not None:
                    return hit
        return None

    found = search(beta, (), 0)
    if found is None:  # cannot happen for a valid quiver; fail loudly
        raise RuntimeError(f"no canonical decomposition found for {beta}")
    return tuple(sorted(found, reverse=True))


def canonical_decomposition(quiver: Quiver, beta) -> tuple[Vec, ...]:
    """The unique multiset of Schur roots with pairwise vanishing generic ext
    summing to beta, sorted in non-increasing lexicographic order."""
    b = quiver.check_vector(beta)
    if vec_is_zero(b):
        raise NotBelowError("canonical decomposition of the zero vector")
    return _canonical_decomposition(quiver, b)


def is_schur_root(quiver: Quiver, beta) -> bool:
    b = quiver.check_vector(beta)
    if vec_is_zero(b):
        raise NotBelowError("zero vector")
    return canonical_decomposition(quiver, b) == (b,)


def is_rational_schur_root(quiver: Quiver, beta) -> bool:
    """True iff beta/gcd(beta) is a Schur root."""
    b = quiver.check_vector(beta)
    if vec_is_zero(b):
        raise NotBelowError("zero vector")
    g = vec_gcd(b)
    reduced = tuple(x // g for x in b)
    return is_schur_root(quiver, reduced)
