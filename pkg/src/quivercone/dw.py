"""Well-covering decompositions, the map Theta, and the face parametrization.

An ordered decomposition (b_1, ..., b_s) of beta is well covering when
b_i o b_j = 1 for all i < j.  Theta sends a set of parts to the face of
Sigma(Q, beta) cut out by the hyperplanes sigma(b_i) = 0.  The verifier
checks, codimension by codimension, that Theta is a bijection from the
part sets admitting a well-covering ordering by rational Schur roots onto
the faces of that codimension.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .cones import Face, HCone, VCone, build_sigma_hrep, face_from_rayset, faces_up_to_codim, rays
from .errors import BudgetError, EnvelopeError, NotWellCoveringError, OracleInconclusiveError
from .exact import dot, rank
from .homext import is_rational_schur_root
from .oracle import CountPolicy, SubrepCount, alpha_circ_beta
from .quiver import OrderedDecomposition, Quiver, Vec, mu, vec_is_zero, vec_sub, vectors_below

DEFAULT_DECOMP_BUDGET = 200_000

MAX_VERTEX_COUNT = 4
MAX_BETA_ENTRY = 4


@dataclass(frozen=True)
class DecompositionSet:
    """A multiset of parts with one well-covering ordering as certificate."""

    parts: tuple[Vec, ...]  # sorted, with multiplicity
    certificate: OrderedDecomposition | None = None


@dataclass(frozen=True)
class RejectedMultiset:
    parts: tuple[Vec, ...]
    reason: str
    counts: tuple = ()  # (ordering, i, j, SubrepCount) samples that failed


@dataclass(frozen=True)
class SVerdict:
    s: int
    accepted: tuple[DecompositionSet, ...]
    rejected: tuple[RejectedMultiset, ...]
    faces: tuple[Face, ...]
    matching: tuple  # (parts, face active set) pairs
    well_defined: str
    injective: str
    surjective: str
    linear_independent: str
    distinct_parts: str
    codim_law: str
    mu_halfspace: str
    contains_zero: str
    witnesses: tuple = ()


@dataclass(frozen=True)
class DwReport:
    beta: Vec
    s_max: int
    per_s: tuple[SVerdict, ...]
    convention_note: str = (
        "the face attached to an s-part decomposition is verified to have "
        "ambient codimension exactly s; the alternative indexing by dimension "
        "is not used"
    )

    def ok(self) -> bool:
        return all(
            v.well_defined == v.injective == v.surjective == "holds"
            for v in self.per_s
        )


def check_envelope(quiver: Quiver, beta) -> Vec:
    b = quiver.check_vector(beta)
    if quiver.n > MAX_VERTEX_COUNT:
        raise EnvelopeError(f"{quiver.n} vertices exceed the supported {MAX_VERTEX_COUNT}")
    if any(x > MAX_BETA_ENTRY for x in b):
        raise EnvelopeError(f"beta entry above {MAX_BETA_ENTRY} in {b}")
    return b


def enumerate_ordered_decompositions(
    quiver: Quiver, beta, s: int, budget: int = DEFAULT_DECOMP_BUDGET
) -> list[OrderedDecomposition]:
    """All sequences of s nonzero dimension vectors summing to beta, in
    lexicographic order."""
    b = check_envelope(quiver, beta)
    if s < 1:
        raise ValueError("s must be >= 1")
    out: list[OrderedDecomposition] = []

    def rec(remaining: Vec, chosen: tuple[Vec, ...]):
        k = len(chosen)
        if k == s - 1:
            if not vec_is_zero(remaining):
                out.append(OrderedDecomposition(chosen + (remaining,)))
                if len(out) > budget:
                    raise BudgetError(f"more than {budget} ordered decompositions")
            return
        for part in vectors_below(remaining):
            if vec_is_zero(part):
                continue
            rec(vec_sub(remaining, part), chosen + (part,))

    rec(b, ())
    out.sort(key=lambda d: d.parts)
    return out


@functools.lru_cache(maxsize=None)
def _circ(quiver: Quiver, alpha: Vec, beta: Vec, policy: CountPolicy) -> SubrepCount:
    return alpha_circ_beta(quiver, alpha, beta, policy)


def is_well_covering(
    quiver: Quiver, decomp: OrderedDecomposition, policy: CountPolicy = CountPolicy()
) -> bool:
    """b_i o b_j = 1 for every i < j; vacuously true for one part."""
    parts = decomp.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if _circ(quiver, parts[i], parts[j], policy).count != 1:
                return False
    return True


def wcal_s(
    quiver: Quiver,
    beta,
    s: int,
    policy: CountPolicy = CountPolicy(),
    budget: int = DEFAULT_DECOMP_BUDGET,
) -> list[DecompositionSet]:
    """Part multisets of size s made of rational Schur roots that admit at
    least one well-covering ordering, each with one certificate ordering."""
    accepted, rejected = _classify_multisets(quiver, beta, s, policy, budget)
    for r in rejected:
        if r.reason == "inconclusive":
            raise OracleInconclusiveError(f"cannot settle multiset {r.parts}", r.counts)
    return accepted


def _classify_multisets(quiver, beta, s, policy, budget):
    """Split size-s multisets of rational Schur parts into certified and
    rejected, keeping the failing counts as evidence."""
    by_multiset: dict[tuple, list[OrderedDecomposition]] = {}
    for d in enumerate_ordered_decompositions(quiver, beta, s, budget):
        if not all(is_rational_schur_root(quiver, p) for p in d.parts):
            continue
        by_multiset.setdefault(tuple(sorted(d.parts)), []).append(d)
    accepted: list[DecompositionSet] = []
    rejected: list[RejectedMultiset] = []
    for parts in sorted(by_multiset):
        cert = None
        fails = []
        saw_inconclusive = False
        for d in by_multiset[parts]:
            try:
                bad = _first_bad_pair(quiver, d, policy)
            except OracleInconclusiveError:
                saw_inconclusive = True
                continue
            if bad is None:
                cert = d
                break
            fails.append(bad)
        if cert is not None:
            accepted.append(DecompositionSet(parts, cert))
        elif saw_inconclusive:
            rejected.append(RejectedMultiset(parts, "inconclusive", tuple(fails)))
        else:
            rejected.append(
                RejectedMultiset(parts, "no well-covering ordering", tuple(fails))
            )
    return accepted, rejected


def _first_bad_pair(quiver, decomp, policy):
    parts = decomp.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            c = _circ(quiver, parts[i], parts[j], policy)
            if c.count != 1:
                return (decomp, i, j, c)
    return None


# ---------------------------------------------------------------------------
# Theta


def theta(quiver: Quiver, parts, sigma_cone: HCone) -> Face:
    """Face of the cone cut out by the hyperplanes sigma(part) = 0."""
    v = rays(sigma_cone)
    rayset = [r for r in v.rays if all(dot(p, r) == 0 for p in parts)]
    return face_from_rayset(sigma_cone, frozenset(rayset), v)


def theta_is_exact(quiver: Quiver, parts, sigma_cone: HCone) -> bool:
    """True iff the honest intersection with the hyperplanes equals the face
    spanned by the rays they kill.

    A single non-supporting hyperplane can slice through the interior, so the
    intersection is recomputed from scratch and compared ray by ray.
    """
    inter = HCone.build(
        sigma_cone.ambient_dim,
        tuple(sigma_cone.equalities) + tuple(parts),
        sigma_cone.inequalities,
    )
    vi = rays(inter)
    v = rays(sigma_cone)
    f = theta(quiver, parts, sigma_cone)
    return set(vi.rays) == set(f.rays) and vi.lineality == v.lineality


def face_of_decomposition(
    quiver: Quiver,
    decomp: OrderedDecomposition,
    sigma_cone: HCone,
    policy: CountPolicy = CountPolicy(),
) -> Face:
    if not is_well_covering(quiver, decomp, policy):
        raise NotWellCoveringError(f"{decomp.parts} admits a pair with count != 1")
    return theta(quiver, tuple(sorted(set(decomp.parts))), sigma_cone)


# ---------------------------------------------------------------------------
# the verifier


def verify_dw(
    quiver: Quiver,
    beta,
    s_max: int,
    policy: CountPolicy = CountPolicy(),
    budget: int = DEFAULT_DECOMP_BUDGET,
) -> DwReport:
    b = check_envelope(quiver, beta)
    sigma_cone = build_sigma_hrep(quiver, b)
    v = rays(sigma_cone)
    all_faces = faces_up_to_codim(sigma_cone, quiver.n)
    per_s = []
    for s in range(1, s_max + 1):
        per_s.append(_verify_s(quiver, b, s, sigma_cone, v, all_faces, policy, budget))
    return DwReport(b, s_max, tuple(per_s))


def _verify_s(quiver, beta, s, sigma_cone, v, all_faces, policy, budget):
    accepted, rejected = _classify_multisets(quiver, beta, s, policy, budget)
    inconclusive = any(r.reason == "inconclusive" for r in rejected)
    witnesses = []

    faces_s = tuple(f for f in all_faces if f.codim == s)
    images = []
    matching = []
    well_defined = "holds"
    codim_law = "holds"
    for ds in accepted:
        f = theta(quiver, ds.parts, sigma_cone)
        if not theta_is_exact(quiver, ds.parts, sigma_cone):
            well_defined = "fails"
            witnesses.append(("hyperplane not supporting", ds.parts))
        if f.codim != s:
            codim_law = "fails"
            well_defined = "fails"
            witnesses.append(("codim", ds.parts, f.codim, s))
        images.append(f)
        matching.append((ds.parts, f.active))

    injective = "holds"
    seen: dict = {}
    for ds, f in zip(accepted, images):
        if f.active in seen:
            injective = "fails"
            witnesses.append(("collision", seen[f.active], ds.parts, f.active))
        seen[f.active] = ds.parts

    surjective = "holds"
    hit = {f.active for f in images}
    for f in faces_s:
        if f.active not in hit:
            surjective = "fails"
            witnesses.append(("unmatched face", f.active, f.rays))

    linear_independent = "holds"
    for ds in accepted:
        if rank(list(ds.parts)) != len(ds.parts):
            linear_independent = "fails"
            witnesses.append(("dependent parts", ds.parts))

    distinct_parts = "holds"
    for ds in accepted:
        if len(set(ds.parts)) != len(ds.parts):
            distinct_parts = "fails"
            witnesses.append(("repeated part", ds.parts))

    mu_halfspace = "holds"
    for ds, f in zip(accepted, images):
        face_rays = set(f.rays)
        for r in v.rays:
            m = mu(1, quiver, r, ds.certificate)
            if m > 0 or (m == 0) != (r in face_rays):
                mu_halfspace = "fails"
                witnesses.append(("mu", ds.certificate.parts, r, m))

    contains_zero = "holds"  # every face of a cone contains the apex

    if inconclusive:
        tag = "inconclusive"
        well_defined = injective = surjective = tag
        codim_law = mu_halfspace = tag

    return SVerdict(
        s,
        tuple(accepted),
        tuple(rejected),
        faces_s,
        tuple(matching),
        well_defined,
        injective,
        surjective,
        linear_independent,
        distinct_parts,
        codim_law,
        mu_halfspace,
        contains_zero,
        tuple(witnesses),
    )
