"""Exact rational polyhedral cones: H- and V-representations, faces, Sigma.

All arithmetic is integer/Fraction; rays and inequality normals are kept as
primitive integer vectors so cone equality is decidable by sorted comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import homext
from .exact import dot, rank, row_space_canonical, clear_denominators
from .quiver import Quiver, Vec, vec_is_zero, vec_primitive, vectors_below


@dataclass(frozen=True)
class HCone:
    """sigma . e = 0 for e in equalities, sigma . a <= 0 for a in inequalities."""

    ambient_dim: int
    equalities: tuple[Vec, ...]
    inequalities: tuple[Vec, ...]
    # labels[i]: dimension vectors that generated inequality i (diagnostics)
    labels: tuple[tuple[Vec, ...], ...] = field(default=())

    @staticmethod
    def build(ambient_dim, equalities, inequalities, labels=None):
        eqs = tuple(tuple(int(x) for x in e) for e in equalities)
        seen: dict[Vec, list[Vec]] = {}
        order: list[Vec] = []
        for k, ineq in enumerate(inequalities):
            v = vec_primitive(tuple(int(x) for x in ineq))
            lab = labels[k] if labels else tuple(int(x) for x in ineq)
            if v not in seen:
                seen[v] = []
                order.append(v)
            if lab is not None and lab not in seen[v]:
                seen[v].append(lab)
        return HCone(
            int(ambient_dim),
            eqs,
            tuple(order),
            tuple(tuple(seen[v]) for v in order),
        )

    def contains(self, point: Vec) -> bool:
        return all(dot(e, point) == 0 for e in self.equalities) and all(
            dot(a, point) <= 0 for a in self.inequalities
        )


@dataclass(frozen=True)
class VCone:
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]


@dataclass(frozen=True)
class Face:
    """A face identified by its maximal active inequality set."""

    active: tuple[int, ...]
    dim: int
    codim: int
    rays: tuple[Vec, ...]

    def key(self):
        return self.active


# ---------------------------------------------------------------------------
# double description


def _project_off(vec: Vec, a: Vec, l: Vec):
    """vec - (a.vec / a.l) * l, denominators cleared to a primitive vector."""
    num = dot(a, vec)
    den = dot(a, l)
    out = [Fraction(x) - Fraction(num, den) * y for x, y in zip(vec, l)]
    return clear_denominators(out)


def rays(cone: HCone) -> VCone:
    """Extreme rays and lineality by the double description method."""
    n = cone.ambient_dim
    if cone.equalities:
        from .exact import nullspace_int

        lineality = [tuple(v) for v in nullspace_int(cone.equalities)]
    else:
        lineality = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    ray_list: list[Vec] = []
    done: list[Vec] = []

    for a in cone.inequalities:
        hit = next((l for l in lineality if dot(a, l) != 0), None)
        if hit is not None:
            lineality = [
                _project_off(l, a, hit) for l in lineality if l is not hit
            ]
            lineality = [l for l in lineality if not vec_is_zero(l)]
            ray_list = [_project_off(r, a, hit) for r in ray_list]
            ray_list = [r for r in ray_list if not vec_is_zero(r)]
            new_ray = hit if dot(a, hit) < 0 else tuple(-x for x in hit)
            ray_list.append(vec_primitive(new_ray))
            ray_list = _dedupe(ray_list)
        else:
            vals = [dot(a, r) for r in ray_list]
            neg = [r for r, v in zip(ray_list, vals) if v < 0]
            zero = [r for r, v in zip(ray_list, vals) if v == 0]
            pos = [r for r, v in zip(ray_list, vals) if v > 0]
            if not pos:
                done.append(a)
                continue
            combos = []
            for rp in pos:
                for rn in neg:
                    if not _adjacent(rp, rn, ray_list, done, lineality):
                        continue
                    vp, vn = dot(a, rp), dot(a, rn)
                    combo = tuple(vp * x - vn * y for x, y in zip(rn, rp))
                    combo = vec_primitive(combo)
                    if not vec_is_zero(combo):
                        combos.append(combo)
            ray_list = _dedupe(zero + neg + combos)
        done.append(a)
    return VCone(tuple(sorted(ray_list)), row_space_canonical(lineality))


def _dedupe(rays_in: list[Vec]) -> list[Vec]:
    out = []
    for r in rays_in:
        if r not in out:
            out.append(r)
    return out


def _adjacent(r1: Vec, r2: Vec, ray_list, done, lineality) -> bool:
    z12 = [a for a in done if dot(a, r1) == 0 and dot(a, r2) == 0]
    for r3 in ray_list:
        if r3 is r1 or r3 is r2 or r3 == r1 or r3 == r2:
            continue
        if all(dot(a, r3) == 0 for a in z12):
            return False
    return True


def cone_dim(cone: HCone) -> int:
    v = rays(cone)
    gens = list(v.lineality) + list(v.rays)
    if not gens:
        return 0
    return rank(gens)


def cones_equal(c1: HCone, c2: HCone) -> bool:
    v1, v2 = rays(c1), rays(c2)
    return v1.rays == v2.rays and v1.lineality == v2.lineality


# ---------------------------------------------------------------------------
# faces


def _face_dim(rayset, lineality) -> int:
    gens = list(lineality) + list(rayset)
    return rank(gens) if gens else 0


def facets(cone: HCone) -> list[int]:
    """Indices of a minimal inequality subset defining the cone (one per facet,
    canonical tie-break by inequality vector)."""
    v = rays(cone)
    cdim = _face_dim(v.rays, v.lineality)
    by_face: dict[frozenset, int] = {}
    for i, a in enumerate(cone.inequalities):
        tight = frozenset(r for r in v.rays if dot(a, r) == 0)
        fdim = _face_dim(tight, v.lineality)
        if fdim != cdim - 1:
            continue
        if tight not in by_face or cone.inequalities[i] < cone.inequalities[by_face[tight]]:
            by_face[tight] = i
    return sorted(by_face.values())


def faces_up_to_codim(cone: HCone, max_codim: int) -> list[Face]:
    """All faces of ambient codimension <= max_codim, cone itself included,
    ordered by codimension then lexicographic active set."""
    v = rays(cone)
    all_rays = frozenset(v.rays)
    facet_sets = []
    cdim = _face_dim(v.rays, v.lineality)
    for i, a in enumerate(cone.inequalities):
        tight = frozenset(r for r in v.rays if dot(a, r) == 0)
        if _face_dim(tight, v.lineality) == cdim - 1:
            facet_sets.append(tight)
    # faces = intersections of facets, plus the cone itself
    found = {all_rays}
    frontier = [all_rays]
    while frontier:
        nxt = []
        for fs in frontier:
            for g in facet_sets:
                inter = fs & g
                if inter not in found:
                    found.add(inter)
                    nxt.append(inter)
        frontier = nxt
    out = []
    for rayset in found:
        f = face_from_rayset(cone, rayset, v)
        if f.codim <= max_codim:
            out.append(f)
    out.sort(key=lambda f: (f.codim, f.active))
    return out


def face_from_rayset(cone: HCone, rayset, v: VCone | None = None) -> Face:
    if v is None:
        v = rays(cone)
    active = tuple(
        i
        for i, a in enumerate(cone.inequalities)
        if all(dot(a, r) == 0 for r in rayset)
    )
    dim = _face_dim(rayset, v.lineality)
    return Face(active, dim, cone.ambient_dim - dim, tuple(sorted(rayset)))


# ---------------------------------------------------------------------------
# the semi-invariant cone


def build_sigma_hrep(quiver: Quiver, beta) -> HCone:
    """H-representation of Sigma(Q, beta): sigma(beta) = 0 together with
    sigma(alpha) <= 0 for every proper generic subdimension alpha of beta."""
    b = quiver.check_vector(beta)
    ineqs = []
    for alpha in homext.generic_subdims(quiver, b):
        if vec_is_zero(alpha) or alpha == b:
            continue
        ineqs.append(alpha)
    ineqs.sort()
    return HCone.build(quiver.n, [b], ineqs, labels=[a for a in ineqs])
