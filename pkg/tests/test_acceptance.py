"""End-to-end acceptance suite.

Each test prints one PASS line on success; every comparison is exact
(integer/rational arithmetic, zero tolerance).
"""

import json
import random
import time

import pytest

from quivercone.cli import main
from quivercone.cones import build_sigma_hrep, cones_equal, rays
from quivercone.dw import theta, verify_dw
from quivercone.ffrep import random_rep
from quivercone.homext import generic_hom, hom_ext_recursive, is_generic_subdim
from quivercone.oracle import is_semistable
from quivercone.quiver import (
    mu,
    validate_quiver,
    vec_add,
    vec_primitive,
    vec_scale,
    vectors_below,
    weight_apply,
)
from quivercone.semiinv import si_weights_by_degree

A2 = validate_quiver(["1", "2"], [("a", "1", "2")])
A3 = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
K2 = validate_quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
K3 = validate_quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")])

CONE_INSTANCES = [
    (A2, (1, 1), "A2 (1,1)"),
    (A2, (2, 1), "A2 (2,1)"),
    (A3, (1, 1, 1), "A3 (1,1,1)"),
    (K2, (1, 1), "K2 (1,1)"),
    (K2, (2, 2), "K2 (2,2)"),
    (K3, (1, 1), "K3 (1,1)"),
]

DW_INSTANCES = [
    (A2, (1, 1), 2, {((0, 1), (1, 0))}),
    (K2, (1, 1), 2, {((0, 1), (1, 0))}),
    (K2, (2, 2), 2, {((0, 2), (2, 0))}),
    (A3, (1, 1, 1), 3, {((0, 0, 1), (1, 1, 0)), ((0, 1, 1), (1, 0, 0))}),
]


def test_01_hrep_matches_semiinvariant_weights():
    t0 = time.time()
    for q, beta, name in CONE_INSTANCES:
        h = build_sigma_hrep(q, beta)
        v = rays(h)
        weights = [w.sigma for w in si_weights_by_degree(q, beta, 6)]
        nonzero = [w for w in weights if any(x != 0 for x in w)]
        # every weight found lies in the cone, and every extreme ray of the
        # cone is realized by a weight, so the two ray sets coincide
        for w in weights:
            assert h.contains(w), (name, w)
        primitives = {vec_primitive(w) for w in nonzero}
        for r in v.rays:
            assert r in primitives, (name, r, primitives)
        for w in primitives:
            if w not in v.rays:
                # an interior lattice weight; must not be extreme: it has to
                # be a positive combination, which containment already gives
                assert h.contains(w)
    elapsed = time.time() - t0
    assert elapsed < 300
    print(f"\nACCEPTANCE 01 H-description vs semi-invariant weights: PASS ({elapsed:.1f}s)")


def test_02_saturation():
    for q, beta, name in CONE_INSTANCES:
        base = build_sigma_hrep(q, beta)
        for k in (2, 3):
            scaled = build_sigma_hrep(q, vec_scale(k, beta))
            assert cones_equal(base, scaled), (name, k)
    print("\nACCEPTANCE 02 saturation Sigma(k*beta) = Sigma(beta): PASS")


def test_03_generic_subdim_closure():
    t0 = time.time()
    for q in (A2, A3, K2, K3):
        rng = random.Random(20240817)
        for _ in range(200):
            a = tuple(rng.randint(0, 3) for _ in range(q.n))
            b = tuple(rng.randint(0, 3) for _ in range(q.n))
            c = tuple(rng.randint(0, 3) for _ in range(q.n))
            if is_generic_subdim(q, a, vec_add(a, b)) and is_generic_subdim(
                q, a, vec_add(a, c)
            ):
                assert is_generic_subdim(q, a, vec_add(a, vec_add(b, c))), (
                    q.vertices, a, b, c,
                )
    elapsed = time.time() - t0
    assert elapsed < 300
    print(f"\nACCEPTANCE 03 closure of generic subdimensions: PASS ({elapsed:.1f}s)")


def test_04_euler_identity_recursive_vs_sampled():
    from quivercone.quiver import euler_form

    for q, bound in ((K2, (3, 3)), (K3, (3, 3)), (A3, (3, 3, 3))):
        box = vectors_below(bound)
        for a in box:
            for b in box:
                rec = hom_ext_recursive(q, a, b)
                samp = generic_hom(q, a, b)  # 2 primes x 4 seeds each
                assert rec.hom - rec.ext == euler_form(q, a, b)
                assert samp.hom - samp.ext == euler_form(q, a, b)
                assert (rec.hom, rec.ext) == (samp.hom, samp.ext), (a, b)
    print("\nACCEPTANCE 04 hom - ext = Euler form, recursive = sampled: PASS")


def test_05_face_parametrization_bijective():
    t0 = time.time()
    for q, beta, s_max, expected_w2 in DW_INSTANCES:
        report = verify_dw(q, beta, s_max)
        assert report.ok(), (beta, report)
        for v in report.per_s:
            assert v.linear_independent == "holds"
            assert v.distinct_parts == "holds"
        w2 = {ds.parts for ds in report.per_s[1].accepted}
        assert w2 == expected_w2, (beta, w2)
        if (q, beta) == (K2, (2, 2)):
            rejected = {r.parts: r for r in report.per_s[1].rejected}
            assert ((1, 1), (1, 1)) in rejected
            assert any(c.count == 2 for (_, _, _, c) in rejected[((1, 1), (1, 1))].counts)
    elapsed = time.time() - t0
    assert elapsed < 600
    print(f"\nACCEPTANCE 05 face parametrization bijective: PASS ({elapsed:.1f}s)")


def test_06_codimension_law():
    for q, beta, s_max, _ in DW_INSTANCES:
        h = build_sigma_hrep(q, beta)
        report = verify_dw(q, beta, s_max)
        for v in report.per_s:
            assert v.codim_law == "holds"
            for ds in v.accepted:
                assert theta(q, ds.parts, h).codim == len(ds.parts), (beta, ds.parts)
    print("\nACCEPTANCE 06 codim of theta(S) equals |S|: PASS")


def test_07_mu_halfspace():
    for q, beta, s_max, _ in DW_INSTANCES:
        h = build_sigma_hrep(q, beta)
        v = rays(h)
        report = verify_dw(q, beta, s_max)
        for per in report.per_s:
            assert per.mu_halfspace == "holds"
            for ds in per.accepted:
                face_rays = set(theta(q, ds.parts, h).rays)
                for r in v.rays:
                    m = mu(1, q, r, ds.certificate)
                    assert m <= 0, (beta, ds.parts, r)
                    assert (m == 0) == (r in face_rays), (beta, ds.parts, r)
    print("\nACCEPTANCE 07 mu(1,sigma,D) <= 0 with equality on theta(S): PASS")


def test_08_semistability_bridge():
    for q, name in ((A2, "A2"), (K2, "K2")):
        beta = (1, 1)
        h = build_sigma_hrep(q, beta)
        for s1 in range(-2, 3):
            for s2 in range(-2, 3):
                sigma = (s1, s2)
                if weight_apply(q, sigma, beta) != 0:
                    continue
                member = h.contains(sigma)
                for t in range(5):
                    rep = random_rep(q, beta, 101, 1000 + t)
                    assert is_semistable(rep, sigma) == member, (name, sigma, t)
    print("\nACCEPTANCE 08 King semistability matches cone membership: PASS")


def test_09_pointedness():
    for q, beta, name in CONE_INSTANCES:
        v = rays(build_sigma_hrep(q, beta))
        assert v.lineality == (), name
    print("\nACCEPTANCE 09 trivial lineality (pointed cones): PASS")


def test_10_deterministic_reports(tmp_path, quiver_file):
    a2f = quiver_file("a2", ["1", "2"], [("a", "1", "2")])
    k2f = quiver_file("k2", ["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    a3f = quiver_file("a3", ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    cases = [
        ["cone", "--quiver", a2f, "--beta", "1,1"],
        ["cone", "--quiver", k2f, "--beta", "2,2"],
        ["faces", "--quiver", a3f, "--beta", "1,1,1"],
        ["schur", "--quiver", k2f, "--beta", "2,2"],
        ["candecomp", "--quiver", a2f, "--beta", "2,1"],
        ["decomp", "--quiver", k2f, "--beta", "2,2", "--s-max", "2", "--seed", "7"],
        ["dw-verify", "--quiver", k2f, "--beta", "2,2", "--s-max", "2", "--seed", "7"],
        ["dw-verify", "--quiver", a3f, "--beta", "1,1,1", "--s-max", "3", "--seed", "7"],
        ["oracle", "hom", "--quiver", k2f, "--alpha", "1,1", "--beta", "1,1", "--seed", "7"],
        ["oracle", "circ", "--quiver", k2f, "--alpha", "1,1", "--beta", "1,1", "--seed", "7"],
        ["oracle", "ss", "--quiver", a2f, "--beta", "1,1", "--sigma", "1,-1", "--seed", "7"],
        ["oracle", "si", "--quiver", k2f, "--beta", "1,1", "--deg", "2", "--seed", "7"],
    ]
    for i, argv in enumerate(cases):
        out1 = tmp_path / f"r{i}a.json"
        out2 = tmp_path / f"r{i}b.json"
        c1 = main(argv + ["--out", str(out1)])
        c2 = main(argv + ["--out", str(out2)])
        assert c1 == c2
        assert out1.read_bytes() == out2.read_bytes(), argv
        json.loads(out1.read_text())  # well-formed
    print("\nACCEPTANCE 10 byte-identical reports under fixed seeds: PASS")
