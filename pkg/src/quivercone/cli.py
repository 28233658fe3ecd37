"""Batch command line interface.

One command per process; every run emits a single JSON report (stdout or
--out) and terminates with exactly one status:

    0   verified success
    10  failure with witness
    11  inconclusive (oracle could not settle a count)
    12  budget exceeded
    2   usage error (bad flags, bad quiver file, mismatched vectors)

Reports are deterministic: identical inputs, seeds and budgets give
byte-identical bytes.  All vectors in reports follow the declared vertex
order of the quiver file.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import cones, dw, homext, oracle, semiinv
from .errors import (
    BudgetError,
    OracleInconclusiveError,
    QuiverConeError,
    TooLargeError,
)
from .ffrep import random_rep
from .quiver import (
    Quiver,
    canonical_weight,
    load_quiver,
    realign,
    weight_apply,
)

EXIT_SUCCESS = 0
EXIT_FAILURE = 10
EXIT_INCONCLUSIVE = 11
EXIT_BUDGET = 12
EXIT_USAGE = 2

CONVENTIONS = {
    "version": 1,
    "euler_form": "<a,b> = sum_s a(s)b(s) - sum_{arrows t->h} a(t)b(h)",
    "cone": "Sigma(Q,beta) = {sigma : sigma(beta) = 0 and sigma(alpha) <= 0 "
            "for every generic subdimension alpha of beta}",
    "weight_sign": "a semi-invariant f with f(g.R) = prod_s det(g(s))^tau(s) f(R) "
                   "is reported under the weight sigma = -tau",
    "decomposition_weights": "part k of an s-part ordered decomposition carries "
                             "one-parameter-subgroup weight s+1-k (first part highest)",
    "vector_order": "all vectors follow the declared vertex order of the quiver file",
}


def _parse_vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad integer vector {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercone",
        description="semi-invariant cones of acyclic quivers, their faces, "
                    "and brute-force oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **need):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--quiver", required=True, help="path to a quiver JSON file")
        p.add_argument("--beta", type=_parse_vec, required=need.get("beta", True))
        if need.get("alpha"):
            p.add_argument("--alpha", type=_parse_vec, required=True)
        if need.get("sigma"):
            p.add_argument("--sigma", type=_parse_vec, required=True)
        if need.get("s_max"):
            p.add_argument("--s-max", type=int, default=2, dest="s_max")
        if need.get("max_codim"):
            p.add_argument("--max-codim", type=int, default=None, dest="max_codim")
        if need.get("deg"):
            p.add_argument("--deg", type=int, default=3)
        if need.get("seed"):
            p.add_argument("--seed", type=int, required=True)
        if need.get("primes"):
            p.add_argument("--primes", type=_parse_vec, default=None)
        if need.get("trials"):
            p.add_argument("--trials", type=int, default=None)
        if need.get("budget"):
            p.add_argument("--budget", type=int, default=None)
        p.add_argument("--out", default=None, help="report file (default stdout)")
        return p

    add("cone", "H- and V-representation of Sigma(Q,beta)")
    add("faces", "face lattice of Sigma(Q,beta)", max_codim=True)
    add("schur", "Schur root and rational Schur root tests")
    add("candecomp", "canonical decomposition of beta")
    add("decomp", "well-covering part multisets per number of parts",
        s_max=True, seed=True, primes=True, budget=True)
    add("dw-verify", "verify the face parametrization by well-covering decompositions",
        s_max=True, seed=True, primes=True, budget=True)

    po = sub.add_parser("oracle", help="brute-force oracles")
    osub = po.add_subparsers(dest="oracle_command", required=True)

    def oadd(name, **need):
        p = osub.add_parser(name)
        p.add_argument("--quiver", required=True)
        p.add_argument("--beta", type=_parse_vec, required=True)
        if need.get("alpha"):
            p.add_argument("--alpha", type=_parse_vec, required=True)
        if need.get("sigma"):
            p.add_argument("--sigma", type=_parse_vec, required=True)
        if need.get("deg"):
            p.add_argument("--deg", type=int, default=3)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--primes", type=_parse_vec, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--out", default=None)
        return p

    oadd("hom", alpha=True)
    oadd("ext", alpha=True)
    oadd("circ", alpha=True)
    oadd("ss", sigma=True)
    oadd("si", deg=True)
    return parser


# ---------------------------------------------------------------------------
# report plumbing


class _Aligner:
    """Maps canonical-order vectors back to the declared vertex order."""

    def __init__(self, quiver: Quiver, declared):
        self.quiver = quiver
        self.declared = list(declared)

    def out(self, vec):
        return [vec[self.quiver.index(v)] for v in self.declared]

    def outs(self, vecs):
        return [self.out(v) for v in vecs]


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return repr(obj)


def _emit(report: dict, out_path) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _count_policy(args) -> oracle.CountPolicy:
    kw = {"seed": args.seed}
    if getattr(args, "primes", None):
        kw["primes"] = tuple(args.primes)
    if getattr(args, "trials", None):
        kw["seeds_per_prime"] = args.trials
    if getattr(args, "budget", None):
        kw["budget"] = args.budget
    return oracle.CountPolicy(**kw)


def _sampling_policy(args) -> homext.SamplingPolicy:
    kw = {"seed": args.seed}
    if getattr(args, "primes", None):
        kw["primes"] = tuple(args.primes)
    if getattr(args, "trials", None):
        kw["trials"] = args.trials
    return homext.SamplingPolicy(**kw)


# ---------------------------------------------------------------------------
# command bodies; each returns (result dict, exit status)


def _cmd_cone(quiver, al, beta, args):
    hrep = cones.build_sigma_hrep(quiver, beta)
    v = cones.rays(hrep)
    facet_idx = cones.facets(hrep)
    return {
        "equalities": al.outs(hrep.equalities),
        "inequalities": al.outs(hrep.inequalities),
        "inequality_labels": [al.outs(lab) for lab in hrep.labels],
        "rays": al.outs(v.rays),
        "lineality": al.outs(v.lineality),
        "dim": cones.cone_dim(hrep),
        "facets": [al.out(hrep.inequalities[i]) for i in facet_idx],
    }, EXIT_SUCCESS


def _cmd_faces(quiver, al, beta, args):
    hrep = cones.build_sigma_hrep(quiver, beta)
    max_codim = args.max_codim if args.max_codim is not None else quiver.n
    out = []
    for f in cones.faces_up_to_codim(hrep, max_codim):
        out.append({
            "active": [al.out(hrep.inequalities[i]) for i in f.active],
            "dim": f.dim,
            "codim": f.codim,
            "rays": al.outs(f.rays),
        })
    return {"faces": out, "inequalities": al.outs(hrep.inequalities)}, EXIT_SUCCESS


def _cmd_schur(quiver, al, beta, args):
    return {
        "is_schur_root": homext.is_schur_root(quiver, beta),
        "is_rational_schur_root": homext.is_rational_schur_root(quiver, beta),
        "canonical_weight": al.out(canonical_weight(quiver, beta)),
    }, EXIT_SUCCESS


def _cmd_candecomp(quiver, al, beta, args):
    parts = homext.canonical_decomposition(quiver, beta)
    return {"parts": al.outs(parts)}, EXIT_SUCCESS


def _cmd_decomp(quiver, al, beta, args):
    policy = _count_policy(args)
    budget = args.budget or dw.DEFAULT_DECOMP_BUDGET
    result = {}
    status = EXIT_SUCCESS
    for s in range(1, args.s_max + 1):
        accepted, rejected = dw._classify_multisets(quiver, beta, s, policy, budget)
        if any(r.reason == "inconclusive" for r in rejected):
            status = EXIT_INCONCLUSIVE
        result[str(s)] = {
            "accepted": [
                {
                    "parts": al.outs(ds.parts),
                    "certificate": al.outs(ds.certificate.parts),
                }
                for ds in accepted
            ],
            "rejected": [
                {
                    "parts": al.outs(r.parts),
                    "reason": r.reason,
                    "counts": _jsonable(r.counts),
                }
                for r in rejected
            ],
        }
    return result, status


def _cmd_dw_verify(quiver, al, beta, args):
    policy = _count_policy(args)
    budget = args.budget or dw.DEFAULT_DECOMP_BUDGET
    report = dw.verify_dw(quiver, beta, args.s_max, policy, budget)
    verdict_names = (
        "well_defined", "injective", "surjective", "linear_independent",
        "distinct_parts", "codim_law", "mu_halfspace", "contains_zero",
    )
    per_s = []
    any_fail = any_inconclusive = False
    for v in report.per_s:
        verdicts = {name: getattr(v, name) for name in verdict_names}
        any_fail = any_fail or "fails" in verdicts.values()
        any_inconclusive = any_inconclusive or "inconclusive" in verdicts.values()
        per_s.append({
            "s": v.s,
            "verdicts": verdicts,
            "accepted": [
                {"parts": al.outs(ds.parts), "certificate": al.outs(ds.certificate.parts)}
                for ds in v.accepted
            ],
            "rejected": [
                {"parts": al.outs(r.parts), "reason": r.reason, "counts": _jsonable(r.counts)}
                for r in v.rejected
            ],
            "faces": [
                {"active": list(f.active), "dim": f.dim, "codim": f.codim,
                 "rays": al.outs(f.rays)}
                for f in v.faces
            ],
            "matching": [
                {"parts": al.outs(parts), "face_active": list(active)}
                for parts, active in v.matching
            ],
            "witnesses": _jsonable(v.witnesses),
        })
    status = EXIT_FAILURE if any_fail else (
        EXIT_INCONCLUSIVE if any_inconclusive else EXIT_SUCCESS
    )
    return {"per_s": per_s, "note": report.convention_note}, status


def _cmd_oracle_homext(quiver, al, beta, args):
    rec = homext.hom_ext_recursive(quiver, args.alpha_c, beta)
    samp = homext.generic_hom(quiver, args.alpha_c, beta, _sampling_policy(args))
    return {
        "recursive": {"hom": rec.hom, "ext": rec.ext},
        "sampled": {"hom": samp.hom, "ext": samp.ext, "evidence": _jsonable(samp.evidence)},
        "agree": rec.hom == samp.hom and rec.ext == samp.ext,
    }, EXIT_SUCCESS if (rec.hom, rec.ext) == (samp.hom, samp.ext) else EXIT_FAILURE


def _cmd_oracle_circ(quiver, al, beta, args):
    c = oracle.alpha_circ_beta(quiver, args.alpha_c, beta, _count_policy(args))
    return {
        "count": c.count,
        "infinite": c.infinite,
        "reason": c.reason,
        "evidence": _jsonable(c.evidence),
    }, EXIT_SUCCESS


def _cmd_oracle_ss(quiver, al, beta, args):
    sigma = args.sigma_c
    trials = args.trials or 5
    primes = tuple(args.primes) if args.primes else (101,)
    budget = args.budget or oracle.DEFAULT_TUPLE_BUDGET
    samples = []
    for t in range(trials):
        p = primes[t % len(primes)]
        rep = random_rep(quiver, beta, p, args.seed * 7919 + t)
        samples.append({
            "prime": p,
            "seed": args.seed * 7919 + t,
            "semistable": oracle.is_semistable(rep, sigma, budget),
        })
    return {
        "sigma_of_beta": weight_apply(quiver, sigma, beta),
        "samples": samples,
    }, EXIT_SUCCESS


def _cmd_oracle_si(quiver, al, beta, args):
    spaces = semiinv.si_weights_by_degree(quiver, beta, args.deg, seed=args.seed)
    return {
        "weights": [
            {
                "sigma": al.out(w.sigma),
                "dims_by_degree": {str(k): v for k, v in w.dims_by_degree.items()},
                "total_dim": w.total_dim,
                "note": w.false_positive_note,
            }
            for w in spaces
        ],
    }, EXIT_SUCCESS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        quiver, declared = load_quiver(args.quiver)
    except (OSError, ValueError, KeyError, QuiverConeError) as e:
        print(f"quivercone: bad quiver file: {e}", file=sys.stderr)
        return EXIT_USAGE
    al = _Aligner(quiver, declared)

    command = args.command
    if command == "oracle":
        command = f"oracle {args.oracle_command}"
    try:
        beta = realign(quiver, declared, args.beta)
        if getattr(args, "alpha", None) is not None:
            args.alpha_c = realign(quiver, declared, args.alpha)
        if getattr(args, "sigma", None) is not None:
            args.sigma_c = realign(quiver, declared, args.sigma)
        body = {
            "cone": _cmd_cone,
            "faces": _cmd_faces,
            "schur": _cmd_schur,
            "candecomp": _cmd_candecomp,
            "decomp": _cmd_decomp,
            "dw-verify": _cmd_dw_verify,
            "oracle hom": _cmd_oracle_homext,
            "oracle ext": _cmd_oracle_homext,
            "oracle circ": _cmd_oracle_circ,
            "oracle ss": _cmd_oracle_ss,
            "oracle si": _cmd_oracle_si,
        }[command]
        result, status = body(quiver, al, beta, args)
    except OracleInconclusiveError as e:
        result = {"error": str(e), "evidence": _jsonable(tuple(e.evidence))}
        status = EXIT_INCONCLUSIVE
    except (BudgetError, TooLargeError) as e:
        result = {"error": str(e)}
        status = EXIT_BUDGET
    except QuiverConeError as e:
        print(f"quivercone: {e}", file=sys.stderr)
        return EXIT_USAGE

    status_name = {
        EXIT_SUCCESS: "success",
        EXIT_FAILURE: "failure",
        EXIT_INCONCLUSIVE: "inconclusive",
        EXIT_BUDGET: "budget",
    }[status]
    report = {
        "command": command,
        "inputs": {
            "quiver": quiver.describe() | {"declared_order": al.declared},
            "beta": list(args.beta),
            "alpha": list(args.alpha) if getattr(args, "alpha", None) is not None else None,
            "sigma": list(args.sigma) if getattr(args, "sigma", None) is not None else None,
            "seed": getattr(args, "seed", None),
            "primes": list(args.primes) if getattr(args, "primes", None) else None,
            "trials": getattr(args, "trials", None),
            "budget": getattr(args, "budget", None),
            "s_max": getattr(args, "s_max", None),
            "max_codim": getattr(args, "max_codim", None),
            "deg": getattr(args, "deg", None),
        },
        "conventions": CONVENTIONS,
        "result": result,
        "status": status_name,
    }
    _emit(report, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
