"""Command line batch interface.

Subcommands: build, verify, integrals, s2, decide-ai, dual, tensor,
double, census.  Exit codes: 0 all checks pass, 1 mathematical failure
(report emitted), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .catalog import InvalidPresentation, PresentationError, build_named, catalog_entries
from .companion import decide_ai, eigendecompose_s2, verify_companion
from .constructions import (ConstructionError, companion_double, companion_dual,
                            companion_tensor, drinfeld_double, dual_hopf,
                            tensor_product)
from .hopf import map_order, verify_axioms
from .integrals import (IntegralSpaceError, compute_integrals,
                        radford_bound_check, verify_identities)
from .serialize import (FormatError, algebra_to_json, load_algebra,
                        save_algebra, scalar_to_json)

EXPECTED_NOT_AI = {"A2_C4", "dual(A2_C4)", "A1", "dual(A1)"}


class UsageError(Exception):
    pass


def _emit(report: dict, args, out_is_algebra: bool = False):
    if args.json:
        json.dump(report, sys.stdout, indent=2, default=repr)
        sys.stdout.write("\n")
    else:
        for k, v in report.items():
            if k in ("command", "seed", "elapsed"):
                continue
            print("%s: %s" % (k, v))
    if args.out and not out_is_algebra:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2, default=repr)
            fh.write("\n")


def _report(args, **fields):
    rep = {"command": " ".join(sys.argv[1:]), "seed": args.seed}
    rep.update(fields)
    return rep


def _load(path: str, args):
    try:
        return load_algebra(path, trust=args.trust)
    except OSError as exc:
        raise UsageError(str(exc))


def _save_out(h, args):
    if args.out:
        save_algebra(h, args.out)


def _parse_params(items):
    params = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError("parameter must look like name=value: %r" % item)
        k, v = item.split("=", 1)
        params[k] = int(v) if v.lstrip("-").isdigit() else v
    return params


def _vec_str(h, v):
    return h.label_of_vec(v)


def cmd_build(args):
    try:
        h = build_named(args.name, **_parse_params(args.param))
    except (PresentationError, InvalidPresentation, TypeError) as exc:
        print("build failed: %s" % exc, file=sys.stderr)
        return 1
    _save_out(h, args)
    _emit(_report(args, name=args.name, dim=h.dim, conductor=h.conductor,
                  basis=h.basis_labels), args, out_is_algebra=True)
    return 0


def cmd_verify(args):
    h = _load(args.path, args)
    t0 = time.time()
    axioms = verify_axioms(h)
    checks = {"axioms": axioms.passed}
    ok = axioms.passed
    detail = dict(axioms.failures)
    if ok:
        try:
            data = compute_integrals(h)
            ids = verify_identities(h, data)
            checks.update(ids)
            checks["radford bound"] = radford_bound_check(h, data)
            ok = all(checks.values())
        except IntegralSpaceError as exc:
            checks["integrals"] = False
            detail["integrals"] = str(exc)
            ok = False
    _emit(_report(args, checks=checks, detail=detail,
                  elapsed=time.time() - t0), args)
    return 0 if ok else 1


def cmd_integrals(args):
    h = _load(args.path, args)
    data = compute_integrals(h)
    rep = _report(
        args,
        ell=_vec_str(h, data.ell), r=_vec_str(h, data.r),
        lam=_vec_str(h, data.lam), rho=_vec_str(h, data.rho),
        a=_vec_str(h, data.a), alpha=_vec_str(h, data.alpha),
        alpha_of_a=repr(data.alpha_of_a),
        raw={"ell": [scalar_to_json(c) for c in data.ell],
             "r": [scalar_to_json(c) for c in data.r],
             "lam": [scalar_to_json(c) for c in data.lam],
             "rho": [scalar_to_json(c) for c in data.rho],
             "a": [scalar_to_json(c) for c in data.a],
             "alpha": [scalar_to_json(c) for c in data.alpha],
             "alpha_of_a": scalar_to_json(data.alpha_of_a)})
    _emit(rep, args)
    return 0


def cmd_s2(args):
    h = _load(args.path, args)
    e = eigendecompose_s2(h)
    rep = _report(args, order=e.m, conductor=e.conductor,
                  q=repr(e.q), r=repr(e.r), exponents=e.exponents,
                  multiplicities={i: len(e.spaces[i]) for i in e.exponents})
    _emit(rep, args)
    return 0


def cmd_decide_ai(args):
    h = _load(args.path, args)
    t0 = time.time()
    verdict = decide_ai(h, branch_budget=args.branch_budget)
    rep = _report(args, verdict=verdict.tag, tier=verdict.tier,
                  certificate=verdict.certificate, residual=verdict.residual,
                  elapsed=time.time() - t0)
    if verdict.witness is not None:
        sigma, r_sigma = verdict.witness
        rep["r_sigma"] = repr(r_sigma)
        rep["sigma"] = [[scalar_to_json(c) for c in row] for row in sigma]
        rep["sigma_order"] = map_order(sigma, 4 * h.dim * h.dim)
        ok, detail = verify_companion(h, sigma)
        rep["verify_companion"] = ok
        if not ok:
            rep["verify_companion_detail"] = detail
    _emit(rep, args)
    if verdict.tag == "Inconclusive":
        return 1
    return 0


def cmd_construct(kind, args):
    if kind == "dual":
        h = dual_hopf(_load(args.path, args))
    elif kind == "double":
        h = drinfeld_double(_load(args.path, args))
    else:
        a = _load(args.path, args)
        b = _load(args.other, args)
        h = tensor_product(a, b)
    _save_out(h, args)
    _emit(_report(args, kind=kind, dim=h.dim, conductor=h.conductor,
                  basis=h.basis_labels), args, out_is_algebra=True)
    return 0


def cmd_census(args):
    t0 = time.time()
    entries = [(name, h) for name, h in catalog_entries(args.max_dim)]
    entries += [("dual(%s)" % name, dual_hopf(h)) for name, h in entries]
    entries.sort(key=lambda e: e[0])
    verdicts = {}
    not_ai = set()
    failures = []
    for name, h in entries:
        if args.max_dim is not None and h.dim > args.max_dim:
            continue
        v = decide_ai(h, branch_budget=args.branch_budget)
        verdicts[name] = "%s (tier %s)" % (v.tag, v.tier)
        if v.tag == "NotAI":
            not_ai.add(name)
        elif v.tag != "Witness":
            failures.append("%s: verdict %s" % (name, v.tag))
    unexpected = not_ai - EXPECTED_NOT_AI
    missing = {n for n in EXPECTED_NOT_AI
               if n in verdicts and n not in not_ai}
    for n in sorted(unexpected):
        failures.append("unexpected NotAI: %s" % n)
    for n in sorted(missing):
        failures.append("expected NotAI but got Witness: %s" % n)
    _emit(_report(args, verdicts=verdicts, failures=failures,
                  elapsed=time.time() - t0), args)
    return 1 if failures else 0


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--out", help="output file path")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trust", action="store_true",
                        help="skip axiom re-verification when loading")
    common.add_argument("--branch-budget", type=int, default=10000)

    p = argparse.ArgumentParser(prog="hopfkit", parents=[common])
    sub = p.add_subparsers(dest="cmd")

    b = sub.add_parser("build", parents=[common])
    b.add_argument("name")
    b.add_argument("--param", action="append", help="name=value, repeatable")

    for name in ("verify", "integrals", "s2", "decide-ai", "dual", "double"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("path")
    t = sub.add_parser("tensor", parents=[common])
    t.add_argument("path")
    t.add_argument("other")
    c = sub.add_parser("census", parents=[common])
    c.add_argument("--max-dim", type=int, default=None)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    env_seed = os.environ.get("HOPFKIT_SEED")
    if env_seed is not None:
        args.seed = int(env_seed)
    random.seed(args.seed)
    if args.cmd is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.cmd == "build":
            return cmd_build(args)
        if args.cmd == "verify":
            return cmd_verify(args)
        if args.cmd == "integrals":
            return cmd_integrals(args)
        if args.cmd == "s2":
            return cmd_s2(args)
        if args.cmd == "decide-ai":
            return cmd_decide_ai(args)
        if args.cmd in ("dual", "tensor", "double"):
            return cmd_construct(args.cmd, args)
        if args.cmd == "census":
            return cmd_census(args)
        parser.print_usage(sys.stderr)
        return 2
    except (UsageError, FormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (IntegralSpaceError, ConstructionError) as exc:
        print("failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
