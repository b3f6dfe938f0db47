"""Command line front end.

Exit codes: 0 success, 1 a verification or certification reported a
violation, 2 bad usage or invalid parameters, 3 an internal numerical
failure (lost precision, overflow, quadrature breakdown).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import certify, ggc, harness, mlfun, stable, targets
from .streams import stream

FMT = "{:.15g}"


def _emit(args, payload: dict, scalar_key: str | None = None):
    fmt = getattr(args, "format", "plain")
    out = getattr(args, "out", None)
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        if scalar_key is not None and fmt == "plain":
            v = payload[scalar_key]
            text = (FMT.format(v) if isinstance(v, float) else str(v)) + "\n"
        else:
            lines = []
            for k in sorted(payload):
                v = payload[k]
                lines.append(f"{k}\t" + (FMT.format(v) if isinstance(v, float) else str(v)))
            text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_eval(args):
    target = args.target
    if target == "ml":
        if not 0.0 < args.a <= 2.0:
            raise ValueError(f"order must lie in (0, 2], got {args.a}")
        v = mlfun.ml_eval(args.a, args.z) if args.order == 0 else mlfun.ml_deriv(args.a, args.z)
        val = v.real if abs(v.imag) <= 1e-13 * (1.0 + abs(v.real)) else v
    elif target == "f":
        val = mlfun.f_alpha(args.alpha, args.z) if args.order == 0 else mlfun.f_alpha_deriv(args.alpha, args.z)
    elif target == "g":
        val = mlfun.g_alpha(args.alpha, args.z)
    elif target == "h":
        val = mlfun.h_alpha(args.alpha, args.z) if args.order == 0 else mlfun.h_alpha_deriv(args.alpha, args.z)
    elif target == "frakc":
        val = mlfun.frakC(args.c, args.t, args.z)
    elif target == "laplace-x":
        val = ggc.laplace_X(ggc.GgcSpec(args.c, args.t), args.z)
    elif target == "phi":
        val = float(ggc.phi(ggc.GgcSpec(args.c, args.t), args.z))
    elif target == "eta":
        val = float(ggc.eta(ggc.GgcSpec(args.c, args.t), np.array([args.z]))[0])
    elif target == "mellin-x":
        val = ggc.mellin_X(ggc.GgcSpec(args.c, args.t), args.z)
    elif target == "mellin-stable":
        val = stable.mellin_stable(args.alpha, args.z)
    elif target == "mellin-t":
        val = stable.mellin_T(args.alpha, args.z)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(target)
    if isinstance(val, complex):
        payload = {"target": target, "value_re": val.real, "value_im": val.imag}
        _emit(args, payload)
    else:
        _emit(args, {"target": target, "value": float(val)}, scalar_key="value")
    return 0


def _cmd_density(args):
    spec = ggc.GgcSpec(args.c, args.t)
    if args.which == "density":
        val = ggc.density_X(spec, args.x)
    else:
        val = ggc.cdf_X(spec, args.x)
    _emit(args, {"x": args.x, "value": float(val)}, scalar_key="value")
    return 0


def _cmd_sample(args):
    g = stream(args.seed, f"cli:sample:{args.law}")
    if args.law == "stable":
        vals = stable.sample_stable(args.alpha, g, args.n)
    elif args.law == "cauchy-t":
        vals = stable.sample_T(args.alpha, args.t, g, args.n)
    elif args.law == "x":
        vals = ggc.sample_X(ggc.GgcSpec(args.c, args.t), g, args.n)
    elif args.law == "tau1":
        vals = ggc.sample_tau1(args.alpha, g, args.n)
    elif args.law == "r":
        vals = ggc.sample_R(args.alpha, g, args.n)
    else:  # pragma: no cover
        raise ValueError(args.law)
    text = "\n".join(FMT.format(v) for v in vals) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_certify(args):
    if args.target not in targets.REGISTRY:
        raise ValueError(f"unknown certification target {args.target!r}")
    factory, param_names = targets.REGISTRY[args.target]
    params = []
    for p in param_names:
        v = getattr(args, p.replace("-", "_"), None)
        if v is None:
            raise ValueError(f"target {args.target!r} needs --{p}")
        params.append(v)
    fn = factory(*params)
    if args.property == "cm":
        verdict = certify.cm_check(fn)
    elif args.property == "hcm":
        verdict = certify.hcm_check(fn)
    elif args.property == "stieltjes":
        if fn.complex_evaluator is None:
            raise ValueError(f"target {args.target!r} has no complex extension")
        verdict = certify.stieltjes_sign_check(fn.complex_evaluator)
    else:  # pragma: no cover
        raise ValueError(args.property)
    payload = {
        "target": args.target,
        "property": args.property,
        "verdict": verdict.verdict,
        "witness": repr(verdict.witness),
    }
    _emit(args, payload, scalar_key="verdict")
    return 0 if verdict.consistent else 1


def _cmd_verify(args):
    names = list(harness.SUITES) if args.suite == "all" else [args.suite]
    workers = args.workers or int(os.environ.get("ML_STABLE_WORKERS", "1"))
    if args.suite == "all" and workers > 1:
        reports = harness.run_all(n=args.n, seed=args.seed, workers=workers)
    else:
        reports = [harness.run_suite(nm, n=args.n, seed=args.seed) for nm in names]
    ok = all(r.all_passed for r in reports)
    chunks = []
    for r in reports:
        if args.format == "json":
            chunks.append(r.to_json(canonical=args.canonical))
        elif args.format == "csv":
            chunks.append(r.to_csv())
        else:
            lines = [f"suite {r.suite} seed={r.seed} n={r.n}"]
            for c in r.checks:
                lines.append(
                    f"  [{'pass' if c.passed else 'FAIL'}] {c.id}: "
                    f"est={FMT.format(c.estimate)} ref={FMT.format(c.reference)} "
                    f"tol={FMT.format(c.tol)}"
                )
            chunks.append("\n".join(lines))
    text = "\n".join(chunks) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def _cmd_report(args):
    with open(args.path) as fh:
        data = json.load(fh)
    reports = data if isinstance(data, list) else [data]
    total = passed = 0
    for rep in reports:
        for c in rep["checks"]:
            total += 1
            passed += bool(c["pass"])
            if args.failures_only and c["pass"]:
                continue
            sys.stdout.write(
                f"[{'pass' if c['pass'] else 'FAIL'}] {rep['suite']}:{c['id']} "
                f"est={FMT.format(c['estimate'])} ref={FMT.format(c['reference'])}\n"
            )
    sys.stdout.write(f"{passed}/{total} checks passed\n")
    return 0 if passed == total else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mlstable")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        sp.add_argument("--out", default=None)

    pe = sub.add_parser("eval", help="evaluate a special function")
    pe.add_argument("target", choices=(
        "ml", "f", "g", "h", "frakc", "laplace-x", "phi", "eta",
        "mellin-x", "mellin-stable", "mellin-t"))
    pe.add_argument("--a", type=float, default=None)
    pe.add_argument("--alpha", type=float, default=None)
    pe.add_argument("--c", type=float, default=None)
    pe.add_argument("--t", type=float, default=None)
    pe.add_argument("--z", type=float, required=True)
    pe.add_argument("--order", type=int, default=0, choices=(0, 1))
    common(pe)
    pe.set_defaults(fn=_cmd_eval)

    pd = sub.add_parser("density", help="density or distribution function of X")
    pd.add_argument("which", choices=("density", "cdf"))
    pd.add_argument("--c", type=float, required=True)
    pd.add_argument("--t", type=float, required=True)
    pd.add_argument("--x", type=float, required=True)
    common(pd)
    pd.set_defaults(fn=_cmd_density)

    ps = sub.add_parser("sample", help="draw reproducible random variates")
    ps.add_argument("law", choices=("stable", "cauchy-t", "x", "tau1", "r"))
    ps.add_argument("--alpha", type=float, default=None)
    ps.add_argument("--c", type=float, default=None)
    ps.add_argument("--t", type=float, default=None)
    ps.add_argument("--n", type=int, default=10)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--out", default=None)
    ps.set_defaults(fn=_cmd_sample)

    pc = sub.add_parser("certify", help="run a numerical monotonicity certificate")
    pc.add_argument("target", choices=sorted(targets.REGISTRY))
    pc.add_argument("--property", choices=("cm", "hcm", "stieltjes"), required=True)
    pc.add_argument("--alpha", type=float, default=None)
    pc.add_argument("--a", type=float, default=None)
    pc.add_argument("--c", type=float, default=None)
    pc.add_argument("--t", type=float, default=None)
    common(pc)
    pc.set_defaults(fn=_cmd_certify)

    pv = sub.add_parser("verify", help="run Monte Carlo verification suites")
    pv.add_argument("suite", choices=["all"] + sorted(harness.SUITES))
    pv.add_argument("--n", type=int, default=None)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--workers", type=int, default=0)
    pv.add_argument("--canonical", action="store_true",
                    help="zero out runtime so identical runs are byte-identical")
    common(pv)
    pv.set_defaults(fn=_cmd_verify)

    pr = sub.add_parser("report", help="summarize a saved JSON verification report")
    pr.add_argument("path")
    pr.add_argument("--failures-only", action="store_true")
    pr.set_defaults(fn=_cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError, TypeError, AttributeError, FileNotFoundError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (mlfun.PrecisionError, ArithmeticError) as e:
        sys.stderr.write(f"numerical failure: {e}\n")
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
