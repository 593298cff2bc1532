"""Command-line front end: one subcommand per engine, JSON or CSV out.

Data goes to the output stream (--out PATH, default stdout) in exactly the
requested format; diagnostics and findings go to stderr.  Exit codes:
0 success, 1 property failure, 2 usage error, 3 numerical non-convergence.
Reports embed the defaults they ran with, so reruns are reproducible.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import bmoa, harness, hardyspace, inequalities, seqspace
from ._version import __version__
from .hardyspace import ConvergenceError, FactorizationSingular


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict) -> None:
    _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_rows(args, header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(str(x) for x in row) + "\n")
    _emit(args, buf.getvalue())


def _load_sequence(args, default_len: int) -> seqspace.XSequence:
    path = getattr(args, "sequence", None)
    if path:
        return seqspace.read_sequence_csv(path)
    return seqspace.classic_sequence(getattr(args, "classic_n", None) or default_len)


def _cmd_xnorm(args) -> int:
    c = seqspace.read_sequence_csv(args.file)
    ratios = seqspace.prefix_ratios(c)
    if args.format == "csv":
        print(f"xnorm {seqspace.xnorm(c)!r} over N={len(c)}", file=sys.stderr)
        _emit_rows(args, ["index", "ratio"], [[i, repr(float(v))] for i, v in enumerate(ratios)])
    else:
        _emit_json(args, {
            "n": len(c),
            "norm": seqspace.xnorm(c),
            "norm_sq": c.xnorm_sq,
            "prefix_ratios": [float(v) for v in ratios],
            "params": {"input": args.file},
        })
    return 0


def _cmd_slowdecay(args) -> int:
    trace = seqspace.slow_decay_sequence(args.r, args.beta, args.n)
    cert = seqspace.verify_margins(trace)
    s = args.s if args.s is not None else args.r + 0.1
    report = seqspace.infinitude_report(trace, s)
    if args.format == "csv":
        labels = trace.choice_labels()
        rows = [[0, repr(float(trace.values[0])), labels[0]]]
        rows += [[i + 1, repr(float(trace.values[i])), labels[i]] for i in range(trace.N)]
        print(f"certificate ok={cert.ok} min_margin={cert.min_margin!r}", file=sys.stderr)
        _emit_rows(args, ["index", "value", "choice"], rows)
    else:
        _emit_json(args, {
            "params": {"r": args.r, "beta": args.beta, "n": args.n, "s": s},
            "certificate": {"ok": cert.ok, "min_margin": cert.min_margin,
                            "argmin_index": cert.argmin_index},
            "infinitude": {
                "power_count": report.power_count,
                "largest_power_index": report.largest_power_index,
                "decades": [{"bound": d.bound, "running_max": d.running_max,
                             "contains_power": d.contains_power} for d in report.decades],
                "increasing_over_power_decades": report.increasing_over_power_decades,
                "strictly_growing": report.strictly_growing,
            },
            "export_norm": seqspace.xnorm(trace.to_xsequence()),
        })
    return 0 if cert.ok else 1


def _cmd_hilbert_norm(args) -> int:
    sizes = [int(x) for x in args.n_list.split(",") if x.strip()]
    if not sizes:
        raise ValueError("--n-list must name at least one truncation size")
    c = _load_sequence(args, 2 * max(sizes) - 1)
    estimates = inequalities.best_constant_scan(c, sizes, method=args.method)
    rows = [[e.N, repr(e.value), repr(e.residual), e.iterations] for e in estimates]
    if args.format == "csv":
        _emit_rows(args, ["N", "norm", "residual", "iterations"], rows)
    else:
        _emit_json(args, {
            "rows": [{"N": e.N, "norm": e.value, "residual": e.residual,
                      "iterations": e.iterations, "converged": e.converged}
                     for e in estimates],
            "params": {"method": args.method, "sequence_len": len(c)},
        })
    return 0 if all(e.converged for e in estimates) else 3


def _cmd_equiv(args) -> int:
    c = _load_sequence(args, 2 * args.n - 1)
    report = inequalities.equivalence_witness(c, args.n, M=args.grid, method=args.method)
    payload = report.to_dict()
    payload["converged"] = report.estimate.converged
    payload["params"] = {"grid": args.grid, "method": args.method,
                         "residual_tol": inequalities.RESIDUAL_TOL}
    if args.format == "csv":
        _emit_rows(args, ["N", "matrix_norm", "hardy_ratio", "gap", "witness_degree"],
                   [[report.N, repr(report.matrix_norm), repr(report.hardy_ratio),
                     repr(report.gap), report.witness.degree]])
    else:
        _emit_json(args, payload)
    return 0 if report.estimate.converged else 3


def _cmd_carleson(args) -> int:
    c = _load_sequence(args, 256)
    report = bmoa.carleson_constant(c, depth=args.depth,
                                    centers_per_length=args.centers,
                                    radial_points=args.radial,
                                    angular_points=args.angular)
    bounded = bmoa.sweep_is_bounded(report)
    if report.finding:
        print(report.finding, file=sys.stderr)
    if args.format == "csv":
        _emit_rows(args, ["length", "center", "box_integral", "ratio"],
                   [[repr(r.arc.length_norm), repr(r.arc.center),
                     repr(r.box_integral), repr(r.ratio)] for r in report.records])
    else:
        payload = report.to_dict()
        payload["bounded"] = bounded
        _emit_json(args, payload)
    return 0 if bounded else 1


def _cmd_kconst(args) -> int:
    scan = bmoa.k_constant(args.rmax, args.samples)
    if args.format == "csv":
        _emit_rows(args, ["value", "limit", "argmax_r"],
                   [[repr(scan.value), repr(scan.limit), repr(scan.argmax_r)]])
    else:
        _emit_json(args, {
            "value": scan.value,
            "limit": scan.limit,
            "argmax_r": scan.argmax_r,
            "params": {"rmax": scan.r_max, "samples_per_interval": scan.samples_per_interval},
        })
    return 0


def _cmd_factorize(args) -> int:
    f = hardyspace.read_polynomial_csv(args.file)
    report = hardyspace.factorization_report(f, M=args.grid)
    if args.out_g:
        hardyspace.write_polynomial_csv(args.out_g, report.g)
    if args.out_h:
        hardyspace.write_polynomial_csv(args.out_h, report.h)
    _emit_json(args, {
        "residual_max": report.residual_max,
        "norm_defect": report.norm_defect,
        "blaschke_degree": report.blaschke_degree,
        "degrees": {"f": f.degree, "g": report.g.degree, "h": report.h.degree},
        "params": {"grid": report.grid_size,
                   "residual_rel_tol": hardyspace.FACTOR_RESIDUAL_REL},
    })
    return 0


def _cmd_hardy_check(args) -> int:
    f = hardyspace.read_polynomial_csv(args.file)
    c = _load_sequence(args, 2 * f.degree + 1)
    total = inequalities.hardy_sum(f, c)
    ratio = inequalities.hardy_ratio(f, c)
    check = inequalities.hardy_degree_bound_check(f, c)
    verdict = "skipped" if check.skipped else ("holds" if check.holds else "violated")
    payload = {
        "hardy_sum": total,
        "hardy_ratio": ratio,
        "degree_bound": {"verdict": verdict, "lhs": check.lhs, "rhs": check.rhs,
                         "slack": check.slack, "reason": check.reason},
        "params": {"degree": f.degree, "tolerance": 1e-8},
    }
    if args.format == "csv":
        _emit_rows(args, ["hardy_sum", "hardy_ratio", "verdict", "lhs", "rhs"],
                   [[repr(total), repr(ratio), verdict, repr(check.lhs), repr(check.rhs)]])
    else:
        _emit_json(args, payload)
    if check.skipped:
        print(f"degree bound skipped: {check.reason}", file=sys.stderr)
        return 3
    return 0 if check.holds else 1


def _cmd_suite(args) -> int:
    config = harness.SuiteConfig(seed=args.seed)
    report = harness.run_suite(config)
    if args.format == "csv":
        _emit_rows(args, ["name", "cases", "failures", "worst_margin"],
                   [[p.name, p.cases, p.failures, repr(p.worst_margin)]
                    for p in report.properties])
    else:
        _emit(args, report.to_json() + "\n")
    return 0 if report.passed else 1


def _add_common(sub, csv_ok=True):
    sub.add_argument("--format", choices=["json", "csv"] if csv_ok else ["json"],
                     default="json")
    sub.add_argument("--out", default=None, help="output path (default standard output)")


def _add_sequence_source(sub):
    grp = sub.add_mutually_exclusive_group()
    grp.add_argument("--sequence", help="sequence CSV (header index,value)")
    grp.add_argument("--classic-n", type=int, default=None,
                     help="use the 1/(k+1) sequence of this length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardyhilbert",
        description="Workbench for weighted coefficient inequalities on the disk",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    p = sub.add_parser("xnorm", help="sequence norm and prefix ratios")
    p.add_argument("file", help="sequence CSV (header index,value)")
    _add_common(p)
    p.set_defaults(func=_cmd_xnorm)

    p = sub.add_parser("slowdecay", help="slow-decay trace, certificate, recurrence report")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float, default=None, help="growth exponent (default r + 0.1)")
    _add_common(p)
    p.set_defaults(func=_cmd_slowdecay)

    p = sub.add_parser("hilbert-norm", help="Hankel norm scan over truncation sizes")
    p.add_argument("--n-list", required=True, help="comma-separated truncation sizes")
    p.add_argument("--method", choices=[inequalities.POWER_ITERATION, inequalities.DENSE_EIGEN],
                   default=inequalities.POWER_ITERATION)
    _add_sequence_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_hilbert_norm)

    p = sub.add_parser("equiv", help="extremal witness closing the two best constants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--method", choices=[inequalities.POWER_ITERATION, inequalities.DENSE_EIGEN],
                   default=inequalities.POWER_ITERATION)
    _add_sequence_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("carleson", help="dyadic box-integral sweep")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--centers", type=int, default=8)
    p.add_argument("--radial", type=int, default=256)
    p.add_argument("--angular", type=int, default=256)
    _add_sequence_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_carleson)

    p = sub.add_parser("kconst", help="scan the floor-power constant K")
    p.add_argument("--rmax", type=float, required=True)
    p.add_argument("--samples", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=_cmd_kconst)

    p = sub.add_parser("factorize", help="factor f = g*h with |g|=|h|=|f|^(1/2) on the circle")
    p.add_argument("file", help="polynomial CSV (header index,re,im)")
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--out-g", default=None, help="write g as polynomial CSV")
    p.add_argument("--out-h", default=None, help="write h as polynomial CSV")
    _add_common(p, csv_ok=False)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("hardy-check", help="weighted sum, ratio, and degree-bound verdict")
    p.add_argument("file", help="polynomial CSV (header index,re,im)")
    _add_sequence_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_hardy_check)

    p = sub.add_parser("suite", help="run the randomized property suite")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 on --help, 2 on usage errors
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (FactorizationSingular, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
