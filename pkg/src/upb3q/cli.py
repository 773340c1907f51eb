"""Command line front end.

Subcommands:
    verify  run the claim registry, print one line per claim, optional JSON
    orbit   sample the triple-y orbit and emit the diagnostic CSV
    bloch   emit the per-qubit Bloch vectors of the aligned ket families

verify exits 0 only when no executed claim fails.  File outputs are
byte-identical across runs with the same arguments.
"""

from __future__ import annotations

import argparse
import sys

from .claims import (
    RunConfig,
    emit_bloch_csv,
    emit_orbit_csv,
    exit_code,
    run_claims,
    write_reports_json,
)


def _fmt(value):
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        return format(value, ".6g")
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def _cmd_verify(args):
    cfg = RunConfig(
        equality_tol=args.tolerance_equality,
        psd_tol=args.tolerance_psd,
        sign_tol=args.tolerance_sign,
        flow_tol=args.tolerance_flow,
        orbit_samples=args.orbit_samples,
        filter=args.filter,
        json_path=args.json,
    )
    reports = run_claims(cfg)
    for r in reports:
        print(f"[{r.status.upper():4s}] {r.claim_id}: measured={_fmt(r.measured)} "
              f"expected={_fmt(r.expected)} tol={r.tolerance:g}")
    n_pass = sum(1 for r in reports if r.status == "pass")
    n_fail = sum(1 for r in reports if r.status == "fail")
    n_skip = sum(1 for r in reports if r.status == "skip")
    print(f"{n_pass} passed, {n_fail} failed, {n_skip} skipped (of {len(reports)})")
    if cfg.json_path:
        try:
            with open(cfg.json_path, "w", encoding="utf-8") as fobj:
                write_reports_json(reports, fobj)
        except OSError as exc:
            print(f"error: cannot write {cfg.json_path}: {exc}", file=sys.stderr)
            return 1
    return exit_code(reports)


def _cmd_orbit(args):
    cfg = RunConfig(orbit_samples=args.samples, csv_path=args.csv)
    try:
        emit_orbit_csv(cfg)
    except OSError as exc:
        print(f"error: cannot write {args.csv}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_bloch(args):
    cfg = RunConfig(csv_path=args.csv)
    try:
        emit_bloch_csv(cfg)
    except OSError as exc:
        print(f"error: cannot write {args.csv}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="upb3q",
        description="verify the 3-qubit bound entangled construction and its dynamics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run all claims and report pass/fail")
    v.add_argument("--filter", default=None, metavar="PATTERN",
                   help="glob on claim ids; non-matching claims are skipped")
    v.add_argument("--json", default=None, metavar="PATH",
                   help="also write the full report list as JSON")
    v.add_argument("--orbit-samples", type=int, default=64, metavar="N",
                   help="orbit grid size used by orbit claims (default 64)")
    v.add_argument("--tolerance-equality", type=float, default=1e-12, metavar="TOL")
    v.add_argument("--tolerance-psd", type=float, default=1e-10, metavar="TOL")
    v.add_argument("--tolerance-sign", type=float, default=1e-8, metavar="TOL")
    v.add_argument("--tolerance-flow", type=float, default=1e-10, metavar="TOL")
    v.set_defaults(func=_cmd_verify)

    o = sub.add_parser("orbit", help="sample the PPT-preserving orbit as CSV")
    o.add_argument("--samples", type=int, default=64, metavar="N",
                   help="grid points over one period (default 64)")
    o.add_argument("--csv", default="-", metavar="PATH",
                   help="output path, or - for stdout (default)")
    o.set_defaults(func=_cmd_orbit)

    b = sub.add_parser("bloch", help="emit ket-family Bloch vectors as CSV")
    b.add_argument("--csv", default="-", metavar="PATH",
                   help="output path, or - for stdout (default)")
    b.set_defaults(func=_cmd_bloch)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
