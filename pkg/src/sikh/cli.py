"""Command-line interface: ``sikh compute``, ``sikh euler`` and ``sikh verify``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .coeff import get_ring, parse_lambda
from .diagram import load
from .errors import DiagramError, InvariantError
from .homology import euler_characteristic, sikh

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_CHECK = 0, 1, 2, 3

GRADINGS = {
    "full": ("h", "g", "qt", "q"),
    "hgqt": ("h", "g", "qt"),
    "hg": ("h", "g"),
    "g": ("g",),
}

VERIFY_NAMES = ("dsquare", "commute", "cases", "affine", "rmoves", "specialize", "detect", "classical")


def _fmt_g(g) -> str:
    return "(" + ",".join(str(x) for x in g) + ")"


def _fmt_key(names, key) -> List[str]:
    out = []
    for name, x in zip(names, key):
        if name == "g":
            out.append(_fmt_g(x))
        elif x is None:
            out.append("-")
        else:
            out.append(str(x))
    return out


def _table(header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [header] + rows]
    return "\n".join(lines)


def _jobs(value: Optional[int]) -> int:
    return value if value else (os.cpu_count() or 1)


def cmd_compute(args) -> int:
    ring = get_ring(args.ring)
    lam = parse_lambda(args.lam, ring)
    d = load(args.file)
    H = sikh(d, lam, ring, jobs=_jobs(args.jobs))
    names = GRADINGS[args.grading]
    if args.format == "json":
        out = H.to_dict()
        out["lambda"] = ring.format(lam)
        out["punctures"] = d.punctures
        out["crossings"] = d.k
        if args.grading != "full":
            out["ranks"] = [dict(zip(names + ("rank",), list(k) + [v])) for k, v in H.ranks(names).items()]
            out["ranks"] = [{k: (list(v) if k == "g" else v) for k, v in row.items()} for row in out["ranks"]]
        print(json.dumps(out, sort_keys=True))
        return EXIT_OK
    print(f"# {args.file}: {d.punctures} punctures, {d.k} crossings")
    print(f"# ring {ring.name}, lambda = {ring.format(lam)}; "
          + ("q is a grading" if H.q_graded else "q is only a filtration (lambda-case entries present)"))
    rows = []
    torsion = H.torsion()
    if names == GRADINGS["full"]:
        for k in sorted(H.groups, key=lambda x: (x.h, x.g, x.qt, -10**9 if x.q is None else x.q)):
            grp = H.groups[k]
            tors = " ".join(f"Z/{t}" for t in torsion.get(k, ()))
            rows.append(_fmt_key(names, (k.h, k.g, k.qt, k.q)) + [str(grp.rank), tors or "-"])
        header = list(names) + ["rank", "torsion"]
    else:
        for key, rank in H.ranks(names).items():
            rows.append(_fmt_key(names, key) + [str(rank)])
        header = list(names) + ["rank"]
    if rows:
        print(_table(header, rows))
    print(f"total rank {H.total_rank()}")
    return EXIT_OK


def cmd_euler(args) -> int:
    d = load(args.file)
    names = tuple(args.by.split(","))
    chi = euler_characteristic(d, names)
    if args.format == "json":
        print(json.dumps({"by": list(names), "euler": [dict(zip(names + ("chi",), [list(x) if n == "g" else x
                                                                                     for n, x in zip(names, k)]
                                                                 + [v])) for k, v in chi.items()]},
                         sort_keys=True))
        return EXIT_OK
    print(_table(list(names) + ["chi"], [_fmt_key(names, k) + [str(v)] for k, v in chi.items()]))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import checks

    seed = args.seed
    if os.environ.get("SIKH_SEED"):
        seed = int(os.environ["SIKH_SEED"])
    names = VERIFY_NAMES if args.check == "all" else (args.check,)
    failed = False
    reports = []
    for name in names:
        fn = checks.CHECKS[name]
        kwargs = {}
        if name in ("dsquare", "affine"):
            if args.trials is not None:
                kwargs["trials"] = args.trials
            if seed is not None:
                kwargs["seed"] = seed
        report = fn(**kwargs)
        reports.append(report)
        failed |= not report.ok
        if args.format == "table":
            print(report.summary())
            if args.verbose or name in ("detect", "rmoves") and args.check != "all":
                for line in report.details:
                    print("  " + line)
            elif report.details:
                print("  " + report.details[-1])
            for f in report.failures[:10]:
                print(f"  failure {f.case}: {f.message}")
                if f.counterexample is not None:
                    print("  counterexample: " + json.dumps(f.counterexample, sort_keys=True))
    if args.format == "json":
        print(json.dumps({"ok": not failed, "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    elif len(reports) > 1:
        print(f"{sum(r.ok for r in reports)}/{len(reports)} checks passed")
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sikh", description="Deformed APS homology of links in thickened "
                                                         "punctured disks.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="homology of a diagram file")
    c.add_argument("file")
    c.add_argument("--ring", default="f2", help="f2 (default), z or q")
    c.add_argument("--lambda", dest="lam", default="1", help="deformation parameter in the ring (default 1)")
    c.add_argument("--grading", choices=sorted(GRADINGS), default="full",
                   help="which gradings to keep; the others are summed over")
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("euler", help="graded Euler characteristic of a diagram file")
    e.add_argument("file")
    e.add_argument("--by", default="g", help="comma-separated gradings, from h,g,qt,q,w (default g)")
    e.add_argument("--format", choices=("table", "json"), default="table")
    e.set_defaults(func=cmd_euler)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("check", choices=VERIFY_NAMES + ("all",))
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--seed", type=int, default=None, help="random seed (SIKH_SEED overrides)")
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
