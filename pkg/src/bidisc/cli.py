"""Command-line front end.

    bidisc verify-all [--json] [--out PATH]
    bidisc classify --alpha RE,IM --beta RE,IM [--resolve] [--format json]
    bidisc sweep --what {ratio,region,question} --n N [--out FILE.csv]
    bidisc norm --c1 RE,IM --c2 RE,IM --p P
    bidisc dual --q Q --y Y
    bidisc search --p P [--eps-max E]

Exit codes: 0 success, 1 verification failure, 2 usage error.
The environment variable HARDY_TOL overrides the default tolerance used
to flag borderline exact classifications.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import certificates as cert
from .dual import h4_dual_norm, hq_dual_norm, question_bound, question_ratio
from .errors import ExactBorderline, NotFound
from .norms import LinearForm, hp_norm
from .schwarz import BORDERLINE_TOL, classify, region_grid, sharpness_search
from .verification import SCHEMA, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

COMMANDS = ("verify-all", "classify", "sweep", "norm", "dual", "search")
_KNOWN_KEYS = {
    "verify-all": {"inject_fault"},
    "classify": {"alpha", "beta", "resolve"},
    "sweep": {"what", "n", "q", "amax"},
    "norm": {"c1", "c2", "p"},
    "dual": {"q", "y"},
    "search": {"p", "eps_max", "n"},
}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output_format: str = "text"
    output_path: str | None = None
    tolerance: float = BORDERLINE_TOL

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        unknown = set(self.parameters) - _KNOWN_KEYS[self.command]
        if unknown:
            raise UsageError(f"unknown parameters for {self.command}: {sorted(unknown)}")
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")


def parse_complex(text: str) -> complex:
    """'re,im' or a bare real number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")


def _default_tolerance() -> float:
    env = os.environ.get("HARDY_TOL")
    if env is None:
        return BORDERLINE_TOL
    try:
        tol = float(env)
    except ValueError:
        raise UsageError(f"HARDY_TOL={env!r} is not a number")
    if not tol > 0:
        raise UsageError("HARDY_TOL must be positive")
    return tol


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bidisc", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-all", help="run every certificate and numeric check")
    v.add_argument("--json", action="store_true", help="emit the JSON report")
    v.add_argument("--out", help="write the report to this file")
    v.add_argument("--inject-fault", choices=["F"], help=argparse.SUPPRESS)

    c = sub.add_parser("classify", help="classify a Wirtinger derivative pair")
    c.add_argument("--alpha", type=parse_complex, required=True)
    c.add_argument("--beta", type=parse_complex, required=True)
    c.add_argument("--resolve", action="store_true", help="decide with the dual norm")
    c.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("sweep", help="write a CSV sweep")
    s.add_argument("--what", choices=["ratio", "region", "question"], required=True)
    s.add_argument("--n", type=int, default=21)
    s.add_argument("--q", default="1,1.25,1.5,1.75,2", help="q values for the question sweep")
    s.add_argument("--amax", type=float, default=0.8, help="grid extent for the region sweep")
    s.add_argument("--out", help="CSV path (stdout if omitted)")

    n = sub.add_parser("norm", help="H^p norm of c1 z1 + c2 z2")
    n.add_argument("--c1", type=parse_complex, required=True)
    n.add_argument("--c2", type=parse_complex, required=True)
    n.add_argument("--p", type=float, required=True)
    n.add_argument("--format", choices=["text", "json"], default="text")

    d = sub.add_parser("dual", help="(H^q)* norm of z1 + y z2")
    d.add_argument("--q", type=float, required=True)
    d.add_argument("--y", type=float, required=True)
    d.add_argument("--format", choices=["text", "json"], default="text")

    e = sub.add_parser("search", help="look for eps with ||-eps z1 + (1-eps^2) z2||_p > 1")
    e.add_argument("--p", type=float, required=True)
    e.add_argument("--eps-max", type=float, default=0.5)
    e.add_argument("--n", type=int, default=500)
    e.add_argument("--format", choices=["text", "json"], default="text")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cmd = args.command
    if cmd == "verify-all":
        params = {"inject_fault": args.inject_fault}
        fmt, out = ("json" if args.json else "text"), args.out
    elif cmd == "classify":
        params = {"alpha": args.alpha, "beta": args.beta, "resolve": args.resolve}
        fmt, out = args.format, None
    elif cmd == "sweep":
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        try:
            qs = tuple(float(q) for q in args.q.split(","))
        except ValueError:
            raise UsageError(f"bad --q list {args.q!r}")
        params = {"what": args.what, "n": args.n, "q": qs, "amax": args.amax}
        fmt, out = "csv", args.out
    elif cmd == "norm":
        params = {"c1": args.c1, "c2": args.c2, "p": args.p}
        fmt, out = args.format, None
    elif cmd == "dual":
        params = {"q": args.q, "y": args.y}
        fmt, out = args.format, None
    else:
        if not 0 < args.eps_max < 1 or args.n < 1:
            raise UsageError("need 0 < --eps-max < 1 and --n >= 1")
        params = {"p": args.p, "eps_max": args.eps_max, "n": args.n}
        fmt, out = args.format, None
    return RunConfig(cmd, params, fmt, out, _default_tolerance())


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def verify_report(inject_fault: str | None = None) -> dict[str, Any]:
    F = None
    if inject_fault == "F":
        F = cert.build_F(cert.F_TOP + Fraction(1, 1000))
    checks = run_all(F)
    return {
        "schema": SCHEMA,
        "passed": all(c.passed for c in checks),
        "checks": [c.to_json() for c in checks],
    }


def cmd_verify_all(cfg: RunConfig) -> int:
    report = verify_report(cfg.parameters.get("inject_fault"))
    if cfg.output_format == "json":
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", cfg.output_path)
    else:
        lines = [f"{'check':<30} {'result':<6} claim"]
        for c in report["checks"]:
            lines.append(f"{c['name']:<30} {'PASS' if c['passed'] else 'FAIL':<6} {c['claim']}")
        n_pass = sum(c["passed"] for c in report["checks"])
        lines.append(f"{n_pass}/{len(report['checks'])} checks passed")
        _emit("\n".join(lines) + "\n", cfg.output_path)
    if not report["passed"]:
        first = next(c for c in report["checks"] if not c["passed"])
        print(f"FAILED: {first['name']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    p = cfg.parameters
    try:
        cl = classify(p["alpha"], p["beta"], resolve_exact=p["resolve"], tolerance=cfg.tolerance)
        borderline = False
    except ExactBorderline as e:
        cl, borderline = e.classification, True
    if cfg.output_format == "json":
        _emit(json.dumps({**cl.to_json(), "borderline": borderline}) + "\n", None)
    else:
        out = [
            f"verdict:            {'BORDERLINE' if borderline else cl.verdict.value}",
            f"necessary margin:   {cl.necessary_margin:+.12g}",
            f"sufficient margin:  {cl.sufficient_margin:+.12g}",
        ]
        if cl.dual_norm is not None:
            out.append(f"(H^1)* norm:        {cl.dual_norm:.12g}")
        _emit("\n".join(out) + "\n", None)
    return EXIT_OK


def sweep_rows(what: str, n: int, qs: Sequence[float] = (1, 1.25, 1.5, 1.75, 2), amax: float = 0.8, tolerance: float = BORDERLINE_TOL):
    """(header, rows) for a CSV sweep."""
    ys = [k / (n - 1) for k in range(n)]
    if what == "ratio":
        header = ["y", "dual_h1", "h4_norm", "ratio"]
        rows = []
        for y in ys:
            d = hq_dual_norm(1.0, y).value
            h = hp_norm(LinearForm.phi_y(y), 4).value
            rows.append([y, d, h, d / h])
        return header, rows
    if what == "region":
        header = ["alpha_abs", "beta_abs", "verdict", "borderline", "necessary_margin", "sufficient_margin", "dual_norm"]
        rows = []
        for pt in region_grid(n, amax, tolerance):
            c = pt.classification
            rows.append([pt.alpha_abs, pt.beta_abs, c.verdict.value, int(pt.borderline), c.necessary_margin, c.sufficient_margin, pt.dual_norm])
        return header, rows
    if what == "question":
        header = ["q", "y", "ratio", "conjectured_bound"]
        rows = []
        for q in qs:
            if not 1 <= q <= 2:
                raise UsageError(f"q={q} outside [1, 2]")
            b = question_bound(q)
            for y in ys:
                rows.append([q, y, question_ratio(q, y), b])
        return header, rows
    raise UsageError(f"unknown sweep {what!r}")


def cmd_sweep(cfg: RunConfig) -> int:
    p = cfg.parameters
    header, rows = sweep_rows(p["what"], p["n"], p["q"], p["amax"], cfg.tolerance)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in r])
    _emit(buf.getvalue(), cfg.output_path)
    return EXIT_OK


def cmd_norm(cfg: RunConfig) -> int:
    p = cfg.parameters
    if p["p"] < 1:
        raise UsageError("--p must be >= 1")
    form = LinearForm(p["c1"], p["c2"])
    if form.is_zero():
        r = {"p": p["p"], "value": 0.0, "method": "closed_form", "error_bound": 0.0}
    else:
        res = hp_norm(form, p["p"])
        r = {"p": res.p, "value": res.value, "method": res.method, "error_bound": res.error_bound}
    if cfg.output_format == "json":
        _emit(json.dumps(r) + "\n", None)
    else:
        _emit(f"||phi||_H^{r['p']:g} = {r['value']:.15g}  ({r['method']}, error <= {r['error_bound']:.2g})\n", None)
    return EXIT_OK


def cmd_dual(cfg: RunConfig) -> int:
    p = cfg.parameters
    q, y = p["q"], p["y"]
    if not 0 <= y <= 1:
        raise UsageError("--y must lie in [0, 1]")
    if q == 4:
        w = h4_dual_norm(y)
    elif 1 <= q <= 2:
        w = hq_dual_norm(q, y)
    else:
        raise UsageError("--q must be 4 or lie in [1, 2]")
    r = {"q": q, "y": y, "value": w.value, "error_bound": w.error_bound, "g": list(w.g_coeffs)}
    if cfg.output_format == "json":
        _emit(json.dumps(r) + "\n", None)
    else:
        _emit(f"||z1 + {y:g} z2||_(H^{q:g})* = {w.value:.15g}  witness g = z1 + {w.g_coeffs[1]:.12g} z2\n", None)
    return EXIT_OK


def cmd_search(cfg: RunConfig) -> int:
    """Exit 0 when a counterexample is found, 1 when none is."""
    p = cfg.parameters
    if p["p"] < 1:
        raise UsageError("--p must be >= 1")
    try:
        eps, norm = sharpness_search(p["p"], p["eps_max"], p["n"])
        r = {"p": p["p"], "found": True, "epsilon": eps, "norm": norm}
    except NotFound:
        r = {"p": p["p"], "found": False, "epsilon": None, "norm": None}
    if cfg.output_format == "json":
        _emit(json.dumps(r) + "\n", None)
    elif r["found"]:
        _emit(f"p={r['p']:g}: eps={eps:.6g} gives ||phi||_H^p = {norm:.12g} > 1 = sup|psi|\n", None)
    else:
        _emit(f"p={r['p']:g}: no eps in (0, {p['eps_max']:g}] gives norm > 1\n", None)
    return EXIT_OK if r["found"] else EXIT_FAIL


_DISPATCH = {
    "verify-all": cmd_verify_all,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "norm": cmd_norm,
    "dual": cmd_dual,
    "search": cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return _DISPATCH[cfg.command](cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"bidisc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"bidisc: I/O error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
