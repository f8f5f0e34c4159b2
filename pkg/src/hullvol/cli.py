"""Command-line front end: ``hullvol compute|search|verify|profile``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import bodies as bd
from .bodyspec import BodySpec, load_body, polygon_document
from .convex import ConvexPolygon, Direction, Line2, format_rational
from .errors import DimensionMismatch, HullvolError, ParseError
from .functionals import c_0, c_1, c_1_triangle, c_tr, profile_tr
from .search import SearchConfig, is_rhombus, minimize_functional, side_deviation
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3

COMPUTE_FUNCTIONALS = ("ctr", "c0", "c1", "chyp", "cylinder")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for parse errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_seed() -> int:
    env = os.environ.get("HULLVOL_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"HULLVOL_SEED must be an integer, got {env!r}") from None


# ---------------------------------------------------------------------------
# reports


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, Direction):
        return {"direction": [_jsonable(x.v.x), _jsonable(x.v.y)], "angle": x.angle()}
    if isinstance(x, Line2):
        return {"point": [_jsonable(c) for c in x.point], "direction": [_jsonable(c) for c in x.direction.v]}
    if isinstance(x, ConvexPolygon):
        return polygon_document(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def config_hash(config: dict) -> str:
    blob = json.dumps(_jsonable(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def make_report(command: list, config: dict, results: dict, started: float, seed: int) -> dict:
    return {
        "command": " ".join(["hullvol"] + command),
        "config_hash": config_hash(config),
        "results": _jsonable(results),
        "wall_time": round(time.perf_counter() - started, 6),
        "seed": seed,
    }


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return f"{float(v):.10g} (exact: {v.numerator}/{v.denominator})"
    return f"{float(v):.10g}"


# ---------------------------------------------------------------------------
# compute


def compute(spec: BodySpec, functional: str, samples=None, tol: float = 1e-9, seed: int = 0) -> dict:
    """Evaluate one functional on a parsed body; returns a results dict."""
    B = spec.body
    notes = list(spec.notes)
    if isinstance(B, ConvexPolygon):
        if functional == "chyp":
            notes.append("chyp on a planar body is the line-reflection constant c1")
            functional = "c1"
        if functional == "ctr":
            r = c_tr(B)
        elif functional == "c0":
            r = c_0(B)
        elif functional == "c1":
            r = c_1(B, tol=tol)
            if len(B) == 3:
                notes.append(f"closed-form triangle value {c_1_triangle(B).value:.12g}")
        else:
            P = bd.Polytope(np.array(B.to_float()))
            cyl = bd.cylinder_check(P, samples=samples, tol=tol, seed=seed)
            return _cylinder_results(cyl, notes)
        maximizer = r.maximizer
        if functional == "c0":
            maximizer = {"vertex_index": r.maximizer, "vertex": list(B[r.maximizer])}
        # generated n-gons are exact only for their rational stand-in
        approx = spec.kind in ("regular_gon", "disk_gon")
        return {
            "functional": functional,
            "value": r.value,
            "exact": r.exact and not approx,
            "exact_value": r.value if r.exact else None,
            "maximizer": maximizer,
            "notes": notes,
        }
    if functional == "c1":
        if B.dim != 2:
            raise DimensionMismatch("c1 is the planar line-reflection constant; use chyp in dimension n >= 3")
    if functional == "ctr":
        r = bd.c_tr_nd(B, samples=samples, tol=tol, seed=seed)
    elif functional == "c0":
        r = bd.c_0_nd(B)
    elif functional in ("chyp", "c1"):
        r = bd.c_hyp_nd(B, samples=samples, seed=seed)
    else:
        return _cylinder_results(bd.cylinder_check(B, samples=samples, tol=tol, seed=seed), notes)
    out = {
        "functional": functional,
        "value": r.value,
        "exact": False,
        "exact_value": None,
        "maximizer": r.direction,
        "samples_used": r.samples_used,
        "refined": r.refined,
        "notes": notes,
    }
    if r.point is not None:
        out["point"] = r.point
    return out


def _cylinder_results(cyl: dict, notes: list) -> dict:
    hi, lo = cyl["max_right"], cyl["min_over_u_of_right"]
    return {
        "functional": "cylinder",
        "value": hi.value,
        "exact": False,
        "exact_value": None,
        "maximizer": hi.direction,
        "min_value": lo.value,
        "min_direction": lo.direction,
        "notes": notes,
    }


def _print_compute(res: dict):
    print(f"{res['functional']} = {_fmt_value(res['value'])}")
    mx = _jsonable(res["maximizer"])
    print(f"maximizer: {json.dumps(mx)}")
    if "min_value" in res:
        print(f"min over u: {float(res['min_value']):.10g}")
    print(f"exact: {str(res['exact']).lower()}")
    for n in res["notes"]:
        print(f"note: {n}")


def cmd_compute(args) -> int:
    if not args.body:
        raise UsageError("compute needs --body FILE")
    spec = load_body(args.body)
    started = time.perf_counter()
    res = compute(spec, args.functional, samples=args.samples, tol=args.tol, seed=args.seed)
    config = {"cmd": "compute", "body": spec.kind, "params": spec.params, "functional": args.functional,
              "samples": args.samples, "tol": args.tol, "seed": args.seed}
    report = make_report(args.argv, config, res, started, args.seed)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        _print_compute(res)
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# search


def cmd_search(args) -> int:
    if args.m is None:
        raise UsageError("search needs --m")
    fn = {"ctr": "tr"}.get(args.functional, args.functional)
    try:
        cfg = SearchConfig(m=args.m, functional=fn, restarts=args.restarts, tol=args.tol, seed=args.seed, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    started = time.perf_counter()
    R = minimize_functional(cfg)
    res = {
        "functional": fn,
        "m": cfg.m,
        "value": R.value,
        "exact_value": R.exact_value,
        "regularity_deviation": R.regularity,
        "best": R.best,
        "per_restart": [{"seed": s, "value": v} for s, v in R.per_restart],
        "notes": R.notes,
    }
    if cfg.m == 4:
        res["rhombus"] = is_rhombus(R.best)
    if cfg.m == 3:
        res["side_deviation"] = side_deviation(R.best)
    report = make_report(args.argv, {"cmd": "search", **cfg.__dict__}, res, started, args.seed)
    if args.out:
        Path(args.out).write_text(json.dumps(polygon_document(R.best), indent=2) + "\n")
    if args.figure:
        from .plotting import polygon_figure

        polygon_figure(R.best, args.figure, title=f"best {fn}, m={cfg.m}: {R.value:.8f}")
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    for n in R.notes:
        print(f"*** {n} ***")
    print(f"best {fn} over {cfg.m}-gons: {R.value:.10g}  ({cfg.restarts} restarts, seed {cfg.seed})")
    if R.exact_value is not None:
        print(f"exact value at snapped vertices: {format_rational(R.exact_value)}")
    if cfg.m >= 4:
        print(f"regularity deviation: {R.regularity:.3e}")
    if "rhombus" in res:
        print(f"rhombus: {str(res['rhombus']).lower()}")
    if "side_deviation" in res:
        print(f"side deviation: {res['side_deviation']:.3e}")
    worst = R.per_restart[-1][1]
    print(f"restart values: best {R.per_restart[0][1]:.10g}, worst {worst:.10g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    started = time.perf_counter()
    results = {}
    failed = 0
    for name in names:
        checks = run_suite(name, seed=args.seed)
        results[name] = [c.__dict__ for c in checks]
        for c in checks:
            failed += not c.passed
            if args.format != "json":
                tag = "PASS" if c.passed else "FAIL"
                print(f"[{tag}] {name}: {c.name}: measured {_fmt_measured(c.measured)}, expected {c.expected}")
    report = make_report(args.argv, {"cmd": "verify", "suite": args.suite, "seed": args.seed}, results, started, args.seed)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"{sum(len(v) for v in results.values()) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def _fmt_measured(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


# ---------------------------------------------------------------------------
# profile


def profile_csv(rows) -> str:
    lines = ["theta,f"] + [f"{t:.15g},{f:.15g}" for t, f in rows]
    return "\n".join(lines) + "\n"


def cmd_profile(args) -> int:
    if not args.body:
        raise UsageError("profile needs --body FILE")
    spec = load_body(args.body)
    if not isinstance(spec.body, ConvexPolygon):
        raise DimensionMismatch("profile needs a planar body")
    started = time.perf_counter()
    m = args.samples or 256
    rows = profile_tr(spec.body, m)
    fmt = args.format or "csv"
    if fmt == "csv":
        text = profile_csv(rows)
    elif fmt == "svg":
        from .plotting import svg_polyline

        text = svg_polyline([r[0] for r in rows], [r[1] for r in rows], title="d(u) w(u-perp)")
    else:
        fs = [r[1] for r in rows]
        res = {"samples": m, "min": min(fs), "max": max(fs), "rows": rows}
        config = {"cmd": "profile", "body": spec.kind, "params": spec.params, "samples": m}
        text = json.dumps(make_report(args.argv, config, res, started, args.seed), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    figure = args.figure
    if figure is None and args.out and fmt == "csv":
        figure = str(Path(args.out).with_suffix(".png"))
    if figure:
        from .plotting import profile_figure

        profile_figure(rows, figure)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--body", metavar="FILE", help="JSON body document")
    common.add_argument("--functional", default="ctr", help="ctr | c0 | c1 | chyp | cylinder (search: ctr/tr | c0 | c1)")
    common.add_argument("--m", type=int, help="vertex count for search")
    common.add_argument("--restarts", type=int, default=10)
    common.add_argument("--seed", type=int, default=None, help="default 0, or $HULLVOL_SEED")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--format", choices=("csv", "svg", "json", "text"), default=None)
    common.add_argument("--figure", metavar="PNG", help="also render a matplotlib figure")
    common.add_argument("--jobs", type=int, default=1)

    p = _Parser(prog="hullvol", description="Hull-volume constants of convex bodies.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("compute", parents=[common], help="evaluate a functional on a body")
    sub.add_parser("search", parents=[common], help="minimise a functional over convex m-gons")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    sub.add_parser("profile", parents=[common], help="tabulate or plot the translate profile of a polygon")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    try:
        if args.seed is None:
            args.seed = default_seed()
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.command == "compute":
            if args.functional not in COMPUTE_FUNCTIONALS:
                raise UsageError(f"--functional must be one of {', '.join(COMPUTE_FUNCTIONALS)}")
            if args.format not in (None, "json", "text"):
                raise UsageError("compute supports --format json or text")
            return cmd_compute(args)
        if args.command == "search":
            if args.format not in (None, "json", "text"):
                raise UsageError("search supports --format json or text")
            return cmd_search(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.format not in (None, "csv", "svg", "json"):
            raise UsageError("profile supports --format csv, svg or json")
        return cmd_profile(args)
    except ParseError as exc:
        print(f"hullvol: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, DimensionMismatch, ValueError) as exc:
        print(f"hullvol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HullvolError as exc:
        print(f"hullvol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
