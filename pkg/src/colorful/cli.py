"""Command-line front end: generate, run, verify, reduce, bench."""

from __future__ import annotations

import argparse
import csv
import io as _io
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import __version__
from .errors import ColorfulError, DegenerateInstanceError, InstanceError, PreconditionError, SizeLimitError, StepLimitError
from .io import dumps, fmt, fmt_vector, generate, load_instance, parse_rational, read_json, save_instance, write_json
from .model import CARATHEODORY, NCP, ColorfulChoice, Instance
from .numeric import combination, is_zero, min_norm_point, origin_in_hull, q

log = logging.getLogger("colorful")

ALGORITHMS = (
    "half-linalg", "half-dimreduce", "rebalance", "two-color", "exact-combine", "ncp-local", "ncp-global", "brute",
)
CHOICE_ALGORITHMS = ("half-linalg", "half-dimreduce", "rebalance", "two-color", "exact-combine", "brute")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def execute(instance: Instance, algorithm: str, epsilon: str = "1/2", m: int = 1, max_steps: int = 10 ** 6,
            pivot: str = "first", base: str = "auto") -> dict:
    """Run one algorithm and return an unverified result record."""
    from . import approx, combine, ncp, oracle
    from .approx.two_color import achieved_bound, best_k

    d = instance.dimension
    rec = {"algorithm": algorithm, "iterations": 0}
    if algorithm == "half-linalg":
        ch, bound = approx.half_linalg(instance), _ceil_div(d + 1, 2)
    elif algorithm == "half-dimreduce":
        ch, bound = approx.half_dimreduce(instance), _ceil_div(d, 2) + 1
    elif algorithm == "rebalance":
        params = approx.epsilon_params(d, epsilon)
        stats = {}
        ch, bound = approx.rebalance(instance, params, base=base, stats=stats), params.M[0]
        rec["epsilon"] = fmt(q(epsilon))
        rec["iterations"] = sum(stats["rounds"].values())
    elif algorithm == "two-color":
        k = best_k(d)
        ch, bound = approx.two_color(instance, k), achieved_bound(d, k)
        rec["k"] = k
    elif algorithm == "exact-combine":
        arr = combine.CombineArray()
        ch, bound = combine.find_perfect(instance, arr), 1
        rec["iterations"] = arr.combines
    elif algorithm == "brute":
        ch, bound = oracle.brute_force_choice(instance, m), m
        if ch is None:
            raise PreconditionError("no %d-colorful choice contains the origin" % m)
    elif algorithm == "ncp-local":
        trace = ncp.local_search(instance, max_steps=max_steps, pivot=pivot)
        rec.update(selections=trace.final, cost=trace.final_cost, iterations=len(trace.steps))
        return rec
    elif algorithm == "ncp-global":
        sel, cost = ncp.global_optimum(instance)
        rec.update(selections=sel, cost=cost)
        return rec
    else:
        raise PreconditionError("unknown algorithm %r" % algorithm)
    rec.update(selections=ch.selections, m=ch.m, bound=bound)
    return rec


def _certificate_json(cert) -> dict:
    if cert.inside:
        return {"kind": "inside", "coefficients": [fmt(c) for c in cert.coefficients]}
    return {"kind": "outside", "separator": fmt_vector(cert.separator)}


def build_report(instance: Instance, rec: dict, argv: list, elapsed) -> dict:
    sel = [tuple(r) for r in rec["selections"]]
    pts = instance.points(sel)
    out = {
        "tool": "colorful",
        "version": __version__,
        "command": argv,
        "algorithm": rec["algorithm"],
        "dimension": instance.dimension,
        "selections": [list(r) for r in sel],
        "points": [fmt_vector(p) for p in pts],
    }
    for key in ("epsilon", "k"):
        if key in rec:
            out[key] = rec[key]
    if "m" in rec:
        out["m"] = rec["m"]
        out["bound"] = rec["bound"]
        out["certificate"] = _certificate_json(origin_in_hull(pts))
    else:
        res = min_norm_point(pts)
        out["cost_squared"] = fmt(rec["cost"])
        out["nearest_point"] = fmt_vector(res.point)
        out["weights"] = [fmt(w) for w in res.weights]
    out["iterations"] = rec["iterations"]
    if "assignment" in rec:
        out["assignment"] = list(rec["assignment"])
        out["unsatisfied_weight"] = rec["unsatisfied_weight"]
    out["time_seconds"] = elapsed
    return out


def verify_report(instance: Instance, report: dict) -> list[str]:
    """Re-check a report against the instance using only the JSON content."""
    problems = []
    try:
        sel = [tuple(int(x) for x in r) for r in report["selections"]]
        pts = instance.points(sel)
    except (KeyError, TypeError, ValueError, IndexError):
        return ["selections missing or not in the instance"]
    if [fmt_vector(p) for p in pts] != report.get("points"):
        problems.append("reported points differ from the instance")
    d = instance.dimension
    if "m" in report:
        m = ColorfulChoice(tuple(sel)).m
        if m != report["m"]:
            problems.append("reported m=%s but selections give %d" % (report["m"], m))
        if m > report.get("bound", -1):
            problems.append("m=%d exceeds the bound %s" % (m, report.get("bound")))
        if len(set(sel)) != len(sel):
            problems.append("duplicate selections")
        cert = report.get("certificate", {})
        if cert.get("kind") != "inside":
            problems.append("certificate does not claim the origin is inside")
        else:
            lam = [parse_rational(c) for c in cert["coefficients"]]
            if len(lam) != len(pts) or any(c < 0 for c in lam) or sum(lam) != 1:
                problems.append("coefficients are not convex weights")
            elif not is_zero(combination(lam, pts, d)):
                problems.append("coefficients do not combine to the origin")
    else:
        if sorted(c for c, _ in sel) != sorted(c.id for c in instance.classes):
            problems.append("not a perfect colorful choice")
        lam = [parse_rational(c) for c in report.get("weights", [])]
        x = tuple(parse_rational(c) for c in report.get("nearest_point", []))
        cost = parse_rational(report.get("cost_squared", "-1"))
        if len(lam) != len(pts) or any(c < 0 for c in lam) or sum(lam) != 1:
            problems.append("weights are not convex")
        elif combination(lam, pts, d) != x:
            problems.append("weights do not produce the nearest point")
        elif sum(c * c for c in x) != cost:
            problems.append("cost does not match the nearest point")
        # optimality of x: every point lies on the far side of the hyperplane at x
        elif any(sum(a * b for a, b in zip(x, p)) < cost for p in pts):
            problems.append("nearest point is not optimal")
    return problems


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    inst = generate(args.seed, args.dimension, args.classes, args.points, args.kind, args.radius)
    from .io import instance_to_dict

    _emit(dumps(instance_to_dict(inst)), args.output)
    return EXIT_OK


def cmd_run(args, argv) -> int:
    from .reductions import decode, map_from_dict, unsatisfied_weight

    inst = load_instance(args.instance)
    t0 = time.perf_counter()
    rec = execute(inst, args.algorithm, args.epsilon, args.m, args.max_steps, args.pivot, args.base)
    elapsed = None if args.no_timing else round(time.perf_counter() - t0, 6)
    if args.map:
        rmap = map_from_dict(read_json(args.map), inst)
        x = decode(rmap, rec["selections"])
        rec["assignment"] = x
        rec["unsatisfied_weight"] = unsatisfied_weight(rmap.formula, x)
    report = build_report(inst, rec, argv, elapsed)
    problems = verify_report(inst, report)
    report["verified"] = not problems
    if problems:
        report["problems"] = problems
    _emit(dumps(report), args.output)
    for p in problems:
        print("verification failed: %s" % p, file=sys.stderr)
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    problems = verify_report(inst, read_json(args.report))
    for p in problems:
        print("verification failed: %s" % p, file=sys.stderr)
    if not problems:
        print("ok")
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_reduce(args) -> int:
    from .io import instance_to_dict
    from .reductions import MAX2SAT, SAT3, build_g_ncp, build_l_ncp, map_to_dict, read_wcnf

    kind = MAX2SAT if args.target == "l-ncp" else SAT3
    with open(args.formula, encoding="utf-8") as fh:
        f = read_wcnf(fh, kind)
    rmap = build_l_ncp(f) if args.target == "l-ncp" else build_g_ncp(f)
    _emit(dumps(instance_to_dict(rmap.instance)), args.output)
    if args.map:
        write_json(args.map, map_to_dict(rmap))
    return EXIT_OK


BENCH_FIELDS = ["seed", "d", "algorithm", "m", "bound", "iterations", "time", "status"]


def _bench_row(job) -> dict:
    algorithm, d, seed, classes, points, epsilon, timing = job
    row = {"seed": seed, "d": d, "algorithm": algorithm, "m": "", "bound": "", "iterations": "", "time": "", "status": "ok"}
    kind = NCP if algorithm.startswith("ncp-") else CARATHEODORY
    if classes is None:
        if algorithm == "exact-combine":
            from .combine import required_classes

            classes = required_classes(d)
        else:
            classes = d + 1
    t0 = time.perf_counter()
    try:
        inst = generate(seed, d, classes, points or d + 1, kind)
        rec = execute(inst, algorithm, epsilon)
        report = build_report(inst, rec, [], None)
        problems = verify_report(inst, report)
        row["m"] = rec.get("m", fmt(rec.get("cost", 0)))
        row["bound"] = rec.get("bound", "")
        row["iterations"] = rec["iterations"]
        if problems:
            row["status"] = "fail: " + "; ".join(problems)
    except ColorfulError as exc:
        row["status"] = "error: %s" % exc
    if timing:
        row["time"] = "%.6f" % (time.perf_counter() - t0)
    return row


def bench_jobs(config: dict, timing: bool = True) -> list:
    jobs = []
    for spec in config.get("runs", [config]):
        algos = spec.get("algorithms", [spec.get("algorithm")])
        dims = spec.get("dimensions", [spec.get("dimension")])
        seeds = spec.get("seeds", [1])
        for a, d, s in product(algos, dims, seeds):
            if a not in ALGORITHMS or not isinstance(d, int):
                raise InstanceError("bad bench entry: algorithm %r, dimension %r" % (a, d))
            jobs.append((a, d, s, spec.get("classes"), spec.get("points"), spec.get("epsilon", "1/2"), timing))
    return jobs


def run_bench(config: dict, jobs: int = 1, timing: bool = True) -> str:
    work = bench_jobs(config, timing)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_bench_row, work))
    else:
        rows = [_bench_row(j) for j in work]
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_bench(args) -> int:
    config = read_json(args.config)
    _emit(run_bench(config, args.jobs, not args.no_timing), args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorful", description="Colorful Caratheodory and nearest colorful polytope tools.")
    p.add_argument("--version", action="version", version="colorful " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--dimension", "-d", type=int, required=True)
    g.add_argument("--classes", "-n", type=int, required=True)
    g.add_argument("--points", "-p", type=int, help="points per class (default d+1)")
    g.add_argument("--kind", choices=[CARATHEODORY, NCP], default=CARATHEODORY)
    g.add_argument("--radius", type=int, default=10, help="coordinate scale of the base points")
    g.add_argument("--output", "-o")

    r = sub.add_parser("run", help="run an algorithm and write a verified report")
    r.add_argument("instance")
    r.add_argument("--algorithm", "-a", choices=ALGORITHMS, required=True)
    r.add_argument("--epsilon", default="1/2", help="rational epsilon for rebalance")
    r.add_argument("--m", type=int, default=1, help="multiplicity for brute")
    r.add_argument("--max-steps", type=int, default=10 ** 6)
    r.add_argument("--pivot", choices=["first", "best"], default="first")
    r.add_argument("--base", choices=["auto", "brute", "walk"], default="auto", help="rebalance base-case solver")
    r.add_argument("--map", help="reduction map; adds the decoded assignment to the report")
    r.add_argument("--seed", type=int, help="accepted for symmetry; algorithms are deterministic")
    r.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    r.add_argument("--output", "-o")

    v = sub.add_parser("verify", help="re-verify a report from its JSON")
    v.add_argument("instance")
    v.add_argument("report")

    x = sub.add_parser("reduce", help="build an NCP instance from a WCNF formula")
    x.add_argument("formula")
    x.add_argument("--target", choices=["l-ncp", "g-ncp"], default="l-ncp")
    x.add_argument("--map", help="where to write the reduction map")
    x.add_argument("--output", "-o")

    b = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    b.add_argument("config", help="JSON suite description")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-timing", action="store_true")
    b.add_argument("--output", "-o")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(level=os.environ.get("COLORFUL_LOG", "WARNING").upper(), format="%(levelname)s %(message)s")
    args = make_parser().parse_args(argv)
    if args.command == "generate" and args.points is None:
        args.points = args.dimension + 1
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "run":
            return cmd_run(args, argv)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "reduce":
            return cmd_reduce(args)
        return cmd_bench(args)
    except DegenerateInstanceError as exc:
        print("degenerate instance: %s" % exc, file=sys.stderr)
        return EXIT_DEGENERATE
    except (InstanceError, PreconditionError, SizeLimitError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except StepLimitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except ColorfulError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
