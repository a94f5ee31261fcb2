"""Command line front end: solve, check-class, gen, fuzz, bench.

Exit codes: 0 success, 1 fuzz mismatch or internal invariant failure,
2 input outside the graph class, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from multiprocessing import Pool
from pathlib import Path

from .dimacs import DimacsError, emit_dimacs, parse_dimacs
from .errors import ClassViolation, ContextViolation, GenerationFailed
from .generator import FAMILIES, GenSpec, generate, grown_class_graph, random_class_graph
from .graph import members
from .oracle import oracle_mwis, verify_cover
from .recognition import check_class

EXIT_OK, EXIT_FAIL, EXIT_CLASS, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_dimacs(text)
    except DimacsError as exc:
        raise InputError(f"{path}: {exc}") from None


def _witness_json(w):
    return {"kind": w.kind, "vertices": [v + 1 for v in w.vertices]}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_solve(args) -> int:
    from .solver import solve

    g = _read_graph(args.instance)
    if args.check_class:
        w = check_class(g)
        if w is not None:
            print(_dump({"status": "class-violation", "check": "recognizer", "witness": _witness_json(w)}))
            return EXIT_CLASS
    try:
        res = solve(g, record_leaves=not args.no_leaves)
    except ClassViolation as exc:
        print(_dump({"status": "class-violation", "check": exc.check, "witness": _witness_json(exc.witness)}))
        return EXIT_CLASS
    except ContextViolation as exc:
        print(_dump({"status": "internal-error", "check": exc.check, "detail": exc.detail}))
        return EXIT_FAIL
    out = {
        "status": "ok",
        "weight": res.weight,
        "solution": [v + 1 for v in members(res.solution)],
        "leaves_count": len(res.leaves) if res.leaves_complete else None,
        "metrics": {"subproblems": res.stats.subproblems, "max_depth": res.stats.max_depth},
    }
    if args.trace:
        out["branches"] = dict(sorted(res.stats.branches.items()))
    print(_dump(out))
    return EXIT_OK


def cmd_check_class(args) -> int:
    g = _read_graph(args.instance)
    w = check_class(g)
    print(_dump({"in_class": w is None, "witness": None if w is None else _witness_json(w)}))
    return EXIT_OK if w is None else EXIT_CLASS


def _weight_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("weights must look like LO:HI") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError("need 0 <= LO <= HI")
    return lo, hi


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None


def cmd_gen(args) -> int:
    params = GenSpec(args.family, args.n, args.density, args.weights, args.seed, args.sizes)
    try:
        gen = generate(params)
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    verdict = "in class" if gen.in_class else f"not in class ({gen.witness.kind} {[v + 1 for v in gen.witness.vertices]})"
    text = emit_dimacs(gen.graph, comment=f"{args.family} n={gen.graph.n} seed={args.seed}: {verdict}")
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def fuzz_instance(seed: int, index: int, max_n: int, family: str):
    rng = random.Random(f"{seed}:{index}")
    n = rng.randint(1, max_n)
    if family == "mixed":
        family = rng.choice(("random-triangle-free", "grown"))
    if family == "grown":
        g = grown_class_graph(rng, n, rng.uniform(0.2, 0.6))
        return g.with_weights([rng.randint(0, 100) for _ in range(n)])
    return random_class_graph(rng, n, rng.uniform(0.05, 0.4))


def fuzz_one(job):
    from .solver import solve

    seed, index, max_n, family, cover = job
    g = fuzz_instance(seed, index, max_n, family)
    try:
        res = solve(g, record_leaves=cover)
    except (ClassViolation, ContextViolation) as exc:
        return index, f"{type(exc).__name__}: {exc}", emit_dimacs(g), {}
    expected, _ = oracle_mwis(g)
    problem = None
    if res.weight != expected:
        problem = f"weight {res.weight} != oracle {expected}"
    elif cover:
        if not res.leaves_complete:
            problem = "leaf family truncated"
        else:
            ce = verify_cover(g, res.leaves)
            if ce is not None:
                problem = f"cover check failed ({ce.reason}) at {[v + 1 for v in members(ce.vertices)]}"
    return index, problem, emit_dimacs(g) if problem else None, dict(res.stats.branches)


def cmd_fuzz(args) -> int:
    jobs = [(args.seed, i, args.max_n, args.family, args.cover) for i in range(args.count)]
    if args.workers > 1:
        with Pool(args.workers) as pool:
            results = list(pool.imap(fuzz_one, jobs, chunksize=32))
    else:
        results = [fuzz_one(j) for j in jobs]
    failures = [(i, p, text) for i, p, text, _ in results if p]
    branches: dict[str, int] = {}
    for *_, b in results:
        for k, v in b.items():
            branches[k] = branches.get(k, 0) + v
    dump_dir = Path(args.dump_dir)
    for i, problem, text in failures[:20]:
        dump_dir.mkdir(parents=True, exist_ok=True)
        (dump_dir / f"fuzz_{args.seed}_{i}.dimacs").write_text(f"c {problem}\n" + text)
    summary = {
        "count": args.count,
        "seed": args.seed,
        "max_n": args.max_n,
        "family": args.family,
        "cover": args.cover,
        "failures": len(failures),
        "first_failures": [{"index": i, "problem": p} for i, p, _ in failures[:5]],
        "branches": dict(sorted(branches.items())),
    }
    print(_dump(summary))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_bench(args) -> int:
    from .report import bench_blowups, format_table, write_report

    rows = bench_blowups(args.sizes)
    print(format_table(rows))
    if args.out_dir:
        csv_path, png_path = write_report(rows, args.out_dir)
        print(f"wrote {csv_path} and {png_path}")
    return EXIT_OK if all(r.weight == r.expected and r.oracle in (None, r.weight) for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="s124mwis", description="Exact MWIS for (S124, triangle)-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance and print JSON")
    s.add_argument("instance", help="DIMACS file, or - for stdin")
    s.add_argument("--check-class", action="store_true", help="run the full recognizer first")
    s.add_argument("--no-leaves", action="store_true", help="skip recording the leaf family")
    s.add_argument("--trace", action="store_true", help="include per-case branch counts")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check-class", help="look for a triangle or induced S124")
    c.add_argument("instance")
    c.set_defaults(func=cmd_check_class)

    gn = sub.add_parser("gen", help="generate an instance")
    gn.add_argument("--family", choices=FAMILIES, default="random-triangle-free")
    gn.add_argument("--n", type=int, default=12)
    gn.add_argument("--density", type=float, default=None, help="edge probability (default: 1.5/n capped at 0.3; 0.4 for grown)")
    gn.add_argument("--weights", type=_weight_range, default=(1, 1), metavar="LO:HI")
    gn.add_argument("--seed", type=int, default=0)
    gn.add_argument("--sizes", type=_sizes, default=None, help="class sizes for c5-blowup, e.g. 2,1,1,1,1")
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    f = sub.add_parser("fuzz", help="differential test against the brute-force oracle")
    f.add_argument("--count", type=int, default=1000)
    f.add_argument("--max-n", type=int, default=16)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--family", choices=("random-triangle-free", "grown", "mixed"), default="random-triangle-free")
    f.add_argument("--cover", action="store_true", help="also check the leaf family covers every maximal independent set")
    f.add_argument("--workers", type=int, default=1)
    f.add_argument("--dump-dir", default="fuzz-failures")
    f.set_defaults(func=cmd_fuzz)

    b = sub.add_parser("bench", help="5-cycle blow-up scaling run")
    b.add_argument("--sizes", type=_sizes, default=(20, 40, 60, 80, 100))
    b.add_argument("--out-dir", default=None, help="write bench_blowups.csv and bench_blowups.png here")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
