"""Blow-up scaling benchmark: a table, a CSV file and a log-scale figure."""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .generator import split_blowup_sizes, blowup_alpha, c5_blowup
from .oracle import OracleBudget, oracle_mwis
from .solver import solve


@dataclass
class BenchRow:
    n: int
    sizes: str
    weight: int
    expected: int
    oracle: int | None
    subproblems: int
    max_depth: int
    seconds: float


def bench_blowups(ns=(20, 40, 60), oracle_limit: int = 20) -> list[BenchRow]:
    rows = []
    for n in ns:
        sizes = split_blowup_sizes(n)
        g = c5_blowup(sizes)
        start = time.perf_counter()
        res = solve(g, record_leaves=False)
        elapsed = time.perf_counter() - start
        oracle = oracle_mwis(g, budget=OracleBudget(max_vertices=oracle_limit))[0] if g.n <= oracle_limit else None
        rows.append(
            BenchRow(
                n=g.n,
                sizes="-".join(map(str, sizes)),
                weight=res.weight,
                expected=blowup_alpha(sizes),
                oracle=oracle,
                subproblems=res.stats.subproblems,
                max_depth=res.stats.max_depth,
                seconds=round(elapsed, 4),
            )
        )
    return rows


def format_table(rows: list[BenchRow]) -> str:
    head = f"{'n':>4} {'sizes':>16} {'alpha':>6} {'expected':>8} {'oracle':>6} {'subprobs':>9} {'depth':>5} {'seconds':>8}"
    out = [head, "-" * len(head)]
    for r in rows:
        oracle = "-" if r.oracle is None else str(r.oracle)
        out.append(
            f"{r.n:>4} {r.sizes:>16} {r.weight:>6} {r.expected:>8} {oracle:>6} {r.subproblems:>9} {r.max_depth:>5} {r.seconds:>8.3f}"
        )
    return "\n".join(out)


def write_report(rows: list[BenchRow], out_dir: str | Path) -> tuple[Path, Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "bench_blowups.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(asdict(rows[0]).keys()), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow(asdict(r))

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ns = [r.n for r in rows]
    ax1.plot(ns, [r.subproblems for r in rows], "o-", color="tab:blue")
    ax1.set_yscale("log")
    ax1.set_xlabel("vertices")
    ax1.set_ylabel("subproblems")
    ax1.set_title("Subproblem count")
    ax2.plot(ns, [r.seconds for r in rows], "s-", color="tab:orange")
    ax2.set_yscale("log")
    ax2.set_xlabel("vertices")
    ax2.set_ylabel("seconds")
    ax2.set_title("Wall time")
    for ax in (ax1, ax2):
        ax.grid(True, which="both", alpha=0.3)
    fig.suptitle("5-cycle blow-ups, unit weights")
    fig.tight_layout()
    png_path = out / "bench_blowups.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
