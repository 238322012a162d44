"""Benchmark harness: counters and runtimes across solvers and graph models.

Writes one raw CSV row per (instance, algorithm) run, a per-point median
summary CSV alongside, and (optionally) log-scale matplotlib figures of
the medians next to the CSVs.  Runs that exceed the timeout are recorded
with a timeout flag and contribute no counter data.
"""

from __future__ import annotations

import csv
import time
from pathlib import Path
from statistics import median
from typing import Optional

from .baselines import solve_dp, solve_dyce, solve_idp
from .dype import solve_dype
from .generators import generate, spec_parse
from .oracle import solve_bruteforce
from .values import SeededRandom

RAW_HEADER = [
    "model", "n", "seed", "alg",
    "subproblems", "subspaces", "elapsed_ms", "value", "timeout",
]
SUMMARY_HEADER = [
    "model", "n", "alg", "runs", "timeouts",
    "median_subproblems", "median_subspaces", "median_elapsed_ms",
]

BENCH_SOLVERS = {
    "dype": solve_dype,
    "dp": solve_dp,
    "idp": solve_idp,
    "dyce": solve_dyce,
    "bruteforce": lambda g, m, deadline=None: solve_bruteforce(g, m),
}


def warm_up(algs) -> None:
    """Run each solver once on a trivial instance so JIT compilation and
    imports never land inside a timed run."""
    g = generate(spec_parse("path", 3, 0))
    m = SeededRandom(0)
    for alg in algs:
        BENCH_SOLVERS[alg](g, m)


def run_bench(
    models: list[str],
    sizes: list[int],
    seeds_per_point: int,
    algs: list[str],
    out_csv,
    timeout: Optional[float] = None,
    base_seed: int = 0,
    plot: bool = True,
) -> dict:
    """Execute the benchmark grid and write CSVs (and figures) by ``out_csv``.

    Returns a small manifest: row count, written paths.
    """
    for alg in algs:
        if alg not in BENCH_SOLVERS:
            raise ValueError(f"unknown algorithm {alg!r}")
    out_csv = Path(out_csv)
    warm_up(algs)
    rows = []
    for model in models:
        for n in sizes:
            for i in range(seeds_per_point):
                seed = base_seed + i
                g = generate(spec_parse(model, n, seed))
                values = SeededRandom(seed)
                for alg in algs:
                    deadline = (
                        time.perf_counter() + timeout if timeout else None
                    )
                    try:
                        r = BENCH_SOLVERS[alg](g, values, deadline=deadline)
                        rows.append([
                            model, n, seed, alg,
                            r.subproblems_stored, r.subspaces_evaluated,
                            f"{r.elapsed * 1000.0:.3f}", repr(r.optimal_value), 0,
                        ])
                    except TimeoutError:
                        rows.append([model, n, seed, alg, "", "", "", "", 1])
    with open(out_csv, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(RAW_HEADER)
        w.writerows(rows)

    summary = _summarize(rows)
    summary_path = out_csv.with_suffix(".summary.csv")
    with open(summary_path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(SUMMARY_HEADER)
        w.writerows(summary)

    figures = []
    if plot:
        figures = _plot_medians(summary, out_csv)
    return {
        "rows": len(rows),
        "raw_csv": str(out_csv),
        "summary_csv": str(summary_path),
        "figures": figures,
    }


def _summarize(rows) -> list[list]:
    cells: dict[tuple, list] = {}
    for model, n, seed, alg, sub, spa, ms, _val, tmo in rows:
        cells.setdefault((model, n, alg), []).append((sub, spa, ms, tmo))
    out = []
    for (model, n, alg), runs in sorted(cells.items()):
        done = [(int(s), int(p), float(ms)) for s, p, ms, t in runs if not t]
        timeouts = len(runs) - len(done)
        if done:
            med_sub = median(s for s, _, _ in done)
            med_spa = median(p for _, p, _ in done)
            med_ms = median(ms for _, _, ms in done)
            out.append([model, n, alg, len(runs), timeouts,
                        med_sub, med_spa, f"{med_ms:.3f}"])
        else:
            out.append([model, n, alg, len(runs), timeouts, "", "", ""])
    return out


def _plot_medians(summary, out_csv: Path) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_model: dict[str, dict[str, list[tuple[int, float, float]]]] = {}
    for model, n, alg, _runs, _tmo, med_sub, med_spa, med_ms in summary:
        if med_sub == "":
            continue
        by_model.setdefault(model, {}).setdefault(alg, []).append(
            (int(n), float(med_sub), float(med_ms))
        )
    written = []
    stem = out_csv.with_suffix("")
    for model, per_alg in by_model.items():
        tag = model.replace(":", "")
        for which, idx, ylabel in (
            ("memory", 1, "median subproblems stored"),
            ("time", 2, "median elapsed (ms)"),
        ):
            fig, ax = plt.subplots(figsize=(6, 4))
            for alg, pts in sorted(per_alg.items()):
                pts = sorted(pts)
                ax.plot(
                    [p[0] for p in pts],
                    [max(p[idx], 1e-3) for p in pts],
                    marker="o",
                    label=alg,
                )
            ax.set_yscale("log")
            ax.set_xlabel("agents")
            ax.set_ylabel(ylabel)
            ax.set_title(f"{model}: {which}")
            ax.legend()
            ax.grid(True, which="both", alpha=0.3)
            path = f"{stem}_{tag}_{which}.png"
            fig.tight_layout()
            fig.savefig(path, dpi=120)
            plt.close(fig)
            written.append(path)
    return written
