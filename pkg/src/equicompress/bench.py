"""Desk-scale benchmark harness for the compression pipeline.

Runs built-in action families at a range of group orders, recording exact
subroutine invocation counts and wall times per phase, and fits a log-log
growth exponent of wall time against the group order k for each phase.  The
expected asymptotics are linear in k for compression and quadratic for
reconstruction (everything else held fixed), so the fitted exponents are
checked one-sidedly against 1 and 2 plus slack.
"""

from __future__ import annotations

import math
import time

from .compress import compress
from .families import cycle_rotation_action, dihedral_cycle_action, wheel_rotation_action
from .instrumentation import SUBROUTINES, CompressStats, OpCounter, ReconstructStats
from .reconstruct import reconstruct

FAMILIES = {
    "cycle": cycle_rotation_action,
    "dihedral-cycle": dihedral_cycle_action,
    "simplex-rotation": wheel_rotation_action,
}

COMPRESS_EXPONENT_BOUND = 1.0
RECONSTRUCT_EXPONENT_BOUND = 2.0
EXPONENT_SLACK = 0.3

CSV_COLUMNS = (
    ["fixture", "k", "n", "simplices", "f", "h", "workers"]
    + ["compress_seconds", "reconstruct_seconds"]
    + [f"compress_{name}" for name in SUBROUTINES]
    + [f"reconstruct_{name}" for name in SUBROUTINES]
)


def _counted(action, fn):
    """Run fn with fresh counters on the action's group and return counts."""
    counter = OpCounter()
    action.group.op_counts = counter
    action.op_counts = counter
    try:
        out = fn()
    finally:
        action.group.op_counts = None
        action.op_counts = None
    return out, counter.snapshot()


def bench_one(family, order, workers=1, repeats=1):
    """One BenchReport row: run the family member at the given group order."""
    action = FAMILIES[family](order)
    complex_ = action.complex

    best_compress = math.inf
    for _ in range(max(1, repeats)):
        cstats = CompressStats()
        t0 = time.perf_counter()
        (triple, certificate), compress_counts = _counted(
            action, lambda: compress(action, threads=workers, stats=cstats)
        )
        best_compress = min(best_compress, time.perf_counter() - t0)

    best_reconstruct = math.inf
    for _ in range(max(1, repeats)):
        rstats = ReconstructStats()
        t0 = time.perf_counter()
        rc, reconstruct_counts = _counted(
            action, lambda: reconstruct(triple, threads=workers, stats=rstats)
        )
        best_reconstruct = min(best_reconstruct, time.perf_counter() - t0)

    f = max(len(action.orb(sid)) for sid in range(len(complex_)))
    h = max(len(s) for s in triple.stabilizers)
    row = {
        "fixture": f"{family}-{order}",
        "k": action.group.order,
        "n": complex_.dim,
        "simplices": len(complex_),
        "f": f,
        "h": h,
        "workers": workers,
        "compress_seconds": best_compress,
        "reconstruct_seconds": best_reconstruct,
    }
    for name in SUBROUTINES:
        row[f"compress_{name}"] = compress_counts[name]
        row[f"reconstruct_{name}"] = reconstruct_counts[name]
    return row, triple, rc


def run_bench(family, orders, workers=(1,), repeats=1):
    """BenchReport rows for a family over several orders and worker counts."""
    rows = []
    for order in orders:
        for w in workers:
            row, _, _ = bench_one(family, order, workers=w, repeats=repeats)
            rows.append(row)
    return rows


def fit_exponent(ks, times):
    """Least-squares slope of log(time) against log(k)."""
    if len(ks) < 2:
        raise ValueError("need at least two sizes to fit an exponent")
    xs = [math.log(k) for k in ks]
    ys = [math.log(max(t, 1e-9)) for t in times]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    num = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    den = sum((x - mean_x) ** 2 for x in xs)
    return num / den


def growth_exponents(rows):
    """Fitted wall-time exponents per phase from single-worker rows."""
    singles = [r for r in rows if r["workers"] == 1]
    ks = [r["k"] for r in singles]
    return {
        "compress": fit_exponent(ks, [r["compress_seconds"] for r in singles]),
        "reconstruct": fit_exponent(ks, [r["reconstruct_seconds"] for r in singles]),
    }


def rows_to_csv(rows, exponents=None):
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                f"{row[c]:.6f}" if isinstance(row[c], float) else str(row[c])
                for c in CSV_COLUMNS
            )
        )
    if exponents:
        for phase in sorted(exponents):
            lines.append(f"# exponent,{phase},{exponents[phase]:.3f}")
    return "\n".join(lines) + "\n"
