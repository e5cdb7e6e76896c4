"""Benchmark runners: counting throughput and kernel comparison.

`bench` times the full class-size computation on freshly generated random
connected chordal graphs. Timings exclude graph generation. With
impl="both" every instance is timed once per kernel implementation, which
is the supported way to compare the compiled extension against the
pure-Python fallback.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from . import kernels
from .count import MemoStore, mec_size
from .errors import InfeasibleParameterError
from .generate import random_uccg
from .rng import derive_seed


def _time_count(g, impl_name):
    prev = kernels.active
    try:
        if impl_name is not None:
            kernels.use(impl_name)
        memo = MemoStore()
        t0 = time.perf_counter()
        size = mec_size(g, memo)
        dt = time.perf_counter() - t0
    finally:
        kernels.active = prev
    return dt, size, memo.stats()


def bench(p_list, r_list, trials, seed, impl="auto", threads=1, collect_stats=False):
    """Mean counting seconds per (p, r[, impl]) cell.

    Returns (header, rows). With impl="both" an `impl` column is added
    and each generated instance is counted under both kernels.
    """
    if trials < 1:
        raise InfeasibleParameterError("trials must be >= 1")
    if impl == "both":
        impls = ["python", "cython"]
        if "cython" not in kernels.available():
            raise InfeasibleParameterError(
                "compiled kernels unavailable; build the extension or use --impl auto"
            )
    elif impl == "auto":
        impls = [None]
    else:
        impls = [kernels.get(impl).IMPLEMENTATION]
    if impls != [None]:
        # kernel selection is process-global, so explicit-impl runs stay serial
        threads = 1

    cells = [(p, r) for p in p_list for r in r_list]

    def run_cell(cell):
        p, r = cell
        graphs = [
            random_uccg(p, r, derive_seed(seed, i * 7919 + p * 131 + int(r * 1000)))
            for i in range(trials)
        ]
        out = []
        for name in impls:
            total = 0.0
            stats = None
            for g in graphs:
                dt, _, stats = _time_count(g, name)
                total += dt
            label = name or kernels.active.IMPLEMENTATION
            out.append((p, r, label, total / trials, stats))
        return out

    results = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(run_cell, cells):
                results.extend(chunk)
    else:
        for cell in cells:
            results.extend(run_cell(cell))

    if impl == "both":
        header = ["p", "r", "impl", "mean_seconds"]
        rows = [(p, r, label, mean) for p, r, label, mean, _ in results]
    else:
        header = ["p", "r", "mean_seconds"]
        rows = [(p, r, mean) for p, r, _, mean, _ in results]
    if collect_stats:
        return header, rows, [res[4] for res in results]
    return header, rows
