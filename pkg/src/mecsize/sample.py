"""Exact uniform sampling of DAGs from a Markov equivalence class.

A member is drawn component by component: within each pending undirected
component, a root vertex is selected with probability proportional to the
number of members rooted there, the orientation forced by that root is
applied, and the chain components it leaves behind go back on the
worklist. Root selection draws a uniform integer below the exact class
size and walks the cumulative rooted counts — pure integer arithmetic, so
the distribution is exactly uniform, not merely up to float rounding.

All randomness comes from the documented SplitMix64 generator (see
`rng`); identical seeds give identical samples on every platform. Batch
draws derive one sub-stream per sample index, so samples could be drawn
concurrently without changing the output.
"""

from __future__ import annotations

from ._kernels_py import bit_indices as _bits
from .count import MemoStore, _Engine, validate_essential
from .graph import MixedGraph
from .rng import SplitMix64, derive_seed


def _draw(eng: _Engine, g: MixedGraph, comp_masks, rng) -> MixedGraph:
    """One draw; precondition: comp_masks are g's multi-vertex components."""
    n = g.n
    out = list(g._out)
    inn = list(g._in)
    worklist = sorted(comp_masks, key=lambda m: m & -m)
    while worklist:
        comp = worklist.pop(0)
        total = eng.component_size(comp)
        ticket = rng.below(total)
        acc = 0
        root = -1
        for v in _bits(comp):
            acc += eng.rooted_size(comp, v)
            if ticket < acc:
                root = v
                break
        pairs, sub_comps = eng.orient_root(comp, root)
        for u, w in pairs:
            out[u] |= 1 << w
            inn[w] |= 1 << u
        worklist.extend(sub_comps)
        worklist.sort(key=lambda m: m & -m)
    und = [0] * n
    return MixedGraph._from_masks(g._names, g._index, und, out, inn)


def sample_dag(g_star: MixedGraph, seed: int, memo: MemoStore | None = None) -> MixedGraph:
    """Draw one DAG uniformly from the class of `g_star`.

    Over the seed distribution each member appears with probability
    exactly 1/size. A fully directed input is returned as-is.
    """
    comps = [m for m in validate_essential(g_star) if m.bit_count() > 1]
    eng = _Engine(g_star, memo)
    if not comps:
        return g_star
    return _draw(eng, g_star, comps, SplitMix64(seed))


def sample_many(
    g_star: MixedGraph, n: int, seed: int, memo: MemoStore | None = None
) -> list[MixedGraph]:
    """n independent draws, deterministic given seed.

    Sample i uses the sub-stream derive_seed(seed, i). The memo store is
    shared across draws, so component sizes are computed once; later
    draws only pay for orientation.
    """
    if n < 0:
        raise ValueError("sample count must be >= 0")
    comps = [m for m in validate_essential(g_star) if m.bit_count() > 1]
    eng = _Engine(g_star, memo)
    out = []
    for i in range(n):
        if not comps:
            out.append(g_star)
        else:
            out.append(_draw(eng, g_star, comps, SplitMix64(derive_seed(seed, i))))
    return out
