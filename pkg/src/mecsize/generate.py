"""Random generation of connected chordal graphs."""

from __future__ import annotations

from . import kernels
from ._kernels_py import bit_indices as _bits
from .errors import InfeasibleParameterError
from .graph import MixedGraph
from .rng import SplitMix64


def vertex_name(i: int) -> str:
    """Default vertex naming for generated graphs: v1, v2, ..."""
    return f"v{i + 1}"


def random_uccg(p: int, r: float, seed: int) -> MixedGraph:
    """Random undirected connected chordal graph on p vertices.

    The edge count is round(r * p*(p-1)/2). Construction: a random
    recursive spanning tree (connected and trivially chordal), then grow
    by repeatedly drawing a random absent edge and keeping it when the
    graph stays chordal, until the target count is hit. A non-complete
    chordal graph always admits at least one chordal-preserving insertion,
    so the loop terminates. Fully deterministic given (p, r, seed).
    """
    if p < 1:
        raise InfeasibleParameterError("p must be >= 1")
    if not (0 < r <= 1):
        raise InfeasibleParameterError("density r must be in (0, 1]")
    target = round(r * p * (p - 1) / 2)
    if target < p - 1:
        raise InfeasibleParameterError(
            f"edge count {target} cannot connect {p} vertices (need >= {p - 1})"
        )

    rng = SplitMix64(seed)
    nbrs, _ = _grow_chordal(p, target, rng)
    return _to_graph(p, nbrs)


def random_bounded_uccg(p: int, max_degree: int, seed: int, target: int | None = None):
    """Connected chordal graph with all degrees <= max_degree.

    Used by the scaling benchmarks, where the counting complexity bound is
    parameterised by the maximum degree. With `target` unset, edges are
    added until no insertion can respect the degree cap. max_degree == 1
    only admits a single edge (p == 2).
    """
    if max_degree < 1 or (p > 2 and max_degree < 2):
        raise InfeasibleParameterError("max_degree too small to connect the graph")
    rng = SplitMix64(seed)
    nbrs, _ = _grow_chordal(p, target, rng, max_degree=max_degree)
    return _to_graph(p, nbrs)


def random_tree(p: int, seed: int, max_degree: int | None = None) -> MixedGraph:
    """Random recursive tree; each vertex attaches to an earlier vertex."""
    rng = SplitMix64(seed)
    nbrs = _random_spanning_tree(p, rng, max_degree)
    return _to_graph(p, nbrs)


def _random_spanning_tree(p, rng, max_degree=None):
    nbrs = [0] * p
    for i in range(1, p):
        if max_degree is None:
            j = rng.below(i)
        else:
            open_slots = [j for j in range(i) if nbrs[j].bit_count() < max_degree]
            if not open_slots:
                raise InfeasibleParameterError(
                    f"cannot build a {p}-vertex tree with max degree {max_degree}"
                )
            j = rng.choice(open_slots)
        nbrs[i] |= 1 << j
        nbrs[j] |= 1 << i
    return nbrs


def _grow_chordal(p, target, rng, max_degree=None):
    """Spanning tree plus chordality-preserving random edge insertions."""
    nbrs = _random_spanning_tree(p, rng, max_degree)
    n_edges = p - 1
    full = (1 << p) - 1
    mcs_cliques = kernels.active.mcs_cliques

    candidates = [
        (a, b) for a in range(p) for b in range(a + 1, p) if not (nbrs[a] >> b) & 1
    ]
    rejected: list[tuple[int, int]] = []
    while target is None or n_edges < target:
        if not candidates:
            if target is None:
                break
            if not rejected:
                raise InfeasibleParameterError(
                    f"no chordal extension reaches {target} edges"
                )
            # a fresh edge changes what is insertable, so retry the pool
            candidates, rejected = rejected, []
        a, b = candidates.pop(rng.below(len(candidates)))
        if max_degree is not None and (
            nbrs[a].bit_count() >= max_degree or nbrs[b].bit_count() >= max_degree
        ):
            continue
        nbrs[a] |= 1 << b
        nbrs[b] |= 1 << a
        ok, _ = mcs_cliques(nbrs, full)
        if ok:
            n_edges += 1
            if rejected:
                candidates.extend(rejected)
                rejected.clear()
        else:
            nbrs[a] &= ~(1 << b)
            nbrs[b] &= ~(1 << a)
            rejected.append((a, b))
    return nbrs, n_edges


def _to_graph(p, nbrs):
    names = [vertex_name(i) for i in range(p)]
    edges = [
        (names[a], names[b]) for a in range(p) for b in _bits(nbrs[a]) if a < b
    ]
    return MixedGraph(names, undirected_edges=edges)
