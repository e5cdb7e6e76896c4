"""Brute-force enumeration of equivalence classes on small graphs.

This is the ground truth the clique-tree machinery is validated against.
It deliberately shares nothing with the counting path beyond the basic
graph predicates: members are enumerated by backtracking over the
undirected edges of each chain component, pruning orientations that
create a directed cycle or a v-structure, and taking the cross product
across components. Feasible for a handful of undirected edges only —
never called from production code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kernels
from ._kernels_py import bit_indices as _bits
from .count import validate_essential
from .errors import EnumerationLimitError, MecError
from .graph import MixedGraph, markov_equivalent, meek_close

DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class EnumeratedMEC:
    """Every DAG of a class, plus the essential graph it came from."""

    origin: MixedGraph
    members: tuple[MixedGraph, ...]

    def __len__(self):
        return len(self.members)


def _component_orientations(g, comp_vertices, limit):
    """All acyclic, v-structure-free orientations of one chain component.

    Backtracking over the component's undirected edges; an orientation
    u->v is pruned as soon as it closes a directed path v ~> u or meets a
    second nonadjacent parent at v.
    """
    idx = {v: i for i, v in enumerate(comp_vertices)}
    n = len(comp_vertices)
    adj = [0] * n
    edges = []
    for a, b in sorted(g.undirected_edges):
        if a in idx and b in idx:
            i, j = idx[a], idx[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            edges.append((i, j))
    out = [0] * n
    inn = [0] * n
    results = []

    def has_path(src, dst):
        seen = 1 << src
        frontier = seen
        while frontier:
            if (seen >> dst) & 1:
                return True
            step = 0
            for x in _bits(frontier):
                step |= out[x]
            step &= ~seen
            seen |= step
            frontier = step
        return bool((seen >> dst) & 1)

    def rec(i):
        if i == len(edges):
            results.append(
                [(comp_vertices[a], comp_vertices[b]) for a in range(n) for b in _bits(out[a])]
            )
            if len(results) > limit:
                raise EnumerationLimitError(
                    f"enumeration exceeded the limit of {limit} members"
                )
            return
        a, b = edges[i]
        for u, v in ((a, b), (b, a)):
            collider = False
            for w in _bits(inn[v]):
                if w != u and not (adj[w] >> u) & 1:
                    collider = True
                    break
            if collider or has_path(v, u):
                continue
            out[u] |= 1 << v
            inn[v] |= 1 << u
            rec(i + 1)
            out[u] &= ~(1 << v)
            inn[v] &= ~(1 << u)

    rec(0)
    return results


def enumerate_mec(g_star: MixedGraph, limit: int = DEFAULT_LIMIT) -> EnumeratedMEC:
    """List every DAG in the class of `g_star`.

    Orientations are enumerated per chain component and combined as a
    cross product. Every returned DAG is checked to be Markov equivalent
    to the first member (same skeleton, same v-structures), which guards
    the enumeration itself against drift.
    """
    validate_essential(g_star)
    base_directed = sorted(g_star.directed_edges)
    comp_masks = [
        m
        for m in kernels.active.connected_components(g_star._und, g_star._full_mask())
        if m.bit_count() > 1
    ]
    names = g_star._names
    per_component = []
    total = 1
    for m in comp_masks:
        comp_vertices = [names[i] for i in _bits(m)]
        orientations = _component_orientations(g_star, comp_vertices, limit)
        per_component.append(orientations)
        total *= len(orientations)
        if total > limit:
            raise EnumerationLimitError(
                f"enumeration exceeded the limit of {limit} members"
            )

    members = []
    for combo in product(*per_component):
        directed = list(base_directed)
        for part in combo:
            directed.extend(part)
        members.append(MixedGraph(g_star.vertices, directed_edges=directed))
    if not members:
        raise MecError("enumeration produced no members")  # unreachable
    ref = members[0]
    for d in members[1:]:
        if not markov_equivalent(ref, d):
            raise MecError("enumeration produced non-equivalent members")
    return EnumeratedMEC(origin=g_star, members=tuple(members))


def brute_size(g_star: MixedGraph, limit: int = DEFAULT_LIMIT) -> int:
    return len(enumerate_mec(g_star, limit).members)


def consistent_with(d: MixedGraph, constraints) -> bool:
    """True iff DAG d respects every required (tail, head) orientation."""
    directed = d.directed_edges
    return all((v, u) not in directed for u, v in constraints)


def brute_size_with_prior(g_star: MixedGraph, constraints, limit: int = DEFAULT_LIMIT) -> int:
    """Members consistent with required orientations, by direct filtering."""
    mec = enumerate_mec(g_star, limit)
    return sum(1 for d in mec.members if consistent_with(d, constraints))


def brute_expected_resolved(g_star: MixedGraph, targets, limit: int = DEFAULT_LIMIT) -> Fraction:
    """Average resolved-edge count over all members, directly.

    For each member, the edges incident to the targets are read off the
    member, the closure rules are run, and the number of originally
    undirected edges that end up directed is averaged.
    """
    targets = set(targets)
    for t in targets:
        g_star.index_of(t)
    mec = enumerate_mec(g_star, limit)
    und = g_star.undirected_edges
    incident = [(u, v) for u, v in sorted(und) if u in targets or v in targets]
    total = 0
    for d in mec.members:
        directed = d.directed_edges
        oriented = [(u, v) if (u, v) in directed else (v, u) for u, v in incident]
        closed = meek_close(
            MixedGraph(
                g_star.vertices,
                undirected_edges=[e for e in und if e not in incident],
                directed_edges=sorted(g_star.directed_edges) + oriented,
            )
        )
        closed_dir = closed.directed_edges
        total += sum(1 for u, v in und if (u, v) in closed_dir or (v, u) in closed_dir)
    return Fraction(total, len(mec.members))
