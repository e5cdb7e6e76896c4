"""Cross-validation of the clique-tree machinery against brute force.

Backs the `verify` CLI subcommand: runs the small-instance corpus through
both the production counting/sampling/intervention paths and the
enumeration oracle, and reports one pass/fail line per property. Any
divergence is a bug somewhere, by construction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import kernels
from ._kernels_py import bit_indices as _bits
from .clique_tree import build_clique_tree, compute_emission_sets, root_tree, rooted_orient
from .count import MemoStore, component_size, mec_size
from .generate import random_uccg
from .graph import MixedGraph, bfs_levels, is_chordal, is_connected, v_structures
from .intervention import expected_resolved_exact
from .oracle import brute_expected_resolved, brute_size, brute_size_with_prior, enumerate_mec
from .prior import size_with_prior
from .rng import derive_seed
from .sample import sample_many


def connected_chordal_graphs(n):
    """Every connected chordal undirected graph on vertices v1..vn."""
    names = [f"v{i + 1}" for i in range(n)]
    pairs = list(combinations(range(n), 2))
    for pick in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (pick >> i) & 1]
        g = MixedGraph(names, undirected_edges=[(names[a], names[b]) for a, b in edges])
        if is_connected(g) and is_chordal(g):
            yield g


def small_corpus(max_exhaustive=4, random_count=30, seed=20240901):
    """Mixed bag of small graphs: exhaustive tiny ones plus random UCCGs."""
    graphs = []
    for n in range(1, max_exhaustive + 1):
        graphs.extend(connected_chordal_graphs(n))
    for i in range(random_count):
        p = 5 + (i % 3)
        r = 0.35 + 0.1 * (i % 5)
        graphs.append(random_uccg(p, r, derive_seed(seed, i)))
    return graphs


def _check_counting(graphs):
    for g in graphs:
        if mec_size(g) != brute_size(g):
            return False, f"count mismatch on {sorted(g.undirected_edges)}"
    return True, f"{len(graphs)} graphs"


def _check_per_root_partition(graphs):
    from .count import _Engine

    for g in graphs:
        if g.n < 2:
            continue
        mec = enumerate_mec(g)
        eng = _Engine(g, MemoStore())
        full = g._full_mask()
        by_root = {}
        for d in mec.members:
            sources = [v for v in d.vertices if not d.parents(v)]
            if len(sources) != 1:
                return False, f"non-unique source in a member of {sorted(g.undirected_edges)}"
            by_root[sources[0]] = by_root.get(sources[0], 0) + 1
        for v in g.vertices:
            if eng.rooted_size(full, g.index_of(v)) != by_root.get(v, 0):
                return False, f"rooted count mismatch at {v} on {sorted(g.undirected_edges)}"
    return True, f"{len(graphs)} graphs"


def _check_rooted_orientation(graphs):
    for g in graphs:
        if g.n < 2:
            continue
        mec = enumerate_mec(g)
        for r in g.vertices:
            rooted = [
                d for d in mec.members if not d.parents(r)
            ]
            common = set.intersection(*(set(d.directed_edges) for d in rooted))
            got = rooted_orient(g, r)
            if set(got.directed_edges) != common:
                return False, f"orientation mismatch at root {r}"
    return True, "rooted orientations equal the intersections of rooted members"


def _check_structural(graphs):
    for g in graphs:
        if g.n < 2:
            continue
        tree = build_clique_tree(g)
        for r in g.vertices:
            t = compute_emission_sets(root_tree(tree, r))
            oriented = rooted_orient(g, r)
            owner = {}
            for k, res in t.res.items():
                for v in res:
                    owner[v] = k
            for u, v in oriented.directed_edges:
                if u != r and u not in t.sep[owner[v]]:
                    return False, "directed edge tail outside the head's separator"
                if u in owner and v in t.sep[owner[u]]:
                    return False, "head appears in the tail's separator"
                if set(oriented.parents(v)) != set(t.em[owner[v]]):
                    return False, "parents differ from the emission set"
            levels = bfs_levels(g, r)
            level_of = {v: i for i, lv in enumerate(levels) for v in lv}
            for u, v in g.undirected_edges:
                if level_of[u] != level_of[v]:
                    lo, hi = (u, v) if level_of[u] < level_of[v] else (v, u)
                    if (lo, hi) not in oriented.directed_edges:
                        return False, "cross-level edge not directed away from the root"
    return True, "separator/emission/level checks hold on every rooted tree"


def _check_priors(graphs):
    for g in graphs:
        edges = sorted(g.undirected_edges)
        if not edges:
            continue
        total = mec_size(g)
        for u, v in edges:
            a = size_with_prior(g, [(u, v)])
            b = size_with_prior(g, [(v, u)])
            if a + b != total:
                return False, f"complementarity fails on edge {u},{v}"
            if a != brute_size_with_prior(g, [(u, v)]):
                return False, f"prior count mismatch on {u}->{v}"
    return True, "single-edge prior counts match enumeration"


def _check_intervention(graphs):
    for g in graphs:
        if g.n < 2:
            continue
        for t in list(g.vertices)[:2]:
            exact = expected_resolved_exact(g, [t])
            brute = brute_expected_resolved(g, [t])
            if exact != brute:
                return False, f"expected resolved mismatch at target {t}"
    return True, "hypothesis decomposition equals the direct class average"


def _check_sampling(graphs, n=600, seed=7):
    for gi, g in enumerate(graphs):
        if not (2 <= mec_size(g) <= 30):
            continue
        members = {d.directed_edges for d in enumerate_mec(g).members}
        for i, d in enumerate(sample_many(g, n, derive_seed(seed, gi))):
            if d.directed_edges not in members:
                return False, f"sample {i} is not a class member"
    return True, "all samples are class members"


def run_verification(quick=False):
    """Run every cross-check; returns a list of (name, passed, detail)."""
    graphs = small_corpus(
        max_exhaustive=4 if quick else 5,
        random_count=10 if quick else 30,
    )
    checks = [
        ("counting equals enumeration", _check_counting),
        ("per-root counts partition the class", _check_per_root_partition),
        ("rooted orientations match rooted members", _check_rooted_orientation),
        ("clique-tree structural invariants", _check_structural),
        ("prior counting equals filtered enumeration", _check_priors),
        ("intervention expectation equals class average", _check_intervention),
        ("samples are class members", _check_sampling),
    ]
    results = []
    for name, fn in checks:
        try:
            ok, detail = fn(graphs)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
