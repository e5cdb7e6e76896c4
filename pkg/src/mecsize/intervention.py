"""Expected information gain of interventions on an essential graph.

Intervening on a set of vertices reveals the orientation of every edge
touching them; running the orientation closure on top then resolves
further edges. For a candidate target set, the expected number of
resolved edges over the equivalence class is computed exactly by grouping
members according to their orientation of the intervened edges: each of
the at most 2^(k*maxdeg) configurations is weighted by its consistent
count over the class size, and the closure is run once per configuration
(the resolved count depends on a member only through its intervened
edges). Weights and expectations are carried as exact rationals.

A Monte-Carlo alternative estimates the same quantity from uniform
samples, and `greedy_select` builds a target set of a given budget by
iteratively adding the vertex with the best exact expectation.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .count import MemoStore, mec_size
from .errors import InfeasibleParameterError, UnknownVertexError
from .generate import random_uccg
from .graph import MixedGraph, meek_close
from .prior import size_with_prior
from .rng import SplitMix64, derive_seed
from .sample import sample_many


@dataclass(frozen=True)
class ConfigRecord:
    """One intervened-edge configuration: orientations, weight, resolved count."""

    orientations: tuple[tuple[str, str], ...]
    weight: Fraction
    resolved: int


@dataclass(frozen=True)
class InterventionReport:
    """Evaluation of one target set.

    `expected` is the exact expectation; per-configuration records cover
    only configurations with nonzero weight and their weights sum to 1.
    The Monte-Carlo fields are filled when an estimate was requested.
    """

    targets: tuple[str, ...]
    records: tuple[ConfigRecord, ...]
    expected: Fraction
    mc_estimate: float | None = None
    mc_stderr: float | None = None
    mc_samples: int | None = None


def _incident_undirected(g_star: MixedGraph, targets) -> list[tuple[str, str]]:
    tset = set(targets)
    for t in tset:
        if not g_star.has_vertex(t):
            raise UnknownVertexError(f"unknown vertex {t!r}")
    return [
        (u, v) for u, v in sorted(g_star.undirected_edges) if u in tset or v in tset
    ]


def resolved_count(g_star: MixedGraph, config) -> int:
    """Edges resolved by revealing the orientations in `config`.

    `config` orients exactly the undirected edges of `g_star` incident to
    the intervened vertices. Those orientations are applied, the closure
    rules run, and the result is the number of edges that were undirected
    in `g_star` and are directed afterwards (the intervened edges count).
    """
    config = list(config)
    und = g_star.undirected_edges
    for u, v in config:
        if (u, v) not in und and (v, u) not in und:
            raise InfeasibleParameterError(
                f"configuration orients {u!r} -> {v!r} which is not an undirected edge"
            )
    oriented_pairs = {frozenset(e) for e in config}
    closed = meek_close(
        MixedGraph(
            g_star.vertices,
            undirected_edges=[e for e in sorted(und) if frozenset(e) not in oriented_pairs],
            directed_edges=sorted(g_star.directed_edges) + sorted(config),
        )
    )
    closed_dir = closed.directed_edges
    return sum(1 for u, v in und if (u, v) in closed_dir or (v, u) in closed_dir)


def evaluate_targets(
    g_star: MixedGraph, targets, memo: MemoStore | None = None
) -> InterventionReport:
    """Exact expectation of resolved edges for a target set, with records.

    Enumerates all configurations of the undirected edges incident to the
    targets, weighting each by consistent-count / class-size. Unrealizable
    configurations are pruned before any closure work.
    """
    if memo is None:
        memo = MemoStore()
    incident = _incident_undirected(g_star, targets)
    size = mec_size(g_star, memo)
    records = []
    expected = Fraction(0)
    for choice in product((0, 1), repeat=len(incident)):
        config = tuple(
            (u, v) if bit == 0 else (v, u)
            for (u, v), bit in zip(incident, choice)
        )
        cnt = size_with_prior(g_star, config, memo)
        if cnt == 0:
            continue
        weight = Fraction(cnt, size)
        r = resolved_count(g_star, config)
        records.append(ConfigRecord(orientations=config, weight=weight, resolved=r))
        expected += weight * r
    return InterventionReport(
        targets=tuple(sorted(targets)), records=tuple(records), expected=expected
    )


def expected_resolved_exact(
    g_star: MixedGraph, targets, memo: MemoStore | None = None
) -> Fraction:
    """Exact expected number of edges resolved by intervening on `targets`."""
    return evaluate_targets(g_star, targets, memo).expected


def expected_resolved_mc(
    g_star: MixedGraph,
    targets,
    n: int,
    seed: int,
    memo: MemoStore | None = None,
):
    """Monte-Carlo estimate of the expected resolved count.

    Draws n uniform members, reads each member's orientation of the
    intervened edges and applies the closure once per distinct
    configuration. Returns (mean, standard error); deterministic given
    the seed.
    """
    if n <= 0:
        raise InfeasibleParameterError("empty sample")
    if memo is None:
        memo = MemoStore()
    incident = _incident_undirected(g_star, targets)
    draws = sample_many(g_star, n, seed, memo)
    values = _resolved_per_draw(g_star, incident, draws)
    mean = statistics.fmean(values)
    stderr = statistics.stdev(values) / n**0.5 if n > 1 else 0.0
    return mean, stderr


def _resolved_per_draw(g_star, incident, draws):
    cache: dict[tuple, int] = {}
    values = []
    for d in draws:
        directed = d.directed_edges
        config = tuple((u, v) if (u, v) in directed else (v, u) for u, v in incident)
        r = cache.get(config)
        if r is None:
            r = resolved_count(g_star, config)
            cache[config] = r
        values.append(r)
    return values


def greedy_select(
    g_star: MixedGraph, k: int, memo: MemoStore | None = None
) -> list[str]:
    """Greedy target set of size k maximising the exact expectation.

    Vertices are added one at a time, each time taking the vertex whose
    addition gives the largest expected resolved count; ties break to the
    lowest vertex index. The expectation is monotone in the target set,
    and the greedy set approximates the optimum of the budgeted problem.
    """
    if not 1 <= k <= g_star.n:
        raise InfeasibleParameterError(f"budget {k} outside 1..{g_star.n}")
    if memo is None:
        memo = MemoStore()
    chosen: list[str] = []
    for _ in range(k):
        best_v = None
        best_val = None
        for v in g_star.vertices:
            if v in chosen:
                continue
            val = expected_resolved_exact(g_star, chosen + [v], memo)
            if best_val is None or val > best_val:
                best_v, best_val = v, val
        chosen.append(best_v)
    return chosen


def sde_experiment(
    p: int,
    r: float,
    trials: int,
    target_count: int,
    sample_grid,
    seed: int,
):
    """Spread of the Monte-Carlo error versus sample size.

    Each trial generates a random connected chordal graph, fixes
    `target_count` random intervention targets, computes the exact
    expectation, and estimates it from the first N of a single batch of
    uniform samples for every N in `sample_grid`. Returns a list of
    (N, SDE) rows where SDE is the standard deviation over trials of
    |exact - estimate|. Deterministic given the seed; targets stay fixed
    per graph across sample sizes.
    """
    if trials < 1:
        raise InfeasibleParameterError("trials must be >= 1")
    grid = sorted(set(int(n) for n in sample_grid))
    if not grid or grid[0] < 1:
        raise InfeasibleParameterError("sample grid must hold positive sizes")
    errors = {n: [] for n in grid}
    n_max = grid[-1]
    for t in range(trials):
        g = random_uccg(p, r, derive_seed(seed, 2 * t))
        memo = MemoStore()
        rngseed = derive_seed(seed, 2 * t + 1)
        targets = _pick_targets(g, target_count, rngseed)
        exact = float(expected_resolved_exact(g, targets, memo))
        incident = _incident_undirected(g, targets)
        draws = sample_many(g, n_max, rngseed, memo)
        values = _resolved_per_draw(g, incident, draws)
        for n in grid:
            est = statistics.fmean(values[:n])
            errors[n].append(abs(exact - est))
    rows = []
    for n in grid:
        sde = statistics.stdev(errors[n]) if trials > 1 else 0.0
        rows.append((n, sde))
    return rows


def _pick_targets(g, count, seed):
    if not 1 <= count <= g.n:
        raise InfeasibleParameterError("target_count outside 1..p")
    rng = SplitMix64(seed)
    verts = list(g.vertices)
    picked = []
    for _ in range(count):
        picked.append(verts.pop(rng.below(len(verts))))
    return picked
