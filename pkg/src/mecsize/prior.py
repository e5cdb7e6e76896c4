"""Counting and sampling restricted by prior edge-orientation knowledge.

Prior knowledge is a set of required orientations for a subset of the
skeleton edges: a constraint u -> v forbids every member containing
v -> u. `HypothesisGraph` stores, per constrained skeleton edge, the set
of allowed directions (unconstrained edges allow both); a DAG is
consistent when each of its directed edges is allowed.

Consistent members are counted with the same rooted clique-tree recursion
as the unrestricted size; the only change is that each batch of forced
orientations is checked against the constraints and the branch returns 0
as soon as a required direction is contradicted. The memo keys then carry
the constraints restricted to each sub-problem (identical subgraphs under
different local constraints have different counts). With no constraints
the machinery reduces exactly to the unrestricted counter and sampler.
"""

from __future__ import annotations

from ._kernels_py import bit_indices as _bits
from .count import BigCount, MemoStore, _Engine, validate_essential
from .errors import MalformedHypothesisError, UnrealizableHypothesisError
from .graph import MixedGraph
from .rng import SplitMix64, derive_seed
from .sample import _draw


class HypothesisGraph:
    """Allowed orientations per skeleton edge of an essential graph.

    Built from required orientations: each (u, v) constraint narrows edge
    {u, v} to the single direction u -> v. Constraining a non-edge, or
    both directions of the same edge, is malformed.
    """

    def __init__(self, g_star: MixedGraph, required=()):
        self.graph = g_star
        cons = {}
        for u, v in required:
            a, b = g_star.index_of(u), g_star.index_of(v)
            if not g_star.adjacent(u, v):
                raise MalformedHypothesisError(
                    f"constraint on non-edge {u!r} -> {v!r}"
                )
            key = (min(a, b), max(a, b))
            prev = cons.get(key)
            if prev is not None and prev != (a, b):
                raise MalformedHypothesisError(
                    f"contradictory constraints on edge {u!r},{v!r}"
                )
            cons[key] = (a, b)
        self._required = tuple(sorted(cons.values()))

    @property
    def required(self) -> tuple[tuple[str, str], ...]:
        """Required orientations as (tail, head) vertex-name pairs."""
        names = self.graph._names
        return tuple((names[a], names[b]) for a, b in self._required)

    def allowed(self, u: str, v: str) -> frozenset[tuple[str, str]]:
        """Allowed directions of skeleton edge {u, v}."""
        g = self.graph
        a, b = g.index_of(u), g.index_of(v)
        if not g.adjacent(u, v):
            raise MalformedHypothesisError(f"{u!r},{v!r} is not an edge")
        key = (min(a, b), max(a, b))
        for ta, hb in self._required:
            if (min(ta, hb), max(ta, hb)) == key:
                return frozenset({(g._names[ta], g._names[hb])})
        return frozenset({(u, v), (v, u)})

    def permits(self, d: MixedGraph) -> bool:
        """True iff every directed edge of d is an allowed direction."""
        directed = d.directed_edges
        return all((v, u) not in directed for u, v in self.required)


def _as_hypothesis(g_star, h) -> HypothesisGraph:
    if isinstance(h, HypothesisGraph):
        if h.graph is not g_star and h.graph != g_star:
            raise MalformedHypothesisError("hypothesis was built for a different graph")
        return h
    return HypothesisGraph(g_star, h)


def _fixed_edges_consistent(g_star, hyp) -> bool:
    directed = g_star.directed_edges
    return all((v, u) not in directed for u, v in hyp.required)


def size_with_prior(
    g_star: MixedGraph, h, memo: MemoStore | None = None
) -> BigCount:
    """Exact number of members consistent with the hypothesis.

    `h` may be a HypothesisGraph or an iterable of required (tail, head)
    pairs. Zero means the hypothesis is unrealizable.
    """
    hyp = _as_hypothesis(g_star, h)
    comps = validate_essential(g_star)
    if not _fixed_edges_consistent(g_star, hyp):
        return 0
    eng = _Engine(g_star, memo, cons=hyp._required)
    total = 1
    for m in comps:
        total *= eng.component_size(m)
        if total == 0:
            return 0
    return total


def is_realizable(g_star: MixedGraph, h, memo: MemoStore | None = None) -> bool:
    """True iff at least one member is consistent with the hypothesis."""
    return size_with_prior(g_star, h, memo) > 0


def sample_with_prior(
    g_star: MixedGraph, h, seed: int, memo: MemoStore | None = None
) -> MixedGraph:
    """Draw one consistent member, uniform over the consistent subset.

    Root selection uses the constrained counts, so each consistent DAG
    has probability exactly 1/size_with_prior and inconsistent DAGs are
    never produced. Raises UnrealizableHypothesisError when no member is
    consistent. With an empty hypothesis this is the uniform sampler.
    """
    hyp = _as_hypothesis(g_star, h)
    comps = [m for m in validate_essential(g_star) if m.bit_count() > 1]
    if not _fixed_edges_consistent(g_star, hyp):
        raise UnrealizableHypothesisError("hypothesis contradicts a directed edge")
    eng = _Engine(g_star, memo, cons=hyp._required)
    for m in comps:
        if eng.component_size(m) == 0:
            raise UnrealizableHypothesisError("no member satisfies the hypothesis")
    if not comps:
        return g_star
    return _draw(eng, g_star, comps, SplitMix64(seed))


def sample_many_with_prior(
    g_star: MixedGraph, h, n: int, seed: int, memo: MemoStore | None = None
) -> list[MixedGraph]:
    """n consistent draws; sub-stream seeding as in sample_many."""
    hyp = _as_hypothesis(g_star, h)
    if memo is None:
        memo = MemoStore()
    if not is_realizable(g_star, hyp, memo):
        raise UnrealizableHypothesisError("no member satisfies the hypothesis")
    comps = [m for m in validate_essential(g_star) if m.bit_count() > 1]
    eng = _Engine(g_star, memo, cons=hyp._required)
    out = []
    for i in range(n):
        if not comps:
            out.append(g_star)
        else:
            out.append(_draw(eng, g_star, comps, SplitMix64(derive_seed(seed, i))))
    return out


def parent_set_counts(g_star: MixedGraph, target: str, memo: MemoStore | None = None):
    """Consistent-member counts per possible parent set of `target`.

    Every orientation assignment of the undirected edges at `target`
    fixes a parent set (the chosen in-neighbours plus the already directed
    parents); the count of members realising each assignment is computed
    with the constrained counter. Zero-count parent sets are omitted; the
    returned counts sum to the unrestricted class size.
    """
    ti = g_star.index_of(target)
    if memo is None:
        memo = MemoStore()
    names = g_star._names
    und_nbrs = [names[i] for i in _bits(g_star._und[ti])]
    fixed_parents = g_star.parents(target)
    out = {}
    for pick in range(1 << len(und_nbrs)):
        constraints = []
        parents = set(fixed_parents)
        for i, u in enumerate(und_nbrs):
            if (pick >> i) & 1:
                constraints.append((u, target))
                parents.add(u)
            else:
                constraints.append((target, u))
        cnt = size_with_prior(g_star, constraints, memo)
        if cnt:
            out[frozenset(parents)] = cnt
    return out
