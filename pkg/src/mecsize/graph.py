"""Mixed graphs (directed + undirected edges) and structural predicates.

Vertices are opaque strings, mapped internally onto dense integer indices
in insertion order. All adjacency is stored as bitmasks over those
indices, which is what makes the counting recursion cheap. Graphs are
immutable after construction; every operation returns a fresh graph, so
values can be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernels
from ._kernels_py import bit_indices as _bits
from .errors import (
    DirectedCycleError,
    InconsistentOrientationError,
    InvalidGraphError,
    NotDagError,
    UnknownVertexError,
    VertexSetMismatchError,
)


class MixedGraph:
    """A graph with disjoint sets of directed and undirected edges.

    Self-loops are rejected, a vertex pair may carry at most one edge, and
    mutually directed pairs (u,v)+(v,u) are rejected (that state is an
    undirected edge). Covers DAGs, undirected graphs, CPDAGs and general
    chain graphs.
    """

    __slots__ = ("_names", "_index", "_und", "_out", "_in")

    def __init__(
        self,
        vertices: Iterable[str] = (),
        undirected_edges: Iterable[Sequence[str]] = (),
        directed_edges: Iterable[Sequence[str]] = (),
    ):
        names: list[str] = []
        index: dict[str, int] = {}

        def intern(v) -> int:
            v = str(v)
            i = index.get(v)
            if i is None:
                i = len(names)
                index[v] = i
                names.append(v)
            return i

        for v in vertices:
            intern(v)
        und_pairs = [(intern(a), intern(b)) for a, b in undirected_edges]
        dir_pairs = [(intern(a), intern(b)) for a, b in directed_edges]

        n = len(names)
        und = [0] * n
        out = [0] * n
        inn = [0] * n
        for a, b in und_pairs:
            if a == b:
                raise InvalidGraphError(f"self-loop at {names[a]!r}")
            und[a] |= 1 << b
            und[b] |= 1 << a
        for a, b in dir_pairs:
            if a == b:
                raise InvalidGraphError(f"self-loop at {names[a]!r}")
            if (inn[a] >> b) & 1:
                raise InvalidGraphError(
                    f"both {names[a]!r}->{names[b]!r} and the reverse are directed"
                )
            if (und[a] >> b) & 1:
                raise InvalidGraphError(
                    f"edge {names[a]!r},{names[b]!r} is both directed and undirected"
                )
            out[a] |= 1 << b
            inn[b] |= 1 << a

        self._names = tuple(names)
        self._index = index
        self._und = und
        self._out = out
        self._in = inn

    @classmethod
    def _from_masks(cls, names, index, und, out, inn) -> "MixedGraph":
        g = object.__new__(cls)
        g._names = names
        g._index = index
        g._und = und
        g._out = out
        g._in = inn
        return g

    # --- basic accessors ---

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._names

    @property
    def n(self) -> int:
        return len(self._names)

    def index_of(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    @property
    def undirected_edges(self) -> frozenset[tuple[str, str]]:
        """Undirected edges as (u, v) pairs with u before v in vertex order."""
        names = self._names
        return frozenset(
            (names[a], names[b])
            for a in range(self.n)
            for b in _bits(self._und[a])
            if a < b
        )

    @property
    def directed_edges(self) -> frozenset[tuple[str, str]]:
        names = self._names
        return frozenset(
            (names[a], names[b]) for a in range(self.n) for b in _bits(self._out[a])
        )

    @property
    def skeleton_edges(self) -> frozenset[frozenset[str]]:
        out = set()
        names = self._names
        for a in range(self.n):
            for b in _bits(self._und[a] | self._out[a]):
                out.add(frozenset((names[a], names[b])))
        return frozenset(out)

    def n_undirected(self) -> int:
        return sum(m.bit_count() for m in self._und) // 2

    def n_directed(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def adjacent(self, u: str, v: str) -> bool:
        a, b = self.index_of(u), self.index_of(v)
        return bool(((self._und[a] | self._out[a] | self._in[a]) >> b) & 1)

    def undirected_neighbors(self, v: str) -> frozenset[str]:
        i = self.index_of(v)
        return frozenset(self._names[j] for j in _bits(self._und[i]))

    def parents(self, v: str) -> frozenset[str]:
        i = self.index_of(v)
        return frozenset(self._names[j] for j in _bits(self._in[i]))

    def children(self, v: str) -> frozenset[str]:
        i = self.index_of(v)
        return frozenset(self._names[j] for j in _bits(self._out[i]))

    def is_fully_directed(self) -> bool:
        return all(m == 0 for m in self._und)

    def is_fully_undirected(self) -> bool:
        return all(m == 0 for m in self._out)

    def induced_subgraph(self, vs: Iterable[str]) -> "MixedGraph":
        keep = set(vs)
        missing = keep - set(self._names)
        if missing:
            raise UnknownVertexError(f"unknown vertices {sorted(missing)!r}")
        names = [v for v in self._names if v in keep]
        und = []
        dire = []
        for u, v in sorted(self.undirected_edges):
            if u in keep and v in keep:
                und.append((u, v))
        for u, v in sorted(self.directed_edges):
            if u in keep and v in keep:
                dire.append((u, v))
        return MixedGraph(names, und, dire)

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self._names == other._names
            and self.undirected_edges == other.undirected_edges
            and self.directed_edges == other.directed_edges
        )

    def __hash__(self):
        return hash((self._names, self.undirected_edges, self.directed_edges))

    def __repr__(self):
        return (
            f"MixedGraph({self.n} vertices, {self.n_undirected()} undirected, "
            f"{self.n_directed()} directed)"
        )

    # --- internal helpers used across the package ---

    def _full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    def _skeleton_masks(self) -> list[int]:
        return [self._und[i] | self._out[i] | self._in[i] for i in range(self.n)]

    def _directed_acyclic(self) -> bool:
        """Kahn's algorithm on the directed part only."""
        n = self.n
        indeg = [self._in[i].bit_count() for i in range(n)]
        stack = [i for i in range(n) if indeg[i] == 0]
        seen = 0
        while stack:
            i = stack.pop()
            seen += 1
            for j in _bits(self._out[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        return seen == n


def is_dag(g: MixedGraph) -> bool:
    return g.is_fully_directed() and g._directed_acyclic()


def is_chordal(g: MixedGraph) -> bool:
    """True iff every cycle of length >= 4 has a chord.

    Tested via maximum cardinality search: the graph is chordal exactly
    when each vertex's already-visited neighbourhood is complete along an
    MCS visit order. Only defined for undirected graphs.
    """
    if not g.is_fully_undirected():
        raise InvalidGraphError("chordality is defined on undirected graphs only")
    ok, _ = kernels.active.mcs_cliques(g._und, g._full_mask())
    return ok


def is_connected(g: MixedGraph) -> bool:
    if g.n == 0:
        return True
    comps = kernels.active.connected_components(g._skeleton_masks(), g._full_mask())
    return len(comps) == 1


def chain_components(g: MixedGraph) -> list[MixedGraph]:
    """Connected components left after deleting all directed edges.

    Isolated vertices yield singleton components. Components are returned
    as induced undirected graphs, ordered by their lowest vertex index.
    """
    masks = kernels.active.connected_components(g._und, g._full_mask())
    names = g._names
    return [g.induced_subgraph([names[i] for i in _bits(m)]) for m in masks]


def v_structures(d: MixedGraph) -> frozenset[tuple[str, str, str]]:
    """All induced a->b<-c triples with a, c nonadjacent.

    Returned canonically with the lexicographically smaller parent first,
    so results are comparable across graphs that share a vertex set but
    differ in insertion order.
    """
    if not is_dag(d):
        raise NotDagError("v-structures are defined for DAGs")
    names = d._names
    out = set()
    for b in range(d.n):
        pars = _bits(d._in[b])
        for i in range(len(pars)):
            for j in range(i + 1, len(pars)):
                a, c = pars[i], pars[j]
                adj = d._und[a] | d._out[a] | d._in[a]
                if not (adj >> c) & 1:
                    x, y = sorted((names[a], names[c]))
                    out.add((x, names[b], y))
    return frozenset(out)


def markov_equivalent(d1: MixedGraph, d2: MixedGraph) -> bool:
    """True iff the two DAGs have equal skeletons and equal v-structures."""
    if set(d1.vertices) != set(d2.vertices):
        raise VertexSetMismatchError("DAGs must share a vertex set")
    if not is_dag(d1) or not is_dag(d2):
        raise NotDagError("markov_equivalent expects DAGs")
    return d1.skeleton_edges == d2.skeleton_edges and v_structures(d1) == v_structures(d2)


def bfs_levels(g: MixedGraph, root: str) -> list[frozenset[str]]:
    """Vertices of root's component grouped by skeleton distance from root.

    Level i holds the vertices at distance i; no edge can join levels that
    are more than one apart.
    """
    r = g.index_of(root)
    adj = g._skeleton_masks()
    levels = []
    seen = 1 << r
    frontier = seen
    names = g._names
    while frontier:
        levels.append(frozenset(names[i] for i in _bits(frontier)))
        nxt = 0
        for i in _bits(frontier):
            nxt |= adj[i]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return levels


def meek_close(g: MixedGraph) -> MixedGraph:
    """Close a partially directed graph under the four Meek rules.

    The rules orient undirected edges whose direction is forced in every
    consistent DAG extension (no new v-structure, no directed cycle):

      R1: a->b, b-c, a and c nonadjacent        =>  b->c
      R2: a->b->c, a-c                          =>  a->c
      R3: a-b, a-c, a-d, c->b, d->b, c,d nonadj =>  a->b
      R4: a-b, a-d, d->c, c->b, d,b nonadj      =>  a->b

    Applied as a work-list until a fixed point; the result is the unique
    maximal closure (same skeleton, superset of directed edges). Input
    whose directed part is cyclic is rejected; a closure step that would
    have to reverse an existing directed edge raises
    InconsistentOrientationError.
    """
    if not g._directed_acyclic():
        raise DirectedCycleError("directed part of the input contains a cycle")
    n = g.n
    und = list(g._und)
    out = list(g._out)
    inn = list(g._in)
    adj = [und[i] | out[i] | inn[i] for i in range(n)]

    def orient(a, b):
        und[a] &= ~(1 << b)
        und[b] &= ~(1 << a)
        out[a] |= 1 << b
        inn[b] |= 1 << a

    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in _bits(out[a]):
                # R1: orient b->c for undirected b-c with c not adjacent to a
                for c in _bits(und[b] & ~adj[a] & ~(1 << a)):
                    orient(b, c)
                    changed = True
                # R2: a->b->c with a-c pending
                for c in _bits(out[b]):
                    if (und[a] >> c) & 1:
                        orient(a, c)
                        changed = True
                    elif (out[c] >> a) & 1:
                        raise InconsistentOrientationError(
                            f"cannot orient {g._names[a]!r}->{g._names[c]!r}: "
                            "reverse edge already directed"
                        )
        for a in range(n):
            for b in _bits(und[a]):
                # R3: two nonadjacent undirected-neighbours of a both parent b
                pool = inn[b] & und[a]
                fired = False
                for c in _bits(pool):
                    if pool & ~adj[c] & ~(1 << c):
                        orient(a, b)
                        changed = True
                        fired = True
                        break
                if fired:
                    continue
                # R4: d-a, d->c->b chain with d,b nonadjacent
                for d in _bits(und[a] & ~adj[b] & ~(1 << b)):
                    if out[d] & inn[b]:
                        orient(a, b)
                        changed = True
                        break

    closed = MixedGraph._from_masks(g._names, g._index, und, out, inn)
    if not closed._directed_acyclic():
        raise InconsistentOrientationError("closure produced a directed cycle")
    return closed
