"""Clique trees of chordal graphs: construction, rooting, emission sets.

The counting and sampling machinery all runs on `_Rooting`, a flat
index-based view of a rooted clique tree. The public dataclasses wrap the
same data with vertex names for inspection, tests and the debug CLI.

Rooting a clique tree at a vertex v splits every clique K into a
separator Sep(K) = K n parent(K) and a residual Res(K) = K \\ Sep(K); the
root clique uses Sep = {v}, Res = K \\ {v}, so the residuals partition the
remaining vertices and v appears only in separators. The emission set
Em(K) is the subset of Sep(K) whose members parent all of Res(K) in the
v-rooted orientation; it is computed top-down:

    u in Em(K)  iff  u is the root vertex, or Em(K_u) is not a subset of
    Sep(K), where K_u is the unique clique with u in its residual.

Orienting Em(K) -> Res(K) inside every clique yields exactly the directed
edges of the v-rooted essential graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from ._kernels_py import bit_indices as _bits
from .errors import DisconnectedError, InvalidGraphError, NotChordalError
from .graph import MixedGraph, is_connected


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques of a chordal graph joined into a junction tree.

    `tree_edges` holds index pairs into `cliques`. The tree satisfies the
    clique-intersection property: the intersection of any two cliques is
    contained in every clique on the tree path between them.
    """

    graph: MixedGraph
    cliques: tuple[frozenset[str], ...]
    tree_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class RootedCliqueTree:
    """A clique tree rooted at a vertex, with separator/residual maps.

    `parent` maps clique index -> parent clique index (root maps to None).
    `em` is empty until `compute_emission_sets` has run.
    """

    base: CliqueTree
    root_vertex: str
    root_clique: int
    parent: dict[int, int | None]
    sep: dict[int, frozenset[str]]
    res: dict[int, frozenset[str]]
    em: dict[int, frozenset[str]] = field(default_factory=dict)

    @property
    def graph(self) -> MixedGraph:
        return self.base.graph


class _Rooting:
    """Index-level rooted clique tree over bitmask adjacency."""

    __slots__ = (
        "cliques", "root", "order", "parent", "children",
        "sep", "res", "owner", "subtree_res",
    )

    def __init__(self, cliques, adj, root_vertex_bit):
        m = len(cliques)
        root = 0
        for i in range(m):
            if cliques[i] & root_vertex_bit:
                root = i
                break
        parent = [-1] * m
        order = [root]
        seen = [False] * m
        seen[root] = True
        qi = 0
        while qi < len(order):
            k = order[qi]
            qi += 1
            for c in adj[k]:
                if not seen[c]:
                    seen[c] = True
                    parent[c] = k
                    order.append(c)
        children = [[] for _ in range(m)]
        sep = [0] * m
        res = [0] * m
        sep[root] = root_vertex_bit
        res[root] = cliques[root] & ~root_vertex_bit
        for k in order[1:]:
            children[parent[k]].append(k)
            sep[k] = cliques[k] & cliques[parent[k]]
            res[k] = cliques[k] & ~sep[k]
        owner = {}
        for k in order:
            for u in _bits(res[k]):
                owner[u] = k
        subtree_res = res[:]
        for k in reversed(order):
            if parent[k] >= 0:
                subtree_res[parent[k]] |= subtree_res[k]
        self.cliques = cliques
        self.root = root
        self.order = order
        self.parent = parent
        self.children = children
        self.sep = sep
        self.res = res
        self.owner = owner
        self.subtree_res = subtree_res

    def emissions(self):
        """Em mask per clique, computed root-to-leaf; root uses Sep by convention."""
        em = [0] * len(self.cliques)
        rootset = self.sep[self.root]
        em[self.root] = rootset
        for k in self.order[1:]:
            e = 0
            for u in _bits(self.sep[k]):
                if (rootset >> u) & 1 or em[self.owner[u]] & ~self.sep[k]:
                    e |= 1 << u
            em[k] = e
        return em


def _tree_data(g: MixedGraph):
    """(clique masks, tree adjacency lists) for a connected chordal graph."""
    if not g.is_fully_undirected():
        raise InvalidGraphError("clique trees are built on undirected graphs")
    kern = kernels.active
    ok, cliques = kern.mcs_cliques(g._und, g._full_mask())
    if not ok:
        raise NotChordalError("graph is not chordal")
    if not is_connected(g):
        raise DisconnectedError("clique trees are built per connected component")
    edges = kern.clique_tree_edges(cliques)
    adj = [[] for _ in cliques]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return cliques, adj


def build_clique_tree(g: MixedGraph) -> CliqueTree:
    """Clique tree of a connected chordal undirected graph.

    Cliques come from maximum cardinality search with lowest-index
    tie-breaking and the tree is the deterministic maximum-weight spanning
    tree over intersection sizes, so the result is reproducible for a
    fixed vertex order.
    """
    cliques, adj = _tree_data(g)
    names = g._names
    cl = tuple(frozenset(names[i] for i in _bits(c)) for c in cliques)
    edges = frozenset(
        (min(a, b), max(a, b)) for a in range(len(adj)) for b in adj[a] if a < b
    )
    return CliqueTree(graph=g, cliques=cl, tree_edges=edges)


def _rooting_of(t: CliqueTree, r: str) -> _Rooting:
    g = t.graph
    bit = 1 << g.index_of(r)
    idx = g._index
    cliques = []
    for cl in t.cliques:
        m = 0
        for v in cl:
            m |= 1 << idx[v]
        cliques.append(m)
    adj = [[] for _ in t.cliques]
    for a, b in t.tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    return _Rooting(cliques, adj, bit)


def root_tree(t: CliqueTree, r: str) -> RootedCliqueTree:
    """Root the tree at the lowest-index clique containing vertex r.

    Fills parent/separator/residual maps; emission sets stay empty until
    `compute_emission_sets`. The v-rooted orientation does not depend on
    which clique containing r is chosen, so the deterministic choice is
    free.
    """
    rooting = _rooting_of(t, r)
    names = t.graph._names
    parent = {
        k: (rooting.parent[k] if rooting.parent[k] >= 0 else None)
        for k in range(len(t.cliques))
    }
    sep = {
        k: frozenset(names[i] for i in _bits(rooting.sep[k]))
        for k in range(len(t.cliques))
    }
    res = {
        k: frozenset(names[i] for i in _bits(rooting.res[k]))
        for k in range(len(t.cliques))
    }
    return RootedCliqueTree(
        base=t, root_vertex=r, root_clique=rooting.root,
        parent=parent, sep=sep, res=res,
    )


def compute_emission_sets(t: RootedCliqueTree) -> RootedCliqueTree:
    """Return a copy of the rooted tree with emission sets filled in."""
    rooting = _rooting_of(t.base, t.root_vertex)
    names = t.graph._names
    em_masks = rooting.emissions()
    em = {
        k: frozenset(names[i] for i in _bits(em_masks[k]))
        for k in range(len(t.base.cliques))
    }
    return RootedCliqueTree(
        base=t.base, root_vertex=t.root_vertex, root_clique=t.root_clique,
        parent=t.parent, sep=t.sep, res=t.res, em=em,
    )


def clique_satisfies_emission(t: RootedCliqueTree, k: int) -> bool:
    """True iff Em(K) == Sep(K) for clique index k.

    When it holds, all edges from Sep(K) into the residuals below K are
    directed, forming a directed edge cut, and the subtree under K can be
    counted independently of the rest of the tree.
    """
    if not t.em:
        raise ValueError("emission sets not computed; call compute_emission_sets")
    return t.em[k] == t.sep[k]


def rooted_orient(g: MixedGraph, r: str) -> MixedGraph:
    """Orientation common to every member of the class rooted at r.

    Builds the rooted clique tree and directs Em(K) -> Res(K) within each
    clique; all other edges stay undirected. The output is a chain graph
    whose chain components are chordal, and its directed edges are exactly
    the orientations shared by all r-rooted members.
    """
    cliques, adj = _tree_data(g)
    rooting = _Rooting(cliques, adj, 1 << g.index_of(r))
    em = rooting.emissions()
    n = g.n
    und = list(g._und)
    out = [0] * n
    inn = [0] * n
    for k in range(len(cliques)):
        res = rooting.res[k]
        for u in _bits(em[k]):
            out[u] |= res
            und[u] &= ~res
        for w in _bits(res):
            inn[w] |= em[k]
            und[w] &= ~em[k]
    return MixedGraph._from_masks(g._names, g._index, und, out, inn)


def dump_rooted_tree(t: RootedCliqueTree) -> str:
    """Debug rendering, one clique per line."""

    def fmt(s):
        return "{" + ",".join(sorted(s)) + "}"

    lines = []
    for k in range(len(t.base.cliques)):
        par = t.parent[k]
        lines.append(
            f"K{k}: sep={fmt(t.sep[k])} res={fmt(t.res[k])} "
            f"em={fmt(t.em[k]) if t.em else '{}'} "
            f"parent={'K%d' % par if par is not None else '-'}"
        )
    return "\n".join(lines)
