"""Exact size of a Markov equivalence class via rooted clique trees.

The size of a class splits as a product over chain components, and within
one undirected connected chordal component as a sum, over every vertex v,
of the number of members whose component orientation has v as its unique
source. Each per-root term is computed on the rooted clique tree: the
forced orientations are read off the emission sets, cliques whose
separator fully emits cut the tree into an independently countable
subtree, and whatever is left splits into smaller chain components that
recurse.

Counts are exact arbitrary-precision ints (`BigCount`); class sizes grow
like p! so machine words overflow around p = 21.

Sub-problems repeat heavily across roots, so results are memoised in a
`MemoStore` under canonical keys. Every sub-problem is an induced
subgraph of the one input graph, which makes the global vertex bitmask a
sound canonical key: component problems key on their vertex set, rooted
subtree problems on (residual vertex set, separator vertex set). When
orientation constraints are active, keys additionally carry the
constraints that touch the sub-problem's vertices (identical subgraphs
under different local constraints count differently).
"""

from __future__ import annotations

import os

from . import kernels
from ._kernels_py import bit_indices as _bits
from .clique_tree import RootedCliqueTree, _Rooting
from .errors import NotChordalError, PartiallyDirectedCycleError
from .graph import MixedGraph, is_chordal, is_connected

BigCount = int

_ENV_CAP = "MECSIZE_MEMO_CAP"


class MemoStore:
    """Cache of sub-problem sizes, shared across one top-level graph.

    Two namespaces of one store: chain-component keys and rooted-subtree
    keys. Inserts are idempotent — re-inserting a key with a different
    value raises, which is what makes concurrent idempotent inserts safe
    under the GIL. A store is bound to the first graph it is used with;
    reuse with a different graph raises (masks would silently collide).

    `enabled=False` turns every lookup into a miss and drops stores,
    which leaves results identical and is used to measure what the cache
    saves. `max_entries` (default from MECSIZE_MEMO_CAP) stops inserting
    once the combined namespaces reach the cap.
    """

    def __init__(self, enabled: bool = True, max_entries: int | None = None):
        if max_entries is None:
            cap = os.environ.get(_ENV_CAP)
            max_entries = int(cap) if cap else None
        self.enabled = enabled
        self.max_entries = max_entries
        self._component: dict = {}
        self._subtree: dict = {}
        self._fingerprint = None
        self.hits = 0
        self.misses = 0
        self.rs_invocations = 0

    def __len__(self):
        return len(self._component) + len(self._subtree)

    def _bind(self, fingerprint):
        if self._fingerprint is None:
            self._fingerprint = fingerprint
        elif self._fingerprint != fingerprint:
            raise ValueError(
                "MemoStore is bound to a different graph; use one store per "
                "essential graph"
            )

    def _get(self, ns, key):
        if not self.enabled:
            self.misses += 1
            return None
        val = ns.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def _put(self, ns, key, value):
        if not self.enabled:
            return
        old = ns.get(key)
        if old is not None:
            if old != value:
                raise ValueError(f"memo key {key!r} re-inserted with a new value")
            return
        if self.max_entries is not None and len(self) >= self.max_entries:
            return
        ns[key] = value

    def get_component(self, key):
        return self._get(self._component, key)

    def put_component(self, key, value):
        self._put(self._component, key, value)

    def get_subtree(self, key):
        return self._get(self._subtree, key)

    def put_subtree(self, key, value):
        self._put(self._subtree, key, value)

    def stats(self) -> dict:
        return {
            "hits": self.hits,
            "misses": self.misses,
            "rs_invocations": self.rs_invocations,
            "component_entries": len(self._component),
            "subtree_entries": len(self._subtree),
        }


class _Engine:
    """Counting state for one essential graph: adjacency, memo, constraints.

    `banned[u]` masks the vertices w for which orienting u -> w would
    contradict a constraint; `cons` is the canonical tuple of required
    (tail, head) index pairs used to localise memo keys.
    """

    __slots__ = ("und", "memo", "banned", "cons", "trees", "kern")

    def __init__(self, g: MixedGraph, memo: MemoStore | None, cons=()):
        self.und = g._und
        self.memo = memo if memo is not None else MemoStore()
        self.memo._bind((g._names, tuple(g._und), tuple(g._out)))
        self.cons = tuple(sorted(cons))
        banned = None
        if self.cons:
            banned = [0] * g.n
            for tail, head in self.cons:
                banned[head] |= 1 << tail
        self.banned = banned
        self.trees = {}
        self.kern = kernels.active

    def tree_for(self, comp_mask):
        tree = self.trees.get(comp_mask)
        if tree is None:
            ok, cliques = self.kern.mcs_cliques(self.und, comp_mask)
            if not ok:
                raise NotChordalError("chain component is not chordal")
            edges = self.kern.clique_tree_edges(cliques)
            adj = [[] for _ in cliques]
            for a, b in edges:
                adj[a].append(b)
                adj[b].append(a)
            tree = (cliques, adj)
            self.trees[comp_mask] = tree
        return tree

    def local_cons(self, region_mask):
        """Constraints with both endpoints inside the region."""
        if not self.cons:
            return ()
        return tuple(
            (a, b)
            for a, b in self.cons
            if (region_mask >> a) & 1 and (region_mask >> b) & 1
        )

    # --- counting ---

    def component_size(self, comp_mask) -> int:
        if comp_mask.bit_count() <= 1:
            return 1
        key = (comp_mask, self.local_cons(comp_mask))
        hit = self.memo.get_component(key)
        if hit is not None:
            return hit
        total = 0
        for v in _bits(comp_mask):
            total += self.rooted_size(comp_mask, v)
        self.memo.put_component(key, total)
        return total

    def rooted_size(self, comp_mask, v) -> int:
        bit = 1 << v
        region = comp_mask & ~bit
        key = (region, bit, self.local_cons(comp_mask))
        hit = self.memo.get_subtree(key)
        if hit is not None:
            return hit
        cliques, adj = self.tree_for(comp_mask)
        rooting = _Rooting(cliques, adj, bit)
        val = self._rs(rooting, rooting.root, bit, region)
        self.memo.put_subtree(key, val)
        return val

    def _rs(self, rooting, kroot, sep_mask, region) -> int:
        """Count the members of one rooted sub-problem.

        `sep_mask` vertices act as external sources: every edge from them
        into the region is directed inwards. Walking the tree top-down,
        each clique either fully emits (its subtree is detached and
        counted on its own, multiplying in) or contributes its forced
        orientations; the leftover undirected chain components recurse.
        """
        self.memo.rs_invocations += 1
        cliques = rooting.cliques
        children = rooting.children
        sep = rooting.sep
        res = rooting.res
        owner = rooting.owner
        banned = self.banned

        size = 1
        oriented: dict[int, int] = {}
        em = {kroot: sep_mask}
        detached = 0

        res_root = cliques[kroot] & region
        if banned is not None:
            for u in _bits(sep_mask):
                if banned[u] & res_root:
                    return 0
        for u in _bits(sep_mask):
            oriented[u] = oriented.get(u, 0) | res_root
        for w in _bits(res_root):
            oriented[w] = oriented.get(w, 0) | sep_mask

        frontier = [kroot]
        while frontier:
            nxt = []
            for k in frontier:
                for c in children[k]:
                    emc = 0
                    for u in _bits(sep[c]):
                        if (sep_mask >> u) & 1 or em[owner[u]] & ~sep[c]:
                            emc |= 1 << u
                    em[c] = emc
                    if emc == sep[c]:
                        sub_region = rooting.subtree_res[c]
                        detached |= sub_region
                        skey = (sub_region, emc, self.local_cons(sub_region | emc))
                        sub = self.memo.get_subtree(skey)
                        if sub is None:
                            sub = self._rs(rooting, c, emc, sub_region)
                            self.memo.put_subtree(skey, sub)
                        if sub == 0:
                            return 0
                        size *= sub
                    else:
                        rc = res[c]
                        if banned is not None:
                            for u in _bits(emc):
                                if banned[u] & rc:
                                    return 0
                        for u in _bits(emc):
                            oriented[u] = oriented.get(u, 0) | rc
                        for w in _bits(rc):
                            oriented[w] = oriented.get(w, 0) | emc
                        nxt.append(c)
            frontier = nxt

        active = region & ~detached
        rem = active
        while rem:
            low = rem & -rem
            comp = low
            fr = low
            while fr:
                grow = 0
                m = fr
                while m:
                    b = m & -m
                    u = b.bit_length() - 1
                    grow |= self.und[u] & ~oriented.get(u, 0)
                    m ^= b
                grow &= active & ~comp
                comp |= grow
                fr = grow
            rem &= ~comp
            if comp.bit_count() > 1:
                sub = self.component_size(comp)
                if sub == 0:
                    return 0
                size *= sub
        return size

    # --- orientation (shared by the samplers) ---

    def orient_root(self, comp_mask, v):
        """Directed index pairs and leftover chain components for root v.

        Walks the full rooted tree (no subtree detaching: the actual edge
        list is needed) and orients Em(K) -> Res(K) in every clique.
        """
        cliques, adj = self.tree_for(comp_mask)
        rooting = _Rooting(cliques, adj, 1 << v)
        em = rooting.emissions()
        pairs = []
        oriented: dict[int, int] = {}
        for k in range(len(cliques)):
            rk = rooting.res[k]
            for u in _bits(em[k]):
                oriented[u] = oriented.get(u, 0) | rk
                for w in _bits(rk):
                    pairs.append((u, w))
                    oriented[w] = oriented.get(w, 0) | (1 << u)
        region = comp_mask & ~(1 << v)
        comps = []
        rem = region
        while rem:
            low = rem & -rem
            comp = low
            fr = low
            while fr:
                grow = 0
                m = fr
                while m:
                    b = m & -m
                    u = b.bit_length() - 1
                    grow |= self.und[u] & ~oriented.get(u, 0)
                    m ^= b
                grow &= region & ~comp
                comp |= grow
                fr = grow
            rem &= ~comp
            if comp.bit_count() > 1:
                comps.append(comp)
        return pairs, comps


def validate_essential(g: MixedGraph):
    """Structural validity: a chain graph whose chain components are chordal.

    Returns the chain-component masks. Raises PartiallyDirectedCycleError
    when a directed edge lands inside an undirected component or the
    component quotient graph is cyclic, NotChordalError for non-chordal
    components.
    """
    kern = kernels.active
    comps = kern.connected_components(g._und, g._full_mask())
    comp_of = {}
    for ci, m in enumerate(comps):
        for v in _bits(m):
            comp_of[v] = ci
    quotient = [0] * len(comps)
    for a in range(g.n):
        for b in _bits(g._out[a]):
            ca, cb = comp_of[a], comp_of[b]
            if ca == cb:
                raise PartiallyDirectedCycleError(
                    f"directed edge {g._names[a]!r}->{g._names[b]!r} lies inside "
                    "an undirected component"
                )
            quotient[ca] |= 1 << cb
    # quotient graph over components must be acyclic
    indeg = [0] * len(comps)
    for ca in range(len(comps)):
        for cb in _bits(quotient[ca]):
            indeg[cb] += 1
    stack = [c for c in range(len(comps)) if indeg[c] == 0]
    seen = 0
    while stack:
        c = stack.pop()
        seen += 1
        for d in _bits(quotient[c]):
            indeg[d] -= 1
            if indeg[d] == 0:
                stack.append(d)
    if seen != len(comps):
        raise PartiallyDirectedCycleError("graph contains a partially directed cycle")
    for m in comps:
        if m.bit_count() > 1:
            ok, _ = kern.mcs_cliques(g._und, m)
            if not ok:
                raise NotChordalError("a chain component is not chordal")
    return comps


def mec_size(g_star: MixedGraph, memo: MemoStore | None = None) -> BigCount:
    """Number of DAGs in the Markov equivalence class of `g_star`.

    The input must be a chain graph with chordal chain components (checked
    structurally). The result is the product of the per-component counts.
    """
    comps = validate_essential(g_star)
    eng = _Engine(g_star, memo)
    total = 1
    for m in comps:
        total *= eng.component_size(m)
    return total


def component_size(g: MixedGraph, memo: MemoStore | None = None) -> BigCount:
    """Class size of a single undirected connected chordal graph."""
    if not is_chordal(g) or not is_connected(g):
        raise NotChordalError("component_size expects a connected chordal graph")
    eng = _Engine(g, memo)
    return eng.component_size(g._full_mask())


def rooted_size(
    t: RootedCliqueTree, g: MixedGraph, memo: MemoStore | None = None
) -> BigCount:
    """Number of members whose orientation of `g` is rooted at t's root vertex."""
    eng = _Engine(g, memo)
    return eng.rooted_size(g._full_mask(), g.index_of(t.root_vertex))


def canonical_key_component(g: MixedGraph) -> tuple[str, ...]:
    """Canonical memo key of a chain-component problem: its sorted vertex set."""
    return tuple(sorted(g.vertices))


def canonical_key_subtree(t: RootedCliqueTree, k: int):
    """Canonical memo key of the subtree problem below clique k.

    The pair (sorted residual vertices of the subtree, sorted separator).
    Equal keys identify identical counting sub-problems within one
    top-level graph.
    """
    res = set()
    stack = [k]
    children = {i: [] for i in t.parent}
    for i, p in t.parent.items():
        if p is not None:
            children[p].append(i)
    while stack:
        c = stack.pop()
        res |= t.res[c]
        stack.extend(children[c])
    return tuple(sorted(res)), tuple(sorted(t.sep[k]))
