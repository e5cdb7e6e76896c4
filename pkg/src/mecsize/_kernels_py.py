"""Pure-Python kernels for the hot inner loops.

All functions operate on bitmask adjacency: `nbrs[i]` is an int whose set
bits are the neighbours of vertex `i`, and `sub` masks the vertex subset
under consideration. Masks are plain Python ints, so there is no vertex
limit. A compiled twin of this module lives in `_kernels_cy.pyx`; keep the
two in lockstep (tests/test_kernels.py cross-checks them).
"""

IMPLEMENTATION = "python"


def bit_indices(mask):
    """Indices of the set bits of `mask`, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mcs_order(nbrs, sub):
    """Maximum cardinality search visit order over the vertices in `sub`.

    Starts at the lowest-index vertex and breaks weight ties by lowest
    index, so the order is deterministic. Works on disconnected subsets
    (a fresh component simply starts at weight zero).
    """
    verts = bit_indices(sub)
    weights = {v: 0 for v in verts}
    order = []
    visited = 0
    for _ in verts:
        best = -1
        best_w = -1
        for v, w in weights.items():
            if w > best_w:
                best, best_w = v, w
        del weights[best]
        order.append(best)
        visited |= 1 << best
        for u in bit_indices(nbrs[best] & sub & ~visited):
            if u in weights:
                weights[u] += 1
    return order


def mcs_cliques(nbrs, sub):
    """(is_chordal, maximal clique masks) of the graph induced on `sub`.

    Chordality holds iff each vertex's already-visited neighbourhood is
    complete along an MCS order. Every maximal clique of a chordal graph
    shows up as {v} | visited_nbrs(v) for the clique's last visited vertex
    v, so collecting those candidate sets and discarding the dominated
    ones yields exactly the maximal cliques. Clique order (and hence the
    indices used everywhere downstream) is fixed by the visit order.
    """
    verts = bit_indices(sub)
    weights = {v: 0 for v in verts}
    visited = 0
    candidates = []
    for _ in verts:
        best = -1
        best_w = -1
        for v, w in weights.items():
            if w > best_w:
                best, best_w = v, w
        del weights[best]
        earlier = nbrs[best] & visited & sub
        m = earlier
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if earlier & ~nbrs[u] & ~low:
                return False, []
        candidates.append(earlier | (1 << best))
        visited |= 1 << best
        for u in bit_indices(nbrs[best] & sub & ~visited):
            if u in weights:
                weights[u] += 1
    cliques = []
    n = len(candidates)
    for i in range(n):
        c = candidates[i]
        keep = True
        for j in range(n):
            d = candidates[j]
            if c & d == c and (c != d or j < i):
                keep = False
                break
        if keep:
            cliques.append(c)
    return True, cliques


def clique_tree_edges(cliques):
    """Spanning tree of the clique graph maximising total intersection size.

    Prim's algorithm from clique 0; ties broken toward the lowest clique
    index on both sides so the tree is deterministic. Any maximum-weight
    spanning tree of the clique graph of a connected chordal graph has the
    clique-intersection property, which is what downstream rooting relies
    on. Returns (parent, child) index pairs.
    """
    m = len(cliques)
    if m <= 1:
        return []
    in_tree = [False] * m
    in_tree[0] = True
    best_w = [-1] * m
    best_p = [-1] * m
    for j in range(1, m):
        best_w[j] = (cliques[0] & cliques[j]).bit_count()
        best_p[j] = 0
    edges = []
    for _ in range(m - 1):
        pick = -1
        pw = -1
        for j in range(m):
            if not in_tree[j] and best_w[j] > pw:
                pick, pw = j, best_w[j]
        edges.append((best_p[pick], pick))
        in_tree[pick] = True
        for j in range(m):
            if not in_tree[j]:
                w = (cliques[pick] & cliques[j]).bit_count()
                if w > best_w[j] or (w == best_w[j] and pick < best_p[j]):
                    best_w[j] = w
                    best_p[j] = pick
    return edges


def connected_components(nbrs, sub):
    """Component masks of the graph induced on `sub`, lowest vertex first."""
    comps = []
    rem = sub
    while rem:
        low = rem & -rem
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= nbrs[b.bit_length() - 1]
                m ^= b
            nxt &= sub & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def components_excluding(nbrs, sub, blocked):
    """Components of `sub` using only edges not blocked per-vertex.

    `blocked[v]` masks the neighbours of v whose edge to v must be ignored
    (used to drop freshly directed edges when extracting chain components).
    """
    comps = []
    rem = sub
    while rem:
        low = rem & -rem
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                v = b.bit_length() - 1
                nxt |= nbrs[v] & ~blocked[v]
                m ^= b
            nxt &= sub & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps
