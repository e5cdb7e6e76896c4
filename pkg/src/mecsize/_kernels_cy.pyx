# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py; same contracts, same outputs.

Masks stay arbitrary-precision Python ints (class sizes and vertex counts
must not be capped), so the win over the pure version comes from typed
loop bookkeeping, not from native integers. Keep in lockstep with
_kernels_py.py; tests/test_kernels.py asserts bit-identical results.
"""

IMPLEMENTATION = "cython"


def bit_indices(mask):
    cdef list out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mcs_order(list nbrs, sub):
    cdef list verts = bit_indices(sub)
    cdef Py_ssize_t n = len(verts)
    cdef Py_ssize_t i, j, best_j
    cdef long best_w
    cdef list weights = [0] * n
    cdef list alive = [True] * n
    cdef list order = []
    visited = 0
    for i in range(n):
        best_j = -1
        best_w = -1
        for j in range(n):
            if alive[j] and <long> weights[j] > best_w:
                best_j = j
                best_w = weights[j]
        alive[best_j] = False
        v = verts[best_j]
        order.append(v)
        visited = visited | (1 << v)
        touch = nbrs[v] & sub & ~visited
        for j in range(n):
            if alive[j] and (touch >> (<long> verts[j])) & 1:
                weights[j] = weights[j] + 1
    return order


def mcs_cliques(list nbrs, sub):
    cdef list verts = bit_indices(sub)
    cdef Py_ssize_t n = len(verts)
    cdef Py_ssize_t i, j, best_j
    cdef long best_w
    cdef list weights = [0] * n
    cdef list alive = [True] * n
    cdef list candidates = []
    visited = 0
    for i in range(n):
        best_j = -1
        best_w = -1
        for j in range(n):
            if alive[j] and <long> weights[j] > best_w:
                best_j = j
                best_w = weights[j]
        alive[best_j] = False
        v = verts[best_j]
        earlier = nbrs[v] & visited & sub
        m = earlier
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if earlier & ~nbrs[u] & ~low:
                return False, []
        candidates.append(earlier | (1 << v))
        visited = visited | (1 << v)
        touch = nbrs[v] & sub & ~visited
        for j in range(n):
            if alive[j] and (touch >> (<long> verts[j])) & 1:
                weights[j] = weights[j] + 1
    cdef list cliques = []
    cdef Py_ssize_t nc = len(candidates)
    cdef bint keep
    for i in range(nc):
        c = candidates[i]
        keep = True
        for j in range(nc):
            d = candidates[j]
            if c & d == c and (c != d or j < i):
                keep = False
                break
        if keep:
            cliques.append(c)
    return True, cliques


def clique_tree_edges(list cliques):
    cdef Py_ssize_t m = len(cliques)
    if m <= 1:
        return []
    cdef Py_ssize_t j, pick
    cdef long w, pw
    cdef list in_tree = [False] * m
    cdef list best_w = [-1] * m
    cdef list best_p = [-1] * m
    in_tree[0] = True
    for j in range(1, m):
        best_w[j] = (cliques[0] & cliques[j]).bit_count()
        best_p[j] = 0
    cdef list edges = []
    cdef Py_ssize_t step
    for step in range(m - 1):
        pick = -1
        pw = -1
        for j in range(m):
            if not in_tree[j] and <long> best_w[j] > pw:
                pick = j
                pw = best_w[j]
        edges.append((best_p[pick], pick))
        in_tree[pick] = True
        for j in range(m):
            if not in_tree[j]:
                w = (cliques[pick] & cliques[j]).bit_count()
                if w > <long> best_w[j] or (w == <long> best_w[j] and pick < <long> best_p[j]):
                    best_w[j] = w
                    best_p[j] = pick
    return edges


def connected_components(list nbrs, sub):
    cdef list comps = []
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


def components_excluding(list nbrs, sub, list blocked):
    cdef list comps = []
    cdef Py_ssize_t v
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
