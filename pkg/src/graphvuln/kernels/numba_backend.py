"""JIT-compiled BFS kernels over CSR adjacency arrays.

All kernels are pure functions of (indptr, indices, n) and return integer
arrays/scalars only, so results are bit-identical to the numpy backend.
Unreachable vertices are encoded as -1; callers translate to an infinity
marker.
"""

import numpy as np
from numba import njit

NO_CYCLE = np.iinfo(np.int64).max


@njit(cache=True)
def sssp(indptr, indices, n, source):
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for ii in range(indptr[u], indptr[u + 1]):
            w = indices[ii]
            if dist[w] < 0:
                dist[w] = du + 1
                queue[tail] = w
                tail += 1
    return dist


@njit(cache=True)
def distance_stats(indptr, indices, n):
    """Per-vertex eccentricity and the unordered pair-distance histogram.

    Returns (ecc, hist): ecc[v] is -1 when some vertex is unreachable from
    v, hist[k] counts unordered pairs {u, v} with d(u, v) == k (finite
    distances only; hist[0] unused).
    """
    ecc = np.zeros(n, np.int64)
    hist = np.zeros(max(n, 1), np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for v in range(n):
            dist[v] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for ii in range(indptr[u], indptr[u + 1]):
                w = indices[ii]
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue[tail] = w
                    tail += 1
        e = 0
        reached_all = True
        for v in range(n):
            dv = dist[v]
            if dv < 0:
                reached_all = False
            else:
                if dv > e:
                    e = dv
                if v > s and dv > 0:
                    hist[dv] += 1
        ecc[s] = e if reached_all else -1
    return ecc, hist


@njit(cache=True)
def component_count(indptr, indices, n):
    seen = np.zeros(n, np.uint8)
    queue = np.empty(n, np.int64)
    count = 0
    for root in range(n):
        if seen[root]:
            continue
        count += 1
        seen[root] = 1
        queue[0] = root
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for ii in range(indptr[u], indptr[u + 1]):
                w = indices[ii]
                if not seen[w]:
                    seen[w] = 1
                    queue[tail] = w
                    tail += 1
    return count


@njit(cache=True)
def girth_scan(indptr, indices, n):
    """Length of the shortest cycle, or NO_CYCLE if none is found.

    BFS from every root; any scanned edge joining two already-labelled
    vertices (other than the BFS tree edge itself) closes a cycle of
    length <= dist[u] + dist[w] + 1, and the minimum over all roots is
    exact for the root lying on a shortest cycle.
    """
    best = NO_CYCLE
    dist = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for v in range(n):
            dist[v] = -1
            parent[v] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du >= best:
                break
            for ii in range(indptr[u], indptr[u + 1]):
                w = indices[ii]
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif parent[u] != w and parent[w] != u:
                    c = du + dist[w] + 1
                    if c < best:
                        best = c
        if best == 3:
            break
    return best


def warmup():
    """Force compilation of every kernel on a 2-vertex graph."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int32)
    sssp(indptr, indices, 2, 0)
    distance_stats(indptr, indices, 2)
    component_count(indptr, indices, 2)
    girth_scan(indptr, indices, 2)
