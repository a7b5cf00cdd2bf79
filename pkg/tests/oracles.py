"""Brute-force reference implementations used only by the tests.

Everything here is deliberately naive (dict/deque BFS, itertools cycle
search, closed-form counting recurrences) and independent of the package's
kernel code paths.
"""

from collections import deque
from itertools import combinations, permutations
from math import comb, inf


def adjacency(g):
    return {u: set(map(int, g.neighbors(u))) for u in range(g.n)}


def bfs_oracle(g, source):
    """Plain deque BFS; unreachable vertices get math.inf."""
    adj = adjacency(g)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist.get(v, inf) for v in range(g.n)]


def all_pairs_oracle(g):
    return [bfs_oracle(g, s) for s in range(g.n)]


def gc_oracle(g, alpha):
    """Direct double sum over ordered pairs; skips unreachable pairs."""
    mat = all_pairs_oracle(g)
    total = 0.0
    for i in range(g.n):
        for j in range(g.n):
            if i != j and mat[i][j] != inf:
                total += alpha ** mat[i][j]
    return total


def girth_oracle(g):
    """Smallest k admitting a k-cycle, by explicit vertex-tuple search."""
    adj = adjacency(g)
    for k in range(3, g.n + 1):
        for verts in combinations(range(g.n), k):
            pool = verts[1:]
            for order in permutations(pool):
                cyc = (verts[0],) + order
                if all(cyc[(i + 1) % k] in adj[cyc[i]] for i in range(k)):
                    return k
    return None


def has_triangle_oracle(g):
    adj = adjacency(g)
    return any(
        c in adj[a] and b in adj[a] and c in adj[b]
        for a, b, c in combinations(range(g.n), 3)
    )


def has_quadrangle_oracle(g):
    adj = adjacency(g)
    for quad in combinations(range(g.n), 4):
        a = quad[0]
        for b, c, d in permutations(quad[1:]):
            if b in adj[a] and c in adj[b] and d in adj[c] and a in adj[d]:
                return True
    return False


def connected_labeled_count(n):
    """Count of connected labeled graphs via the standard subtraction recurrence."""
    memo = {1: 1}

    def c(k):
        if k not in memo:
            total = 2 ** comb(k, 2)
            for j in range(1, k):
                total -= comb(k - 1, j - 1) * c(j) * 2 ** comb(k - j, 2)
            memo[k] = total
        return memo[k]

    return c(n)


def pruefer_encode(g):
    """Encode a labeled tree by repeatedly stripping the smallest leaf."""
    adj = adjacency(g)
    deg = {u: len(adj[u]) for u in range(g.n)}
    seq = []
    for _ in range(g.n - 2):
        leaf = min(u for u in deg if deg[u] == 1)
        (parent,) = adj[leaf]
        seq.append(parent)
        adj[parent].discard(leaf)
        del deg[leaf], adj[leaf]
        deg[parent] -= 1
    return tuple(seq)
