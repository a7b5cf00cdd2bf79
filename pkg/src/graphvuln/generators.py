"""Deterministic constructors for named graph families and test corpora.

Includes the classic families (paths, cycles, cliques, stars, bistars),
pendant-star trees, the Petersen graph, Pruefer decoding for exhaustive
labeled-tree sweeps, exhaustive connected-graph enumeration for small n,
and a seeded random connected graph built on a fixed, portable PRNG
(splitmix64) so corpora reproduce bit-identically anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, _graph_from_edge_arrays

_MASK64 = (1 << 64) - 1

ENUM_MAX_N = 6


def _edges_to_graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    if not edges:
        return _graph_from_edge_arrays(n, np.empty(0, np.int64), np.empty(0, np.int64))
    arr = np.asarray(edges, dtype=np.int64)
    return _graph_from_edge_arrays(n, arr[:, 0], arr[:, 1])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got n={n}")
    return _edges_to_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got n={n}")
    return _edges_to_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got n={n}")
    return _edges_to_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices, centered at vertex 0."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got n={n}")
    return _edges_to_graph(n, [(0, i) for i in range(1, n)])


def bistar_graph(p: int, q: int) -> Graph:
    """Two adjacent centers 0 and 1 carrying p and q pendant leaves."""
    if p < 0 or q < 0:
        raise ValueError(f"leaf counts must be >= 0, got p={p}, q={q}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return _edges_to_graph(p + q + 2, edges)


def pentagon_graph() -> Graph:
    return cycle_graph(5)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i <-> i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return _edges_to_graph(10, edges)


@dataclass(frozen=True)
class PendantSpec:
    """Pendant counts per branch of a star whose leaves grow pendants.

    `pendants[i]` pendant vertices are attached to branch vertex i+1 of a
    star with len(pendants) branches. Counts are canonicalized to
    non-increasing order; `was_sorted` records that the input needed it.
    """

    pendants: tuple[int, ...]
    was_sorted: bool = field(default=False, compare=False)

    def __post_init__(self):
        counts = tuple(int(r) for r in self.pendants)
        if len(counts) < 2:
            raise ValueError(f"need at least 2 branches, got {len(counts)}")
        if any(r < 0 for r in counts):
            raise ValueError(f"pendant counts must be >= 0, got {counts}")
        ordered = tuple(sorted(counts, reverse=True))
        object.__setattr__(self, "pendants", ordered)
        object.__setattr__(self, "was_sorted", ordered != counts)

    @property
    def branch_count(self) -> int:
        return len(self.pendants)

    @property
    def n(self) -> int:
        return 1 + len(self.pendants) + sum(self.pendants)


def pendant_tree(spec: PendantSpec | Sequence[int]) -> Graph:
    """Tree from a pendant spec: center 0, branches 1..D, then pendants.

    Pendant vertices are numbered consecutively from D+1, branch by branch,
    so the layout is reproducible.
    """
    if not isinstance(spec, PendantSpec):
        spec = PendantSpec(tuple(spec))
    d_ = spec.branch_count
    edges = [(0, i) for i in range(1, d_ + 1)]
    nxt = d_ + 1
    for i, r in enumerate(spec.pendants, start=1):
        for _ in range(r):
            edges.append((i, nxt))
            nxt += 1
    return _edges_to_graph(spec.n, edges)


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    """Decode a Pruefer sequence into the unique labeled tree it encodes."""
    n = len(seq) + 2
    deg = [1] * n
    for x in seq:
        x = int(x)
        if not 0 <= x < n:
            raise ValueError(f"sequence entry {x} out of range for n={n}")
        deg[x] += 1
    u_arr = np.empty(n - 1, np.int64)
    v_arr = np.empty(n - 1, np.int64)
    ptr = 0
    leaf = -1
    for k, x in enumerate(seq):
        x = int(x)
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        u_arr[k] = leaf
        v_arr[k] = x
        deg[leaf] -= 1
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
    last = [u for u in range(n) if deg[u] == 1]
    u_arr[n - 2] = last[0]
    v_arr[n - 2] = last[1]
    return _graph_from_edge_arrays(n, u_arr, v_arr)


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices, in Pruefer order."""
    if n < 2:
        raise ValueError(f"labeled tree enumeration needs n >= 2, got n={n}")
    if n == 2:
        yield tree_from_pruefer(())
        return
    seq = [0] * (n - 2)
    while True:
        yield tree_from_pruefer(seq)
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices, in edge-bitmask order.

    Capped at n <= 6: the 2^15 edge subsets at n = 6 are the largest sweep
    this exhaustive scheme is meant for.
    """
    if n > ENUM_MAX_N:
        raise ValueError(f"exhaustive enumeration capped at n={ENUM_MAX_N}, got n={n}")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        reach = 1
        while True:
            grown = reach
            probe = reach
            while probe:
                v = (probe & -probe).bit_length() - 1
                grown |= adj[v]
                probe &= probe - 1
            if grown == reach:
                break
            reach = grown
        if reach != full:
            continue
        yield _edges_to_graph(
            n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        )


class SplitMix64:
    """splitmix64 PRNG: fixed published constants, portable across hosts."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound) via multiply-shift reduction."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return (self.next_u64() * bound) >> 64


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random labeled tree (random Pruefer sequence) plus extra distinct edges.

    Fully determined by (n, extra_edges, seed).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    max_extra = n * (n - 1) // 2 - (n - 1)
    if not 0 <= extra_edges <= max_extra:
        raise ValueError(
            f"extra_edges={extra_edges} infeasible for n={n} (max {max_extra})"
        )
    rng = SplitMix64(seed)
    if n == 1:
        return _edges_to_graph(1, [])
    tree = tree_from_pruefer([rng.below(n) for _ in range(n - 2)])
    if extra_edges == 0:
        return tree
    present = set(tree.edges())
    candidates = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in present
    ]
    for i in range(extra_edges):
        j = i + rng.below(len(candidates) - i)
        candidates[i], candidates[j] = candidates[j], candidates[i]
    edges = sorted(present | set(candidates[:extra_edges]))
    return _edges_to_graph(n, edges)
