"""Immutable simple undirected graphs and their metric invariants.

Vertices are dense 0-based indices. Adjacency is stored as CSR arrays
(`indptr`, `indices`) with neighbor lists sorted, which is what the BFS
kernels consume directly. Distances are exact integers; unreachable pairs
are reported as ``math.inf``, never as a large sentinel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import GraphInputError

INF = math.inf


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph: no loops, no multi-edges, symmetric adjacency."""

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples (materialized on demand)."""
        ind = self.indices
        ptr = self.indptr
        return tuple(
            tuple(int(w) for w in ind[ptr[u]:ptr[u + 1]]) for u in range(self.n)
        )

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.diff(self.indptr)
        deg.flags.writeable = False
        return deg

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and int(row[i]) == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as (u, v) with u < v, in lexicographic order."""
        ptr, ind = self.indptr, self.indices
        for u in range(self.n):
            for w in ind[ptr[u]:ptr[u + 1]]:
                if u < w:
                    yield u, int(w)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _graph_from_edge_arrays(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    """Build a Graph from trusted edge arrays (validated, deduplicated)."""
    row = np.concatenate((u, v))
    col = np.concatenate((v, u))
    order = np.lexsort((col, row))
    indices = col[order].astype(np.int32)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(row, minlength=n), out=indptr[1:])
    return Graph(n=n, m=int(u.size), indptr=_freeze(indptr), indices=_freeze(indices))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a Graph on vertices 0..n-1.

    Duplicate edges collapse to one; self-loops and out-of-range endpoints
    raise GraphInputError.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for k, (a, b) in enumerate(edges):
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphInputError(f"edge {k}: endpoint out of range for n={n}: ({a}, {b})")
        if a == b:
            raise GraphInputError(f"edge {k}: self-loop at vertex {a}")
        seen.add((a, b) if a < b else (b, a))
    if not seen:
        return _graph_from_edge_arrays(
            n, np.empty(0, np.int64), np.empty(0, np.int64)
        )
    arr = np.array(sorted(seen), dtype=np.int64)
    return _graph_from_edge_arrays(n, arr[:, 0], arr[:, 1])


@dataclass(frozen=True)
class DistanceSummary:
    """Distance distribution and eccentricity data from an all-pairs BFS sweep.

    dist_counts[k] is the number of unordered vertex pairs at distance
    exactly k (finite distances only). For disconnected graphs every
    eccentricity, the radius and the diameter are ``math.inf``.
    """

    dist_counts: dict[int, int]
    ecc: tuple[float, ...]
    radius: float
    diameter: float
    connected: bool


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distances from `source`; unreachable vertices get ``math.inf``."""
    if not (0 <= source < g.n):
        raise GraphInputError(f"source {source} out of range for n={g.n}")
    dist = kernels.sssp(g.indptr, g.indices, g.n, source)
    return [int(d) if d >= 0 else INF for d in dist]


def distance_summary(g: Graph) -> DistanceSummary:
    if g.n == 0:
        return DistanceSummary({}, (), 0, 0, True)
    ecc_arr, hist = kernels.distance_stats(g.indptr, g.indices, g.n)
    ecc = tuple(int(e) if e >= 0 else INF for e in ecc_arr)
    counts = {int(k): int(hist[k]) for k in range(1, g.n) if hist[k]}
    return DistanceSummary(
        dist_counts=counts,
        ecc=ecc,
        radius=min(ecc),
        diameter=max(ecc),
        connected=bool((ecc_arr >= 0).all()),
    )


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    dist = kernels.sssp(g.indptr, g.indices, g.n, 0)
    return bool((dist >= 0).all())


def girth(g: Graph) -> int | None:
    """Length of the shortest cycle, or None for acyclic graphs."""
    if g.n == 0:
        return None
    ncomp = kernels.component_count(g.indptr, g.indices, g.n)
    if g.m == g.n - ncomp:
        return None
    return kernels.girth_scan(g.indptr, g.indices, g.n)
