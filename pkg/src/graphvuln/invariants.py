"""Vulnerability measures and degree-based indices.

Closeness sums 2^(-d(u,v)) over ordered vertex pairs; generalized closeness
replaces the base 1/2 by any alpha in (0, 1). Unreachable pairs contribute
zero (the alpha^infinity -> 0 convention). Both are evaluated from the
integer distance histogram in ascending-distance order, so values are
bit-reproducible and independent of the kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, DistanceSummary, distance_summary, girth


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in the open interval (0, 1), got {alpha}")
    return alpha


def gc_from_counts(dist_counts: dict[int, int], alpha: float) -> float:
    """Generalized closeness of a graph given its pair-distance histogram."""
    alpha = _check_alpha(alpha)
    total = 0.0
    for k in sorted(dist_counts):
        total += 2.0 * dist_counts[k] * alpha**k
    return total


def generalized_closeness(g: Graph, alpha: float) -> float:
    return gc_from_counts(distance_summary(g).dist_counts, alpha)


def closeness(g: Graph) -> float:
    """Sum over ordered pairs of 2^(-distance); equals GC at alpha = 1/2."""
    return generalized_closeness(g, 0.5)


def _edge_degree_products(g: Graph) -> np.ndarray:
    deg = g.degrees
    src = np.repeat(np.arange(g.n), deg)
    return deg[src], deg[g.indices]


def zagreb_m1(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    deg = g.degrees
    return int((deg * deg).sum())


def zagreb_m2(g: Graph) -> int:
    """Sum over edges of the product of endpoint degrees."""
    if g.m == 0:
        return 0
    du, dv = _edge_degree_products(g)
    return int((du * dv).sum()) // 2


def reduced_zagreb_m2(g: Graph) -> int:
    """Sum over edges of (d_u - 1)(d_v - 1)."""
    if g.m == 0:
        return 0
    du, dv = _edge_degree_products(g)
    return int(((du - 1) * (dv - 1)).sum()) // 2


def wiener_polarity(g: Graph, summary: DistanceSummary | None = None) -> int:
    """Number of unordered vertex pairs at distance exactly 3."""
    if summary is None:
        summary = distance_summary(g)
    return summary.dist_counts.get(3, 0)


def has_triangle(g: Graph) -> bool:
    """Direct edge-wise neighbor intersection, independent of the girth path."""
    nbr = [set(map(int, g.neighbors(u))) for u in range(g.n)]
    for u, v in g.edges():
        if nbr[u] & nbr[v]:
            return True
    return False


def has_quadrangle(g: Graph) -> bool:
    """A 4-cycle exists iff two vertices share at least two common neighbors."""
    seen: set[tuple[int, int]] = set()
    for x in range(g.n):
        row = g.neighbors(x)
        for u, v in combinations(map(int, row), 2):
            if (u, v) in seen:
                return True
            seen.add((u, v))
    return False


@dataclass(frozen=True)
class StructuralFlags:
    is_tree: bool
    triangle_free: bool
    quadrangle_free: bool
    girth_ge_7: bool
    is_moore_diam2: bool


def structural_flags(g: Graph, summary: DistanceSummary | None = None) -> StructuralFlags:
    if summary is None:
        summary = distance_summary(g)
    connected = summary.connected
    cyc = girth(g)
    if cyc is None:
        # Acyclic by edge count, so vacuously free of short cycles.
        tri_free = quad_free = True
    else:
        tri_free = not has_triangle(g)
        quad_free = not has_quadrangle(g)
    deg = g.degrees
    regular = g.n > 0 and int(deg.min()) == int(deg.max())
    k = int(deg[0]) if g.n else 0
    moore = (
        connected
        and regular
        and summary.diameter == 2
        and cyc == 5
        and g.n == k * k + 1
    )
    return StructuralFlags(
        is_tree=connected and g.m == g.n - 1,
        triangle_free=tri_free,
        quadrangle_free=quad_free,
        girth_ge_7=cyc is None or cyc >= 7,
        is_moore_diam2=moore,
    )


@dataclass(frozen=True)
class InvariantSet:
    n: int
    m: int
    connected: bool
    closeness: float
    gc_alpha: dict[float, float]
    m1: int
    m2: int
    rm2: int
    wiener_polarity: int
    girth: int | None
    flags: StructuralFlags


def compute_invariants(g: Graph, alphas: tuple[float, ...] = (0.5,)) -> InvariantSet:
    """Evaluate every measure and flag in one pass over the distance data."""
    summary = distance_summary(g)
    counts = summary.dist_counts
    return InvariantSet(
        n=g.n,
        m=g.m,
        connected=summary.connected,
        closeness=gc_from_counts(counts, 0.5),
        gc_alpha={float(a): gc_from_counts(counts, a) for a in alphas},
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
        rm2=reduced_zagreb_m2(g),
        wiener_polarity=wiener_polarity(g, summary),
        girth=girth(g),
        flags=structural_flags(g, summary),
    )
