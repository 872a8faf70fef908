"""Independent brute-force oracles.

Everything here recomputes quantities by definition (exhaustive enumeration,
subset sweeps, naive fixed points) without touching the peeling/sampling code
paths under test, so expected values stay honest.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from trusslab.graph import Graph


def brute_triangles(g: Graph) -> set[tuple[int, int, int]]:
    """All triangles as sorted node triples, by cubic enumeration."""
    out = set()
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            out.add((a, b, c))
    return out


def brute_supports(g: Graph) -> list[int]:
    """Per-edge common-neighbor counts by direct set intersection."""
    sets = [set(g.neighbors(u)) for u in range(g.n)]
    return [len(sets[u] & sets[v]) for u, v in g.edges()]


def brute_degeneracy(g: Graph) -> int:
    """max over induced subgraphs of the minimum degree (exponential)."""
    best = 0
    nodes = list(range(g.n))
    for r in range(1, g.n + 1):
        for subset in combinations(nodes, r):
            chosen = set(subset)
            mindeg = min(sum(1 for v in g.neighbors(u) if v in chosen) for u in subset)
            best = max(best, mindeg)
    return best


def brute_forward_wedges(g: Graph, order: list[int]) -> int:
    """Count wedges whose center precedes both endpoints, by enumeration."""
    pos = {u: i for i, u in enumerate(order)}
    count = 0
    for u in range(g.n):
        for a, b in combinations(g.neighbors(u), 2):
            if pos[u] < pos[a] and pos[u] < pos[b]:
                count += 1
    return count


def _triangle_edge_masks(g: Graph) -> list[int]:
    masks = []
    for a, b, c in brute_triangles(g):
        masks.append(
            (1 << g.edge_id(a, b)) | (1 << g.edge_id(a, c)) | (1 << g.edge_id(b, c))
        )
    return masks


def trussness_by_subsets(g: Graph) -> list[int]:
    """t(e) = max over edge subsets containing e of the subset's min support.

    Vectorized over all 2^m subsets; meant for m <= 16 or so.
    """
    m = g.m
    if m == 0:
        return []
    if m > 20:
        raise ValueError("subset oracle limited to small edge counts")
    size = 1 << m
    subsets = np.arange(size, dtype=np.int64)
    sups = np.zeros((m, size), dtype=np.int16)
    for mask in _triangle_edge_masks(g):
        contained = (subsets & mask) == mask
        for e in range(m):
            if mask >> e & 1:
                sups[e][contained] += 1
    sentinel = np.int16(30000)
    in_subset = np.zeros((m, size), dtype=bool)
    for e in range(m):
        in_subset[e] = (subsets >> e & 1).astype(bool)
    min_sup = np.where(in_subset, sups, sentinel).min(axis=0)
    return [int(min_sup[in_subset[e]].max()) for e in range(m)]


def max_triangle_density(g: Graph) -> Fraction:
    """max over nonempty edge subsets S of (triangles within S) / |S|."""
    m = g.m
    if m == 0:
        return Fraction(0)
    if m > 22:
        raise ValueError("density oracle limited to small edge counts")
    size = 1 << m
    subsets = np.arange(size, dtype=np.int64)
    triangles = np.zeros(size, dtype=np.int32)
    for mask in _triangle_edge_masks(g):
        triangles[(subsets & mask) == mask] += 1
    popcount = np.zeros(size, dtype=np.int8)
    for e in range(m):
        popcount += (subsets >> e & 1).astype(np.int8)
    # Distinct small-integer ratios differ by >= 1/(m^2), far above float
    # error, so the float argmax picks the true maximizer.
    density = np.where(popcount > 0, triangles / np.maximum(popcount, 1), 0.0)
    best = int(np.argmax(density))
    if popcount[best] == 0:
        return Fraction(0)
    return Fraction(int(triangles[best]), int(popcount[best]))


def fixed_point_truss_edges(g: Graph, k: int) -> set[int]:
    """Repeatedly delete edges of support < k until stable (naive)."""
    alive = set(range(g.m))
    sets = [set(g.neighbors(u)) for u in range(g.n)]

    def support(eid: int) -> int:
        u, v = g.pair(eid)
        count = 0
        for z in sets[u] & sets[v]:
            if g.edge_id(u, z) in alive and g.edge_id(v, z) in alive:
                count += 1
        return count

    changed = True
    while changed:
        changed = False
        for eid in sorted(alive):
            if support(eid) < k:
                alive.discard(eid)
                changed = True
    return alive


def replay_min_degree_order(g: Graph, order: list[int]) -> bool:
    """Check that each node had minimum residual degree at its removal."""
    remaining = set(range(g.n))
    degree = {u: g.degree(u) for u in range(g.n)}
    for u in order:
        if degree[u] != min(degree[v] for v in remaining):
            return False
        remaining.discard(u)
        for v in g.neighbors(u):
            if v in remaining:
                degree[v] -= 1
    return not remaining
