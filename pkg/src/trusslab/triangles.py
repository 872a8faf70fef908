"""Triangle counting, listing, and per-edge support."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graph import Graph, degeneracy_order


@dataclass(frozen=True)
class SupportTable:
    """Per-edge triangle counts.  The supports of all edges sum to 3*T."""

    support: list[int]
    triangle_count: int


@dataclass(frozen=True, order=True)
class Triangle:
    """A triangle in canonical form: node ids and edge ids both ascending."""

    nodes: tuple[int, int, int]
    edges: tuple[int, int, int]


def make_triangle(g: Graph, a: int, b: int, c: int) -> Triangle:
    x, y, z = sorted((a, b, c))
    eids = sorted((g.edge_id(x, y), g.edge_id(x, z), g.edge_id(y, z)))
    return Triangle((x, y, z), (eids[0], eids[1], eids[2]))


def support_of_edge(g: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)|, walking the smaller neighborhood."""
    if g.degree(u) > g.degree(v):
        u, v = v, u
    hits = 0
    for z in g.neighbors(u):
        if g.has_edge(v, z):
            hits += 1
    return hits


def compute_supports(g: Graph) -> SupportTable:
    """Exact support of every edge; the triangle count is their sum / 3."""
    support = [0] * g.m
    total = 0
    for eid, (u, v) in enumerate(g.edges()):
        s = support_of_edge(g, u, v)
        support[eid] = s
        total += s
    return SupportTable(support, total // 3)


def list_triangles(g: Graph, sink: Optional[Callable[[Triangle], None]] = None) -> int:
    """Emit each triangle exactly once in canonical form; return the count.

    Enumerates closed forward wedges in degeneracy order, so every triangle
    is found at its earliest-ordered node only.
    """
    info = degeneracy_order(g)
    pos = info.positions
    count = 0
    for u in info.order:
        pu = pos[u]
        fwd = [v for v in g.neighbors(u) if pos[v] > pu]
        fwd.sort(key=pos.__getitem__)
        for i, a in enumerate(fwd):
            for b in fwd[i + 1 :]:
                if g.has_edge(a, b):
                    count += 1
                    if sink is not None:
                        sink(make_triangle(g, u, a, b))
    return count


def triangle_of_wedge(g: Graph, center: int, a: int, b: int) -> Triangle | None:
    """The triangle closing the wedge a-center-b, or None if {a,b} is absent."""
    if a == b:
        raise ValueError("wedge endpoints must be distinct")
    if not g.has_edge(center, a) or not g.has_edge(center, b):
        raise ValueError(f"({a}, {b}) are not both neighbors of {center}")
    if not g.has_edge(a, b):
        return None
    return make_triangle(g, center, a, b)
