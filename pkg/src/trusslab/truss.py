"""Exact truss decomposition by min-support peeling, truss-order validation,
and recovery of the decomposition from any truss-order oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .gadgets import blowup, disjoint_union, ladder_gadget
from .graph import BucketQueue, Graph, degeneracy_order
from .triangles import SupportTable, compute_supports


@dataclass(frozen=True)
class TrussDecomposition:
    """Per-edge trussness t(e) and the graph trussness t = max_e t(e).

    Uses the 0-based convention: a k-clique has trussness k-2, and a graph is
    triangle-free iff its trussness is 0.
    """

    edge_trussness: list[int]
    trussness: int


@dataclass(frozen=True)
class EdgeOrder:
    """An edge permutation with the residual support seen at each removal.

    ``forward_support[i]`` counts the triangles that ``order[i]`` forms with
    edges at positions >= i.  For an exact truss order this equals the
    minimum residual support of the whole suffix.
    """

    order: list[int]
    forward_support: list[int]


def _peel_from_supports(g: Graph, supports: SupportTable) -> tuple[TrussDecomposition, EdgeOrder]:
    m = g.m
    queue = BucketQueue(supports.support)
    removed = [False] * m
    t = [0] * m
    order: list[int] = []
    fwd: list[int] = []
    level = 0
    for _ in range(m):
        eid, s = queue.pop_min()
        if s > level:
            level = s
        t[eid] = level
        removed[eid] = True
        order.append(eid)
        fwd.append(s)
        u, v = g.pair(eid)
        if g.degree(u) > g.degree(v):
            u, v = v, u
        for z in g.neighbors(u):
            if g.has_edge(v, z):
                e1 = g.edge_id(u, z)
                if removed[e1]:
                    continue
                e2 = g.edge_id(v, z)
                if removed[e2]:
                    continue
                queue.decrease(e1)
                queue.decrease(e2)
    return TrussDecomposition(t, level), EdgeOrder(order, fwd)


def truss_decomposition(g: Graph) -> tuple[TrussDecomposition, EdgeOrder]:
    """Exact trussness of every edge, plus the peeling order that proves it.

    Repeatedly removes the minimum-support edge (ties by smallest edge id),
    decrementing the support of the two other edges of each triangle it
    closes; t(e) is the running maximum of removal-time supports.
    """
    return _peel_from_supports(g, compute_supports(g))


def trussness(g: Graph) -> int:
    return truss_decomposition(g)[0].trussness


def max_truss_subgraph(g: Graph, k: int) -> set[int]:
    """Edge ids of the maximal subgraph whose every edge has support >= k.

    This is exactly the set of edges with trussness >= k; empty when k
    exceeds the graph trussness.  k = 0 returns all edges.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    decomp, _ = truss_decomposition(g)
    return {eid for eid, t in enumerate(decomp.edge_trussness) if t >= k}


def suffix_support_profile(g: Graph, order: Sequence[int]) -> tuple[list[int], list[int]]:
    """Replay an edge order from the back.

    Returns, per position i, the support of order[i] in the graph induced by
    order[i:], and the minimum support over all of order[i:].  These are the
    two quantities that truss-order definitions (exact and approximate)
    constrain, so both validators below are built on this.
    """
    m = g.m
    if sorted(order) != list(range(m)):
        raise ValueError("order is not a permutation of the edge ids")
    present = [False] * m
    sup = [0] * m
    inserted: list[int] = []
    fwd = [0] * m
    min_sup = [0] * m
    for i in range(m - 1, -1, -1):
        eid = order[i]
        u, v = g.pair(eid)
        if g.degree(u) > g.degree(v):
            u, v = v, u
        for z in g.neighbors(u):
            if g.has_edge(v, z):
                e1 = g.edge_id(u, z)
                e2 = g.edge_id(v, z)
                if present[e1] and present[e2]:
                    sup[eid] += 1
                    sup[e1] += 1
                    sup[e2] += 1
        present[eid] = True
        inserted.append(eid)
        fwd[i] = sup[eid]
        min_sup[i] = min(sup[e] for e in inserted)
    return fwd, min_sup


def is_exact_truss_order(g: Graph, order: Sequence[int]) -> bool:
    """True iff each edge has minimum residual support at its removal."""
    fwd, min_sup = suffix_support_profile(g, order)
    return all(f == s for f, s in zip(fwd, min_sup))


OrderOracle = Callable[[Graph], "EdgeOrder | Sequence[int]"]


def decomposition_from_order(g: Graph, oracle: OrderOracle) -> TrussDecomposition:
    """Recover the full truss decomposition using only a truss-order oracle.

    Builds the 2-fold blow-up of g (every edge trussness becomes even, twice
    its base value) united with a ladder gadget realizing every trussness
    value in {0..2d+1}, where d is the degeneracy of g (an upper bound on its
    trussness).  In a truss order of the union, each blown edge sits between
    ladder edges of known consecutive trussness values, so the bracket pins
    its even trussness uniquely; halving yields the base value.

    The oracle's output is replay-validated; a non-truss-order raises
    ValueError.
    """
    if g.m == 0:
        return TrussDecomposition([], 0)

    d = degeneracy_order(g).degeneracy
    ladder = ladder_gadget(2 * d + 2)
    ladder_t = truss_decomposition(ladder)[0].edge_trussness
    achieved = set(ladder_t)
    missing = set(range(2 * d + 2)) - achieved
    if missing:
        raise RuntimeError(f"ladder gadget failed to realize trussness values {sorted(missing)}")

    blown = blowup(g, 2).materialize()
    union = disjoint_union(blown, ladder)
    raw = oracle(union)
    order = list(raw.order) if isinstance(raw, EdgeOrder) else list(raw)
    if not is_exact_truss_order(union, order):
        raise ValueError("oracle output is not a truss order of the gadget graph")

    # Trussness of the next ladder edge at or after each position.
    total = len(order)
    next_ladder = [0] * (total + 1)
    next_ladder[total] = -1
    for i in range(total - 1, -1, -1):
        eid = order[i]
        if eid >= blown.m:
            next_ladder[i] = ladder_t[eid - blown.m]
        else:
            next_ladder[i] = next_ladder[i + 1]

    t_base = [-1] * g.m
    prev = 0
    for i, eid in enumerate(order):
        if eid >= blown.m:
            prev = ladder_t[eid - blown.m]
            continue
        hi = next_ladder[i + 1]
        if hi < 0:
            raise RuntimeError("blown edge beyond the last ladder marker")
        evens = [val for val in range(prev, hi + 1) if val % 2 == 0]
        if len(evens) != 1:
            raise RuntimeError(f"ladder bracket [{prev}, {hi}] does not pin a single even value")
        base_eid = eid // 4
        half = evens[0] // 2
        if t_base[base_eid] == -1:
            t_base[base_eid] = half
        elif t_base[base_eid] != half:
            raise RuntimeError(f"mirror copies of edge {base_eid} decoded inconsistently")
    return TrussDecomposition(t_base, max(t_base))
