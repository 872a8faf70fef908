"""Approximate trussness estimation.

Two estimators live here.  The randomized one peels a sampled triangle
hypergraph to get an approximate truss order, then brackets the trussness by
planting disjoint marker cliques of known trussness x and watching where
their edges land in the order while x grows geometrically.  The combinatorial
one repeatedly discards edges whose support falls below a multiple of the
current triangle density; the best density seen is within a factor 3+eps of
the trussness, deterministically.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gadgets import add_spurious_cliques, blowup, complete_graph, disjoint_union
from .graph import BucketQueue, Graph, build_graph, degeneracy_order, forward_wedge_count
from .sampling import (
    HypergraphSample,
    SamplerConfig,
    effective_epsilon,
    initial_probability,
    sample_hypergraph,
    sample_size_target,
)
from .triangles import compute_supports
from .truss import _peel_from_supports, suffix_support_profile


@dataclass(frozen=True)
class ApproxTrussOrder:
    """Edge order obtained by min-degree peeling of a hypergraph sample.

    Always a permutation of all edge ids (vertices with no sampled hyperedge
    peel first, ties by id).  ``forward_degrees[i]`` is the residual sampled
    degree of ``order[i]`` at its removal; on a full (unsampled) hypergraph
    their maximum equals the graph trussness.
    """

    order: list[int]
    forward_degrees: list[int]
    certified_epsilon: float
    sample: HypergraphSample

    @property
    def degeneracy(self) -> int:
        return max(self.forward_degrees, default=0)


def hypergraph_degeneracy_order(
    sample: HypergraphSample, certified_epsilon: float = 0.0
) -> ApproxTrussOrder:
    """Peel the 3-uniform sample by minimum degree, ties by vertex id.

    Removing a vertex deletes its incident hyperedges, decrementing the two
    other endpoints of each; on the full triangle hypergraph this replays
    exact min-support edge peeling step for step.
    """
    m = sample.vertex_count
    hyperedges = sample.hyperedges
    degree = [0] * m
    incidence: list[list[int]] = [[] for _ in range(m)]
    for idx, (a, b, c) in enumerate(hyperedges):
        degree[a] += 1
        degree[b] += 1
        degree[c] += 1
        incidence[a].append(idx)
        incidence[b].append(idx)
        incidence[c].append(idx)
    queue = BucketQueue(degree)
    live = [True] * len(hyperedges)
    removed = [False] * m
    order: list[int] = []
    forward: list[int] = []
    for _ in range(m):
        v, d = queue.pop_min()
        removed[v] = True
        order.append(v)
        forward.append(d)
        for idx in incidence[v]:
            if not live[idx]:
                continue
            live[idx] = False
            for w in hyperedges[idx]:
                if w != v and not removed[w]:
                    queue.decrease(w)
    return ApproxTrussOrder(order, forward, certified_epsilon, sample)


def approx_truss_order(g: Graph, cfg: SamplerConfig) -> ApproxTrussOrder:
    """Sample the triangle hypergraph of g and peel it.

    When the sampler falls back to exact enumeration the result is an exact
    truss order of g, since peeling the full hypergraph coincides with
    min-support edge peeling.
    """
    info = degeneracy_order(g)
    sample = sample_hypergraph(g, info, cfg)
    return hypergraph_degeneracy_order(sample, cfg.epsilon)


def approx_order_holds(g: Graph, order: Sequence[int], epsilon: float) -> bool:
    """Check the defining inequality of a (1+eps)-approximate truss order.

    Every edge's forward support must be at most
    max(T/m, (1+eps) * minimum residual support of its suffix), with T and m
    taken from the graph the order was computed on.
    """
    if g.m == 0:
        return True
    fwd, min_sup = suffix_support_profile(g, order)
    density = Fraction(compute_supports(g).triangle_count, g.m)
    factor = 1 + Fraction(str(epsilon))
    return all(
        f <= density or f <= factor * s for f, s in zip(fwd, min_sup)
    )


def marker_test(order: "ApproxTrussOrder | Sequence[int]", spurious: Sequence[bool]) -> bool:
    """True iff some spurious edge precedes the last original edge."""
    ids = order.order if isinstance(order, ApproxTrussOrder) else order
    if len(ids) != len(spurious):
        raise ValueError(f"order has {len(ids)} edges but {len(spurious)} labels given")
    first_spurious = None
    last_original = None
    for pos, eid in enumerate(ids):
        if spurious[eid]:
            if first_spurious is None:
                first_spurious = pos
        else:
            last_original = pos
    if first_spurious is None or last_original is None:
        return False
    return first_spurious < last_original


@dataclass(frozen=True)
class EstimateResult:
    """Outcome of the marker-based trussness estimation.

    ``estimate`` is already divided back to the input graph's scale.  The
    exact flag marks runs certified to return the true value (triangle-free
    input, or a certification interval pinning a unique candidate).  The
    trace records each marker round as (x, test outcome); when every round's
    order came from the exact-enumeration fallback, the whole run was
    deterministic and seed-independent.
    """

    estimate: Fraction
    exact: bool
    iterations: int
    trace: list[tuple[int, bool]]
    all_rounds_fell_back: bool

    @property
    def value(self) -> float:
        return float(self.estimate)


def _round_order(g: Graph, eps: float, zeta: float, seed: int) -> tuple[list[int], bool]:
    """One marker round's edge order, with a provable-fallback fast path.

    The doubling loop can only stop early if the sample reaches the target
    size, and the sample never exceeds the triangle count; so when the target
    exceeds T (or the very first p is already >= 1) the fallback is certain
    and the exact peeling order (bit-identical to peeling the full
    hypergraph, same tie-breaks) is computed directly, skipping the
    hypergraph materialization.  Returns (order, fell_back).
    """
    info = degeneracy_order(g)
    W = forward_wedge_count(g, info)
    if W == 0:
        supports = compute_supports(g)
        return _peel_from_supports(g, supports)[1].order, True
    eff = effective_epsilon(eps, g.n)
    p0 = initial_probability(g.m, W, eff, zeta)
    if p0 >= 1.0:
        supports = compute_supports(g)
        return _peel_from_supports(g, supports)[1].order, True
    supports = compute_supports(g)
    if supports.triangle_count < sample_size_target(g.m, eff, zeta):
        return _peel_from_supports(g, supports)[1].order, True
    sample = sample_hypergraph(g, info, SamplerConfig(epsilon=eps, zeta=zeta, seed=seed))
    if sample.fell_back_to_exact:
        return _peel_from_supports(g, supports)[1].order, True
    return hypergraph_degeneracy_order(sample, eps).order, False


def _ceil_fraction(value: Fraction) -> int:
    return -((-value.numerator) // value.denominator)


def estimate_trussness(
    g_in: Graph,
    epsilon: float,
    cfg: SamplerConfig | None = None,
    pseudocode_growth: bool = False,
) -> EstimateResult:
    """Estimate the trussness of g_in within (1 +- epsilon), w.h.p.

    The input is blown up 6-fold and united with one triangle, so the working
    graph G has trussness 6*t (or 1 when t = 0) and accuracy eps' = eps/6
    suffices.  Marker cliques of trussness x are appended to G and an
    approximate truss order of the augmented graph is computed; as long as
    some marker edge precedes the last edge of G, x is recorded and grown by
    a factor (1 + eps').  The final estimate is mapped back by dividing by 6;
    if the bracketing interval around it contains a single multiple of 6 the
    returned value is certified exact.

    ``pseudocode_growth`` grows x by (1 + epsilon) per round instead of
    (1 + eps'); coarser, but cheaper on high-trussness inputs.
    """
    if not (0.0 < epsilon < 1.0):
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    if cfg is None:
        cfg = SamplerConfig(epsilon=epsilon)

    eps_exact = Fraction(str(epsilon))
    eps_prime = eps_exact / 6
    growth = 1 + (eps_exact if pseudocode_growth else eps_prime)
    eps_prime_float = float(eps_prime)

    working = disjoint_union(blowup(g_in, 6).materialize(), complete_graph(3))
    d_working = degeneracy_order(working).degeneracy
    x_cap = min(2 * d_working + 2, math.ceil(2 * math.sqrt(working.m)))

    x = 1
    t_tilde = 1
    trace: list[tuple[int, bool]] = []
    all_fell_back = True
    base = random.Random(cfg.seed).randrange(2**62)  # decorrelate round seeds
    while True:
        augmented = add_spurious_cliques(working, x)
        order, fell_back = _round_order(
            augmented.graph, eps_prime_float, cfg.zeta, base + len(trace)
        )
        all_fell_back = all_fell_back and fell_back
        hit = marker_test(order, augmented.is_spurious)
        trace.append((x, hit))
        if not hit:
            break
        t_tilde = x
        nxt = _ceil_fraction(growth * x)
        if nxt > x_cap:
            break
        x = nxt

    if t_tilde < 2:
        return EstimateResult(Fraction(0), True, len(trace), trace, all_fell_back)
    low = Fraction(t_tilde) / (1 + eps_prime)
    high = (t_tilde + 1) * (1 + 3 * eps_prime)
    first = _ceil_fraction(low / 6)
    last = (high / 6).numerator // (high / 6).denominator
    if first == last:
        return EstimateResult(Fraction(first), True, len(trace), trace, all_fell_back)
    return EstimateResult(Fraction(t_tilde, 6), False, len(trace), trace, all_fell_back)


@dataclass(frozen=True)
class ThresholdRound:
    edges: int
    triangles: int
    density: Fraction


def threshold_rounds(g: Graph, epsilon: float) -> list[ThresholdRound]:
    """Density trajectory of iterated support thresholding with c = 3+eps.

    Each round recomputes all supports combinatorially, records the triangle
    density T_i/m_i, and deletes every edge of support <= c * T_i/m_i; since
    supports sum to 3*T_i, at most a 3/c fraction of edges survives, so the
    loop ends after O(log m) rounds.
    """
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    c = 3 + Fraction(str(epsilon))
    rounds: list[ThresholdRound] = []
    node_count = g.n
    current = g
    while current.m > 0:
        table = compute_supports(current)
        density = Fraction(table.triangle_count, current.m)
        rounds.append(ThresholdRound(current.m, table.triangle_count, density))
        cutoff = c * density
        survivors = [
            pair
            for eid, pair in enumerate(current.edges())
            if table.support[eid] > cutoff
        ]
        current = build_graph(survivors, node_count=node_count)
    return rounds


def threshold_estimate(g: Graph, epsilon: float) -> Fraction:
    """Deterministic estimate t~ with t~ <= trussness <= (3+eps) * t~."""
    rounds = threshold_rounds(g, epsilon)
    return max((r.density for r in rounds), default=Fraction(0))
