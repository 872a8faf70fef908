"""Triangle-hypergraph sampling by forward-wedge skipping.

The triangle hypergraph of a graph g has one vertex per edge of g and one
3-vertex hyperedge per triangle; a vertex's degree equals its edge's support,
so hypergraph peeling mirrors truss peeling.  Rather than scanning all W
forward wedges to Bernoulli-sample the triangles, the sampler jumps between
accepted wedges with geometric skips, paying only for what it keeps, and
doubles the acceptance probability until the sample is large enough to rank
edge supports reliably.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator

from .graph import DegeneracyInfo, Graph, build_graph, forward_wedge_count


@dataclass(frozen=True)
class SamplerConfig:
    """Knobs shared by all randomized procedures.

    zeta scales the target sample size; the default 110 honors the analysis
    constant that certifies the estimates, at the price of falling back to
    exact enumeration on small graphs (the formula then pushes p past 1).
    Smaller zeta trades certification for an actually-engaged random path.
    """

    epsilon: float
    zeta: float = 110.0
    seed: int = 0
    stop_threshold_factor: float = field(default=1.5, repr=False)

    def __post_init__(self):
        if not (0.0 < self.epsilon < 1.0):
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if self.zeta <= 0.0:
            raise ValueError(f"zeta must be positive, got {self.zeta}")
        if self.stop_threshold_factor != 1.5:
            raise ValueError("stop threshold factor is fixed at 3/2")


@dataclass(frozen=True)
class HypergraphSample:
    """A Bernoulli sample of the triangle hypergraph.

    Hyperedges are canonical ascending edge-id triples; no duplicates are
    possible because each triangle is visited through its unique forward
    wedge.  When the probability-doubling loop would push p to 1 or beyond,
    ``fell_back_to_exact`` is set and ``hyperedges`` holds all triangles.
    """

    vertex_count: int
    hyperedges: list[tuple[int, int, int]]
    realized_p: float
    fell_back_to_exact: bool
    rng_seed: int


def geometric_skip(p: float, rng: random.Random) -> int:
    """Geometric(p) variate on {1, 2, ...}: trials until the first success.

    Inverse transform ceil(ln U / ln(1-p)) with U uniform on (0, 1); p = 1
    always returns 1.
    """
    if not (0.0 < p <= 1.0):
        raise ValueError(f"p must be in (0, 1], got {p}")
    if p == 1.0:
        return 1
    u = rng.random()
    while u <= 0.0:
        u = rng.random()
    return max(1, math.ceil(math.log(u) / math.log1p(-p)))


class _WedgeSpace:
    """Canonical enumeration of the forward wedges of a graph.

    Centers are visited in degeneracy-order position; within a center, its
    forward neighbors are sorted by position and pairs enumerated in
    lexicographic index order.  This gives every wedge a fixed serial number,
    so a geometric skip sequence selects a reproducible wedge subset.
    """

    __slots__ = ("g", "centers", "fwd", "starts", "total")

    def __init__(self, g: Graph, info: DegeneracyInfo):
        pos = info.positions
        centers: list[int] = []
        fwd: list[list[int]] = []
        starts: list[int] = []
        total = 0
        for u in info.order:
            pu = pos[u]
            lst = [v for v in g.neighbors(u) if pos[v] > pu]
            if len(lst) < 2:
                continue
            lst.sort(key=pos.__getitem__)
            centers.append(u)
            fwd.append(lst)
            starts.append(total)
            total += len(lst) * (len(lst) - 1) // 2
        self.g = g
        self.centers = centers
        self.fwd = fwd
        self.starts = starts
        self.total = total

    def iter_closed(self) -> Iterator[tuple[int, int, int]]:
        """All closed wedges, i.e. every triangle once, in serial order."""
        g = self.g
        for u, lst in zip(self.centers, self.fwd):
            k = len(lst)
            for i in range(k):
                a = lst[i]
                for j in range(i + 1, k):
                    b = lst[j]
                    if g.has_edge(a, b):
                        yield _hyperedge(g, u, a, b)

    def closed_at(self, serial: int, cursor: int) -> tuple[tuple[int, int, int] | None, int]:
        """Wedge at a serial number, or None if open.

        ``cursor`` is the caller's last center index; serials are probed in
        increasing order, so the center scan resumes instead of restarting.
        """
        starts = self.starts
        fwd = self.fwd
        while cursor + 1 < len(starts) and starts[cursor + 1] <= serial:
            cursor += 1
        lst = fwd[cursor]
        local = serial - starts[cursor]
        row = len(lst) - 1
        i = 0
        while local >= row:
            local -= row
            i += 1
            row -= 1
        a = lst[i]
        b = lst[i + 1 + local]
        g = self.g
        if g.has_edge(a, b):
            return _hyperedge(g, self.centers[cursor], a, b), cursor
        return None, cursor


def _hyperedge(g: Graph, u: int, a: int, b: int) -> tuple[int, int, int]:
    x = g.edge_id(u, a)
    y = g.edge_id(u, b)
    z = g.edge_id(a, b)
    if x > y:
        x, y = y, x
    if y > z:
        y, z = z, y
        if x > y:
            x, y = y, x
    return (x, y, z)


def _skip_pass(space: _WedgeSpace, p: float, rng: random.Random) -> list[tuple[int, int, int]]:
    out: list[tuple[int, int, int]] = []
    serial = geometric_skip(p, rng) - 1
    cursor = 0
    while serial < space.total:
        hyper, cursor = space.closed_at(serial, cursor)
        if hyper is not None:
            out.append(hyper)
        serial += geometric_skip(p, rng)
    return out


def sample_wedges_fixed_p(
    g: Graph, info: DegeneracyInfo, p: float, seed: int
) -> HypergraphSample:
    """One skip pass at a fixed probability, no doubling.

    Each triangle of g lands in the sample independently with probability p;
    exposed so the Bernoulli equivalence of the skip enumeration can be
    tested head-on.
    """
    if not (0.0 < p <= 1.0):
        raise ValueError(f"p must be in (0, 1], got {p}")
    space = _WedgeSpace(g, info)
    rng = random.Random(seed)
    return HypergraphSample(g.m, _skip_pass(space, p, rng), p, False, seed)


def initial_probability(m: int, wedges: int, epsilon: float, zeta: float) -> float:
    return zeta * m * math.log(m) / (wedges * epsilon * epsilon)


def sample_size_target(m: int, epsilon: float, zeta: float, factor: float = 1.5) -> float:
    return factor * zeta * m * math.log(m) / (epsilon * epsilon)


def effective_epsilon(epsilon: float, n: int) -> float:
    """Accuracies finer than 1/n buy nothing; clamp there."""
    return max(epsilon, 1.0 / n) if n > 0 else epsilon


def sample_hypergraph(g: Graph, info: DegeneracyInfo, cfg: SamplerConfig) -> HypergraphSample:
    """Sample the triangle hypergraph with probability doubling.

    Starts from p = zeta * m * log(m) / (W * eps^2) and repeats single skip
    passes, doubling p (and discarding the previous pass entirely) until the
    sample holds at least 1.5 * zeta * m * log(m) / eps^2 hyperedges.  If p
    reaches 1 first, all triangles are enumerated instead and the fallback
    flag is set.  Identical (graph, config) inputs give identical samples.
    """
    W = forward_wedge_count(g, info)
    if W == 0:
        return HypergraphSample(g.m, [], 1.0, True, cfg.seed)
    eps = effective_epsilon(cfg.epsilon, g.n)
    p = initial_probability(g.m, W, eps, cfg.zeta)
    target = sample_size_target(g.m, eps, cfg.zeta, cfg.stop_threshold_factor)
    space = _WedgeSpace(g, info)
    rng = random.Random(cfg.seed)
    while p < 1.0:
        sample = _skip_pass(space, p, rng)
        if len(sample) >= target:
            return HypergraphSample(g.m, sample, p, False, cfg.seed)
        p *= 2.0
    return HypergraphSample(g.m, list(space.iter_closed()), 1.0, True, cfg.seed)


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) via the same geometric-skip machinery.

    Pairs (i, j), i < j, are serialized lexicographically and visited by
    skips, so the cost is proportional to the number of edges produced.
    Deterministic per seed.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p must be in [0, 1], got {p}")
    if n < 2 or p == 0.0:
        return build_graph([], node_count=n)
    if p == 1.0:
        return build_graph(
            [(i, j) for i in range(n) for j in range(i + 1, n)], node_count=n
        )
    rng = random.Random(seed)
    total = n * (n - 1) // 2
    edges: list[tuple[int, int]] = []
    row = 0
    row_start = 0
    row_len = n - 1
    serial = geometric_skip(p, rng) - 1
    while serial < total:
        while serial >= row_start + row_len:
            row_start += row_len
            row += 1
            row_len -= 1
        edges.append((row, row + 1 + (serial - row_start)))
        serial += geometric_skip(p, rng)
    return build_graph(edges, node_count=n)
