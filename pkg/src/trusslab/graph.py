"""Immutable simple-graph core: construction, navigation, degeneracy peeling."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Protocol, Sequence


class GraphView(Protocol):
    """Navigation contract shared by concrete graphs and implicit gadget views.

    The five operations must be mutually consistent: ``degree(u)`` equals the
    length of ``neighbors(u)``, and ``has_edge(u, v)`` agrees with membership
    of ``v`` in ``neighbors(u)``.
    """

    n: int

    def edges(self) -> Iterator[tuple[int, int]]: ...

    def has_edge(self, u: int, v: int) -> bool: ...

    def neighbors(self, u: int) -> Sequence[int]: ...

    def ith_neighbor(self, u: int, i: int) -> int: ...

    def degree(self, u: int) -> int: ...


class Graph:
    """Undirected simple graph with dense edge identifiers.

    Nodes are ``0..n-1``; edge ids are ``0..m-1`` in first-appearance order of
    the (deduplicated) input edge list.  Neighbor lists are sorted ascending.
    Instances are immutable after construction and safe to share across
    threads.
    """

    __slots__ = ("n", "m", "_adj", "_adj_sets", "_pairs", "_ids")

    def __init__(self, n: int, pairs: list[tuple[int, int]]):
        adj: list[list[int]] = [[] for _ in range(n)]
        ids: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(pairs):
            adj[u].append(v)
            adj[v].append(u)
            ids[(u, v)] = eid
        for lst in adj:
            lst.sort()
        self.n = n
        self.m = len(pairs)
        self._adj = adj
        self._adj_sets = [set(lst) for lst in adj]
        self._pairs = pairs
        self._ids = ids

    def nodes(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        return iter(self._pairs)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n):
            return False
        return v in self._adj_sets[u]

    def neighbors(self, u: int) -> list[int]:
        return self._adj[u]

    def ith_neighbor(self, u: int, i: int) -> int:
        return self._adj[u][i]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def pair(self, eid: int) -> tuple[int, int]:
        return self._pairs[eid]

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge {u, v}; raises KeyError if absent."""
        return self._ids[(u, v) if u < v else (v, u)]

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[tuple[int, int]], node_count: int | None = None) -> Graph:
    """Build a simple graph from an edge list.

    Duplicate edges and self-loops are silently dropped; edge ids follow the
    first appearance of each surviving edge.  ``node_count`` may enlarge the
    node universe beyond ``max(endpoint) + 1`` (isolated nodes are permitted
    but never created implicitly).
    """
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_node = -1
    for u, v in edges:
        if u < 0 or v < 0:
            raise ValueError(f"negative node id in edge ({u}, {v})")
        if u > max_node:
            max_node = u
        if v > max_node:
            max_node = v
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        pairs.append(key)
    n = max_node + 1
    if node_count is not None:
        if node_count < n:
            raise ValueError(f"node_count {node_count} smaller than max node id {max_node}")
        n = node_count
    return Graph(n, pairs)


class BucketQueue:
    """Monotone bucket min-queue used by every peeling in this package.

    Keys are small non-negative integers that only move down (one unit per
    ``decrease`` call), which lets the scan pointer resume where it left off;
    it is pulled back whenever a decrement dips below it.  Ties break on the
    smallest item id via a lazy per-bucket heap: stale entries are discarded
    when popped, so each key change costs one push.
    """

    __slots__ = ("_key", "_alive", "_buckets", "_cur", "_count")

    def __init__(self, keys: Iterable[int]):
        self._key = list(keys)
        self._alive = [True] * len(self._key)
        self._buckets: dict[int, list[int]] = {}
        for item, k in enumerate(self._key):
            if k < 0:
                raise ValueError("bucket keys must be non-negative")
            self._buckets.setdefault(k, []).append(item)
        for heap in self._buckets.values():
            heapq.heapify(heap)
        self._cur = 0
        self._count = len(self._key)

    def __len__(self) -> int:
        return self._count

    def pop_min(self) -> tuple[int, int]:
        """Remove and return ``(item, key)`` with the smallest (key, item)."""
        if self._count == 0:
            raise IndexError("pop from empty BucketQueue")
        while True:
            heap = self._buckets.get(self._cur)
            if not heap:
                self._buckets.pop(self._cur, None)
                self._cur += 1
                continue
            item = heap[0]
            if not self._alive[item] or self._key[item] != self._cur:
                heapq.heappop(heap)  # stale
                continue
            heapq.heappop(heap)
            self._alive[item] = False
            self._count -= 1
            return item, self._cur

    def decrease(self, item: int) -> None:
        """Decrement a live item's key by one."""
        if not self._alive[item]:
            return
        k = self._key[item] - 1
        if k < 0:
            raise ValueError(f"key of item {item} would become negative")
        self._key[item] = k
        heapq.heappush(self._buckets.setdefault(k, []), item)
        if k < self._cur:
            self._cur = k

    def is_live(self, item: int) -> bool:
        return self._alive[item]


@dataclass(frozen=True)
class DegeneracyInfo:
    """Min-degree peeling order of the nodes.

    ``forward_degrees[u]`` is the residual degree of ``u`` at its removal,
    which equals the number of its neighbors placed later in ``order``.  The
    degeneracy is the maximum forward degree.
    """

    order: list[int]
    degeneracy: int
    forward_degrees: list[int]
    positions: list[int]


def degeneracy_order(g: GraphView) -> DegeneracyInfo:
    """Peel nodes by minimum residual degree, ties by smallest node id."""
    n = g.n
    queue = BucketQueue(g.degree(u) for u in range(n))
    order: list[int] = []
    forward = [0] * n
    positions = [0] * n
    removed = [False] * n
    degeneracy = 0
    for rank in range(n):
        u, d = queue.pop_min()
        removed[u] = True
        order.append(u)
        positions[u] = rank
        forward[u] = d
        if d > degeneracy:
            degeneracy = d
        for v in g.neighbors(u):
            if not removed[v]:
                queue.decrease(v)
    return DegeneracyInfo(order, degeneracy, forward, positions)


def forward_wedge_count(g: GraphView, info: DegeneracyInfo) -> int:
    """Number of wedges whose center precedes both endpoints in the order.

    Each forward degree d contributes d*(d-1)/2 wedges; every triangle of the
    graph corresponds to exactly one (closed) forward wedge.
    """
    return sum(d * (d - 1) // 2 for d in info.forward_degrees)
