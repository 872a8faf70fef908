"""Edge-list persistence.

One edge per line as two whitespace-separated non-negative integers.  Lines
starting with '#' and blank lines are ignored.  An edge line may carry a
trailing ``# spurious`` marker, which round-trips through load/save so that
gadget-augmented graphs stay inspectable on disk.
"""

from __future__ import annotations

import sys
from typing import IO, Iterable, Sequence

from .graph import Graph, build_graph


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_edge_lines(lines: Iterable[str]) -> tuple[list[tuple[int, int]], list[bool]]:
    """Parse raw lines into (edges, spurious flags), both in input order."""
    edges: list[tuple[int, int]] = []
    flags: list[bool] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body, _, comment = line.partition("#")
        fields = body.split()
        if len(fields) != 2:
            raise EdgeListError(line_no, f"expected two node ids, got {body.strip()!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(line_no, f"non-integer node id in {body.strip()!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(line_no, f"negative node id in {body.strip()!r}")
        edges.append((u, v))
        flags.append("spurious" in comment)
    return edges, flags


def load_graph(source: str | IO[str]) -> tuple[Graph, list[bool]]:
    """Load a graph from a path, ``-`` (stdin), or an open text stream.

    Returns the graph plus per-edge spurious flags aligned with edge ids.
    Flags of dropped duplicate/self-loop lines follow the first surviving
    occurrence of each edge.
    """
    if isinstance(source, str):
        if source == "-":
            return _load_stream(sys.stdin)
        with open(source, "r", encoding="utf-8") as fh:
            return _load_stream(fh)
    return _load_stream(source)


def _load_stream(fh: IO[str]) -> tuple[Graph, list[bool]]:
    edges, raw_flags = parse_edge_lines(fh)
    g = build_graph(edges)
    flags = [False] * g.m
    seen: set[int] = set()
    for (u, v), flag in zip(edges, raw_flags):
        if u == v:
            continue
        eid = g.edge_id(u, v)
        if eid not in seen:
            seen.add(eid)
            flags[eid] = flag
    return g, flags


def write_edge_list(fh: IO[str], g: Graph, spurious: Sequence[bool] | None = None) -> None:
    for eid, (u, v) in enumerate(g.edges()):
        if spurious is not None and spurious[eid]:
            fh.write(f"{u} {v} # spurious\n")
        else:
            fh.write(f"{u} {v}\n")


def edge_list_text(g: Graph, spurious: Sequence[bool] | None = None) -> str:
    import io as _io

    buf = _io.StringIO()
    write_edge_list(buf, g, spurious)
    return buf.getvalue()
