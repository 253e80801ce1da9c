"""Undirected simple graphs with BFS distances and JSON/DOT serialization.

Vertices are the integers ``0 .. vertex_count - 1``.  Graphs are immutable
once built; every constructor goes through :func:`build_graph`, which
enforces the representation invariants (sorted neighbor lists, symmetry,
no self-loops, no parallel edges).
"""

from __future__ import annotations

import json
import sys
from collections import deque
from dataclasses import dataclass

# Sentinel for "no path".  Compares above any true distance; code must never
# do arithmetic with it, connectivity is checked explicitly instead.
UNREACHABLE = sys.maxsize


class GraphError(ValueError):
    """Invalid graph construction, document, or operation argument."""


class ParseError(GraphError):
    """Malformed or invariant-violating graph document."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that require a connected graph."""


class SizeLimitError(GraphError):
    """Input exceeds the configured size cap of an exact algorithm."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``.  ``labels``
    optionally maps vertex ids to display names; it never affects the
    structure, only serialization and diagnostics.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: dict[int, str] | None = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in self.adjacency[u]
            if u < v
        ]

    def name_of(self, v: int) -> str:
        """Display name of ``v``: its label if present, else the id."""
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense all-pairs shortest path distances.

    ``dist[u][v]`` is the hop distance, or :data:`UNREACHABLE` when no
    path exists.
    """

    order: int
    dist: tuple[tuple[int, ...], ...]


def check_vertex(order: int, v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
        raise GraphError(f"vertex id out of range for order {order}: {v!r}")


def build_graph(
    vertex_count: int,
    edge_list: list[tuple[int, int]],
    labels: dict[int, str] | None = None,
) -> Graph:
    """Construct a :class:`Graph`, validating every edge.

    Raises :class:`GraphError` for an out-of-range endpoint, a self-loop,
    or a duplicate edge (in either orientation), naming the offending pair.
    """
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise GraphError(f"vertex count must be a nonnegative integer, got {vertex_count!r}")
    neighbor_sets: list[set[int]] = [set() for _ in range(vertex_count)]
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        check_vertex(vertex_count, u)
        check_vertex(vertex_count, v)
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    if labels is not None:
        for v in labels:
            check_vertex(vertex_count, v)
        labels = dict(labels)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    return Graph(vertex_count, adjacency, labels)


# ---------- distances ----------


def _bfs_row(g: Graph, source: int) -> tuple[int, ...]:
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return tuple(dist)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(V * (V + E))."""
    rows = tuple(_bfs_row(g, s) for s in range(g.vertex_count))
    return DistanceMatrix(g.vertex_count, rows)


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (vacuously for order <= 1)."""
    if g.vertex_count <= 1:
        return True
    row = _bfs_row(g, 0)
    return UNREACHABLE not in row


def diameter(g: Graph, dm: DistanceMatrix | None = None) -> int:
    """Largest pairwise distance.  Raises on a disconnected graph."""
    if g.vertex_count == 0:
        raise GraphError("diameter of the empty graph is undefined")
    if not is_connected(g):
        raise DisconnectedGraphError("diameter requires a connected graph")
    if dm is None:
        dm = all_pairs_distances(g)
    return max(max(row) for row in dm.dist)


# ---------- generators ----------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path graph needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle graph needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# ---------- serialization ----------

FORMATS = ("edge-json", "dot")


def serialize(g: Graph, fmt: str = "edge-json") -> str:
    """Render ``g`` as an edge-JSON document or a Graphviz DOT description."""
    if fmt == "edge-json":
        doc: dict = {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edges()]}
        if g.labels:
            doc["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
        return json.dumps(doc) + "\n"
    if fmt == "dot":
        lines = ["graph {"]
        labels = g.labels or {}
        for v in range(g.vertex_count):
            if v in labels:
                lines.append(f'  "{v}" [label="{labels[v]}"];')
            elif g.degree(v) == 0:
                lines.append(f'  "{v}";')
        for u, v in g.edges():
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise GraphError(f"unsupported format {fmt!r}, expected one of {FORMATS}")


def parse(text: str, fmt: str = "edge-json") -> Graph:
    """Parse an edge-JSON document produced by :func:`serialize`.

    Structural problems are reported with the location of the offending
    field or edge.
    """
    if fmt != "edge-json":
        raise GraphError(f"parsing supports only 'edge-json', got {fmt!r}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"expected a JSON object at top level, got {type(doc).__name__}")
    if "n" not in doc:
        raise ParseError("missing required field 'n'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"'n' must be a nonnegative integer, got {n!r}")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list of [u, v] pairs")
    edge_list: list[tuple[int, int]] = []
    for idx, item in enumerate(raw_edges):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ParseError(f"edges[{idx}]: expected a pair of integers, got {item!r}")
        edge_list.append((item[0], item[1]))
    labels: dict[int, str] | None = None
    if "labels" in doc:
        raw_labels = doc["labels"]
        if not isinstance(raw_labels, dict):
            raise ParseError("'labels' must be an object mapping ids to names")
        labels = {}
        for key, value in raw_labels.items():
            try:
                vid = int(key)
            except (TypeError, ValueError):
                raise ParseError(f"labels: key {key!r} is not a vertex id") from None
            if not isinstance(value, str):
                raise ParseError(f"labels[{key!r}]: name must be a string, got {value!r}")
            labels[vid] = value
    try:
        return build_graph(n, edge_list, labels)
    except ParseError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
