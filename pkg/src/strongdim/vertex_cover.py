"""Exact and heuristic vertex covers, plus maximum independent sets.

The exact solver is a deterministic branch and bound: given the fixed
branching rule below it always returns the same optimal cover for the
same input, which keeps downstream results reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, SizeLimitError, check_vertex


@dataclass(frozen=True)
class CoverResult:
    """A vertex cover together with how it was obtained."""

    cover: tuple[int, ...]
    size: int
    optimal: bool
    nodes_explored: int


def is_vertex_cover(g: Graph, subset: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """Check whether ``subset`` touches every edge.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is
    the first uncovered edge in sorted order.
    """
    chosen = set(subset)
    for v in chosen:
        check_vertex(g.vertex_count, v)
    for u, v in g.edges():
        if u not in chosen and v not in chosen:
            return False, (u, v)
    return True, None


def _max_degree_vertex(adj: list[set[int]]) -> int:
    # max degree, ties broken toward the lowest id
    best, best_deg = -1, -1
    for v, nbrs in enumerate(adj):
        if len(nbrs) > best_deg:
            best, best_deg = v, len(nbrs)
    return best


def _remove_vertex(adj: list[set[int]], v: int) -> None:
    for u in adj[v]:
        adj[u].discard(v)
    adj[v] = set()


def matching_lower_bound(g: Graph) -> int:
    """Size of a greedily built maximal matching, a lower bound on cover size.

    Vertices are scanned in increasing id order and each one is matched to
    its lowest-id unmatched neighbor, so the bound is deterministic.
    """
    return _matching_size([set(nbrs) for nbrs in g.adjacency])


def _matching_size(adj: list[set[int]]) -> int:
    matched = [False] * len(adj)
    size = 0
    for u in range(len(adj)):
        if matched[u]:
            continue
        for v in sorted(adj[u]):
            if not matched[v]:
                matched[u] = matched[v] = True
                size += 1
                break
    return size


def greedy_cover(g: Graph) -> CoverResult:
    """Repeatedly take a maximum-degree vertex (lowest id on ties).

    The result is only guaranteed optimal when it meets the matching lower
    bound; the ``optimal`` flag records that.
    """
    adj = [set(nbrs) for nbrs in g.adjacency]
    cover: list[int] = []
    while True:
        v = _max_degree_vertex(adj)
        if v < 0 or not adj[v]:
            break
        cover.append(v)
        _remove_vertex(adj, v)
    size = len(cover)
    return CoverResult(tuple(sorted(cover)), size, size == matching_lower_bound(g), 0)


def exact_min_vertex_cover(g: Graph, *, max_vertices: int = 256) -> CoverResult:
    """Minimum vertex cover by branch and bound.

    Deterministic by construction: degree-1 vertices are reduced first
    (their neighbor joins the cover), branching picks the maximum-degree
    vertex with the lowest id and tries "in the cover" before "excluded,
    so all neighbors in", and an incumbent is replaced only by a strictly
    smaller cover.  The greedy cover seeds the incumbent and a maximal
    matching on the residual graph prunes hopeless branches.
    """
    if g.vertex_count > max_vertices:
        raise SizeLimitError(
            f"graph has {g.vertex_count} vertices, exact cover cap is {max_vertices}"
        )
    seed = greedy_cover(g)
    best_cover = list(seed.cover)
    best_size = seed.size
    nodes_explored = 0

    def search(adj: list[set[int]], chosen: set[int]) -> None:
        nonlocal best_cover, best_size, nodes_explored
        nodes_explored += 1
        while True:
            leaf = next((v for v in range(len(adj)) if len(adj[v]) == 1), None)
            if leaf is None:
                break
            neighbor = next(iter(adj[leaf]))
            chosen.add(neighbor)
            _remove_vertex(adj, neighbor)
        if not any(adj):
            if len(chosen) < best_size:
                best_cover = sorted(chosen)
                best_size = len(chosen)
            return
        if len(chosen) + _matching_size(adj) >= best_size:
            return
        v = _max_degree_vertex(adj)
        branch = [set(s) for s in adj]
        _remove_vertex(branch, v)
        search(branch, chosen | {v})
        neighbors = sorted(adj[v])
        branch = [set(s) for s in adj]
        for w in neighbors:
            _remove_vertex(branch, w)
        search(branch, chosen | set(neighbors))

    search([set(nbrs) for nbrs in g.adjacency], set())
    return CoverResult(tuple(best_cover), best_size, True, nodes_explored)


def max_independent_set(g: Graph, *, max_vertices: int = 256) -> tuple[int, ...]:
    """Maximum independent set as the complement of an optimal cover."""
    result = exact_min_vertex_cover(g, max_vertices=max_vertices)
    in_cover = set(result.cover)
    independent = tuple(v for v in range(g.vertex_count) if v not in in_cover)
    for u in independent:
        for v in g.adjacency[u]:
            if v not in in_cover:
                raise RuntimeError(f"complement of cover is not independent at edge ({u}, {v})")
    return independent
