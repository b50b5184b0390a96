"""Minimal s-bases: strongly non-bipartite graphs with mu* = s containing
no other s-base on the same vertex set.

Candidates come from the recursive construction (the (2s+1)-cycle, or a
connected minimal r-base plus an ear of length 2(s-r) or 2(s-r)+1, or a
disjoint union of smaller connected minimal bases), which is necessary
but not sufficient, so every candidate is verified directly.  In
particular the minimality of a disjoint union is re-checked from scratch:
components being minimal does not guarantee the union is, because edge
removal can raise a component's mu* to compensate a drop elsewhere.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .ears import mu_star_value
from .graph import Graph, canonical_form, canonical_key


@dataclass(frozen=True)
class SBase:
    """One s-base in canonical form."""

    graph: Graph
    s: int
    minimal: bool


def is_sbase(g: Graph, s: int) -> bool:
    """Is g strongly non-bipartite with mu* exactly s."""
    if s < 1:
        raise ValueError("s must be positive")
    if not g.is_strongly_non_bipartite():
        return False
    return mu_star_value(g) == s


def is_minimal_sbase(g: Graph, s: int) -> bool:
    """Is g an s-base containing no proper spanning-edge-subset s-base.

    Any s-base has at least one edge per vertex (each component carries an
    odd cycle), so only edge subsets of size >= n can qualify.
    """
    if not is_sbase(g, s):
        return False
    edges = g.sorted_edges()
    for r in range(len(edges) - 1, g.n - 1, -1):
        for keep in itertools.combinations(edges, r):
            h = Graph(g.n, frozenset(keep))
            if h.is_strongly_non_bipartite() and mu_star_value(h) == s:
                return False
    return True


def _attach_ear(base: Graph, u: int, v: int, length: int) -> Graph | None:
    """base plus an ear of the given length from u to v, new interior vertices.

    u == v gives a closed ear; a closed ear of length 2 degenerates to a
    pendant edge.  Returns None when the ear cannot be added simply.
    """
    n = base.n
    if u == v:
        if length == 2:
            return Graph(n + 1, base.edges | {(u, n + 1)})
        if length < 3:
            return None
    elif length < 2:
        return None
    inner = list(range(n + 1, n + length))
    walk = [u] + inner + [v]
    new_edges = set(base.edges)
    for a, b in zip(walk, walk[1:]):
        new_edges.add((a, b) if a < b else (b, a))
    return Graph(n + length - 1, frozenset(new_edges))


def _cycle_graph(length: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, length)] + [(1, length)]
    return Graph.from_edges(length, edges)


_CONNECTED_CACHE: dict[tuple[int, int], tuple[Graph, ...]] = {}


def _connected_minimal(s: int, n_max: int) -> tuple[Graph, ...]:
    """All connected minimal s-bases on at most n_max vertices, canonical."""
    cached = _CONNECTED_CACHE.get((s, n_max))
    if cached is not None:
        return cached
    candidates: list[Graph] = []
    if 2 * s + 1 <= n_max:
        candidates.append(_cycle_graph(2 * s + 1))
    for r in range(1, s):
        for delta in _connected_minimal(r, n_max):
            for length in (2 * (s - r), 2 * (s - r) + 1):
                for u in delta.vertices:
                    for v in delta.vertices:
                        if v < u:
                            continue
                        g = _attach_ear(delta, u, v, length)
                        if g is not None and g.n <= n_max:
                            candidates.append(g)
    found: dict[tuple, Graph] = {}
    for g in candidates:
        key = canonical_key(g)
        if key in found:
            continue
        if is_minimal_sbase(g, s):
            found[key] = canonical_form(g)[0]
    result = tuple(
        sorted(found.values(), key=lambda g: (g.n, len(g.edges), g.sorted_edges()))
    )
    _CONNECTED_CACHE[(s, n_max)] = result
    return result


def _partitions(s: int, max_part: int) -> list[tuple[int, ...]]:
    if s == 0:
        return [()]
    out = []
    for first in range(min(s, max_part), 0, -1):
        for rest in _partitions(s - first, first):
            out.append((first,) + rest)
    return out


def _disjoint_union(parts: list[Graph]) -> Graph:
    edges: set[tuple[int, int]] = set()
    offset = 0
    for g in parts:
        edges.update((i + offset, j + offset) for (i, j) in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def enumerate_minimal_sbases(s: int, n_max: int | None = None) -> list[SBase]:
    """All minimal s-bases up to isomorphism, at most n_max vertices each.

    n_max defaults to 3s, which covers every minimal s-base: each connected
    minimal r-base fits in 2r+1 vertices, and triangles are the worst case
    per unit of s in a disjoint union.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if n_max is None:
        n_max = 3 * s
    found: dict[tuple, Graph] = {}
    for g in _connected_minimal(s, n_max):
        found.setdefault(canonical_key(g), g)
    for partition in _partitions(s, s - 1):
        if len(partition) < 2:
            continue
        counts = Counter(partition)
        groups: list[list[tuple[Graph, ...]]] = []
        for value in sorted(counts, reverse=True):
            block = _connected_minimal(value, n_max)
            groups.append(
                list(itertools.combinations_with_replacement(block, counts[value]))
            )
        for choice in itertools.product(*groups):
            parts = [g for combo in choice for g in combo]
            union = _disjoint_union(parts)
            if union.n > n_max:
                continue
            key = canonical_key(union)
            if key in found:
                continue
            if is_minimal_sbase(union, s):
                found[key] = canonical_form(union)[0]
    catalog = sorted(
        found.values(), key=lambda g: (g.n, len(g.edges), g.sorted_edges())
    )
    return [SBase(graph=g, s=s, minimal=True) for g in catalog]


def clear_caches() -> None:
    _CONNECTED_CACHE.clear()
