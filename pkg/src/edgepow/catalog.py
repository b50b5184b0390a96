"""Test corpora: exhaustive small connected graphs and seeded random ones."""

from __future__ import annotations

import bisect
import itertools
import random

from .errors import ResourceLimitError
from .graph import Graph, canonical_key

MAX_EXHAUSTIVE_N = 6


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism.

    Scans every edge subset of K_n and deduplicates by canonical form, so it
    is deliberately capped at n <= 6 (counts 1, 1, 2, 6, 21, 112 for
    n = 1..6).  Vertices are labeled 1..n; results are sorted by edge count
    then edge list.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_EXHAUSTIVE_N:
        raise ResourceLimitError(
            f"exhaustive catalog capped at n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    found: dict[tuple, Graph] = {}
    for r in range(max(n - 1, 0), len(all_edges) + 1):
        for picked in itertools.combinations(all_edges, r):
            g = Graph(n, frozenset(picked))
            if not g.is_connected():
                continue
            key = canonical_key(g)
            if key not in found:
                found[key] = g
    return sorted(found.values(), key=lambda g: (len(g.edges), g.sorted_edges()))


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """One connected random graph on n vertices from the given generator.

    Construction (fixed so corpora reproduce across runs): draw a uniform
    random labeled tree from a Pruefer sequence, then add each non-tree
    edge independently with probability p, where p itself is drawn once
    from uniform(0.15, 0.5).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return Graph.from_edges(2, [(1, 2)])
    pruefer = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    degree = {v: 1 for v in range(1, n + 1)}
    for v in pruefer:
        degree[v] += 1
    edges: set[tuple[int, int]] = set()
    leaves = sorted(v for v in range(1, n + 1) if degree[v] == 1)
    for v in pruefer:
        leaf = leaves.pop(0)
        edges.add((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(leaves, v)
    edges.add((leaves[0], leaves[1]) if leaves[0] < leaves[1] else (leaves[1], leaves[0]))
    p = rng.uniform(0.15, 0.5)
    for e in itertools.combinations(range(1, n + 1), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph(n, frozenset(edges))
