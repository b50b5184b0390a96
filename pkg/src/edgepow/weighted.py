"""Weighted graphs, polarization and matching numbers.

A weight vector a on a graph G encodes the monomial x^a; the weighted graph
G_a is G restricted to the support of a, with vertex i usable in at most a_i
matching edges.  Its matching number nu(G_a) equals the ordinary matching
number of the polarization (each vertex split into a_i copies), which is what
the blossom kernel computes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .errors import ResourceLimitError
from .graph import Graph

WeightVector = tuple[int, ...]

# nu() calls dominate everything downstream, so results are memoized here.
# Keyed by (graph key, weights); cleared wholesale if it ever gets huge.
_NU_CACHE: dict[tuple, int] = {}
_NU_CACHE_LIMIT = 1 << 20

# polarization of a weight vector with |a| above this is refused
MAX_TOTAL_WEIGHT = 64

# exhaustive reference matcher is only meant for tiny inputs
MAX_EXHAUSTIVE_WEIGHT = 12


def clear_caches() -> None:
    _NU_CACHE.clear()


@dataclass(frozen=True)
class WeightedGraph:
    """A graph together with a nonnegative integer weight per vertex."""

    graph: Graph
    weights: WeightVector

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.n:
            raise ValueError(
                f"weight vector has length {len(self.weights)}, "
                f"graph has {self.graph.n} vertices"
            )
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight(self, v: int) -> int:
        return self.weights[v - 1]

    def support(self) -> frozenset[int]:
        return frozenset(v for v in self.graph.vertices if self.weights[v - 1] > 0)

    def support_edges(self) -> list[tuple[int, int]]:
        w = self.weights
        return [(i, j) for (i, j) in self.graph.sorted_edges() if w[i - 1] > 0 and w[j - 1] > 0]

    def support_components(self) -> list[frozenset[int]]:
        """Connected components of the support graph, ordered by least vertex."""
        sup = self.support()
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for s in sorted(sup):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.graph.neighbors(v):
                    if u in sup and u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def has_isolated_support_vertex(self) -> bool:
        sup = self.support()
        return any(not (self.graph.neighbors(v) & sup) for v in sup)

    def with_weight_delta(self, v: int, delta: int) -> "WeightedGraph":
        w = list(self.weights)
        w[v - 1] += delta
        return WeightedGraph(self.graph, tuple(w))


def unit_weights(g: Graph) -> WeightedGraph:
    return WeightedGraph(g, (1,) * g.n)


def polarize(wg: WeightedGraph) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Split vertex i into a_i copies, join copies across support edges.

    Returns (N, edges, proj) with 0-based polarized vertices 0..N-1 and
    proj[p] the original 1-based vertex of copy p.
    """
    total = wg.total_weight
    if total > MAX_TOTAL_WEIGHT:
        raise ResourceLimitError(
            f"total weight {total} exceeds polarization limit {MAX_TOTAL_WEIGHT}"
        )
    offset: dict[int, int] = {}
    proj: list[int] = []
    for v in wg.graph.vertices:
        a_v = wg.weights[v - 1]
        if a_v > 0:
            offset[v] = len(proj)
            proj.extend([v] * a_v)
    edges: list[tuple[int, int]] = []
    for (i, j) in wg.support_edges():
        for p in range(offset[i], offset[i] + wg.weights[i - 1]):
            for q in range(offset[j], offset[j] + wg.weights[j - 1]):
                edges.append((p, q))
    return len(proj), edges, proj


def matching_number(wg: WeightedGraph) -> int:
    """nu(G_a): maximum size of a matching respecting vertex capacities."""
    key = (wg.graph.key(), wg.weights)
    cached = _NU_CACHE.get(key)
    if cached is not None:
        return cached
    n_pol, edges, _ = polarize(wg)
    size, _ = kernels.max_matching(n_pol, edges)
    if len(_NU_CACHE) >= _NU_CACHE_LIMIT:
        _NU_CACHE.clear()
    _NU_CACHE[key] = size
    return size


def maximum_matching(wg: WeightedGraph) -> tuple[tuple[int, int], ...]:
    """A maximum matching of G_a as a sorted multiset of support edges."""
    n_pol, edges, proj = polarize(wg)
    _, mate = kernels.max_matching(n_pol, edges)
    out = []
    for p in range(n_pol):
        q = mate[p]
        if q > p:
            i, j = proj[p], proj[q]
            out.append((i, j) if i < j else (j, i))
    return tuple(sorted(out))


def is_matching(wg: WeightedGraph, edges: tuple[tuple[int, int], ...]) -> bool:
    """Check a multiset of edges against edge membership and capacities."""
    usage: dict[int, int] = {}
    edge_set = wg.graph.edges
    for (i, j) in edges:
        e = (i, j) if i < j else (j, i)
        if e not in edge_set:
            return False
        usage[i] = usage.get(i, 0) + 1
        usage[j] = usage.get(j, 0) + 1
    return all(usage[v] <= wg.weights[v - 1] for v in usage)


def matching_number_exhaustive(wg: WeightedGraph) -> int:
    """Reference nu() by branching on edge multiplicities.  Tiny inputs only.

    Deliberately avoids polarization and the blossom kernel so the two
    routes stay independent.
    """
    if wg.total_weight > MAX_EXHAUSTIVE_WEIGHT:
        raise ResourceLimitError(
            f"total weight {wg.total_weight} exceeds exhaustive limit "
            f"{MAX_EXHAUSTIVE_WEIGHT}"
        )
    edges = wg.support_edges()
    caps = list(wg.weights)
    best = 0

    def recurse(k: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if k == len(edges):
            return
        # even a perfect use of the remaining capacity cannot beat best
        if count + sum(caps[v - 1] for e in edges[k:] for v in e) // 2 <= best:
            return
        i, j = edges[k]
        if caps[i - 1] > 0 and caps[j - 1] > 0:
            caps[i - 1] -= 1
            caps[j - 1] -= 1
            recurse(k, count + 1)
            caps[i - 1] += 1
            caps[j - 1] += 1
        recurse(k + 1, count)

    recurse(0, 0)
    return best


def monomial_in_power(wg: WeightedGraph, t: int) -> bool:
    """x^a lies in I^t exactly when nu(G_a) >= t."""
    if t < 0:
        raise ValueError("power must be nonnegative")
    if t == 0:
        return True
    return matching_number(wg) >= t


def has_perfect_matching(wg: WeightedGraph) -> bool:
    total = wg.total_weight
    return total % 2 == 0 and 2 * matching_number(wg) == total


def is_matching_critical(wg: WeightedGraph) -> bool:
    """nu drops for no single-unit decrement inside the support."""
    nu = matching_number(wg)
    return all(
        matching_number(wg.with_weight_delta(v, -1)) == nu for v in sorted(wg.support())
    )


def is_factor_critical(wg: WeightedGraph) -> bool:
    """Every single-unit decrement inside the support leaves a perfect matching."""
    total = wg.total_weight
    if total == 0:
        return True
    if total % 2 == 0:
        return False
    half = (total - 1) // 2
    return all(
        matching_number(wg.with_weight_delta(v, -1)) == half for v in sorted(wg.support())
    )


def augment_weights(wg: WeightedGraph, i: int, j: int) -> WeightedGraph:
    """Add one unit at both ends of an edge of the support graph.

    For matching-critical G_a this raises nu by exactly one and preserves
    matching-criticality; callers rely on that to walk weight families.
    """
    e = (i, j) if i < j else (j, i)
    if e not in wg.graph.edges:
        raise ValueError(f"({i}, {j}) is not an edge")
    if wg.weights[i - 1] == 0 or wg.weights[j - 1] == 0:
        raise ValueError(f"({i}, {j}) does not lie in the support graph")
    return wg.with_weight_delta(i, 1).with_weight_delta(j, 1)


def weight_vectors(
    g: Graph, support: frozenset[int], total: int
) -> Iterator[WeightVector]:
    """All weight vectors with the given support and total, in a fixed order.

    Every support vertex gets at least 1; the remaining total - |support|
    units are distributed over the support in all ways.
    """
    sup = sorted(support)
    extra = total - len(sup)
    if extra < 0:
        return
    base = [0] * g.n
    for v in sup:
        base[v - 1] = 1
    if extra == 0:
        yield tuple(base)
        return
    # stars and bars over the support positions
    for bars in itertools.combinations_with_replacement(sup, extra):
        w = base.copy()
        for v in bars:
            w[v - 1] += 1
        yield tuple(w)
