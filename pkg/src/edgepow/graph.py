"""Simple-graph core: covers, cores, domination, components, canonical labels.

Vertices are the integers 1..n.  Graphs are immutable; every operation
returns fresh objects, and every enumeration has a deterministic order so
results are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NotACoverError

VertexSet = frozenset[int]


def _normalize_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n (no loops, no parallel edges)."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adj: dict[int, frozenset[int]] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e} is not a sorted pair within 1..{self.n}")
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", {v: frozenset(ws) for v, ws in adj.items()})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge orientation and rejecting loops/duplicates."""
        seen: set[tuple[int, int]] = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            e = _normalize_edge(i, j)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    # -- basic views ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def isolated_vertices(self) -> VertexSet:
        return frozenset(v for v in self.vertices if not self._adj[v])

    def key(self) -> tuple:
        """Hashable identity used for caching (label-sensitive)."""
        return (self.n, self.edges)

    # -- subgraphs -----------------------------------------------------------

    def induced_subgraph(self, u: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``u`` with vertices relabeled 1..k.

        Relabeling is stable: sorted(u) maps to 1..k in order.  Returns the
        subgraph and the back-map ``old_of_new`` where ``old_of_new[k-1]`` is
        the original label of new vertex k.
        """
        old = sorted(set(u))
        if old and (old[0] < 1 or old[-1] > self.n):
            raise ValueError(f"vertex set {old} not within 1..{self.n}")
        new_of_old = {o: k + 1 for k, o in enumerate(old)}
        keep = set(old)
        es = [
            (new_of_old[i], new_of_old[j])
            for (i, j) in self.edges
            if i in keep and j in keep
        ]
        return Graph.from_edges(len(old), es), tuple(old)

    # -- neighborhoods, domination, covers ------------------------------------

    def closed_neighborhood(self, u: Iterable[int]) -> VertexSet:
        out = set(u)
        for v in tuple(out):
            out |= self._adj[v]
        return frozenset(out)

    def is_dominating(self, u: Iterable[int]) -> bool:
        return self.closed_neighborhood(u) == frozenset(self.vertices)

    def is_cover(self, f: Iterable[int]) -> bool:
        fs = set(f)
        return all(i in fs or j in fs for (i, j) in self.edges)

    def is_minimal_cover(self, f: Iterable[int]) -> bool:
        fs = set(f)
        if not self.is_cover(fs):
            return False
        return all(not self.is_cover(fs - {v}) for v in fs)

    def minimal_covers(self) -> list[VertexSet]:
        """All inclusion-minimal vertex covers, sorted by their sorted member lists.

        Branch-and-bound on the first uncovered edge: every minimal cover
        survives down some branch, and leaves are filtered for minimality.
        """
        edges = self.sorted_edges()
        found: set[VertexSet] = set()

        def rec(chosen: set[int]):
            for (i, j) in edges:
                if i not in chosen and j not in chosen:
                    for v in (i, j):
                        chosen.add(v)
                        rec(chosen)
                        chosen.remove(v)
                    return
            if all(not self.is_cover(chosen - {v}) for v in chosen):
                found.add(frozenset(chosen))

        rec(set())
        return sorted(found, key=sorted)

    def all_covers(self) -> Iterator[VertexSet]:
        """Every vertex cover, in lexicographic order of sorted member lists.

        Covers are complements of independent sets; enumerated directly for
        small n (exponential by nature, guarded by callers).
        """
        verts = list(self.vertices)
        for r in range(self.n + 1):
            for comb in itertools.combinations(verts, r):
                if self.is_cover(comb):
                    yield frozenset(comb)

    def core_of_cover(self, f: Iterable[int]) -> VertexSet:
        """The part of a cover f seeing no vertex outside f: f minus N[V-f]."""
        fs = frozenset(f)
        if not self.is_cover(fs):
            raise NotACoverError(f"{sorted(fs)} is not a vertex cover")
        outside = frozenset(self.vertices) - fs
        return fs - self.closed_neighborhood(outside)

    # -- components and parity -------------------------------------------------

    def connected_components(self) -> list[VertexSet]:
        """Components as vertex sets, ordered by their smallest label."""
        seen: set[int] = set()
        comps: list[VertexSet] = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def _component_bipartite(self, comp: VertexSet) -> bool:
        color: dict[int, int] = {}
        start = min(comp)
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in self._adj[v]:
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
        return True

    def is_strongly_non_bipartite(self) -> bool:
        """True iff the graph is nonempty and every component has an odd cycle.

        A single vertex (isolated) component is bipartite, so any isolated
        vertex makes this false, as does the empty graph.
        """
        if self.n == 0:
            return False
        return all(not self._component_bipartite(c) for c in self.connected_components())

    def odd_girth(self) -> int | None:
        """Length of a shortest odd cycle, or None if bipartite.

        BFS from every vertex; an edge joining two vertices at equal BFS depth
        closes an odd walk of length 2d+1, and the minimum such walk over all
        roots is attained by an odd cycle.
        """
        best: int | None = None
        for s in self.vertices:
            dist = {s: 0}
            queue = [s]
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                for w in self._adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            for (i, j) in self.edges:
                if i in dist and j in dist and dist[i] == dist[j]:
                    cand = dist[i] + dist[j] + 1
                    if best is None or cand < best:
                        best = cand
        return best

    # -- canonical labeling ------------------------------------------------------


def _refine_colors(
    adj: dict[int, frozenset[int]], verts: list[int], colors: dict[int, int]
) -> dict[int, int]:
    """Stable color refinement: color := (color, sorted neighbor colors)."""
    while True:
        sig = {
            v: (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in verts
        }
        order = sorted(set(sig.values()))
        rank = {s: k for k, s in enumerate(order)}
        new = {v: rank[sig[v]] for v in verts}
        if new == colors:
            return colors
        colors = new


def _canon_search(
    adj: dict[int, frozenset[int]], verts: list[int], colors: dict[int, int]
) -> tuple[tuple[tuple[int, int], ...], dict[int, int]]:
    """Return (lex-least relabeled edge tuple, old->new map) over all
    discrete refinements reachable by individualization."""
    colors = _refine_colors(adj, verts, colors)
    cells: dict[int, list[int]] = {}
    for v in verts:
        cells.setdefault(colors[v], []).append(v)
    branch_cell = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            branch_cell = cells[c]
            break
    if branch_cell is None:
        new_of_old = {v: colors[v] + 1 for v in verts}
        key = tuple(
            sorted(
                _normalize_edge(new_of_old[i], new_of_old[j])
                for i in verts
                for j in adj[i]
                if i < j
            )
        )
        return key, new_of_old
    best: tuple[tuple[tuple[int, int], ...], dict[int, int]] | None = None
    for v in sorted(branch_cell):
        split = {
            u: (colors[u], 0 if u == v else (1 if u in branch_cell else 0))
            for u in verts
        }
        order = sorted(set(split.values()))
        rank = {s: k for k, s in enumerate(order)}
        cand = _canon_search(adj, verts, {u: rank[split[u]] for u in verts})
        if best is None or cand[0] < best[0]:
            best = cand
    return best


_CANON_CACHE: dict[tuple, tuple[tuple[tuple[int, int], ...], tuple[int, ...]]] = {}


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonical representative of g's isomorphism class plus the relabeling.

    Returns (canonical graph, perm) where perm[v-1] is the canonical label of
    original vertex v.  Deterministic: refinement plus individualization,
    minimizing the relabeled edge list.
    """
    key, perm = _canonical_key_perm(g)
    return Graph.from_edges(g.n, key), perm


def canonical_key(g: Graph) -> tuple:
    """Hashable isomorphism-class identifier: (n, canonical edge tuple)."""
    key, _ = _canonical_key_perm(g)
    return (g.n, key)


def _canonical_key_perm(g: Graph) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    cached = _CANON_CACHE.get(g.key())
    if cached is None:
        verts = list(g.vertices)
        if not verts:
            cached = ((), ())
        else:
            init = {v: 0 for v in verts}
            ekey, new_of_old = _canon_search(g._adj, verts, init)
            cached = (ekey, tuple(new_of_old[v] for v in verts))
        if len(_CANON_CACHE) > 1 << 17:
            _CANON_CACHE.clear()
        _CANON_CACHE[g.key()] = cached
    return cached


@dataclass(frozen=True)
class CoverReport:
    """Summary of one cover F of a graph, as the prime P_F = (x_i : i in F).

    ``witness`` and ``stability_index`` are filled by the associated-primes
    engine: witness is a mu*-minimizing dominating set of the core's induced
    subgraph when one exists, and stability_index is the least power t at
    which P_F becomes associated (None when it never does).
    """

    cover: tuple[int, ...]
    is_minimal_cover: bool
    core: tuple[int, ...]
    witness: tuple[int, ...] | None
    stability_index: int | None
    mu_star: int | None = None


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    return g.induced_subgraph(u)


def closed_neighborhood(g: Graph, u: Iterable[int]) -> VertexSet:
    return g.closed_neighborhood(u)


def is_dominating(g: Graph, u: Iterable[int]) -> bool:
    return g.is_dominating(u)


def is_cover(g: Graph, f: Iterable[int]) -> bool:
    return g.is_cover(f)


def minimal_covers(g: Graph) -> list[VertexSet]:
    return g.minimal_covers()


def core(g: Graph, f: Iterable[int]) -> VertexSet:
    return g.core_of_cover(f)


def is_strongly_non_bipartite(g: Graph) -> bool:
    return g.is_strongly_non_bipartite()


def connected_components(g: Graph) -> list[VertexSet]:
    return g.connected_components()
