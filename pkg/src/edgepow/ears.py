"""Ear decompositions, phi*, mu*, and the s-invariant.

An ear is a walk; a decomposition lists walks grouped per support
component, the first walk of each group closed.  phi*(g) is the minimum
number of even ears over initially-odd decompositions, mu*(g) =
(phi*(g) + n - c)/2, and s(g) minimizes mu*(g_U) over dominating U whose
induced subgraph is strongly non-bipartite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DisconnectedInputError,
    IsolatedVertexError,
    NotStronglyNonBipartiteError,
    ResourceLimitError,
)
from .graph import Graph, canonical_key
from .weighted import (
    WeightedGraph,
    WeightVector,
    is_factor_critical,
    polarize,
    weight_vectors,
)

# phi* search is exponential in the component size; bitmask state.
MAX_COMPONENT_VERTICES = 24

# odd_ear_decomposition searches the polarized graph, one bit per unit.
MAX_ODD_SEARCH_WEIGHT = 16

_PHI_CACHE: dict[tuple, int] = {}


def clear_caches() -> None:
    _PHI_CACHE.clear()


@dataclass(frozen=True)
class Ear:
    """One walk of a decomposition; consecutive entries must be edges."""

    walk: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.walk) < 2:
            raise ValueError("an ear is a walk with at least one edge")

    @property
    def length(self) -> int:
        return len(self.walk) - 1

    @property
    def is_closed(self) -> bool:
        return self.walk[0] == self.walk[-1]

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.walk[0], self.walk[-1])

    def counted_vertices(self, is_first: bool) -> tuple[int, ...]:
        """Appearances that contribute to the weight vector.

        The first ear of a group counts everything but the repeated final
        vertex; later ears do not count their two endpoints.
        """
        return self.walk[:-1] if is_first else self.walk[1:-1]


@dataclass(frozen=True)
class EarDecomposition:
    """Ears grouped per support component, plus the target weight vector.

    Valid when each group's first ear is closed, endpoints of every later
    ear appear in an earlier ear of its group, every walk stays inside the
    support graph, and for each vertex the counted appearances equal its
    weight.
    """

    graph: Graph
    weights: WeightVector
    groups: tuple[tuple[Ear, ...], ...]

    def all_ears(self) -> Iterator[Ear]:
        for group in self.groups:
            yield from group

    @property
    def phi(self) -> int:
        return sum(1 for ear in self.all_ears() if not ear.is_odd)

    @property
    def is_initially_odd(self) -> bool:
        return all(group[0].is_odd for group in self.groups)

    @property
    def all_odd(self) -> bool:
        return all(ear.is_odd for ear in self.all_ears())

    def validate(self) -> None:
        """Raise ValueError on any structural violation."""
        g = self.graph
        if len(self.weights) != g.n:
            raise ValueError("weight vector length differs from vertex count")
        if any(w < 0 for w in self.weights):
            raise ValueError("negative weight")
        wg = WeightedGraph(g, self.weights)
        components = wg.support_components()
        if len(self.groups) != len(components):
            raise ValueError(
                f"{len(self.groups)} groups for {len(components)} support components"
            )
        counts = {v: 0 for v in g.vertices}
        used_components: list[frozenset[int]] = []
        for group in self.groups:
            if not group:
                raise ValueError("empty ear group")
            if not group[0].is_closed:
                raise ValueError(f"first ear {group[0].walk} is not a closed walk")
            home = None
            for comp in components:
                if group[0].walk[0] in comp:
                    home = comp
                    break
            if home is None or home in used_components:
                raise ValueError("ear groups do not match the support components")
            used_components.append(home)
            seen: set[int] = set()
            for idx, ear in enumerate(group):
                for v in ear.walk:
                    if not 1 <= v <= g.n or self.weights[v - 1] == 0:
                        raise ValueError(f"vertex {v} is outside the support")
                    if v not in home:
                        raise ValueError(f"ear {ear.walk} leaves its component")
                for x, y in zip(ear.walk, ear.walk[1:]):
                    edge = (x, y) if x < y else (y, x)
                    if edge not in g.edges:
                        raise ValueError(f"walk step ({x}, {y}) is not an edge")
                if idx > 0:
                    for v in ear.endpoints:
                        if v not in seen:
                            raise ValueError(
                                f"endpoint {v} of ear {ear.walk} not in an earlier ear"
                            )
                for v in ear.counted_vertices(idx == 0):
                    counts[v] += 1
                seen.update(ear.walk)
        for v in g.vertices:
            if counts[v] != self.weights[v - 1]:
                raise ValueError(
                    f"vertex {v} counted {counts[v]} times for weight {self.weights[v - 1]}"
                )

    def to_json_dict(self) -> dict:
        return {
            "ears": [list(ear.walk) for ear in self.all_ears()],
            "weights": list(self.weights),
        }

    @classmethod
    def from_json_dict(cls, graph: Graph, data: dict) -> "EarDecomposition":
        """Rebuild from the flat JSON form; groups recovered by disjointness."""
        ears = [Ear(tuple(walk)) for walk in data["ears"]]
        weights = tuple(data["weights"])
        groups: list[list[Ear]] = []
        covered: set[int] = set()
        for ear in ears:
            if covered.isdisjoint(ear.walk):
                groups.append([ear])
            else:
                groups[-1].append(ear)
            covered.update(ear.walk)
        out = cls(graph, weights, tuple(tuple(group) for group in groups))
        out.validate()
        return out


@dataclass(frozen=True)
class MuStarResult:
    """mu* and phi* with optional witnesses; mu* = (phi* + n - c)/2."""

    mu_star: int
    phi_star: int
    witness_decomposition: EarDecomposition | None
    witness_weights: WeightVector | None


class _ComponentSearch:
    """Exact minimum-even-ear search over one connected vertex set.

    State is the bitmask of covered vertices; iterative deepening on the
    even-ear budget with a failed-budget memo keeps the search exact, so
    the first success uses exactly the optimal number of even ears.  The
    first ear is a simple odd cycle and every later ear contributes >= 1
    new interior vertex, which loses no generality for unit targets.
    """

    _CACHE_LIMIT = 12  # transition lists are cached for small components

    def __init__(self, labels: Sequence[int], adjacency: dict[int, Sequence[int]]):
        self.labels = sorted(labels)
        self.k = len(self.labels)
        self.bit = {v: 1 << p for p, v in enumerate(self.labels)}
        self.adj = {v: sorted(adjacency[v]) for v in self.labels}
        self.adj_bits = {
            v: sum(self.bit[u] for u in self.adj[v]) for v in self.labels
        }
        self.full = (1 << self.k) - 1
        self._fail: dict[int, int] = {}
        self._trans: dict[int, list[tuple[tuple[int, ...], int, int]]] = {}

    def _first_ears(self) -> Iterator[tuple[tuple[int, ...], int, int]]:
        # simple odd cycles, anchored at their least vertex, one direction
        for anchor in self.labels:
            abit = self.bit[anchor]
            stack: list[tuple[list[int], int]] = [([anchor], abit)]
            while stack:
                path, used = stack.pop()
                last = path[-1]
                if (
                    len(path) >= 3
                    and len(path) % 2 == 1
                    and self.adj_bits[last] & abit
                    and path[1] < path[-1]
                ):
                    yield tuple(path) + (anchor,), used, 0
                for u in reversed(self.adj[last]):
                    if u > anchor and not used & self.bit[u]:
                        stack.append((path + [u], used | self.bit[u]))

    def _later_ears(self, mask: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
        # simple paths of new interior vertices, both ends next to the mask
        for start in self.labels:
            sbit = self.bit[start]
            if mask & sbit or not self.adj_bits[start] & mask:
                continue
            stack: list[tuple[list[int], int]] = [([start], sbit)]
            while stack:
                path, used = stack.pop()
                last = path[-1]
                if self.adj_bits[last] & mask and (len(path) == 1 or start < last):
                    h1 = min(u for u in self.adj[start] if mask & self.bit[u])
                    h2 = min(u for u in self.adj[last] if mask & self.bit[u])
                    cost = len(path) % 2  # interior length odd <=> ear even
                    yield (h1, *path, h2), used, cost
                for u in reversed(self.adj[last]):
                    if not (used | mask) & self.bit[u]:
                        stack.append((path + [u], used | self.bit[u]))

    def _transitions(self, mask: int) -> list[tuple[tuple[int, ...], int, int]]:
        cached = self._trans.get(mask)
        if cached is not None:
            return cached
        raw = self._first_ears() if mask == 0 else self._later_ears(mask)
        # ears adding the same vertices at the same cost are interchangeable
        best: dict[tuple[int, int], tuple[int, ...]] = {}
        for walk, add, cost in raw:
            key = (add, cost)
            held = best.get(key)
            if held is None or walk < held:
                best[key] = walk
        out = sorted(
            (walk, add, cost) for (add, cost), walk in best.items()
        )
        if self.k <= self._CACHE_LIMIT:
            self._trans[mask] = out
        return out

    def _dfs(self, mask: int, budget: int, acc: list[tuple[int, ...]]) -> bool:
        if mask == self.full:
            return True
        if self._fail.get(mask, -1) >= budget:
            return False
        uncovered = self.k - (self.full & mask).bit_count()
        parity = (uncovered - 1 if mask == 0 else uncovered) & 1
        if budget < parity:
            return False
        for walk, add, cost in self._transitions(mask):
            if cost > budget:
                continue
            acc.append(walk)
            if self._dfs(mask | add, budget - cost, acc):
                return True
            acc.pop()
        self._fail[mask] = max(self._fail.get(mask, -1), budget)
        return False

    def run(self, start_budget: int | None = None) -> tuple[int, list[tuple[int, ...]]]:
        """(phi, walks) with phi minimal among initially-odd decompositions."""
        if self.k > MAX_COMPONENT_VERTICES:
            raise ResourceLimitError(
                f"component has {self.k} vertices, search limit {MAX_COMPONENT_VERTICES}"
            )
        budget = (self.k - 1) & 1 if start_budget is None else start_budget
        while budget <= self.k:
            acc: list[tuple[int, ...]] = []
            if self._dfs(0, budget, acc):
                return budget, acc
            budget += 2
        raise NotStronglyNonBipartiteError(
            "component admits no initially-odd ear decomposition"
        )

    def run_all_odd(self) -> list[tuple[int, ...]] | None:
        acc: list[tuple[int, ...]] = []
        if self._dfs(0, 0, acc):
            return acc
        return None


def _search_for(sub: Graph) -> _ComponentSearch:
    return _ComponentSearch(
        list(sub.vertices), {v: sorted(sub.neighbors(v)) for v in sub.vertices}
    )


def _component_phi_value(sub: Graph) -> int:
    """phi* of one connected graph, cached per isomorphism class."""
    key = canonical_key(sub)
    cached = _PHI_CACHE.get(key)
    if cached is not None:
        return cached
    phi, _ = _search_for(sub).run()
    _PHI_CACHE[key] = phi
    return phi


def _component_phi_witness(sub: Graph) -> tuple[int, list[tuple[int, ...]]]:
    key = canonical_key(sub)
    phi, walks = _search_for(sub).run(_PHI_CACHE.get(key))
    _PHI_CACHE[key] = phi
    return phi, walks


def _require_snb(g: Graph) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"isolated vertices {sorted(isolated)}")
    if not g.is_strongly_non_bipartite():
        raise NotStronglyNonBipartiteError(
            "graph has a bipartite component, phi*/mu* undefined"
        )


def mu_star_value(g: Graph) -> int:
    """mu*(g) without witnesses; additive over connected components."""
    _require_snb(g)
    comps = g.connected_components()
    total_phi = 0
    for comp in comps:
        sub, _ = g.induced_subgraph(comp)
        total_phi += _component_phi_value(sub)
    return (total_phi + g.n - len(comps)) // 2


def phi_star(g: Graph) -> MuStarResult:
    """Exact phi*(g) and mu*(g) with a witness decomposition and weights.

    The witness decomposition targets unit weights and spends exactly
    phi*(g) even ears; the witness weight vector comes from
    critical_weights applied to it, so its weighted graph is
    matching-critical with matching number mu*(g).
    """
    _require_snb(g)
    comps = g.connected_components()
    total_phi = 0
    groups: list[tuple[Ear, ...]] = []
    for comp in comps:
        sub, old_of_new = g.induced_subgraph(comp)
        phi, walks = _component_phi_witness(sub)
        total_phi += phi
        groups.append(
            tuple(Ear(tuple(old_of_new[v - 1] for v in walk)) for walk in walks)
        )
    decomposition = EarDecomposition(g, (1,) * g.n, tuple(groups))
    decomposition.validate()
    weights, _ = critical_weights(decomposition)
    return MuStarResult(
        mu_star=(total_phi + g.n - len(comps)) // 2,
        phi_star=total_phi,
        witness_decomposition=decomposition,
        witness_weights=weights,
    )


def critical_weights(e: EarDecomposition) -> tuple[WeightVector, EarDecomposition]:
    """Make every even ear odd by prepending a neighbour from an earlier ear.

    Starting from an initially-odd decomposition with target weights a,
    each even ear (h, i, ...) gains one unit at its old first endpoint i;
    the result is an all-odd decomposition whose weighted graph is
    matching-critical with |a| increased by phi(e).
    """
    if not e.is_initially_odd:
        raise ValueError("critical_weights needs an initially-odd decomposition")
    weights = list(e.weights)
    new_groups: list[tuple[Ear, ...]] = []
    for group in e.groups:
        transformed: list[Ear] = []
        for idx, ear in enumerate(group):
            if idx == 0 or ear.is_odd:
                transformed.append(ear)
                continue
            i = ear.walk[0]
            h = None
            for prev in transformed:
                if i in prev.walk:
                    p = prev.walk.index(i)
                    h = prev.walk[p + 1] if p + 1 < len(prev.walk) else prev.walk[p - 1]
                    break
            if h is None:
                raise ValueError(f"endpoint {i} missing from earlier ears")
            transformed.append(Ear((h,) + ear.walk))
            weights[i - 1] += 1
        new_groups.append(tuple(transformed))
    out = EarDecomposition(e.graph, tuple(weights), tuple(new_groups))
    out.validate()
    return tuple(weights), out


def mu_star_via_weights(g: Graph, t_max: int = 32) -> MuStarResult:
    """mu*(g) by searching weight vectors instead of ear decompositions.

    Per component, full-support weight vectors are tried by increasing
    odd total; the first factor-critical hit has matching number exactly
    the component's mu*.  Independent of the phi* search: only matching
    numbers are consulted.
    """
    _require_snb(g)
    if t_max < 1:
        raise ValueError("t_max must be positive")
    comps = g.connected_components()
    merged = [0] * g.n
    total_mu = 0
    for idx, comp in enumerate(comps):
        sub, old_of_new = g.induced_subgraph(comp)
        k = sub.n
        girth = sub.odd_girth()
        if girth is None:  # unreachable after the snb check
            raise NotStronglyNonBipartiteError("bipartite component")
        max_total = 2 * k - girth  # greedy decomposition bound: phi <= k - girth
        remaining = len(comps) - idx - 1
        total = k if k % 2 == 1 else k + 1
        hit: WeightVector | None = None
        while total <= max_total:
            if total_mu + (total - 1) // 2 + remaining > t_max:
                raise ResourceLimitError(
                    f"mu* exceeds t_max={t_max} during the weight search"
                )
            for w in weight_vectors(sub, frozenset(sub.vertices), total):
                if is_factor_critical(WeightedGraph(sub, w)):
                    hit = w
                    break
            if hit is not None:
                break
            total += 2
        if hit is None:
            raise RuntimeError("no factor-critical weights within the structural bound")
        total_mu += (total - 1) // 2
        for new_v, weight in enumerate(hit, start=1):
            merged[old_of_new[new_v - 1] - 1] = weight
    return MuStarResult(
        mu_star=total_mu,
        phi_star=2 * total_mu - g.n + len(comps),
        witness_decomposition=None,
        witness_weights=tuple(merged),
    )


def reduce_decomposition(e: EarDecomposition, i: int) -> EarDecomposition:
    """Walk-breaking step: a valid decomposition for weights a - e_i.

    Splits one ear at repeated counted occurrences of i (or the next ear
    containing i when the earliest one counts it once), so phi grows by at
    most one and an odd first ear stays odd.
    """
    if not 1 <= i <= e.graph.n or e.weights[i - 1] < 2:
        raise ValueError(f"vertex {i} needs weight >= 2 to reduce")
    gi = -1
    occurrences: list[tuple[int, list[int]]] = []
    for gi, group in enumerate(e.groups):
        occurrences = []
        for ei, ear in enumerate(group):
            offset = 0 if ei == 0 else 1
            pos = [
                p + offset
                for p, v in enumerate(ear.counted_vertices(ei == 0))
                if v == i
            ]
            if pos:
                occurrences.append((ei, pos))
        if occurrences:
            break
    group_list = list(e.groups[gi])
    first_ei, first_pos = occurrences[0]
    if len(first_pos) >= 2:
        walk = group_list[first_ei].walk
        q1, q2 = first_pos[0], first_pos[1]
        if first_ei == 0:
            # rotate the closed walk into two closed walks anchored at i
            one = Ear(walk[q1 : q2 + 1])
            two = Ear(walk[q2:] + walk[1 : q1 + 1])
            if two.is_odd and not one.is_odd:
                one, two = two, one
            group_list[0:1] = [one, two]
        else:
            bypass = Ear(walk[: q1 + 1] + walk[q2 + 1 :])
            loop = Ear(walk[q1 : q2 + 1])
            group_list[first_ei : first_ei + 1] = [bypass, loop]
    else:
        # earliest ear counts i once; split the next ear containing i
        next_ei, next_pos = occurrences[1]
        walk = group_list[next_ei].walk
        p = next_pos[0]
        group_list[next_ei : next_ei + 1] = [Ear(walk[: p + 1]), Ear(walk[p:])]
    weights = list(e.weights)
    weights[i - 1] -= 1
    groups = list(e.groups)
    groups[gi] = tuple(group_list)
    out = EarDecomposition(e.graph, tuple(weights), tuple(groups))
    out.validate()
    return out


def odd_ear_decomposition(wg: WeightedGraph) -> EarDecomposition | None:
    """An all-odd decomposition of the weighted graph, or None.

    Polarizes, searches for an odd ear decomposition of the polarized
    simple graph, and projects the walks back.  Existence is equivalent to
    wg being factor-critical; this search never consults matchings, so the
    equivalence stays a genuine cross-check.
    """
    components = wg.support_components()
    if len(components) != 1:
        raise DisconnectedInputError(
            f"support has {len(components)} components, need exactly 1"
        )
    if len(components[0]) < 2:
        raise DisconnectedInputError("support must have more than one vertex")
    if wg.total_weight > MAX_ODD_SEARCH_WEIGHT:
        raise ResourceLimitError(
            f"total weight {wg.total_weight} exceeds search limit {MAX_ODD_SEARCH_WEIGHT}"
        )
    n_pol, edges, proj = polarize(wg)
    adjacency: dict[int, list[int]] = {p: [] for p in range(n_pol)}
    for p, q in edges:
        adjacency[p].append(q)
        adjacency[q].append(p)
    walks = _ComponentSearch(range(n_pol), adjacency).run_all_odd()
    if walks is None:
        return None
    group = tuple(Ear(tuple(proj[p] for p in walk)) for walk in walks)
    out = EarDecomposition(wg.graph, wg.weights, (group,))
    out.validate()
    return out


def s_invariant(g: Graph) -> int:
    """min mu*(g_U) over dominating U with g_U strongly non-bipartite."""
    return s_invariant_with_witness(g)[0]


def s_invariant_with_witness(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(s(g), U) for the first qualifying U attaining the minimum.

    Subsets are scanned by (size, lex).  A candidate whose induced
    subgraph has a vertex of degree <= 1 removable without losing
    domination is skipped: dropping such a vertex lowers mu* by one, so a
    strictly better candidate was already scanned.  Since |U| <= 3 mu*
    for strongly non-bipartite g_U, sizes beyond 3(best-1) cannot win.
    """
    _require_snb(g)
    vertices = sorted(g.vertices)
    best: int | None = None
    best_u: tuple[int, ...] | None = None
    for size in range(1, g.n + 1):
        if best is not None and (best == 1 or size > 3 * (best - 1)):
            break
        for u in itertools.combinations(vertices, size):
            uset = frozenset(u)
            if not g.is_dominating(uset):
                continue
            sub, old_of_new = g.induced_subgraph(uset)
            if not sub.is_strongly_non_bipartite():
                continue
            if any(
                sub.degree(v) <= 1 and g.is_dominating(uset - {old_of_new[v - 1]})
                for v in sub.vertices
            ):
                continue
            mu = mu_star_value(sub)
            if best is None or mu < best:
                best, best_u = mu, u
    if best is None or best_u is None:  # unreachable: U = V always qualifies
        raise NotStronglyNonBipartiteError("no dominating strongly non-bipartite set")
    return best, best_u
