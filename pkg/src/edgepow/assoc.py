"""Associated primes of every power of an edge ideal, combinatorially.

P_F is associated to I^t exactly when F is a minimal cover, or F is
minimal among the covers containing N[U] for some U whose induced
subgraph is strongly non-bipartite with mu* < t.  Candidate embedded
covers are generated as N[U] united with a minimal cover of the rest,
which enumerates exactly the covers minimal over N[U].
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass

from .ears import mu_star_value, s_invariant, s_invariant_with_witness
from .errors import IsolatedVertexError, NotACoverError
from .graph import CoverReport, Graph, canonical_key


@dataclass(frozen=True)
class EmbeddedTestResult:
    """Outcome of one embedded-prime test; truthy iff the prime is embedded.

    witness is the mu*-minimizing dominating set of the core's induced
    subgraph whenever one exists, even when its mu* is too large for this
    power, so callers can read off the stability index mu_star + 1.
    """

    present: bool
    witness: tuple[int, ...] | None
    mu_star: int | None

    def __bool__(self) -> bool:
        return self.present


@dataclass(frozen=True)
class AssResult:
    """All associated primes of I^t, split into minimal and embedded."""

    t: int
    minimal_primes: tuple[CoverReport, ...]
    embedded_primes: tuple[CoverReport, ...]
    graph_hash: str

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "minimal": [list(r.cover) for r in self.minimal_primes],
            "embedded": [
                {
                    "cover": list(r.cover),
                    "witness": list(r.witness or ()),
                    "mu_star": r.mu_star,
                }
                for r in self.embedded_primes
            ],
        }


@dataclass(frozen=True)
class StabilityReport:
    """Ass^infty(I) with per-prime stability indices and astab(I)."""

    ass_infty_members: tuple[CoverReport, ...]
    astab: int
    cms_bound: int | None
    per_prime_index: tuple[tuple[tuple[int, ...], int], ...]

    def index_of(self, cover) -> int | None:
        key = tuple(sorted(cover))
        for f, index in self.per_prime_index:
            if f == key:
                return index
        return None

    def to_json_dict(self) -> dict:
        minimal = [r for r in self.ass_infty_members if r.is_minimal_cover]
        embedded = [r for r in self.ass_infty_members if not r.is_minimal_cover]
        return {
            "astab": self.astab,
            "cms_bound": self.cms_bound,
            "minimal": [list(r.cover) for r in minimal],
            "embedded": [
                {
                    "cover": list(r.cover),
                    "witness": list(r.witness or ()),
                    "mu_star": r.mu_star,
                    "stability_index": r.stability_index,
                }
                for r in embedded
            ],
        }


def _require_no_isolated(g: Graph) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"isolated vertices {sorted(isolated)}")


def graph_hash(g: Graph) -> str:
    """Short stable identifier of the isomorphism class of g."""
    digest = hashlib.sha256(repr(canonical_key(g)).encode()).hexdigest()
    return digest[:12]


def _odd_walk_pool(g: Graph) -> list[int]:
    # vertices on odd closed walks = vertices of non-bipartite components
    pool: list[int] = []
    for comp in g.connected_components():
        sub, _ = g.induced_subgraph(comp)
        if sub.is_strongly_non_bipartite():
            pool.extend(sorted(comp))
    return sorted(pool)


def embedded_prime_test(g: Graph, f, t: int) -> EmbeddedTestResult:
    """Is the non-minimal cover f embedded for I^t, with the witness U.

    Decides via the core: P_F is embedded exactly when some dominating
    set U of the core's induced subgraph is strongly non-bipartite with
    mu* <= t-1.
    """
    _require_no_isolated(g)
    if t < 1:
        raise ValueError("t must be positive")
    fset = frozenset(f)
    if not g.is_cover(fset):
        raise NotACoverError(f"{sorted(fset)} is not a cover")
    if g.is_minimal_cover(fset):
        raise ValueError("cover is minimal; P_F is a minimal prime, not embedded")
    core = g.core_of_cover(fset)
    sub, old_of_new = g.induced_subgraph(core)
    if not sub.is_strongly_non_bipartite():
        return EmbeddedTestResult(False, None, None)
    s, u = s_invariant_with_witness(sub)
    witness = tuple(old_of_new[v - 1] for v in u)
    return EmbeddedTestResult(s <= t - 1, witness, s)


def associated_primes(g: Graph, t: int) -> AssResult:
    """Every associated prime of I^t with provenance for the embedded ones."""
    _require_no_isolated(g)
    if t < 1:
        raise ValueError("t must be positive")
    minimal = sorted(tuple(sorted(f)) for f in g.minimal_covers())
    minimal_reports = tuple(
        CoverReport(
            cover=f,
            is_minimal_cover=True,
            core=tuple(sorted(g.core_of_cover(frozenset(f)))),
            witness=None,
            stability_index=1,
        )
        for f in minimal
    )
    best: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    pool = _odd_walk_pool(g)
    max_size = min(3 * (t - 1), len(pool))
    for size in range(3, max_size + 1):
        for u in itertools.combinations(pool, size):
            sub, _ = g.induced_subgraph(u)
            if not sub.is_strongly_non_bipartite():
                continue
            mu = mu_star_value(sub)
            if mu > t - 1:
                continue
            hood = g.closed_neighborhood(u)
            rest_sub, rest_old = g.induced_subgraph(frozenset(g.vertices) - hood)
            for m in rest_sub.minimal_covers():
                cover = tuple(sorted(hood | {rest_old[v - 1] for v in m}))
                cand = (mu, u)
                held = best.get(cover)
                if held is None or cand < held:
                    best[cover] = cand
    embedded_reports = tuple(
        CoverReport(
            cover=cover,
            is_minimal_cover=False,
            core=tuple(sorted(g.core_of_cover(frozenset(cover)))),
            witness=best[cover][1],
            stability_index=best[cover][0] + 1,
            mu_star=best[cover][0],
        )
        for cover in sorted(best)
    )
    return AssResult(t, minimal_reports, embedded_reports, graph_hash(g))


def max_ideal_in_ass(g: Graph, t: int) -> bool:
    """Is the maximal ideal associated to I^t; t >= s(g)+1 when defined."""
    _require_no_isolated(g)
    if t < 1:
        raise ValueError("t must be positive")
    if not g.is_strongly_non_bipartite():
        return False
    return t >= s_invariant(g) + 1


def cover_report(g: Graph, f) -> CoverReport:
    """Classify one cover: minimality, core, witness, stability index."""
    fset = frozenset(f)
    if not g.is_cover(fset):
        raise NotACoverError(f"{sorted(fset)} is not a cover")
    cover = tuple(sorted(fset))
    core = tuple(sorted(g.core_of_cover(fset)))
    if g.is_minimal_cover(fset):
        return CoverReport(cover, True, core, None, 1)
    sub, old_of_new = g.induced_subgraph(frozenset(core))
    if not sub.is_strongly_non_bipartite():
        return CoverReport(cover, False, core, None, None)
    s, u = s_invariant_with_witness(sub)
    witness = tuple(old_of_new[v - 1] for v in u)
    return CoverReport(cover, False, core, witness, s + 1, mu_star=s)


def ass_infinity(g: Graph) -> StabilityReport:
    """Ass^infty(I), astab(I) by the max-stability formula, and the m-t bound."""
    _require_no_isolated(g)
    minimal = sorted(tuple(sorted(f)) for f in g.minimal_covers())
    members = [
        CoverReport(
            cover=f,
            is_minimal_cover=True,
            core=(),
            witness=None,
            stability_index=1,
        )
        for f in minimal
    ]
    minimal_set = set(minimal)
    per_prime: list[tuple[tuple[int, ...], int]] = []
    astab = 1
    for fset in g.all_covers():
        cover = tuple(sorted(fset))
        if cover in minimal_set:
            continue
        core = g.core_of_cover(fset)
        if not core:
            raise RuntimeError("non-minimal cover with empty core")
        sub, old_of_new = g.induced_subgraph(core)
        if not sub.is_strongly_non_bipartite():
            continue
        s, u = s_invariant_with_witness(sub)
        witness = tuple(old_of_new[v - 1] for v in u)
        members.append(
            CoverReport(
                cover=cover,
                is_minimal_cover=False,
                core=tuple(sorted(core)),
                witness=witness,
                stability_index=s + 1,
                mu_star=s,
            )
        )
        per_prime.append((cover, s + 1))
        astab = max(astab, s + 1)
    members.sort(key=lambda r: (not r.is_minimal_cover, r.cover))
    per_prime.sort()
    return StabilityReport(
        ass_infty_members=tuple(members),
        astab=astab,
        cms_bound=_cms_bound(g),
        per_prime_index=tuple(per_prime),
    )


def _cms_bound(g: Graph) -> int | None:
    """m - t with m the count of degree >= 2 vertices and 2t+1 the odd girth."""
    girth = g.odd_girth()
    if girth is None:
        return None
    deg2_count = sum(1 for v in g.vertices if g.degree(v) >= 2)
    return deg2_count - (girth - 1) // 2


# depth positivity catalogs: dominating subgraph shapes for t = 2 and 3
_TRIANGLE = Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
_TWO_BASES = (
    Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)]),
    Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
    Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]),
)


def _has_dominating_subgraph(g: Graph, pattern: Graph) -> bool:
    """Is there an injective edge-preserving copy of pattern dominating g."""
    pverts = sorted(pattern.vertices)

    def extend(assign: dict[int, int]) -> bool:
        if len(assign) == len(pverts):
            return g.is_dominating(frozenset(assign.values()))
        v = pverts[len(assign)]
        anchors = [assign[u] for u in pattern.neighbors(v) if u in assign]
        used = set(assign.values())
        for cand in g.vertices:
            if cand in used:
                continue
            if any(
                ((cand, a) if cand < a else (a, cand)) not in g.edges
                for a in anchors
            ):
                continue
            assign[v] = cand
            if extend(assign):
                return True
            del assign[v]
        return False

    return extend({})


def depth_positive_test(g: Graph, t: int) -> bool:
    """depth R/I^t > 0 for t in {2, 3}, with a catalog cross-check.

    The engine answer is the negation of max_ideal_in_ass; it must agree
    with the explicit characterization (no dominating triangle for t=2,
    no dominating triangle or 2-base shape for t=3), which is re-derived
    here by direct subgraph search.
    """
    if t not in (2, 3):
        raise ValueError("depth positivity test covers only t = 2 and t = 3")
    _require_no_isolated(g)
    engine = not max_ideal_in_ass(g, t)
    patterns = (_TRIANGLE,) if t == 2 else (_TRIANGLE,) + _TWO_BASES
    catalog = not any(_has_dominating_subgraph(g, p) for p in patterns)
    if engine != catalog:
        raise RuntimeError(
            f"depth characterizations disagree at t={t}: engine={engine}, catalog={catalog}"
        )
    return engine
