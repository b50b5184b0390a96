"""Exhaustive property suites shared by the property and acceptance tests.

Each suite asserts one invariant over every instance in its domain (the
connected-graph catalog, weight boxes capped so totals stay within the
exhaustive matcher's budget) and returns the number of cases checked.
"""

import itertools

from edgepow.assoc import ass_infinity, associated_primes
from edgepow.ears import mu_star_value, mu_star_via_weights, odd_ear_decomposition, phi_star
from edgepow.graph import is_strongly_non_bipartite
from edgepow.weighted import (
    WeightedGraph,
    is_factor_critical,
    is_matching_critical,
    matching_number,
    matching_number_exhaustive,
)


def _weight_box(g):
    # entries <= 2 up to n=5, <= 1 at n=6: keeps every total <= 10
    cap = 2 if g.n <= 5 else 1
    for vec in itertools.product(range(cap + 1), repeat=g.n):
        yield WeightedGraph(g, vec)


def _catalog_graphs(catalog):
    for n in sorted(catalog):
        yield from catalog[n]


def suite_matching_polarization(catalog) -> int:
    """Matching number via polarization agrees with direct enumeration."""
    checked = 0
    for g in _catalog_graphs(catalog):
        for wg in _weight_box(g):
            assert matching_number(wg) == matching_number_exhaustive(wg)
            checked += 1
    return checked


def suite_critical_equivalence(catalog) -> int:
    """Connected support without isolated vertices: matching-critical
    coincides with factor-critical."""
    checked = 0
    for g in _catalog_graphs(catalog):
        for wg in _weight_box(g):
            if len(wg.support_components()) != 1 or wg.has_isolated_support_vertex():
                continue
            assert is_matching_critical(wg) == is_factor_critical(wg)
            checked += 1
    return checked


def suite_odd_ear_characterization(catalog) -> int:
    """Connected support on >= 2 vertices: factor-critical exactly when an
    all-odd ear decomposition exists, and any found decomposition is valid."""
    checked = 0
    for g in _catalog_graphs(catalog):
        for wg in _weight_box(g):
            if len(wg.support_components()) != 1 or len(wg.support()) < 2:
                continue
            dec = odd_ear_decomposition(wg)
            assert (dec is not None) == is_factor_critical(wg)
            if dec is not None:
                dec.validate()
                assert dec.all_odd
                assert dec.weights == wg.weights
            checked += 1
    return checked


def suite_critical_matching_number(catalog) -> int:
    """Matching-critical without isolated support vertices: the matching
    number is (total weight - support components) / 2."""
    checked = 0
    for g in _catalog_graphs(catalog):
        for wg in _weight_box(g):
            if wg.has_isolated_support_vertex() or not wg.support():
                continue
            if not is_matching_critical(wg):
                continue
            c = len(wg.support_components())
            assert matching_number(wg) * 2 == wg.total_weight - c
            checked += 1
    return checked


def suite_mu_star_dual_route(catalog) -> int:
    """Ear-decomposition search and weight search give the same mu* and
    phi*, and both witnesses are matching-critical at that value."""
    checked = 0
    for g in _catalog_graphs(catalog):
        if not is_strongly_non_bipartite(g):
            continue
        by_ears = phi_star(g)
        by_weights = mu_star_via_weights(g)
        assert by_ears.mu_star == by_weights.mu_star == mu_star_value(g)
        assert by_ears.phi_star == by_weights.phi_star
        for witness in (by_ears.witness_weights, by_weights.witness_weights):
            wg = WeightedGraph(g, witness)
            assert min(witness) >= 1
            assert is_matching_critical(wg)
            assert matching_number(wg) == by_ears.mu_star
        checked += 1
    return checked


def suite_embedded_iff_short_odd_cycle(catalog) -> int:
    """I^t has an embedded prime exactly when some odd cycle has length
    at most 2t - 1."""
    checked = 0
    for g in _catalog_graphs(catalog):
        girth = g.odd_girth()
        for t in range(1, 5):
            has_embedded = bool(associated_primes(g, t).embedded_primes)
            assert has_embedded == (girth is not None and girth <= 2 * t - 1)
            checked += 1
    return checked


def suite_ass_monotone(catalog) -> int:
    """Associated primes persist: Ass(I^t) is contained in Ass(I^(t+1))."""
    checked = 0
    for g in _catalog_graphs(catalog):
        previous = None
        for t in range(1, 5):
            result = associated_primes(g, t)
            current = {r.cover for r in result.minimal_primes}
            current |= {r.cover for r in result.embedded_primes}
            if previous is not None:
                assert previous <= current
                checked += 1
            previous = current
    return checked


def suite_leaf_reduction(catalog) -> int:
    """Dropping all degree-1 vertices from a strongly non-bipartite graph
    leaves a dominating strongly non-bipartite core W with
    mu*(g) = mu*(g_W) + (n - |W|)."""
    checked = 0
    for g in _catalog_graphs(catalog):
        if not is_strongly_non_bipartite(g):
            continue
        w = [v for v in g.vertices if g.degree(v) >= 2]
        if len(w) == g.n:
            continue
        assert g.is_dominating(w)
        sub, _ = g.induced_subgraph(w)
        assert is_strongly_non_bipartite(sub)
        assert mu_star_value(g) == mu_star_value(sub) + (g.n - len(w))
        checked += 1
    return checked


def suite_astab_bound(catalog) -> int:
    """astab is 1 for bipartite graphs and otherwise at most the
    degree-two-count bound from the odd girth."""
    checked = 0
    for g in _catalog_graphs(catalog):
        report = ass_infinity(g)
        if g.odd_girth() is None:
            assert report.cms_bound is None
            assert report.astab == 1
        else:
            assert report.astab <= report.cms_bound
        checked += 1
    return checked


ALL_SUITES = (
    ("matching polarization", suite_matching_polarization),
    ("critical equivalence", suite_critical_equivalence),
    ("odd ear characterization", suite_odd_ear_characterization),
    ("critical matching number", suite_critical_matching_number),
    ("mu* dual route", suite_mu_star_dual_route),
    ("embedded iff short odd cycle", suite_embedded_iff_short_odd_cycle),
    ("ass monotone", suite_ass_monotone),
    ("leaf reduction", suite_leaf_reduction),
    ("astab bound", suite_astab_bound),
)
