"""Ear decompositions, phi*, mu*, the s-invariant, and their witnesses."""

import pytest

from edgepow.ears import (
    Ear,
    EarDecomposition,
    critical_weights,
    mu_star_value,
    mu_star_via_weights,
    odd_ear_decomposition,
    phi_star,
    reduce_decomposition,
    s_invariant,
    s_invariant_with_witness,
)
from edgepow.errors import (
    DisconnectedInputError,
    IsolatedVertexError,
    NotStronglyNonBipartiteError,
    ResourceLimitError,
)
from edgepow.weighted import (
    WeightedGraph,
    is_factor_critical,
    is_matching_critical,
    matching_number,
    unit_weights,
)

from conftest import build, cycle_edges


def test_ear_basics():
    ear = Ear((1, 2, 3, 1))
    assert ear.length == 3
    assert ear.is_closed
    assert ear.is_odd
    assert ear.endpoints == (1, 1)
    assert ear.counted_vertices(is_first=True) == (1, 2, 3)
    assert ear.counted_vertices(is_first=False) == (2, 3)
    open_ear = Ear((2, 1, 3))
    assert open_ear.length == 2
    assert not open_ear.is_closed
    assert not open_ear.is_odd
    with pytest.raises(ValueError):
        Ear((1,))


def test_decomposition_validate_accepts_paw(paw):
    dec = EarDecomposition(
        paw, (1, 1, 2, 1), ((Ear((1, 2, 3, 4, 3, 1)),),)
    )
    dec.validate()
    assert dec.all_odd
    assert dec.is_initially_odd
    assert dec.phi == 0


def test_decomposition_validate_rejects_bad_shapes(paw, two_triangles):
    # first ear open
    with pytest.raises(ValueError):
        EarDecomposition(paw, (1, 1, 1, 0), ((Ear((1, 2, 3)),),)).validate()
    # walk step off an edge
    with pytest.raises(ValueError):
        EarDecomposition(paw, (1, 1, 1, 1), ((Ear((1, 2, 4, 1)),),)).validate()
    # counted appearances disagree with the weights
    with pytest.raises(ValueError):
        EarDecomposition(paw, (1, 1, 1, 1), ((Ear((1, 2, 3, 1)),),)).validate()
    # later ear with an endpoint never seen before
    with pytest.raises(ValueError):
        EarDecomposition(
            paw, (1, 1, 2, 1), ((Ear((1, 2, 3, 1)), Ear((4, 3, 4))),)
        ).validate()
    # one group cannot span two support components
    with pytest.raises(ValueError):
        EarDecomposition(
            two_triangles,
            (1, 1, 1, 1, 1, 1),
            ((Ear((1, 2, 3, 1)), Ear((4, 5, 6, 4))),),
        ).validate()


def test_decomposition_json_round_trip(two_triangles):
    dec = EarDecomposition(
        two_triangles,
        (1, 1, 1, 1, 1, 1),
        ((Ear((1, 2, 3, 1)),), (Ear((4, 5, 6, 4)),)),
    )
    dec.validate()
    back = EarDecomposition.from_json_dict(two_triangles, dec.to_json_dict())
    assert back == dec


@pytest.mark.parametrize(
    "edges_n,phi,mu",
    [
        ((3, [(1, 2), (1, 3), (2, 3)]), 0, 1),  # triangle
        ((4, [(1, 2), (1, 3), (2, 3), (3, 4)]), 1, 2),  # paw
        ((5, cycle_edges(5)), 0, 2),
        ((7, cycle_edges(7)), 0, 3),
    ],
)
def test_phi_star_frozen_values(edges_n, phi, mu):
    g = build(*edges_n)
    result = phi_star(g)
    assert result.phi_star == phi
    assert result.mu_star == mu
    assert mu_star_value(g) == mu


def test_phi_star_additive_over_components(two_triangles, bowtie):
    assert mu_star_value(two_triangles) == 2
    assert phi_star(two_triangles).phi_star == 0
    assert mu_star_value(bowtie) == 2
    assert phi_star(bowtie).phi_star == 0


def test_phi_star_larger_examples(tri_pentagon, bowtie_pendants, two_tri_edge, two_tri_path):
    assert mu_star_value(tri_pentagon) == 3
    assert phi_star(tri_pentagon).phi_star == 1
    assert mu_star_value(bowtie_pendants) == 6
    assert phi_star(bowtie_pendants).phi_star == 4
    assert mu_star_value(two_tri_edge) == 3
    assert mu_star_value(two_tri_path) == 4


def test_phi_star_witness_is_coherent(paw, tri_pentagon, two_triangles):
    for g in (paw, tri_pentagon, two_triangles):
        result = phi_star(g)
        dec = result.witness_decomposition
        dec.validate()
        assert dec.weights == (1,) * g.n
        assert dec.is_initially_odd
        assert dec.phi == result.phi_star
        wg = WeightedGraph(g, result.witness_weights)
        assert is_matching_critical(wg)
        assert matching_number(wg) == result.mu_star


def test_critical_weights_on_paw(paw):
    result = phi_star(paw)
    weights, odd = critical_weights(result.witness_decomposition)
    assert weights == (1, 1, 2, 1)
    assert odd.all_odd
    assert sum(weights) == paw.n + result.phi_star
    assert is_factor_critical(WeightedGraph(paw, weights))


def test_critical_weights_needs_initially_odd():
    # an even closed walk as first ear is rejected up front
    dec = EarDecomposition(
        build(4, cycle_edges(4)), (1, 1, 1, 1), ((Ear((1, 2, 3, 4, 1)),),)
    )
    with pytest.raises(ValueError):
        critical_weights(dec)


def test_mu_star_via_weights_matches(paw, tri_pentagon, two_triangles, c7):
    for g in (paw, tri_pentagon, two_triangles, c7):
        direct = mu_star_value(g)
        searched = mu_star_via_weights(g)
        assert searched.mu_star == direct
        assert searched.witness_decomposition is None
        wg = WeightedGraph(g, searched.witness_weights)
        assert matching_number(wg) == direct
        assert is_matching_critical(wg)


def test_mu_star_via_weights_budget(c7):
    with pytest.raises(ResourceLimitError):
        mu_star_via_weights(c7, t_max=1)


def test_reduce_decomposition_peels_one_unit(paw):
    _, odd = critical_weights(phi_star(paw).witness_decomposition)
    reduced = reduce_decomposition(odd, 3)
    assert reduced.weights == (1, 1, 1, 1)
    assert reduced.phi <= odd.phi + 1
    assert reduced.groups[0][0].is_odd
    with pytest.raises(ValueError):
        reduce_decomposition(reduced, 3)  # weight already 1


def test_odd_ear_decomposition_existence(triangle, paw, c4):
    found = odd_ear_decomposition(unit_weights(triangle))
    assert found is not None
    assert found.all_odd
    assert odd_ear_decomposition(WeightedGraph(paw, (1, 1, 2, 1))) is not None
    # even total weight cannot be factor-critical
    assert odd_ear_decomposition(unit_weights(paw)) is None
    assert odd_ear_decomposition(unit_weights(c4)) is None


def test_odd_ear_decomposition_input_guards(two_triangles, triangle):
    with pytest.raises(DisconnectedInputError):
        odd_ear_decomposition(unit_weights(two_triangles))
    with pytest.raises(DisconnectedInputError):
        odd_ear_decomposition(WeightedGraph(triangle, (2, 0, 0)))
    edge = build(2, [(1, 2)])
    with pytest.raises(ResourceLimitError):
        odd_ear_decomposition(WeightedGraph(edge, (9, 9)))


def test_mu_star_requires_strongly_non_bipartite(c4, c6):
    with pytest.raises(NotStronglyNonBipartiteError):
        mu_star_value(c4)
    with pytest.raises(NotStronglyNonBipartiteError):
        phi_star(c6)
    with pytest.raises(NotStronglyNonBipartiteError):
        s_invariant(c4)
    mixed = build(4, [(1, 2), (1, 3), (2, 3)])  # isolated vertex 4
    with pytest.raises(IsolatedVertexError):
        mu_star_value(mixed)
    bipartite_component = build(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    with pytest.raises(NotStronglyNonBipartiteError):
        mu_star_value(bipartite_component)


def test_mu_star_component_size_guard():
    with pytest.raises(ResourceLimitError):
        mu_star_value(build(25, cycle_edges(25)))


@pytest.mark.parametrize(
    "edges_n,expected",
    [
        ((3, [(1, 2), (1, 3), (2, 3)]), 1),  # triangle
        ((4, [(1, 2), (1, 3), (2, 3), (3, 4)]), 1),  # paw
        ((5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]), 1),  # bowtie
        ((5, cycle_edges(5)), 2),
        ((7, cycle_edges(7)), 3),
    ],
)
def test_s_invariant_frozen_values(edges_n, expected):
    assert s_invariant(build(*edges_n)) == expected


def test_s_invariant_larger_examples(tri_pentagon, bowtie_pendants):
    assert s_invariant(tri_pentagon) == 2
    assert s_invariant(bowtie_pendants) == 2
    w_graph, _ = bowtie_pendants.induced_subgraph({1, 2, 3, 4, 5})
    assert s_invariant(w_graph) == 1
    assert mu_star_value(w_graph) == 2


def test_s_invariant_witness_qualifies(tri_pentagon, bowtie_pendants):
    for g in (tri_pentagon, bowtie_pendants):
        s, u = s_invariant_with_witness(g)
        assert g.is_dominating(frozenset(u))
        sub, _ = g.induced_subgraph(u)
        assert sub.is_strongly_non_bipartite()
        assert mu_star_value(sub) == s


def test_s_invariant_witness_frozen(bowtie_pendants):
    assert s_invariant_with_witness(bowtie_pendants) == (2, (1, 2, 3, 4, 5))
