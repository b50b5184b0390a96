"""Acceptance gate: the six headline checks, each with its time budget."""

import random
import time
from pathlib import Path

import edgepow.socle as socle
from edgepow.assoc import ass_infinity, associated_primes, max_ideal_in_ass
from edgepow.catalog import random_connected_graph
from edgepow.cli import _compare_one
from edgepow.ears import mu_star_value, s_invariant
from edgepow.graph import canonical_key
from edgepow.sbases import enumerate_minimal_sbases, is_minimal_sbase
from edgepow.socle import DEFAULT_GUARD_OPS, verify_socle_conditions

import _suites


def _report(k: int, start: float, budget: float | None, detail: str) -> None:
    elapsed = time.monotonic() - start
    print(f"criterion {k} PASS ({elapsed:.2f}s): {detail}")
    if budget is not None:
        assert elapsed < budget, f"criterion {k} exceeded {budget}s"


def test_criterion_1_tri_pentagon_exact(tri_pentagon):
    start = time.monotonic()
    g = tri_pentagon
    assert associated_primes(g, 1).embedded_primes == ()
    embedded_2 = {r.cover for r in associated_primes(g, 2).embedded_primes}
    assert embedded_2 == {(1, 2, 3, 4, 5)}
    for t in (3, 4):
        embedded_t = {r.cover for r in associated_primes(g, t).embedded_primes}
        assert embedded_t == {(1, 2, 3, 4, 5), (1, 2, 3, 4, 5, 6)}
    assert ass_infinity(g).astab == 3
    _report(1, start, 1.0, "embedded staircase and astab=3 on the triangle-pentagon graph")


def test_criterion_2_bowtie_pendants(bowtie_pendants):
    start = time.monotonic()
    g = bowtie_pendants
    assert [max_ideal_in_ass(g, t) for t in (1, 2, 3, 4)] == [False, False, True, True]
    assert s_invariant(g) == 2
    w = [v for v in g.vertices if g.degree(v) >= 2]
    assert w == [1, 2, 3, 4, 5]
    sub, _ = g.induced_subgraph(w)
    assert s_invariant(sub) == 1
    assert mu_star_value(sub) == 2
    _report(2, start, 1.0, "maximal ideal enters at t=3; inner bowtie has s=1, mu*=2")


def test_criterion_3_sbase_catalogs(
    triangle, paw, bowtie, c5, two_triangles, two_tri_edge, two_tri_path
):
    start = time.monotonic()
    ones = enumerate_minimal_sbases(1)
    assert [canonical_key(b.graph) for b in ones] == [canonical_key(triangle)]
    twos = enumerate_minimal_sbases(2)
    assert {canonical_key(b.graph) for b in twos} == {
        canonical_key(paw),
        canonical_key(bowtie),
        canonical_key(c5),
        canonical_key(two_triangles),
    }
    assert is_minimal_sbase(two_tri_edge, 3)
    assert is_minimal_sbase(two_tri_path, 4)
    _report(3, start, 30.0, "1-base and 2-base catalogs exact; both 7-vertex bases minimal")


def test_criterion_4_differential_exhaustive(catalog6):
    start = time.monotonic()
    checked = 0
    graphs = 0
    for n in sorted(catalog6):
        for g in catalog6[n]:
            c, mismatches = _compare_one(
                (g.n, tuple(g.sorted_edges()), 4, DEFAULT_GUARD_OPS)
            )
            assert mismatches == [], (g.sorted_edges(), mismatches)
            checked += c
            graphs += 1
    rng = random.Random(20260819)
    for _ in range(200):
        g = random_connected_graph(7, rng)
        c, mismatches = _compare_one(
            (g.n, tuple(g.sorted_edges()), 4, DEFAULT_GUARD_OPS)
        )
        assert mismatches == [], (g.sorted_edges(), mismatches)
        checked += c
        graphs += 1
    _report(
        4,
        start,
        600.0,
        f"{checked} memberships on {graphs} graphs, zero mismatches "
        "(every cover, every connected graph n<=6, t<=4, plus 200 random n=7)",
    )


def test_criterion_5_property_suites(catalog6):
    start = time.monotonic()
    floors = {
        "matching polarization": 12000,
        "critical equivalence": 1000,
        "odd ear characterization": 1000,
        "critical matching number": 100,
        "mu* dual route": 80,
        "embedded iff short odd cycle": 4 * 142,
        "ass monotone": 3 * 142,
        "leaf reduction": 20,
        "astab bound": 142,
    }
    details = []
    for name, suite in _suites.ALL_SUITES:
        checked = suite(catalog6)
        assert checked >= floors[name], (name, checked)
        details.append(f"{name}={checked}")
    _report(5, start, None, "all invariant suites exhaustive; " + ", ".join(details))


def test_criterion_6_socle_oracle_independence(triangle, paw, c5):
    start = time.monotonic()
    source = Path(socle.__file__).read_text()
    for module in ("ears", "assoc", "sbases", "catalog"):
        assert f".{module} import" not in source
        assert f"edgepow.{module}" not in source
    for g, t in ((triangle, 2), (paw, 2), (c5, 3)):
        witness = socle.oracle_max_ideal_in_ass(g, t)
        assert witness is not None and witness.t == t
        assert verify_socle_conditions(g, witness)
    _report(
        6,
        start,
        None,
        "oracle built on matchings alone, no engine imports; "
        "membership answers cross-checked against the engine in criterion 4",
    )
