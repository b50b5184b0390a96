"""Brute-force socle oracle for membership of the maximal ideal in Ass(I^t).

x^a lies in (I^t : m) \\ I^t exactly when nu(G_a) < t while every
increment a + e_i reaches nu >= t.  The scan consults only matching
numbers and graph primitives, never the ear or associated-primes theory,
so its verdicts stay an independent cross-check of the main engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotACoverError, ResourceLimitError
from .graph import Graph, canonical_key
from .weighted import WeightedGraph, WeightVector, matching_number

DEFAULT_GUARD_OPS = 10**8

# per canonical core graph: (largest s checked, least s with a witness)
_CORE_S_CACHE: dict[tuple, tuple[int, int | None]] = {}


def clear_caches() -> None:
    _CORE_S_CACHE.clear()


@dataclass(frozen=True)
class SocleWitness:
    """Exponent vector of a socle monomial of R/I^t."""

    t: int
    weights: WeightVector

    def to_json_dict(self) -> dict:
        return {"t": self.t, "a": list(self.weights)}


def _is_socle_vector(g: Graph, a: WeightVector, t: int) -> bool:
    wg = WeightedGraph(g, a)
    support = wg.support()
    # a vertex outside N[V(a)] stays isolated after its own increment
    if not g.is_dominating(support):
        return False
    # an isolated support vertex cannot gain an edge from its increment
    if not support or wg.has_isolated_support_vertex():
        return False
    # nu moves by at most one per added unit, so only nu = t-1 can work
    if matching_number(wg) != t - 1:
        return False
    return all(
        matching_number(wg.with_weight_delta(i, 1)) >= t for i in g.vertices
    )


def oracle_max_ideal_in_ass(
    g: Graph,
    t: int,
    guard_ops: int = DEFAULT_GUARD_OPS,
    debug_widen: bool = False,
) -> SocleWitness | None:
    """First socle witness in lexicographic order, or None.

    Scans every a with 0 <= a_i <= t-1 (socle exponents cannot exceed
    t-1).  With debug_widen the scan runs up to a_i <= t instead and
    raises if any witness breaches the t-1 bound, re-validating the bound
    itself.
    """
    if t < 1:
        raise ValueError("t must be positive")
    bound = t + 1 if debug_widen else t
    if bound**g.n > guard_ops:
        raise ResourceLimitError(
            f"scan size {bound}^{g.n} exceeds guard_ops={guard_ops}"
        )
    first: SocleWitness | None = None
    for a in itertools.product(range(bound), repeat=g.n):
        if not _is_socle_vector(g, a, t):
            continue
        if not debug_widen:
            return SocleWitness(t, a)
        if max(a) > t - 1:
            raise AssertionError(
                f"widened scan found witness {a} breaching the a_i <= t-1 bound"
            )
        if first is None:
            first = SocleWitness(t, a)
    return first


def oracle_prime_in_ass(
    g: Graph,
    f,
    t: int,
    guard_ops: int = DEFAULT_GUARD_OPS,
) -> bool:
    """Is P_F associated to I^t, decided through the socle oracle alone.

    Minimal covers are always associated; otherwise P_F is associated
    exactly when the maximal ideal of the core's induced subgraph turns up
    at some power s <= t.
    """
    if t < 1:
        raise ValueError("t must be positive")
    fset = frozenset(f)
    if not g.is_cover(fset):
        raise NotACoverError(f"{sorted(fset)} is not a cover")
    if g.is_minimal_cover(fset):
        return True
    core = g.core_of_cover(fset)
    if not core:
        raise RuntimeError("non-minimal cover with empty core")
    sub, _ = g.induced_subgraph(core)
    key = canonical_key(sub)
    checked, found = _CORE_S_CACHE.get(key, (0, None))
    if found is not None:
        return found <= t
    if checked >= t:
        return False
    for s in range(checked + 1, t + 1):
        if oracle_max_ideal_in_ass(sub, s, guard_ops) is not None:
            _CORE_S_CACHE[key] = (s, s)
            return True
    _CORE_S_CACHE[key] = (t, None)
    return False


def verify_socle_conditions(g: Graph, w: SocleWitness) -> bool:
    """Structural conclusions every socle witness must satisfy.

    Checks: the support dominates, the weighted graph has no isolated
    support vertex, nu equals t-1, and every unit decrement inside the
    support either keeps nu = t-1 or is itself a socle exponent vector
    for t-1.
    """
    t, a = w.t, w.weights
    if t < 1:
        raise ValueError("t must be positive")
    if len(a) != g.n:
        raise ValueError("weight vector length differs from vertex count")
    wg = WeightedGraph(g, a)
    support = sorted(wg.support())
    if not g.is_dominating(frozenset(support)):
        return False
    if not support or wg.has_isolated_support_vertex():
        return False
    if matching_number(wg) != t - 1:
        return False
    downs = {i: wg.with_weight_delta(i, -1) for i in support}
    if all(matching_number(down) == t - 1 for down in downs.values()):
        return True
    if t == 1:  # the socle of R/I^0 is empty, no fallback available
        return False
    return any(
        matching_number(down) <= t - 2
        and all(
            matching_number(down.with_weight_delta(j, 1)) >= t - 1
            for j in g.vertices
        )
        for down in downs.values()
    )
