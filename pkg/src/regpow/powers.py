"""Ordinary and symbolic powers, intermediate ideals, and colon identities.

Symbolic powers are constructed by intersecting powers of the minimal primes
(for edge ideals: minimal vertex covers); the derivative-based membership test
is kept as an independent route so the two can cross-check each other.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ._bits import bits, submasks, vertices_of
from .complexes import _minimal_transversals
from .graphs import Graph, edge_ideal
from .monomials import (
    Exponent,
    MonomialIdeal,
    intersect_many,
    monomial_derivative,
    support_mask,
    unit_ideal,
)


def _variable_power_ideal(n: int, var_mask: int, s: int) -> MonomialIdeal:
    """(x_j : j in mask)^s: all degree-s monomials in the chosen variables."""
    vs = vertices_of(var_mask)
    gens = []
    for combo in itertools.combinations_with_replacement(vs, s):
        exp = [0] * n
        for v in combo:
            exp[v] += 1
        gens.append(tuple(exp))
    return MonomialIdeal(n, gens)


def symbolic_power_of_ideal(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """s-th symbolic power of a squarefree monomial ideal.

    Computed as the intersection of (minimal prime)^s over the minimal primes,
    which correspond to the minimal transversals of the generator supports.
    """
    if s < 1:
        raise ValueError("power must be >= 1")
    if not ideal.is_squarefree:
        raise ValueError("symbolic powers are implemented for squarefree ideals")
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("symbolic power of the zero or unit ideal is not defined here")
    supports = [support_mask(g) for g in ideal.gens]
    primes = _minimal_transversals(supports)
    return intersect_many(
        ideal.n, (_variable_power_ideal(ideal.n, t, s) for t in sorted(primes))
    )


@lru_cache(maxsize=None)
def symbolic_power(g: Graph, s: int) -> MonomialIdeal:
    """s-th symbolic power of the edge ideal, via minimal vertex covers."""
    if s < 1:
        raise ValueError("power must be >= 1")
    if g.edge_count == 0:
        warnings.warn("edgeless graph: symbolic power of the zero ideal is zero")
        return MonomialIdeal(g.n)
    covers = g.minimal_vertex_covers()
    return intersect_many(g.n, (_variable_power_ideal(g.n, c, s) for c in covers))


def differential_membership(f: Sequence[int], ideal: MonomialIdeal, s: int) -> bool:
    """Membership of x^f in the s-th differential power of a squarefree ideal.

    Checks that every coefficient-free derivative of order <= s-1 lies in the
    ideal.  Derivative directions a with a not <= f give the zero polynomial
    and impose no constraint, so only a <= f are enumerated.
    """
    if not ideal.is_squarefree:
        raise ValueError("the differential power test requires a squarefree ideal")
    if s < 1:
        raise ValueError("power must be >= 1")
    f = tuple(int(e) for e in f)
    n = ideal.n
    if len(f) != n:
        raise ValueError("vector length does not match the ideal")
    gens = ideal.gens

    def in_ideal(vec: list[int]) -> bool:
        return any(all(ge <= ve for ge, ve in zip(g, vec)) for g in gens)

    def rec(j: int, budget: int, deriv: list[int]) -> bool:
        if not in_ideal(deriv):
            return False
        if budget == 0:
            return True
        for k in range(j, n):
            if deriv[k] > 0:
                deriv[k] -= 1
                ok = rec(k, budget - 1, deriv)
                deriv[k] += 1
                if not ok:
                    return False
        return True

    return rec(0, s - 1, list(f))


@dataclass(frozen=True)
class IntermediateSpec:
    """Selects an ideal between I(G)^s and its symbolic power.

    selector: "none" (the ordinary power), "all" (the symbolic power),
    "random" (seeded coin flips over the candidate generators), or an explicit
    tuple of exponent vectors drawn from the candidates.
    """

    graph: Graph
    s: int
    selector: str | tuple[Exponent, ...] = "none"
    seed: int | None = None


def _intermediate_of(
    base: MonomialIdeal,
    top: MonomialIdeal,
    selector: str | tuple[Exponent, ...],
    seed,
) -> MonomialIdeal:
    pool = [g for g in top.gens if not base.contains(g)]
    if selector == "none":
        chosen: list[Exponent] = []
    elif selector == "all":
        chosen = pool
    elif selector == "random":
        rng = random.Random(seed)
        chosen = [g for g in pool if rng.random() < 0.5]
    else:
        pool_set = set(pool)
        chosen = [tuple(int(e) for e in g) for g in selector]
        for g in chosen:
            if g not in pool_set:
                raise ValueError(
                    f"{g} is not a minimal generator of the symbolic power outside the power"
                )
    return MonomialIdeal(base.n, base.gens + tuple(chosen))


def intermediate_ideal(spec: IntermediateSpec) -> MonomialIdeal:
    ideal = edge_ideal(spec.graph)
    base = ideal.power(spec.s)
    top = symbolic_power(spec.graph, spec.s)
    return _intermediate_of(base, top, spec.selector, spec.seed)


def sample_intermediates(g: Graph, s: int, count: int, seed: int) -> list[MonomialIdeal]:
    """Deterministic list of seeded random intermediate ideals."""
    ideal = edge_ideal(g)
    base = ideal.power(s)
    top = symbolic_power(g, s)
    return [
        _intermediate_of(base, top, "random", f"{seed}:{k}") for k in range(count)
    ]


@lru_cache(maxsize=None)
def edge_packing_order(g: Graph, f: Exponent) -> int:
    """Largest t such that x^f is divisible by a product of t edges."""
    if len(f) != g.n:
        raise ValueError("vector length does not match the graph")
    best = 0
    for u, v in g.edges():
        if f[u] >= 1 and f[v] >= 1:
            residual = list(f)
            residual[u] -= 1
            residual[v] -= 1
            t = 1 + edge_packing_order(g, tuple(residual))
            if t > best:
                best = t
    return best


def power_membership(f: Sequence[int], ideal: MonomialIdeal, s: int) -> bool:
    """True iff x^f is divisible by a product of s generators."""
    if s < 1:
        raise ValueError("power must be >= 1")
    f = tuple(int(e) for e in f)
    gens = ideal.gens
    memo: dict[tuple[Exponent, int], bool] = {}

    def rec(vec: Exponent, t: int) -> bool:
        if t == 0:
            return True
        key = (vec, t)
        cached = memo.get(key)
        if cached is not None:
            return cached
        result = False
        for gen in gens:
            if all(ge <= ve for ge, ve in zip(gen, vec)):
                if rec(tuple(ve - ge for ve, ge in zip(vec, gen)), t - 1):
                    result = True
                    break
        memo[key] = result
        return result

    return rec(f, s)


def independent_set_colon_criterion(
    g: Graph, face_mask: int, a: Sequence[int], s: int
) -> bool:
    """Degree-plus-packing criterion for x_F lying in sqrt(I^s : x^a).

    F must be an independent set; the test sums the exponents of a over the
    open neighborhood of F and adds the edge-packing order of the part of x^a
    supported outside the closed neighborhood.
    """
    if not g.is_independent_set(face_mask):
        raise ValueError("the face must be an independent set")
    a = tuple(int(e) for e in a)
    open_nb = g.neighborhood_mask(face_mask)
    closed_nb = open_nb | face_mask
    total = sum(a[j] for j in bits(open_nb))
    residual = tuple(a[j] if not (closed_nb >> j) & 1 else 0 for j in range(g.n))
    return total + edge_packing_order(g, residual) >= s


# Colon-identity patterns, keyed by the exponent shape of x^a on the chosen
# vertices: "11" (s=2) and "21", "211", "1111" (s=3).
COLON_PATTERNS = {"11": 2, "21": 3, "211": 3, "1111": 3}


def colon_identity_holds(
    g: Graph, s: int, pattern: str, vertices: Sequence[int]
) -> bool:
    """Check one radical-colon identity for the symbolic power against the
    corresponding intersection of colon ideals of the edge ideal."""
    if pattern not in COLON_PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    if s != COLON_PATTERNS[pattern]:
        raise ValueError(f"pattern {pattern!r} requires s = {COLON_PATTERNS[pattern]}")
    shape = [int(c) for c in pattern]
    vs = [int(v) for v in vertices]
    if len(vs) != len(shape):
        raise ValueError(f"pattern {pattern!r} needs {len(shape)} vertices")
    if len(set(vs)) != len(vs):
        raise ValueError("vertices must be distinct")
    if any(not 0 <= v < g.n for v in vs):
        raise ValueError("vertex out of range")
    ideal = edge_ideal(g)
    if ideal.is_zero:
        raise ValueError("the graph has no edges")
    n = g.n
    a = [0] * n
    for v, e in zip(vs, shape):
        a[v] = e
    lhs = symbolic_power(g, s).radical_colon(tuple(a))

    def colon_vars(*js: int) -> MonomialIdeal:
        b = [0] * n
        for j in js:
            b[j] += 1
        return ideal.colon(tuple(b))

    if pattern in ("11", "21"):
        rhs = colon_vars(vs[0]).intersect(colon_vars(vs[1]))
    elif pattern == "211":
        rhs = colon_vars(vs[0]).intersect(colon_vars(vs[1], vs[2]))
    else:  # "1111": colon by every non-edge pair among the four vertices
        parts = [
            colon_vars(p, q)
            for p, q in itertools.combinations(sorted(vs), 2)
            if not g.has_edge(p, q)
        ]
        rhs = intersect_many(n, parts)
    return lhs == rhs
