"""Shared helpers and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own minimalization and
membership code paths so that expected values stay independent of the code
they check.
"""

from __future__ import annotations

import itertools

from regpow import Graph, MonomialIdeal


def monomials_up_to_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree <= d, by direct recursion."""
    out = []

    def rec(j: int, left: int, cur: list[int]) -> None:
        if j == n:
            out.append(tuple(cur))
            return
        for e in range(left + 1):
            cur.append(e)
            rec(j + 1, left - e, cur)
            cur.pop()

    rec(0, d, [])
    return out


def brute_minimal(vectors) -> set[tuple[int, ...]]:
    """Divisibility-minimal elements by pairwise comparison (oracle)."""
    vecs = set(tuple(v) for v in vectors)
    return {
        v
        for v in vecs
        if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in vecs)
    }


def brute_product_power(gens, s: int) -> set[tuple[int, ...]]:
    """Minimal generators of the s-fold product, expanded by brute force."""
    sums = []
    for combo in itertools.combinations_with_replacement(list(gens), s):
        total = tuple(sum(col) for col in zip(*combo))
        sums.append(total)
    return brute_minimal(sums)


def brute_member(vec, gens) -> bool:
    """x^vec lies in the ideal spanned by gens (oracle membership)."""
    return any(all(g <= v for g, v in zip(gen, vec)) for gen in gens)


def random_ideal_from_masks(n: int, masks) -> MonomialIdeal:
    gens = [tuple((m >> j) & 1 for j in range(n)) for m in masks]
    return MonomialIdeal(n, gens)


def graphs_with_edges(graphs) -> list[Graph]:
    return [g for g in graphs if g.edge_count]
