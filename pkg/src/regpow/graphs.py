"""Simple graphs on {0, .., n-1}: edge ideals, predicates, and generators.

Adjacency is stored as one bitmask per vertex.  Graphs are immutable and
hashable; vertex numbering is 0-based in code and 1-based in files and JSON.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterable, Iterator

from ._bits import bits, mask_of, vertices_of
from .monomials import MonomialIdeal


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise ValueError("vertex count must be positive")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, edges={[(u + 1, v + 1) for u, v in self.edges()]})"

    # -- basic accessors ----------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighborhood_mask(self, umask: int) -> int:
        """Open neighborhood of a vertex set given as a mask."""
        out = 0
        for v in bits(umask):
            out |= self.adj[v]
        return out

    def closed_neighborhood_mask(self, umask: int) -> int:
        return self.neighborhood_mask(umask) | umask

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ self.adj[v]) & ~(1 << v) for v in range(self.n)))

    def has_edge_within(self, mask: int) -> bool:
        return any(self.adj[v] & mask & ~(1 << v) for v in bits(mask))

    def is_independent_set(self, mask: int) -> bool:
        return not self.has_edge_within(mask)

    def edge_mask(self) -> int:
        """Edge set packed into a bitmask over the lexicographic pair order."""
        m = 0
        for k, (u, v) in enumerate(itertools.combinations(range(self.n), 2)):
            if self.has_edge(u, v):
                m |= 1 << k
        return m

    # -- predicates ----------------------------------------------------------

    def is_gap_free(self) -> bool:
        """No two disjoint edges without a connecting edge (no induced 2K2)."""
        es = self.edges()
        for i, (a, b) in enumerate(es):
            m1 = (1 << a) | (1 << b)
            reach = self.adj[a] | self.adj[b]
            for c, d in es[i + 1 :]:
                m2 = (1 << c) | (1 << d)
                if m1 & m2:
                    continue
                if not reach & m2:
                    return False
        return True

    def is_dominating_edge(self, u: int, v: int) -> bool:
        """True iff deleting N[{u,v}] leaves no edges.

        For gap-free graphs this holds for every edge; the predicate is the
        per-edge form of that property.
        """
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        rest = ((1 << self.n) - 1) & ~self.closed_neighborhood_mask((1 << u) | (1 << v))
        return not self.has_edge_within(rest)

    def is_chordal(self) -> bool:
        """Perfect elimination test by repeated simplicial-vertex deletion."""
        remaining = (1 << self.n) - 1
        while remaining:
            for v in bits(remaining):
                nb = self.adj[v] & remaining
                if all(nb & ~(1 << u) & ~self.adj[u] == 0 for u in bits(nb)):
                    remaining &= ~(1 << v)
                    break
            else:
                return False
        return True

    # -- independent sets and covers ------------------------------------------

    def maximal_independent_sets(self) -> list[int]:
        """All maximal independent sets, via Bron-Kerbosch on non-adjacency."""
        n = self.n
        full = (1 << n) - 1
        nadj = [(full ^ self.adj[v]) & ~(1 << v) for v in range(n)]
        out: list[int] = []

        def expand(r: int, p: int, x: int) -> None:
            if p == 0 and x == 0:
                out.append(r)
                return
            pivot = max(bits(p | x), key=lambda w: (p & nadj[w]).bit_count())
            for v in bits(p & ~nadj[pivot]):
                bit = 1 << v
                expand(r | bit, p & nadj[v], x & nadj[v])
                p &= ~bit
                x |= bit

        expand(0, full, 0)
        return sorted(out)

    def minimal_vertex_covers(self) -> list[int]:
        """Complements of the maximal independent sets."""
        full = (1 << self.n) - 1
        return sorted(full ^ s for s in self.maximal_independent_sets())

    # -- canonical form --------------------------------------------------------

    def _refined_cells(self) -> list[list[int]]:
        labels = [self.degree(v) for v in range(self.n)]
        for _ in range(2):
            raw = [
                (labels[v], tuple(sorted(labels[u] for u in bits(self.adj[v]))))
                for v in range(self.n)
            ]
            order = {key: i for i, key in enumerate(sorted(set(raw)))}
            labels = [order[key] for key in raw]
        cells: dict[int, list[int]] = {}
        for v in range(self.n):
            cells.setdefault(labels[v], []).append(v)
        return [cells[k] for k in sorted(cells)]

    def canonical_form(self) -> int:
        """Minimum edge mask over vertex orderings compatible with the
        degree-refinement cells (an isomorphism-invariant representative)."""
        if self.n > 7:
            raise ValueError("canonical form is supported for n <= 7")
        cells = self._refined_cells()
        pair_index = {
            pair: k for k, pair in enumerate(itertools.combinations(range(self.n), 2))
        }
        best = None
        for perm_parts in itertools.product(*(itertools.permutations(c) for c in cells)):
            ordering = [v for part in perm_parts for v in part]
            pos = [0] * self.n
            for i, v in enumerate(ordering):
                pos[v] = i
            m = 0
            for u, v in self.edges():
                a, b = pos[u], pos[v]
                if a > b:
                    a, b = b, a
                m |= 1 << pair_index[(a, b)]
            if best is None or m < best:
                best = m
        return best if best is not None else 0


@lru_cache(maxsize=None)
def edge_ideal(g: Graph) -> MonomialIdeal:
    """Squarefree quadratic ideal with one generator x_u x_v per edge."""
    gens = []
    for u, v in g.edges():
        exp = [0] * g.n
        exp[u] = exp[v] = 1
        gens.append(tuple(exp))
    return MonomialIdeal(g.n, gens)


# -- constructions -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph; deterministic for a fixed seed."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    rng = random.Random(seed)
    return _gnp_from_rng(n, p, rng)


def _gnp_from_rng(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_gap_free_graph(
    n: int, p: float, seed: int, max_attempts: int = 10_000
) -> tuple[Graph, int]:
    """Rejection-sample a gap-free graph; returns (graph, attempts used)."""
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        g = _gnp_from_rng(n, p, rng)
        if g.is_gap_free():
            return g, attempt
    raise RuntimeError(f"no gap-free graph found in {max_attempts} attempts")


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on [n], in edge-mask order."""
    if not 1 <= n <= 7:
        raise ValueError("exhaustive enumeration is supported for 1 <= n <= 7")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])


def graph_isomorphism_classes(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class (the canonical-form member)."""
    for g in all_labeled_graphs(n):
        if g.edge_mask() == g.canonical_form():
            yield g


# -- text and JSON formats (1-based) --------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse the plain format: first line "n m", then m lines "u v", u < v."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("line 1: empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError('line 1: expected "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError('line 1: expected two integers "n m"') from None
    if n < 1:
        raise ValueError("line 1: vertex count must be positive")
    if len(lines) != m + 1:
        raise ValueError(f"line {len(lines)}: expected {m} edge lines, found {len(lines) - 1}")
    seen = set()
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f'line {i}: expected "u v"')
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {i}: expected two integers") from None
        if not 1 <= u < v <= n:
            raise ValueError(f"line {i}: edge must satisfy 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise ValueError(f"line {i}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


def format_graph_text(g: Graph) -> str:
    es = g.edges()
    out = [f"{g.n} {len(es)}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in es)
    return "\n".join(out) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges()]}


def graph_from_dict(data: dict) -> Graph:
    n = int(data["n"])
    edges = [(int(u) - 1, int(v) - 1) for u, v in data.get("edges", ())]
    return Graph.from_edges(n, edges)
