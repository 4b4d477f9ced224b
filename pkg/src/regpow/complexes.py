"""Facet-based simplicial complexes and the Stanley-Reisner correspondence.

A complex on vertex set {0, .., n-1} stores its facets as bitmasks.  The void
complex (no faces at all) and the empty complex (just the empty face) are
distinct values; consumers must branch on both.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from ._bits import bits, mask_of, submasks, vertices_of
from .monomials import MonomialIdeal, support_mask


def _maximal_antichain(masks: Iterable[int]) -> frozenset[int]:
    """Keep only the inclusion-maximal masks."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


class SimplicialComplex:
    __slots__ = ("n", "facets", "_faces")

    def __init__(self, n: int, facet_masks: Iterable[int] = (), *, _trusted: bool = False):
        if n < 1:
            raise ValueError("vertex count must be positive")
        self.n = n
        if _trusted:
            self.facets = frozenset(facet_masks)
        else:
            masks = list(facet_masks)
            full = (1 << n) - 1
            for m in masks:
                if m & ~full:
                    raise ValueError(f"facet mask {m:b} uses vertices outside 0..{n - 1}")
            self.facets = _maximal_antichain(masks)
        self._faces = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(n, (mask_of(f) for f in facets))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        """The empty complex {emptyset} (distinct from the void complex)."""
        return cls(n, (0,))

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((1 << n) - 1,))

    # -- structure ---------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset((0,))

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("dimension of the void complex is undefined")
        return max(m.bit_count() for m in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def apex_mask(self) -> int:
        """Vertices shared by every facet (cone apexes); 0 for the void complex."""
        if self.is_void:
            return 0
        m = (1 << self.n) - 1
        for f in self.facets:
            m &= f
        return m

    def is_cone(self, t: int) -> bool:
        """True iff t lies in every facet; False for the void complex."""
        if not 0 <= t < self.n:
            raise ValueError(f"vertex {t} out of range")
        if self.is_void:
            return False
        return bool((self.apex_mask >> t) & 1)

    def faces(self) -> frozenset[int]:
        """All faces as masks (memoized)."""
        if self._faces is None:
            out: set[int] = set()
            for facet in self.facets:
                for sub in submasks(facet):
                    out.add(sub)
            self._faces = frozenset(out)
        return self._faces

    def contains_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension (including the empty face at -1)."""
        counts: dict[int, int] = {}
        for f in self.faces():
            d = f.bit_count() - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def link(self, face_mask: int) -> "SimplicialComplex":
        """Link of a face: all G disjoint from F with F u G a face."""
        if not self.contains_face(face_mask):
            raise ValueError("link of a non-face")
        return SimplicialComplex(
            self.n,
            _maximal_antichain(f & ~face_mask for f in self.facets if f & face_mask == face_mask),
            _trusted=True,
        )

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if self.n != other.n:
            raise ValueError("vertex counts differ")
        return SimplicialComplex(self.n, self.facets | other.facets)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if self.n != other.n:
            raise ValueError("vertex counts differ")
        masks = {a & b for a in self.facets for b in other.facets}
        return SimplicialComplex(self.n, masks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex({self.n}, void)"
        sets = sorted(tuple(v + 1 for v in vertices_of(f)) for f in self.facets)
        return f"SimplicialComplex({self.n}, facets={sets})"

    # -- serialization (1-based vertices) -----------------------------------

    def to_dict(self) -> dict:
        facets = sorted(sorted(v + 1 for v in vertices_of(f)) for f in self.facets)
        return {"n": self.n, "facets": facets}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        n = int(data["n"])
        facets = [[int(v) - 1 for v in f] for f in data.get("facets", ())]
        for f in facets:
            if any(not 0 <= v < n for v in f):
                raise ValueError("facet vertex out of range")
        return cls.from_facets(n, facets)


def _independent_masks(n: int, supports: tuple[int, ...]) -> list[int]:
    """Maximal masks containing no support, by full subset scan (small n)."""
    full = (1 << n) - 1
    blocked = bytearray(1 << n)
    for m in range(1 << n):
        for s in supports:
            if m & s == s:
                blocked[m] = 1
                break
    facets = []
    for m in range(1 << n):
        if blocked[m]:
            continue
        if all((m >> v) & 1 or blocked[m | (1 << v)] for v in range(n)):
            facets.append(m)
    return facets


def _minimal_transversals(supports: list[int]) -> list[int]:
    """Minimal hitting sets of a family of masks, by recursive branching."""
    found: set[int] = set()

    def rec(remaining: list[int], cover: int) -> None:
        if not remaining:
            found.add(cover)
            return
        pivot = min(remaining, key=lambda s: s.bit_count())
        for v in bits(pivot):
            bit = 1 << v
            rec([s for s in remaining if not s & bit], cover | bit)

    rec(supports, 0)
    # branching can emit non-minimal covers; keep the inclusion-minimal ones
    minimal = []
    for m in sorted(found, key=lambda m: (m.bit_count(), m)):
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    return minimal


@lru_cache(maxsize=None)
def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree monomial ideal.

    Facets are the complements of the minimal vertex covers of the generator
    hypergraph.  The unit ideal gives the void complex; the zero ideal the
    full simplex.
    """
    if not ideal.is_squarefree:
        raise ValueError("Stanley-Reisner complex requires a squarefree ideal")
    n = ideal.n
    if ideal.is_unit:
        return SimplicialComplex.void(n)
    if ideal.is_zero:
        return SimplicialComplex.full_simplex(n)
    supports = tuple(support_mask(g) for g in ideal.gens)
    if n <= 13:
        facets = _independent_masks(n, supports)
    else:
        full = (1 << n) - 1
        facets = [full ^ t for t in _minimal_transversals(list(supports))]
    return SimplicialComplex(n, facets, _trusted=True)


def ideal_of_complex(cx: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces."""
    if cx.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    n = cx.n
    if n > 20:
        raise ValueError("minimal non-face enumeration is limited to n <= 20")
    faces = cx.faces()
    gens = []
    for m in range(1 << n):
        if m in faces:
            continue
        if all(not (m >> v) & 1 or (m ^ (1 << v)) in faces for v in range(n)):
            gens.append(tuple((m >> j) & 1 for j in range(n)))
    return MonomialIdeal(n, gens)
