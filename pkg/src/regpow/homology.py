"""Exact reduced simplicial homology over GF(p) and the rationals.

Boundary matrices come from the augmented chain complex with faces ordered by
ascending vertex order and signs (-1)^position.  Ranks are computed by plain
Gaussian elimination over GF(p) (bitmask XOR elimination for GF(2)) and by
fraction-free elimination over the rationals, so every dimension is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import bits
from .complexes import SimplicialComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoefficientField:
    """GF(p) for a prime p (char=p) or the rationals (char=0)."""

    char: int

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"{self.char} is not prime")

    @property
    def label(self) -> str:
        if self.char == 0:
            return "q"
        if self.char == 2:
            return "gf2"
        return f"gfp:{self.char}"

    @classmethod
    def parse(cls, text: str) -> "CoefficientField":
        text = text.strip().lower()
        if text in ("q", "qq", "rational", "rationals"):
            return cls(0)
        if text == "gf2":
            return cls(2)
        if text.startswith("gfp:"):
            return cls(int(text[4:]))
        raise ValueError(f"unknown field {text!r} (expected gf2, gfp:P, or q)")


GF2 = CoefficientField(2)
QQ = CoefficientField(0)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions of a complex over one field."""

    field: str
    dims: dict[int, int]

    def h(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims.values())

    def nonzero(self) -> tuple[int, ...]:
        return tuple(sorted(i for i, d in self.dims.items() if d))


def _rank_gf2(columns: list[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for v in columns:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                rank += 1
                break
            v ^= b
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [[x % p for x in row] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = pow(mat[row][col], p - 2, p)
        mat[row] = [(x * inv) % p for x in mat[row]]
        for r in range(m):
            if r != row and mat[r][col]:
                c = mat[r][col]
                mat[r] = [(a - c * b) % p for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank over the rationals by Bareiss elimination on integer entries."""
    if not rows or not rows[0]:
        return 0
    mat = [list(row) for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    prev = 1
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        piv = mat[r][col]
        for i in range(r + 1, m):
            fi = mat[i][col]
            if fi == 0 and piv == prev:
                continue
            row_i = mat[i]
            row_r = mat[r]
            for j in range(col, n):
                row_i[j] = (row_i[j] * piv - fi * row_r[j]) // prev
        prev = piv
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def _canonical_facet_key(facets: frozenset[int]) -> tuple[int, ...]:
    """Facets with the vertex set compressed to 0..k-1 (cache key)."""
    used = 0
    for f in facets:
        used |= f
    if used == 0:
        return tuple(sorted(facets))
    remap = {old: new for new, old in enumerate(bits(used))}
    out = []
    for f in facets:
        m = 0
        for v in bits(f):
            m |= 1 << remap[v]
        out.append(m)
    return tuple(sorted(out))


def _boundary_rank(cells_lo: list[int], cells_hi: list[int], field: CoefficientField) -> int:
    """Rank of the boundary map from span(cells_hi) to span(cells_lo)."""
    index = {m: i for i, m in enumerate(cells_lo)}
    if field.char == 2:
        cols = []
        for m in cells_hi:
            v = 0
            for b in bits(m):
                v |= 1 << index[m ^ (1 << b)]
            cols.append(v)
        return _rank_gf2(cols)
    mat = [[0] * len(cells_hi) for _ in cells_lo]
    for j, m in enumerate(cells_hi):
        sign = 1
        for b in bits(m):
            mat[index[m ^ (1 << b)]][j] = sign
            sign = -sign
    if field.char == 0:
        return _rank_fraction_free(mat)
    return _rank_mod_p(mat, field.char)


def _homology_dims(facets: tuple[int, ...], field: CoefficientField) -> dict[int, int]:
    if not facets:
        return {}
    faces: set[int] = set()
    for facet in facets:
        sub = facet
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & facet
    top = max(m.bit_count() for m in facets)
    cells: list[list[int]] = [[] for _ in range(top + 1)]
    for m in faces:
        cells[m.bit_count()].append(m)
    for level in cells:
        level.sort()
    ranks = [0] * (top + 2)  # ranks[c] = rank of boundary from c-cells to (c-1)-cells
    for c in range(1, top + 1):
        ranks[c] = _boundary_rank(cells[c - 1], cells[c], field)
    return {
        c - 1: len(cells[c]) - ranks[c] - ranks[c + 1]
        for c in range(top + 1)
    }


_PROFILE_CACHE: dict[tuple[tuple[int, ...], CoefficientField], dict[int, int]] = {}


def homology(cx: SimplicialComplex, field: CoefficientField = GF2) -> HomologyProfile:
    """Reduced homology profile; the void complex yields an all-zero profile."""
    if cx.is_void:
        return HomologyProfile(field.label, {})
    key = (_canonical_facet_key(cx.facets), field)
    dims = _PROFILE_CACHE.get(key)
    if dims is None:
        dims = _homology_dims(key[0], field)
        _PROFILE_CACHE[key] = dims
    return HomologyProfile(field.label, dict(dims))


def homology_fresh(cx: SimplicialComplex, field: CoefficientField = GF2) -> HomologyProfile:
    """Recompute homology without consulting the cache (for re-verification)."""
    if cx.is_void:
        return HomologyProfile(field.label, {})
    return HomologyProfile(field.label, _homology_dims(tuple(sorted(cx.facets)), field))


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating face-count sum, independent of any homology computation."""
    if cx.is_void:
        return 0
    return sum((-1) ** d * c for d, c in cx.f_vector().items())
