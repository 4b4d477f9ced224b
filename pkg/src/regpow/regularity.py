"""Castelnuovo-Mumford regularity via degree complexes, plus a Betti-number
oracle over the lcm lattice so the two methods can cross-validate.

The degree-complex route scans exponents a in the box cut out by the maximal
generator degrees, builds the Stanley-Reisner complex of sqrt(I : x^a), and
maximizes |a| + i over faces F disjoint from supp(a) whose link has nonzero
reduced homology in degree i-1.  The Betti route computes multigraded Betti
numbers from upper Koszul subcomplexes and is independent of the scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._bits import bits, mask_of, submasks, vertices_of
from .complexes import SimplicialComplex, complex_of_ideal
from .homology import GF2, CoefficientField, homology, homology_fresh
from .monomials import Exponent, MonomialIdeal, support_mask


class MethodMismatchError(RuntimeError):
    """Raised when two independent computation routes disagree."""


@dataclass(frozen=True)
class RegularityCertificate:
    """An extremal witness: exponent a, homology index i, and face F with
    nonvanishing reduced homology of the link in the degree complex."""

    a: Exponent
    i: int
    face: tuple[int, ...]
    value: int
    field: str

    def to_dict(self) -> dict:
        return {
            "a": list(self.a),
            "i": self.i,
            "F": [v + 1 for v in self.face],
            "value": self.value,
            "field": self.field,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RegularityCertificate":
        return cls(
            a=tuple(int(e) for e in data["a"]),
            i=int(data["i"]),
            face=tuple(int(v) - 1 for v in data["F"]),
            value=int(data["value"]),
            field=str(data["field"]),
        )


def degree_complex(ideal: MonomialIdeal, a) -> SimplicialComplex:
    """Stanley-Reisner complex of sqrt(I : x^a); void when x^a lies in I."""
    return complex_of_ideal(ideal.radical_colon(a))


# (facets, avoid-mask, field) -> tuple of (i, face_mask) with nonzero link homology
_WITNESS_CACHE: dict[tuple, tuple[tuple[int, int], ...]] = {}


def _link_witnesses(
    cx: SimplicialComplex, avoid: int, field: CoefficientField
) -> tuple[tuple[int, int], ...]:
    """All (i, F) with F a face avoiding ``avoid`` and H~_{i-1}(link F) != 0.

    Faces missing a cone apex have acyclic links, so only faces containing
    every apex can witness; if an apex lies inside ``avoid`` nothing can.
    """
    if cx.is_void:
        return ()
    avoid &= cx.vertex_mask
    key = (cx.facets, avoid, field)
    cached = _WITNESS_CACHE.get(key)
    if cached is not None:
        return cached
    apexes = cx.apex_mask
    out: list[tuple[int, int]] = []
    if apexes & avoid:
        result: tuple[tuple[int, int], ...] = ()
        _WITNESS_CACHE[key] = result
        return result
    if len(cx.facets) == 1:
        # a simplex: the only nonvanishing link is the empty complex at F = facet
        facet = next(iter(cx.facets))
        if not facet & avoid:
            out.append((0, facet))
        result = tuple(out)
        _WITNESS_CACHE[key] = result
        return result
    for face in sorted(cx.faces()):
        if face & avoid or apexes & ~face:
            continue
        profile = homology(cx.link(face), field)
        for i, d in profile.dims.items():
            if d:
                out.append((i + 1, face))
    result = tuple(sorted(out))
    _WITNESS_CACHE[key] = result
    return result


def _certificate_scan(
    ideal: MonomialIdeal, field: CoefficientField, audit: bool
) -> tuple[int, list[tuple[Exponent, int, int]]]:
    """Max of |a| + i over the exponent box, with all maximizing witnesses.

    Exponents with x^a in the ideal contribute nothing (void complex); unless
    auditing, exponents whose degree complex is a cone over some variable of
    supp(a) are skipped, since extremal exponents never are.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("regularity is defined for nonzero proper ideals")
    bounds = ideal.max_var_degrees()
    if audit:
        ranges = [range(b + 1) for b in bounds]
    else:
        ranges = [range(max(b, 1)) for b in bounds]
    best = -1
    witnesses: list[tuple[Exponent, int, int]] = []
    arr = ideal.arr
    for a in itertools.product(*ranges):
        if ideal.contains(a):
            continue
        colon_radical = ideal.radical_colon(a)
        avoid = support_mask(a)
        if not audit and avoid:
            cone = False
            for t in bits(avoid):
                if not colon_radical.arr[:, t].any():
                    cone = True
                    break
            if cone:
                continue
        cx = complex_of_ideal(colon_radical)
        deg = sum(a)
        for i, face in _link_witnesses(cx, avoid, field):
            value = deg + i
            if value > best:
                best = value
                witnesses = [(a, i, face)]
            elif value == best:
                witnesses.append((a, i, face))
    return best, witnesses


def _certificates(
    witnesses: list[tuple[Exponent, int, int]], value: int, field: CoefficientField
) -> tuple[RegularityCertificate, ...]:
    certs = [
        RegularityCertificate(a, i, vertices_of(face), value, field.label)
        for a, i, face in witnesses
    ]
    certs.sort(key=lambda c: (c.value, c.a, c.i, c.face))
    return tuple(certs)


def regularity_with_certificates(
    ideal: MonomialIdeal, field: CoefficientField = GF2, audit: bool = False
) -> tuple[int, tuple[RegularityCertificate, ...]]:
    """Regularity of the ideal (= regularity of the quotient + 1) and all
    maximizing certificates."""
    best, witnesses = _certificate_scan(ideal, field, audit)
    return best + 1, _certificates(witnesses, best, field)


def regularity(ideal: MonomialIdeal, field: CoefficientField = GF2, audit: bool = False) -> int:
    """Castelnuovo-Mumford regularity of the ideal, by the degree-complex scan."""
    best, _ = _certificate_scan(ideal, field, audit)
    return best + 1


def extremal_pairs(
    ideal: MonomialIdeal, field: CoefficientField = GF2
) -> tuple[RegularityCertificate, ...]:
    """All maximizing (a, i) witnesses of the regularity scan."""
    best, witnesses = _certificate_scan(ideal, field, audit=False)
    return _certificates(witnesses, best, field)


def verify_certificate(
    ideal: MonomialIdeal, cert: RegularityCertificate, field: CoefficientField | None = None
) -> bool:
    """Re-check a certificate from scratch (homology recomputed fresh)."""
    if field is None:
        field = CoefficientField.parse(cert.field)
    a = cert.a
    if len(a) != ideal.n or any(e < 0 for e in a):
        return False
    if ideal.contains(a):
        return False
    bounds = ideal.max_var_degrees()
    if any(ae > max(b - 1, 0) for ae, b in zip(a, bounds)):
        return False
    colon_radical = ideal.radical_colon(a)
    avoid = support_mask(a)
    for t in bits(avoid):
        if not colon_radical.arr[:, t].any():
            return False  # degree complex is a cone over a support variable
    cx = complex_of_ideal(colon_radical)
    face = mask_of(cert.face)
    if face & avoid:
        return False
    if not cx.contains_face(face):
        return False
    profile = homology_fresh(cx.link(face), field)
    if profile.h(cert.i - 1) < 1:
        return False
    return cert.value == sum(a) + cert.i


# -- Betti-number oracle ----------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers beta_{i,b} of an ideal, plus coarse totals."""

    n: int
    field: str
    entries: dict[tuple[int, Exponent], int]

    def totals(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + v
        return out

    def regularity(self) -> int:
        return max(sum(b) - i for (i, b) in self.entries)

    def to_dict(self) -> dict:
        rows = [
            {"i": i, "b": list(b), "beta": v}
            for (i, b), v in sorted(self.entries.items())
        ]
        return {"n": self.n, "field": self.field, "entries": rows}


def _lcm_lattice(ideal: MonomialIdeal, max_size: int) -> list[Exponent]:
    gens = list(ideal.gens)
    lattice: set[Exponent] = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for b in frontier:
            for g in gens:
                j = tuple(max(x, y) for x, y in zip(b, g))
                if j not in lattice:
                    lattice.add(j)
                    fresh.append(j)
                    if len(lattice) > max_size:
                        raise ValueError(
                            f"lcm lattice exceeds {max_size} elements; "
                            "the Betti oracle is desk-scale only"
                        )
        frontier = fresh
    return sorted(lattice)


def _upper_koszul_complex(ideal: MonomialIdeal, b: Exponent) -> SimplicialComplex:
    """Faces are the squarefree tau <= supp(b) with x^(b - tau) in the ideal."""
    smask = support_mask(b)
    faces = []
    for tau in submasks(smask):
        shifted = tuple(e - ((tau >> j) & 1) for j, e in enumerate(b))
        if ideal.contains(shifted):
            faces.append(tau)
    return SimplicialComplex(ideal.n, faces)


def betti_table(
    ideal: MonomialIdeal,
    field: CoefficientField = GF2,
    max_lattice: int = 50_000,
) -> BettiTable:
    """Multigraded Betti numbers over the lcm lattice (the oracle route)."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("Betti numbers are computed for nonzero proper ideals")
    entries: dict[tuple[int, Exponent], int] = {}
    for b in _lcm_lattice(ideal, max_lattice):
        profile = homology(_upper_koszul_complex(ideal, b), field)
        for i, d in profile.dims.items():
            if d:
                entries[(i + 1, b)] = d
    return BettiTable(ideal.n, field.label, entries)


def regularity_from_betti(table: BettiTable) -> int:
    return table.regularity()


def has_linear_resolution(
    ideal: MonomialIdeal,
    field: CoefficientField = GF2,
    method: str = "degree-complex",
) -> bool:
    """Equigenerated in one degree d and regularity equal to d.

    method "degree-complex" uses the scan, "koszul" checks that every nonzero
    Betti entry sits in total degree i + d, "both" runs the two and insists
    they agree.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("linear resolution is decided for nonzero proper ideals")
    degrees = set(ideal.generator_degrees())
    if len(degrees) != 1:
        return False
    d = degrees.pop()
    if method == "degree-complex":
        return regularity(ideal, field) == d
    if method == "koszul":
        table = betti_table(ideal, field)
        return all(sum(b) == i + d for (i, b) in table.entries)
    if method == "both":
        first = regularity(ideal, field) == d
        table = betti_table(ideal, field)
        second = all(sum(b) == i + d for (i, b) in table.entries)
        if first != second:
            raise MethodMismatchError(
                f"linear-resolution routes disagree: degree-complex={first}, koszul={second}"
            )
        return first
    raise ValueError(f"unknown method {method!r}")
