"""Exact arithmetic on exponent vectors and monomial ideals.

An exponent vector is a plain tuple of nonnegative ints of length ``n``; the
vector ``a`` doubles as the monomial x^a = x1^a1 * ... * xn^an.  Variables are
0-indexed in code; text and JSON forms use the 1-based names ``x1 .. xn``.

All operations are pure and exact; ideals are immutable and stored by their
minimal generating set in a canonical (lexicographic) order, so ideal equality
is plain ``==``.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

Exponent = tuple[int, ...]


def total_degree(a: Sequence[int]) -> int:
    return sum(a)


def support(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j, e in enumerate(a) if e)


def support_mask(a: Sequence[int]) -> int:
    m = 0
    for j, e in enumerate(a):
        if e:
            m |= 1 << j
    return m


def vector_divides(g: Sequence[int], f: Sequence[int]) -> bool:
    """True iff x^g divides x^f."""
    return all(ge <= fe for ge, fe in zip(g, f))


def is_squarefree_vector(a: Sequence[int]) -> bool:
    return all(e <= 1 for e in a)


def monomial_derivative(f: Sequence[int], a: Sequence[int]) -> Exponent | None:
    """Coefficient-free partial derivative of x^f with respect to x^a.

    Returns f - a componentwise when x^a divides x^f, else None (the zero
    polynomial).
    """
    if len(f) != len(a):
        raise ValueError("exponent vectors have different lengths")
    if any(ae > fe for ae, fe in zip(a, f)):
        return None
    return tuple(fe - ae for fe, ae in zip(f, a))


def _minimal_generators(rows: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Inclusion-minimal vectors under componentwise <= (divisibility),
    deduplicated and lexicographically sorted.

    Candidates are visited in ascending total degree, so a survivor can never
    be dominated by a later one; small batches use plain tuple comparisons,
    large ones a vectorized domination sweep.
    """
    uniq = sorted(set(rows), key=lambda r: (sum(r), r))
    if len(uniq) <= 1:
        return tuple(uniq)
    if len(uniq) <= 64:
        kept: list[Exponent] = []
        for r in uniq:
            if not any(all(ke <= re for ke, re in zip(k, r)) for k in kept):
                kept.append(r)
    else:
        arr = np.asarray(uniq, dtype=np.int64)
        alive = np.ones(len(uniq), dtype=bool)
        for i in range(len(uniq)):
            if not alive[i]:
                continue
            dominated = np.all(arr >= arr[i], axis=1)
            dominated[i] = False
            alive &= ~dominated
        kept = [uniq[i] for i in range(len(uniq)) if alive[i]]
    return tuple(sorted(kept))


class MonomialIdeal:
    """A monomial ideal, held as its minimal generators.

    The zero ideal has no generators; the unit ideal has the single generator
    x^0.  Construction minimalizes and canonically sorts the generators.
    """

    __slots__ = ("n", "gens", "_arr")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = (), *, _trusted: bool = False):
        if n < 1:
            raise ValueError("variable count must be positive")
        self.n = n
        if _trusted:
            self.gens = tuple(gens)
            self._arr = None
            return
        rows = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
            rows.append(g)
        self.gens = _minimal_generators(rows)
        self._arr = None

    # -- basic structure -------------------------------------------------

    @property
    def arr(self) -> np.ndarray:
        """Generators as an int64 array of shape (#gens, n)."""
        if self._arr is None:
            if self.gens:
                self._arr = np.asarray(self.gens, dtype=np.int64)
            else:
                self._arr = np.zeros((0, self.n), dtype=np.int64)
        return self._arr

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __reduce__(self):
        return (_rebuild_ideal, (self.n, self.gens))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"MonomialIdeal({self.n}, zero)"
        body = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal({self.n}, ({body}))"

    def _check_vector(self, a: Sequence[int]) -> tuple[int, ...]:
        a = tuple(int(e) for e in a)
        if len(a) != self.n:
            raise ValueError(f"vector length {len(a)} does not match n={self.n}")
        if any(e < 0 for e in a):
            raise ValueError(f"negative exponent in {a}")
        return a

    # -- ideal operations -------------------------------------------------

    def contains(self, a: Sequence[int]) -> bool:
        """Membership of the monomial x^a."""
        a = self._check_vector(a)
        if self.is_zero:
            return False
        return bool(np.all(self.arr <= np.asarray(a, dtype=np.int64), axis=1).any())

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is contained in self (checked on generators)."""
        return all(self.contains(g) for g in other.gens)

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n)
        sums = (self.arr[:, None, :] + other.arr[None, :, :]).reshape(-1, self.n)
        return _from_arr(self.n, sums)

    __mul__ = multiply

    def power(self, s: int) -> "MonomialIdeal":
        """s-th power; s = 0 returns the unit ideal by convention."""
        if s < 0:
            raise ValueError("exponent must be nonnegative")
        if s == 0:
            return unit_ideal(self.n)
        result = self
        for _ in range(s - 1):
            result = result.multiply(self)
        return result

    __pow__ = power

    def colon(self, a: Sequence[int]) -> "MonomialIdeal":
        """The colon ideal I : x^a."""
        a = self._check_vector(a)
        if self.is_zero:
            return self
        quot = np.maximum(self.arr - np.asarray(a, dtype=np.int64), 0)
        return _from_arr(self.n, quot)

    def radical(self) -> "MonomialIdeal":
        if self.is_zero:
            return self
        return _from_arr(self.n, (self.arr > 0).astype(np.int64))

    def radical_colon(self, a: Sequence[int]) -> "MonomialIdeal":
        """sqrt(I : x^a), via supports of the colon generators; squarefree."""
        a = self._check_vector(a)
        if self.is_zero:
            return self
        quot = np.maximum(self.arr - np.asarray(a, dtype=np.int64), 0)
        return _from_arr(self.n, (quot > 0).astype(np.int64))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n)
        lcms = np.maximum(self.arr[:, None, :], other.arr[None, :, :]).reshape(-1, self.n)
        return _from_arr(self.n, lcms)

    __and__ = intersect

    def max_var_degrees(self) -> tuple[int, ...]:
        """Per-variable maximum degree over the minimal generators."""
        if self.is_zero or self.is_unit:
            raise ValueError("degree bounds are undefined for the zero and unit ideals")
        return tuple(int(v) for v in self.arr.max(axis=0))

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        n = int(data["n"])
        gens = []
        for g in data.get("gens", ()):
            if isinstance(g, str):
                gens.append(parse_monomial(g, n))
            else:
                gens.append(tuple(int(e) for e in g))
        return cls(n, gens)


def _rebuild_ideal(n: int, gens: tuple) -> MonomialIdeal:
    ideal = MonomialIdeal(n, _trusted=True)
    ideal.gens = gens
    ideal._arr = None
    return ideal


def _from_arr(n: int, arr: np.ndarray) -> MonomialIdeal:
    ideal = MonomialIdeal(n, _trusted=True)
    ideal.gens = _minimal_generators(map(tuple, arr.tolist()))
    ideal._arr = None
    return ideal


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Inclusion-minimal antichain generating the same ideal."""
    return MonomialIdeal(n, gens)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [(0,) * n])


def intersect_many(n: int, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family of ideals; the empty family gives the unit ideal."""
    result = None
    for ideal in ideals:
        result = ideal if result is None else result.intersect(ideal)
    return unit_ideal(n) if result is None else result


def exponent_box(ideal: MonomialIdeal) -> tuple[tuple[int, ...], Iterator[Exponent]]:
    """Per-variable degree bounds and the candidate-exponent box they cut out.

    The box holds every a with a_j < the j-th bound; variables dividing no
    generator get bound 0, which we read as forcing a_j = 0 (such variables
    make every degree complex a cone over j, so they never carry weight).
    """
    bounds = ideal.max_var_degrees()
    ranges = [range(max(b, 1)) for b in bounds]
    return bounds, (tuple(a) for a in itertools.product(*ranges))


_MONOMIAL_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Exponent:
    """Parse text like ``x1^2*x3`` (or ``1``) into an exponent vector."""
    text = text.strip()
    exps = [0] * n
    if text in ("1", ""):
        return tuple(exps)
    for factor in text.split("*"):
        m = _MONOMIAL_FACTOR.match(factor.strip())
        if m is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise ValueError(f"variable x{idx} out of range 1..{n}")
        exps[idx - 1] += int(m.group(2) or 1)
    return tuple(exps)


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(a):
        if e == 1:
            parts.append(f"x{j + 1}")
        elif e > 1:
            parts.append(f"x{j + 1}^{e}")
    return "*".join(parts) if parts else "1"
