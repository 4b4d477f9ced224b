"""Corpus management, verification suites, and machine-readable reports.

A suite runs one check per corpus item and emits JSON lines (one object per
item, then a summary).  Lines are byte-deterministic for fixed arguments and
seed: wall times are tracked on the report object but kept out of the JSON.
Items can be processed by a worker pool; output order is by corpus index, so
parallelism never changes the bytes.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool

from .graphs import (
    Graph,
    all_labeled_graphs,
    edge_ideal,
    gnp_random_graph,
    graph_isomorphism_classes,
    graph_to_dict,
    random_gap_free_graph,
)
from .homology import GF2, QQ, CoefficientField
from .monomials import MonomialIdeal
from .powers import (
    COLON_PATTERNS,
    _intermediate_of,
    colon_identity_holds,
    sample_intermediates,
    symbolic_power,
    symbolic_power_of_ideal,
)
from .regularity import (
    betti_table,
    extremal_pairs,
    has_linear_resolution,
    regularity,
    verify_certificate,
)


@dataclass
class ExperimentReport:
    experiment: str
    index: int
    subject: dict
    s: int | None
    field: str
    data: dict
    passed: bool
    wall_time: float = 0.0

    def json_line(self) -> str:
        # wall_time is intentionally excluded: report streams must be
        # byte-identical for identical (args, seed)
        payload = {
            "experiment": self.experiment,
            "index": self.index,
            "subject": self.subject,
            "s": self.s,
            "field": self.field,
            "data": self.data,
            "pass": self.passed,
        }
        return json.dumps(payload, sort_keys=True)


# -- corpora -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _cached_classes(n: int) -> tuple[Graph, ...]:
    return tuple(graph_isomorphism_classes(n))


def graph_corpus(
    nmax: int,
    exhaustive_upto: int = 6,
    samples: int = 0,
    seed: int = 0,
    gap_free: str = "none",
    p: float = 0.5,
) -> list[Graph]:
    """Graphs with at least one edge: all labeled graphs for n <= 5,
    isomorphism classes for n in {6, 7}, seeded random graphs above.

    gap_free: "none" (no filter), "random" (only the random part is sampled
    gap-free), or "all" (exhaustive part filtered too).
    """
    if exhaustive_upto > 7:
        raise ValueError("exhaustive enumeration is infeasible beyond n = 7")
    out: list[Graph] = []
    for n in range(1, min(nmax, exhaustive_upto) + 1):
        source = all_labeled_graphs(n) if n <= 5 else _cached_classes(n)
        for g in source:
            if g.edge_count == 0:
                continue
            if gap_free == "all" and not g.is_gap_free():
                continue
            out.append(g)
    random_ns = list(range(exhaustive_upto + 1, nmax + 1))
    if random_ns and samples > 0:
        want_gap_free = gap_free in ("all", "random")
        for k in range(samples):
            n = random_ns[k % len(random_ns)]
            for attempt in itertools.count():
                item_seed = f"{seed}:{n}:{k}:{attempt}"
                if want_gap_free:
                    g, _ = random_gap_free_graph(n, p, item_seed)
                else:
                    g = gnp_random_graph(n, p, item_seed)
                if g.edge_count:
                    break
            out.append(g)
    return out


def random_squarefree_ideal(nmax: int, seed) -> MonomialIdeal:
    """A random nonzero proper squarefree monomial ideal on 2..nmax variables."""
    rng = random.Random(seed)
    n = rng.randint(2, nmax)
    count = rng.randint(1, 2 * n)
    gens = []
    for _ in range(count):
        mask = rng.randrange(1, 1 << n)
        gens.append(tuple((mask >> j) & 1 for j in range(n)))
    return MonomialIdeal(n, gens)


def squarefree_ideal_corpus(count: int, nmax: int, seed: int) -> list[MonomialIdeal]:
    return [random_squarefree_ideal(nmax, f"{seed}:{k}") for k in range(count)]


# -- per-item checks (top-level so a worker pool can pickle them) -------------


def _want_q_check(index: int) -> bool:
    return index % 10 == 0


def _check_power_formula(args) -> ExperimentReport:
    index, g, s, field_label, inter_count, seed = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    ideal = edge_ideal(g)
    reg_base = regularity(ideal, field)
    expected = max(reg_base + s - 1, 2 * s)
    reg_power = regularity(ideal.power(s), field)
    reg_symbolic = regularity(symbolic_power(g, s), field)
    inter_regs = [
        regularity(j, field)
        for j in sample_intermediates(g, s, inter_count, f"{seed}:{index}")
    ]
    passed = (
        reg_power == expected
        and reg_symbolic == expected
        and all(r == expected for r in inter_regs)
    )
    data = {
        "reg_edge_ideal": reg_base,
        "expected": expected,
        "reg_power": reg_power,
        "reg_symbolic": reg_symbolic,
        "reg_intermediates": inter_regs,
        "q_checked": False,
    }
    if _want_q_check(index):
        # the formula is re-checked with rational coefficients on a subsample;
        # both sides are computed over the same field
        data["q_checked"] = True
        q_expected = max(regularity(ideal, QQ) + s - 1, 2 * s)
        data["q_reg_power"] = regularity(ideal.power(s), QQ)
        passed = passed and data["q_reg_power"] == q_expected
    return ExperimentReport(
        f"pow{s}", index, {"graph": graph_to_dict(g)}, s, field.label, data,
        passed, time.perf_counter() - start,
    )


def _check_froberg(args) -> ExperimentReport:
    index, g, field_label = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    ideal = edge_ideal(g)
    linear = has_linear_resolution(ideal, field)
    chordal_complement = g.complement().is_chordal()
    data = {
        "reg": regularity(ideal, field),
        "linear_resolution": linear,
        "complement_chordal": chordal_complement,
    }
    return ExperimentReport(
        "froberg", index, {"graph": graph_to_dict(g)}, 1, field.label, data,
        linear == chordal_complement, time.perf_counter() - start,
    )


def _check_characterization(args) -> ExperimentReport:
    index, g, s, field_label = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    ideal = edge_ideal(g)
    reg_base = regularity(ideal, field)
    gap_free = g.is_gap_free()
    linear = has_linear_resolution(ideal.power(s), field)
    bound = s + 1  # reg threshold: 3 for s=2, 4 for s=3
    expected = gap_free and reg_base <= bound
    passed = linear == expected
    data = {
        "reg_edge_ideal": reg_base,
        "gap_free": gap_free,
        "linear_resolution_power": linear,
        "expected": expected,
        "q_checked": False,
    }
    if _want_q_check(index):
        data["q_checked"] = True
        q_linear = has_linear_resolution(ideal.power(s), QQ)
        passed = passed and q_linear == expected
        data["q_linear_resolution_power"] = q_linear
    return ExperimentReport(
        f"char{s}", index, {"graph": graph_to_dict(g)}, s, field.label, data,
        passed, time.perf_counter() - start,
    )


def _check_lowerbound(args) -> ExperimentReport:
    index, ideal, s_values, field_label, seed = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    reg_base = regularity(ideal, field)
    data: dict = {"n": ideal.n, "gens": [list(g) for g in ideal.gens], "reg": reg_base}
    passed = True
    for s in s_values:
        bound = reg_base + s - 1
        power = ideal.power(s)
        symbolic = symbolic_power_of_ideal(ideal, s)
        regs = {
            "power": regularity(power, field),
            "symbolic": regularity(symbolic, field),
        }
        inter = [
            regularity(_intermediate_of(power, symbolic, "random", f"{seed}:{index}:{s}:{k}"), field)
            for k in range(2)
        ]
        data[f"s{s}"] = {"bound": bound, **regs, "intermediates": inter}
        passed = passed and all(r >= bound for r in [*regs.values(), *inter])
    return ExperimentReport(
        "lowerbound", index, {"ideal": {"n": ideal.n, "gens": [list(g) for g in ideal.gens]}},
        None, field.label, data, passed, time.perf_counter() - start,
    )


def _admissible_tuples(g: Graph, pattern: str):
    vs = range(g.n)
    if pattern == "11":
        return itertools.combinations(vs, 2)
    if pattern == "21":
        return itertools.permutations(vs, 2)
    if pattern == "211":
        return (
            (u, v, w)
            for u in vs
            for v, w in itertools.combinations(sorted(set(vs) - {u}), 2)
        )
    return itertools.combinations(vs, 4)


def _check_colon_identities(args) -> ExperimentReport:
    index, g, field_label = args
    start = time.perf_counter()
    checked = 0
    failures = []
    for pattern, s in sorted(COLON_PATTERNS.items()):
        for tup in _admissible_tuples(g, pattern):
            checked += 1
            if not colon_identity_holds(g, s, pattern, tup):
                failures.append({"pattern": pattern, "vertices": [v + 1 for v in tup]})
    data = {"checked": checked, "failures": failures}
    return ExperimentReport(
        "colon-identities", index, {"graph": graph_to_dict(g)}, None, field_label,
        data, not failures, time.perf_counter() - start,
    )


def _check_extremal_bounds(args) -> ExperimentReport:
    index, g, s, field_label = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    symbolic = symbolic_power(g, s)
    certs = extremal_pairs(symbolic, field)
    degree_ok = all(sum(c.a) <= 2 * s - 2 for c in certs)
    entry_ok = all(max(c.a) <= s - 1 for c in certs)
    reverify_ok = all(verify_certificate(symbolic, c, field) for c in certs)
    data = {
        "certificates": [c.to_dict() for c in certs],
        "degree_bound_ok": degree_ok,
        "entry_bound_ok": entry_ok,
        "reverified": reverify_ok,
    }
    return ExperimentReport(
        "extremal-bounds", index, {"graph": graph_to_dict(g)}, s, field.label, data,
        degree_ok and entry_ok and reverify_ok, time.perf_counter() - start,
    )


def _check_conjecture(args) -> ExperimentReport:
    index, g, s, field_label = args
    field = CoefficientField.parse(field_label)
    start = time.perf_counter()
    ideal = edge_ideal(g)
    reg_base = regularity(ideal, field)
    expected = max(reg_base + s - 1, 2 * s)
    reg_power = regularity(ideal.power(s), field)
    reg_symbolic = regularity(symbolic_power(g, s), field)
    conforms = reg_power == expected and reg_symbolic == expected
    data = {
        "reg_edge_ideal": reg_base,
        "conjectured": expected,
        "reg_power": reg_power,
        "reg_symbolic": reg_symbolic,
        "conforms": conforms,
        "candidate_counterexample": not conforms,
        "asymptotic_claim": False,
    }
    # exploratory: a non-conforming graph is flagged, never asserted against
    return ExperimentReport(
        "search", index, {"graph": graph_to_dict(g)}, s, field.label, data,
        True, time.perf_counter() - start,
    )


# -- suite driver --------------------------------------------------------------


def _run_items(worker, items: list, jobs: int) -> list[ExperimentReport]:
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with Pool(jobs) as pool:
        return list(pool.imap(worker, items, chunksize=4))


THEOREMS = (
    "pow2",
    "pow3",
    "lowerbound",
    "froberg",
    "char2",
    "char3",
    "colon-identities",
    "extremal-bounds",
)

_DEFAULTS = {
    # theorem: (nmax, exhaustive_upto, samples, gap_free)
    "pow2": (8, 6, 100, "all"),
    "pow3": (7, 5, 30, "all"),
    "froberg": (7, 5, 100, "none"),
    "char2": (6, 6, 0, "none"),
    "char3": (7, 5, 30, "random"),
    "colon-identities": (6, 6, 0, "all"),
    "extremal-bounds": (6, 6, 0, "none"),
}


def run_verification(
    theorem: str,
    nmax: int | None = None,
    samples: int | None = None,
    seed: int = 0,
    field: CoefficientField = GF2,
    intermediate_count: int = 3,
    s: int | None = None,
    jobs: int = 1,
) -> tuple[list[ExperimentReport], dict]:
    """Run one verification suite; returns (reports, summary)."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r} (choose from {', '.join(THEOREMS)})")

    if theorem == "lowerbound":
        count = samples if samples is not None else 50
        nv = min(nmax, 5) if nmax is not None else 5
        ideals = squarefree_ideal_corpus(count, nv, seed)
        s_values = (s,) if s else (2, 3)
        items = [
            (i, ideal, s_values, field.label, seed) for i, ideal in enumerate(ideals)
        ]
        reports = _run_items(_check_lowerbound, items, jobs)
    else:
        d_nmax, d_exh, d_samples, gap_free = _DEFAULTS[theorem]
        nmax = nmax if nmax is not None else d_nmax
        samples = samples if samples is not None else d_samples
        corpus = graph_corpus(
            nmax, exhaustive_upto=min(nmax, d_exh), samples=samples, seed=seed,
            gap_free=gap_free,
        )
        if theorem in ("pow2", "pow3"):
            power = 2 if theorem == "pow2" else 3
            items = [
                (i, g, power, field.label, intermediate_count, seed)
                for i, g in enumerate(corpus)
            ]
            reports = _run_items(_check_power_formula, items, jobs)
        elif theorem == "froberg":
            items = [(i, g, field.label) for i, g in enumerate(corpus)]
            reports = _run_items(_check_froberg, items, jobs)
        elif theorem in ("char2", "char3"):
            power = 2 if theorem == "char2" else 3
            items = [(i, g, power, field.label) for i, g in enumerate(corpus)]
            reports = _run_items(_check_characterization, items, jobs)
        elif theorem == "colon-identities":
            gap_free_corpus = [g for g in corpus if g.is_gap_free()]
            items = [(i, g, field.label) for i, g in enumerate(gap_free_corpus)]
            reports = _run_items(_check_colon_identities, items, jobs)
        else:  # extremal-bounds
            s_values = (s,) if s else (2, 3)
            items = [
                (i, g, sv, field.label)
                for i, (g, sv) in enumerate(itertools.product(corpus, s_values))
            ]
            reports = _run_items(_check_extremal_bounds, items, jobs)

    failures = sum(1 for r in reports if not r.passed)
    summary = {
        "experiment": theorem,
        "total": len(reports),
        "failures": failures,
        "pass": failures == 0,
        "field": field.label,
        "seed": seed,
    }
    return reports, summary


def run_search(
    s: int,
    nmax: int = 6,
    samples: int = 20,
    seed: int = 0,
    field: CoefficientField = GF2,
    jobs: int = 1,
) -> tuple[list[ExperimentReport], dict]:
    """Exploratory conjecture scan over gap-free graphs; reports, never asserts."""
    if s < 2:
        raise ValueError("the conjectured formula concerns s >= 2")
    if s >= 4 and nmax > 6:
        raise ValueError("s >= 4 is permitted only with nmax <= 6 (cost cap)")
    corpus = graph_corpus(
        nmax, exhaustive_upto=min(nmax, 6), samples=samples, seed=seed, gap_free="all"
    )
    items = [(i, g, s, field.label) for i, g in enumerate(corpus)]
    reports = _run_items(_check_conjecture, items, jobs)
    nonconforming = sum(1 for r in reports if r.data["candidate_counterexample"])
    summary = {
        "experiment": "search",
        "s": s,
        "total": len(reports),
        "candidate_counterexamples": nonconforming,
        "field": field.label,
        "seed": seed,
    }
    return reports, summary
