"""Exhaustive verification suites for the bijections and statistics."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from akop import (
    d_map,
    d_map_trace,
    dotted_line,
    insertion_words,
    lambda_extremes,
    predicted_peaks,
    rectangles,
    udu_ledger,
)
from counting import ANTICHAIN_SIZE, CARDINALITY_OF_I_MAX, UDU_OF_D, catalan, census, formula_table, narayana
from dyck_core import count_peaks, count_u_peaks, count_udu, enumerate_dyck, parse_dyck
from lie_oracle import first_bracket_mismatch, ideal_units, is_lie_ideal
from root_poset import (
    all_simple_subsets,
    dual,
    enumerate_ideals,
    i_max,
    is_in_F_I,
    lu_split,
    phi_min,
    psi_map,
    sigma,
)
from run_monitor import RunMetrics, RunMonitor, is_psutil_available
from staircase_partitions import enumerate_partitions, p_inverse, p_map

logger = logging.getLogger(__name__)

MAX_COMBINATORIAL_RANK = 10
MAX_LIE_RANK = 5

Counterexample = Dict[str, object]
Outcome = Tuple[int, Optional[Counterexample]]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[Counterexample] = None
    metrics: Optional[RunMetrics] = field(default=None, compare=False)


@dataclass(frozen=True)
class VerificationReport:
    results: Tuple[SuiteResult, ...]
    # rank -> (fixed points of dual . dual, number of ideals)
    involution: Dict[int, Tuple[int, int]]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


def _dyck_statistics(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for n in range(1, max_l + 2):
        paths = enumerate_dyck(n)
        if len(paths) != catalan(n):
            return checked, {"n": n, "expected": catalan(n), "got": len(paths)}
        for path in paths:
            udu, u_peaks, tops = count_udu(path), count_u_peaks(path), count_peaks(path)
            if udu != u_peaks or not 1 <= tops <= n or udu > tops - 1:
                return checked, {"path": path.steps, "udu": udu, "u_peaks": u_peaks, "peaks": tops}
            if parse_dyck(path.steps.upper()) != path:
                return checked, {"path": path.steps, "reason": "render/parse round trip"}
            checked += 1
    return checked, None


def _p_bijection(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for lam in enumerate_partitions(l):
            path = p_map(lam)
            if p_inverse(path, l) != lam:
                return checked, {"l": l, "partition": list(lam.parts), "path": path.steps}
            if count_peaks(path) != lam.corners() + 1:
                return checked, {"l": l, "partition": list(lam.parts), "peaks": count_peaks(path)}
            checked += 1
        for path in enumerate_dyck(l + 1):
            if p_map(p_inverse(path, l)) != path:
                return checked, {"l": l, "path": path.steps}
            checked += 1
    return checked, None


def _d_bijection(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        images = [d_map(lam).steps for lam in enumerate_partitions(l)]
        checked += len(images)
        if len(set(images)) != len(images):
            return checked, {"l": l, "reason": "D is not injective"}
        if set(images) != {path.steps for path in enumerate_dyck(l + 1)}:
            return checked, {"l": l, "reason": "D misses some Dyck path"}
    return checked, None


def _akop_shape(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for lam in enumerate_partitions(l):
            prof = dotted_line(lam)
            upper, lower = lambda_extremes(prof)
            failure = {"l": l, "partition": list(lam.parts)}
            if not (upper.contains(lam) and lam.contains(lower)):
                return checked, {**failure, "reason": "sandwich"}
            tiles = rectangles(prof)
            covered = frozenset().union(*tiles.values()) if tiles else frozenset()
            if covered != upper.cells() - lower.cells() or sum(map(len, tiles.values())) != len(covered):
                return checked, {**failure, "reason": "rectangles"}
            words = insertion_words(lam, prof)
            if words.a[prof.k + 1] != (l - prof.i(prof.k) + 1,):
                return checked, {**failure, "reason": "closing row"}
            for j in range(1, prof.k + 1):
                if sum(words.a[j]) != prof.i(j) - prof.i(j - 1):
                    return checked, {**failure, "reason": f"word length of M_{j}"}
            if sum(sum(words.a[j]) for j in range(1, prof.k + 1)) != lam.part(1):
                return checked, {**failure, "reason": "total insertions"}
            checked += 1
    return checked, None


def _udu_ledger_formula(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for lam in enumerate_partitions(l):
            ledger = udu_ledger(lam)
            trace = d_map_trace(lam)
            observed = [count_udu(path) for path in trace]
            if observed[-1] != ledger.predicted_udu or tuple(observed) != ledger.running:
                return checked, {
                    "l": l,
                    "partition": list(lam.parts),
                    "path": trace[-1].steps,
                    "predicted": ledger.predicted_udu,
                    "observed": observed[-1],
                    "running": list(ledger.running),
                }
            checked += 1
    return checked, None


def _d_peaks_count_antichain(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for ideal in enumerate_ideals(l):
            lam = sigma(ideal)
            tops = count_peaks(d_map(lam))
            if l + 1 - tops != len(phi_min(ideal)) or predicted_peaks(lam) != tops:
                return checked, {"l": l, "partition": list(lam.parts), "peaks": tops}
            checked += 1
    return checked, None


def _p_peaks_count_antichain(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for ideal in enumerate_ideals(l):
            lam = sigma(ideal)
            size = len(phi_min(ideal))
            if count_peaks(p_map(lam)) - 1 != size or len(udu_ledger(lam).aset) != size:
                return checked, {"l": l, "partition": list(lam.parts), "antichain_size": size}
            checked += 1
    return checked, None


def _udu_counts_i_phi(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for ideal in enumerate_ideals(l):
            size = len(i_max(ideal))
            lower, upper = lu_split(phi_min(ideal))
            udu = count_udu(d_map(sigma(ideal)))
            if udu != size or l - 2 * len(upper) - len(lower) != size:
                return checked, {**ideal.to_json(), "udu": udu, "i_max": size}
            checked += 1
    return checked, None


def _psi_matches_entries(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        for ideal in enumerate_ideals(l):
            ledger = udu_ledger(sigma(ideal))
            image = psi_map(ideal)
            lower, upper = lu_split(phi_min(ideal))
            ok = (
                len(set(image.values())) == len(image)
                and set(image.values()) == ledger.aset
                and {image[root] for root in lower} == ledger.lset
                and {image[root] for root in upper} == ledger.uset
            )
            if not ok:
                return checked, {
                    **ideal.to_json(),
                    "psi": {str(root): list(entry) for root, entry in sorted(image.items())},
                }
            checked += 1
    return checked, None


def _duality(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        seen = set()
        for ideal in enumerate_ideals(l):
            image = dual(ideal)
            if len(phi_min(image)) != l - len(phi_min(ideal)) or image.roots in seen:
                return checked, {**ideal.to_json(), "dual": image.to_json()["antichain"]}
            seen.add(image.roots)
            checked += 1
    return checked, None


def _census(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, max_l + 1):
        expected = formula_table(l)
        if expected.total() != catalan(l + 1):
            return checked, {"l": l, "formula": list(expected.counts)}
        for statistic in (UDU_OF_D, CARDINALITY_OF_I_MAX):
            table = census(l, statistic)
            if table.counts != expected.counts:
                return checked, {"l": l, "statistic": statistic, "census": list(table.counts), "formula": list(expected.counts)}
        sizes = census(l, ANTICHAIN_SIZE).counts
        if list(sizes) != [narayana(l + 1, p + 1) for p in range(l + 1)] or sizes != sizes[::-1]:
            return checked, {"l": l, "antichain_sizes": list(sizes)}
        checked += catalan(l + 1)
    return checked, None


def _f_i_monotone(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, lie_max_l + 1):
        subsets = all_simple_subsets(l)
        for ideal in enumerate_ideals(l):
            largest = i_max(ideal)
            for subset in subsets:
                if is_in_F_I(ideal, subset) != subset.issubset(largest):
                    return checked, {**ideal.to_json(), "I": sorted(subset.indices)}
                checked += 1
    return checked, None


def _lie_oracle(max_l: int, lie_max_l: int) -> Outcome:
    checked = 0
    for l in range(1, lie_max_l + 1):
        mismatch = first_bracket_mismatch(l + 1)
        if mismatch is not None:
            return checked, {"l": l, "units": [list(unit) for unit in mismatch]}
        subsets = all_simple_subsets(l)
        for ideal in enumerate_ideals(l):
            if not ideal_units(ideal).is_strictly_upper():
                return checked, {**ideal.to_json(), "reason": "unit below the diagonal"}
            for subset in subsets:
                if is_lie_ideal(ideal, subset) != is_in_F_I(ideal, subset):
                    return checked, {**ideal.to_json(), "I": sorted(subset.indices)}
                checked += 1
    return checked, None


SUITES: Dict[str, Callable[[int, int], Outcome]] = {
    "dyck-statistics": _dyck_statistics,
    "p-bijection": _p_bijection,
    "d-bijection": _d_bijection,
    "akop-shape": _akop_shape,
    "prop-4.1": _udu_ledger_formula,
    "prop-6.1": _d_peaks_count_antichain,
    "prop-6.2": _p_peaks_count_antichain,
    "theorem-5.1": _udu_counts_i_phi,
    "psi-lemma": _psi_matches_entries,
    "duality": _duality,
    "census": _census,
    "f-i-monotone": _f_i_monotone,
    "lie-oracle": _lie_oracle,
}


def run_suite(name: str, max_l: int, lie_max_l: int) -> SuiteResult:
    monitor = RunMonitor()
    logger.info("suite %s: starting (max_l=%d, lie_max_l=%d)", name, max_l, lie_max_l)
    monitor.start()
    checked, counterexample = SUITES[name](max_l, lie_max_l)
    metrics = monitor.stop()
    if is_psutil_available():
        logger.info(
            "suite %s: %d checks in %.2fs, rss %.1f MB (%+.1f MB)",
            name, checked, metrics.elapsed_s, metrics.rss_mb, metrics.rss_delta_mb,
        )
    else:
        logger.info("suite %s: %d checks in %.2fs", name, checked, metrics.elapsed_s)
    if counterexample is not None:
        logger.warning("suite %s failed: %s", name, counterexample)
    return SuiteResult(
        name=name,
        passed=counterexample is None,
        checked=checked,
        counterexample=counterexample,
        metrics=metrics,
    )


def dual_involution_census(max_l: int) -> Dict[int, Tuple[int, int]]:
    report: Dict[int, Tuple[int, int]] = {}
    for l in range(1, max_l + 1):
        ideals = enumerate_ideals(l)
        fixed = sum(1 for ideal in ideals if dual(dual(ideal)) == ideal)
        report[l] = (fixed, len(ideals))
    return report


def run_verification(
    max_l: int = 8,
    lie_max_l: int = 4,
    threads: int = 1,
    suites: Optional[List[str]] = None,
    involution: bool = True,
) -> VerificationReport:
    """Run the named suites (all by default) and, if asked, the dual . dual census.

    Threads share one interpreter: CPU-bound suites gain no speedup, and
    per-suite memory and CPU figures include whatever ran alongside.
    """

    if not 1 <= max_l <= MAX_COMBINATORIAL_RANK:
        raise ValueError(f"max_l must lie in 1..{MAX_COMBINATORIAL_RANK}, got {max_l}")
    if not 0 <= lie_max_l <= MAX_LIE_RANK:
        raise ValueError(f"lie_max_l must lie in 0..{MAX_LIE_RANK}, got {lie_max_l}")
    if threads < 1:
        raise ValueError("threads must be a positive integer")
    names = list(SUITES) if suites is None else suites
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if threads > 1:
        logger.info("running %d suites on %d threads; resource figures overlap", len(names), threads)

    # executor.map keeps registry order whatever finishes first
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = tuple(pool.map(lambda name: run_suite(name, max_l, lie_max_l), names))
    fixed_points = dual_involution_census(max_l) if involution else {}
    return VerificationReport(results=results, involution=fixed_points)
