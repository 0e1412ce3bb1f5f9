"""Closed-form counts and brute-force census tables."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Tuple

import numpy as np

from akop import d_map
from dyck_core import EnumerationBoundError, count_udu
from root_poset import i_max, phi_min, sigma_inverse
from staircase_partitions import LPartition, enumerate_partitions

MAX_CENSUS_RANK = 10
# largest index whose Catalan number fits a signed 64-bit histogram cell
MAX_EXACT_CATALAN_INDEX = 35

FORMULA = "formula"
UDU_CENSUS = "udu-census"
IDEAL_CENSUS = "ideal-census"
ANTICHAIN_CENSUS = "antichain-census"

UDU_OF_D = "udu-of-D"
CARDINALITY_OF_I_MAX = "cardinality-of-I_max"
ANTICHAIN_SIZE = "antichain-size"

CSV_HEADER = "l,r,count,source"


@dataclass(frozen=True)
class CensusTable:
    l: int
    counts: Tuple[int, ...]
    source: str

    def total(self) -> int:
        return sum(self.counts)

    def csv_rows(self) -> List[str]:
        return [f"{self.l},{r},{count},{self.source}" for r, count in enumerate(self.counts)]


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("Catalan index must be nonnegative")
    if k > MAX_EXACT_CATALAN_INDEX:
        raise OverflowError(f"Catalan({k}) exceeds the 64-bit exact range")
    return comb(2 * k, k) // (k + 1)


def n_r_l(l: int, r: int) -> int:
    """Ideals of rank l with #I_Phi = r, equivalently Dyck paths of length 2l+2 with r udu."""

    if not 0 <= r <= l:
        raise ValueError(f"r must lie in 0..{l}, got {r}")
    rest = l - r
    return comb(l, r) * sum(comb(rest, 2 * k) * catalan(k) for k in range(rest // 2 + 1))


def narayana(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"Narayana({n}, {k}) needs 1 <= k <= n")
    return comb(n, k) * comb(n, k - 1) // n


def formula_table(l: int) -> CensusTable:
    return CensusTable(l=l, counts=tuple(n_r_l(l, r) for r in range(l + 1)), source=FORMULA)


def _udu_of_d(partition: LPartition) -> int:
    return count_udu(d_map(partition))


def _i_max_size(partition: LPartition) -> int:
    return len(i_max(sigma_inverse(partition)))


def _antichain_size(partition: LPartition) -> int:
    return len(phi_min(sigma_inverse(partition)))


STATISTICS: Dict[str, Tuple[Callable[[LPartition], int], str]] = {
    UDU_OF_D: (_udu_of_d, UDU_CENSUS),
    CARDINALITY_OF_I_MAX: (_i_max_size, IDEAL_CENSUS),
    ANTICHAIN_SIZE: (_antichain_size, ANTICHAIN_CENSUS),
}


def census(l: int, statistic: str, max_rank: int = MAX_CENSUS_RANK) -> CensusTable:
    """Histogram of a statistic over all Catalan(l+1) objects of rank l."""

    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}")
    if l > max_rank:
        raise EnumerationBoundError(f"rank {l} exceeds the census bound {max_rank}")
    measure, source = STATISTICS[statistic]
    values = np.fromiter((measure(lam) for lam in enumerate_partitions(l)), dtype=np.int64)
    counts = np.bincount(values, minlength=l + 1)
    return CensusTable(l=l, counts=tuple(int(c) for c in counts), source=source)
