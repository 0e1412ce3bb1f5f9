"""Peak-insertion bijection D from l-partitions to Dyck paths and its udu ledger."""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from itertools import accumulate
from typing import Dict, FrozenSet, List, Optional, Tuple

from dyck_core import DyckPath, EnumerationBoundError, insert_on_highest_peaks
from staircase_partitions import LPartition, PartitionError, enumerate_partitions, zero_partition

logger = logging.getLogger(__name__)

MAX_INVERSE_RANK = 12

Entry = Tuple[int, int]


@dataclass(frozen=True)
class AkopProfile:
    """Dotted-line data: the points i_1 < ... < i_k where the boundary meets x + y = l + 1."""

    l: int
    k: int
    i_seq: Tuple[int, ...]

    def i(self, j: int) -> int:
        """i_j with i_j = 0 for j <= 0 and i_j = l + 1 for j > k."""

        if j <= 0:
            return 0
        if j > self.k:
            return self.l + 1
        return self.i_seq[j - 1]

    def anchor_row(self, j: int) -> int:
        return self.l - self.i(j + 1) + 2


@dataclass(frozen=True)
class InsertionWords:
    """Exponent vectors a[j] of the words M_j, for j = 1..k+1."""

    profile: AkopProfile
    a: Dict[int, Tuple[int, ...]]

    def h(self, j: int) -> int:
        return len(self.a[j]) - 1

    def to_json(self) -> Dict[str, object]:
        prof = self.profile
        rows = range(1, prof.k + 2)
        return {
            "l": prof.l,
            "k": prof.k,
            "i": list(prof.i_seq),
            "a": [list(self.a[j]) for j in rows],
            "h": [self.h(j) for j in rows],
        }


@dataclass(frozen=True)
class UduLedger:
    words: InsertionWords
    aset: FrozenSet[Entry]
    lset: FrozenSet[Entry]
    uset: FrozenSet[Entry]
    running: Tuple[int, ...]

    @property
    def predicted_udu(self) -> int:
        return self.words.profile.l - 2 * len(self.uset) - len(self.lset)


def dotted_line(partition: LPartition) -> AkopProfile:
    l = partition.l
    collected: List[int] = []
    value = partition.part(1)
    while value > 0:
        collected.append(value)
        value = partition.part(l - value + 2)
    return AkopProfile(l=l, k=len(collected), i_seq=tuple(reversed(collected)))


def lambda_extremes(prof: AkopProfile) -> Tuple[LPartition, LPartition]:
    """Return the largest and smallest partitions sharing this dotted line."""

    l, k = prof.l, prof.k
    if k == 0:
        return zero_partition(l), zero_partition(l)

    upper: List[int] = [prof.i(k)] * (l - prof.i(k) + 1)
    for j in range(k - 1, 0, -1):
        upper += [prof.i(j)] * (prof.i(j + 1) - prof.i(j))
    upper += [0] * (l - len(upper))

    lower: List[int] = [prof.i(k)]
    for j in range(k - 1, 0, -1):
        span = l - prof.i(k) + 1 if j == k - 1 else prof.i(j + 2) - prof.i(j + 1)
        lower += [prof.i(j)] * span
    lower += [0] * (l - len(lower))

    return LPartition(l, tuple(upper)), LPartition(l, tuple(lower))


def rectangles(prof: AkopProfile) -> Dict[int, FrozenSet[Tuple[int, int]]]:
    """Cells of R_j, j = 1..k; together they tile lambda^M minus lambda^m."""

    l = prof.l
    return {
        j: frozenset(
            (s, t)
            for s in range(l - prof.i(j + 1) + 3, l - prof.i(j) + 2)
            for t in range(prof.i(j - 1) + 1, prof.i(j) + 1)
        )
        for j in range(1, prof.k + 1)
    }


def insertion_words(partition: LPartition, prof: Optional[AkopProfile] = None) -> InsertionWords:
    prof = prof or dotted_line(partition)
    l, k = prof.l, prof.k
    lam = partition.part
    a: Dict[int, Tuple[int, ...]] = {k + 1: (l - prof.i(k) + 1,)}

    for j in range(1, k + 1):
        r = prof.anchor_row(j)
        if j == 1:
            h = 0
            while lam(r + h + 1) > 0:
                h += 1
        else:
            h = prof.i(j + 1) - prof.i(j) - 1

        if h == 0:
            a[j] = (prof.i(j) - prof.i(j - 1),)
            continue
        row = [prof.i(j) - lam(r + 1)]
        row += [lam(r + t) - lam(r + t + 1) for t in range(1, h)]
        row.append(lam(r + h) - prof.i(j - 1))
        a[j] = tuple(row)

    return InsertionWords(profile=prof, a=a)


def d_map_trace(partition: LPartition) -> Tuple[DyckPath, ...]:
    """Intermediate paths D_{k+1}, D_k, ..., D_1 of the construction."""

    words = insertion_words(partition)
    prof = words.profile
    if prof.k == 0:
        return (DyckPath("ud" * (prof.l + 1)),)
    path = DyckPath("ud" * (prof.l + 1 - prof.i(prof.k)))
    trace = [path]
    for j in range(prof.k, 0, -1):
        path = insert_on_highest_peaks(path, words.a[j])
        trace.append(path)
    return tuple(trace)


def d_map(partition: LPartition) -> DyckPath:
    return d_map_trace(partition)[-1]


_TABLES: Dict[int, Dict[str, LPartition]] = {}
_TABLE_LOCK = threading.Lock()


def _inverse_table(l: int) -> Dict[str, LPartition]:
    with _TABLE_LOCK:
        table = _TABLES.get(l)
        if table is None:
            logger.debug("building D inverse table for rank %d", l)
            table = {d_map(lam).steps: lam for lam in enumerate_partitions(l)}
            _TABLES[l] = table
        return table


def d_inverse(path: DyckPath, l: int, max_rank: int = MAX_INVERSE_RANK) -> LPartition:
    if l > max_rank:
        raise EnumerationBoundError(f"rank {l} exceeds the D inverse table bound {max_rank}")
    if path.half_length != l + 1:
        raise PartitionError(
            f"path of half-length {path.half_length} does not match rank {l} (expected {l + 1})"
        )
    return _inverse_table(l)[path.steps]


def _non_u_peak_entries(words: InsertionWords, p: int) -> FrozenSet[Entry]:
    # t such that the (t+1)-th highest peak of D_{p+1} ends a group of inserted peaks
    landings = set(accumulate(words.a[p + 1]))
    return frozenset((p, t) for t in range(words.h(p) + 1) if t + 1 in landings)


def _restrict(entries: FrozenSet[Entry], aset: FrozenSet[Entry]) -> FrozenSet[Entry]:
    return entries & aset


def udu_ledger(partition: LPartition) -> UduLedger:
    words = insertion_words(partition)
    prof = words.profile
    k = prof.k

    aset = frozenset((j, t) for j in range(1, k + 1) for t, value in enumerate(words.a[j]) if value)
    lset = frozenset()
    for p in range(1, k + 1):
        lset |= _restrict(_non_u_peak_entries(words, p), aset)
    uset = aset - lset

    u = prof.l - partition.part(1)
    running = [u]
    for j in range(k, 0, -1):
        u += sum(words.a[p][t] - 2 for p, t in uset if p == j)
        u += sum(words.a[p][t] - 1 for p, t in lset if p == j)
        running.append(u)

    return UduLedger(words=words, aset=aset, lset=lset, uset=uset, running=tuple(running))


def predicted_udu(partition: LPartition) -> int:
    return udu_ledger(partition).predicted_udu


def predicted_peaks(partition: LPartition) -> int:
    return partition.l + 1 - len(udu_ledger(partition).aset)
