"""l-partitions inside the staircase (l, l-1, ..., 1) and the boundary bijection P."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from dyck_core import DOWN, UP, DyckPath, EnumerationBoundError

MAX_RANK = 16


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class LPartition:
    """Weakly decreasing parts of fixed length l with part i at most l + 1 - i."""

    l: int
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.l < 1:
            raise PartitionError(f"rank must be positive, got {self.l}")
        if len(self.parts) != self.l:
            raise PartitionError(f"expected {self.l} parts, got {len(self.parts)}")
        previous = self.l
        for i, part in enumerate(self.parts, start=1):
            if part < 0:
                raise PartitionError(f"part {i} is negative: {part}")
            if part > previous:
                raise PartitionError(f"parts must be weakly decreasing (part {i} = {part})")
            if part > self.l + 1 - i:
                raise PartitionError(f"part {i} = {part} leaves the staircase T_{self.l}")
            previous = part

    def part(self, i: int) -> int:
        """1-based part with the conventions lambda_0 = l + 1 and lambda_s = 0 for s > l."""

        if i <= 0:
            return self.l + 1
        if i > self.l:
            return 0
        return self.parts[i - 1]

    def cells(self) -> frozenset:
        return frozenset((i, c) for i in range(1, self.l + 1) for c in range(1, self.part(i) + 1))

    def contains(self, other: "LPartition") -> bool:
        return all(mine >= theirs for mine, theirs in zip(self.parts, other.parts))

    def corners(self) -> int:
        return sum(1 for i in range(1, self.l + 1) if self.part(i) > self.part(i + 1))

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)

    def to_json(self) -> Dict[str, object]:
        return {"l": self.l, "parts": list(self.parts)}


def zero_partition(l: int) -> LPartition:
    return LPartition(l, (0,) * l)


def staircase(l: int) -> LPartition:
    return LPartition(l, tuple(range(l, 0, -1)))


def parse_partition(text: str, l: int) -> LPartition:
    tokens = [token.strip() for token in text.split(",")] if text.strip() else []
    parts: List[int] = []
    for token in tokens:
        try:
            parts.append(int(token))
        except ValueError:
            raise PartitionError(f"not an integer part: {token!r}") from None
    return LPartition(l, tuple(parts))


def p_map(partition: LPartition) -> DyckPath:
    """Read the boundary of the diagram bottom-up: u, then d for each column dropped."""

    l = partition.l
    word = "".join(
        UP + DOWN * (partition.part(i) - partition.part(i + 1)) for i in range(l, -1, -1)
    )
    return DyckPath(word)


def p_inverse(path: DyckPath, l: int) -> LPartition:
    if path.half_length != l + 1:
        raise PartitionError(
            f"path of half-length {path.half_length} does not match rank {l} (expected {l + 1})"
        )
    # runs[0] belongs to c_l, runs[-1] to c_0
    runs = [len(run) for run in path.steps.split(UP)[1:]]
    drops = list(reversed(runs))
    parts = []
    total = 0
    for i in range(l, 0, -1):
        total += drops[i]
        parts.append(total)
    return LPartition(l, tuple(reversed(parts)))


def _fill(prefix: List[int], l: int, out: List[LPartition]) -> None:
    i = len(prefix) + 1
    if i > l:
        out.append(LPartition(l, tuple(prefix)))
        return
    ceiling = min(prefix[-1] if prefix else l, l + 1 - i)
    for part in range(ceiling, -1, -1):
        prefix.append(part)
        _fill(prefix, l, out)
        prefix.pop()


def enumerate_partitions(l: int, max_rank: int = MAX_RANK) -> List[LPartition]:
    """Every l-partition, lexicographically descending."""

    if l < 1:
        raise PartitionError("rank must be positive")
    if l > max_rank:
        raise EnumerationBoundError(f"rank {l} exceeds the enumeration bound {max_rank}")
    out: List[LPartition] = []
    _fill([], l, out)
    return out
