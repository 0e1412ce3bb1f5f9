"""Dyck paths: parsing, enumeration, peak statistics and peak insertion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

MAX_HALF_LENGTH = 16

UP = "u"
DOWN = "d"


class EnumerationBoundError(ValueError):
    """Raised when an exhaustive enumeration is asked beyond its configured bound."""


class PeakIndexError(ValueError):
    pass


class DyckParseError(ValueError):
    """Base class for malformed Dyck words; ``position`` is 1-based."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class IllegalCharacterError(DyckParseError):
    pass


class NegativePrefixError(DyckParseError):
    pass


class UnbalancedWordError(DyckParseError):
    pass


@dataclass(frozen=True)
class DyckPath:
    """A balanced u/d word whose prefixes never go below the axis."""

    steps: str

    def __post_init__(self) -> None:
        _validate(self.steps)

    @property
    def half_length(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def to_json(self) -> Dict[str, object]:
        return {"n": self.half_length, "word": self.steps}


def _validate(word: str) -> None:
    height = 0
    for position, step in enumerate(word, start=1):
        if step == UP:
            height += 1
        elif step == DOWN:
            height -= 1
            if height < 0:
                raise NegativePrefixError("negative prefix", position)
        else:
            raise IllegalCharacterError(f"illegal character {step!r}", position)
    if height != 0:
        raise UnbalancedWordError(f"unbalanced word ({height} unmatched u)", len(word))


def parse_dyck(text: str) -> DyckPath:
    """Parse a case-insensitive u/d word into a validated path."""

    word = text.strip().lower()
    if not word:
        raise UnbalancedWordError("empty word", 0)
    return DyckPath(word)


def render_dyck(path: DyckPath) -> str:
    return path.steps


def peaks(path: DyckPath) -> List[Tuple[int, int]]:
    """Return ``(index, height)`` for every peak; index is the 0-based position of its u."""

    found: List[Tuple[int, int]] = []
    height = 0
    steps = path.steps
    for idx, step in enumerate(steps):
        height += 1 if step == UP else -1
        if step == UP and idx + 1 < len(steps) and steps[idx + 1] == DOWN:
            found.append((idx, height))
    return found


def max_height(path: DyckPath) -> int:
    height = best = 0
    for step in path.steps:
        height += 1 if step == UP else -1
        best = max(best, height)
    return best


def highest_peaks(path: DyckPath) -> List[int]:
    """Indices of the peaks of maximal height, left to right."""

    top = max_height(path)
    return [idx for idx, height in peaks(path) if height == top]


def count_peaks(path: DyckPath) -> int:
    return sum(1 for a, b in zip(path.steps, path.steps[1:]) if a == UP and b == DOWN)


def count_udu(path: DyckPath) -> int:
    steps = path.steps
    return sum(1 for idx in range(len(steps) - 2) if steps[idx : idx + 3] == "udu")


def count_u_peaks(path: DyckPath) -> int:
    steps = path.steps
    return sum(1 for idx, _ in peaks(path) if idx + 2 < len(steps) and steps[idx + 2] == UP)


def _nest(steps: str, index: int, count: int) -> str:
    # the peak "ud" at index becomes u(ud)^count d
    return steps[:index] + UP + "ud" * count + DOWN + steps[index + 2 :]


def insert_peaks(path: DyckPath, q: int, m: int) -> DyckPath:
    """Replace the q-th highest peak (1-based) by ``u(ud)^m d``."""

    if m < 1:
        raise ValueError("m must be a positive integer")
    tops = highest_peaks(path)
    if not 1 <= q <= len(tops):
        raise PeakIndexError(
            f"peak index {q} out of range: path has {len(tops)} peaks of maximal height"
        )
    return DyckPath(_nest(path.steps, tops[q - 1], m))


def insert_on_highest_peaks(path: DyckPath, counts: Sequence[int]) -> DyckPath:
    """Insert ``counts[t]`` peaks on the (t+1)-th highest peak of ``path``.

    All indices refer to the highest peaks of the input path; a zero entry
    leaves its peak untouched.
    """

    tops = highest_peaks(path)
    if len(counts) > len(tops):
        raise PeakIndexError(
            f"{len(counts)} insertion counts for {len(tops)} peaks of maximal height"
        )
    steps = path.steps
    # right to left so earlier indices stay valid
    for index, count in reversed(list(zip(tops, counts))):
        if count < 0:
            raise ValueError("insertion counts must be nonnegative")
        if count:
            steps = _nest(steps, index, count)
    return DyckPath(steps)


def _extend(prefix: List[str], ups: int, downs: int, n: int) -> Iterator[str]:
    if ups == n and downs == n:
        yield "".join(prefix)
        return
    if ups < n:
        prefix.append(UP)
        yield from _extend(prefix, ups + 1, downs, n)
        prefix.pop()
    if downs < ups:
        prefix.append(DOWN)
        yield from _extend(prefix, ups, downs + 1, n)
        prefix.pop()


def enumerate_dyck(n: int, max_half_length: int = MAX_HALF_LENGTH) -> List[DyckPath]:
    """All paths of half-length ``n`` in lexicographic order with u < d."""

    if n < 0:
        raise ValueError("half-length must be nonnegative")
    if n > max_half_length:
        raise EnumerationBoundError(
            f"half-length {n} exceeds the enumeration bound {max_half_length}"
        )
    return [DyckPath(word) for word in _extend([], 0, 0, n)]
