"""Type A positive roots as intervals, filters of the root poset and the I_Phi statistic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from akop import AkopProfile, Entry, d_map, dotted_line
from staircase_partitions import LPartition, enumerate_partitions, p_inverse

EpsPair = Tuple[int, int]


class RootError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PositiveRoot:
    """alpha_{start,end} = alpha_start + ... + alpha_end, i.e. eps_start - eps_{end+1}."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.end:
            raise RootError(f"invalid root interval [{self.start},{self.end}]")

    @property
    def eps(self) -> EpsPair:
        return (self.start, self.end + 1)

    def cell(self, l: int) -> Tuple[int, int]:
        """Box of this root in the staircase T_l."""

        return (self.start, l + 1 - self.end)

    def contains(self, other: "PositiveRoot") -> bool:
        return self.start <= other.start and other.end <= self.end

    def __str__(self) -> str:
        return f"{self.start}-{self.end}"


def root_from_eps(pair: EpsPair) -> Optional[PositiveRoot]:
    a, b = pair
    return PositiveRoot(a, b - 1) if a < b else None


def positive_roots(l: int) -> List[PositiveRoot]:
    return [PositiveRoot(i, j) for i in range(1, l + 1) for j in range(i, l + 1)]


@dataclass(frozen=True)
class Antichain:
    roots: FrozenSet[PositiveRoot]

    def __post_init__(self) -> None:
        for alpha in self.roots:
            for beta in self.roots:
                if alpha != beta and alpha.contains(beta):
                    raise RootError(f"roots {alpha} and {beta} are comparable")

    @property
    def starts(self) -> FrozenSet[int]:
        return frozenset(root.start for root in self.roots)

    @property
    def ends(self) -> FrozenSet[int]:
        return frozenset(root.end for root in self.roots)

    def ordered(self) -> List[PositiveRoot]:
        return sorted(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __str__(self) -> str:
        return ",".join(str(root) for root in self.ordered())


@dataclass(frozen=True)
class RootIdeal:
    """An upward-closed set of positive roots (a filter, i.e. an ad-nilpotent ideal of b)."""

    l: int
    roots: FrozenSet[PositiveRoot]

    def __post_init__(self) -> None:
        for root in self.roots:
            if root.end > self.l:
                raise RootError(f"root {root} is outside rank {self.l}")
            for parent in _parents(root, self.l):
                if parent not in self.roots:
                    raise RootError(f"not upward closed: {root} present but {parent} missing")

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    def to_json(self) -> Dict[str, object]:
        return {
            "l": self.l,
            "antichain": [[root.start, root.end] for root in phi_min(self).ordered()],
        }


@dataclass(frozen=True)
class SimpleSubset:
    l: int
    indices: FrozenSet[int]

    def __post_init__(self) -> None:
        stray = [i for i in self.indices if not 1 <= i <= self.l]
        if stray:
            raise RootError(f"simple root indices {sorted(stray)} outside 1..{self.l}")

    def __len__(self) -> int:
        return len(self.indices)

    def issubset(self, other: "SimpleSubset") -> bool:
        return self.indices <= other.indices


def all_simple_subsets(l: int) -> List[SimpleSubset]:
    return [
        SimpleSubset(l, frozenset(i + 1 for i in range(l) if mask >> i & 1))
        for mask in range(1 << l)
    ]


def check_same_rank(ideal: RootIdeal, subset: SimpleSubset) -> None:
    if ideal.l != subset.l:
        raise RootError(f"ideal of rank {ideal.l} paired with simple roots of rank {subset.l}")


def _parents(root: PositiveRoot, l: int) -> Iterable[PositiveRoot]:
    if root.start > 1:
        yield PositiveRoot(root.start - 1, root.end)
    if root.end < l:
        yield PositiveRoot(root.start, root.end + 1)


def parse_antichain(text: str) -> Antichain:
    """Parse ``"1-3,2-5,5-7"``; a bare ``"i"`` stands for alpha_{i,i}."""

    roots = set()
    for token in (piece.strip() for piece in text.split(",")):
        if not token:
            continue
        bounds = token.split("-")
        try:
            if len(bounds) == 1:
                start = end = int(bounds[0])
            elif len(bounds) == 2:
                start, end = int(bounds[0]), int(bounds[1])
            else:
                raise ValueError
            roots.add(PositiveRoot(start, end))
        except ValueError:
            raise RootError(f"malformed root token {token!r}") from None
    return Antichain(frozenset(roots))


def root_sum(x: EpsPair, y: EpsPair) -> Optional[EpsPair]:
    """Add two roots given as eps-pairs; None when the sum is not a root."""

    a, b = x
    c, d = y
    if b == c and a != d:
        return (a, d)
    if d == a and c != b:
        return (c, b)
    return None


def filter_from_antichain(antichain: Antichain, l: int) -> RootIdeal:
    outside = [str(alpha) for alpha in antichain.ordered() if alpha.end > l]
    if outside:
        raise RootError(f"roots {', '.join(outside)} are outside rank {l}")
    roots = frozenset(
        PositiveRoot(p, q)
        for alpha in antichain.roots
        for p in range(1, alpha.start + 1)
        for q in range(alpha.end, l + 1)
    )
    return RootIdeal(l, roots)


def phi_min(ideal: RootIdeal) -> Antichain:
    minimal = frozenset(
        root
        for root in ideal.roots
        if root.start == root.end
        or (
            PositiveRoot(root.start + 1, root.end) not in ideal
            and PositiveRoot(root.start, root.end - 1) not in ideal
        )
    )
    return Antichain(minimal)


def sigma(ideal: RootIdeal) -> LPartition:
    counts = [0] * ideal.l
    for root in ideal.roots:
        counts[root.start - 1] += 1
    return LPartition(ideal.l, tuple(counts))


def sigma_inverse(partition: LPartition) -> RootIdeal:
    l = partition.l
    roots = frozenset(
        PositiveRoot(i, j)
        for i in range(1, l + 1)
        for j in range(l + 1 - partition.part(i), l + 1)
    )
    return RootIdeal(l, roots)


def simple_span(subset: SimpleSubset) -> List[PositiveRoot]:
    """Delta_I intersected with the positive roots."""

    return [
        PositiveRoot(i, j)
        for i in range(1, subset.l + 1)
        for j in range(i, subset.l + 1)
        if all(s in subset.indices for s in range(i, j + 1))
    ]


def is_in_F_I(ideal: RootIdeal, subset: SimpleSubset) -> bool:
    """Closure test straight from the definition of F_I."""

    check_same_rank(ideal, subset)
    levi = simple_span(subset)
    if any(root in ideal for root in levi):
        return False
    shifts = [root.eps for root in positive_roots(ideal.l)]
    shifts += [(root.end + 1, root.start) for root in levi]
    for alpha in ideal.roots:
        for beta in shifts:
            total = root_sum(alpha.eps, beta)
            if total is None:
                continue
            gamma = root_from_eps(total)
            if gamma is not None and gamma not in ideal:
                return False
    return True


def i_max(ideal: RootIdeal) -> SimpleSubset:
    minimal = phi_min(ideal)
    blocked = minimal.starts | minimal.ends
    return SimpleSubset(ideal.l, frozenset(range(1, ideal.l + 1)) - blocked)


def lu_split(antichain: Antichain) -> Tuple[FrozenSet[PositiveRoot], FrozenSet[PositiveRoot]]:
    """Split into L (start coincides with some end, itself included) and U."""

    ends = antichain.ends
    lower = frozenset(root for root in antichain.roots if root.start in ends)
    return lower, antichain.roots - lower


def _rectangle_index(prof: AkopProfile, column: int) -> int:
    for p in range(1, prof.k + 1):
        if prof.i(p - 1) < column <= prof.i(p):
            return p
    raise RootError(f"column {column} lies beyond the dotted line")


def psi_map(ideal: RootIdeal) -> Dict[PositiveRoot, Entry]:
    """Send each minimal root to the insertion entry (r, s) of its south-east corner."""

    partition = sigma(ideal)
    prof = dotted_line(partition)
    image: Dict[PositiveRoot, Entry] = {}
    for root in phi_min(ideal).roots:
        row, column = root.cell(ideal.l)
        p = _rectangle_index(prof, column)
        image[root] = (p, row - prof.anchor_row(p))
    return image


def dual(ideal: RootIdeal) -> RootIdeal:
    """sigma^-1 . P^-1 . D . sigma; sends #Phi_min = p to l - p."""

    return sigma_inverse(p_inverse(d_map(sigma(ideal)), ideal.l))


def enumerate_ideals(l: int) -> List[RootIdeal]:
    return [sigma_inverse(partition) for partition in enumerate_partitions(l)]
