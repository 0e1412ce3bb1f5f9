"""Matrix-unit ground truth for the ideal property of a filter inside a parabolic p_I."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from dyck_core import EnumerationBoundError
from root_poset import RootIdeal, SimpleSubset, check_same_rank, simple_span

MAX_LIE_RANK = 6

Unit = Tuple[int, int]
# sparse element of gl_{l+1}: matrix unit -> integer coefficient
Element = Dict[Unit, int]


@dataclass(frozen=True)
class MatrixUnitSet:
    l: int
    units: FrozenSet[Unit]
    include_diagonal: bool = False

    def is_strictly_upper(self) -> bool:
        return all(a < b for a, b in self.units)


def ideal_units(ideal: RootIdeal) -> MatrixUnitSet:
    return MatrixUnitSet(
        l=ideal.l,
        units=frozenset((root.start, root.end + 1) for root in ideal.roots),
        include_diagonal=False,
    )


def parabolic_units(subset: SimpleSubset) -> MatrixUnitSet:
    size = subset.l + 1
    units = {(a, b) for a in range(1, size + 1) for b in range(a + 1, size + 1)}
    units |= {(root.end + 1, root.start) for root in simple_span(subset)}
    return MatrixUnitSet(l=subset.l, units=frozenset(units), include_diagonal=True)


def bracket_units(x: Unit, y: Unit) -> Element:
    """[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb."""

    (a, b), (c, d) = x, y
    out: Element = defaultdict(int)
    if b == c:
        out[(a, d)] += 1
    if d == a:
        out[(c, b)] -= 1
    return {unit: coeff for unit, coeff in out.items() if coeff}


def bracket(x: Element, y: Element) -> Element:
    out: Element = defaultdict(int)
    for ux, cx in x.items():
        for uy, cy in y.items():
            for unit, coeff in bracket_units(ux, uy).items():
                out[unit] += cx * cy * coeff
    return {unit: coeff for unit, coeff in out.items() if coeff}


def _torus(l: int) -> List[Element]:
    # trace-zero diagonal generators H_a = E_aa - E_{a+1,a+1}
    return [{(a, a): 1, (a + 1, a + 1): -1} for a in range(1, l + 1)]


def is_lie_ideal(ideal: RootIdeal, subset: SimpleSubset, max_rank: int = MAX_LIE_RANK) -> bool:
    if ideal.l > max_rank:
        raise EnumerationBoundError(f"rank {ideal.l} exceeds the matrix oracle bound {max_rank}")
    check_same_rank(ideal, subset)
    if any(root in ideal for root in simple_span(subset)):
        return False

    span = ideal_units(ideal)
    basis: List[Element] = [{unit: 1} for unit in parabolic_units(subset).units]
    basis += _torus(ideal.l)
    for x in basis:
        for unit in span.units:
            image = bracket(x, {unit: 1})
            if any(key not in span.units for key in image):
                return False
    return True


def unit_matrix(a: int, b: int, size: int) -> np.ndarray:
    matrix = np.zeros((size, size), dtype=np.int64)
    matrix[a - 1, b - 1] = 1
    return matrix


def as_matrix(element: Element, size: int) -> np.ndarray:
    matrix = np.zeros((size, size), dtype=np.int64)
    for (a, b), coeff in element.items():
        matrix[a - 1, b - 1] += coeff
    return matrix


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def first_bracket_mismatch(size: int) -> Optional[Tuple[Unit, Unit]]:
    """Compare the delta rule with numpy commutators over every pair of matrix units."""

    units = [(a, b) for a in range(1, size + 1) for b in range(1, size + 1)]
    for x in units:
        for y in units:
            expected = commutator(unit_matrix(*x, size), unit_matrix(*y, size))
            if not np.array_equal(as_matrix(bracket_units(x, y), size), expected):
                return x, y
    return None
