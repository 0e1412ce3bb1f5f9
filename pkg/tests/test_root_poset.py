import pytest

from akop import d_map, predicted_udu
from dyck_core import count_peaks, count_udu
from root_poset import (
    Antichain,
    PositiveRoot,
    RootError,
    RootIdeal,
    SimpleSubset,
    all_simple_subsets,
    dual,
    enumerate_ideals,
    filter_from_antichain,
    i_max,
    is_in_F_I,
    lu_split,
    parse_antichain,
    phi_min,
    positive_roots,
    psi_map,
    root_from_eps,
    root_sum,
    sigma,
    sigma_inverse,
)
from staircase_partitions import LPartition, enumerate_partitions, p_map

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_root_basics():
    root = PositiveRoot(1, 3)
    assert root.eps == (1, 4)
    assert root.cell(3) == (1, 1)
    assert str(root) == "1-3"
    assert root.contains(PositiveRoot(2, 2))
    assert root_from_eps((2, 5)) == PositiveRoot(2, 4)
    assert root_from_eps((5, 2)) is None
    assert len(positive_roots(4)) == 10


def test_root_sum():
    assert root_sum((1, 2), (2, 4)) == (1, 4)
    assert root_sum((2, 4), (1, 2)) == (1, 4)
    assert root_sum((1, 2), (3, 4)) is None
    assert root_sum((1, 2), (2, 1)) is None


def test_parse_antichain():
    antichain = parse_antichain("1-3, 2-5,5-7")
    assert str(antichain) == "1-3,2-5,5-7"
    assert parse_antichain("2").roots == {PositiveRoot(2, 2)}
    assert len(parse_antichain("")) == 0


@pytest.mark.parametrize("text", ["1-2-3", "a-b", "3-1", "1-3,2-2"])
def test_parse_antichain_rejects(text):
    with pytest.raises(RootError):
        parse_antichain(text)


def test_ideal_must_be_upward_closed():
    with pytest.raises(RootError):
        RootIdeal(3, frozenset({PositiveRoot(2, 2)}))
    with pytest.raises(RootError):
        RootIdeal(2, frozenset({PositiveRoot(1, 3)}))


def test_filter_and_minimal_roots_invert():
    for l in range(1, 6):
        for ideal in enumerate_ideals(l):
            assert filter_from_antichain(phi_min(ideal), l) == ideal


def test_sigma_of_example():
    ideal = filter_from_antichain(parse_antichain("1-3"), 3)
    assert sigma(ideal) == LPartition(3, (1, 0, 0))
    assert ideal.to_json() == {"l": 3, "antichain": [[1, 3]]}


def test_sigma_is_a_bijection():
    for l in range(1, 7):
        ideals = enumerate_ideals(l)
        assert len(ideals) == CATALAN[l + 1]
        assert {sigma(ideal) for ideal in ideals} == set(enumerate_partitions(l))
        for lam in enumerate_partitions(l):
            assert sigma(sigma_inverse(lam)) == lam


def test_i_max_and_lu_split():
    antichain = parse_antichain("1-3,2-5,5-7")
    lower, upper = lu_split(antichain)
    assert lower == {PositiveRoot(5, 7)}
    assert upper == {PositiveRoot(1, 3), PositiveRoot(2, 5)}
    ideal = filter_from_antichain(antichain, 7)
    assert i_max(ideal).indices == {4, 6}


def test_simple_roots_count_as_lower():
    lower, upper = lu_split(parse_antichain("2-2"))
    assert lower == {PositiveRoot(2, 2)}
    assert not upper


def test_i_phi_size_is_l_minus_two_u_minus_l():
    for l in range(1, 7):
        for ideal in enumerate_ideals(l):
            lower, upper = lu_split(phi_min(ideal))
            assert len(i_max(ideal)) == l - 2 * len(upper) - len(lower)


def test_udu_of_d_counts_i_phi():
    for l in range(1, 7):
        for ideal in enumerate_ideals(l):
            lam = sigma(ideal)
            assert count_udu(d_map(lam)) == len(i_max(ideal)) == predicted_udu(lam)


def test_peak_counts_see_the_antichain():
    for l in range(1, 7):
        for ideal in enumerate_ideals(l):
            size = len(phi_min(ideal))
            lam = sigma(ideal)
            assert l + 1 - count_peaks(d_map(lam)) == size
            assert count_peaks(p_map(lam)) - 1 == size


def test_psi_of_single_root():
    ideal = filter_from_antichain(parse_antichain("1-3"), 3)
    assert psi_map(ideal) == {PositiveRoot(1, 3): (1, 0)}


def test_f_i_membership_matches_i_max():
    for l in range(1, 5):
        subsets = all_simple_subsets(l)
        assert len(subsets) == 2**l
        for ideal in enumerate_ideals(l):
            top = i_max(ideal)
            for subset in subsets:
                assert is_in_F_I(ideal, subset) == subset.issubset(top)


def test_simple_subset_bounds():
    with pytest.raises(RootError):
        SimpleSubset(3, frozenset({4}))


def test_dual_example():
    ideal = filter_from_antichain(parse_antichain("1-3"), 3)
    image = dual(ideal)
    assert str(phi_min(image)) == "1-1,2-2"


def test_dual_is_injective_and_flips_antichain_size():
    for l in range(1, 7):
        ideals = enumerate_ideals(l)
        images = [dual(ideal) for ideal in ideals]
        assert len(set(images)) == len(ideals)
        for ideal, image in zip(ideals, images):
            assert len(phi_min(image)) == l - len(phi_min(ideal))


def test_zero_ideal():
    ideal = filter_from_antichain(Antichain(frozenset()), 4)
    assert len(ideal) == 0
    assert len(i_max(ideal)) == 4
    assert len(phi_min(dual(ideal))) == 4


def test_root_sum_with_negative_simple():
    assert root_sum((1, 3), (3, 4)) == (1, 4)
    assert root_sum((1, 4), (4, 1)) is None
    assert root_sum((1, 4), (2, 1)) == (2, 4)


def test_rank_seven_example():
    ideal = sigma_inverse(LPartition(7, (5, 3, 1, 1, 1, 0, 0)))
    assert str(phi_min(ideal)) == "1-3,2-5,5-7"
    assert is_in_F_I(ideal, SimpleSubset(7, frozenset({4})))
    assert psi_map(ideal) == {
        PositiveRoot(1, 3): (2, 0),
        PositiveRoot(2, 5): (2, 1),
        PositiveRoot(5, 7): (1, 1),
    }


def test_highest_root_fails_against_first_simple():
    theta = filter_from_antichain(parse_antichain("1-2"), 2)
    assert is_in_F_I(theta, SimpleSubset(2, frozenset()))
    assert not is_in_F_I(theta, SimpleSubset(2, frozenset({1})))


def test_filter_rejects_roots_outside_rank():
    with pytest.raises(RootError, match="outside rank 3"):
        filter_from_antichain(parse_antichain("5-5"), 3)
    with pytest.raises(RootError):
        filter_from_antichain(parse_antichain("1-2,4-4"), 3)


def test_f_i_membership_needs_matching_rank():
    ideal = filter_from_antichain(parse_antichain("1-3"), 3)
    with pytest.raises(RootError, match="rank 3"):
        is_in_F_I(ideal, SimpleSubset(2, frozenset({1})))
