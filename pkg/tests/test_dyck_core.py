import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyck_core import (
    DyckPath,
    EnumerationBoundError,
    IllegalCharacterError,
    NegativePrefixError,
    PeakIndexError,
    UnbalancedWordError,
    count_peaks,
    count_u_peaks,
    count_udu,
    enumerate_dyck,
    highest_peaks,
    insert_on_highest_peaks,
    insert_peaks,
    max_height,
    parse_dyck,
    peaks,
    render_dyck,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_parse_smallest_path():
    path = parse_dyck("ud")
    assert path.half_length == 1
    assert str(path) == "ud"
    assert render_dyck(path) == "ud"


def test_parse_accepts_uppercase_and_renders_lowercase():
    path = parse_dyck("UUDDUD")
    assert path.steps == "uuddud"
    assert path.to_json() == {"n": 3, "word": "uuddud"}


def test_parse_long_path():
    path = parse_dyck("uuuduuuddudduddd")
    assert path.half_length == 8


def test_parse_negative_prefix_names_position():
    with pytest.raises(NegativePrefixError) as err:
        parse_dyck("udd")
    assert err.value.position == 3


def test_parse_illegal_character_names_position():
    with pytest.raises(IllegalCharacterError) as err:
        parse_dyck("uxd")
    assert err.value.position == 2


def test_parse_rejects_figure_step_codes():
    with pytest.raises(IllegalCharacterError):
        parse_dyck("3434")


def test_parse_unbalanced_word():
    with pytest.raises(UnbalancedWordError):
        parse_dyck("uud")


def test_error_kinds_are_distinct_value_errors():
    kinds = {IllegalCharacterError, NegativePrefixError, UnbalancedWordError}
    assert len(kinds) == 3
    assert all(issubclass(kind, ValueError) for kind in kinds)


def test_count_peaks():
    assert count_peaks(DyckPath("ud" * 4)) == 4
    assert count_peaks(DyckPath("uuddudud")) == 3
    assert count_peaks(DyckPath("uuuudddd")) == 1


def test_count_udu_worked_example():
    path = DyckPath("uuduuddduududdud")
    assert count_udu(path) == 2
    assert count_u_peaks(path) == 2


def test_count_udu_all_peaks():
    for m in range(1, 8):
        assert count_udu(DyckPath("ud" * m)) == m - 1
    assert count_udu(DyckPath("uudd")) == 0


def test_count_u_peaks_small():
    assert count_u_peaks(DyckPath("ududud")) == 2
    assert count_u_peaks(DyckPath("uuuddd")) == 0


def test_peaks_report_index_and_height():
    assert peaks(DyckPath("uduudd")) == [(0, 1), (3, 2)]
    assert max_height(DyckPath("uduudd")) == 2
    assert highest_peaks(DyckPath("uududduududdud")) == [1, 3, 7, 9]


def test_insert_peaks_first_step_of_construction():
    assert insert_peaks(DyckPath("ududud"), 1, 2).steps == "uududd" + "ud" + "ud"


def test_insert_peaks_single_nesting():
    assert insert_peaks(DyckPath("ud"), 1, 1).steps == "uudd"


def test_insert_peaks_second_highest_peak():
    path = DyckPath("uududd" + "uududd" + "ud")
    assert insert_peaks(path, 2, 1).steps == "uuduuddduududdud"


def test_insert_peaks_raises_max_height_by_one():
    path = DyckPath("uududduududdud")
    assert max_height(insert_peaks(path, 3, 2)) == max_height(path) + 1


def test_insert_peaks_index_out_of_range():
    with pytest.raises(PeakIndexError):
        insert_peaks(DyckPath("uudd"), 2, 1)


def test_insert_peaks_rejects_nonpositive_count():
    with pytest.raises(ValueError):
        insert_peaks(DyckPath("ud"), 1, 0)


def test_insertion_on_u_peak_and_non_u_peak():
    # m peaks on a u-peak add m - 2 udu, on any other highest peak m - 1
    path = DyckPath("uduududd")
    assert count_udu(path) == 2
    on_u_peak = insert_peaks(path, 1, 2)
    on_last_peak = insert_peaks(path, 2, 2)
    assert on_u_peak.steps == "uduuududdudd"
    assert count_udu(on_u_peak) == 2
    assert on_last_peak.steps == "uduuduududdd"
    assert count_udu(on_last_peak) == 3


def test_insert_on_highest_peaks_uses_input_indices():
    path = insert_on_highest_peaks(DyckPath("ududud"), (2, 2, 0))
    assert path.steps == "uududduududdud"
    assert insert_on_highest_peaks(path, (0, 1)).steps == "uuduuddduududdud"


def test_insert_on_highest_peaks_too_many_counts():
    with pytest.raises(PeakIndexError):
        insert_on_highest_peaks(DyckPath("uudd"), (1, 1))


def test_enumerate_small():
    assert [p.steps for p in enumerate_dyck(1)] == ["ud"]
    assert [p.steps for p in enumerate_dyck(3)] == ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
    assert enumerate_dyck(0) == [DyckPath("")]


def test_enumerate_counts_are_catalan():
    for n in range(11):
        paths = enumerate_dyck(n)
        assert len(paths) == CATALAN[n]
        assert len({p.steps for p in paths}) == len(paths)


def test_enumerate_is_lexicographic():
    words = [p.steps for p in enumerate_dyck(6)]
    assert words == sorted(words, key=lambda w: w.replace("u", "0").replace("d", "1"))


def test_enumerate_bound():
    with pytest.raises(EnumerationBoundError):
        enumerate_dyck(17)
    with pytest.raises(EnumerationBoundError):
        enumerate_dyck(5, max_half_length=4)


def test_statistics_over_all_paths():
    for n in range(1, 9):
        for path in enumerate_dyck(n):
            assert count_udu(path) == count_u_peaks(path)
            assert 1 <= count_peaks(path) <= n
            assert count_udu(path) <= count_peaks(path) - 1


@given(st.integers(min_value=1, max_value=7).flatmap(lambda n: st.sampled_from(enumerate_dyck(n))), st.data())
def test_insert_peaks_output_round_trips(path, data):
    q = data.draw(st.integers(min_value=1, max_value=len(highest_peaks(path))))
    m = data.draw(st.integers(min_value=1, max_value=4))
    grown = insert_peaks(path, q, m)
    assert len(grown.steps) == len(path.steps) + 2 * m
    assert parse_dyck(str(grown)) == grown
