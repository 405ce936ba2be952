from collections import Counter

import pytest
from hypothesis import given, strategies as st

from sympleth.partitions import (
    add_componentwise,
    conjugate,
    corner_count,
    corners,
    durfee,
    has_two_odd_columns,
    is_corner,
    is_defective_threshold,
    is_even,
    is_threshold,
    make_partition,
    opposite_cell,
    partition_list,
    partitions_of,
    row_pair_involution,
)


@st.composite
def partition_strategy(draw, max_n=14):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def test_make_partition_accepts_and_normalizes():
    assert make_partition([3, 1]) == (3, 1)
    assert make_partition([2, 1, 0, 0]) == (2, 1)
    assert make_partition([]) == ()


def test_make_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


def test_partitions_of_counts_and_order():
    counts = [len(partition_list(n)) for n in range(10)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    got = list(partitions_of(4))
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert got == sorted(got, reverse=True)


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)


@given(partition_strategy())
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def test_durfee():
    assert durfee(()) == 0
    assert durfee((3, 1)) == 1
    assert durfee((3, 3, 2)) == 2
    assert durfee((4, 4, 4, 4)) == 4


def test_is_even_examples():
    assert is_even((2, 2))
    assert is_even((1, 1, 1, 1))
    assert not is_even((3, 1))
    assert is_even(())


def test_is_threshold_examples():
    assert is_threshold((2, 1, 1))
    assert is_threshold(())
    assert is_threshold((2, 2, 2))
    assert not is_threshold((2, 2))
    assert not is_threshold((4,))


def test_threshold_partitions_of_small_even_sizes():
    # frozen from the column closed forms these sets index
    assert [p for p in partition_list(2) if is_threshold(p)] == [(1, 1)]
    assert [p for p in partition_list(4) if is_threshold(p)] == [(2, 1, 1)]
    assert [p for p in partition_list(6) if is_threshold(p)] == [(3, 1, 1, 1), (2, 2, 2)]


def test_corners_examples():
    assert corners((2, 2)) == [(2, 2)]
    assert corners((3, 1)) == [(1, 3), (2, 1)]
    assert corners(()) == []
    assert is_corner((3, 1), 1, 3)
    assert not is_corner((3, 1), 1, 2)


@given(partition_strategy())
def test_corner_count_is_distinct_part_values(p):
    assert corner_count(p) == len(set(p))


def test_opposite_cell_branches():
    assert opposite_cell(1, 1) == (2, 1)
    assert opposite_cell(2, 1) == (1, 1)
    assert opposite_cell(1, 2) == (3, 1)
    with pytest.raises(ValueError):
        opposite_cell(0, 1)


def test_row_pair_involution_examples():
    assert row_pair_involution((4, 3, 1)) == (2, 1, 1, 1, 1, 1, 1)
    assert row_pair_involution((3, 2, 2, 1)) == (2, 2, 2, 1, 1)
    # odd length pads one zero row: (3,2,1,0) pairs to (5,1)
    assert row_pair_involution((3, 2, 1)) == conjugate((5, 1))
    assert row_pair_involution(()) == ()


def test_row_pair_involution_on_its_domain():
    # involution, size and family membership hold on the union of the even
    # family and the two-odd-column family; corner counts are preserved on
    # the even family (two-odd-column shapes can change corner count, e.g.
    # (4,3,1) maps to (2,1,1,1,1,1,1), and both carry unit coefficients in
    # the expansions this symmetry describes)
    for h in range(1, 8):
        for p in partition_list(2 * h):
            if not (is_even(p) or has_two_odd_columns(p)):
                continue
            q = row_pair_involution(p)
            assert sum(q) == sum(p)
            assert row_pair_involution(q) == p
            assert is_even(q) == is_even(p)
            assert has_two_odd_columns(q) == has_two_odd_columns(p)
            if is_even(p):
                assert corner_count(q) == corner_count(p)


def test_two_odd_columns_examples():
    assert has_two_odd_columns((2, 1, 1))
    assert not has_two_odd_columns((2, 2))
    assert not has_two_odd_columns((3, 1))  # two equal odd columns
    with pytest.raises(ValueError):
        has_two_odd_columns((2, 1))


def test_two_odd_column_family_size_eight():
    # frozen support of the single-leg hook expansion at h = 4
    got = sorted(p for p in partition_list(8) if has_two_odd_columns(p))
    assert got == sorted(
        [(4, 3, 1), (3, 2, 2, 1), (3, 2, 1, 1, 1), (2, 2, 2, 1, 1), (2, 1, 1, 1, 1, 1, 1)]
    )


def test_defective_threshold_examples():
    assert is_defective_threshold((2, 2))
    assert is_defective_threshold((1, 1, 1, 1))
    assert not is_defective_threshold((2, 1, 1))  # genuinely threshold
    assert not is_defective_threshold((4,))
    with pytest.raises(ValueError):
        is_defective_threshold((3,))


def test_defective_threshold_table_size_six():
    # frozen from the power-sum oracle: these index the long-leg hook
    # expansion of size six with unit multiplicities
    got = sorted(p for p in partition_list(6) if is_defective_threshold(p))
    assert got == sorted([(3, 2, 1), (2, 2, 1, 1), (2, 1, 1, 1, 1)])


def test_add_componentwise():
    assert add_componentwise((2, 1), (1, 1)) == (3, 2)
    assert add_componentwise((6, 6), (3,)) == (9, 6)
    assert add_componentwise((), (2,)) == (2,)
