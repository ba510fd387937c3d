import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2fusion.partitions import (
    Partition,
    demazure_partition,
    level_decompose,
    partition_count,
    partitions_of,
)

partitions = st.lists(st.integers(0, 9), max_size=7).map(Partition)


def test_normalization():
    assert Partition((1, 2, 0)) == (2, 1)
    assert Partition(()) == ()
    assert Partition((3, 3, 4, 2)) == (4, 3, 3, 2)


def test_negative_part_rejected():
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_weight_and_length():
    assert Partition((3, 2, 2)).weight == 7
    assert len(Partition((3, 2, 2))) == 3
    assert Partition().weight == 0


def test_plus_examples():
    assert Partition((1, 1)).plus() == (2,)
    assert Partition((3,)).plus() == (3,)
    assert Partition((3, 3, 3)).plus() == (4, 3, 2)
    assert Partition().plus() == ()


def test_minus_examples():
    assert Partition((1, 1)).minus() == ()
    assert Partition((3, 2, 2)).minus() == (3,)
    assert Partition((2,)).minus() == ()


@given(partitions)
def test_plus_preserves_weight(xi):
    assert xi.plus().weight == xi.weight


@given(partitions)
def test_minus_drops_two_last_parts(xi):
    if len(xi) >= 2:
        assert xi.minus().weight == xi.weight - 2 * xi[-1]
    else:
        assert xi.minus() == ()


@given(partitions)
def test_surgery_strictly_decreases(xi):
    # plus: lexicographically smaller (length, last part); minus: smaller weight
    if len(xi) >= 2:
        up = xi.plus()
        assert (len(up), up[-1] if up else 0) < (len(xi), xi[-1])
        assert xi.minus().weight < xi.weight


def test_conjugate_examples():
    assert Partition((2, 1, 1)).conjugate() == (3, 1)
    assert Partition().conjugate() == ()
    assert Partition((4, 3, 3, 2)).conjugate() == (4, 4, 3, 1)


@given(partitions)
def test_conjugate_involution(xi):
    assert xi.conjugate().conjugate() == xi


def test_weighted_size_examples():
    assert Partition((1, 1)).weighted_size() == 1
    assert Partition((1, 1, 1)).weighted_size() == 3
    assert Partition((2, 1, 1)).weighted_size() == 3


def test_weighted_size_formulas_agree():
    # row formula vs column binomials, all partitions of weight <= 20
    for weight in range(21):
        for mu in partitions_of(weight):
            via_columns = sum(c * (c - 1) // 2 for c in mu.conjugate())
            assert mu.weighted_size() == via_columns


def test_level_decompose():
    assert level_decompose(3, 2) == (1, 1)
    assert level_decompose(0, 5) == (0, 0)
    assert level_decompose(4, 2) == (2, 0)
    with pytest.raises(ValueError):
        level_decompose(3, 0)
    with pytest.raises(ValueError):
        level_decompose(-1, 2)


def test_demazure_partition():
    assert demazure_partition(2, 3) == (2, 1)
    assert demazure_partition(2, 4) == (2, 2)
    assert demazure_partition(3, 0) == ()
    assert demazure_partition(1, 3) == (1, 1, 1)


def test_partitions_of_counts():
    assert len(partitions_of(4)) == 5
    assert partitions_of(0) == [Partition()]
    assert set(partitions_of(5, max_part=2)) == {
        Partition((2, 2, 1)),
        Partition((2, 1, 1, 1)),
        Partition((1, 1, 1, 1, 1)),
    }


def test_partitions_of_matches_count_function():
    for weight in range(16):
        assert len(partitions_of(weight)) == partition_count(weight)


def test_partitions_of_reverse_lex_order():
    assert partitions_of(4) == [
        Partition((4,)),
        Partition((3, 1)),
        Partition((2, 2)),
        Partition((2, 1, 1)),
        Partition((1, 1, 1, 1)),
    ]


def test_partitions_of_max_length():
    assert all(len(p) <= 2 for p in partitions_of(6, max_length=2))
    assert len(partitions_of(6, max_length=2)) == 4


def test_string_round_trip():
    assert str(Partition((3, 2, 2, 1))) == "3,2,2,1"
    assert str(Partition()) == "-"
    assert Partition.from_string("3,2,2,1") == (3, 2, 2, 1)
    assert Partition.from_string("-") == ()
    assert Partition.from_string("") == ()


@given(partitions)
def test_string_parse_inverts_str(xi):
    assert Partition.from_string(str(xi)) == xi
