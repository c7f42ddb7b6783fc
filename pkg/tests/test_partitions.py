import pytest
from hypothesis import given, strategies as st

from hirzebruch.partitions import (
    Box,
    ColoredDiagram,
    PartitionDiagram,
    enumerate_partitions,
    relative_arm,
    relative_leg,
)


def slow_partition_count(n, cap=None):
    # independent reference: count partitions by largest part
    if cap is None:
        cap = n
    if n == 0:
        return 1
    return sum(slow_partition_count(n - first, first) for first in range(1, min(n, cap) + 1))


@st.composite
def diagrams(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    rows = []
    cap = n
    while n > 0:
        part = draw(st.integers(1, min(n, cap)))
        rows.append(part)
        cap = part
        n -= part
    return PartitionDiagram(rows)


def test_rows_must_be_positive_and_decreasing():
    with pytest.raises(ValueError):
        PartitionDiagram([2, 0])
    with pytest.raises(ValueError):
        PartitionDiagram([-1])
    with pytest.raises(ValueError):
        PartitionDiagram([1, 2])


def test_basic_shape_queries():
    y = PartitionDiagram([3, 1, 1])
    assert y.size == 5
    assert y.num_rows == 3
    assert y.num_columns == 3
    assert [y.row_length(r) for r in (1, 2, 3, 4)] == [3, 1, 1, 0]
    assert y.column_lengths() == (3, 1, 1)
    assert y.column_multiplicities() == {3: 1, 1: 2}
    assert y.transpose().rows == (3, 1, 1)
    assert Box(1, 3) in y and Box(2, 1) in y and Box(2, 2) not in y


def test_boxes_against_membership():
    y = PartitionDiagram([4, 2, 1])
    boxes = list(y.boxes())
    assert len(boxes) == y.size == len(set(boxes))
    for box in boxes:
        assert box in y
    assert Box(5, 1) not in y and Box(1, 4) not in y


def test_enumeration_counts_match_reference():
    for n in range(13):
        got = enumerate_partitions(n)
        assert len(got) == slow_partition_count(n)
        assert len(set(got)) == len(got)
        assert all(y.size == n for y in got)


def test_enumeration_order_is_decreasing_lex():
    rows = [y.rows for y in enumerate_partitions(6)]
    assert rows == sorted(rows, reverse=True)
    assert rows[0] == (6,)
    assert rows[-1] == (1,) * 6


def test_enumeration_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_arm_and_leg_reference_values():
    assert relative_arm(PartitionDiagram([1, 1]), Box(1, 1)) == 1
    assert relative_leg(PartitionDiagram([2]), Box(1, 1)) == 1
    assert relative_leg(PartitionDiagram([3, 1]), Box(1, 2)) == 0
    assert relative_arm(PartitionDiagram([2, 2]), Box(2, 1)) == 1
    # outside the measuring diagram both go negative
    assert relative_leg(PartitionDiagram([]), Box(1, 1)) == -1
    assert relative_arm(PartitionDiagram([]), Box(1, 1)) == -1
    assert relative_leg(PartitionDiagram([1]), Box(2, 1)) == -1


@given(diagrams())
def test_transpose_is_an_involution(y):
    assert y.transpose().transpose() == y
    assert y.transpose().size == y.size


@given(diagrams())
def test_own_arm_and_leg_are_nonnegative(y):
    for s in y.boxes():
        assert relative_arm(y, s) >= 0
        assert relative_leg(y, s) >= 0


@given(diagrams())
def test_boxes_with_zero_arm_are_the_column_tops(y):
    tops = sum(1 for s in y.boxes() if relative_arm(y, s) == 0)
    assert tops == y.num_columns


@given(diagrams(), st.integers(1, 6), st.integers(1, 6))
def test_arm_and_leg_swap_under_transpose(y, c, r):
    assert relative_arm(y, Box(c, r)) == relative_leg(y.transpose(), Box(r, c))


def test_json_round_trip():
    y = PartitionDiagram([3, 1])
    assert PartitionDiagram.from_json(y.to_json()) == y
    d = ColoredDiagram(y, 1)
    assert ColoredDiagram.from_json(d.to_json()) == d
    assert d.to_json() == {"rows": [3, 1], "eps": 1}


def test_coloring_reference_values():
    d = ColoredDiagram(PartitionDiagram([2]), 0)
    assert d.color(Box(1, 1)) == 0 and d.color(Box(2, 1)) == 1
    assert d.color_counts() == (1, 1)
    assert ColoredDiagram(PartitionDiagram([1]), 0).color_counts() == (1, 0)
    assert ColoredDiagram(PartitionDiagram([2, 1]), 0).color_counts() == (1, 2)
    assert ColoredDiagram(PartitionDiagram([4]), 0).color_counts() == (2, 2)


def test_coloring_rejects_bad_eps():
    with pytest.raises(ValueError):
        ColoredDiagram(PartitionDiagram([1]), 2)


@given(diagrams(), st.integers(0, 1))
def test_recoloring_swaps_counts(y, eps):
    d = ColoredDiagram(y, eps)
    k0, k1 = d.color_counts()
    assert d.recolor().color_counts() == (k1, k0)
    assert k0 + k1 == y.size


@given(diagrams(), st.integers(0, 1))
def test_color_imbalance_bounded_by_columns(y, eps):
    # each column alternates colors, so it contributes at most 1 to the gap
    k0, k1 = ColoredDiagram(y, eps).color_counts()
    assert abs(k0 - k1) <= y.num_columns


@given(diagrams(), st.integers(0, 1))
def test_transpose_preserves_coloring(y, eps):
    d = ColoredDiagram(y, eps)
    assert d.transpose().color_counts() == d.color_counts()
    assert d.transpose().eps == eps
