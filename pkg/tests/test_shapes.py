import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkostka.errors import ValidationError
from qkostka.shapes import (
    Box,
    Partition,
    SkewShape,
    add_rim_hook,
    drop_last_column,
    low_row,
    low_row_boxes,
    quantum_shape,
    reduced_shape,
    rim_hook_shape,
    split_quantum_degree,
    transpose,
)

partitions = st.lists(st.integers(0, 8), max_size=8).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_partition_trims_trailing_zeros():
    assert Partition((3, 1, 0, 0)).rows == (3, 1)
    assert Partition((0, 0)) == Partition()


@pytest.mark.parametrize("rows", [(1, 2), (3, -1)])
def test_partition_rejects_bad_rows(rows):
    with pytest.raises(ValidationError):
        Partition(rows)


def test_partition_accessors():
    lam = Partition.of(4, 4, 3, 3)
    assert lam.area == 14 and lam.width == 4 and len(lam) == 4
    assert lam.row(3) == 3 and lam.row(5) == 0 and lam.row(0) == 0
    assert lam.has_box(4, 3) and not lam.has_box(4, 4)
    assert str(lam) == "(4,4,3,3)"


def test_boxes_are_row_major():
    boxes = Partition.of(2, 1).boxes()
    assert boxes == [Box(1, 1), Box(1, 2), Box(2, 1)]
    assert boxes == sorted(boxes)


def test_skew_shape_containment():
    skew = SkewShape(Partition.of(3, 2), Partition.of(1))
    assert skew.area == 4
    assert skew.boxes()[0] == Box(1, 2)
    with pytest.raises(ValidationError):
        SkewShape(Partition.of(2), Partition.of(1, 1))


@pytest.mark.parametrize(
    "rows, expected",
    [((4, 4, 3, 3), (1, 0, 3)), ((5,), (5,)), ((6, 6, 6, 6, 3, 3), (3, 0, 3)), ((9, 9, 5, 3), (4, 2, 3)), ((), ())],
)
def test_low_row(rows, expected):
    assert low_row(Partition(rows)) == expected


@given(partitions)
def test_low_row_sums_to_width(lam):
    sizes = low_row(lam)
    assert sum(sizes) == lam.width
    assert len(sizes) <= len(lam)
    assert not sizes or sizes[0] != 0
    # every listed box has nothing beneath it
    for group in low_row_boxes(lam):
        for a, b in group:
            assert not lam.has_box(a + 1, b)


@pytest.mark.parametrize(
    "args, rows",
    [((6, 2, 3), (6, 6, 6, 6, 3, 3)), ((1, 0, 1), (1, 1)), ((10, 2, 2), (10, 10, 10, 10, 2, 2))],
)
def test_reduced_shape(args, rows):
    lam = reduced_shape(*args)
    assert lam.rows == rows
    level, k, p = args
    assert lam.area == 2 * k * level + 2 * p


@pytest.mark.parametrize("args", [(3, 0, 0), (3, 0, 4), (3, -1, 1), (0, 0, 1)])
def test_reduced_shape_rejects(args):
    with pytest.raises(ValidationError):
        reduced_shape(*args)


@pytest.mark.parametrize(
    "level, s, rows",
    [(4, 5, (4,) * 8 + (1, 1)), (4, 1, (4, 4, 1, 1)), (2, 2, (2, 2, 2, 2, 2))],
)
def test_quantum_shape(level, s, rows):
    assert quantum_shape(level, s).rows == rows


@pytest.mark.parametrize("level", range(1, 6))
@pytest.mark.parametrize("s", range(1, 9))
def test_quantum_shape_matches_rim_hooks(level, s):
    k, p = split_quantum_degree(level, s)
    assert s == (k - 1) * level + p and 1 <= p <= level
    built = rim_hook_shape(level, s)
    # the first row is the removed level*w1
    assert built.rows[0] == level
    assert Partition(built.rows[1:]) == quantum_shape(level, s)
    assert built.area == 2 * level + s * (level + 2)
    assert quantum_shape(level, s).area == 2 * level + s * (level + 2) - level


def test_quantum_shape_rejects_nonpositive():
    with pytest.raises(ValidationError):
        quantum_shape(3, 0)


def test_rim_hook_needs_a_strip_reaching_the_last_column():
    # one new box on (2,2) can only go to (3,1)
    with pytest.raises(ValidationError):
        add_rim_hook(Partition.of(2, 2), 2, 1)
    # a 2x2 block is not a border strip
    assert add_rim_hook(Partition.of(2, 2), 2, 4).rows == (2, 2, 2, 1, 1)


@pytest.mark.parametrize(
    "rows, expected",
    [((2, 1), (2, 1)), ((6, 6, 6, 6, 3, 3), (6, 6, 6, 4, 4, 4)), ((), ())],
)
def test_transpose(rows, expected):
    assert transpose(Partition(rows)).rows == expected


@pytest.mark.parametrize(
    "rows, expected",
    [((6, 6, 6, 6, 3, 3), (5, 5, 5, 5, 3, 3)), ((1, 1), ()), ((2, 2), (1, 1))],
)
def test_drop_last_column(rows, expected):
    assert drop_last_column(Partition(rows)).rows == expected


def test_drop_last_column_empty():
    with pytest.raises(ValidationError):
        drop_last_column(Partition())


@settings(max_examples=300)
@given(partitions)
def test_transpose_involution_and_column_drop(lam):
    assert transpose(transpose(lam)) == lam
    if lam.rows:
        t = transpose(lam)
        assert drop_last_column(lam) == transpose(Partition(t.rows[:-1]))
