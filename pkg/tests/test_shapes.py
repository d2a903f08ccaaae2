from hypothesis import given
import pytest

from combinatorics import (
    AmbientSpace,
    SkewShape,
    dual_partition,
    format_partition,
    horizontal_strip_successors,
    is_horizontal_strip,
    make_strict,
    parse_partition,
    shifted_cells,
    staircase_complement,
    strip_exponent,
)
from infra import ShapeError

from conftest import A22, B2, B3, box_partitions, staircase_partitions


@pytest.mark.parametrize(
    'raw, expected',
    (
        ('5,3,1', (5, 3, 1)),
        (' 4 , 4 ', (4, 4)),
        ('2,0', (2,)),
        ('', ()),
    ),
)
def test_parse_partition(raw, expected):
    assert parse_partition(raw) == expected


def test_parse_partition_names_bad_token():
    with pytest.raises(ShapeError) as info:
        parse_partition('3,x,1')
    assert info.value.token == 'x'


@pytest.mark.parametrize('raw', ('1,2', '3,-1', '0,1'))
def test_parse_partition_rejects_non_partitions(raw):
    with pytest.raises(ShapeError):
        parse_partition(raw)


def test_make_strict_rejects_repeats():
    with pytest.raises(ShapeError, match='strict'):
        make_strict((3, 3))


@pytest.mark.parametrize(
    'raw, label',
    (
        ('A:k=3,m=5', 'A:k=3,m=5'),
        ('B:n=7', 'B:n=7'),
        (' C : n = 4 ', 'C:n=4'),
        ('D:n=8', 'D:n=8'),
    ),
)
def test_space_labels(raw, label):
    assert AmbientSpace.parse(raw).label == label


@pytest.mark.parametrize('raw', ('A:k=0,m=2', 'A:n=3', 'B:k=2,m=2', 'B:n=0', 'D:n=1', 'X:n=3', 'B:n=2,n=3'))
def test_space_parse_errors(raw):
    with pytest.raises(ShapeError):
        AmbientSpace.parse(raw)


def test_type_d_normalizes_to_b():
    d = AmbientSpace.parse('D:n=3')
    assert d.normalized() == B2
    assert d.top == (2, 1)
    assert d.contains((2, 1)) and not d.contains((3,))


def test_space_contains():
    assert A22.contains((2, 2)) and not A22.contains((3,)) and not A22.contains((1, 1, 1))
    assert B3.contains((3, 1)) and not B3.contains((2, 2)) and not B3.contains((4,))


def test_require_names_the_index():
    with pytest.raises(ShapeError, match='lambda'):
        AmbientSpace.parse('B:n=4').require((3, 3), 'lambda')


def test_dual_partition():
    assert dual_partition((2, 1), 2, 2) == (1,)
    assert dual_partition((), 3, 5) == (5, 5, 5)
    assert dual_partition((5, 5, 5), 3, 5) == ()


def test_staircase_complement():
    assert staircase_complement((5, 3, 1), 7) == (7, 6, 4, 2)
    assert staircase_complement((6, 5, 4, 1), 7) == (7, 3, 2)
    assert staircase_complement((), 3) == (3, 2, 1)


@given(box_partitions(3, 4))
def test_rectangle_dual_is_an_involution(lam):
    assert dual_partition(dual_partition(lam, 3, 4), 3, 4) == lam


@given(staircase_partitions(6))
def test_staircase_dual_is_an_involution(lam):
    dual = staircase_complement(lam, 6)
    assert staircase_complement(dual, 6) == lam
    assert sum(lam) + sum(dual) == 21


def test_horizontal_strip():
    assert is_horizontal_strip((2, 1), (1,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert not is_horizontal_strip((1,), (2,))


def test_young_corners():
    shape = SkewShape((2, 1), (1,))
    assert shape.inner_corners() == [(1, 1)]
    assert SkewShape((2, 1)).outer_corners() == [(1, 3), (2, 2), (3, 1)]


def test_shifted_reading_order():
    shape = SkewShape((3, 1), shifted=True)
    assert shape.reading_order() == ((1, 3), (1, 2), (1, 1), (2, 2))
    assert shape.is_diagonal((2, 2))
    assert SkewShape((2,), shifted=True).outer_corners() == [(1, 3), (2, 2)]


def test_shifted_shape_needs_strict_partitions():
    with pytest.raises(ShapeError):
        SkewShape((2, 2), shifted=True)


def test_skew_shape_needs_containment():
    with pytest.raises(ShapeError):
        SkewShape((1,), (2,))


def test_successors_in_rectangle():
    assert horizontal_strip_successors((1,), 1, A22) == [(2,), (1, 1)]
    assert horizontal_strip_successors((2, 2), 1, A22) == []
    assert horizontal_strip_successors((1,), 0, A22) == [(1,)]


def test_successors_in_staircase():
    assert horizontal_strip_successors((1,), 1, B2) == [(2,)]
    assert horizontal_strip_successors((2,), 1, B3) == [(3,), (2, 1)]
    assert horizontal_strip_successors((2,), 2, B3) == [(3, 1)]


@pytest.mark.parametrize(
    'outer, inner, expected',
    (
        ((3, 1), (2,), 1),
        ((3,), (2,), 0),
        ((2, 1), (2,), 0),
        ((2,), (), 0),
        ((4, 1), (2,), 1),
        ((2,), (2,), 0),
    ),
)
def test_strip_exponent(outer, inner, expected):
    assert strip_exponent(outer, inner) == expected


def test_shifted_cells_of_skew_shape():
    assert sorted(shifted_cells((3, 1), (2,))) == [(1, 3), (2, 2)]


def test_format_partition_round_trips():
    assert parse_partition(format_partition((6, 5, 4, 1))) == (6, 5, 4, 1)
