import itertools

from hypothesis import given, strategies as st
import pytest

from combinatorics import (
    AmbientSpace,
    MarkedSymbol,
    MarkedTableau,
    SkewShape,
    contains,
    enumerate_hole_strips,
    enumerate_lrs,
    hat_word,
    is_lrs_tableau,
    is_lrs_word,
    lrs_coefficient,
    nw_holed_tableaux,
    path_persistence_violations,
    reverse_shifted_slide,
    se_holed_tableaux,
    shifted_slide,
    strip_exponent,
    trace_nw_to_se,
    trace_se_to_nw,
    transfer_nw_to_se,
)
from infra import ShapeError, SlideError, TransferError
from ring import basis

from conftest import B3, B4


def w(*raw):
    return tuple(MarkedSymbol.parse(s) for s in raw)


def test_marked_order():
    assert MarkedSymbol(1, True) < MarkedSymbol(1) < MarkedSymbol(2, True) < MarkedSymbol(2)
    assert MarkedSymbol.parse("3'") == MarkedSymbol(3, True)
    assert str(MarkedSymbol(3, True)) == "3'"
    assert str(MarkedSymbol(2)) == '2'


@pytest.mark.parametrize('raw', ("0", "x'", "''", ""))
def test_marked_symbol_parse_errors(raw):
    with pytest.raises(ShapeError):
        MarkedSymbol.parse(raw)


def test_hat_word():
    assert hat_word(w('1', "2'")) == w('2', "2'")
    assert hat_word(()) == ()


@pytest.mark.parametrize(
    'raw, expected',
    (
        ((), True),
        (('1',), True),
        (('1', '1'), True),
        (('1', '1', '2'), True),
        (("1'", '1'), True),
        (("1'",), False),
        (('1', "1'"), False),
        (('2',), False),
        (('1', '2'), False),
    ),
)
def test_is_lrs_word(raw, expected):
    assert is_lrs_word(w(*raw)) == expected


@given(st.lists(st.sampled_from(["1'", '1', "2'", '2', "3'", '3']), max_size=6))
def test_lrs_words_start_with_one(raw):
    word = w(*raw)
    if is_lrs_word(word) and word:
        assert word[0].value == 1


def test_marked_tableau_rules():
    MarkedTableau(SkewShape((2,), shifted=True), (w('1', '1'),))
    with pytest.raises(ShapeError, match='Row'):
        MarkedTableau(SkewShape((2,), shifted=True), (w("1'", "1'"),))
    with pytest.raises(ShapeError, match='Column'):
        MarkedTableau(SkewShape((3, 1), (1,), shifted=True), (w('1', '2'), w('1')))
    with pytest.raises(ShapeError):
        MarkedTableau(SkewShape((2,)), (w('1', '1'),))


def test_enumerated_lrs_tableaux():
    # cells (1,3) and (2,2): words 1 1 and 1' 1
    tableaux = enumerate_lrs(SkewShape((3, 1), (2,), shifted=True), (2,))
    assert sorted(tuple(map(str, t.word())) for t in tableaux) == [("1", "1"), ("1'", "1")]
    assert all(is_lrs_tableau(t) for t in tableaux)


@pytest.mark.parametrize('convention', ('paper', 'standard'))
def test_known_constants(convention):
    assert lrs_coefficient((5, 3, 1), (5, 2), (6, 5, 4, 1), 7, convention) == 4
    assert lrs_coefficient((2,), (2,), (3, 1), 3, convention) == 2
    assert lrs_coefficient((1,), (1,), (2,), 2, convention) == 1
    assert lrs_coefficient((1,), (2,), (2, 1), 3, convention) == 1


def test_constant_rejects_non_strict_index():
    with pytest.raises(ShapeError, match='lambda'):
        lrs_coefficient((3, 3), (1,), (4, 3), 4)


def _marked(shape, *rows):
    return MarkedTableau(shape, tuple(w(*row) for row in rows))


def test_shifted_slide_horizontal():
    tableau = _marked(SkewShape((3,), (1,), shifted=True), ('1', '1'))
    trace = shifted_slide(tableau, (1, 1))
    assert trace.moves == ('horizontal', 'horizontal')
    assert trace.result == _marked(SkewShape((2,), shifted=True), ('1', '1'))


def test_special_slide_round_trip():
    tableau = _marked(SkewShape((2, 1), (1,), shifted=True), ("1'",), ('1',))
    trace = shifted_slide(tableau, (1, 1))
    assert trace.path == ((1, 1), (2, 2))
    assert trace.moves == ('special',)
    assert trace.result == _marked(SkewShape((2,), shifted=True), ('1', '1'))

    back = reverse_shifted_slide(trace.result, (2, 2))
    assert back.moves == ('special',)
    assert back.result == tableau


def test_shifted_slide_needs_inner_corner():
    tableau = _marked(SkewShape((3,), (1,), shifted=True), ('1', '1'))
    with pytest.raises(SlideError):
        shifted_slide(tableau, (1, 2))


def test_hole_strip_marking_counts():
    assert len(enumerate_hole_strips((), 2, 3, 'NW')) == 1
    assert len(enumerate_hole_strips((1,), 1, 3, 'NW')) == 1
    strips = enumerate_hole_strips((2,), 2, 3, 'NW')
    assert [s.partition for s in strips] == [(3, 1), (3, 1)]
    assert len(strips) == 1 << strip_exponent((3, 1), (2,))


def test_hole_strip_count_is_power_of_two():
    for side in ('NW', 'SE'):
        for lam in basis(B4):
            for p in range(1, 5):
                strips = enumerate_hole_strips(lam, p, 4, side)
                for grown in {s.partition for s in strips}:
                    count = sum(1 for s in strips if s.partition == grown)
                    assert count == 1 << strip_exponent(grown, lam)


def test_transfer_rejects_wrong_side():
    holed = se_holed_tableaux((), (), (1,), 1, 2)[0]
    with pytest.raises(TransferError):
        trace_nw_to_se(holed)


def test_path_persistence_violations():
    previous = ((1, 3), (2, 3))
    assert path_persistence_violations(previous, ((1, 1), (1, 2))) == []
    assert path_persistence_violations(previous, ((1, 2), (1, 4))) == [('west', (1, 2), (1, 4))]


def _check_holed_transfers(n):
    space_basis = basis(B3 if n == 3 else B4)
    checked = 0
    for p in range(1, n + 1):
        for lam in space_basis:
            for mu in space_basis:
                for nu in space_basis:
                    if sum(nu) != sum(lam) + sum(mu) + p:
                        continue
                    nw = nw_holed_tableaux(lam, mu, nu, p, n)
                    se = set(se_holed_tableaux(lam, mu, nu, p, n))
                    assert len(nw) == len(se)
                    images = set()
                    for holed in nw:
                        forward = trace_nw_to_se(holed)
                        assert forward.holed in se
                        assert trace_se_to_nw(forward.holed).holed == holed
                        for earlier, later in zip(forward.traces, forward.traces[1:]):
                            assert path_persistence_violations(earlier.path, later.path) == []
                        images.add(forward.holed)
                        checked += 1
                    assert images == se
    return checked


def test_holed_transfers_in_rho_3():
    assert _check_holed_transfers(3) > 0


@pytest.mark.slow
def test_holed_transfers_in_rho_4():
    assert _check_holed_transfers(4) > 0


def test_transfer_output_is_se_holed():
    nw = nw_holed_tableaux((), (), (1,), 1, 3)
    assert len(nw) == 1
    for holed in nw:
        result = transfer_nw_to_se(holed)
        assert result.side == 'SE'
        assert len(result.holes) == len(holed.holes)


def _lrs_tableaux_within(n):
    classes = basis(AmbientSpace.type_b(n))
    for outer in classes:
        for inner in classes:
            if not contains(outer, inner):
                continue
            shape = SkewShape(outer, inner, shifted=True)
            for content in classes:
                if sum(content) == shape.size:
                    yield from enumerate_lrs(shape, content)


def test_shifted_slides_preserve_lrs_property():
    forward = backward = 0
    for tableau in _lrs_tableaux_within(4):
        for hole in tableau.shape.inner_corners():
            trace = shifted_slide(tableau, hole)
            assert is_lrs_tableau(trace.result)
            assert reverse_shifted_slide(trace.result, trace.end).result == tableau
            forward += 1
        for hole in tableau.shape.outer_corners():
            assert is_lrs_tableau(reverse_shifted_slide(tableau, hole).result)
            backward += 1
    assert forward > 0 and backward > 0


def test_conventions_agree_in_rho_4():
    classes = basis(B4)
    for lam in classes:
        for mu in classes:
            for nu in classes:
                if sum(nu) != sum(lam) + sum(mu):
                    continue
                assert (lrs_coefficient(lam, mu, nu, 4, 'paper')
                        == lrs_coefficient(lam, mu, nu, 4, 'standard')), (lam, mu, nu)


def _follows_nw_rules(holes):
    # marked above a hole, unmarked right of a hole, southwest-most unmarked
    marks = dict(holes)
    for (r, c), marked in holes:
        if (r + 1, c) in marks and not marked:
            return False
        if (r, c - 1) in marks and marked:
            return False
    southwest = max(marks, key=lambda cell: (cell[0], -cell[1]))
    return not marks[southwest]


def test_nw_markings_match_explicit_rules():
    for mu in basis(B4):
        for p in range(1, 5):
            strips = enumerate_hole_strips(mu, p, 4, 'NW')
            for grown in {s.partition for s in strips}:
                found = {s.holes for s in strips if s.partition == grown}
                cells = [cell for cell, _ in next(iter(found))]
                expected = set()
                for marks in itertools.product((False, True), repeat=len(cells)):
                    holes = tuple(zip(cells, marks))
                    if _follows_nw_rules(holes):
                        expected.add(holes)
                assert found == expected, (mu, grown)
