import pytest

from combinatorics import AmbientSpace, lrs_coefficient
from infra import OracleError
from oracle import (
    TruncatedPolynomial,
    p_function,
    p_product_coefficient,
    p_product_expansion,
    schur_polynomial,
    schur_product_coefficient,
    schur_product_expansion,
)
from oracle.polynomials import _expand
from ring import basis, get_ring

from conftest import A22, A33, B3, B4


def test_schur_polynomials():
    s1 = schur_polynomial((1,), 2)
    assert s1.coefficient((1, 0)) == 1 and s1.coefficient((0, 1)) == 1
    assert s1.fillings() == 2
    s11 = schur_polynomial((1, 1), 2)
    assert s11.coefficient((1, 1)) == 1 and s11.fillings() == 1
    assert schur_polynomial((2, 1), 3).fillings() == 8
    assert schur_polynomial((1, 1, 1), 2).is_zero


def test_p_functions():
    p2 = p_function((2,), 2)
    assert [p2.coefficient(e) for e in ((2, 0), (1, 1), (0, 2))] == [1, 2, 1]
    assert p_function((), 3).coefficient((0, 0, 0)) == 1
    p21 = p_function((2, 1), 2)
    assert p21.coefficient((2, 1)) == 1


def test_truncated_polynomial_drops_high_degrees():
    x = TruncatedPolynomial.from_dict({(1, 0): 1, (0, 1): 1, (2, 0): 5}, 2, 1)
    assert x.coefficient((2, 0)) == 0
    assert (x * x).truncated(1).is_zero
    assert (x + x).coefficient((1, 0)) == 2
    assert x.leading_term() == ((1, 0), 1)


def test_products_keep_the_full_degree():
    s1 = schur_polynomial((1,), 2)
    square = s1 * s1
    assert square.degree == 2
    assert [square.coefficient(e) for e in ((2, 0), (1, 1), (0, 2))] == [1, 2, 1]
    assert (square - schur_polynomial((2,), 2)).coefficient((1, 1)) == 1


def test_schur_expansion():
    assert schur_product_expansion((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert schur_product_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert schur_product_coefficient((1,), (1,), (3,)) == 0


def test_p_expansion():
    assert p_product_expansion((2,), (2,)) == {(4,): 1, (3, 1): 2}
    assert p_product_coefficient((2,), (1,), (2, 1)) == 1
    assert p_product_coefficient((1,), (1,), (2,)) == 1


def test_expansion_rejects_non_symmetric_input():
    lopsided = TruncatedPolynomial.from_dict({(0, 1): 1}, 2, 1)
    with pytest.raises(OracleError):
        _expand(lopsided, 2, strict=False)


def test_zero_polynomial_has_no_leading_term():
    with pytest.raises(OracleError):
        TruncatedPolynomial.from_dict({}, 2, 3).leading_term()


@pytest.mark.parametrize('space', (A22, A33))
def test_lr_counts_match_schur_products(space):
    ring = get_ring(space)
    for lam in basis(space):
        for mu in basis(space):
            expected = schur_product_expansion(lam, mu)
            got = ring.product(lam, mu)
            assert got == {nu: c for nu, c in expected.items() if space.contains(nu)}


def _check_shifted(space, max_weight):
    ring = get_ring(space)
    for lam in basis(space):
        for mu in basis(space):
            if sum(lam) + sum(mu) > max_weight:
                continue
            expected = p_product_expansion(lam, mu)
            got = ring.product(lam, mu)
            assert got == {nu: c for nu, c in expected.items() if space.contains(nu)}


def test_lrs_counts_match_p_products():
    _check_shifted(B3, 5)


@pytest.mark.slow
def test_lrs_counts_match_p_products_in_rho_4():
    _check_shifted(B4, 8)


def test_standard_convention_matches_oracle():
    for lam, mu, nu in (((2,), (2,), (3, 1)), ((2,), (1,), (3,)), ((3, 1), (2,), (4, 2))):
        n = sum(nu)
        assert lrs_coefficient(lam, mu, nu, n, 'standard') == p_product_coefficient(lam, mu, nu)


def _strict_up_to(total):
    return [lam for lam in basis(AmbientSpace.type_b(total)) if sum(lam) <= total]


def _check_stable_constants(max_weight):
    strict = _strict_up_to(max_weight)
    compared = 0
    for lam in strict:
        for mu in strict:
            n = sum(lam) + sum(mu)
            if n > max_weight or n == 0:
                continue
            expected = p_product_expansion(lam, mu)
            for nu in strict:
                if sum(nu) != n:
                    continue
                assert lrs_coefficient(lam, mu, nu, n, 'standard') == expected.get(nu, 0), (lam, mu, nu)
                compared += 1
    return compared


def test_lrs_counts_match_p_products_for_all_strict_triples():
    assert _check_stable_constants(5) > 0


@pytest.mark.slow
def test_lrs_counts_match_p_products_up_to_weight_8():
    assert _check_stable_constants(8) > 0
