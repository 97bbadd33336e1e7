import pytest
from hypothesis import given
from hypothesis import strategies as st

from doublesums.errors import DomainError
from doublesums.polynomials import UniPoly
from doublesums import subresultants
from doublesums.subresultants import (
    remainder_sequence,
    sres_det,
    sres_prs,
    sylvester_habicht_matrix,
)
from oracle import signed_subresultant, uni_to_sympy

P0, Q0 = UniPoly([2, -3, 1]), UniPoly([-3, 1])


def test_worked_example():
    assert sres_det(P0, Q0, 1) == Q0
    assert sres_det(P0, Q0, 0) == UniPoly([-2])
    assert sres_prs(P0, Q0) == {1: Q0, 0: UniPoly([-2])}


# P = 3U^5 + U^3 - 2U^2 + 1, Q = U^3 + 2U - 1; values frozen from a sympy determinant
FROZEN = {
    4: UniPoly([-1, 2, 0, 1]),
    3: UniPoly([1, -2, 0, -1]),
    2: UniPoly([-4, 10, 1]),
    1: UniPoly([-41, 106]),
    0: UniPoly([-197]),
}


def test_frozen_sequence():
    P, Q = UniPoly([1, 0, -2, 1, 0, 3]), UniPoly([-1, 2, 0, 1])
    assert {j: sres_det(P, Q, j) for j in range(5)} == FROZEN
    assert sres_prs(P, Q) == FROZEN


def test_gap_indices_vanish():
    P, Q = UniPoly([1, 0, 0, 0, 1]), UniPoly([2, 1])
    assert sres_det(P, Q, 2).is_zero()
    assert sres_det(P, Q, 3) == Q


def test_divisor_gives_zero_tail():
    Q = UniPoly([-1, 0, 1])
    P = Q * UniPoly([5, 1, 2])
    for j in range(Q.degree - 1):
        assert sres_det(P, Q, j).is_zero()


def test_matrix_layout():
    # rows P, Q, U*Q; columns from U^2 down to 1
    M = sylvester_habicht_matrix(P0, Q0, 0)
    assert M.to_rows() == [[1, -3, 2], [0, 1, -3], [1, -3, 0]]


def test_row_order_toggle_is_pinned():
    assert subresultants.REVERSE_Q_BLOCK is False


def test_domain_errors():
    with pytest.raises(DomainError):
        sres_det(Q0, P0, 0)
    with pytest.raises(DomainError):
        sres_prs(P0, P0)
    with pytest.raises(DomainError):
        sres_det(P0, Q0, 2)
    with pytest.raises(DomainError):
        sres_det(P0, UniPoly([]), 0)


def test_remainder_sequence():
    assert remainder_sequence(P0, Q0) == [P0, Q0, UniPoly([-2])]
    Q = UniPoly([-1, 1])
    assert remainder_sequence(Q * Q, Q) == [Q * Q, Q]
    with pytest.raises(ZeroDivisionError):
        remainder_sequence(P0, UniPoly([]))


int_coeffs = st.integers(-5, 5)


@st.composite
def int_pairs(draw, max_p=5):
    p = draw(st.integers(1, max_p))
    q = draw(st.integers(0, p - 1))
    P = UniPoly(draw(st.lists(int_coeffs, min_size=p, max_size=p)) + [draw(st.sampled_from([-2, -1, 1, 3]))])
    Q = UniPoly(draw(st.lists(int_coeffs, min_size=q, max_size=q)) + [draw(st.sampled_from([-3, -1, 1, 2]))])
    return P, Q


@given(int_pairs())
def test_det_matches_sympy_determinant_polynomial(pair):
    P, Q = pair
    for j in range(Q.degree + 1):
        if j < P.degree - 1:
            assert uni_to_sympy(sres_det(P, Q, j)) == signed_subresultant(P, Q, j)


@given(int_pairs(max_p=7))
def test_det_agrees_with_recursion(pair):
    P, Q = pair
    prs = sres_prs(P, Q)
    assert {j: sres_det(P, Q, j) for j in range(P.degree)} == prs
