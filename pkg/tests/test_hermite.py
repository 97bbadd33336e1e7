from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from doublesums.double_sums import default_u_vars
from doublesums.hermite import (
    HermiteData,
    hermite_interpolate,
    reconstruct,
    symmetric_basis,
    symmetric_coords,
)
from doublesums.polynomials import MultiPoly, RootMultiset, UniPoly


def test_taylor_case():
    data = HermiteData.from_flat(RootMultiset([(1, 2)]), [2, 3])
    assert hermite_interpolate(data) == UniPoly([-1, 3])


def test_lagrange_case():
    data = HermiteData.from_flat(RootMultiset.simple([0, 1]), [0, 1])
    assert hermite_interpolate(data) == UniPoly([0, 1])


def test_mixed_case_by_hand():
    # f = 2 + 3(U-1) + c(U-1)^2 with f(4) = 5 forces c = -2/3
    data = HermiteData.from_flat(RootMultiset([(1, 2), (4, 1)]), [2, 3, 5])
    assert hermite_interpolate(data) == UniPoly([Fraction(-5, 3), Fraction(13, 3), Fraction(-2, 3)])


def test_data_validation():
    with pytest.raises(ValueError):
        HermiteData.from_flat(RootMultiset([(1, 2)]), [1])
    with pytest.raises(ValueError):
        HermiteData(RootMultiset([(1, 2)]), {(0, 0): Fraction(1)})


patterns = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(1, 3)), min_size=1, max_size=4,
    unique_by=lambda g: g[0],
).filter(lambda gs: sum(m for _, m in gs) <= 7).map(RootMultiset)


@given(patterns, st.data())
def test_round_trip(nodes, data):
    p = len(nodes)
    coeffs = data.draw(st.lists(st.fractions(-9, 9, max_denominator=3), max_size=p))
    f = UniPoly(coeffs)
    values = [f.derivative(j)(x) for x, j in nodes.flattened]
    assert hermite_interpolate(HermiteData.from_flat(nodes, values)) == f


def test_basis_trivial():
    basis = symmetric_basis(RootMultiset.simple([2]), 0)
    assert len(basis) == 1
    coords = symmetric_coords(MultiPoly.constant(1, ("U1",)), RootMultiset.simple([2]), 0)
    assert list(coords.values()) == [1]


def test_coords_of_constant_one_at_k0():
    P = RootMultiset([(0, 1)])
    coords = symmetric_coords(MultiPoly.constant(1), P, 1, ())
    assert list(coords.values()) == [1]


@pytest.mark.parametrize("groups", [[(1, 2)], [(0, 1), (2, 1), (3, 1)], [(1, 2), (-1, 2)], [(2, 3)]])
def test_multivariate_round_trip(groups):
    P = RootMultiset(groups)
    p = len(P)
    for k in range(p + 1):
        u_vars = default_u_vars(p - k)
        basis = symmetric_basis(P, k, u_vars)
        assert len(basis) == comb(p, k)
        g = MultiPoly.constant(3, u_vars)
        for v in u_vars:
            g = g * (MultiPoly.variable(v) ** k - 2)
        assert reconstruct(symmetric_coords(g, P, k, u_vars), basis) == g


def test_coords_reject_bad_input():
    P = RootMultiset.simple([0, 1, 2])
    U1, U2 = MultiPoly.variable("U1"), MultiPoly.variable("U2")
    with pytest.raises(ValueError):
        symmetric_coords(U1 * U1 * U2, P, 1, ("U1", "U2"))
    with pytest.raises(ValueError):
        symmetric_coords(U1 ** 2 + U2 ** 2, P, 1, ("U1", "U2"))
    with pytest.raises(ValueError):
        symmetric_coords(U1 + U2 + MultiPoly.variable("Z"), P, 1, ("U1", "U2"))
