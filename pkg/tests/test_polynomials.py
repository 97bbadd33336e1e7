from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from doublesums.errors import DivisibilityError
from doublesums.polynomials import (
    MultiPoly,
    RootMultiset,
    UniPoly,
    coefficient_of,
    euclid_divrem,
    exact_divide,
    format_unipoly,
    from_roots,
    normalized_derivative,
    pi_product,
    symbolic_vandermonde,
)
from oracle import U, multi_to_sympy, sympy_to_uni, uni_to_sympy

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
unipolys = st.lists(rationals, max_size=7).map(UniPoly)
nonzero_unipolys = unipolys.filter(lambda f: not f.is_zero())
root_lists = st.lists(st.integers(-6, 6), max_size=6)

X, Y = MultiPoly.variable("X"), MultiPoly.variable("Y")


def test_from_roots_examples():
    assert from_roots(RootMultiset([(1, 2)])) == UniPoly([1, -2, 1])
    assert from_roots(RootMultiset()) == UniPoly([1])
    assert from_roots(RootMultiset.simple([1, 2])) == UniPoly([2, -3, 1])


@given(root_lists, root_lists)
def test_from_roots_multiplicative(a, b):
    lhs = from_roots(RootMultiset.from_list(a + b))
    assert lhs == from_roots(RootMultiset.from_list(a)) * from_roots(RootMultiset.from_list(b))


@given(root_lists)
def test_from_roots_matches_sympy(roots):
    expected = sympy_to_uni(sympy.prod([U - r for r in roots]))
    assert from_roots(RootMultiset.from_list(roots)) == expected


def test_derivative_examples():
    assert UniPoly([0, 0, 0, 1]).derivative(2) == UniPoly([0, 3])
    f = UniPoly([4, 0, -1, 2])
    assert f.derivative(0) == f
    assert normalized_derivative(X ** 2, "X", 2) == MultiPoly.constant(1)


@given(unipolys, st.integers(0, 4), st.integers(0, 4))
def test_normalized_derivative_composition(f, i, j):
    # (f^[i])^[j] = binom(i+j, i) f^[i+j]
    from math import comb
    assert f.derivative(i).derivative(j) == f.derivative(i + j).scale(comb(i + j, i))


@given(unipolys, st.integers(0, 5))
def test_derivative_matches_sympy(f, i):
    expected = sympy.diff(uni_to_sympy(f), U, i) / sympy.factorial(i)
    assert uni_to_sympy(f.derivative(i)) == sympy.expand(expected)


def test_divrem_examples():
    P, Q = UniPoly([2, -3, 1]), UniPoly([-3, 1])
    assert euclid_divrem(P, Q) == (UniPoly([0, 1]), UniPoly([2]))
    assert euclid_divrem(P, P) == (UniPoly([1]), UniPoly([]))
    assert euclid_divrem(Q, P) == (UniPoly([]), Q)
    with pytest.raises(ZeroDivisionError):
        euclid_divrem(P, UniPoly([]))


@given(unipolys, nonzero_unipolys)
def test_divrem_reconstructs(P, Q):
    C, R = euclid_divrem(P, Q)
    assert C * Q + R == P
    assert R.is_zero() or R.degree < Q.degree


def test_pi_product():
    assert pi_product([1, 2], [3]) == 2
    assert pi_product([], [1, 2]) == 1
    assert pi_product([5], [5]) == 0


@given(st.lists(st.integers(-5, 5), max_size=4), st.lists(st.integers(-5, 5), max_size=4))
def test_pi_product_evaluates_root_polynomial(A, B):
    Q = from_roots(RootMultiset.from_list(B))
    expected = Fraction(1)
    for a in A:
        expected *= Q(a)
    assert pi_product(A, B) == expected


def test_formatting():
    assert format_unipoly(UniPoly([3, -1])) == "-U + 3"
    assert format_unipoly(UniPoly([-1, 3])) == "3U - 1"
    assert format_unipoly(UniPoly([-3, 1])) == "U - 3"
    assert format_unipoly(UniPoly([-2])) == "-2"
    assert format_unipoly(UniPoly([])) == "0"
    assert format_unipoly(UniPoly([0, 0, Fraction(1, 2)])) == "(1/2)U^2"
    assert format_unipoly(UniPoly([1, 0, -1])) == "-U^2 + 1"


def test_root_multiset():
    P = RootMultiset.from_list([1, 3, 1])
    assert P.groups == ((1, 2), (3, 1))
    assert P.flattened == ((1, 0), (1, 1), (3, 0))
    assert len(P) == 3
    assert str(P) == "1^2,3"
    with pytest.raises(ValueError):
        RootMultiset([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        RootMultiset([(1, 0)])


def test_coefficient_of():
    f = X ** 2 * Y + X * Y
    assert coefficient_of(f, {"X": 2}) == Y
    assert coefficient_of(f, {"X": 5}).is_zero()
    U1, U2 = MultiPoly.variable("U1"), MultiPoly.variable("U2")
    assert coefficient_of(U2 - U1, {"U2": 1}) == MultiPoly.constant(1)


def test_exact_divide():
    assert exact_divide(X ** 2 - Y ** 2, X - Y) == X + Y
    assert exact_divide(MultiPoly.constant(0), X - Y).is_zero()
    with pytest.raises(DivisibilityError):
        exact_divide(X ** 2 + Y, X - Y)


small_multi = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-4, 4)), max_size=5
).map(lambda ts: sum((X ** a * Y ** b * c for a, b, c in ts), MultiPoly.constant(0)))


@given(small_multi, small_multi.filter(lambda g: not g.is_zero()))
def test_exact_divide_inverts_product(f, g):
    assert exact_divide(f * g, g) == f


@given(small_multi, small_multi)
def test_multipoly_product_matches_sympy(f, g):
    assert multi_to_sympy(f * g) == sympy.expand(multi_to_sympy(f) * multi_to_sympy(g))


def test_multipoly_substitution_and_symmetry():
    f = X ** 2 * Y + X * Y ** 2
    assert f.is_symmetric(["X", "Y"])
    assert not (X ** 2 * Y).is_symmetric(["X", "Y"])
    assert f.evaluate({"X": 2, "Y": 3}) == 30
    assert f.subs({"Y": X}) == X ** 3 * 2
    assert f.degree_in("X") == 2


def test_symbolic_vandermonde():
    names = ("A", "B", "C")
    V = symbolic_vandermonde(names)
    assert V.evaluate({"A": 1, "B": 2, "C": 3}) == 2
    assert V.permute({"A": "B", "B": "A"}) == -V
