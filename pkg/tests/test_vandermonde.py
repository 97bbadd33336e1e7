from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from doublesums.polynomials import MultiPoly, RootMultiset, UniPoly, symbolic_vandermonde
from doublesums.vandermonde import (
    GenVandermondeSpec,
    confluent_det,
    gen_vandermonde_det,
    gen_vandermonde_poly,
    partial_derivation,
    vandermonde_det,
    vp_closed_form,
)
from oracle import U, confluent_matrix, frac, multi_to_sympy, uni_to_sympy

multiplicity_patterns = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(1, 3)), min_size=1, max_size=4,
    unique_by=lambda g: g[0],
).filter(lambda gs: sum(m for _, m in gs) <= 6).map(RootMultiset)


def test_classical_determinant():
    assert vandermonde_det([1, 2, 3]) == 2
    assert vandermonde_det([4, 1, 4]) == 0
    assert vandermonde_det([7]) == 1
    assert vandermonde_det([]) == 1


def test_confluent_examples():
    assert confluent_det([(1, 0), (1, 1)]) == 1
    assert confluent_det(RootMultiset([(1, 2), (3, 1)]).flattened) == 4
    assert gen_vandermonde_det(GenVandermondeSpec([(2, 0)], ["U"])) == MultiPoly.variable("U") - 2
    assert gen_vandermonde_poly([(2, 0)]) == UniPoly([-2, 1])


def test_closed_form_examples():
    assert vp_closed_form(RootMultiset([(5, 4)])) == 1
    assert vp_closed_form(RootMultiset([(1, 2), (3, 1)])) == 4
    assert vp_closed_form(RootMultiset.simple([1, 2, 4])) == 6


@given(multiplicity_patterns)
def test_confluent_matches_sympy_and_closed_form(P):
    expected = frac(confluent_matrix(P.flattened).det())
    assert confluent_det(P.flattened) == expected
    assert vp_closed_form(P) == expected


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 2)), max_size=3, unique=True),
       st.integers(1, 3))
def test_gen_vandermonde_with_variables_matches_sympy(derivated, u):
    names = [f"U{i}" for i in range(1, u + 1)]
    syms = [sympy.Symbol(n) for n in names]
    expected = sympy.expand(confluent_matrix(derivated, syms).det())
    got = gen_vandermonde_det(GenVandermondeSpec(derivated, names))
    assert multi_to_sympy(got) == expected


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 2)), max_size=4, unique=True))
def test_single_variable_poly_matches_sympy(derivated):
    expected = sympy.expand(confluent_matrix(derivated, [U]).det())
    assert uni_to_sympy(gen_vandermonde_poly(derivated)) == expected


def test_variables_only_is_symbolic_vandermonde():
    names = ("U1", "U2", "U3")
    assert gen_vandermonde_det(GenVandermondeSpec((), names)) == symbolic_vandermonde(names)


def test_partial_derivation():
    X = MultiPoly.variable("X")
    assert partial_derivation(X ** 2, [("X", 2)]) == MultiPoly.constant(1)
    f = X ** 3 + X
    assert partial_derivation(f, []) == f


def test_derivation_then_evaluation_recovers_confluent_det():
    P = RootMultiset([(1, 2), (3, 1)])
    names = ("A", "B", "C")
    f = partial_derivation(symbolic_vandermonde(names), [(n, j) for n, (_, j) in zip(names, P.flattened)])
    assert f.evaluate({n: x for n, (x, _) in zip(names, P.flattened)}) == 4
