"""Classical and confluent (generalized) Vandermonde determinants.

A derivated column for the pair ``(x, j)`` holds ``binom(r, j) * x**(r-j)`` in
row ``r`` (zero for ``r < j``), the normalized ``j``-th derivative of the
Vandermonde vector ``(1, x, ..., x**(n-1))``.  A variable column for ``U``
holds ``U**r``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import binom, det, permutation_sign, sign_power, to_scalar
from .polynomials import MultiPoly, RootMultiset, UniPoly


def vandermonde_vector(x, n: int, j: int = 0) -> list[Fraction]:
    x = to_scalar(x)
    return [binom(r, j) * x ** (r - j) if r >= j else Fraction(0) for r in range(n)]


def vandermonde_matrix(points: Sequence) -> list[list[Fraction]]:
    n = len(points)
    cols = [vandermonde_vector(x, n) for x in points]
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def vandermonde_det(points: Sequence) -> Fraction:
    return det(vandermonde_matrix(points))


@dataclass(frozen=True)
class GenVandermondeSpec:
    """Columns of ``V[L || K || U)``: derivated pairs first, then variables."""

    derivated: tuple = ()
    variables: tuple = ()

    def __init__(self, derivated: Iterable = (), variables: Iterable[str] = ()):
        object.__setattr__(
            self, "derivated", tuple((to_scalar(x), int(j)) for x, j in derivated)
        )
        object.__setattr__(self, "variables", tuple(variables))

    @property
    def dimension(self) -> int:
        return len(self.derivated) + len(self.variables)


@lru_cache(maxsize=65536)
def _numeric_minor(derivated: tuple, rows: tuple, n: int) -> Fraction:
    cols = [vandermonde_vector(x, n, j) for x, j in derivated]
    return det([[col[r] for col in cols] for r in rows])


def confluent_det(derivated: Sequence) -> Fraction:
    """``V[...]`` for a list of ``(point, derivative-index)`` columns."""
    derivated = tuple((to_scalar(x), int(j)) for x, j in derivated)
    n = len(derivated)
    return _numeric_minor(derivated, tuple(range(n)), n)


def _alternant(rows: Sequence[int], variables: Sequence[str]) -> dict:
    """Terms of ``det[U_c ** rows[t]]`` with ``t`` indexing rows, ``c`` columns."""
    u = len(variables)
    terms = {}
    for perm in itertools.permutations(range(u)):
        e = [0] * u
        for t, c in enumerate(perm):
            e[c] = rows[t]
        terms[tuple(e)] = Fraction(permutation_sign(perm))
    return terms


def gen_vandermonde_det(spec: GenVandermondeSpec) -> MultiPoly:
    """Determinant of the generalized Vandermonde matrix as a polynomial.

    Laplace expansion along the variable columns: every choice of ``u`` rows
    for them pairs an alternant in the variables with a numeric minor.
    """
    n = spec.dimension
    d = len(spec.derivated)
    u = len(spec.variables)
    if u == 0:
        return MultiPoly.constant(confluent_det(spec.derivated))
    var_cols_sum = sum(range(d, n))
    total: dict = {}
    for rows in itertools.combinations(range(n), u):
        rest = tuple(r for r in range(n) if r not in rows)
        minor = _numeric_minor(spec.derivated, rest, n)
        if not minor:
            continue
        sign = sign_power(sum(rows) + var_cols_sum)
        for mono, c in _alternant(rows, spec.variables).items():
            total[mono] = total.get(mono, 0) + sign * c * minor
    return MultiPoly(spec.variables, total)


def gen_vandermonde_poly(derivated: Sequence, var: str = "U") -> UniPoly:
    """``V[... || U)`` with a single variable column, as a UniPoly."""
    derivated = tuple((to_scalar(x), int(j)) for x, j in derivated)
    n = len(derivated) + 1
    coeffs = []
    for r in range(n):
        rest = tuple(i for i in range(n) if i != r)
        coeffs.append(sign_power(r + n - 1) * _numeric_minor(derivated, rest, n))
    return UniPoly(coeffs, var)


def vp_closed_form(roots: RootMultiset) -> Fraction:
    """``prod_{i<j} (x_j - x_i) ** (mu_i * mu_j)`` over the distinct roots."""
    result = Fraction(1)
    groups = roots.groups
    for b in range(len(groups)):
        for a in range(b):
            (xa, ma), (xb, mb) = groups[a], groups[b]
            result *= (xb - xa) ** (ma * mb)
    return result


def partial_derivation(f: MultiPoly, schedule: Sequence[tuple[str, int]]) -> MultiPoly:
    """Apply ``(1/j!) d^j / d var^j`` for each ``(var, j)`` in turn."""
    for var, j in schedule:
        f = f.derivative(var, j)
    return f
