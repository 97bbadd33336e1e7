"""Sylvester double sums for polynomials given by their (possibly multiple) roots.

``sylv_general`` is the main route: a signed sum over position subsets
``K`` of the roots of ``P`` and ``L`` of the roots of ``Q`` of

    V[(Q\\L) || (P\\K)] * V[L || K || U)  /  (V[P] * V[Q])

``sylv_classical`` is Sylvester's original formula, valid only for simple
roots, and ``symbolic_F`` / ``symbolic_S`` build the antisymmetrized
polynomial in indeterminates at tiny sizes.  Both serve as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import DomainError, SizeGuardError
from .exact import enumerate_subsets, subset_complement, subset_signature, to_scalar
from .polynomials import (
    MultiPoly,
    RootMultiset,
    UniPoly,
    exact_divide,
    pi_product,
    symbolic_vandermonde,
)
from .vandermonde import (
    GenVandermondeSpec,
    confluent_det,
    gen_vandermonde_det,
    gen_vandermonde_poly,
)

SYMBOLIC_MAX = 3


class DoubleSumIndex(NamedTuple):
    k: int
    l: int

    @property
    def j(self) -> int:
        return self.k + self.l


@dataclass(frozen=True)
class SplitPoly:
    """A polynomial ``lc * prod (U - x)**mu`` known through its roots."""

    lc: Fraction
    roots: RootMultiset

    def __init__(self, lc, roots: RootMultiset):
        lc = to_scalar(lc)
        if lc == 0:
            raise DomainError("leading coefficient must be nonzero")
        object.__setattr__(self, "lc", lc)
        object.__setattr__(self, "roots", roots)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def polynomial(self, var: str = "U") -> UniPoly:
        return self.roots.polynomial(var).scale(self.lc)


def _pick(items: Sequence, positions: Sequence[int]) -> list:
    return [items[i] for i in positions]


def sylv_classical(P_roots: Sequence, Q_roots: Sequence, k: int, l: int,
                   var: str = "U") -> UniPoly:
    """Sylvester's double sum for simple roots (the classical formula)."""
    P_roots = [to_scalar(x) for x in P_roots]
    Q_roots = [to_scalar(y) for y in Q_roots]
    if len(set(P_roots)) != len(P_roots) or len(set(Q_roots)) != len(Q_roots):
        raise DomainError("the classical double sum needs pairwise distinct roots")
    p, q = len(P_roots), len(Q_roots)
    total = UniPoly([], var)
    if k > p or l > q:
        return total
    for K in enumerate_subsets(p, k):
        Kx = _pick(P_roots, K)
        PK = _pick(P_roots, subset_complement(p, K))
        den_k = pi_product(Kx, PK)
        for L in enumerate_subsets(q, l):
            Ly = _pick(Q_roots, L)
            QL = _pick(Q_roots, subset_complement(q, L))
            coeff = pi_product(Kx, Ly) * pi_product(PK, QL) / (den_k * pi_product(Ly, QL))
            term = UniPoly([coeff], var)
            for z in Kx + Ly:
                term = term * UniPoly([-z, 1], var)
            total = total + term
    return total


def _subset_terms(P: RootMultiset, Q: RootMultiset, k: int, l: int):
    """Yield ``(sign * V[(Q\\L)||(P\\K)], columns of L||K)`` for every pair."""
    Pf, Qf = P.flattened, Q.flattened
    p, q = len(Pf), len(Qf)
    for K in enumerate_subsets(p, k):
        sK = subset_signature(p, K)
        PK = _pick(Pf, subset_complement(p, K))
        Kc = _pick(Pf, K)
        for L in enumerate_subsets(q, l):
            left = confluent_det(_pick(Qf, subset_complement(q, L)) + PK)
            if left:
                yield sK * subset_signature(q, L) * left, _pick(Qf, L) + Kc


def sylv_general(P: RootMultiset, Q: RootMultiset, k: int, l: int,
                 var: str = "U") -> UniPoly:
    """Double sum of the monic polynomials with root multisets ``P`` and ``Q``."""
    p, q = len(P), len(Q)
    total = UniPoly([], var)
    if k > p or l > q:
        return total
    for weight, cols in _subset_terms(P, Q, k, l):
        total = total + gen_vandermonde_poly(cols, var).scale(weight)
    return total.scale(1 / (confluent_det(P.flattened) * confluent_det(Q.flattened)))


def sylv_nonmonic(P: SplitPoly, Q: SplitPoly, k: int, l: int, var: str = "U") -> UniPoly:
    """Double sum with the ``lc(P)**(q-j) * lc(Q)**(p-j)`` normalization."""
    p, q = P.degree, Q.degree
    j = k + l
    if j > p:
        raise DomainError(f"double sum of index j={j} is not defined for deg P = {p}")
    factor = P.lc ** (q - j) * Q.lc ** (p - j)
    return sylv_general(P.roots, Q.roots, k, l, var).scale(factor)


def default_u_vars(n: int) -> tuple[str, ...]:
    return tuple(f"U{i}" for i in range(1, n + 1))


def msylv(P: RootMultiset, Q: RootMultiset, k: int, l: int,
          u_vars: Sequence[str] | None = None) -> MultiPoly:
    """Multi double sum over a block of ``p - k - l`` indeterminates."""
    p, q = len(P), len(Q)
    j = k + l
    if j > p:
        raise DomainError(f"multi double sum needs k + l <= p, got {j} > {p}")
    if u_vars is None:
        u_vars = default_u_vars(p - j)
    u_vars = tuple(u_vars)
    if len(u_vars) != p - j:
        raise ValueError(f"expected {p - j} indeterminates, got {len(u_vars)}")
    total = MultiPoly.constant(0, u_vars)
    if k > p or l > q:
        return total
    for weight, cols in _subset_terms(P, Q, k, l):
        total = total + gen_vandermonde_det(GenVandermondeSpec(cols, u_vars)) * weight
    total = total * (1 / (confluent_det(P.flattened) * confluent_det(Q.flattened)))
    return exact_divide(total, symbolic_vandermonde(u_vars))


# ---------------------------------------------------------------------------
# symbolic layer (tiny sizes only)


def x_names(p: int) -> tuple[str, ...]:
    return tuple(f"X{i}" for i in range(1, p + 1))


def y_names(q: int) -> tuple[str, ...]:
    return tuple(f"Y{i}" for i in range(1, q + 1))


@lru_cache(maxsize=None)
def _vander(names: tuple) -> MultiPoly:
    return symbolic_vandermonde(names)


@lru_cache(maxsize=None)
def symbolic_F(p: int, q: int, k: int, l: int, var: str = "U") -> MultiPoly:
    """Antisymmetrized sum in ``X1..Xp``, ``Y1..Yq`` and ``var``."""
    if p > SYMBOLIC_MAX or q > SYMBOLIC_MAX:
        raise SizeGuardError(f"symbolic double sums are limited to p, q <= {SYMBOLIC_MAX}")
    X, Y = x_names(p), y_names(q)
    total = MultiPoly.constant(0, X + Y + (var,))
    if k > p or l > q:
        return total
    for Xs in enumerate_subsets(p, k):
        sX = subset_signature(p, Xs)
        Xrest = _pick(X, subset_complement(p, Xs))
        for Ys in enumerate_subsets(q, l):
            sY = subset_signature(q, Ys)
            Yrest = _pick(Y, subset_complement(q, Ys))
            left = _vander(tuple(Yrest + Xrest))
            right = _vander(tuple(_pick(Y, Ys) + _pick(X, Xs)) + (var,))
            total = total + left * right * (sX * sY)
    return total


@lru_cache(maxsize=None)
def symbolic_S(p: int, q: int, k: int, l: int, var: str = "U") -> MultiPoly:
    """``symbolic_F / (V(X) V(Y))``; the division must be exact."""
    F = symbolic_F(p, q, k, l, var)
    return exact_divide(F, _vander(x_names(p)) * _vander(y_names(q)))


def substitute_roots(f: MultiPoly, P_roots: Sequence, Q_roots: Sequence,
                     var: str = "U") -> UniPoly:
    """Replace ``Xi`` by the ``i``-th root of P and ``Yi`` by that of Q."""
    values = dict(zip(x_names(len(P_roots)), P_roots))
    values.update(zip(y_names(len(Q_roots)), Q_roots))
    return f.subs(values).to_unipoly(var)
