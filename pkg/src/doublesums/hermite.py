"""Hermite interpolation, univariate and for symmetric multivariate polynomials.

For a root multiset ``P`` of size ``p`` and ``0 <= k <= p`` the quotients
``V[K || U) / (V[P] V(U))`` over ``K`` a ``k``-subset of ``P`` form a basis of
the symmetric polynomials in ``p - k`` indeterminates ``U`` of degree at most
``k`` in each of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .double_sums import default_u_vars
from .errors import InvariantViolation
from .exact import SubsetSelection, selections, sign_power, subset_complement, to_scalar
from .polynomials import (
    DivisibilityError,
    MultiPoly,
    RootMultiset,
    UniPoly,
    exact_divide,
    symbolic_vandermonde,
)
from .vandermonde import (
    GenVandermondeSpec,
    confluent_det,
    gen_vandermonde_det,
    gen_vandermonde_poly,
    partial_derivation,
)


@dataclass(frozen=True)
class HermiteData:
    """Prescribed normalized derivatives ``Q^[j](x_i)`` at the nodes."""

    nodes: RootMultiset
    values: Mapping

    def __post_init__(self):
        expected = {(i, j) for i, (_, m) in enumerate(self.nodes.groups) for j in range(m)}
        if set(self.values) != expected:
            raise ValueError("values must cover each (node, derivative) pair exactly once")

    @classmethod
    def from_flat(cls, nodes: RootMultiset, values: Sequence) -> "HermiteData":
        """Values listed in flattened order ``q_{1,0}, ..., q_{m,mu_m-1}``."""
        keys = [(i, j) for i, (_, m) in enumerate(nodes.groups) for j in range(m)]
        if len(values) != len(keys):
            raise ValueError(f"expected {len(keys)} values, got {len(values)}")
        return cls(nodes, {key: to_scalar(v) for key, v in zip(keys, values)})


def hermite_interpolate(data: HermiteData, var: str = "U") -> UniPoly:
    """The unique polynomial of degree < p with the prescribed derivatives."""
    groups = data.nodes.groups
    flat = data.nodes.flattened
    vp = confluent_det(flat)
    total = UniPoly([], var)
    pos = 0
    for i, (_, mu) in enumerate(groups):
        tail = sum(m for _, m in groups[i:])
        for j in range(mu):
            others = flat[:pos] + flat[pos + 1:]
            coord = sign_power(tail - j - 1) * data.values[(i, j)]
            total = total + gen_vandermonde_poly(others, var).scale(coord)
            pos += 1
    return total.scale(1 / vp)


@dataclass(frozen=True)
class SymmetricBasisElement:
    subset: SubsetSelection
    poly: MultiPoly


def symmetric_basis(P: RootMultiset, k: int,
                    u_vars: Sequence[str] | None = None) -> list[SymmetricBasisElement]:
    p = len(P)
    if not 0 <= k <= p:
        raise ValueError(f"k={k} out of range for p={p}")
    u_vars = tuple(u_vars) if u_vars is not None else default_u_vars(p - k)
    if len(u_vars) != p - k:
        raise ValueError(f"expected {p - k} indeterminates, got {len(u_vars)}")
    flat = P.flattened
    denom = symbolic_vandermonde(u_vars) * confluent_det(flat)
    basis = []
    for sel in selections(p, k):
        num = gen_vandermonde_det(GenVandermondeSpec([flat[i] for i in sel.positions], u_vars))
        try:
            poly = exact_divide(num, denom)
        except DivisibilityError as exc:
            raise InvariantViolation(f"basis element for {sel.positions} is not a polynomial") from exc
        basis.append(SymmetricBasisElement(sel, poly))
    return basis


def _check_symmetric_bounded(g: MultiPoly, u_vars: Sequence[str], k: int) -> None:
    stray = set(g.used_variables()) - set(u_vars)
    if stray:
        raise ValueError(f"g depends on variables outside the block: {sorted(stray)}")
    if not g.is_symmetric(u_vars):
        raise ValueError("g is not symmetric in the block variables")
    for v in u_vars:
        if g.degree_in(v) > k:
            raise ValueError(f"g has degree {g.degree_in(v)} > {k} in {v}")


def dual_functional(g: MultiPoly, P: RootMultiset, rest: Sequence[int],
                    u_vars: Sequence[str]) -> Fraction:
    """``d^[P\\K](V(X) g(X))`` evaluated at the roots in positions ``rest``."""
    flat = P.flattened
    tmp = tuple(f"_h{t}" for t in range(len(rest)))
    f = g.rename(dict(zip(u_vars, tmp))) * symbolic_vandermonde(tmp)
    f = partial_derivation(f, [(name, flat[r][1]) for name, r in zip(tmp, rest)])
    return f.evaluate({name: flat[r][0] for name, r in zip(tmp, rest)})


def symmetric_coords(g: MultiPoly, P: RootMultiset, k: int,
                     u_vars: Sequence[str] | None = None) -> dict[SubsetSelection, Fraction]:
    """Coordinates of ``g`` in :func:`symmetric_basis` ``(P, k, u_vars)``."""
    p = len(P)
    if not 0 <= k <= p:
        raise ValueError(f"k={k} out of range for p={p}")
    u_vars = tuple(u_vars) if u_vars is not None else default_u_vars(p - k)
    if len(u_vars) != p - k:
        raise ValueError(f"expected {p - k} indeterminates, got {len(u_vars)}")
    _check_symmetric_bounded(g, u_vars, k)
    sign = sign_power(k * (p - k))
    return {
        sel: sign * sel.signature * dual_functional(g, P, subset_complement(p, sel.positions), u_vars)
        for sel in selections(p, k)
    }


def reconstruct(coords: Mapping[SubsetSelection, Fraction],
                basis: Sequence[SymmetricBasisElement]) -> MultiPoly:
    total = MultiPoly.constant(0)
    for element in basis:
        c = coords.get(element.subset, 0)
        if c:
            total = total + element.poly * c
    return total
