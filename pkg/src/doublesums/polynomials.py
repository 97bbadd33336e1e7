"""Univariate and sparse multivariate polynomials over the rationals."""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DivisibilityError, DomainError
from .exact import binom, to_scalar

#: degree of the zero polynomial
NEG_INF = -math.inf


def _format_coefficient(c: Fraction) -> str:
    return str(c)


class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "U"):
        cs = [to_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def constant(cls, c, var: str = "U") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "U") -> "UniPoly":
        return cls([0] * degree + [c], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return NotImplemented

    def _result_var(self, other: "UniPoly") -> str:
        if self.var == other.var or other.degree <= 0:
            return self.var
        if self.degree <= 0:
            return other.var
        raise ValueError(f"mixing polynomials in {self.var} and {other.var}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        var = self._result_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(i) + other.coefficient(i) for i in range(n)], var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        var = self._result_var(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly([1], self.var)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.var == other.var or self.degree <= 0

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, i: int = 1) -> "UniPoly":
        """Normalized derivative ``(1/i!) d^i/dU^i``."""
        if i < 0:
            raise ValueError("negative derivative order")
        return UniPoly(
            [binom(e, i) * c for e, c in enumerate(self.coeffs) if e >= i], self.var
        )

    def monic(self) -> "UniPoly":
        lc = self.lc
        return UniPoly([c / lc for c in self.coeffs], self.var)

    def scale(self, c) -> "UniPoly":
        c = to_scalar(c)
        return UniPoly([c * a for a in self.coeffs], self.var)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        return format_unipoly(self)


def format_unipoly(f: UniPoly) -> str:
    """Render descending by degree, e.g. ``-U + 3`` or ``(1/2)U^2 - 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for d in range(f.degree, -1, -1):
        c = f.coeffs[d]
        if c == 0:
            continue
        a = abs(c)
        if d == 0:
            body = _format_coefficient(a)
        else:
            mono = f.var if d == 1 else f"{f.var}^{d}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}{mono}"
            else:
                body = f"({a}){mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def euclid_divrem(P: UniPoly, Q: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division ``P = quotient*Q + remainder``."""
    if Q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(P.coeffs)
    dq = Q.degree
    lc = Q.lc
    if P.degree < dq:
        return UniPoly([], P.var), P
    quot = [Fraction(0)] * (P.degree - dq + 1)
    for d in range(P.degree, dq - 1, -1):
        c = rem[d]
        if c == 0:
            continue
        t = c / lc
        quot[d - dq] = t
        for i, b in enumerate(Q.coeffs):
            rem[d - dq + i] -= t * b
    return UniPoly(quot, P.var), UniPoly(rem[:dq], P.var)


def from_roots(roots: "RootMultiset", var: str = "U") -> UniPoly:
    """Monic product of ``(var - x)**mu`` over the groups of ``roots``."""
    result = UniPoly([1], var)
    for x, mu in roots.groups:
        result = result * UniPoly([-x, 1], var) ** mu
    return result


def pi_product(A: Sequence, B: Sequence) -> Fraction:
    """Product of ``x - y`` over all ``x`` in ``A`` and ``y`` in ``B``."""
    result = Fraction(1)
    for x in A:
        for y in B:
            result *= to_scalar(x) - to_scalar(y)
    return result


@dataclass(frozen=True)
class RootMultiset:
    """Ordered roots with multiplicities.

    ``flattened`` lists the pairs ``(root, j)`` for ``0 <= j < multiplicity``,
    group by group; subsets of roots are always positions into it.
    """

    groups: tuple

    def __init__(self, groups: Iterable = ()):
        gs = tuple((to_scalar(x), int(m)) for x, m in groups)
        seen = set()
        for x, m in gs:
            if m < 1:
                raise ValueError(f"multiplicity of {x} must be positive, got {m}")
            if x in seen:
                raise ValueError(f"root {x} appears in two groups")
            seen.add(x)
        object.__setattr__(self, "groups", gs)

    @classmethod
    def simple(cls, roots: Iterable) -> "RootMultiset":
        return cls((x, 1) for x in roots)

    @classmethod
    def from_list(cls, roots: Iterable) -> "RootMultiset":
        """Group repeated values, keeping first-occurrence order."""
        counts: dict[Fraction, int] = {}
        for x in roots:
            x = to_scalar(x)
            counts[x] = counts.get(x, 0) + 1
        return cls(counts.items())

    @property
    def flattened(self) -> tuple:
        return tuple((x, j) for x, m in self.groups for j in range(m))

    @property
    def values(self) -> tuple:
        """Root values with repetition, in flattened order."""
        return tuple(x for x, _ in self.flattened)

    def __len__(self):
        return sum(m for _, m in self.groups)

    def polynomial(self, var: str = "U") -> UniPoly:
        return from_roots(self, var)

    def __str__(self):
        return ",".join(f"{x}" if m == 1 else f"{x}^{m}" for x, m in self.groups)


def normalized_derivative(f, var: str, i: int):
    """``(1/i!) d^i f / d var^i`` for a UniPoly or a MultiPoly."""
    if isinstance(f, UniPoly):
        if var != f.var and f.degree > 0:
            raise ValueError(f"{var} is not the variable of {f!r}")
        if var != f.var:
            return UniPoly([], f.var) if i > 0 else f
        return f.derivative(i)
    return f.derivative(var, i)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MultiPoly:
    """Sparse polynomial; exponent tuples index the sorted ``variables``."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        order = sorted(range(len(variables)), key=lambda i: variables[i])
        self.variables = tuple(variables[i] for i in order)
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != len(variables):
                raise ValueError(f"exponent vector {mono!r} does not match {variables!r}")
            c = to_scalar(c)
            if c:
                key = tuple(mono[i] for i in order)
                c = clean.get(key, 0) + c
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def constant(cls, c, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(sorted(variables))
        c = to_scalar(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def from_unipoly(cls, f: UniPoly) -> "MultiPoly":
        return cls._raw((f.var,), {(i,): c for i, c in enumerate(f.coeffs) if c})

    # -- structure ---------------------------------------------------------

    def extend(self, variables: Iterable[str]) -> "MultiPoly":
        """Same polynomial over the sorted union of its variables and ``variables``."""
        new_vars = tuple(sorted(set(self.variables) | set(variables)))
        if new_vars == self.variables:
            return self
        idx = [new_vars.index(v) for v in self.variables]
        n = len(new_vars)
        terms = {}
        for mono, c in self.terms.items():
            e = [0] * n
            for pos, k in zip(idx, mono):
                e[pos] = k
            terms[tuple(e)] = c
        return MultiPoly._raw(new_vars, terms)

    def _aligned(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other
        return self.extend(other.variables), other.extend(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def used_variables(self) -> tuple:
        return tuple(
            v for i, v in enumerate(self.variables) if any(m[i] for m in self.terms)
        )

    def degree_in(self, var: str) -> int:
        if var not in self.variables:
            return 0 if self.terms else NEG_INF
        i = self.variables.index(var)
        return max((m[i] for m in self.terms), default=NEG_INF)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=NEG_INF)

    def leading_term(self):
        """Lexicographically largest monomial (variables in sorted order) and its coefficient."""
        mono = max(self.terms)
        return mono, self.terms[mono]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, UniPoly):
            return MultiPoly.from_unipoly(other)
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for m, c in b.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        terms: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultiPoly._raw(a.variables, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = MultiPoly.constant(1, self.variables)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        p = self.extend(())
        used = self.used_variables()
        return hash(frozenset(
            (tuple((v, m[p.variables.index(v)]) for v in used), c)
            for m, c in p.terms.items()
        ))

    # -- calculus and substitution ------------------------------------------

    def derivative(self, var: str, i: int = 1) -> "MultiPoly":
        """Normalized derivative ``(1/i!) d^i/d var^i``."""
        if i < 0:
            raise ValueError("negative derivative order")
        if i == 0:
            return self
        if var not in self.variables:
            return MultiPoly._raw(self.variables, {})
        k = self.variables.index(var)
        terms = {}
        for m, c in self.terms.items():
            e = m[k]
            if e >= i:
                mm = m[:k] + (e - i,) + m[k + 1:]
                terms[mm] = terms.get(mm, 0) + binom(e, i) * c
        return MultiPoly._raw(self.variables, {m: c for m, c in terms.items() if c})

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute scalars or polynomials for variables (simultaneously)."""
        values = {v: val for v, val in values.items() if v in self.variables}
        if not values:
            return self
        keep = [i for i, v in enumerate(self.variables) if v not in values]
        keep_vars = tuple(self.variables[i] for i in keep)
        scalar = {}
        poly = {}
        for v, val in values.items():
            if isinstance(val, (MultiPoly, UniPoly)):
                poly[self.variables.index(v)] = self._coerce(val)
            else:
                scalar[self.variables.index(v)] = to_scalar(val)
        partial: dict = {}
        for m, c in self.terms.items():
            for i, x in scalar.items():
                if m[i]:
                    c = c * x ** m[i]
            if not c:
                continue
            key = (tuple(m[i] for i in keep), tuple((i, m[i]) for i in poly if m[i]))
            partial[key] = partial.get(key, 0) + c
        result = MultiPoly._raw(keep_vars, {})
        powers: dict = {}
        for (mono, pexps), c in partial.items():
            if not c:
                continue
            term = MultiPoly._raw(keep_vars, {mono: c})
            for i, e in pexps:
                if (i, e) not in powers:
                    powers[(i, e)] = poly[i] ** e
                term = term * powers[(i, e)]
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        rest = self.subs(values)
        if not rest.is_constant():
            raise ValueError(f"variables {rest.used_variables()} left unassigned")
        return rest.constant_value()

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables; the image names must not collide."""
        new_vars = tuple(mapping.get(v, v) for v in self.variables)
        return MultiPoly(new_vars, self.terms)

    def permute(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Apply a permutation of variable names (e.g. a transposition)."""
        return self.rename(mapping)

    def is_symmetric(self, variables: Sequence[str]) -> bool:
        variables = list(variables)
        for a, b in zip(variables, variables[1:]):
            if self.permute({a: b, b: a}) != self:
                return False
        return True

    def to_unipoly(self, var: str = "U") -> UniPoly:
        extra = [v for v in self.used_variables() if v != var]
        if extra:
            raise ValueError(f"polynomial still depends on {extra}")
        if var not in self.variables:
            return UniPoly([self.constant_value()] if self.terms else [], var)
        k = self.variables.index(var)
        coeffs: dict = {}
        for m, c in self.terms.items():
            coeffs[m[k]] = c
        n = max(coeffs, default=-1) + 1
        return UniPoly([coeffs.get(i, 0) for i in range(n)], var)

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append(("-" if c < 0 else "") + body if not out else f" {sign} {body}")
        return "".join(out)


def coefficient_of(f: MultiPoly, assignments: Mapping[str, int]) -> MultiPoly:
    """Coefficient of ``prod var**e`` in ``f``, as a polynomial in the other variables."""
    f = f.extend(assignments)
    idx = {f.variables.index(v): e for v, e in assignments.items()}
    keep = [i for i in range(len(f.variables)) if i not in idx]
    terms = {}
    for m, c in f.terms.items():
        if all(m[i] == e for i, e in idx.items()):
            terms[tuple(m[i] for i in keep)] = c
    return MultiPoly._raw(tuple(f.variables[i] for i in keep), terms)


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Quotient ``h`` with ``f == g*h``; raises :class:`DivisibilityError` otherwise."""
    if isinstance(g, (int, Fraction)):
        g = MultiPoly.constant(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f, g = f._aligned(g)
    if f.is_zero():
        return f
    g_mono, g_lc = g.leading_term()
    g_rest = [(m, c) for m, c in g.terms.items() if m != g_mono]
    rem = dict(f.terms)
    # max-heap on lex order via negated exponent tuples
    heap = [tuple(-e for e in m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        key = heapq.heappop(heap)
        m = tuple(-e for e in key)
        c = rem.pop(m, 0)
        if not c:
            continue
        qm = tuple(a - b for a, b in zip(m, g_mono))
        if any(e < 0 for e in qm):
            raise DivisibilityError("division leaves a nonzero remainder")
        qc = c / g_lc
        quot[qm] = qc
        for gm, gc in g_rest:
            mm = tuple(a + b for a, b in zip(qm, gm))
            new = rem.get(mm, 0) - qc * gc
            if new:
                if mm not in rem:
                    heapq.heappush(heap, tuple(-e for e in mm))
                rem[mm] = new
            else:
                rem.pop(mm, None)
    return MultiPoly._raw(f.variables, quot)


def symbolic_vandermonde(names: Sequence[str]) -> MultiPoly:
    """``V(X_1, ..., X_n) = prod_{i<k} (X_k - X_i)`` in the named variables."""
    result = MultiPoly.constant(1, names)
    xs = [MultiPoly.variable(v) for v in names]
    for k in range(len(xs)):
        for i in range(k):
            result = result * (xs[k] - xs[i])
    return result
