"""Independent reference computations built on sympy, used only by the tests."""

from fractions import Fraction
from itertools import combinations

import sympy

from doublesums.polynomials import MultiPoly, UniPoly

U = sympy.Symbol("U")


def frac(x) -> Fraction:
    x = sympy.nsimplify(x)
    return Fraction(int(x.p), int(x.q))


def multi_to_sympy(f: MultiPoly):
    syms = [sympy.Symbol(v) for v in f.variables]
    return sympy.expand(sum(
        sympy.Rational(c.numerator, c.denominator) * sympy.prod(s ** e for s, e in zip(syms, expo))
        for expo, c in f.terms.items()))


def uni_to_sympy(f: UniPoly, var=U):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * var ** i
                            for i, c in enumerate(f.coeffs)))


def sympy_to_uni(expr, var=U) -> UniPoly:
    poly = sympy.Poly(sympy.expand(expr), var)
    return UniPoly([frac(c) for c in reversed(poly.all_coeffs())], str(var))


def confluent_matrix(derivated, extra_vars=()):
    """Columns d^j/j! of (1, t, t^2, ...) at x, followed by plain variable columns."""
    n = len(derivated) + len(extra_vars)
    t = sympy.Symbol("t")
    cols = []
    for x, j in derivated:
        col = [sympy.diff(t ** r, t, j).subs(t, sympy.Rational(str(x))) / sympy.factorial(j)
               for r in range(n)]
        cols.append(col)
    for v in extra_vars:
        cols.append([v ** r for r in range(n)])
    return sympy.Matrix(n, n, lambda r, c: cols[c][r])


def classical_double_sum(P, Q, k, l):
    """Sum over subsets with explicit root-difference denominators."""
    P = [sympy.Rational(str(x)) for x in P]
    Q = [sympy.Rational(str(y)) for y in Q]
    total = 0
    for A in combinations(range(len(P)), k):
        for B in combinations(range(len(Q)), l):
            Pa = [P[i] for i in A]
            Pb = [P[i] for i in range(len(P)) if i not in A]
            Qa = [Q[i] for i in B]
            Qb = [Q[i] for i in range(len(Q)) if i not in B]
            num = (sympy.prod(U - x for x in Pa) * sympy.prod(U - y for y in Qa)
                   * sympy.prod(x - y for x in Pa for y in Qa)
                   * sympy.prod(x - y for x in Pb for y in Qb))
            den = (sympy.prod(x - y for x in Pa for y in Pb)
                   * sympy.prod(y - z for y in Qa for z in Qb))
            total += num / den
    return sympy.expand(sympy.simplify(total))


def signed_subresultant(P: UniPoly, Q: UniPoly, j: int):
    """Determinant polynomial: coefficient columns plus a last column holding the rows' polynomials."""
    p, q = P.degree, Q.degree
    Ps, Qs = uni_to_sympy(P), uni_to_sympy(Q)
    rows = [U ** s * Ps for s in range(q - j - 1, -1, -1)] + [U ** s * Qs for s in range(p - j)]
    width = p + q - j
    lead = p + q - 2 * j - 1
    matrix = []
    for f in rows:
        coeffs = sympy.Poly(f, U).all_coeffs()
        coeffs = [0] * (width - len(coeffs)) + coeffs
        matrix.append(coeffs[:lead] + [f])
    return sympy.expand(sympy.Matrix(matrix).det())
