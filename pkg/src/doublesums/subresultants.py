"""Signed subresultants from coefficients, and the remainder sequence.

``sres_det`` reads ``Sres_j`` off minors of the Sylvester-Habicht matrix with
rows ``X^(q-j-1) P, ..., X P, P, Q, X Q, ..., X^(p-j-1) Q``.  ``sres_prs``
obtains the same family by recursion along ``P, Q, -Rem(P, Q), ...``; the two
are checked against each other.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .exact import ScalarMatrix, det, epsilon
from .polynomials import UniPoly, euclid_divrem

#: Reverse the order of the Q-block rows.  Pinned by the sign-anchor tests.
REVERSE_Q_BLOCK = False

SresSequence = dict  # j -> UniPoly


def _check_degrees(P: UniPoly, Q: UniPoly) -> tuple[int, int]:
    if P.is_zero() or Q.is_zero():
        raise DomainError("subresultants need nonzero P and Q")
    p, q = P.degree, Q.degree
    if p <= q:
        raise DomainError(f"subresultants need deg P > deg Q, got {p} <= {q}")
    return p, q


def sylvester_habicht_matrix(P: UniPoly, Q: UniPoly, j: int) -> ScalarMatrix:
    """The ``(p+q-2j) x (p+q-j)`` matrix behind ``Sres_j``, for ``0 <= j <= q``."""
    p, q = _check_degrees(P, Q)
    if not 0 <= j <= q:
        raise DomainError(f"matrix defined for 0 <= j <= q = {q}, got {j}")
    width = p + q - j
    top = width - 1

    def shifted(f: UniPoly, s: int) -> list[Fraction]:
        # column c holds the coefficient of X^(top - c)
        return [f.coefficient(top - c - s) for c in range(width)]

    p_rows = [shifted(P, s) for s in range(q - j - 1, -1, -1)]
    q_rows = [shifted(Q, s) for s in range(p - j)]
    if REVERSE_Q_BLOCK:
        q_rows.reverse()
    return ScalarMatrix.from_rows(p_rows + q_rows)


def sres_det(P: UniPoly, Q: UniPoly, j: int) -> UniPoly:
    """``Sres_j(P, Q)`` as a polynomial in ``P``'s variable."""
    p, q = _check_degrees(P, Q)
    if not 0 <= j <= p - 1:
        raise DomainError(f"Sres_j defined for 0 <= j <= p-1 = {p - 1}, got {j}")
    if j == p - 1:
        return Q
    if j > q:
        return UniPoly([], P.var)
    rows = sylvester_habicht_matrix(P, Q, j).to_rows()
    width = p + q - j
    lead = p + q - 2 * j - 1
    coeffs = []
    for i in range(j + 1):
        col = width - 1 - i
        coeffs.append(det([r[:lead] + [r[col]] for r in rows]))
    return UniPoly(coeffs, P.var)


def remainder_sequence(P: UniPoly, Q: UniPoly) -> list[UniPoly]:
    """``P, Q, -Rem(P, Q), ...`` up to the last nonzero entry."""
    if Q.is_zero():
        raise ZeroDivisionError("remainder sequence with Q = 0")
    seq = [P, Q]
    while True:
        _, rem = euclid_divrem(seq[-2], seq[-1])
        if rem.is_zero():
            return seq
        seq.append(-rem)


def sres_prs(P: UniPoly, Q: UniPoly) -> SresSequence:
    """All ``Sres_j(P, Q)``, ``0 <= j <= p-1``, via the remainder recursion."""
    p, q = _check_degrees(P, Q)
    var = P.var
    zero = UniPoly([], var)
    out = {p - 1: Q}
    for j in range(q + 1, p - 1):
        out[j] = zero
    lc = Q.lc
    eps = epsilon(p - q)
    if q < p - 1:
        out[q] = Q.scale(eps * lc ** (p - q - 1))
    if q == 0:
        return out
    _, rem = euclid_divrem(P, Q)
    R = -rem
    out[q - 1] = R.scale(eps * lc ** (p - q + 1))
    if R.is_zero():
        for j in range(q - 1):
            out[j] = zero
        return out
    r = R.degree
    lower = sres_prs(Q, R)
    factor = eps * lc ** (p - r)
    for j in range(q - 1):
        out[j] = lower[j].scale(factor)
    return out
