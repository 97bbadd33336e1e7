"""Seeded randomized verification of the double-sum identities.

Each suite draws inputs from its own ``random.Random`` (seeded from the global
seed and the suite name, so running one suite or ``all`` gives the same
inputs) and returns one :class:`IdentityResult` per identity it checks.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .double_sums import (
    SplitPoly,
    default_u_vars,
    msylv,
    sylv_classical,
    sylv_general,
    sylv_nonmonic,
)
from .exact import (
    binom,
    enumerate_subsets,
    epsilon,
    selections,
    sign_power,
    subset_complement,
    subset_signature,
)
from .hermite import (
    HermiteData,
    dual_functional,
    hermite_interpolate,
    reconstruct,
    symmetric_basis,
    symmetric_coords,
)
from .polynomials import (
    MultiPoly,
    RootMultiset,
    UniPoly,
    coefficient_of,
    euclid_divrem,
    pi_product,
)
from .subresultants import sres_det, sres_prs
from .vandermonde import confluent_det, vandermonde_det, vp_closed_form

ROOT_RANGE = (-9, 9)
MAX_MULTIPLICITY = 3
LEADING_COEFFS = (1, -1, 2, -3, 5, Fraction(1, 2), Fraction(-2, 3))


@dataclass
class IdentityResult:
    name: str
    trials: int = 0
    failures: int = 0
    reproducer: str | None = None

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.reproducer is None:
                self.reproducer = describe()

    def line(self) -> str:
        return f"{self.name}: trials={self.trials} failures={self.failures}"


@dataclass
class VerifyConfig:
    max_p: int = 5
    max_q: int = 4
    trials: int = 20
    seed: int = 0


class Results(dict):
    """Identity name -> :class:`IdentityResult`, created on first use."""

    def __missing__(self, name):
        self[name] = IdentityResult(name)
        return self[name]


# ---------------------------------------------------------------------------
# input generators


def random_roots(rng: random.Random, degree: int, max_mult: int = MAX_MULTIPLICITY,
                 lo: int = ROOT_RANGE[0], hi: int = ROOT_RANGE[1]) -> RootMultiset:
    """Random root multiset of the given size with integer roots in ``[lo, hi]``."""
    groups = []
    used = set()
    left = degree
    while left:
        m = rng.randint(1, min(max_mult, left))
        x = rng.choice([v for v in range(lo, hi + 1) if v not in used])
        used.add(x)
        groups.append((x, m))
        left -= m
    return RootMultiset(groups)


def random_simple_roots(rng: random.Random, n: int) -> list[int]:
    return rng.sample(range(ROOT_RANGE[0], ROOT_RANGE[1] + 1), n)


def random_pair(rng: random.Random, max_p: int, max_q: int, min_q: int = 0):
    """Root multisets ``P, Q`` with ``min_q <= q < p <= max_p`` and ``q <= max_q``."""
    p = rng.randint(max(2, min_q + 1), max(max_p, min_q + 1))
    q = rng.randint(min_q, max(min_q, min(p - 1, max_q)))
    return random_roots(rng, p), random_roots(rng, q)


def random_int_poly(rng: random.Random, degree: int, bound: int = 5) -> UniPoly:
    lead = rng.choice([c for c in range(-3, 4) if c])
    return UniPoly([rng.randint(-bound, bound) for _ in range(degree)] + [lead])


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_split(f: UniPoly, limit: int = 10**12) -> SplitPoly | None:
    """Write ``f`` as ``lc * prod (U - x)^mu`` with rational ``x``, or return None.

    Only used to build test inputs whose roots are all rational.
    """
    lc = f.lc
    roots: dict[Fraction, int] = {}
    g = f.monic()
    while g.degree > 0:
        if g.coefficient(0) == 0:
            x = Fraction(0)
        else:
            den = math.lcm(*(c.denominator for c in g.coeffs))
            ints = [int(c * den) for c in g.coeffs]
            a0, an = ints[0], ints[-1]
            if abs(a0) > limit or abs(an) > limit:
                return None
            x = next(
                (Fraction(s * a, b) for a in _divisors(a0) for b in _divisors(an)
                 for s in (1, -1) if g(Fraction(s * a, b)) == 0),
                None,
            )
            if x is None:
                return None
        g, rem = euclid_divrem(g, UniPoly([-x, 1], f.var))
        assert rem.is_zero()
        roots[x] = roots.get(x, 0) + 1
    return SplitPoly(lc, RootMultiset(roots.items()))


@dataclass
class RemainderTriple:
    """``P = C*Q - R`` with ``P``, ``Q`` and ``R`` all split over the rationals."""

    P: SplitPoly
    Q: SplitPoly
    R: SplitPoly | None  # None when Q divides P
    C: UniPoly

    def describe(self) -> str:
        r = "0" if self.R is None else f"{self.R.lc}*({self.R.roots})"
        return (f"P={self.P.lc}*({self.P.roots}) Q={self.Q.lc}*({self.Q.roots}) "
                f"R={r} C={self.C}")


def random_remainder_triple(rng: random.Random, max_p: int, max_q: int,
                            min_q: int = 1) -> RemainderTriple:
    """Rejection-sample split ``P``, ``Q`` whose negated remainder also splits.

    Every third draw makes ``Q`` divide ``P`` so the ``R = 0`` branch is covered.
    """
    while True:
        divides = rng.random() < 1 / 3
        Proots, Qroots = random_pair(rng, max_p, max_q, min_q=min_q)
        if divides:
            extra = random_roots(rng, len(Proots) - len(Qroots))
            merged = dict(Qroots.groups)
            for x, m in extra.groups:
                merged[x] = merged.get(x, 0) + m
            Proots = RootMultiset(merged.items())
        P = SplitPoly(rng.choice(LEADING_COEFFS), Proots)
        Q = SplitPoly(rng.choice(LEADING_COEFFS), Qroots)
        C, rem = euclid_divrem(P.polynomial(), Q.polynomial())
        if rem.is_zero():
            return RemainderTriple(P, Q, None, C)
        R = rational_split(-rem)
        if R is not None:
            return RemainderTriple(P, Q, R, C)


def random_symmetric(rng: random.Random, u_vars: tuple, k: int, nterms: int = 3) -> MultiPoly:
    """Orbit sums of random monomials with every exponent at most ``k``."""
    g = MultiPoly.constant(rng.randint(-3, 3), u_vars)
    for _ in range(nterms):
        expo = tuple(rng.randint(0, k) for _ in u_vars)
        c = rng.randint(-4, 4)
        orbit = {tuple(expo[i] for i in perm) for perm in itertools.permutations(range(len(u_vars)))}
        g = g + MultiPoly(u_vars, {e: c for e in orbit})
    return g


# ---------------------------------------------------------------------------
# suites


def _pq(P, Q) -> str:
    return f"P=({P}) Q=({Q})"


def suite_vandermonde(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        p = rng.randint(1, cfg.max_p)
        P = random_roots(rng, p)
        res["vandermonde.closed_form"].check(
            confluent_det(P.flattened) == vp_closed_form(P), lambda: f"P=({P})")
        res["vandermonde.classical_reduction"].check(
            confluent_det([(x, 0) for x in P.values]) == vandermonde_det(P.values),
            lambda: f"points={P.values}")

        a, b = rng.randint(0, 5), rng.randint(0, 5)
        A = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(a)]
        B = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(b)]
        res["vandermonde.tresutile"].check(
            vandermonde_det(B + A) == vandermonde_det(A) * pi_product(A, B) * vandermonde_det(B),
            lambda: f"A={A} B={B}")

        if p <= 5:
            flat = P.flattened
            vp = confluent_det(flat)
            for k in range(p + 1):
                for sel in selections(p, k):
                    rest = [flat[i] for i in subset_complement(p, sel.positions)]
                    for other in enumerate_subsets(p, k):
                        value = confluent_det([flat[i] for i in other] + rest)
                        if other == sel.positions:
                            expected = sign_power(k * (p - k)) * sel.signature * vp
                        else:
                            expected = 0
                        res["vandermonde.toutourien"].check(
                            value == expected,
                            lambda: f"P=({P}) K={sel.positions} K'={other}")
    return res


def suite_theoreme0(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        p = rng.randint(1, cfg.max_p)
        q = rng.randint(0, cfg.max_q)
        Pr, Qr = random_simple_roots(rng, p), random_simple_roots(rng, q)
        P, Q = RootMultiset.simple(Pr), RootMultiset.simple(Qr)
        for k in range(p + 1):
            for l in range(q + 1):
                res["theoreme0"].check(
                    sylv_general(P, Q, k, l) == sylv_classical(Pr, Qr, k, l),
                    lambda: f"{_pq(P, Q)} k={k} l={l}")
    return res


def _index_pairs(j: int, q: int):
    for l in range(min(j, q) + 1):
        yield j - l, l


def suite_theo4(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        P, Q = random_pair(rng, cfg.max_p, cfg.max_q, min_q=1)
        p, q = len(P), len(Q)
        for j in range(q):
            base = sylv_general(P, Q, j, 0)
            for k, l in _index_pairs(j, q):
                res["theo4"].check(
                    sylv_general(P, Q, k, l) == base.scale(sign_power(l * (p - j)) * binom(j, l)),
                    lambda: f"{_pq(P, Q)} k={k} l={l}")
    return res


def suite_lienentre(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        P, Q = random_pair(rng, cfg.max_p, cfg.max_q)
        p, q = len(P), len(Q)
        for j in range(q, p):
            base = sylv_general(P, Q, j, 0)
            for k, l in _index_pairs(j, q):
                res["lienentreSylv"].check(
                    sylv_general(P, Q, k, l) == base.scale(sign_power(l * (p - j)) * binom(q, l)),
                    lambda: f"{_pq(P, Q)} k={k} l={l}")
    return res


def suite_ouf(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        P, Q = random_pair(rng, cfg.max_p, cfg.max_q)
        p, q = len(P), len(Q)
        Qpoly = Q.polynomial()
        for j in range(q, p):
            for k, l in _index_pairs(j, q):
                value = sylv_general(P, Q, k, l)
                describe = lambda: f"{_pq(P, Q)} k={k} l={l}"
                if j == q:
                    res["ouf.1"].check(
                        value == Qpoly.scale(sign_power(k * (p - q)) * binom(q, k)), describe)
                if q < j < p - 1:
                    res["ouf.2"].check(value.is_zero(), describe)
                if j == p - 1:
                    res["ouf.3"].check(
                        value == Qpoly.scale(sign_power(k) * binom(q, l)), describe)
    return res


def suite_theo4mult(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    max_p = min(cfg.max_p, 4)
    for _ in range(cfg.trials):
        P, Q = random_pair(rng, max_p, cfg.max_q)
        p, q = len(P), len(Q)
        Qpoly = Q.polynomial()
        for j in range(max(0, p - 3), p):
            u_vars = default_u_vars(p - j)
            base = msylv(P, Q, j, 0, u_vars)
            if j >= q:
                expected = MultiPoly.constant(sign_power(j * (p - j)), u_vars)
                for v in u_vars:
                    expected = expected * Qpoly.with_var(v)
                res["enplus"].check(base == expected, lambda: f"{_pq(P, Q)} j={j}")
            for k, l in _index_pairs(j, q):
                describe = lambda: f"{_pq(P, Q)} k={k} l={l}"
                value = msylv(P, Q, k, l, u_vars)
                if j < q:
                    factor = sign_power(l * (p - j)) * binom(j, l)
                    res["theo4mult"].check(value == base * factor, describe)
                else:
                    factor = sign_power(l * (p - j)) * binom(q, l)
                    res["jplusgrandqueq"].check(value == base * factor, describe)
                extracted = coefficient_of(value, {v: j for v in u_vars[1:]})
                res["lienMsylvSylv"].check(
                    extracted.to_unipoly(u_vars[0]).with_var("U") == sylv_general(P, Q, k, l),
                    describe)
    return res


def remainder_checks(res: Results, t: RemainderTriple, prefix: str) -> None:
    P, Q, R = t.P, t.Q, t.R
    p, q = P.degree, Q.degree
    Qpoly = Q.polynomial()
    lcq = Q.lc
    for j in range(p - 1):
        value = sylv_nonmonic(P, Q, j, 0)
        describe = lambda: f"{t.describe()} j={j}"
        if prefix == "rappelbis":
            if q < j < p - 1:
                res["rappelbis.1"].check(value.is_zero(), describe)
            elif j == q:
                res["rappelbis.2"].check(
                    value == Qpoly.scale(sign_power(q * (p - q)) * lcq ** (p - q - 1)), describe)
            elif j == q - 1:
                Rpoly = R.polynomial() if R is not None else UniPoly([])
                sign = sign_power((q - 1) * (p - q + 1) + p - q)
                res["rappelbis.3"].check(
                    value == Rpoly.scale(sign * lcq ** (p - q + 1)), describe)
        if j >= q or (prefix == "rappelbis" and j == q - 1):
            continue
        if R is None:
            name = "rappelbis.5" if prefix == "rappelbis" else "prorecurrence.R=0"
            res[name].check(value.is_zero(), describe)
        else:
            r = R.degree
            expected = sylv_nonmonic(Q, R, j, 0).scale(sign_power(q * (p - q)) * lcq ** (p - r))
            name = "rappelbis.4" if prefix == "rappelbis" else "prorecurrence.R!=0"
            res[name].check(value == expected, describe)


def suite_prorecurrence(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        remainder_checks(res, random_remainder_triple(rng, cfg.max_p, cfg.max_q), "prorecurrence")
    return res


def suite_rappelbis(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        remainder_checks(res, random_remainder_triple(rng, cfg.max_p, cfg.max_q), "rappelbis")
    return res


def random_int_pair(rng: random.Random, max_p: int) -> tuple[UniPoly, UniPoly]:
    """Integer-coefficient ``P``, ``Q`` with ``deg P > deg Q``; sometimes ``Q | P``."""
    p = rng.randint(1, max_p)
    q = rng.randint(0, p - 1)
    Q = random_int_poly(rng, q)
    if rng.random() < 1 / 4:
        return random_int_poly(rng, p - q, bound=3) * Q, Q
    return random_int_poly(rng, p), Q


def rappel_checks(res: Results, P: UniPoly, Q: UniPoly) -> None:
    p, q = P.degree, Q.degree
    lc = Q.lc
    eps = epsilon(p - q)
    describe = lambda: f"P={P} Q={Q}"
    dets = {j: sres_det(P, Q, j) for j in range(p)}
    prs = sres_prs(P, Q)
    res["rappel.det=prs"].check(all(dets[j] == prs[j] for j in range(p)), describe)
    res["rappel.remark"].check(dets[p - 1] == Q, describe)
    for j in range(q + 1, p - 1):
        res["rappel.1"].check(dets[j].is_zero(), describe)
    res["rappel.2"].check(dets[q] == (Q if q == p - 1 else Q.scale(eps * lc ** (p - q - 1))),
                          describe)
    if q == 0:
        return
    _, rem = euclid_divrem(P, Q)
    R = -rem
    res["rappel.3"].check(dets[q - 1] == R.scale(eps * lc ** (p - q + 1)), describe)
    for j in range(q - 1):
        if R.is_zero():
            res["rappel.5"].check(dets[j].is_zero(), describe)
        else:
            expected = sres_det(Q, R, j).scale(eps * lc ** (p - R.degree))
            res["rappel.4"].check(dets[j] == expected, describe)


def suite_rappel(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        rappel_checks(res, *random_int_pair(rng, max(cfg.max_p, 2)))
    return res


def theoreme2_checks(res: Results, P: SplitPoly, Q: SplitPoly, name: str) -> None:
    p, q = P.degree, Q.degree
    Pp, Qp = P.polynomial(), Q.polynomial()
    prs = sres_prs(Pp, Qp)
    for j in range(p - 1):
        sres = sres_det(Pp, Qp, j)
        agree = sres == prs[j]
        for k, l in _index_pairs(j, q):
            value = sylv_nonmonic(P, Q, k, l)
            factor = sign_power(k * (p - j)) * epsilon(p - j) * binom(j, k)
            res[name].check(agree and value == sres.scale(factor),
                            lambda: f"P={P.lc}*({P.roots}) Q={Q.lc}*({Q.roots}) k={k} l={l}")
    for k, l in _index_pairs(p - 1, q):
        value = sylv_nonmonic(P, Q, k, l)
        expected = prs[p - 1].scale(sign_power(k) * binom(q, l) * P.lc ** (q - p + 1))
        res["theoreme2.remark"].check(
            value == expected, lambda: f"P={P.lc}*({P.roots}) Q={Q.lc}*({Q.roots}) k={k} l={l}")


def suite_theoreme2(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for i in range(cfg.trials):
        Pr, Qr = random_pair(rng, cfg.max_p, cfg.max_q)
        theoreme2_checks(res, SplitPoly(1, Pr), SplitPoly(1, Qr), "theoreme2.monic")
        if i % 2 == 0:
            theoreme2_checks(res, SplitPoly(rng.choice(LEADING_COEFFS), Pr),
                             SplitPoly(rng.choice(LEADING_COEFFS), Qr), "theoreme2.nonmonic")
    return res


def hermite_univariate_checks(res: Results, rng: random.Random, max_degree: int = 6) -> None:
    p = rng.randint(1, max_degree + 1)
    nodes = random_roots(rng, p)
    f = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(rng.randint(0, p))])
    values = [f.derivative(j)(x) for x, j in nodes.flattened]
    res["hermite.univariate"].check(
        hermite_interpolate(HermiteData.from_flat(nodes, values)) == f,
        lambda: f"nodes=({nodes}) f={f}")


def hermite_multivariate_checks(res: Results, rng: random.Random, P: RootMultiset) -> None:
    p = len(P)
    for k in range(p + 1):
        u_vars = default_u_vars(p - k)
        basis = symmetric_basis(P, k, u_vars)
        g = random_symmetric(rng, u_vars, k)
        coords = symmetric_coords(g, P, k, u_vars)
        res["hermite.multivariate"].check(
            reconstruct(coords, basis) == g, lambda: f"P=({P}) k={k} g={g}")
        sign = sign_power(k * (p - k))
        vp = confluent_det(P.flattened)
        ok = True
        for element in basis:
            for sel in selections(p, k):
                rest = subset_complement(p, sel.positions)
                value = dual_functional(element.poly, P, rest, u_vars)
                expected = sign * sel.signature if sel == element.subset else 0
                ok = ok and value == expected
        res["hermite.duality"].check(ok, lambda: f"P=({P}) k={k}")
        if k == p - 1:
            values = [Fraction(rng.randint(-9, 9)) for _ in range(p)]
            data = HermiteData.from_flat(P, values)
            uni = hermite_interpolate(data)
            g1 = MultiPoly.from_unipoly(uni.with_var(u_vars[0]))
            coords = symmetric_coords(g1, P, k, u_vars)
            res["hermite.k=p-1"].check(
                reconstruct(coords, basis).to_unipoly(u_vars[0]).with_var("U") == uni,
                lambda: f"P=({P}) values={values}")


def suite_hermite(rng: random.Random, cfg: VerifyConfig) -> Results:
    res = Results()
    for _ in range(cfg.trials):
        hermite_univariate_checks(res, rng, max_degree=6)
        hermite_multivariate_checks(res, rng, random_roots(rng, rng.randint(1, min(cfg.max_p, 4))))
    return res


SUITES: dict[str, Callable[[random.Random, VerifyConfig], Results]] = {
    "theoreme0": suite_theoreme0,
    "theo4": suite_theo4,
    "theo4mult": suite_theo4mult,
    "lienentreSylv": suite_lienentre,
    "ouf": suite_ouf,
    "prorecurrence": suite_prorecurrence,
    "theoreme2": suite_theoreme2,
    "rappel": suite_rappel,
    "rappelbis": suite_rappelbis,
    "vandermonde": suite_vandermonde,
    "hermite": suite_hermite,
}


def suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def run_suites(names: Iterable[str], cfg: VerifyConfig) -> list[IdentityResult]:
    out = []
    for name in names:
        out.extend(SUITES[name](suite_rng(cfg.seed, name), cfg).values())
    return out
