"""Randomized identity suites behind ``ene verify``.

Every suite takes a ``random.Random`` seed and a size, runs a list of named
checks and returns a JSON-ready report.  A suite passes iff every check
passes; failing checks keep a short description of the first counterexample.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

from .analytic import (
    GenusFactorization,
    ZeroSet,
    genus_factorization_ene,
    radius_inequality_check,
    to_complex,
    verify_zero_products,
)
from .product import ene, ene_universal, product_from_roots, unit
from .rational import RationalPair, ShiftedPoly, as_poly, ene_rational, ene_shifted, poly_mul, verify_inversion
from .rings import CC, QQ, ZZ, ComplexFloat, IntegersMod, mobius
from .series import (
    ExpForm,
    Series,
    exp_log_derivative,
    exp_truncate,
    hadamard,
    koebe,
    log_derivative,
    scale_argument,
    series_exp,
    series_log,
)
from .transforms import (
    artin_hasse,
    artin_hasse_action,
    convolution_check,
    cyclotomic_like,
    dilate,
    ene_by_IN,
    fractional_power,
    hecke,
    weierstrass_factor,
)

SIZES = {"small": 10, "medium": 50, "large": 200}

# ---------------------------------------------------------------------------
# random inputs


def ring_kinds(eps=1e-10):
    """The five coefficient rings exercised by the axiom suites."""
    return [QQ, ZZ, IntegersMod(7), IntegersMod(6), ComplexFloat(eps)]


def random_elem(ring, rng):
    if ring.kind == "big-rational":
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    if ring.kind == "big-integer":
        return rng.randint(-9, 9)
    if ring.kind == "modular":
        return rng.randrange(ring.m)
    if ring.kind == "complex-float":
        return complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
    raise ValueError(f"no random elements for {ring}")


def random_unit_series(ring, order, rng):
    return Series(ring, [ring.one()] + [random_elem(ring, rng) for _ in range(order)])


def random_nonzero_fraction(rng, top=5):
    while True:
        q = Fraction(rng.randint(-top, top), rng.randint(1, top))
        if q:
            return q


def random_rooted_poly(rng, degree):
    """``prod (1 - X/r)`` over Q with random nonzero rational roots; returns (poly, roots)."""
    roots = [random_nonzero_fraction(rng) for _ in range(degree)]
    return product_from_roots(QQ, roots, degree), roots


def random_monic_rooted_poly(rng, degree):
    """Rational roots with product ``(-1)^degree`` so the leading coefficient is 1."""
    roots = [random_nonzero_fraction(rng) for _ in range(degree - 1)]
    prod = Fraction(1)
    for r in roots:
        prod *= r
    roots.append(Fraction((-1) ** degree) / prod)
    return product_from_roots(QQ, roots, degree), roots


def random_exp_series(rng, order, support=None):
    """``exp(F)`` over Q with small random ``F_i`` (all nonzero unless ``support`` says otherwise)."""
    F = []
    for i in range(1, order + 1):
        if support is not None and i not in support:
            F.append(Fraction(0))
        else:
            F.append(random_nonzero_fraction(rng, 4))
    return series_exp(ExpForm(QQ, tuple(F)))


# ---------------------------------------------------------------------------
# bookkeeping


class _Check:
    def __init__(self, name):
        self.name = name
        self.count = 0
        self.failure = None
        self.extra = {}

    def record(self, ok, detail=""):
        self.count += 1
        if not ok and self.failure is None:
            self.failure = detail or "identity failed"

    def result(self):
        out = {"name": self.name, "pass": self.failure is None, "cases": self.count}
        if self.failure is not None:
            out["failure"] = self.failure
        out.update(self.extra)
        return out


def _report(suite, checks):
    results = [c.result() for c in checks]
    return {"suite": suite, "pass": all(r["pass"] for r in results), "checks": results}


# ---------------------------------------------------------------------------
# suites


def suite_ring_axioms(seed=0, n=10):
    rng = random.Random(seed)
    checks = []
    for ring in ring_kinds():
        c = _Check(f"ring-axioms[{ring.descriptor()}]")
        eq, add, mul = ring.eq, ring.add, ring.mul
        for _ in range(n):
            a, b, x = (random_elem(ring, rng) for _ in range(3))
            ok = (
                eq(add(a, b), add(b, a))
                and eq(add(add(a, b), x), add(a, add(b, x)))
                and eq(mul(a, b), mul(b, a))
                and eq(mul(mul(a, b), x), mul(a, mul(b, x)))
                and eq(mul(a, add(b, x)), add(mul(a, b), mul(a, x)))
                and eq(add(a, ring.zero()), a)
                and eq(mul(a, ring.one()), a)
                and ring.is_zero(add(a, ring.neg(a)))
            )
            k = rng.randint(-5, 5)
            acc = ring.zero()
            for _ in range(abs(k)):
                acc = add(acc, a)
            ok = ok and eq(ring.int_scale(k, a), acc if k >= 0 else ring.neg(acc))
            c.record(ok, f"a={ring.encode(a)}, b={ring.encode(b)}, c={ring.encode(x)}")
        checks.append(c)
    c = _Check("mobius")
    for m in range(2, 60):
        c.record(sum(mobius(d) for d in range(1, m + 1) if m % d == 0) == 0, f"sum over divisors of {m}")
    checks.append(c)
    return _report("ring-axioms", checks)


def ene_axiom_failure(f, g, h):
    """First failing eñe ring axiom on ``f, g, h`` or ``None``."""
    ring = f.ring
    N = f.order
    one = Series.one(ring, N)
    e = unit(ring, N)
    fg = ene(f, g)
    if ene(g, f) != fg:
        return "commutativity"
    if ene(fg, h) != ene(f, ene(g, h)):
        return "associativity"
    if ene(f, g * h) != fg * ene(f, h):
        return "distributivity"
    if ene(e, f) != f:
        return "unit 1-X"
    if ene(one, f) != one:
        return "zero 1"
    return None


def suite_ene_axioms(seed=0, n=10, order=16):
    rng = random.Random(seed)
    checks = []
    for ring in ring_kinds():
        c = _Check(f"ene-axioms[{ring.descriptor()}]")
        for _ in range(n):
            f, g, h = (random_unit_series(ring, order, rng) for _ in range(3))
            bad = ene_axiom_failure(f, g, h)
            c.record(bad is None, f"{bad} on f={f}")
        checks.append(c)
    c = _Check("linear-factor-scales-argument")
    for _ in range(n):
        a = random_elem(QQ, rng)
        f = random_unit_series(QQ, order, rng)
        c.record(ene(Series.from_values(QQ, [1, -a], order), f) == scale_argument(f, a), f"a={a}")
    checks.append(c)
    c = _Check("reciprocals")
    for _ in range(n):
        f, g = random_unit_series(QQ, order, rng), random_unit_series(QQ, order, rng)
        c.record(ene(1 / f, 1 / g) == ene(f, g))
    checks.append(c)
    return _report("ene-axioms", checks)


def main_formula_holds(f, g):
    """``exp(X D(f*g)) == g * exp(X D f)``."""
    return exp_log_derivative(ene(f, g)) == ene(g, exp_log_derivative(f))


def suite_main_formula(seed=0, n=10, order=16):
    rng = random.Random(seed)
    c1, c2 = _Check("main-formula"), _Check("convolution-formula")
    for _ in range(n):
        f, g = random_unit_series(QQ, order, rng), random_unit_series(QQ, order, rng)
        c1.record(main_formula_holds(f, g), f"f={f}")
        try:
            convolution_check(f)
            c2.record(True)
        except AssertionError as exc:
            c2.record(False, str(exc))
    return _report("main-formula", [c1, c2])


def hadamard_relations(f, g):
    """``(D(f*g) == -Df . Dg, F *_e G == -K0 . F . G)`` with ``.`` Hadamard."""
    ring = f.ring
    lhs = log_derivative(ene(f, g))
    rhs = -hadamard(log_derivative(f), log_derivative(g))
    first = lhs == rhs
    F, G = series_log(f), series_log(g)
    H = series_log(ene(f, g)).as_series()
    K = koebe(f.order, ring)
    second = H == -hadamard(hadamard(K, F.as_series()), G.as_series())
    return first, second


def suite_hadamard(seed=0, n=10, order=16):
    rng = random.Random(seed)
    c1, c2 = _Check("log-derivative-hadamard"), _Check("exp-form-koebe-twist")
    for _ in range(n):
        f, g = random_unit_series(QQ, order, rng), random_unit_series(QQ, order, rng)
        a, b = hadamard_relations(f, g)
        c1.record(a)
        c2.record(b)
    return _report("hadamard", [c1, c2])


def suite_operators(seed=0, n=10, order=36):
    rng = random.Random(seed)
    checks = []

    c = _Check("E_N*E_M=E_max")
    for N in range(7):
        for M in range(7):
            lhs = ene(weierstrass_factor(N, order), weierstrass_factor(M, order))
            c.record(lhs == weierstrass_factor(max(N, M), order), f"N={N}, M={M}")
    checks.append(c)

    c = _Check("I_N*I_M=I_lcm")
    for N in range(1, 7):
        for M in range(1, 7):
            lhs = ene(cyclotomic_like(N, order), cyclotomic_like(M, order))
            c.record(lhs == cyclotomic_like(math.lcm(N, M), order), f"N={N}, M={M}: product is I_lcm^gcd")
    checks.append(c)

    c = _Check("I_N*I_M=I_lcm^gcd")
    for N in range(1, 7):
        for M in range(1, 7):
            lhs = ene(cyclotomic_like(N, order), cyclotomic_like(M, order))
            c.record(lhs == cyclotomic_like(math.lcm(N, M), order) ** math.gcd(N, M), f"N={N}, M={M}")
    checks.append(c)

    fs = [random_unit_series(QQ, order, rng) for _ in range(max(1, n // 5))]

    c = _Check("E_N*f=f.Te_N(1/f)")
    for f in fs:
        for N in range(7):
            c.record(ene(weierstrass_factor(N, order), f) == f * exp_truncate(1 / f, N), f"N={N}")
    checks.append(c)

    c = _Check("I_N*f=exp(sum N F_Nk X^Nk)")
    for f in fs:
        for N in range(1, 7):
            c.record(ene(cyclotomic_like(N, order), f) == ene_by_IN(N, f), f"N={N}")
    checks.append(c)

    c = _Check("T(n)T(m)=T(nm)")
    for f in fs:
        for a in range(1, 7):
            for b in range(1, 7):
                if math.gcd(a, b) == 1 and a * b <= order:
                    c.record(hecke(a, hecke(b, f)) == hecke(a * b, f), f"n={a}, m={b}")
    checks.append(c)

    c = _Check("T(n)=R_n(I_n*f)")
    for f in fs:
        for k in range(1, 7):
            lhs = hecke(k, f)
            rhs = dilate(k, ene(cyclotomic_like(k, order), f))
            c.record(rhs == lhs, f"n={k}: R_n(I_n*f) has exponential coordinates n*F_nk")
    checks.append(c)

    c = _Check("T(n)=R_n(I_n*f)^(1/n)")
    for f in fs:
        for k in range(1, 7):
            rhs = fractional_power(dilate(k, ene(cyclotomic_like(k, order), f)).to_series(), Fraction(1, k))
            c.record(rhs == hecke(k, f), f"n={k}")
    checks.append(c)

    c = _Check("R_lambda T(n)=T(n) R_lambda")
    for f in fs:
        for k in range(1, 5):
            for lam in (Fraction(2), Fraction(3), Fraction(1, 5), Fraction(5, 7), Fraction(7, 5)):
                if math.gcd(k, lam.denominator) != 1:
                    continue
                c.record(dilate(lam, hecke(k, f)) == hecke(k, dilate(lam, f)), f"n={k}, lambda={lam}")
    checks.append(c)

    c = _Check("artin-hasse-index-range")
    start1 = 0
    for p in (2, 3):
        M = p * p
        for _ in range(max(1, n // 5)):
            f = random_unit_series(QQ, M, rng)
            brute = ene_universal(artin_hasse(p, M), f)
            c.record(brute == artin_hasse_action(p, f, 0), f"p={p}")
            start1 += brute == artin_hasse_action(p, f, 1)
    c.extra["sum_from_k1_matches"] = start1
    checks.append(c)

    c = _Check("f^a*g=(f*g)^a")
    for _ in range(n):
        f, g = random_unit_series(QQ, 12, rng), random_unit_series(QQ, 12, rng)
        a = random_nonzero_fraction(rng)
        c.record(ene(fractional_power(f, a), g) == fractional_power(ene(f, g), a), f"a={a}")
    checks.append(c)

    c = _Check("exp-truncation-homomorphism")
    for _ in range(n):
        f, g = random_unit_series(QQ, 12, rng), random_unit_series(QQ, 12, rng)
        N = rng.randint(1, 12)
        ok = exp_truncate(ene(f, g), N) == ene(exp_truncate(f, N), exp_truncate(g, N))
        ok = ok and exp_truncate(f * g, N) == exp_truncate(f, N) * exp_truncate(g, N)
        c.record(ok, f"N={N}")
    checks.append(c)

    return _report("operators", checks)


def pole_zero_calculus(rng, degrees):
    """One random instance: ``ene_rational`` against exact root bookkeeping."""
    dp1, dq1, dp2, dq2 = degrees
    P1, z1 = random_rooted_poly(rng, dp1)
    Q1, p1 = random_rooted_poly(rng, dq1)
    P2, z2 = random_rooted_poly(rng, dp2)
    Q2, p2 = random_rooted_poly(rng, dq2)
    R = ene_rational(RationalPair(P1, Q1), RationalPair(P2, Q2))
    zeros = [a * b for a in z1 for b in z2] + [a * b for a in p1 for b in p2]
    poles = [a * b for a in z1 for b in p2] + [a * b for a in p1 for b in z2]
    num = as_poly(product_from_roots(QQ, zeros, len(zeros)))
    den = as_poly(product_from_roots(QQ, poles, len(poles)))
    return R.num == num and R.num.order == num.order and R.den == den and R.den.order == den.order


def suite_rational(seed=0, n=10):
    rng = random.Random(seed)
    checks = []
    c = _Check("pole-zero-calculus")
    for _ in range(n):
        degrees = tuple(rng.randint(0, 3) for _ in range(4))
        c.record(pole_zero_calculus(rng, degrees), f"degrees {degrees}")
    checks.append(c)

    c = _Check("inversion-invariance")
    for _ in range(n):
        P, _ = random_monic_rooted_poly(rng, rng.randint(1, 4))
        Q, _ = random_monic_rooted_poly(rng, rng.randint(1, 4))
        c.record(verify_inversion(P, Q), f"P={P}, Q={Q}")
    checks.append(c)

    c = _Check("shifted-commutative-distributive")
    for _ in range(n):
        a, b, d = (ShiftedPoly(rng.randint(0, 2), random_rooted_poly(rng, rng.randint(0, 2))[0]) for _ in range(3))
        ok = ene_shifted(a, b) == ene_shifted(b, a)
        ok = ok and ene_shifted(a, b * d) == ene_shifted(a, b) * ene_shifted(a, d)
        c.record(ok, f"{a}, {b}, {d}")
    checks.append(c)
    return _report("rational", checks)


def random_complex_poly(rng, degree, lo=0.5, hi=2.0):
    roots = [cmath.rect(rng.uniform(lo, hi), rng.uniform(0, 2 * math.pi)) for _ in range(degree)]
    return product_from_roots(CC, roots, degree), roots


def suite_analytic(seed=0, n=10, tol=1e-6):
    rng = random.Random(seed)
    checks = []
    c1, c2 = _Check("zero-products"), _Check("radius-inequality")
    worst = 0.0
    for _ in range(n):
        P, ra = random_complex_poly(rng, rng.randint(1, 5))
        Q, rb = random_complex_poly(rng, rng.randint(1, 5))
        rep = verify_zero_products(P, Q, tol=tol, seed=seed)
        worst = max(worst, rep["max_mismatch"])
        c1.record(rep["pass"], f"max mismatch {rep['max_mismatch']:.3g}")
        ri = radius_inequality_check(P, Q, seed=seed)
        c2.record(ri["pass"], f"lhs {ri['lhs']!r} < rhs {ri['rhs']!r}")
    c1.extra["max_mismatch"] = worst
    checks += [c1, c2]

    c = _Check("genus-1-factorization")
    gworst = 0.0
    for _ in range(n):
        f = GenusFactorization(1, (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),), ZeroSet.from_list(random_complex_poly(rng, rng.randint(1, 3))[1]))
        g = GenusFactorization(1, (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),), ZeroSet.from_list(random_complex_poly(rng, rng.randint(1, 3))[1]))
        _, _, rep = genus_factorization_ene(f, g, order=12, tol=1e-9)
        gworst = max(gworst, rep["max_mismatch"])
        c.record(rep["pass"] and rep["degree_ok"], f"mismatch {rep['max_mismatch']:.3g}")
    c.extra["max_mismatch"] = gworst
    checks.append(c)

    c = _Check("single-weierstrass-factors")
    for rho in range(4):
        for _ in range(max(1, n // 5)):
            a, b = random_nonzero_fraction(rng), random_nonzero_fraction(rng)
            E = weierstrass_factor(rho, 12)
            lhs = ene(scale_argument(E, 1 / a), scale_argument(E, 1 / b))
            c.record(lhs == scale_argument(E, 1 / (a * b)), f"rho={rho}, a={a}, b={b}")
    checks.append(c)

    c = _Check("complex-vs-rational")
    for _ in range(n):
        f, g = random_unit_series(QQ, 12, rng), random_unit_series(QQ, 12, rng)
        exact = to_complex(ene(f, g), ComplexFloat(1e-12))
        approx = ene(to_complex(f, ComplexFloat(1e-12)), to_complex(g, ComplexFloat(1e-12)))
        c.record(exact == approx)
    checks.append(c)
    return _report("analytic", checks)


SUITES = {
    "ring-axioms": suite_ring_axioms,
    "ene-axioms": suite_ene_axioms,
    "main-formula": suite_main_formula,
    "hadamard": suite_hadamard,
    "operators": suite_operators,
    "rational": suite_rational,
    "analytic": suite_analytic,
}


def run_suite(name, seed=0, size="small"):
    """Run one suite (or ``all``) and return its report."""
    if size not in SIZES:
        raise ValueError(f"unknown size {size!r}; use one of {', '.join(SIZES)}")
    n = SIZES[size]
    if name == "all":
        reports = [fn(seed=seed, n=n) for fn in SUITES.values()]
        return {"suite": "all", "pass": all(r["pass"] for r in reports), "suites": reports}
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed=seed, n=n)
