import math
import random
from fractions import Fraction

import pytest

import oracles
from ene.errors import NotQAlgebra
from ene.product import ene, ene_universal
from ene.rings import QQ, IntegersMod, mobius
from ene.series import ExpForm, Series, exp_log_derivative, exp_truncate, series_exp, series_log, substitute_power
from ene.transforms import (
    FractionalSeries,
    artin_hasse,
    artin_hasse_action,
    convolution_check,
    cyclotomic_like,
    dilate,
    ene_by_IN,
    exp_monomial,
    fractional_power,
    hecke,
    in_ideal_Jn,
    in_subring_AN,
    weierstrass_factor,
)


def rand_unit(rng, order):
    return Series(QQ, [Fraction(1)] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)])


def expo(values, order):
    """exp(sum values[i] X^i) with values a dict index -> coefficient."""
    return series_exp(ExpForm(QQ, tuple(Fraction(values.get(i, 0)) for i in range(1, order + 1))))


def test_weierstrass_factors():
    assert list(weierstrass_factor(0, 3).coeffs) == [1, -1, 0, 0]
    assert ene(weierstrass_factor(2, 8), weierstrass_factor(3, 8)) == weierstrass_factor(3, 8)
    with pytest.raises(NotQAlgebra):
        weierstrass_factor(2, 5, IntegersMod(7))


def test_root_of_unity_products_carry_gcd_power():
    order = 36
    assert ene(cyclotomic_like(2, order), cyclotomic_like(3, order)) == cyclotomic_like(6, order)
    assert ene(cyclotomic_like(2, order), cyclotomic_like(2, order)) == cyclotomic_like(2, order) ** 2
    for N in range(1, 7):
        for M in range(1, 7):
            lhs = ene(cyclotomic_like(N, order), cyclotomic_like(M, order))
            assert lhs == cyclotomic_like(math.lcm(N, M), order) ** math.gcd(N, M)


def test_root_of_unity_action_scales_by_index():
    f = expo({1: 1, 2: 1, 3: 1, 4: 1}, 8)
    assert ene_by_IN(2, f) == expo({2: 2, 4: 2}, 8)
    assert ene(cyclotomic_like(2, 8), f) == ene_by_IN(2, f)
    assert ene_by_IN(1, f) == f
    rng = random.Random(0)
    for _ in range(5):
        g = rand_unit(rng, 12)
        for N in range(1, 5):
            assert ene_by_IN(N, g) == ene(cyclotomic_like(N, 12), g)


def test_artin_hasse():
    assert artin_hasse(2, 4) == expo({1: 1, 2: Fraction(1, 2), 4: Fraction(1, 4)}, 4)
    F = series_log(artin_hasse(3, 27))
    assert all(F[i] == 0 for i in range(1, 28) if i not in (1, 3, 9, 27))
    with pytest.raises(ValueError):
        artin_hasse(4, 8)
    rng = random.Random(1)
    f = rand_unit(rng, 9)
    h = ene_universal(artin_hasse(3, 9), f)
    assert h == artin_hasse_action(3, f)
    H = series_log(h)
    assert all(H[i] == 0 for i in range(1, 10) if i not in (1, 3, 9))


def test_mobius_product_gives_exp_of_minus_x():
    N = 24
    prod = Series.one(QQ, N)
    for n in range(1, N + 1):
        prod = prod * fractional_power(cyclotomic_like(n, N), Fraction(mobius(n), n))
    assert prod == expo({1: -1}, N)
    # with the opposite exponents the product is exp(X)
    inv = Series.one(QQ, N)
    for n in range(1, N + 1):
        inv = inv * fractional_power(cyclotomic_like(n, N), Fraction(-mobius(n), n))
    assert list(inv.coeffs) == [Fraction(1, math.factorial(k)) for k in range(N + 1)]
    # and the factors prime to p give the Artin-Hasse exponential
    for p in (2, 3, 5):
        ah = Series.one(QQ, N)
        for n in range(1, N + 1):
            if n % p:
                ah = ah * fractional_power(cyclotomic_like(n, N), Fraction(-mobius(n), n))
        assert ah == artin_hasse(p, N)


def test_fractional_powers():
    f = Series.from_values(QQ, [1, 1], 8)
    half = fractional_power(f, Fraction(1, 2))
    assert half * half == f
    # binomial series
    a = Fraction(1, 3)
    want = [Fraction(1)]
    for n in range(1, 9):
        want.append(want[-1] * (a - n + 1) / n)
    assert list(fractional_power(f, a).coeffs) == want
    rng = random.Random(2)
    g, h = rand_unit(rng, 10), rand_unit(rng, 10)
    assert ene(fractional_power(g, a), h) == fractional_power(ene(g, h), a)


def test_exp_monomial_products():
    assert ene(exp_monomial(1, 1, 8), exp_monomial(1, 1, 8)) == exp_monomial(-1, 1, 8)
    assert ene(exp_monomial(2, 2, 8), exp_monomial(3, 3, 8)) == Series.one(QQ, 8)
    rng = random.Random(3)
    f = rand_unit(rng, 10)
    F = series_log(f)
    for n in range(1, 6):
        a = Fraction(rng.randint(1, 5), 2)
        assert ene(f, exp_monomial(a, n, 10)) == exp_monomial(-n * a * F[n], n, 10)


def test_hecke_and_dilation():
    rng = random.Random(4)
    f = rand_unit(rng, 24)
    assert hecke(1, f) == f
    assert hecke(2, hecke(3, f)) == hecke(6, f)
    for n in range(1, 7):
        assert fractional_power(dilate(n, ene(cyclotomic_like(n, 24), f)).to_series(), Fraction(1, n)) == hecke(n, f)
        # the dilated product is the n-th power
        assert dilate(n, ene(cyclotomic_like(n, 24), f)) == hecke(n, f) ** n
    assert dilate(1, f) == f
    assert dilate(2, dilate(3, f)) == dilate(6, f)
    assert dilate(Fraction(1, 2), dilate(2, f)) == f
    assert dilate(Fraction(2, 3), dilate(Fraction(3, 5), f)) == dilate(Fraction(2, 5), f)
    with pytest.raises(ValueError):
        dilate(0, f)


def test_fractional_series_canonical_form():
    f = Series.from_values(QQ, [1, 0, 3, 0, 5])
    c = FractionalSeries(2, f).canonical()
    assert c.denom == 1 and list(c.body.coeffs) == [1, 3, 5]
    g = dilate(3, Series.from_values(QQ, [1, 1, 1]))
    assert g.denom == 3
    with pytest.raises(ValueError):
        g.to_series()


def test_dilation_commutes_with_hecke_when_coprime():
    rng = random.Random(5)
    f = rand_unit(rng, 20)
    for n in range(1, 5):
        for lam in (Fraction(2), Fraction(3), Fraction(1, 5), Fraction(5, 7)):
            if math.gcd(n, lam.denominator) == 1:
                assert dilate(lam, hecke(n, f)) == hecke(n, dilate(lam, f))


def test_dilation_commutes_with_hecke_counterexample():
    # R_(1/2) sends X^k to X^(2k); then T(2) reads back every coefficient,
    # while T(2) first drops the odd ones
    f = expo({1: 1, 2: 1}, 8)
    lam = Fraction(1, 2)
    assert dilate(lam, hecke(2, f)) != hecke(2, dilate(lam, f))


def test_convolution_kernel():
    order = 10
    e = Series.from_values(QQ, [1, -1], order)
    assert convolution_check(e) == exp_log_derivative(e)
    assert convolution_check(Series.one(QQ, order)) == Series.one(QQ, order)
    rng = random.Random(6)
    f = rand_unit(rng, order)
    kernel = Series(QQ, oracles.exp([Fraction(0)] + [Fraction(-1)] * order))
    assert convolution_check(f) == ene(kernel, f)


def test_exp_support_bound():
    # exp(X P(X)) * f = exp(X Q(X)) with deg Q <= deg P
    rng = random.Random(7)
    for d in range(4):
        g = expo({i: rng.randint(1, 4) for i in range(1, d + 2)}, 12)
        h = series_log(ene(g, rand_unit(rng, 12)))
        assert all(h[i] == 0 for i in range(d + 2, 13))


def test_subring_and_ideal_membership():
    N = 3
    E = weierstrass_factor(N, 10)
    unit_N = Series.from_values(QQ, [1, -1], 10) / E
    assert in_subring_AN(unit_N, N)
    assert not in_subring_AN(E, N)
    assert not in_subring_AN(expo({N + 1: 1}, 10), N)
    one = Series.one(QQ, 6)
    assert all(in_ideal_Jn(one, n) for n in range(1, 7))
    e = Series.from_values(QQ, [1, -1], 6)
    assert not any(in_ideal_Jn(e, n) for n in range(1, 7))
    f = expo({1: 1, 3: 2}, 6)
    assert in_ideal_Jn(f, 2)
    rng = random.Random(8)
    assert in_ideal_Jn(ene(f, rand_unit(rng, 6)), 2)
    with pytest.raises(ValueError):
        in_ideal_Jn(f, 7)


def test_exp_truncation_is_a_ring_map():
    rng = random.Random(9)
    for _ in range(10):
        f, g = rand_unit(rng, 12), rand_unit(rng, 12)
        N = rng.randint(1, 12)
        assert exp_truncate(ene(f, g), N) == ene(exp_truncate(f, N), exp_truncate(g, N))
        assert exp_truncate(f * g, N) == exp_truncate(f, N) * exp_truncate(g, N)
    assert exp_truncate(Series.from_values(QQ, [1, -1], 6), 2) == expo({1: -1, 2: Fraction(-1, 2)}, 6)
    assert exp_truncate(weierstrass_factor(3, 8), 3) == Series.one(QQ, 8)


def test_power_substitution_laws():
    rng = random.Random(10)
    N = 24
    for _ in range(5):
        f, g = rand_unit(rng, N), rand_unit(rng, N)
        for k in (2, 3):
            assert ene(substitute_power(f, k), substitute_power(g, k)) == substitute_power(ene(f, g), k) ** k
        # coprime k, l: the zeros a^(1/k) e and b^(1/l) e' multiply to (a^l b^k)^(1/kl) times every kl-th root of 1
        k, l = 2, 3
        lhs = ene(substitute_power(f, k), substitute_power(g, l))
        inner = ene(hecke(l, f) ** l, hecke(k, g) ** k)
        assert lhs == substitute_power(inner, k * l)


def test_power_substitution_with_coprime_exponents_is_not_plain_substitution():
    f = Series.from_values(QQ, [1, -2], 6)
    g = Series.from_values(QQ, [1, -3], 6)
    lhs = ene(substitute_power(f, 2), substitute_power(g, 3))
    assert list(lhs.coeffs) == [1, 0, 0, 0, 0, 0, -72]  # 1 - 2^3 3^2 X^6
    assert lhs != substitute_power(ene(f, g), 6)
