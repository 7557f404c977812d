"""Property tests for the structural invariants."""

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ene.analytic import ZeroSet, radius_inequality_check, to_complex
from ene.linalg import RingMatrix, det_series, kronecker
from ene.product import ene, product_from_roots, unit
from ene.rational import ShiftedPoly, ene_shifted
from ene.rings import QQ, ZZ, ComplexFloat, IntegersMod
from ene.series import (
    ExpForm,
    Series,
    derivative,
    exp_truncate,
    hadamard,
    log_derivative,
    scale_argument,
    series_exp,
    series_log,
)
from ene.transforms import dilate, exp_monomial, fractional_power, hecke
from ene.universal import univ_poly

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
FAST = settings(max_examples=40, deadline=None)
SLOW = settings(max_examples=10, deadline=None)

RINGS = [QQ, ZZ, IntegersMod(7), IntegersMod(6), ComplexFloat(1e-9)]


def elems(ring):
    if ring is QQ:
        return small_fracs
    if ring is ZZ:
        return st.integers(-20, 20)
    if isinstance(ring, IntegersMod):
        return st.integers(0, ring.m - 1)
    return st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


def series_elems(ring):
    # float coefficients stay small enough that 1/f has bounded coefficients
    # and an absolute tolerance is meaningful
    if isinstance(ring, ComplexFloat):
        return st.complex_numbers(max_magnitude=0.015, allow_nan=False, allow_infinity=False)
    return elems(ring)


def unit_series(ring=QQ, min_order=1, max_order=12):
    return st.integers(min_order, max_order).flatmap(
        lambda n: st.lists(series_elems(ring), min_size=n, max_size=n).map(lambda cs: Series(ring, [ring.one()] + [ring.coerce(c) for c in cs]))
    )


def pairs(ring=QQ, order=10):
    return st.tuples(unit_series(ring, order, order), unit_series(ring, order, order))


RING_IDS = ["Q", "Z", "Zmod7", "Zmod6", "C"]


@pytest.mark.parametrize("ring", RINGS, ids=RING_IDS)
def test_coefficient_ring_axioms(ring):
    eq, add, mul = ring.eq, ring.add, ring.mul

    @settings(max_examples=1000, deadline=None)
    @given(elems(ring), elems(ring), elems(ring))
    def check(a, b, c):
        a, b, c = ring.coerce(a), ring.coerce(b), ring.coerce(c)
        assert eq(add(a, b), add(b, a)) and eq(mul(a, b), mul(b, a))
        assert eq(add(add(a, b), c), add(a, add(b, c)))
        assert eq(mul(mul(a, b), c), mul(a, mul(b, c)))
        assert eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        assert eq(add(a, ring.zero()), a) and eq(mul(a, ring.one()), a)
        assert ring.is_zero(add(a, ring.neg(a)))

    check()


@pytest.mark.parametrize("ring", RINGS, ids=RING_IDS)
def test_integer_action_is_repeated_addition(ring):
    @FAST
    @given(elems(ring), st.integers(0, 16), st.integers(1, 20))
    def check(a, n, m):
        a = ring.coerce(a)
        acc = ring.zero()
        for _ in range(n):
            acc = ring.add(acc, a)
        assert ring.eq(ring.int_scale(n, a), acc)
        if ring.is_q_algebra:
            assert ring.eq(ring.int_divide(ring.int_scale(m, a), m), a)

    check()


@pytest.mark.parametrize("ring", RINGS, ids=RING_IDS)
def test_multiplicative_group_laws(ring):
    @settings(max_examples=500, deadline=None)
    @given(unit_series(ring, 1, 32), unit_series(ring, 1, 32), unit_series(ring, 1, 32))
    def check(f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        one = Series.one(ring, f.order)
        inv = 1 / f
        assert f * inv == one and inv * f == one

    check()


@SLOW
@given(unit_series(QQ, 1, 64))
def test_exp_log_round_trip(f):
    F = series_log(f)
    assert series_exp(F) == f
    assert series_log(series_exp(F)) == F


@FAST
@given(st.lists(small_fracs, min_size=1, max_size=20))
def test_log_derivative_of_exp_is_derivative(F):
    E = ExpForm(QQ, tuple(F))
    assert log_derivative(series_exp(E)) == derivative(E.as_series())


@FAST
@given(pairs(QQ, 10), st.integers(1, 10))
def test_exp_truncation_is_a_ring_map(fg, M):
    f, g = fg
    assert exp_truncate(f * g, M) == exp_truncate(f, M) * exp_truncate(g, M)
    assert exp_truncate(ene(f, g), M) == ene(exp_truncate(f, M), exp_truncate(g, M))


@FAST
@given(pairs(QQ, 8), unit_series(QQ, 8, 8))
def test_ene_ring_axioms_over_q(fg, h):
    f, g = fg
    assert ene(f, g) == ene(g, f)
    assert ene(f * g, h) == ene(f, h) * ene(g, h)
    assert ene(ene(f, g), h) == ene(f, ene(g, h))
    assert ene(unit(QQ, 8), f) == f
    assert list(ene(f, g).coeffs) == oracles.ene(list(f.coeffs), list(g.coeffs))


@SLOW
@given(st.sampled_from([ZZ, IntegersMod(6), IntegersMod(7)]).flatmap(lambda r: st.tuples(unit_series(r, 6, 6), unit_series(r, 6, 6), unit_series(r, 6, 6))))
def test_ene_ring_axioms_over_quotients_of_z(fgh):
    f, g, h = fgh
    assert ene(f, g) == ene(g, f)
    assert ene(f * g, h) == ene(f, h) * ene(g, h)
    assert ene(ene(f, g), h) == ene(f, ene(g, h))
    assert ene(Series.one(f.ring, 6), f) == Series.one(f.ring, 6)


@FAST
@given(pairs(QQ, 8), small_fracs)
def test_argument_scaling(fg, a):
    f, g = fg
    assert ene(scale_argument(f, a), g) == scale_argument(ene(f, g), a)
    assert ene(f, exp_monomial(a, 1, 8)) == exp_monomial(-a * f[1], 1, 8)


@FAST
@given(pairs(QQ, 10))
def test_hadamard_twists(fg):
    f, g = fg
    h = ene(f, g)
    assert log_derivative(h) == -hadamard(log_derivative(f), log_derivative(g))
    F, G = series_log(f).as_series(), series_log(g).as_series()
    H = series_log(h).as_series()
    assert derivative(H) == -hadamard(derivative(F), derivative(G))


@FAST
@given(pairs(QQ, 8), small_fracs.filter(bool))
def test_fractional_powers_pass_through(fg, a):
    f, g = fg
    assert ene(fractional_power(f, a), g) == fractional_power(ene(f, g), a)


@FAST
@given(unit_series(QQ, 20, 20), st.integers(1, 4), st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7))
def test_dilation_commutes_with_hecke(f, n, lam):
    if math.gcd(n, lam.denominator) == 1:
        assert dilate(lam, hecke(n, f)) == hecke(n, dilate(lam, f))
    mu = Fraction(2, 3)
    assert dilate(lam, dilate(mu, f)) == dilate(lam * mu, f)


def int_matrices(d):
    return st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d), min_size=d, max_size=d)


@SLOW
@given(st.integers(1, 3).flatmap(int_matrices), st.integers(1, 3).flatmap(int_matrices))
def test_tensor_product_of_determinants(A, B):
    M, N = RingMatrix.from_rows(ZZ, A), RingMatrix.from_rows(ZZ, B)
    order = len(A) * len(B)
    lhs = ene(det_series(M, order), det_series(N, order))
    assert lhs == det_series(kronecker(M, N), order)


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 12))
def test_universal_polynomial_invariants(p):
    q = univ_poly(p)
    poly = q.poly if p % 2 == 0 else -q.poly
    lead = tuple(1 if i in (p - 1, 2 * p - 1) else 0 for i in range(2 * p))
    assert poly.terms[lead] == -p
    for e, c in poly.terms.items():
        assert type(c) is int
        assert sum((i + 1) * e[i] for i in range(p)) == p
        assert sum((i + 1) * e[p + i] for i in range(p)) == p
        if e != lead:
            assert not (e[p - 1] and e[2 * p - 1])


shifted = st.tuples(st.integers(0, 2), st.lists(st.integers(-3, 3), max_size=2)).map(
    lambda t: ShiftedPoly(t[0], Series.from_values(QQ, [1] + t[1]))
)


@FAST
@given(shifted, shifted, shifted)
def test_shifted_ring_laws(a, b, c):
    assert ene_shifted(a, b) == ene_shifted(b, a)
    assert ene_shifted(a, b * c) == ene_shifted(a, b) * ene_shifted(a, c)


roots = st.tuples(st.floats(0.5, 2.0), st.floats(0, 2 * math.pi)).map(lambda t: cmath.rect(*t))


@FAST
@given(st.lists(roots, min_size=1, max_size=4), st.lists(roots, min_size=1, max_size=4))
def test_radius_inequality(ra, rb):
    P = product_from_roots(ComplexFloat(), ra, len(ra))
    Q = product_from_roots(ComplexFloat(), rb, len(rb))
    ri = radius_inequality_check(P, Q, zeros_f=ZeroSet.from_list(ra), zeros_g=ZeroSet.from_list(rb))
    assert ri["pass"]
    assert ri["lhs"] >= min(abs(a) for a in ra) * min(abs(b) for b in rb) * (1 - 1e-12)


@FAST
@given(pairs(QQ, 12))
def test_complex_path_matches_rational_path(fg):
    f, g = fg
    C = ComplexFloat(1e-12)
    assert to_complex(ene(f, g), C) == ene(to_complex(f, C), to_complex(g, C))
