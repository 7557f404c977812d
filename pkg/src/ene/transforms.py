"""Named unit series and operators acting in exponential coordinates.

Most of these are one-liners once a series is written ``f = exp(sum F_i X^i)``:
the Hecke operator decimates ``F``, eñe multiplication by ``1 - X^N`` keeps
the indices divisible by ``N``, exponential truncation drops the tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotQAlgebra
from .product import ene
from .rings import QQ, RingElem
from .series import (
    ExpForm,
    Series,
    exp_log_derivative,
    exp_truncate,
    series_exp,
    series_log,
)

__all__ = [
    "weierstrass_factor",
    "cyclotomic_like",
    "ene_by_IN",
    "artin_hasse",
    "artin_hasse_action",
    "fractional_power",
    "hecke",
    "FractionalSeries",
    "dilate",
    "convolution_check",
    "in_subring_AN",
    "in_ideal_Jn",
    "exp_monomial",
    "exp_truncate",
]


def _need_q(ring, what):
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, what)


def weierstrass_factor(N, order, ring=QQ):
    """``E_N = (1 - X) exp(X + X^2/2 + ... + X^N/N) = exp(-sum_{k>N} X^k/k)``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N == 0:
        return Series.from_values(ring, [1, -1], order)
    _need_q(ring, "weierstrass_factor")
    zero = ring.zero()
    F = tuple(zero if k <= N else ring.neg(ring.int_divide(ring.one(), k)) for k in range(1, order + 1))
    return series_exp(ExpForm(ring, F))


def cyclotomic_like(N, order, ring=QQ):
    """``I_N = 1 - X^N``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    s = Series.one(ring, order)
    if N > order:
        return s
    coeffs = list(s.coeffs)
    coeffs[N] = ring.neg(ring.one())
    return Series(ring, coeffs)


def _keep(F, pred):
    ring = F.ring
    zero = ring.zero()
    return ExpForm(ring, tuple(c if pred(i) else zero for i, c in enumerate(F.coeffs, start=1)))


def ene_by_IN(N, f):
    """``(1 - X^N) * f = exp(sum_k N F_{Nk} X^{Nk})``.

    ``log(1 - X^N)`` has ``-1/k`` at index ``Nk``, so the termwise product
    contributes the factor ``-Nk * (-1/k) = N``.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    ring = f.ring
    _need_q(ring, "ene_by_IN")
    kept = _keep(series_log(f), lambda i: i % N == 0)
    return series_exp(ExpForm(ring, tuple(ring.int_scale(N, c) for c in kept.coeffs)))


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_powers(p, order):
    k = 1
    while k <= order:
        yield k
        k *= p


def artin_hasse(p, order, ring=QQ):
    """``exp(X + X^p/p + X^(p^2)/p^2 + ...)``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    _need_q(ring, "artin_hasse")
    powers = set(_prime_powers(p, order))
    zero = ring.zero()
    F = tuple(ring.int_divide(ring.one(), i) if i in powers else zero for i in range(1, order + 1))
    return series_exp(ExpForm(ring, F))


def artin_hasse_action(p, f, start=0):
    """``exp(-sum_{k >= start} F_{p^k} X^{p^k})``.

    With ``start=0`` (the default) this equals ``artin_hasse(p) * f``; the
    ``X`` term of the Artin-Hasse exponential contributes ``-F_1 X``.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    ring = f.ring
    _need_q(ring, "artin_hasse_action")
    F = series_log(f)
    powers = set(list(_prime_powers(p, f.order))[start:])
    G = _keep(F, lambda i: i in powers)
    return series_exp(ExpForm(ring, tuple(ring.neg(c) for c in G.coeffs)))


def fractional_power(f, a):
    """``f^a = exp(a log f)`` for ``a`` in the coefficient ring."""
    ring = f.ring
    _need_q(ring, "fractional_power")
    f.require_unit("fractional_power")
    a = a.value if isinstance(a, RingElem) else ring.coerce(a)
    F = series_log(f)
    return series_exp(ExpForm(ring, tuple(ring.mul(a, c) for c in F.coeffs)))


def exp_monomial(a, n, order, ring=QQ):
    """``exp(a X^n)``."""
    _need_q(ring, "exp_monomial")
    zero = ring.zero()
    a = ring.coerce(a)
    return series_exp(ExpForm(ring, tuple(a if i == n else zero for i in range(1, order + 1))))


# ---------------------------------------------------------------------------
# Hecke and dilatation operators


@dataclass(frozen=True)
class FractionalSeries:
    """``body(X^(1/denom))``: a unit series in the variable ``U = X^(1/denom)``."""

    denom: int
    body: Series

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError("denominator must be positive")

    @classmethod
    def of(cls, f):
        return f if isinstance(f, FractionalSeries) else cls(1, f)

    def canonical(self):
        ring = self.body.ring
        g = self.denom
        for k in range(1, self.body.order + 1):
            if g == 1:
                break
            if not ring.is_zero(self.body[k]):
                g = math.gcd(g, k)
        if g == 1:
            return self
        order = self.body.order // g
        return FractionalSeries(self.denom // g, Series(ring, self.body.coeffs[: order * g + 1 : g]))

    def to_series(self):
        c = self.canonical()
        if c.denom != 1:
            raise ValueError(f"series has fractional exponents (denominator {c.denom})")
        return c.body

    def __eq__(self, other):
        if isinstance(other, Series):
            other = FractionalSeries(1, other)
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.denom == b.denom and a.body == b.body

    __hash__ = None

    def __str__(self):
        if self.denom == 1:
            return str(self.body)
        return f"{self.body.pretty('U')}  [U = X^(1/{self.denom})]"


def hecke(n, f):
    """``T(n) f = exp(sum_k F_{nk} X^k)``; result order is ``order // n``.

    On a :class:`FractionalSeries` the operator acts on the body of its
    canonical form, i.e. relative to the variable ``X^(1/denom)``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if isinstance(f, FractionalSeries):
        c = f.canonical()
        return FractionalSeries(c.denom, hecke(n, c.body))
    ring = f.ring
    _need_q(ring, "hecke")
    F = series_log(f)
    return series_exp(ExpForm(ring, tuple(F[n * k] for k in range(1, F.order // n + 1))))


def dilate(lam, f):
    """``R_lam f (X) = f(X^(1/lam))`` for positive rational ``lam``."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("dilatation factor must be positive")
    f = FractionalSeries.of(f)
    p, q = lam.numerator, lam.denominator
    body = f.body
    ring = body.ring
    # body(U^q) with U = X^(1/(denom*p)); known through U^(q(M+1)-1)
    order = q * (body.order + 1) - 1
    coeffs = [ring.zero()] * (order + 1)
    for k, c in enumerate(body.coeffs):
        coeffs[k * q] = c
    return FractionalSeries(f.denom * p, Series(ring, coeffs)).canonical()


# ---------------------------------------------------------------------------
# identities and membership tests


def convolution_check(f):
    """``exp(-X/(1-X)) * f``, asserted equal to ``exp(X f'/f)``."""
    ring = f.ring
    _need_q(ring, "convolution_check")
    kernel = series_exp(ExpForm(ring, tuple(ring.neg(ring.one()) for _ in range(f.order))))
    left = ene(kernel, f)
    right = exp_log_derivative(f)
    if left != right:
        raise AssertionError("convolution formula failed: eñe product and exp(X D f) differ")
    return left


def in_subring_AN(f, N):
    """``F_i = 0`` for ``N < i <= order``: membership of the truncated series."""
    _need_q(f.ring, "in_subring_AN")
    F = series_log(f)
    return all(f.ring.is_zero(F[i]) for i in range(N + 1, F.order + 1))


def in_ideal_Jn(f, n):
    """``F_n = 0``."""
    _need_q(f.ring, "in_ideal_Jn")
    if n > f.order:
        raise ValueError(f"order {f.order} is too small to decide F_{n}")
    return f.ring.is_zero(series_log(f)[n])
