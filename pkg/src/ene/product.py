"""The eñe product and friends.

Four independent ways of computing ``f * g`` (eñe):

* :func:`ene_exp` -- in logarithmic coordinates the product is termwise,
  ``log(f*g)_i = -i F_i G_i``.  Needs a Q-algebra.
* :func:`ene_universal` -- evaluate the integer polynomials ``Q_n`` on the
  coefficients.  Works over any commutative ring.
* :func:`ene_tensor` -- ``det(I - (M_P ⊗ M_Q) X)`` from companion matrices,
  for polynomials, division free.
* :func:`ene_roots` -- expand ``prod_{i,j} (1 - z/(alpha_i beta_j))``.

:func:`ene` picks a path from the ring.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertibleCoefficient, NotQAlgebra, RingMismatch
from .linalg import companion_matrix, det_series, kronecker
from .rings import CC, QQ
from .series import ExpForm, Series, series_exp, series_log
from .universal import default_cache

__all__ = [
    "ene",
    "ene_exp",
    "ene_exp_form",
    "ene_universal",
    "ene_roots",
    "ene_tensor",
    "ene_inverse",
    "is_zero_divisor",
    "ene_pow",
    "poly_ene",
    "unit",
]


def _pair(f, g):
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    f.require_unit("ene")
    g.require_unit("ene")
    return f.ring, min(f.order, g.order)


def unit(ring, order):
    """The eñe unit ``1 - X``."""
    return Series(ring, [ring.one(), ring.neg(ring.one())] + [ring.zero()] * (order - 1)) if order else Series.one(ring, 0)


def ene_exp_form(F, G):
    """``F *_e G = -sum i F_i G_i X^i`` on exponential coordinates."""
    ring = F.ring
    n = min(F.order, G.order)
    out = []
    for i in range(1, n + 1):
        out.append(ring.neg(ring.int_scale(i, ring.mul(F[i], G[i]))))
    return ExpForm(ring, tuple(out))


def ene_exp(f, g):
    ring, n = _pair(f, g)
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, "ene_exp")
    F = series_log(f.truncate(n))
    G = series_log(g.truncate(n))
    return series_exp(ene_exp_form(F, G))


def ene_universal(f, g, cache=None, cap=None):
    """Coefficients ``(-1)^n Q_n(a, b)`` with ``Q_n`` from the cache.

    Raises :class:`~ene.errors.QCapExceeded` when the order exceeds the cap.
    """
    ring, n = _pair(f, g)
    cache = cache or default_cache
    if n == 0:
        return Series.one(ring, 0)
    qs = cache.get_many(n, cap)
    a = f.coeffs[1 : n + 1]
    b = g.coeffs[1 : n + 1]
    # power tables shared by all Q_k
    pa = _power_table(ring, a, n)
    pb = _power_table(ring, b, n)
    out = [ring.one()]
    for k, q in enumerate(qs, start=1):
        acc = ring.zero()
        for e, c in q.poly.terms.items():
            term = None
            for i in range(k):
                if e[i]:
                    x = pa[i][e[i]]
                    term = x if term is None else ring.mul(term, x)
                if e[k + i]:
                    y = pb[i][e[k + i]]
                    term = y if term is None else ring.mul(term, y)
            acc = ring.add(acc, ring.int_scale(c, term))
        out.append(acc if k % 2 == 0 else ring.neg(acc))
    return Series(ring, out)


def _power_table(ring, values, top):
    table = []
    for v in values:
        row = [ring.one(), v]
        for _ in range(top - 1):
            row.append(ring.mul(row[-1], v))
        table.append(row)
    return table


def ene_roots(alphas, betas, order, ring=None):
    """``prod_{i,j} (1 - z/(alpha_i beta_j))`` to the given order.

    Exact over Q for rational roots; over C for complex ones.  ``ring``
    defaults to Q when every root is an int or Fraction, else C.
    """
    alphas, betas = list(alphas), list(betas)
    if ring is None:
        exact = all(isinstance(r, (int, Fraction)) for r in alphas + betas)
        ring = QQ if exact else CC
    roots = []
    for a in alphas:
        for b in betas:
            ab = ring.mul(ring.coerce(a), ring.coerce(b))
            if ring.is_zero(ab):
                raise ZeroDivisionError("roots must be nonzero")
            roots.append(ab)
    return product_from_roots(ring, roots, order)


def product_from_roots(ring, roots, order):
    """``prod (1 - z/r)`` truncated at ``order``."""
    coeffs = [ring.one()] + [ring.zero()] * order
    for r in roots:
        c = ring.neg(ring.inverse(ring.coerce(r)))
        for k in range(order, 0, -1):
            coeffs[k] = ring.add(coeffs[k], ring.mul(c, coeffs[k - 1]))
    return Series(ring, coeffs)


def ene_tensor(P, Q, order=None):
    """``det(I - (M_P ⊗ M_Q) X)`` for polynomial inputs."""
    ring, n = _pair(P, Q)
    if order is None:
        order = n
    if P.degree() < 1 or Q.degree() < 1:
        return Series.one(ring, order)
    M = kronecker(companion_matrix(P), companion_matrix(Q))
    return det_series(M, order)


def _lift_ene(f, g):
    ring = f.ring
    qring, up, down = ring.lift()
    h = ene_exp(f.map(up, qring), g.map(up, qring))
    return h.map(down, ring)


def ene(f, g, method="auto"):
    """Eñe product of two unit series.

    ``method`` is one of ``auto``, ``exp``, ``universal``, ``lift`` or
    ``tensor``.  ``auto`` uses the exponential form on exact Q-algebras.  On
    quotients of Z (and polynomial rings over them) it lifts the
    coefficients to Q, multiplies there and maps back, which is exact since
    every ``Q_n`` has integer coefficients.  Complex floats are lifted to
    Q(i) at their binary value, so the result is the exact product rounded
    once.  Other rings use the universal polynomials.
    """
    ring, _ = _pair(f, g)
    if method == "auto":
        lift = ring.lift()
        if ring.is_q_algebra and ring.exact:
            method = "exp"
        elif lift is not None:
            method = "lift"
        elif ring.is_q_algebra:
            method = "exp"
        else:
            method = "universal"
    if method == "exp":
        return ene_exp(f, g)
    if method == "universal":
        return ene_universal(f, g)
    if method == "lift":
        return _lift_ene(f, g)
    if method == "tensor":
        return ene_tensor(f, g)
    raise ValueError(f"unknown method {method!r}")


def poly_ene(P, Q):
    """Exact eñe product of two polynomials, returned at order ``deg P * deg Q``."""
    dp, dq = max(P.degree(), 0), max(Q.degree(), 0)
    top = max(dp * dq, 1)
    return ene(P.pad(top), Q.pad(top))


def ene_inverse(f):
    """Eñe inverse: ``g`` with ``f * g = 1 - X``; ``G_i = 1/(i^2 F_i)``."""
    f.require_unit("ene_inverse")
    ring = f.ring
    F = series_log(f)
    G = []
    for i in range(1, F.order + 1):
        try:
            inv = ring.inverse(F[i])
        except ZeroDivisionError:
            raise NotInvertibleCoefficient(i, ring.encode(F[i])) from None
        G.append(ring.int_divide(inv, i * i))
    return series_exp(ExpForm(ring, tuple(G)))


def is_zero_divisor(f):
    """``(True, i)`` for the first ``F_i`` that is zero or a zero divisor,
    ``(False, None)`` otherwise.  The verdict only covers ``i <= order``."""
    f.require_unit("is_zero_divisor")
    ring = f.ring
    F = series_log(f)
    for i in range(1, F.order + 1):
        if ring.is_zero_divisor(F[i]):
            return True, i
    return False, None


def ene_pow(f, n):
    """``f * f * ... * f`` (``n`` factors)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    ring = f.ring
    f.require_unit("ene_pow")
    if ring.is_q_algebra:
        F = series_log(f)
        sign = ring.one() if n % 2 == 1 else ring.neg(ring.one())
        H = []
        for i in range(1, F.order + 1):
            H.append(ring.mul(sign, ring.int_scale(i ** (n - 1), ring.pow(F[i], n))))
        return series_exp(ExpForm(ring, tuple(H)))
    result = f
    for _ in range(n - 1):
        result = ene(result, f)
    return result
