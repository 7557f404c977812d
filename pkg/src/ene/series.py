"""Truncated power series over a ring.

A :class:`Series` of order ``N`` stores ``c_0 .. c_N`` and stands for its
class in ``A[[X]] / (X^(N+1))``.  Binary operations return the minimum of
the input orders; the coefficient of ``X^n`` of every operation here only
depends on input coefficients up to ``n``, so nothing is lost.

Series with ``c_0 = 1`` form the multiplicative group on which the eñe
product lives.  Their logarithms are stored as :class:`ExpForm`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotQAlgebra, NotUnitSeries, RingMismatch
from .rings import Ring, RingElem, parse_ring

__all__ = [
    "Series",
    "ExpForm",
    "series_mul",
    "series_invert",
    "series_log",
    "series_exp",
    "log_derivative",
    "derivative",
    "exp_log_derivative",
    "scale_argument",
    "substitute_power",
    "truncate",
    "exp_truncate",
    "hadamard",
    "koebe",
    "geometric",
]


def _same_ring(f, g):
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    return f.ring


class Series:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.ring = ring
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_values(cls, ring, values, order=None):
        """Coerce Python values into ``ring``; pad with zeros up to ``order``."""
        coeffs = [ring.coerce(v) for v in values]
        if order is not None:
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        return cls(ring, coeffs)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, [ring.one()] + [ring.zero()] * order)

    @classmethod
    def zeros(cls, ring, order):
        return cls(ring, [ring.zero()] * (order + 1))

    @classmethod
    def monomial(cls, ring, order, k, c=None):
        coeffs = [ring.zero()] * (order + 1)
        if k <= order:
            coeffs[k] = ring.one() if c is None else c
        return cls(ring, coeffs)

    @classmethod
    def x(cls, ring, order):
        return cls.monomial(ring, order, 1)

    # -- basic accessors ------------------------------------------------
    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def is_unit(self):
        return self.ring.is_one(self.coeffs[0])

    def require_unit(self, what="operation"):
        if not self.is_unit():
            raise NotUnitSeries(f"{what} needs constant coefficient 1, got {self.ring.encode(self.coeffs[0])}")
        return self

    def degree(self):
        """Index of the last nonzero coefficient (-1 for the zero series)."""
        # inexact rings: only an exact 0 ends a polynomial
        is_zero = self.ring.is_zero if self.ring.exact else (lambda c: c == 0)
        for k in range(self.order, -1, -1):
            if not is_zero(self.coeffs[k]):
                return k
        return -1

    def truncate(self, order):
        return truncate(self, order)

    def pad(self, order):
        """Extend with zero coefficients, i.e. treat ``self`` as a polynomial."""
        if order <= self.order:
            return truncate(self, order)
        return Series(self.ring, self.coeffs + (self.ring.zero(),) * (order - self.order))

    def map(self, fn, ring=None):
        return Series(ring or self.ring, [fn(c) for c in self.coeffs])

    # -- arithmetic -----------------------------------------------------
    def _coerce_other(self, other):
        if isinstance(other, Series):
            _same_ring(self, other)
            return other
        return Series.monomial(self.ring, self.order, 0, self.ring.coerce(other))

    def __add__(self, other):
        other = self._coerce_other(other)
        add = self.ring.add
        return Series(self.ring, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self.map(self.ring.neg)

    def __sub__(self, other):
        other = self._coerce_other(other)
        sub = self.ring.sub
        return Series(self.ring, [sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        return _cauchy(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce_other(other)
        return _cauchy(self, _invert(other))

    def __rtruediv__(self, other):
        return self._coerce_other(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            from .transforms import fractional_power

            return fractional_power(self, n)
        if n < 0:
            return _invert(self) ** (-n)
        result = Series.one(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __matmul__(self, other):
        from .product import ene

        return ene(self, other)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.ring != other.ring:
            return False
        eq = self.ring.eq
        return all(eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def close_to(self, other, tol):
        """Coefficientwise ``|a - b| <= tol * max(1, |a|, |b|)`` (numeric rings)."""
        return all(abs(a - b) <= tol * max(1.0, abs(a), abs(b)) for a, b in zip(self.coeffs, other.coeffs))

    # -- text -----------------------------------------------------------
    def pretty(self, var="X"):
        ring = self.ring
        parts = []
        for k, c in enumerate(self.coeffs):
            if ring.is_zero(c):
                continue
            negative, mag = ring.split_sign(c)
            if k == 0:
                body = ring.format_coeff(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if ring.is_one(mag) else f"{ring.format_coeff(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        if not parts:
            parts.append("0")
        parts.append(f"+ O({var}^{self.order + 1})")
        return " ".join(parts)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Series({self.ring}, {self.pretty()})"

    def to_json_obj(self):
        return {
            "ring": self.ring.descriptor(),
            "order": self.order,
            "coeffs": [_encode_json(self.ring, c) for c in self.coeffs],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj):
        ring = parse_ring(obj["ring"])
        coeffs = [_decode_json(ring, c) for c in obj["coeffs"]]
        if len(coeffs) != obj["order"] + 1:
            raise ValueError("coefficient count does not match order")
        return cls(ring, coeffs)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def _encode_json(ring, c):
    if ring.kind == "complex-float":
        return [c.real, c.imag]
    return ring.encode(c)


def _decode_json(ring, c):
    if isinstance(c, list):
        return complex(c[0], c[1])
    return ring.decode(c) if isinstance(c, str) else ring.coerce(c)


@dataclass(frozen=True)
class ExpForm:
    """Logarithm coordinates ``F_1..F_N`` of a unit series: ``f = exp(sum F_i X^i)``."""

    ring: Ring
    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        """1-based access: ``F[i]`` is ``F_i``."""
        if i < 1:
            raise IndexError("exponential coordinates start at index 1")
        return self.coeffs[i - 1]

    def as_series(self):
        """``sum F_i X^i`` as an ordinary series with zero constant term."""
        return Series(self.ring, (self.ring.zero(),) + tuple(self.coeffs))

    @classmethod
    def from_series(cls, s):
        if not s.ring.is_zero(s[0]):
            raise ValueError("exponent series must have zero constant term")
        return cls(s.ring, tuple(s.coeffs[1:]))

    @classmethod
    def from_values(cls, ring, values):
        return cls(ring, tuple(ring.coerce(v) for v in values))

    def __eq__(self, other):
        if not isinstance(other, ExpForm) or self.ring != other.ring:
            return NotImplemented
        eq = self.ring.eq
        return all(eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None


# ---------------------------------------------------------------------------
# kernels


def _cauchy(f, g):
    ring = _same_ring(f, g)
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    add, mul = ring.add, ring.mul
    zero = ring.zero()
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            acc = add(acc, mul(a[i], b[k - i]))
        out.append(acc)
    return Series(ring, out)


def _invert(f):
    ring = f.ring
    inv0 = ring.inverse(f[0])
    a = f.coeffs
    add, mul = ring.add, ring.mul
    out = [inv0]
    for k in range(1, f.order + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            acc = add(acc, mul(a[i], out[k - i]))
        out.append(ring.neg(mul(inv0, acc)))
    return Series(ring, out)


def _log_derivative_coeffs(f):
    # h = f'/f from (k+1) f_{k+1} = sum_{j=0..k} f_j h_{k-j}, with f_0 = 1
    ring = f.ring
    a = f.coeffs
    add, sub, mul = ring.add, ring.sub, ring.mul
    h = []
    for k in range(f.order):
        acc = ring.int_scale(k + 1, a[k + 1])
        for j in range(1, k + 1):
            acc = sub(acc, mul(a[j], h[k - j]))
        h.append(acc)
    return h


# ---------------------------------------------------------------------------
# operations


def series_mul(f, g):
    """Product in the multiplicative group of unit series."""
    f.require_unit("series_mul")
    g.require_unit("series_mul")
    return _cauchy(f, g)


def series_invert(f):
    """Inverse ``g`` of a unit series: ``f*g = 1`` to the order of ``f``."""
    f.require_unit("series_invert")
    return _invert(f)


def derivative(f):
    """Formal derivative ``f'``; the order drops by one."""
    ring = f.ring
    if f.order == 0:
        return Series(ring, [ring.zero()])
    return Series(ring, [ring.int_scale(k, f[k]) for k in range(1, f.order + 1)])


def log_derivative(f):
    """``f'/f`` to order ``N-1``; no division by integers is needed."""
    f.require_unit("log_derivative")
    if f.order == 0:
        return Series(f.ring, [f.ring.zero()])
    return Series(f.ring, _log_derivative_coeffs(f))


def series_log(f):
    """Exponential coordinates of a unit series: ``F`` with ``exp(F) = f``."""
    f.require_unit("series_log")
    ring = f.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, "series_log")
    h = _log_derivative_coeffs(f)
    return ExpForm(ring, tuple(ring.int_divide(h[i - 1], i) for i in range(1, f.order + 1)))


def series_exp(F):
    """``exp`` of an :class:`ExpForm` (or of a series with zero constant term).

    Uses ``n g_n = sum_{k=1..n} k F_k g_{n-k}``, which follows from ``g' = F' g``.
    """
    if isinstance(F, Series):
        F = ExpForm.from_series(F)
    ring = F.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, "series_exp")
    N = F.order
    add, mul = ring.add, ring.mul
    kF = [None] + [ring.int_scale(k, F.coeffs[k - 1]) for k in range(1, N + 1)]
    nonzero = [k for k in range(1, N + 1) if not ring.is_zero(kF[k])]
    g = [ring.one()]
    for n in range(1, N + 1):
        acc = ring.zero()
        for k in nonzero:
            if k > n:
                break
            acc = add(acc, mul(kF[k], g[n - k]))
        g.append(ring.int_divide(acc, n))
    return Series(ring, g)


def exp_log_derivative(f):
    """``exp(X * f'/f)``, a group endomorphism of unit series."""
    f.require_unit("exp_log_derivative")
    ring = f.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, "exp_log_derivative")
    h = _log_derivative_coeffs(f)
    return series_exp(ExpForm(ring, tuple(h)))


def scale_argument(f, a):
    """``f(aX)``: ``c_k -> a^k c_k``."""
    ring = f.ring
    a = a.value if isinstance(a, RingElem) else ring.coerce(a)
    out = []
    p = ring.one()
    for c in f.coeffs:
        out.append(ring.mul(p, c))
        p = ring.mul(p, a)
    return Series(ring, out)


def substitute_power(f, k):
    """``f(X^k)`` truncated at the order of ``f``."""
    if k < 1:
        raise ValueError("power must be a positive integer")
    ring = f.ring
    out = [ring.zero()] * (f.order + 1)
    for i in range(0, f.order // k + 1):
        out[i * k] = f[i]
    return Series(ring, out)


def truncate(f, M):
    if M > f.order:
        raise ValueError(f"cannot truncate order {f.order} series to order {M}")
    if M < 0:
        raise ValueError("order must be nonnegative")
    return Series(f.ring, f.coeffs[: M + 1])


def exp_truncate(f, M):
    """``exp(T_M(log f))`` at the order of ``f``: keep ``F_1..F_M``."""
    if M > f.order:
        raise ValueError(f"cannot exp-truncate order {f.order} series at {M}")
    F = series_log(f)
    zero = f.ring.zero()
    kept = tuple(c if i <= M else zero for i, c in enumerate(F.coeffs, start=1))
    return series_exp(ExpForm(f.ring, kept))


def hadamard(f, g):
    """Coefficientwise product, constant term included."""
    ring = _same_ring(f, g)
    mul = ring.mul
    return Series(ring, [mul(a, b) for a, b in zip(f.coeffs, g.coeffs)])


def koebe(order, ring):
    """``X/(1-X)^2 = sum n X^n``."""
    return Series(ring, [ring.from_int(n) for n in range(order + 1)])


def geometric(order, ring, start=0):
    """``sum_{n >= start} X^n``; with ``start=0`` this is the unit of :func:`hadamard`."""
    return Series(ring, [ring.zero()] * start + [ring.one()] * (order + 1 - start))
