"""Eñe product of rational functions and of polynomials with a power of X.

Polynomials are :class:`~ene.series.Series` whose order equals their degree.
A rational function is a pair of such polynomials, both with constant term 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import RingMismatch
from .product import ene, poly_ene
from .series import Series

__all__ = [
    "as_poly",
    "poly_mul",
    "RationalPair",
    "ene_rational",
    "degree_law_holds",
    "ShiftedPoly",
    "ene_shifted",
    "reverse_poly",
    "verify_inversion",
]


def as_poly(s):
    """Trim trailing zeros so that the order is the degree (at least 0)."""
    return s.truncate(max(s.degree(), 0))


def poly_mul(P, Q):
    """Exact product of two polynomials."""
    top = max(P.degree(), 0) + max(Q.degree(), 0)
    return as_poly(P.pad(top) * Q.pad(top))


def _poly_ene(P, Q):
    return as_poly(poly_ene(P, Q))


@dataclass(frozen=True)
class RationalPair:
    """``num / den`` with ``num, den`` in ``1 + X A[X]``; no cancellation is done."""

    num: Series
    den: Series

    def __post_init__(self):
        if self.num.ring != self.den.ring:
            raise RingMismatch(f"{self.num.ring} vs {self.den.ring}")
        self.num.require_unit("rational numerator")
        self.den.require_unit("rational denominator")
        object.__setattr__(self, "num", as_poly(self.num))
        object.__setattr__(self, "den", as_poly(self.den))

    @classmethod
    def poly(cls, P):
        return cls(P, Series.one(P.ring, 0))

    @property
    def ring(self):
        return self.num.ring

    @property
    def degree(self):
        return max(self.num.degree(), self.den.degree())

    @property
    def signed_degree(self):
        """``deg num - deg den``: zeros minus poles, counted at infinity."""
        return self.num.degree() - self.den.degree()

    def to_series(self, order):
        return self.num.pad(order) / self.den.pad(order)

    def __str__(self):
        num = self.num.pretty().rsplit(" + O(", 1)[0]
        den = self.den.pretty().rsplit(" + O(", 1)[0]
        return f"({num}) / ({den})"


def ene_rational(R1, R2, order=None):
    """``(P1*P2)(Q1*Q2) / ((P1*Q2)(Q1*P2))`` with every ``*`` an eñe product.

    When ``order`` is given the result is also checked against the eñe
    product of the two power series expansions up to that order.
    """
    if R1.ring != R2.ring:
        raise RingMismatch(f"{R1.ring} vs {R2.ring}")
    P1, Q1, P2, Q2 = R1.num, R1.den, R2.num, R2.den
    num = poly_mul(_poly_ene(P1, P2), _poly_ene(Q1, Q2))
    den = poly_mul(_poly_ene(P1, Q2), _poly_ene(Q1, P2))
    out = RationalPair(num, den)
    if order is not None:
        direct = ene(R1.to_series(order), R2.to_series(order))
        if out.to_series(order) != direct:
            raise AssertionError("rational eñe product disagrees with the series eñe product")
    return out


def degree_law_holds(R1, R2, R=None):
    """``deg(R1 * R2) == deg R1 * deg R2`` with ``deg = max(deg num, deg den)``.

    Holds when one factor is a polynomial; fails in general (two Möbius
    factors give degree 2).  The signed degree is always multiplicative.
    """
    R = ene_rational(R1, R2) if R is None else R
    return R.degree == R1.degree * R2.degree


# ---------------------------------------------------------------------------
# polynomials with a power of X in front


@dataclass(frozen=True)
class ShiftedPoly:
    """``X^shift * unit_part`` with ``unit_part`` in ``1 + X A[X]``."""

    shift: int
    unit_part: Series

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        self.unit_part.require_unit("ShiftedPoly unit part")
        object.__setattr__(self, "unit_part", as_poly(self.unit_part))

    @classmethod
    def from_poly(cls, P):
        """Split ``P = X^n P0``; the lowest nonzero coefficient must be 1."""
        ring = P.ring
        n = next((k for k, c in enumerate(P.coeffs) if not ring.is_zero(c)), None)
        if n is None:
            raise ValueError("the zero polynomial has no normalized form")
        if not ring.is_one(P[n]):
            raise ValueError(f"lowest coefficient must be 1, got {ring.encode(P[n])}")
        d = P.degree()
        return cls(n, Series(ring, P.coeffs[n : d + 1]))

    @property
    def ring(self):
        return self.unit_part.ring

    @property
    def degree(self):
        return self.shift + self.unit_part.degree()

    def to_poly(self):
        ring = self.ring
        return Series(ring, (ring.zero(),) * self.shift + self.unit_part.coeffs)

    def __mul__(self, other):
        return ShiftedPoly(self.shift + other.shift, poly_mul(self.unit_part, other.unit_part))

    def __eq__(self, other):
        if not isinstance(other, ShiftedPoly):
            return NotImplemented
        a, b = self.unit_part, other.unit_part
        return self.shift == other.shift and a.order == b.order and a == b

    __hash__ = None

    def __str__(self):
        body = self.unit_part.pretty().rsplit(" + O(", 1)[0]
        if self.shift == 0:
            return body
        mono = "X" if self.shift == 1 else f"X^{self.shift}"
        return mono if body == "1" else f"{mono} * ({body})"


_SHIFT_RE = re.compile(r"^\s*X(?:\s*\^\s*(\d+))?\s*\*\s*\((.*)\)\s*$", re.S)


def parse_shifted(text, ring, parse_poly):
    """``"X^n * (poly)"`` or a bare polynomial; ``parse_poly`` turns text into a Series."""
    m = _SHIFT_RE.match(text)
    if m:
        n = int(m.group(1) or 1)
        return ShiftedPoly(n, parse_poly(m.group(2), ring))
    return ShiftedPoly.from_poly(parse_poly(text, ring))


def ene_shifted(P, Q):
    """``X^(n deg Q0 + m deg P0 + nm) (P0 * Q0)``."""
    if P.ring != Q.ring:
        raise RingMismatch(f"{P.ring} vs {Q.ring}")
    n, m = P.shift, Q.shift
    dp, dq = P.unit_part.degree(), Q.unit_part.degree()
    return ShiftedPoly(n * dq + m * dp + n * m, _poly_ene(P.unit_part, Q.unit_part))


def reverse_poly(P):
    """``X^d P(1/X)`` for ``P`` with constant and leading coefficient 1."""
    P = as_poly(P)
    ring = P.ring
    d = P.degree()
    if not ring.is_one(P[0]):
        raise ValueError("constant coefficient must be 1")
    if d < 0 or not ring.is_one(P[d]):
        raise ValueError(f"leading coefficient must be 1, got {ring.encode(P[d]) if d >= 0 else 0}")
    return Series(ring, P.coeffs[::-1])


def verify_inversion(P, Q):
    """Check ``P(1/X) * Q(1/X) == (P * Q)(1/X)``.

    Both sides are written as ``unit / X^k``.  On the left
    ``(P^/X^n) * (Q^/X^m) = (P^ * Q^)(X^n * X^m) / ((P^ * X^m)(Q^ * X^n))``,
    with the monomial products taken in :func:`ene_shifted`.  On the right
    ``P * Q`` has leading coefficient ``(-1)^(nm)``; its reversal is
    divided by that sign to get back constant term 1.
    """
    P, Q = as_poly(P), as_poly(Q)
    Ph, Qh = reverse_poly(P), reverse_poly(Q)
    n, m = P.degree(), Q.degree()
    ring = P.ring
    one = Series.one(ring, 0)
    xn, xm = ShiftedPoly(n, one), ShiftedPoly(m, one)
    top = ene_shifted(ShiftedPoly(0, Ph), ShiftedPoly(0, Qh)) * ene_shifted(xn, xm)
    bottom = ene_shifted(ShiftedPoly(0, Ph), xm) * ene_shifted(ShiftedPoly(0, Qh), xn)
    if not ring.is_one(bottom.unit_part[0]) or bottom.unit_part.degree() != 0:
        return False
    left_unit, left_shift = top.unit_part, bottom.shift - top.shift

    PQ = _poly_ene(P, Q)
    d = PQ.degree()
    lead = PQ[d]
    sign = ring.one() if (n * m) % 2 == 0 else ring.neg(ring.one())
    if d != n * m or not ring.eq(lead, sign):
        return False
    right_unit = Series(ring, [ring.mul(sign, c) for c in PQ.coeffs[::-1]])
    return left_shift == n * m and left_unit.order == right_unit.order and left_unit == right_unit
