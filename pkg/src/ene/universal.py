"""Universal integer polynomials ``Q_p`` for the eñe product coefficients.

``Q_p`` lives in ``Z[X1..Xp, Y1..Yp]`` and the ``p``-th coefficient of
``f * g`` (eñe) is ``(-1)^p Q_p(a_1..a_p, b_1..b_p)``.  The polynomials are
obtained by running the exponential-form product on the generic series
``1 + sum X_i t^i`` and ``1 + sum Y_i t^i`` over ``Q[X, Y]`` and checking
that every coefficient comes out integral.

Generated polynomials are memoized in-process and optionally on disk
(``ENE_CACHE_DIR``), one file ``Q<p>.txt`` per index.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import IntegralityViolation, QCapExceeded
from .mpoly import MPoly, parse_mpoly
from .rings import QQ, ZZ, PolyRing

DEFAULT_CAP = 12


def univ_variables(p):
    return tuple(f"X{i}" for i in range(1, p + 1)) + tuple(f"Y{i}" for i in range(1, p + 1))


def univ_ring(p, base=ZZ):
    return PolyRing(base, univ_variables(p))


@dataclass(frozen=True)
class UnivPoly:
    p: int
    poly: MPoly

    def __str__(self):
        return str(self.poly)

    def evaluate(self, ring, a, b):
        """``Q_p(a_1..a_p, b_1..b_p)`` in ``ring`` (integer action only)."""
        return self.poly.evaluate(ring, list(a[: self.p]) + list(b[: self.p]))

    def weights(self):
        """Set of ``(x_weight, y_weight)`` pairs over the monomials."""
        p = self.p
        return {
            (sum((i + 1) * e[i] for i in range(p)), sum((i + 1) * e[p + i] for i in range(p)))
            for e in self.poly.terms
        }

    def to_text(self):
        lines = [f"p={self.p}"]
        for e, c in self.poly.sorted_terms():
            mono = self.poly.monomial_str(e) or "1"
            lines.append(f"{c} {mono}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("p="):
            raise ValueError("missing 'p=<n>' header")
        p = int(lines[0][2:])
        ring = univ_ring(p)
        poly = ring.zero()
        for ln in lines[1:]:
            coeff, mono = ln.split(None, 1)
            poly = poly + ring.const(int(coeff)) * (ring.one() if mono == "1" else parse_mpoly(mono, ring))
        return cls(p, poly)


def check_structure(q):
    """Assert the structural facts about ``(-1)^p Q_p``; raises on failure."""
    p = q.p
    poly = q.poly if p % 2 == 0 else -q.poly
    lead = [0] * (2 * p)
    lead[p - 1] = 1
    lead[2 * p - 1] = 1
    lead = tuple(lead)
    if poly.terms.get(lead) != -p:
        raise IntegralityViolation(f"(-1)^{p} Q_{p} lacks the term {-p}*X{p}*Y{p}")
    for e in poly.terms:
        if e != lead and e[p - 1] and e[2 * p - 1]:
            raise IntegralityViolation(f"Q_{p} has an extra monomial containing X{p}*Y{p}")
    if q.weights() != {(p, p)}:
        raise IntegralityViolation(f"Q_{p} is not of bi-weight ({p}, {p})")


def _project(poly, p, k):
    """Restrict a polynomial in ``X1..Xp, Y1..Yp`` to ``X1..Xk, Y1..Yk``."""
    ring = univ_ring(k)
    terms = {}
    for e, c in poly.terms.items():
        if any(e[k:p]) or any(e[p + k :]):
            raise IntegralityViolation(f"Q_{k} involves variables beyond index {k}")
        terms[e[:k] + e[p : p + k]] = c
    return MPoly(ring, terms)


def generate_univ_polys(p):
    """Generate ``Q_1 .. Q_p`` in a single symbolic run."""
    from .product import ene_exp
    from .series import Series

    if p < 1:
        raise ValueError("p must be >= 1")
    qring = univ_ring(p, QQ)
    xs = qring.gens()[:p]
    ys = qring.gens()[p:]
    f = Series(qring, [qring.one()] + xs)
    g = Series(qring, [qring.one()] + ys)
    h = ene_exp(f, g)
    out = []
    for k in range(1, p + 1):
        c = h[k] if k % 2 == 0 else -h[k]
        terms = {}
        for e, coeff in c.terms.items():
            coeff = Fraction(coeff)
            if coeff.denominator != 1:
                raise IntegralityViolation(f"Q_{k} has non-integral coefficient {coeff}")
            terms[e] = coeff.numerator
        zpoly = MPoly(univ_ring(p), terms)
        q = UnivPoly(k, _project(zpoly, p, k))
        check_structure(q)
        out.append(q)
    return out


def generate_univ_poly(p):
    """``Q_p`` generated symbolically (no caching)."""
    return generate_univ_polys(p)[-1]


class UnivCache:
    """Thread-safe memo table for ``Q_p`` with optional on-disk persistence."""

    def __init__(self, cache_dir=None, cap=DEFAULT_CAP):
        self.cap = cap
        self._dir = cache_dir
        self._mem = {}
        self._lock = threading.Lock()

    @property
    def cache_dir(self):
        if self._dir is not None:
            return Path(self._dir)
        env = os.environ.get("ENE_CACHE_DIR")
        return Path(env) if env else None

    def _path(self, p):
        d = self.cache_dir
        return None if d is None else d / f"Q{p}.txt"

    def get(self, p, cap=None):
        cap = self.cap if cap is None else cap
        if p > cap:
            raise QCapExceeded(f"Q_{p} requested but the cap is {cap}")
        q = self._mem.get(p)
        if q is not None:
            return q
        with self._lock:
            q = self._mem.get(p)
            if q is not None:
                return q
            path = self._path(p)
            if path is not None and path.exists():
                q = UnivPoly.from_text(path.read_text())
                self._mem[p] = q
                return q
            # generate everything up to p at once; later indices are cheap to reuse
            missing = [k for k in range(1, p + 1) if k not in self._mem]
            for q in generate_univ_polys(max(missing))[min(missing) - 1 :]:
                self._mem[q.p] = q
                self._store(q)
            return self._mem[p]

    def get_many(self, p, cap=None):
        return [self.get(k, cap) for k in range(1, p + 1)]

    def _store(self, q):
        path = self._path(q.p)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(q.to_text())
        tmp.replace(path)

    def clear(self):
        with self._lock:
            self._mem.clear()


default_cache = UnivCache()


def univ_poly(p, cap=None):
    """Cached ``Q_p`` from the default cache."""
    return default_cache.get(p, cap)
