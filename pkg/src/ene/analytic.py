"""Numerical layer over complex floats.

Radius estimates, an Aberth-Ehrlich polynomial root finder, and numerical
checks that the zeros of an eñe product are the pairwise products of zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import NonConvergence, RingMismatch
from .product import ene, poly_ene, product_from_roots
from .rings import CC, QQ, ZZ, ComplexFloat
from .series import ExpForm, Series, scale_argument, series_exp, series_log
from .transforms import weierstrass_factor

__all__ = [
    "ZeroSet",
    "GenusFactorization",
    "to_complex",
    "radius_estimate",
    "poly_roots",
    "ene_radius",
    "verify_zero_products",
    "radius_inequality_check",
    "genus_factorization_ene",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class ZeroSet:
    """Zeros with multiplicities, as ``((z, m), ...)``."""

    points: tuple = ()

    def __post_init__(self):
        pts = tuple((complex(z), int(m)) for z, m in self.points)
        for z, m in pts:
            if z == 0:
                raise ValueError("0 cannot be a zero of a unit series")
            if m < 1:
                raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_list(cls, zeros):
        return cls(tuple((z, 1) for z in zeros))

    @property
    def zeros(self):
        """Flat list, each zero repeated by its multiplicity."""
        return [z for z, m in self.points for _ in range(m)]

    def __len__(self):
        return sum(m for _, m in self.points)

    def products(self, other):
        return ZeroSet.from_list([a * b for a in self.zeros for b in other.zeros])

    def min_modulus(self):
        return min((abs(z) for z, _ in self.points), default=math.inf)

    def to_json_obj(self):
        return [{"zero": [z.real, z.imag], "multiplicity": m} for z, m in self.points]


@dataclass(frozen=True)
class GenusFactorization:
    """``exp(F(z)) * prod E_genus(z / a)`` over a finite zero set.

    ``poly_part`` holds ``F_1 .. F_k`` (``F(0) = 0``, ``k <= genus``).
    """

    genus: int
    poly_part: tuple = ()
    zeros: ZeroSet = field(default_factory=ZeroSet)

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        part = tuple(complex(c) for c in self.poly_part)
        while part and part[-1] == 0:
            part = part[:-1]
        if len(part) > self.genus:
            raise ValueError(f"exponential part has degree {len(part)} > genus {self.genus}")
        object.__setattr__(self, "poly_part", part)

    def expand(self, order, ring=CC):
        """Power series of the product up to ``order``."""
        F = [ring.coerce(self.poly_part[i]) if i < len(self.poly_part) else ring.zero() for i in range(order)]
        out = series_exp(ExpForm(ring, tuple(F)))
        factor = weierstrass_factor(self.genus, order, ring)
        for z in self.zeros.zeros:
            out = out * scale_argument(factor, ring.inverse(ring.coerce(z)))
        return out


def to_complex(f, ring=CC):
    """Embed a series over Q or Z into the complex-float ring."""
    if isinstance(f.ring, ComplexFloat):
        return f if f.ring == ring else Series(ring, f.coeffs)
    return Series(ring, [complex(c) for c in f.coeffs])


def _coeff_array(P):
    if isinstance(P, Series):
        d = P.degree()
        return np.array([complex(c) for c in P.coeffs[: d + 1]], dtype=complex)
    return np.trim_zeros(np.asarray(P, dtype=complex), "b")


# ---------------------------------------------------------------------------
# radius of convergence


def radius_estimate(f, slope_cut=-0.25):
    """Estimate the radius of convergence from the last half of the coefficients.

    Returns ``1 / max |f_i|^(1/i)`` over the window, or ``math.inf`` when the
    window is identically zero or ``log |f_i|^(1/i)`` falls off against
    ``log i`` with slope below ``slope_cut`` (entire functions of finite
    order fall like ``i^(-1/order)``).  This is an estimate, not a limsup.
    """
    N = f.order
    if N < 8:
        raise ValueError("radius estimate needs order >= 8")
    idx, roots = [], []
    for i in range(N // 2 + 1, N + 1):
        a = abs(complex(f[i]))
        if a > 0:
            idx.append(i)
            roots.append(a ** (1.0 / i))
    if not roots:
        return math.inf
    if len(roots) >= 4:
        slope = np.polyfit(np.log(idx), np.log(roots), 1)[0]
        if slope < slope_cut:
            return math.inf
    return 1.0 / max(roots)


# ---------------------------------------------------------------------------
# roots


def _fujiwara(c):
    """Fujiwara bound on root moduli for ascending coefficients ``c``."""
    d = len(c) - 1
    lead = c[-1]
    terms = [abs(c[d - k] / lead) ** (1.0 / k) for k in range(1, d)]
    terms.append(abs(c[0] / (2 * lead)) ** (1.0 / d))
    return 2.0 * max(terms)


def _horner(c, z):
    """``p(z), p'(z)`` and ``sum |c_k| |z|^k`` for ascending coefficients."""
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    scale = np.zeros(z.shape)
    az = np.abs(z)
    for a in c[::-1]:
        dp = dp * z + p
        p = p * z + a
        scale = scale * az + abs(a)
    return p, dp, scale


def _cluster(z, radius):
    """Merge points closer than ``radius * max(1, |z|)``; union-find."""
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= radius * max(1.0, abs(z[i]), abs(z[j])):
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(z[i])
    pts = [(complex(np.mean(g)), len(g)) for g in groups.values()]
    pts.sort(key=lambda t: (abs(t[0]), math.atan2(t[0].imag, t[0].real)))
    return pts


def poly_roots(P, tol=1e-12, seed=0, max_iter=200):
    """All zeros of a polynomial with ``P(0) = 1`` (Aberth-Ehrlich).

    Starts on a circle of radius given by the Fujiwara bound, with a phase
    drawn from ``seed``.  A root is accepted when its Newton step is below
    ``tol`` relative to its modulus or its residual is at rounding level,
    ``|P(z)| <= 8 eps sum |c_k| |z|^k``.  Stagnant iterates are perturbed
    every 50 steps.  Zeros closer than ``sqrt(tol)`` are merged into one
    zero with multiplicity.
    """
    c = _coeff_array(P)
    d = len(c) - 1
    if d < 1:
        raise ValueError("polynomial must have degree >= 1")
    if abs(c[0] - 1) > 1e-12:
        raise ValueError("constant coefficient must be 1")
    rng = np.random.default_rng(seed)
    r = _fujiwara(c)
    phase = rng.uniform(0, 2 * np.pi)
    z = r * np.exp(1j * (phase + 2 * np.pi * np.arange(d) / d + 0.4 / d))
    done = np.zeros(d, dtype=bool)
    for it in range(1, max_iter + 1):
        p, dp, scale = _horner(c, z)
        small = np.abs(p) <= 8 * _EPS * scale
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.where(small, 0, p / dp)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1)
            s = (1 / diff).sum(axis=1) - 1  # diagonal contributed 1/1
            step = np.where(small, 0, w / (1 - w * s))
        step = np.where(np.isfinite(step), step, 0)
        z = z - step
        done = small | (np.abs(step) <= tol * np.maximum(np.abs(z), 1e-300))
        if done.all():
            break
        if it % 50 == 0:
            kick = 1 + 1e-3 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))
            z = np.where(done, z, z * kick)
    else:
        raise NonConvergence(f"Aberth iteration did not converge in {max_iter} steps (degree {d})")
    return ZeroSet(tuple(_cluster(list(z), math.sqrt(tol))))


def ene_radius(f, polynomial=True):
    """Smallest modulus among the zeros and the radius of convergence.

    For a polynomial (or a :class:`ZeroSet`) this is the smallest zero
    modulus.  For a general truncated series it is the estimated radius of
    convergence of ``log f``, which equals the same quantity.
    """
    if isinstance(f, ZeroSet):
        return f.min_modulus()
    if polynomial:
        if f.degree() < 1:
            return math.inf
        return poly_roots(f).min_modulus()
    return radius_estimate(series_log(to_complex(f)).as_series())


# ---------------------------------------------------------------------------
# numerical checks of the zero-product rule


def _product_poly(P, Q):
    """``P * Q`` over complex floats; exact over Q first when possible."""
    if P.ring != Q.ring:
        raise RingMismatch(f"{P.ring} vs {Q.ring}")
    if P.ring in (QQ, ZZ):
        return to_complex(poly_ene(P, Q))
    return poly_ene(to_complex(P), to_complex(Q))


def verify_zero_products(P, Q, tol=1e-6, seed=0):
    """Match the zeros of ``P * Q`` (eñe) against the products ``a_i b_j``.

    Zeros are paired by a minimum-cost assignment on ``|u - v|``; the report
    passes when the largest paired distance is at most ``tol``.
    """
    if P.degree() < 1 or Q.degree() < 1:
        raise ValueError("both polynomials need degree >= 1")
    a = poly_roots(P, seed=seed)
    b = poly_roots(Q, seed=seed)
    h = _product_poly(P, Q)
    got = poly_roots(h, seed=seed).zeros
    want = a.products(b).zeros
    if len(got) != len(want):
        return {"pass": False, "max_mismatch": math.inf, "pairs": [], "reason": f"{len(got)} zeros for {len(want)} products"}
    cost = np.abs(np.subtract.outer(np.array(want), np.array(got)))
    rows, cols = linear_sum_assignment(cost)
    pairs = []
    worst = 0.0
    for i, j in zip(rows, cols):
        m = float(cost[i, j])
        worst = max(worst, m)
        pairs.append(
            {
                "product": [want[i].real, want[i].imag],
                "zero": [got[j].real, got[j].imag],
                "mismatch": m,
            }
        )
    return {"pass": bool(worst <= tol), "max_mismatch": worst, "pairs": pairs}


def radius_inequality_check(f, g, tol=1e-9, zeros_f=None, zeros_g=None, seed=0):
    """``R~(f * g) >= R~(f) R~(g)`` for polynomials.

    Both sides come from the zeros of ``f`` and ``g`` (given, or found
    numerically): the right side is the product of the minimal moduli, the
    left side the minimal modulus over all pairwise products.  The check
    uses relative tolerance ``tol``.  The smallest zero of the computed eñe
    product is reported as ``lhs_numeric`` for comparison; it is not used
    for the verdict since clustered zeros make it ill-conditioned.
    """
    za = zeros_f if zeros_f is not None else poly_roots(f, seed=seed)
    zb = zeros_g if zeros_g is not None else poly_roots(g, seed=seed)
    rf, rg = za.min_modulus(), zb.min_modulus()
    rhs = rf * rg
    lhs = za.products(zb).min_modulus()
    h = _product_poly(f, g)
    try:
        lhs_numeric = poly_roots(h, seed=seed).min_modulus() if h.degree() >= 1 else math.inf
    except NonConvergence:
        lhs_numeric = None
    return {
        "pass": bool(lhs >= rhs * (1 - tol)),
        "lhs": lhs,
        "lhs_numeric": lhs_numeric,
        "rhs": rhs,
        "equality": bool(abs(lhs - rhs) <= tol * max(1.0, rhs)),
    }


def genus_factorization_ene(f, g, order=12, tol=1e-9, ring=CC):
    """Claimed factorization of ``f * g`` and a comparison with the engine.

    The claim has exponential part ``F *_e G`` (``-k F_k G_k``) and zeros
    ``{a_i b_j}`` with the same genus; it is expanded and compared
    coefficientwise with the eñe product of the two expanded series.
    """
    if f.genus != g.genus:
        raise ValueError("both factorizations need the same genus")
    rho = f.genus
    F = list(f.poly_part) + [0j] * (rho - len(f.poly_part))
    G = list(g.poly_part) + [0j] * (rho - len(g.poly_part))
    part = tuple(-(k + 1) * F[k] * G[k] for k in range(rho))
    claim = GenusFactorization(rho, part, f.zeros.products(g.zeros))
    lhs = claim.expand(order, ring)
    rhs = ene(f.expand(order, ring), g.expand(order, ring))
    diff = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(lhs.coeffs, rhs.coeffs))
    report = {
        "pass": bool(diff <= tol),
        "max_mismatch": float(diff),
        "degree_ok": len(claim.poly_part) <= rho,
    }
    return claim, lhs, report
