"""Eñe product of power series and the ring it defines."""

from .errors import (
    EneError,
    IntegralityViolation,
    NonConvergence,
    NotInvertibleCoefficient,
    NotQAlgebra,
    NotUnitSeries,
    QCapExceeded,
    RingMismatch,
)
from .rings import CC, QI, QQ, ZZ, ComplexFloat, GaussianRationals, Integers, IntegersMod, PolyRing, Rationals, parse_ring
from .series import ExpForm, Series, exp_truncate, hadamard, koebe, log_derivative, series_exp, series_log
from .universal import UnivCache, univ_poly
from .product import ene, ene_exp, ene_inverse, ene_roots, ene_tensor, ene_universal, is_zero_divisor, poly_ene, unit
from .transforms import (
    FractionalSeries,
    artin_hasse,
    cyclotomic_like,
    dilate,
    fractional_power,
    hecke,
    weierstrass_factor,
)
from .rational import RationalPair, ShiftedPoly, ene_rational, ene_shifted, verify_inversion
from .analytic import GenusFactorization, ZeroSet, ene_radius, poly_roots, verify_zero_products
from .parse import eval_expr, parse_poly

__version__ = "0.1.0"
