"""Zeros of an eñe product are the pairwise products of the zeros.

Run with ``python3 demos/zeros_multiply.py``.
"""

from fractions import Fraction

from ene import QQ, CC, Series, ene, ene_roots, poly_roots, verify_zero_products
from ene.product import product_from_roots

# two polynomials with constant term 1, given by their zeros
P = product_from_roots(QQ, [1, Fraction(1, 2)], 2)  # 1 - 3X + 2X^2
Q = product_from_roots(QQ, [Fraction(1, 3)], 2)  # 1 - 3X
print("P      =", P)
print("Q      =", Q)

h = ene(P, Q)
print("P @ Q  =", h)

# the same thing built straight from the products 1/3 and 1/6
print("direct =", ene_roots([1, Fraction(1, 2)], [Fraction(1, 3)], 2))

# numerically, with random complex polynomials
Pc = Series.from_values(CC, [1, 0.5 - 1j, 0.25j, -0.3])
Qc = Series.from_values(CC, [1, 2, 0.7 + 0.1j])
rep = verify_zero_products(Pc, Qc)
print("zeros of P:", [f"{z:.4f}" for z in poly_roots(Pc).zeros])
print("zeros of Q:", [f"{z:.4f}" for z in poly_roots(Qc).zeros])
print(f"largest mismatch against the pairwise products: {rep['max_mismatch']:.2e}")
