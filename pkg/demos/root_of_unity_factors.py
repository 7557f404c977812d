"""Products of the factors 1 - X^N and the Hecke operators they induce.

Run with ``python3 demos/root_of_unity_factors.py``.
"""

import math
from fractions import Fraction

from ene import QQ, Series, cyclotomic_like, dilate, ene, hecke

order = 24
for N, M in [(2, 3), (2, 2), (4, 6)]:
    lhs = ene(cyclotomic_like(N, order), cyclotomic_like(M, order))
    l, g = math.lcm(N, M), math.gcd(N, M)
    print(f"(1 - X^{N}) @ (1 - X^{M}) == (1 - X^{l})^{g}:", lhs == cyclotomic_like(l, order) ** g)

# (1 - X^n) @ f, with X^n replaced by X, is the n-th power of T(n) f
f = Series.from_values(QQ, [1, Fraction(1, 2), -1, 3, Fraction(2, 3)], order)
for n in (2, 3):
    pushed = dilate(n, ene(cyclotomic_like(n, order), f))
    print(f"n={n}: matches T(n) f ^ n:", pushed == hecke(n, f) ** n)
    print(f"       matches T(n) f:    ", pushed == hecke(n, f))
