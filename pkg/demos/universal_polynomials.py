"""The coefficients of f @ g are integer polynomials in those of f and g.

Run with ``python3 demos/universal_polynomials.py``.
"""

from ene import PolyRing, QQ, Series, ene, univ_poly

for p in range(1, 5):
    print(f"Q_{p} =", univ_poly(p).poly)

# symbolic check of the first few coefficients
R = PolyRing(QQ, ["a1", "a2", "b1", "b2"])
f = Series(R, [R.one(), R.gen("a1"), R.gen("a2")])
g = Series(R, [R.one(), R.gen("b1"), R.gen("b2")])
h = ene(f, g)
for n in (1, 2):
    print(f"c_{n} =", h[n])

# the unit is 1 - X and 1 absorbs everything
one_minus_x = Series.from_values(QQ, [1, -1], 6)
k = Series.from_values(QQ, [1, 2, 3, 4, 5, 6, 7])
print("(1 - X) @ k == k:", ene(one_minus_x, k) == k)
print("1 @ k        =", ene(Series.one(QQ, 6), k))
