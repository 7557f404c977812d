"""Slow, obviously-correct reference computations on plain Fraction lists.

Nothing here imports the package, so agreement with it means something.
"""

from fractions import Fraction
from itertools import permutations


def mul(a, b):
    n = min(len(a), len(b))
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)]


def inv(a):
    assert a[0] != 0
    out = [Fraction(1) / a[0]]
    for k in range(1, len(a)):
        out.append(-sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
    return out


def deriv(a):
    return [k * a[k] for k in range(1, len(a))]


def log(a):
    """log of a series with a[0] == 1, as a full list with log[0] = 0."""
    assert a[0] == 1
    q = mul(deriv(a), inv(a[:-1])) if len(a) > 1 else []
    return [Fraction(0)] + [q[k - 1] / k for k in range(1, len(a))]


def exp(F):
    """exp of a series with F[0] == 0 via k e_k = sum j F_j e_{k-j}."""
    assert F[0] == 0
    e = [Fraction(1)]
    for k in range(1, len(F)):
        e.append(sum((j * F[j] * e[k - j] for j in range(1, k + 1)), Fraction(0)) / k)
    return e


def ene(a, b):
    """Eñe product from the exponential coordinates."""
    n = min(len(a), len(b))
    F, G = log(a[:n]), log(b[:n])
    return exp([Fraction(0)] + [-i * F[i] * G[i] for i in range(1, n)])


def from_roots(roots, order):
    """prod (1 - X/r) as a list of length order + 1."""
    out = [Fraction(1)] + [Fraction(0)] * order
    for r in roots:
        c = -1 / Fraction(r)
        for k in range(order, 0, -1):
            out[k] += c * out[k - 1]
    return out


def ene_by_roots(alphas, betas, order):
    return from_roots([a * b for a in alphas for b in betas], order)


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= M[i][perm[i]]
            if term == 0:
                break
        total += term
    return total


def hadamard(a, b):
    return [x * y for x, y in zip(a, b)]


def complex_roots_product(alphas, betas):
    """Coefficients of prod (1 - z/(a b)) in complex floats."""
    roots = [a * b for a in alphas for b in betas]
    out = [1 + 0j] + [0j] * len(roots)
    for r in roots:
        c = -1 / r
        for k in range(len(out) - 1, 0, -1):
            out[k] += c * out[k - 1]
    return out
