"""Dense square matrices over a ring: companion matrices, Kronecker
products and division-free characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotQAlgebra, RingMismatch
from .rings import Ring
from .series import ExpForm, Series, series_exp


@dataclass(frozen=True)
class RingMatrix:
    ring: Ring
    dim: int
    entries: tuple  # row-major, dim*dim raw ring values

    def __post_init__(self):
        if len(self.entries) != self.dim * self.dim:
            raise ValueError("entries do not form a square matrix")

    @classmethod
    def from_rows(cls, ring, rows):
        rows = [list(r) for r in rows]
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        return cls(ring, d, tuple(ring.coerce(x) for r in rows for x in r))

    @classmethod
    def identity(cls, ring, d):
        one, zero = ring.one(), ring.zero()
        return cls(ring, d, tuple(one if i == j else zero for i in range(d) for j in range(d)))

    @classmethod
    def zeros(cls, ring, d):
        return cls(ring, d, (ring.zero(),) * (d * d))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.dim + j]

    def rows(self):
        d = self.dim
        return [list(self.entries[i * d : (i + 1) * d]) for i in range(d)]

    def __matmul__(self, other):
        if other.ring != self.ring or other.dim != self.dim:
            raise RingMismatch("matrix ring or dimension mismatch")
        ring, d = self.ring, self.dim
        add, mul = ring.add, ring.mul
        a, b = self.entries, other.entries
        out = []
        for i in range(d):
            for j in range(d):
                acc = ring.zero()
                for k in range(d):
                    acc = add(acc, mul(a[i * d + k], b[k * d + j]))
                out.append(acc)
        return RingMatrix(ring, d, tuple(out))

    def scale(self, c):
        mul = self.ring.mul
        return RingMatrix(self.ring, self.dim, tuple(mul(c, x) for x in self.entries))

    def trace(self):
        ring = self.ring
        acc = ring.zero()
        for i in range(self.dim):
            acc = ring.add(acc, self[i, i])
        return acc

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.dim == other.dim
            and all(self.ring.eq(a, b) for a, b in zip(self.entries, other.entries))
        )

    __hash__ = None


def companion_matrix(P):
    """Matrix ``M_P`` with ``det(I - M_P X) = P`` for ``P = 1 + a_1 X + ... + a_d X^d``.

    Ones on the subdiagonal and last column ``(-a_d, ..., -a_2, -a_1)``.
    """
    P.require_unit("companion_matrix")
    ring = P.ring
    d = P.degree()
    if d < 1:
        raise ValueError("companion matrix needs a polynomial of degree >= 1")
    entries = [ring.zero()] * (d * d)
    for i in range(1, d):
        entries[i * d + (i - 1)] = ring.one()
    for i in range(d):
        entries[i * d + d - 1] = ring.neg(P[d - i])
    return RingMatrix(ring, d, tuple(entries))


def kronecker(M, N):
    """``(M ⊗ N)[(i,k),(j,l)] = M[i,j] N[k,l]``."""
    if M.ring != N.ring:
        raise RingMismatch(f"{M.ring} vs {N.ring}")
    ring = M.ring
    m, n = M.dim, N.dim
    mul = ring.mul
    d = m * n
    out = [None] * (d * d)
    for i in range(m):
        for j in range(m):
            a = M[i, j]
            for k in range(n):
                for l in range(n):
                    out[(i * n + k) * d + (j * n + l)] = mul(a, N[k, l])
    return RingMatrix(ring, d, tuple(out))


def berkowitz(M):
    """Coefficients ``[1, c_1, ..., c_d]`` of ``det(t I - M) = t^d + c_1 t^(d-1) + ...``.

    Division free, O(d^4) ring operations.  The vector for ``M`` is a lower
    triangular Toeplitz matrix (built from the top-left entry ``a``, first row
    ``R``, first column ``C`` and trailing block ``A``) times the vector of
    ``A``; the Toeplitz column is ``1, -a, -R C, -R A C, ..., -R A^(d-2) C``.
    """
    ring = M.ring
    add, mul, neg = ring.add, ring.mul, ring.neg
    rows = M.rows()
    d = M.dim
    poly = [ring.one()]
    # grow from the bottom-right 1x1 block upwards
    for s in range(d - 1, -1, -1):
        size = d - s  # current block is rows/cols s..d-1
        a = rows[s][s]
        R = rows[s][s + 1 :]
        C = [rows[r][s] for r in range(s + 1, d)]
        A = [row[s + 1 :] for row in rows[s + 1 :]]
        col = [ring.one(), neg(a)]
        v = C
        for _ in range(size - 1):
            acc = ring.zero()
            for x, y in zip(R, v):
                acc = add(acc, mul(x, y))
            col.append(neg(acc))
            v = [_dot(ring, row, v) for row in A]
        # poly_new[i] = sum_{j <= i} col[i - j] * poly[j]
        new = []
        for i in range(size + 1):
            acc = ring.zero()
            for j in range(min(i, size - 1) + 1):
                acc = add(acc, mul(col[i - j], poly[j]))
            new.append(acc)
        poly = new
    return poly


def _dot(ring, u, v):
    acc = ring.zero()
    for x, y in zip(u, v):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def det_series(M, order):
    """``det(I - M X)`` as a series of the given order (division free)."""
    ring = M.ring
    coeffs = berkowitz(M)
    return Series(ring, coeffs[: order + 1] + [ring.zero()] * max(0, order + 1 - len(coeffs)))


def trace_det_series(M, order):
    """``exp(-sum_k Tr(M^k) X^k / k)``; needs a Q-algebra."""
    ring = M.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(ring, "trace_det_series")
    F = []
    P = M
    for k in range(1, order + 1):
        F.append(ring.neg(ring.int_divide(P.trace(), k)))
        if k < order:
            P = P @ M
    return series_exp(ExpForm(ring, tuple(F)))
