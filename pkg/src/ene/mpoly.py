"""Sparse multivariate polynomials over a coefficient ring.

Monomials are exponent tuples aligned with the ring's variable list.
Printing uses a fixed "block reverse-lex" order: variables are grouped into
blocks by their alphabetic prefix (``X1..Xp`` and ``Y1..Yp`` are two
blocks), each block is read from its highest-index variable down, and
monomials are listed in decreasing order of that key.  For the universal
polynomials this lists ``X_p``-heavy monomials first, e.g.::

    -2*X2*Y2 + X2*Y1^2 + X1^2*Y2
"""

from __future__ import annotations

import re

from .errors import RingMismatch


def block_order(variables):
    """Index permutation used as the monomial sort key."""
    blocks = []
    prev = None
    for i, name in enumerate(variables):
        prefix = re.match(r"[A-Za-z_]*", name).group(0)
        if prefix != prev or not blocks:
            blocks.append([])
            prev = prefix
        blocks[-1].append(i)
    return tuple(i for block in blocks for i in reversed(block))


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        base = ring.base
        self.terms = {e: c for e, c in terms.items() if not (base.exact and base.is_zero(c))}

    # -- arithmetic -----------------------------------------------------
    def _other(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.coerce(other)

    def __add__(self, other):
        other = self._other(other)
        add = self.ring.base.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = add(out[e], c) if e in out else c
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.base.neg
        return MPoly(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        base = self.ring.base
        add, mul = base.add, base.mul
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                out[e] = add(out[e], c) if e in out else c
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        return self.ring.pow(self, n)

    def map_coeffs(self, fn):
        return MPoly(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def is_zero_tol(self):
        base = self.ring.base
        return all(base.is_zero(c) for c in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self.ring.coerce(other)
            except (TypeError, ValueError, RingMismatch):
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- inspection -----------------------------------------------------
    def sorted_terms(self):
        order = self.ring._order
        return sorted(self.terms.items(), key=lambda t: tuple(t[0][i] for i in order), reverse=True)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, monomial):
        """Coefficient of a monomial given as ``{name: exponent}``."""
        exps = [0] * self.ring.nvars
        for name, k in monomial.items():
            exps[self.ring.variables.index(name)] = k
        return self.terms.get(tuple(exps), self.ring.base.zero())

    def evaluate(self, ring, values):
        """Evaluate in ``ring`` at ``values`` (one per variable) using only
        integer scaling of the coefficients; requires integer coefficients
        when ``ring`` differs from the base ring."""
        powers = [[ring.one()] for _ in values]
        total = ring.zero()
        for e, c in self.terms.items():
            term = ring.one()
            for i, k in enumerate(e):
                if k:
                    table = powers[i]
                    while len(table) <= k:
                        table.append(ring.mul(table[-1], values[i]))
                    term = ring.mul(term, table[k])
            total = ring.add(total, ring.int_scale(int(c), term))
        return total

    def monomial_str(self, e):
        parts = []
        for name, k in zip(self.ring.variables, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        base = self.ring.base
        out = []
        for e, c in self.sorted_terms():
            negative, mag = base.split_sign(c)
            mono = self.monomial_str(e)
            if not mono:
                body = base.format_coeff(mag)
            elif base.is_one(mag):
                body = mono
            else:
                body = f"{base.format_coeff(mag)}*{mono}"
            if not out:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"MPoly({self})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?(?:\.\d*)?(?:[eE][-+]?\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\([^()]*\))|(\S))")


def parse_mpoly(text, ring):
    """Parse a sum of monomial terms such as ``"3*X1^2*Y1 - 2*X2*Y2"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, paren, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("var", name))
        elif paren is not None:
            tokens.append(("num", paren[1:-1]))
        else:
            tokens.append(("op", op))
        pos = m.end()

    base = ring.base
    result = ring.zero()
    i = 0
    n = len(tokens)
    if n == 0:
        raise ValueError("empty polynomial")
    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        coeff = base.one()
        exps = [0] * ring.nvars
        while True:
            if i >= n:
                raise ValueError(f"unexpected end of polynomial {text!r}")
            kind, val = tokens[i]
            if kind == "num":
                coeff = base.mul(coeff, base.coerce(val))
                i += 1
            elif kind == "var":
                if val not in ring.variables:
                    raise ValueError(f"unknown variable {val!r} in {text!r}")
                i += 1
                k = 1
                if i < n and tokens[i] == ("op", "^"):
                    k = int(tokens[i + 1][1])
                    i += 2
                exps[ring.variables.index(val)] += k
            else:
                raise ValueError(f"unexpected {val!r} in {text!r}")
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                continue
            break
        if sign < 0:
            coeff = base.neg(coeff)
        result = result + MPoly(ring, {tuple(exps): coeff})
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise ValueError(f"unexpected {tokens[i][1]!r} in {text!r}")
    return result
