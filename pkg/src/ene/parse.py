"""Series expression language used by the command line.

Grammar (lowest precedence first)::

    expr    := term (('+' | '-') term)*
    term    := ene (('*' | '/') ene)*
    ene     := unary ('@' unary)*
    unary   := '-' unary | power
    power   := postfix ('^' exponent)?
    postfix := atom ('.' 'T' '(' INT ')' | '.' 'Te' '(' INT ')' | '.' 'D' | '.' 'INV')*
    atom    := NUMBER | 'X' | NAME | BUILTIN | '(' expr ')'
    exponent:= NUMBER | '-' NUMBER | '(' ['-'] NUMBER ['/' NUMBER] ')' | unary

``*`` and ``/`` are series multiplication and division, ``@`` is the eñe
product, ``^`` is an integer power or, for non-integer exponents, the
power ``exp(a log f)``.  Builtins: ``E(N)``, ``I(N)``, ``AH(p)``, ``EXP(expr)``,
``KOEBE``, ``UNIT``, ``ZERO``.  ``NAME`` is a variable of a polynomial
coefficient ring.  A number may end in ``j`` (imaginary unit, complex ring).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import EneError, NotQAlgebra
from .product import ene, ene_inverse, unit
from .rings import PolyRing
from .series import ExpForm, Series, exp_truncate, koebe, log_derivative, series_exp
from .transforms import FractionalSeries, artin_hasse, cyclotomic_like, fractional_power, hecke, weierstrass_factor

__all__ = ["ParseError", "parse_expr", "evaluate", "eval_expr", "parse_poly"]


class ParseError(EneError, ValueError):
    def __init__(self, message, pos):
        self.pos = pos
        self.message = message
        super().__init__(f"column {pos + 1}: {message}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?j?|\.\d+(?:[eE][-+]?\d+)?j?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/@^().,]))"
)

_BUILTIN_ARGS = {"E", "I", "AH", "EXP"}
_BUILTIN_CONST = {"KOEBE", "UNIT", "ZERO"}


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        if text[i:].strip() == "":
            break
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            j = i
            while j < len(text) and text[j].isspace():
                j += 1
            raise ParseError(f"unexpected character {text[j]!r}", j)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(Tok(kind, m.group(kind), start))
        i = m.end()
    toks.append(Tok("end", "", len(text)))
    return toks


# AST nodes are tuples: (tag, pos, *children)


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            return self.take()
        return None

    def expect(self, text):
        t = self.accept(text)
        if t is None:
            got = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, got {got!r}", self.tok.pos)
        return t

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            t = self.accept("+") or self.accept("-")
            if t is None:
                return node
            node = ("add" if t.text == "+" else "sub", t.pos, node, self.term())

    def term(self):
        node = self.ene()
        while True:
            t = self.accept("*") or self.accept("/")
            if t is None:
                return node
            node = ("mul" if t.text == "*" else "div", t.pos, node, self.ene())

    def ene(self):
        node = self.unary()
        while True:
            t = self.accept("@")
            if t is None:
                return node
            node = ("ene", t.pos, node, self.unary())

    def power(self):
        base = self.postfix()
        t = self.accept("^")
        if t is None:
            return base
        return ("pow", t.pos, base, self.exponent())

    def exponent(self):
        pos = self.tok.pos
        save = self.i
        if self.accept("("):
            neg = self.accept("-") is not None
            if self.tok.kind == "num":
                a = _number(self.take())
                b = 1
                if self.accept("/"):
                    if self.tok.kind != "num":
                        raise ParseError("expected a number", self.tok.pos)
                    b = _number(self.take())
                if self.accept(")"):
                    value = Fraction(a) / Fraction(b)
                    return ("num", pos, -value if neg else value)
            self.i = save
            return self.postfix()
        if self.accept("-"):
            if self.tok.kind != "num":
                raise ParseError("expected a number after '-' in exponent", self.tok.pos)
            return ("num", pos, -_number(self.take()))
        if self.tok.kind == "num":
            return ("num", pos, _number(self.take()))
        return self.postfix()

    def unary(self):
        t = self.accept("-")
        if t is not None:
            return ("neg", t.pos, self.unary())
        return self.power()

    def postfix(self):
        node = self.atom()
        while self.accept("."):
            t = self.tok
            if t.kind != "name" or t.text not in ("T", "Te", "D", "INV"):
                raise ParseError("expected T(n), Te(N), D or INV after '.'", t.pos)
            self.take()
            if t.text in ("T", "Te"):
                self.expect("(")
                n = self._int_arg()
                self.expect(")")
                node = ("hecke" if t.text == "T" else "exptrunc", t.pos, node, n)
            else:
                node = ("logder" if t.text == "D" else "inv", t.pos, node)
        return node

    def _int_arg(self):
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            raise ParseError("expected a nonnegative integer", t.pos)
        self.take()
        return int(t.text)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return ("num", t.pos, _number(t))
        if t.kind == "name":
            self.take()
            if t.text == "X":
                return ("x", t.pos)
            if t.text in _BUILTIN_CONST:
                return ("const", t.pos, t.text)
            if t.text in _BUILTIN_ARGS:
                self.expect("(")
                if t.text == "EXP":
                    arg = self.expr()
                else:
                    arg = self._int_arg()
                self.expect(")")
                return ("builtin", t.pos, t.text, arg)
            return ("var", t.pos, t.text)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        got = t.text or "end of input"
        raise ParseError(f"unexpected {got!r}", t.pos)


def _number(tok):
    text = tok.text
    if text.endswith("j"):
        return complex(text)
    if any(c in text for c in ".eE"):
        return Fraction(text)
    return int(text)


def parse_expr(text):
    """Parse ``text`` into a tuple-based syntax tree."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation


def _const(ring, order, value):
    if isinstance(value, complex):
        if ring.kind not in ("complex-float", "gaussian-rational"):
            raise NotQAlgebra(ring, "complex literal")
    elif ring.kind == "complex-float":
        value = complex(value)
    elif isinstance(value, Fraction) and value.denominator != 1 and not ring.is_q_algebra:
        raise NotQAlgebra(ring, f"literal {value}")
    elif isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    return Series.monomial(ring, order, 0, ring.coerce(value))


def evaluate(node, ring, order):
    """Evaluate a syntax tree to a :class:`Series` (or :class:`FractionalSeries`)."""
    tag = node[0]
    ev = lambda n: _series(evaluate(n, ring, order))  # noqa: E731
    if tag == "num":
        return _const(ring, order, node[2])
    if tag == "x":
        return Series.x(ring, order)
    if tag == "var":
        if not isinstance(ring, PolyRing) or node[2] not in ring.variables:
            raise ParseError(f"unknown name {node[2]!r}", node[1])
        return Series.monomial(ring, order, 0, ring.gen(node[2]))
    if tag == "const":
        name = node[2]
        if name == "UNIT":
            return unit(ring, order)
        if name == "ZERO":
            return Series.one(ring, order)
        return koebe(order, ring)
    if tag == "builtin":
        name, arg = node[2], node[3]
        if name == "E":
            return weierstrass_factor(arg, order, ring)
        if name == "I":
            return cyclotomic_like(arg, order, ring)
        if name == "AH":
            return artin_hasse(arg, order, ring)
        inner = ev(arg)
        return series_exp(ExpForm.from_series(inner))
    if tag == "neg":
        return -ev(node[2])
    if tag in ("add", "sub", "mul", "div", "ene"):
        a, b = ev(node[2]), ev(node[3])
        if tag == "add":
            return a + b
        if tag == "sub":
            return a - b
        if tag == "mul":
            return a * b
        if tag == "div":
            return a / b
        return ene(a, b)
    if tag == "pow":
        base = ev(node[2])
        ex = node[3]
        if ex[0] != "num":
            raise ParseError("exponent must be a number", ex[1])
        value = ex[2]
        if isinstance(value, int) or (isinstance(value, Fraction) and value.denominator == 1):
            return base ** int(value)
        return fractional_power(base, value)
    if tag == "hecke":
        return hecke(node[3], evaluate(node[2], ring, order))
    if tag == "exptrunc":
        return exp_truncate(ev(node[2]), node[3])
    if tag == "logder":
        return log_derivative(ev(node[2]))
    if tag == "inv":
        return ene_inverse(ev(node[2]))
    raise AssertionError(f"unknown node {tag}")


def _series(value):
    if isinstance(value, FractionalSeries):
        return value.to_series()
    return value


def eval_expr(text, ring, order):
    return evaluate(parse_expr(text), ring, order)


def parse_poly(text, ring):
    """A polynomial literal as a series whose order is its degree."""
    from .rational import as_poly

    s = _series(eval_expr(text, ring, _poly_order(text)))
    return as_poly(s)


def _poly_order(text):
    """Upper bound on the degree of a polynomial literal (sum of X powers)."""
    total = 0
    for m in re.finditer(r"X(?:\s*\^\s*(\d+))?", text):
        total += int(m.group(1) or 1)
    return max(total, 1)
