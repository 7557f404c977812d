"""Concrete commutative rings used as coefficient domains.

Each ring is a small descriptor object that knows how to combine raw
Python values: ``Fraction`` for Q, ``int`` for Z and Z/mZ, ``complex`` for
C and :class:`ene.mpoly.MPoly` for polynomial rings.  Series and matrices
store raw values and call back into their ring, which keeps the inner
loops cheap.  :class:`RingElem` wraps a value with its ring for callers
that want checked, operator-style arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotQAlgebra, RingMismatch

__all__ = [
    "Ring",
    "Rationals",
    "Integers",
    "IntegersMod",
    "ComplexFloat",
    "GaussianRationals",
    "QI",
    "PolyRing",
    "QQ",
    "ZZ",
    "CC",
    "RingElem",
    "ring_add",
    "ring_mul",
    "int_scale",
    "int_divide",
    "mobius",
    "parse_ring",
]


class Ring:
    """Abstract commutative ring with unit.

    Subclasses override the primitive operations.  ``int_scale`` has a
    generic double-and-add fallback so that integer action is available in
    every ring, including those of positive characteristic.
    """

    kind = "abstract"
    is_q_algebra = False
    exact = True

    # -- primitives -----------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def from_int(self, n):
        return self.int_scale(n, self.one())

    def coerce(self, x):
        """Map a Python int/Fraction/str (or a native value) into the ring."""
        raise NotImplementedError

    # -- derived --------------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def is_one(self, a):
        return self.eq(a, self.one())

    def pow(self, a, n):
        result = self.one()
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def int_scale(self, n, a):
        if n < 0:
            return self.neg(self.int_scale(-n, a))
        result = self.zero()
        while n:
            if n & 1:
                result = self.add(result, a)
            n >>= 1
            if n:
                a = self.add(a, a)
        return result

    def int_divide(self, a, n):
        raise NotQAlgebra(self, "int_divide")

    def inverse(self, a):
        """Multiplicative inverse; raises ``ZeroDivisionError`` for non-units."""
        raise ZeroDivisionError(f"{self.encode(a)} is not invertible in {self}")

    def is_unit(self, a):
        try:
            self.inverse(a)
        except ZeroDivisionError:
            return False
        return True

    def is_zero_divisor(self, a):
        """True when ``a`` is zero or annihilates some nonzero element."""
        return self.is_zero(a)

    def lift(self):
        """Return ``(qring, up, down)`` embedding into a Q-algebra, or ``None``.

        ``down(up(x)) == x`` and ``down`` is a ring map on the image of
        integer-coefficient expressions in lifted values.
        """
        return None

    # -- text -----------------------------------------------------------
    def encode(self, a):
        return str(a)

    def decode(self, text):
        return self.coerce(text)

    def split_sign(self, a):
        """``(negative, magnitude)`` for pretty printing; rings without an
        order return ``(False, a)``."""
        return False, a

    def format_coeff(self, a):
        return self.encode(a)

    def descriptor(self):
        """Short descriptor text as accepted by :func:`parse_ring`."""
        raise NotImplementedError

    def __repr__(self):
        return self.descriptor()

    def __str__(self):
        return self.descriptor()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class Rationals(Ring):
    kind = "big-rational"
    is_q_algebra = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def int_scale(self, n, a):
        return n * a

    def int_divide(self, a, n):
        if n == 0:
            raise ZeroDivisionError("division by zero integer")
        return a / n

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not invertible in Q")
        return 1 / a

    def pow(self, a, n):
        return a ** n

    def coerce(self, x):
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def split_sign(self, a):
        return (a < 0, -a if a < 0 else a)

    def descriptor(self):
        return "Q"


class GaussianRationals(Ring):
    """Q(i), values ``(re, im)`` as pairs of Fractions.

    Floats coerce exactly (binary value), so products of float polynomials
    can be formed without rounding and converted back once.
    """

    kind = "gaussian-rational"
    is_q_algebra = True

    def zero(self):
        return (Fraction(0), Fraction(0))

    def one(self):
        return (Fraction(1), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def from_int(self, n):
        return (Fraction(n), Fraction(0))

    def int_scale(self, n, a):
        return (n * a[0], n * a[1])

    def int_divide(self, a, n):
        if n == 0:
            raise ZeroDivisionError("division by zero integer")
        return (a[0] / n, a[1] / n)

    def inverse(self, a):
        norm = a[0] * a[0] + a[1] * a[1]
        if norm == 0:
            raise ZeroDivisionError("0 is not invertible in Q(i)")
        return (a[0] / norm, -a[1] / norm)

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (Fraction(x[0]), Fraction(x[1]))
        if isinstance(x, (int, Fraction, float)):
            return (Fraction(x), Fraction(0))
        if isinstance(x, complex):
            return (Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            text = x.strip()
            if text.startswith("["):
                re_, im = text.strip("[]").split(",")
                return (Fraction(re_.strip()), Fraction(im.strip()))
            return (Fraction(text), Fraction(0))
        raise TypeError(f"cannot coerce {x!r} into Q(i)")

    def encode(self, a):
        return f"[{a[0]}, {a[1]}]"

    def format_coeff(self, a):
        if a[1] == 0:
            return str(a[0])
        return f"({a[0]}{'+' if a[1] >= 0 else '-'}{abs(a[1])}*i)"

    def split_sign(self, a):
        if a[1] == 0 and a[0] < 0:
            return True, (-a[0], a[1])
        return False, a

    def to_complex(self, a):
        return complex(float(a[0]), float(a[1]))

    def descriptor(self):
        return "Qi"


class Integers(Ring):
    kind = "big-integer"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return int(n)

    def int_scale(self, n, a):
        return n * a

    def inverse(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def pow(self, a, n):
        return a ** n

    def coerce(self, x):
        if isinstance(x, str):
            return int(x.strip())
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {x!r} into Z")

    def split_sign(self, a):
        return (a < 0, abs(a))

    def lift(self):
        def down(q):
            q = Fraction(q)
            if q.denominator != 1:
                raise ValueError(f"lifted value {q} is not integral")
            return q.numerator

        return QQ, Fraction, down

    def descriptor(self):
        return "Z"


class IntegersMod(Ring):
    """Z/mZ for any modulus m >= 2; composite m has zero divisors."""

    kind = "modular"

    def __init__(self, m):
        m = int(m)
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        self.m = m

    def _key(self):
        return (self.m,)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def from_int(self, n):
        return int(n) % self.m

    def int_scale(self, n, a):
        return (n * a) % self.m

    def pow(self, a, n):
        return pow(a, n, self.m)

    def inverse(self, a):
        if math.gcd(a, self.m) != 1:
            raise ZeroDivisionError(f"{a} is not a unit mod {self.m}")
        return pow(a, -1, self.m)

    def is_zero_divisor(self, a):
        return math.gcd(a % self.m, self.m) != 1

    def coerce(self, x):
        if isinstance(x, str):
            text = x.strip()
            match = re.fullmatch(r"(-?\d+)\s+mod\s+(\d+)", text)
            if match:
                if int(match.group(2)) != self.m:
                    raise RingMismatch(f"{text!r} is not in Z/{self.m}")
                return int(match.group(1)) % self.m
            x = Fraction(text)
        if isinstance(x, Fraction):
            return (x.numerator * self.inverse(x.denominator % self.m)) % self.m
        if isinstance(x, int):
            return x % self.m
        raise TypeError(f"cannot coerce {x!r} into Z/{self.m}")

    def encode(self, a):
        return f"{a} mod {self.m}"

    def format_coeff(self, a):
        return str(a)

    def lift(self):
        m = self.m

        def down(q):
            q = Fraction(q)
            return (q.numerator * pow(q.denominator, -1, m)) % m

        return QQ, Fraction, down

    def descriptor(self):
        return f"Zmod:{self.m}"


class ComplexFloat(Ring):
    """Complex floating point numbers with tolerance equality.

    ``a == b`` iff ``|a - b| <= eps * max(1, |a|, |b|)``.
    """

    kind = "complex-float"
    is_q_algebra = True
    exact = False

    def __init__(self, eps=1e-9):
        eps = float(eps)
        if eps < 0:
            raise ValueError("eps must be nonnegative")
        self.eps = eps

    def _key(self):
        return (self.eps,)

    def zero(self):
        return 0j

    def one(self):
        return 1 + 0j

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return complex(n)

    def int_scale(self, n, a):
        return n * a

    def int_divide(self, a, n):
        if n == 0:
            raise ZeroDivisionError("division by zero integer")
        return a / n

    def pow(self, a, n):
        return a ** n

    def eq(self, a, b):
        return abs(a - b) <= self.eps * max(1.0, abs(a), abs(b))

    def inverse(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("0 is not invertible in C")
        return 1 / a

    def coerce(self, x):
        if isinstance(x, str):
            text = x.strip()
            if text.startswith("["):
                re_, im = (float(t) for t in text.strip("[]").split(","))
                return complex(re_, im)
            try:
                return complex(Fraction(text))
            except ValueError:
                return complex(text.replace(" ", ""))
        if isinstance(x, Fraction):
            return complex(float(x))
        if isinstance(x, (int, float, complex)):
            return complex(x)
        raise TypeError(f"cannot coerce {x!r} into C")

    def encode(self, a):
        return f"[{a.real!r}, {a.imag!r}]"

    def format_coeff(self, a):
        if a.imag == 0:
            return repr(a.real)
        sign = "+" if a.imag >= 0 else "-"
        return f"({a.real!r}{sign}{abs(a.imag)!r}j)"

    def split_sign(self, a):
        if a.imag == 0 and a.real < 0:
            return True, -a
        return False, a

    def lift(self):
        """Exact binary values in Q(i); results are rounded once on the way down."""
        return QI, QI.coerce, QI.to_complex

    def descriptor(self):
        return f"C:{self.eps:g}"


class PolyRing(Ring):
    """Multivariate polynomials over ``base`` in the ordered ``variables``."""

    kind = "multivariate-poly"

    def __init__(self, base, variables):
        from .mpoly import block_order

        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        self.base = base
        self.variables = variables
        self.nvars = len(variables)
        self.is_q_algebra = base.is_q_algebra
        self.exact = base.exact
        self._order = block_order(variables)
        self._zero_exp = (0,) * self.nvars

    def _key(self):
        return (self.base, self.variables)

    def _mp(self, terms):
        from .mpoly import MPoly

        return MPoly(self, terms)

    def zero(self):
        return self._mp({})

    def one(self):
        return self._mp({self._zero_exp: self.base.one()})

    def const(self, c):
        c = self.base.coerce(c) if not isinstance(c, type(self.base.one())) else c
        return self._mp({self._zero_exp: c})

    def gen(self, name):
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return self._mp({tuple(exps): self.base.one()})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return self._mp({self._zero_exp: self.base.from_int(n)})

    def int_scale(self, n, a):
        return a.map_coeffs(lambda c: self.base.int_scale(n, c))

    def int_divide(self, a, n):
        if not self.is_q_algebra:
            raise NotQAlgebra(self, "int_divide")
        return a.map_coeffs(lambda c: self.base.int_divide(c, n))

    def eq(self, a, b):
        if self.base.exact:
            return a == b
        return (a - b).is_zero_tol()

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def inverse(self, a):
        if len(a.terms) == 1 and self._zero_exp in a.terms:
            return self.const(self.base.inverse(a.terms[self._zero_exp]))
        raise ZeroDivisionError(f"{a} is not a unit in {self}")

    def is_zero_divisor(self, a):
        # McCoy: a is a zero divisor iff some nonzero base constant kills it.
        if not a.terms:
            return True
        if isinstance(self.base, IntegersMod):
            g = self.base.m
            for c in a.terms.values():
                g = math.gcd(g, c)
            return g != 1
        return False

    def coerce(self, x):
        from .mpoly import MPoly, parse_mpoly

        if isinstance(x, MPoly):
            if x.ring != self:
                raise RingMismatch(f"{x} is over {x.ring}, expected {self}")
            return x
        if isinstance(x, str):
            return parse_mpoly(x, self)
        return self.const(self.base.coerce(x))

    def encode(self, a):
        return str(a)

    def format_coeff(self, a):
        text = str(a)
        return text if len(a.terms) <= 1 and not text.startswith("-") else f"({text})"

    def lift(self):
        inner = self.base.lift()
        if inner is None:
            return None
        qbase, up, down = inner
        qring = PolyRing(qbase, self.variables)

        def lift_up(a):
            return qring._mp({e: up(c) for e, c in a.terms.items()})

        def lift_down(a):
            return self._mp({e: down(c) for e, c in a.terms.items()})

        return qring, lift_up, lift_down

    def descriptor(self):
        return f"{self.base.descriptor()}[{','.join(self.variables)}]"


QQ = Rationals()
ZZ = Integers()
CC = ComplexFloat()
QI = GaussianRationals()


def parse_ring(text):
    """Parse a ring descriptor: ``Q``, ``Qi``, ``Z``, ``Zmod:m``, ``C`` or ``C:eps``,
    optionally followed by ``[v1,v2,...]`` for a polynomial ring."""
    text = text.strip()
    match = re.fullmatch(r"(.+?)\[([^\]]*)\]", text)
    if match:
        base = parse_ring(match.group(1))
        names = [v.strip() for v in match.group(2).split(",") if v.strip()]
        return PolyRing(base, names)
    if text == "Q":
        return QQ
    if text == "Z":
        return ZZ
    if text.startswith("Zmod:"):
        return IntegersMod(int(text[5:]))
    if text == "Qi":
        return QI
    if text == "C":
        return ComplexFloat()
    if text.startswith("C:"):
        return ComplexFloat(float(text[2:]))
    raise ValueError(f"unknown ring descriptor {text!r}")


# ---------------------------------------------------------------------------
# Checked element wrapper


@dataclass(frozen=True)
class RingElem:
    """A ring value tagged with its ring; arithmetic checks the tags."""

    ring: Ring
    value: object

    def _check(self, other):
        if not isinstance(other, RingElem):
            return RingElem(self.ring, self.ring.coerce(other))
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.ring.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.ring.sub(self.value, other.value))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        other = self._check(other)
        return RingElem(self.ring, self.ring.mul(self.value, other.value))

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._check(other)
        except (RingMismatch, TypeError, ValueError):
            return NotImplemented
        return self.ring.eq(self.value, other.value)

    def __hash__(self):
        return hash((self.ring, self.value)) if self.ring.exact else hash(self.ring)

    def __str__(self):
        return self.ring.encode(self.value)


def ring_add(a, b):
    return a + b


def ring_mul(a, b):
    return a * b


def int_scale(n, a):
    """``n`` copies of ``a`` added together (``n`` may be negative)."""
    return RingElem(a.ring, a.ring.int_scale(n, a.value))


def int_divide(a, n):
    """Exact ``b`` with ``n*b == a``; only on Q-algebras."""
    return RingElem(a.ring, a.ring.int_divide(a.value, n))


def mobius(n):
    """Möbius function by trial division."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result
