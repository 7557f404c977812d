from fractions import Fraction

import pytest

from ene.errors import NotQAlgebra, RingMismatch
from ene.rings import CC, QI, QQ, ZZ, ComplexFloat, IntegersMod, PolyRing, RingElem, int_divide, int_scale, mobius, parse_ring


@pytest.mark.parametrize("text", ["Q", "Z", "Zmod:6", "Zmod:7", "Qi", "C:1e-10", "Q[a,b]", "Zmod:6[x]"])
def test_descriptor_round_trip(text):
    ring = parse_ring(text)
    assert parse_ring(ring.descriptor()) == ring


def test_unknown_descriptor():
    with pytest.raises(ValueError):
        parse_ring("R")


def test_modular_inverse_and_zero_divisors():
    z6, z7 = IntegersMod(6), IntegersMod(7)
    for a in range(1, 7):
        assert z7.mul(a, z7.inverse(a)) == 1
    assert [a for a in range(6) if z6.is_zero_divisor(a)] == [0, 2, 3, 4]
    with pytest.raises(ZeroDivisionError):
        z6.inverse(2)
    assert z6.inverse(5) == 5


def test_integer_action_in_positive_characteristic():
    z6 = IntegersMod(6)
    assert z6.int_scale(7, 5) == 5
    assert z6.int_scale(-1, 1) == 5
    with pytest.raises(NotQAlgebra):
        z6.int_divide(1, 2)


def test_rationals_and_integers():
    assert QQ.int_divide(Fraction(1), 3) == Fraction(1, 3)
    assert QQ.coerce("3/4") == Fraction(3, 4)
    assert ZZ.inverse(-1) == -1
    with pytest.raises(ZeroDivisionError):
        ZZ.inverse(2)


def test_gaussian_rationals_are_exact():
    a = QI.coerce(complex(0.1, 0.25))
    assert QI.to_complex(a) == complex(0.1, 0.25)
    i = QI.coerce(1j)
    assert QI.mul(i, i) == QI.coerce(-1)
    b = QI.coerce("[1/3, 2]")
    assert QI.mul(b, QI.inverse(b)) == QI.one()


def test_complex_tolerance_equality():
    ring = ComplexFloat(1e-10)
    assert ring.eq(1.0, 1.0 + 5e-11)
    assert not ring.eq(1.0, 1.0 + 5e-10)
    assert ring.eq(1e6, 1e6 * (1 + 5e-11))
    assert CC.lift()[0] is QI


def test_polynomial_ring_arithmetic():
    R = PolyRing(QQ, ["a", "b"])
    a, b = R.gen("a"), R.gen("b")
    assert str((a + b) * (a - b)) == str(a * a - b * b)
    assert R.is_q_algebra and not PolyRing(ZZ, ["x"]).is_q_algebra


def test_tagged_elements_check_rings():
    x = RingElem(QQ, Fraction(1, 2))
    assert x + 1 == RingElem(QQ, Fraction(3, 2))
    assert int_scale(4, x) == 2
    assert int_divide(x, 2) == RingElem(QQ, Fraction(1, 4))
    with pytest.raises(RingMismatch):
        x + RingElem(IntegersMod(7), 1)


def test_mobius_against_divisor_sum():
    def brute(n):
        f, m, p = 1, n, 2
        while m > 1:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e > 1:
                return 0
            if e == 1:
                f = -f
            p += 1
        return f

    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert all(mobius(n) == brute(n) for n in range(1, 200))
