import random
from fractions import Fraction

import pytest

from hopfcyclic.scalars import Scalar, as_scalar, cyclotomic_polynomial, euler_phi


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_euler_phi():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_zeta4_squared_is_minus_one():
    z = Scalar.zeta(4)
    assert z * z == as_scalar(-1)


def test_inverse_of_two():
    assert as_scalar(2).inv() == as_scalar(Fraction(1, 2))


def test_zeta3_plus_zeta3_squared():
    # reduce modulo x^2 + x + 1 by hand: z + z^2 = -1
    z = Scalar.zeta(3)
    assert z + z * z == as_scalar(-1)


def test_zeta2_degenerates_to_rational():
    z = Scalar.zeta(2)
    assert z.is_rational()
    assert z == as_scalar(-1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar.zero().inv()


def test_root_of_unity_order():
    for m in (3, 4, 5, 6, 8, 12):
        z = Scalar.zeta(m)
        assert z**m == as_scalar(1)
        for k in range(1, m):
            assert z**k != as_scalar(1)


def test_cross_conductor_equality():
    # zeta_6^2 = zeta_3 even though representations differ
    assert Scalar.zeta(6) ** 2 == Scalar.zeta(3)
    assert Scalar.zeta(4) ** 2 == Scalar.zeta(2)


def _random_scalar(rng, m):
    phi = euler_phi(m)
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(phi)]
    out = Scalar.zero()
    for k, c in enumerate(coeffs):
        out = out + as_scalar(c) * Scalar.zeta(m) ** k
    return out


def test_field_axioms_randomized():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.choice([1, 3, 4, 5, 6])
        a = _random_scalar(rng, m)
        b = _random_scalar(rng, rng.choice([1, m]))
        c = _random_scalar(rng, m)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inv() == as_scalar(1)


def test_mixed_conductor_arithmetic():
    a = Scalar.zeta(3)
    b = Scalar.zeta(4)
    prod = a * b
    assert prod == Scalar.zeta(12) ** 7  # zeta_3 zeta_4 = zeta_12^4 zeta_12^3
    assert prod * prod.inv() == as_scalar(1)


def test_str_deterministic():
    x = Scalar.zeta(4) * as_scalar(Fraction(1, 2)) + as_scalar(3)
    assert str(x) == "3 + 1/2*z4"
    assert str(as_scalar(Fraction(-2, 3))) == "-2/3"
