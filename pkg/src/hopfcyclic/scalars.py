"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A scalar is a polynomial in zeta_m with Fraction coefficients, reduced
modulo the m-th cyclotomic polynomial, so its coefficient vector has
length phi(m).  Conductor m = 1 is plain Q.  Mixed-conductor arithmetic
merges to the lcm first; no rounding ever happens anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(m: int) -> int:
    assert m >= 1
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # exact division of integer polynomials, coefficients ascending
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


_CYCLO: dict[int, list[int]] = {1: [-1, 1]}


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of Phi_m, ascending, monic of degree phi(m)."""
    if m in _CYCLO:
        return _CYCLO[m]
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
            assert rem == [0]
    _CYCLO[m] = num
    assert len(num) == euler_phi(m) + 1
    return num


# zeta_m^k reduced mod Phi_m, as Fraction vectors of length phi(m)
_POWERS: dict[int, list[tuple[Fraction, ...]]] = {}


def _zeta_powers(m: int, upto: int) -> list[tuple[Fraction, ...]]:
    phi = euler_phi(m)
    table = _POWERS.setdefault(m, [])
    if not table:
        for k in range(phi):
            vec = [_ZERO] * phi
            vec[k] = _ONE
            table.append(tuple(vec))
    # x^phi = -(lower part of Phi_m); extend by multiplying by x
    head = [Fraction(-c) for c in cyclotomic_polynomial(m)[:phi]]
    while len(table) <= upto:
        prev = table[-1]
        vec = [_ZERO] + list(prev[: phi - 1])
        lead = prev[phi - 1]
        if lead:
            for j in range(phi):
                vec[j] += lead * head[j]
        table.append(tuple(vec))
    return table


class Scalar:
    """An element of Q(zeta_m), immutable and exact."""

    __slots__ = ("m", "c")
    __hash__ = None  # equality crosses conductors; do not use as dict key

    def __init__(self, m: int, coeffs: tuple[Fraction, ...]):
        # internal; use the constructors below
        self.m = m
        self.c = coeffs

    @staticmethod
    def _build(m: int, coeffs: list[Fraction]) -> "Scalar":
        if m > 1 and not any(coeffs[1:]):
            return Scalar(1, (coeffs[0],))
        return Scalar(m, tuple(coeffs))

    @staticmethod
    def from_rational(q) -> "Scalar":
        return Scalar(1, (Fraction(q),))

    @staticmethod
    def zero() -> "Scalar":
        return _S_ZERO

    @staticmethod
    def one() -> "Scalar":
        return _S_ONE

    @staticmethod
    def zeta(m: int, k: int = 1) -> "Scalar":
        """zeta_m^k."""
        assert m >= 1
        if m == 1:
            return _S_ONE
        k %= m
        phi = euler_phi(m)
        vec = _zeta_powers(m, max(k, phi - 1))[k]
        return Scalar._build(m, list(vec))

    # -- conductor handling ------------------------------------------------

    def _embed(self, L: int) -> tuple[Fraction, ...]:
        """Coefficient vector of self inside Q(zeta_L); requires m | L."""
        if self.m == L:
            return self.c
        step = L // self.m
        phi = euler_phi(L)
        table = _zeta_powers(L, max((len(self.c) - 1) * step, phi - 1))
        out = [_ZERO] * phi
        for k, ck in enumerate(self.c):
            if ck:
                row = table[k * step]
                for j in range(phi):
                    out[j] += ck * row[j]
        return tuple(out)

    @staticmethod
    def _merge(a: "Scalar", b: "Scalar"):
        if a.m == b.m:
            return a.m, a.c, b.c
        L = a.m * b.m // gcd(a.m, b.m)
        return L, a._embed(L), b._embed(L)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self.m == 1 and other.m == 1:
            return Scalar(1, (self.c[0] + other.c[0],))
        m, ca, cb = Scalar._merge(self, other)
        return Scalar._build(m, [x + y for x, y in zip(ca, cb)])

    def __sub__(self, other) -> "Scalar":
        return self + (-as_scalar(other))

    def __neg__(self) -> "Scalar":
        return Scalar(self.m, tuple(-x for x in self.c))

    def __mul__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self.m == 1 and other.m == 1:
            return Scalar(1, (self.c[0] * other.c[0],))
        m, ca, cb = Scalar._merge(self, other)
        phi = len(ca)
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        conv[i + j] += x * y
        table = _zeta_powers(m, 2 * phi - 2)
        out = list(conv[:phi])
        for k in range(phi, 2 * phi - 1):
            ck = conv[k]
            if ck:
                row = table[k]
                for j in range(phi):
                    out[j] += ck * row[j]
        return Scalar._build(m, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "Scalar":
        return as_scalar(other) - self

    def inv(self) -> "Scalar":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.m == 1:
            return Scalar(1, (1 / self.c[0],))
        # extended Euclid in Q[x] against Phi_m
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        a = list(self.c)
        while len(a) > 1 and not a[-1]:
            a.pop()
        # invariants: s*self + t*Phi = r
        r0, s0 = phi_poly, [_ZERO]
        r1, s1 = a, [_ONE]
        while True:
            if len(r1) == 1:
                lead = r1[0]
                inv_coeffs = [x / lead for x in s1]
                break
            q, rem = _poly_divmod_frac(r0, r1)
            s_new = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0 = r1, s1
            r1, s1 = rem, s_new
            assert r1, "cyclotomic polynomial is squarefree"
        phi = euler_phi(self.m)
        out = [_ZERO] * phi
        table = _zeta_powers(self.m, max(len(inv_coeffs) - 1, phi - 1))
        for k, ck in enumerate(inv_coeffs):
            if ck:
                row = table[k]
                for j in range(phi):
                    out[j] += ck * row[j]
        result = Scalar._build(self.m, out)
        return result

    def __truediv__(self, other) -> "Scalar":
        return self * as_scalar(other).inv()

    def __rtruediv__(self, other) -> "Scalar":
        return as_scalar(other) * self.inv()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        out = _S_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = as_scalar(other)
        if self.m == other.m:
            return self.c == other.c
        m, ca, cb = Scalar._merge(self, other)
        return ca == cb

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.m == 1 and self.c[0] == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.m == 1

    def as_fraction(self) -> Fraction:
        if self.m != 1:
            raise ValueError("scalar is not rational: %s" % self)
        return self.c[0]

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if self.m == 1:
            return str(self.c[0])
        parts = []
        for k, ck in enumerate(self.c):
            if not ck:
                continue
            if k == 0:
                parts.append(str(ck))
            else:
                z = "z%d" % self.m if k == 1 else "z%d^%d" % (self.m, k)
                if ck == 1:
                    parts.append(z)
                elif ck == -1:
                    parts.append("-" + z)
                else:
                    parts.append("%s*%s" % (ck, z))
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self) -> str:
        return "Scalar(%s)" % self


def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [_ZERO] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    while len(num) > 1 and not num[-1]:
        num.pop()
    if len(num) == 1 and not num[0]:
        num = []
    return q, num


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


_S_ZERO = Scalar(1, (_ZERO,))
_S_ONE = Scalar(1, (_ONE,))


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(1, (Fraction(x),))
    raise TypeError("cannot coerce %r to Scalar" % (x,))


ZERO = _S_ZERO
ONE = _S_ONE
