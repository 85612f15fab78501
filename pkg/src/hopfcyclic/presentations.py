"""Presented algebras and Hopf algebras with computable normal forms.

Each family supplies its own confluent, terminating reduction to normal
form (PBW ordering for enveloping algebras, power collection for
Taft/torus relations, group-word normalization, explicit tables for
finite-dimensional constructions).  There is deliberately no generic
completion engine.
"""

from __future__ import annotations

import itertools

from .elements import Element, TensorChain
from .scalars import ONE, ZERO, Scalar, as_scalar


class AlgebraPresentation:
    """Base: an associative unital algebra with a distinguished basis."""

    is_hopf = False
    filtration_safe = True
    strictly_graded = False

    def __init__(self, name: str, conductor: int = 1):
        self.name = name
        self.conductor = conductor
        self._mul_memo: dict = {}

    # -- required hooks -----------------------------------------------------

    def mul_monomials(self, m1, m2) -> Element:
        raise NotImplementedError

    def basis(self, max_degree: int | None = None) -> list:
        raise NotImplementedError

    def monomial_degree(self, m) -> int:
        return 0 if m == self.unit_monomial() else 1

    def monomial_str(self, m) -> str:
        return str(m)

    def monomial_sort_key(self, m):
        return (self.monomial_degree(m), self.monomial_str(m))

    def is_finite_dimensional(self) -> bool:
        return False

    def unit_monomial(self):
        """The basis monomial carrying the unit, or None if not a monomial."""
        return None

    # -- derived helpers ----------------------------------------------------

    def unit_element(self) -> Element:
        u = self.unit_monomial()
        assert u is not None, "%s must override unit_element" % self.name
        return Element.monomial(self, u)

    def dimension(self) -> int:
        assert self.is_finite_dimensional()
        return len(self.basis())

    def element(self, terms: dict) -> Element:
        return Element(self, terms)

    def zero_element(self) -> Element:
        return Element(self, {})


class HopfBase(AlgebraPresentation):
    """Adds coproduct, counit and antipode, with memoized monomial tables."""

    is_hopf = True

    def __init__(self, name: str, conductor: int = 1):
        super().__init__(name, conductor)
        self._coproduct_memo: dict = {}
        self._antipode_memo: dict = {}

    def coproduct_monomial(self, m) -> TensorChain:
        raise NotImplementedError

    def counit_monomial(self, m) -> Scalar:
        raise NotImplementedError

    def antipode_monomial(self, m) -> Element:
        raise NotImplementedError

    # element-level linear/multiplicative extensions

    def coproduct(self, el: Element) -> TensorChain:
        out = TensorChain(self, 2, {})
        for m, c in el.terms.items():
            out = out + self.coproduct_monomial(m).scale(c)
        return out

    def counit(self, el: Element) -> Scalar:
        return el.apply_functional(self.counit_monomial)

    def antipode(self, el: Element) -> Element:
        return el.map_monomials(self.antipode_monomial)


# ---------------------------------------------------------------------------
# PBW-style presentations: ordered words in generators with a
# degree-reducing straightening rule u v -> v u + [u, v] for u > v.
# ---------------------------------------------------------------------------


class PBWPresentation(HopfBase):
    """Ordered-monomial presentation of an enveloping-algebra type.

    Generators are identified by sortable keys; a normal form is a
    non-decreasing word of keys.  Subclasses provide the straightening
    bracket and the Hopf structure on generators.
    """

    def __init__(self, name: str, conductor: int = 1):
        super().__init__(name, conductor)
        self._word_memo: dict = {}

    # subclass hooks

    def generator_keys(self, max_degree: int | None = None) -> list:
        raise NotImplementedError

    def gen_degree(self, key) -> int:
        return 1

    def gen_bracket(self, u, v) -> Element:
        """[u, v] as an Element, for generator keys u > v."""
        raise NotImplementedError

    def gen_coproduct(self, key) -> TensorChain:
        """Default: primitive generator."""
        g = Element.monomial(self, (key,))
        one = self.unit_element()
        return TensorChain.of_elements(g, one) + TensorChain.of_elements(one, g)

    def gen_counit(self, key) -> Scalar:
        return ZERO

    def gen_antipode(self, key) -> Element:
        return Element.monomial(self, (key,), -1)

    def gen_name(self, key) -> str:
        return str(key)

    # algebra structure

    def unit_monomial(self):
        return ()

    def mul_monomials(self, m1, m2) -> Element:
        key = (m1, m2)
        cached = self._mul_memo.get(key)
        if cached is None:
            cached = self._normalize_word(m1 + m2)
            self._mul_memo[key] = cached
        return cached

    def _normalize_word(self, word: tuple) -> Element:
        cached = self._word_memo.get(word)
        if cached is not None:
            return cached
        pos = -1
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                pos = i
                break
        if pos < 0:
            result = Element.monomial(self, word)
        else:
            u, v = word[pos], word[pos + 1]
            swapped = word[:pos] + (v, u) + word[pos + 2 :]
            result = self._normalize_word(swapped)
            bracket = self.gen_bracket(u, v)
            for bm, bc in bracket.terms.items():
                inner = self._normalize_word(word[:pos] + bm + word[pos + 2 :])
                result = result + inner.scale(bc)
        self._word_memo[word] = result
        return result

    def monomial_degree(self, m) -> int:
        return sum(self.gen_degree(k) for k in m)

    def monomial_str(self, m) -> str:
        if not m:
            return "1"
        parts = []
        for key, group in itertools.groupby(m):
            e = len(list(group))
            parts.append(self.gen_name(key) if e == 1 else "%s^%d" % (self.gen_name(key), e))
        return "*".join(parts)

    def monomial_sort_key(self, m):
        return (self.monomial_degree(m), len(m), m)

    def basis(self, max_degree: int | None = None) -> list:
        assert max_degree is not None, "infinite basis; pass max_degree"
        gens = self.generator_keys(max_degree)
        out: list[tuple] = []

        def extend(word: tuple, start: int, budget: int) -> None:
            out.append(word)
            for idx in range(start, len(gens)):
                d = self.gen_degree(gens[idx])
                if d <= budget:
                    extend(word + (gens[idx],), idx, budget - d)

        extend((), 0, max_degree)
        out.sort(key=self.monomial_sort_key)
        return out

    # Hopf structure by multiplicative / antimultiplicative extension

    def coproduct_monomial(self, m) -> TensorChain:
        cached = self._coproduct_memo.get(m)
        if cached is not None:
            return cached
        if not m:
            one = self.unit_element()
            result = TensorChain.of_elements(one, one)
        else:
            result = self.coproduct_monomial(m[:-1]).multiply_into(
                self.gen_coproduct(m[-1])
            )
        self._coproduct_memo[m] = result
        return result

    def counit_monomial(self, m) -> Scalar:
        out = ONE
        for key in m:
            out = out * self.gen_counit(key)
            if out.is_zero():
                return ZERO
        return out

    def antipode_monomial(self, m) -> Element:
        cached = self._antipode_memo.get(m)
        if cached is not None:
            return cached
        if not m:
            result = self.unit_element()
        else:
            result = self.gen_antipode(m[-1]) * self.antipode_monomial(m[:-1])
        self._antipode_memo[m] = result
        return result


class EnvelopingPresentation(PBWPresentation):
    """U(g) for a finite-dimensional Lie algebra given by structure constants.

    Generator keys are basis indices; all generators are primitive, so the
    antipode negates generators and never raises the filtration degree.
    """

    def __init__(self, name, lie, conductor: int = 1):
        super().__init__(name, conductor)
        self.lie = lie  # LieData
        self.strictly_graded = lie.is_graded()

    def generator_keys(self, max_degree: int | None = None) -> list:
        return list(range(self.lie.dim))

    def gen_degree(self, key) -> int:
        return self.lie.degrees[key]

    def gen_bracket(self, u, v) -> Element:
        return Element(self, {(k,): c for k, c in self.lie.bracket(u, v).items()})

    def gen_name(self, key) -> str:
        return self.lie.names[key]


class H1Presentation(PBWPresentation):
    """Transverse-symmetry Hopf algebra in codimension 1.

    Generators Y, X and a ladder d_1, d_2, ... materialized lazily as the
    straightening rule [X, d_n] = d_{n+1} demands; relations
    [Y, X] = X, [Y, d_n] = n d_n, [d_n, d_m] = 0.  The antipode sends X to
    -X + d_1 Y, so images can raise the filtration degree; homology-scale
    truncation is therefore refused for this family.
    """

    KEY_X = (1, 0)
    KEY_Y = (2, 0)
    filtration_safe = False

    def __init__(self, name: str = "h1"):
        super().__init__(name, 1)

    @staticmethod
    def delta_key(n: int):
        return (0, n)

    def generator_keys(self, max_degree: int | None = None) -> list:
        assert max_degree is not None
        keys = [self.delta_key(n) for n in range(1, max_degree + 1)]
        return keys + [self.KEY_X, self.KEY_Y]

    def gen_degree(self, key) -> int:
        return key[1] if key[0] == 0 else 1

    def gen_bracket(self, u, v) -> Element:
        # u > v in the order d_1 < d_2 < ... < X < Y
        if u == self.KEY_Y and v == self.KEY_X:
            return Element.monomial(self, (self.KEY_X,))
        if u == self.KEY_Y and v[0] == 0:
            return Element.monomial(self, (v,), v[1])
        if u == self.KEY_X and v[0] == 0:
            return Element.monomial(self, (self.delta_key(v[1] + 1),))
        if u[0] == 0 and v[0] == 0:
            return self.zero_element()
        raise AssertionError("unexpected straightening pair %r %r" % (u, v))

    def gen_coproduct(self, key) -> TensorChain:
        if key == self.KEY_X:
            x = Element.monomial(self, (self.KEY_X,))
            y = Element.monomial(self, (self.KEY_Y,))
            d1 = Element.monomial(self, (self.delta_key(1),))
            one = self.unit_element()
            return (
                TensorChain.of_elements(x, one)
                + TensorChain.of_elements(one, x)
                + TensorChain.of_elements(d1, y)
            )
        if key == self.KEY_Y or key == self.delta_key(1):
            return super().gen_coproduct(key)
        # Delta d_{n+1} = [Delta X, Delta d_n], computed on demand
        n = key[1]
        dx = self.gen_coproduct(self.KEY_X)
        dn = self.coproduct_monomial((self.delta_key(n - 1),))
        return dx.multiply_into(dn) - dn.multiply_into(dx)

    def gen_antipode(self, key) -> Element:
        if key == self.KEY_X:
            return Element(
                self,
                {
                    (self.KEY_X,): as_scalar(-1),
                    (self.delta_key(1), self.KEY_Y): ONE,
                },
            )
        if key == self.KEY_Y or key == self.delta_key(1):
            return Element.monomial(self, (key,), -1)
        # S(d_{n+1}) = [S(d_n), S(X)]
        n = key[1]
        sdn = self.antipode_monomial((self.delta_key(n - 1),))
        sx = self.antipode_monomial((self.KEY_X,))
        return sdn * sx - sx * sdn

    def gen_name(self, key) -> str:
        if key == self.KEY_X:
            return "X"
        if key == self.KEY_Y:
            return "Y"
        return "d%d" % key[1]

    def x(self) -> Element:
        return Element.monomial(self, (self.KEY_X,))

    def y(self) -> Element:
        return Element.monomial(self, (self.KEY_Y,))

    def delta(self, n: int) -> Element:
        return Element.monomial(self, (self.delta_key(n),))


class PolynomialHopfPresentation(PBWPresentation):
    """Commutative polynomial Hopf algebra with prescribed generator tables."""

    def __init__(
        self,
        name: str,
        gen_names: list[str],
        degrees: list[int],
        coproducts,
        antipodes,
        conductor: int = 1,
        strictly_graded: bool = True,
    ):
        super().__init__(name, conductor)
        self._names = gen_names
        self._degrees = degrees
        self._coproducts = coproducts  # key -> TensorChain builder
        self._antipodes = antipodes  # key -> Element builder
        self.strictly_graded = strictly_graded

    def generator_keys(self, max_degree: int | None = None) -> list:
        return list(range(len(self._names)))

    def gen_degree(self, key) -> int:
        return self._degrees[key]

    def gen_bracket(self, u, v) -> Element:
        return self.zero_element()

    def gen_coproduct(self, key) -> TensorChain:
        if self._coproducts and key in self._coproducts:
            return self._coproducts[key](self)
        return super().gen_coproduct(key)

    def gen_antipode(self, key) -> Element:
        if self._antipodes and key in self._antipodes:
            return self._antipodes[key](self)
        return super().gen_antipode(key)

    def gen_name(self, key) -> str:
        return self._names[key]


# ---------------------------------------------------------------------------
# Taft family (Sweedler at N = 2): g^N = 1, x^N = 0, x g = zeta g x.
# ---------------------------------------------------------------------------


class TaftPresentation(HopfBase):
    """Monomials g^a x^b with 0 <= a, b < N; normal form keeps g first."""

    strictly_graded = False

    def __init__(self, N: int, name: str | None = None):
        assert N >= 2, "Taft family needs N >= 2"
        super().__init__(name or ("sweedler" if N == 2 else "taft-%d" % N), N)
        self.N = N
        self.zeta = Scalar.zeta(N)

    def unit_monomial(self):
        return (0, 0)

    def mul_monomials(self, m1, m2) -> Element:
        a1, b1 = m1
        a2, b2 = m2
        if b1 + b2 >= self.N:
            return self.zero_element()
        # x g = zeta g x, so x^b1 crosses g^a2 with b1*a2 twists
        coeff = self.zeta ** (b1 * a2)
        return Element(self, {((a1 + a2) % self.N, b1 + b2): coeff})

    def basis(self, max_degree: int | None = None) -> list:
        return [(a, b) for a in range(self.N) for b in range(self.N)]

    def is_finite_dimensional(self) -> bool:
        return True

    def monomial_degree(self, m) -> int:
        return m[0] + m[1]

    def monomial_str(self, m) -> str:
        a, b = m
        parts = []
        if a:
            parts.append("g" if a == 1 else "g^%d" % a)
        if b:
            parts.append("x" if b == 1 else "x^%d" % b)
        return "*".join(parts) if parts else "1"

    def monomial_sort_key(self, m):
        return m

    def g(self, power: int = 1) -> Element:
        return Element.monomial(self, (power % self.N, 0))

    def x(self) -> Element:
        return Element.monomial(self, (0, 1))

    def coproduct_monomial(self, m) -> TensorChain:
        cached = self._coproduct_memo.get(m)
        if cached is not None:
            return cached
        a, b = m
        g = self.g()
        x = self.x()
        one = self.unit_element()
        dg = TensorChain.of_elements(g, g)
        dx = TensorChain.of_elements(x, one) + TensorChain.of_elements(g, x)
        result = TensorChain.of_elements(one, one)
        for _ in range(a):
            result = result.multiply_into(dg)
        for _ in range(b):
            result = result.multiply_into(dx)
        self._coproduct_memo[m] = result
        return result

    def counit_monomial(self, m) -> Scalar:
        return ONE if m[1] == 0 else ZERO

    def antipode_monomial(self, m) -> Element:
        cached = self._antipode_memo.get(m)
        if cached is not None:
            return cached
        a, b = m
        sg = self.g(self.N - 1)
        sx = self.g(self.N - 1) * self.x().scale(-1)  # S(x) = -g^{-1} x
        result = self.unit_element()
        for _ in range(b):
            result = result * sx
        for _ in range(a):
            result = result * sg
        self._antipode_memo[m] = result
        return result


# ---------------------------------------------------------------------------
# Twisted torus: V U = zeta_m U V, either finite (U^m = V^m = 1) or Laurent.
# ---------------------------------------------------------------------------


class TorusPresentation(AlgebraPresentation):
    """Monomials U^a V^b; finite quotient when modulus is set."""

    def __init__(self, m: int, finite: bool = True, name: str | None = None):
        assert m >= 2
        default = "nc-torus-%d" % m if finite else "nc-torus-%d-laurent" % m
        super().__init__(name or default, m)
        self.m = m
        self.finite = finite
        self.zeta = Scalar.zeta(m)

    def unit_monomial(self):
        return (0, 0)

    def mul_monomials(self, m1, m2) -> Element:
        a1, b1 = m1
        a2, b2 = m2
        coeff = self.zeta ** (b1 * a2)  # V^b1 U^a2 = zeta^(b1 a2) U^a2 V^b1
        a, b = a1 + a2, b1 + b2
        if self.finite:
            a, b = a % self.m, b % self.m
        return Element(self, {(a, b): coeff})

    def basis(self, max_degree: int | None = None) -> list:
        if self.finite:
            return [(a, b) for a in range(self.m) for b in range(self.m)]
        assert max_degree is not None, "Laurent torus basis needs a degree bound"
        r = max_degree
        return [
            (a, b)
            for a in range(-r, r + 1)
            for b in range(-r, r + 1)
            if abs(a) + abs(b) <= r
        ]

    def is_finite_dimensional(self) -> bool:
        return self.finite

    def monomial_degree(self, m) -> int:
        return abs(m[0]) + abs(m[1])

    def monomial_str(self, m) -> str:
        a, b = m
        parts = []
        if a:
            parts.append("U" if a == 1 else "U^%d" % a)
        if b:
            parts.append("V" if b == 1 else "V^%d" % b)
        return "*".join(parts) if parts else "1"

    def monomial_sort_key(self, m):
        return m

    def u(self, power: int = 1) -> Element:
        return Element.monomial(self, (power % self.m if self.finite else power, 0))

    def v(self, power: int = 1) -> Element:
        return Element.monomial(self, (0, power % self.m if self.finite else power))

    def trace(self, el: Element) -> Scalar:
        """Coefficient of the identity monomial."""
        return el.coefficient((0, 0))


# ---------------------------------------------------------------------------
# Group algebras.
# ---------------------------------------------------------------------------


class FiniteGroupPresentation(HopfBase):
    """Group algebra of a finite group given by its multiplication table."""

    def __init__(self, name: str, elements: list, table: dict, identity):
        super().__init__(name, 1)
        self.elements = list(elements)
        self.table = dict(table)
        self.identity = identity
        self._validate()
        self.inverse = {}
        for g in self.elements:
            for h in self.elements:
                if self.table[(g, h)] == self.identity:
                    self.inverse[g] = h
        assert len(self.inverse) == len(self.elements), "not a group: missing inverses"

    def _validate(self):
        for g in self.elements:
            assert self.table[(self.identity, g)] == g
            assert self.table[(g, self.identity)] == g
            for h in self.elements:
                for k in self.elements:
                    left = self.table[(self.table[(g, h)], k)]
                    right = self.table[(g, self.table[(h, k)])]
                    if left != right:
                        raise ValueError(
                            "non-associative table at (%r, %r, %r)" % (g, h, k)
                        )

    def unit_monomial(self):
        return self.identity

    def mul_monomials(self, m1, m2) -> Element:
        return Element.monomial(self, self.table[(m1, m2)])

    def basis(self, max_degree: int | None = None) -> list:
        return list(self.elements)

    def is_finite_dimensional(self) -> bool:
        return True

    def monomial_degree(self, m) -> int:
        return 0 if m == self.identity else 1

    def monomial_str(self, m) -> str:
        return str(m)

    def monomial_sort_key(self, m):
        return self.elements.index(m)

    def coproduct_monomial(self, m) -> TensorChain:
        return TensorChain(self, 2, {(m, m): ONE})

    def counit_monomial(self, m) -> Scalar:
        return ONE

    def antipode_monomial(self, m) -> Element:
        return Element.monomial(self, self.inverse[m])


class FreeAbelianPresentation(HopfBase):
    """Group algebra of Z^d with Laurent-monomial basis."""

    def __init__(self, rank: int, name: str | None = None):
        assert rank >= 1
        super().__init__(name or "z%d-free" % rank, 1)
        self.rank = rank

    def unit_monomial(self):
        return (0,) * self.rank

    def mul_monomials(self, m1, m2) -> Element:
        return Element.monomial(self, tuple(a + b for a, b in zip(m1, m2)))

    def basis(self, max_degree: int | None = None) -> list:
        assert max_degree is not None, "Z^d basis needs a degree bound"
        r = max_degree
        ranges = [range(-r, r + 1)] * self.rank
        return [
            m for m in itertools.product(*ranges) if sum(abs(x) for x in m) <= r
        ]

    def monomial_degree(self, m) -> int:
        return sum(abs(x) for x in m)

    def monomial_str(self, m) -> str:
        if not any(m):
            return "1"
        letters = "UVWT"
        parts = []
        for i, e in enumerate(m):
            if e:
                base = letters[i] if i < len(letters) else "U%d" % i
                parts.append(base if e == 1 else "%s^%d" % (base, e))
        return "*".join(parts)

    def monomial_sort_key(self, m):
        return (self.monomial_degree(m), m)

    def coproduct_monomial(self, m) -> TensorChain:
        return TensorChain(self, 2, {(m, m): ONE})

    def counit_monomial(self, m) -> Scalar:
        return ONE

    def antipode_monomial(self, m) -> Element:
        return Element.monomial(self, tuple(-x for x in m))


# ---------------------------------------------------------------------------
# Explicit structure tables (duals, opposites, tensors, matrix algebras,
# and deliberately corrupted fixtures for negative controls).
# ---------------------------------------------------------------------------


class TableAlgebraPresentation(AlgebraPresentation):
    """Finite-dimensional algebra with an explicit multiplication table.

    Monomials are indices into a list of printable basis names; the unit
    may be an arbitrary linear combination of basis vectors.
    """

    def __init__(
        self,
        name: str,
        basis_names: list[str],
        mul_table: dict,
        unit_coeffs: dict,
        conductor: int = 1,
        degrees: list[int] | None = None,
    ):
        super().__init__(name, conductor)
        self.basis_names = list(basis_names)
        self.mul_table = {
            k: {i: as_scalar(c) for i, c in row.items() if not as_scalar(c).is_zero()}
            for k, row in mul_table.items()
        }
        self.unit_coeffs = {i: as_scalar(c) for i, c in unit_coeffs.items()}
        self.degrees = degrees or [0 if len(basis_names) == 1 else 1] * len(basis_names)

    def unit_monomial(self):
        items = [(i, c) for i, c in self.unit_coeffs.items() if not c.is_zero()]
        if len(items) == 1 and items[0][1].is_one():
            return items[0][0]
        return None

    def unit_element(self) -> Element:
        return Element(self, self.unit_coeffs)

    def mul_monomials(self, m1, m2) -> Element:
        return Element(self, self.mul_table.get((m1, m2), {}))

    def basis(self, max_degree: int | None = None) -> list:
        return list(range(len(self.basis_names)))

    def is_finite_dimensional(self) -> bool:
        return True

    def monomial_degree(self, m) -> int:
        return self.degrees[m]

    def monomial_str(self, m) -> str:
        return self.basis_names[m]

    def monomial_sort_key(self, m):
        return m


class TablePresentation(TableAlgebraPresentation, HopfBase):
    """Finite-dimensional Hopf algebra through explicit structure tables."""

    is_hopf = True

    def __init__(
        self,
        name: str,
        basis_names: list[str],
        mul_table: dict,
        unit_coeffs: dict,
        coproduct_table: dict,
        counit_table: dict,
        antipode_table: dict,
        conductor: int = 1,
        degrees: list[int] | None = None,
    ):
        TableAlgebraPresentation.__init__(
            self, name, basis_names, mul_table, unit_coeffs, conductor, degrees
        )
        self._coproduct_memo = {}
        self._antipode_memo = {}
        self.coproduct_table = {
            i: {k: as_scalar(c) for k, c in row.items() if not as_scalar(c).is_zero()}
            for i, row in coproduct_table.items()
        }
        self.counit_table = {i: as_scalar(c) for i, c in counit_table.items()}
        self.antipode_table = {
            i: {j: as_scalar(c) for j, c in row.items() if not as_scalar(c).is_zero()}
            for i, row in antipode_table.items()
        }

    def coproduct_monomial(self, m) -> TensorChain:
        return TensorChain(self, 2, self.coproduct_table.get(m, {}))

    def counit_monomial(self, m) -> Scalar:
        return self.counit_table.get(m, ZERO)

    def antipode_monomial(self, m) -> Element:
        return Element(self, self.antipode_table.get(m, {}))


def matrix_algebra(n: int, name: str | None = None) -> TableAlgebraPresentation:
    """M_n(k) with matrix-unit basis E_ij."""
    assert n >= 1
    names = ["E%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    table = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            table[(a, b)] = {idx[(i, l)]: ONE} if j == k else {}
    unit = {idx[(i, i)]: ONE for i in range(n)}
    return TableAlgebraPresentation(
        name or ("k" if n == 1 else "m%d" % n), names, table, unit
    )


def matrix_trace(alg: TableAlgebraPresentation, el: Element) -> Scalar:
    """Trace functional on matrix_algebra(n): sum of E_ii coefficients."""
    n = int(round(len(alg.basis_names) ** 0.5))
    out = Scalar.zero()
    for i in range(n):
        out = out + el.coefficient(i * n + i)
    return out
