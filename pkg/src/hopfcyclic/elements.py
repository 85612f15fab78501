"""Linear-combination containers over a presented algebra.

Element: finitely supported map from normal-form monomials to scalars.
TensorChain: level-n element of A x ... x A (n factors), keyed by tuples
of normal-form monomials; level 0 holds a bare scalar under the key ().
"""

from __future__ import annotations

from .scalars import Scalar, as_scalar


def _merge_term(terms: dict, key, coeff: Scalar) -> None:
    cur = terms.get(key)
    if cur is None:
        if not coeff.is_zero():
            terms[key] = coeff
    else:
        s = cur + coeff
        if s.is_zero():
            del terms[key]
        else:
            terms[key] = s


class Element:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms: dict | None = None):
        self.alg = alg
        self.terms = {}
        for m, c in (terms or {}).items():
            _merge_term(self.terms, m, as_scalar(c))

    @staticmethod
    def monomial(alg, m, coeff=1) -> "Element":
        return Element(alg, {m: as_scalar(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Element") -> "Element":
        assert self.alg is other.alg
        out = dict(self.terms)
        for m, c in other.terms.items():
            _merge_term(out, m, c)
        e = Element.__new__(Element)
        e.alg, e.terms = self.alg, out
        return e

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        e = Element.__new__(Element)
        e.alg = self.alg
        e.terms = {m: -c for m, c in self.terms.items()}
        return e

    def scale(self, s) -> "Element":
        s = as_scalar(s)
        e = Element.__new__(Element)
        e.alg = self.alg
        e.terms = {} if s.is_zero() else {m: c * s for m, c in self.terms.items()}
        return e

    def __mul__(self, other: "Element") -> "Element":
        assert self.alg is other.alg, "elements over different presentations"
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                prod = self.alg.mul_monomials(m1, m2)
                c = c1 * c2
                for m, pc in prod.terms.items():
                    _merge_term(out, m, pc * c)
        e = Element.__new__(Element)
        e.alg, e.terms = self.alg, out
        return e

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def coefficient(self, m) -> Scalar:
        return self.terms.get(m, Scalar.zero())

    def apply_functional(self, fn) -> Scalar:
        """Sum of fn(monomial) weighted by coefficients; fn returns Scalar."""
        out = Scalar.zero()
        for m, c in self.terms.items():
            out = out + c * fn(m)
        return out

    def map_monomials(self, fn) -> "Element":
        """Linear extension of fn: monomial -> Element."""
        out = Element(self.alg, {})
        for m, c in self.terms.items():
            out = out + fn(m).scale(c)
        return out

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(self.alg.monomial_degree(m) for m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=self.alg.monomial_sort_key)
        parts = []
        for m in keys:
            c = self.terms[m]
            name = self.alg.monomial_str(m)
            cs = str(c)
            if name == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append("-" + name)
            elif ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs):
                parts.append("(%s)*%s" % (cs, name))
            else:
                parts.append("%s*%s" % (cs, name))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self) -> str:
        return "Element(%s)" % self


class TensorChain:
    __slots__ = ("alg", "level", "terms")

    def __init__(self, alg, level: int, terms: dict | None = None):
        assert level >= 0
        self.alg = alg
        self.level = level
        self.terms = {}
        for key, c in (terms or {}).items():
            assert len(key) == level
            _merge_term(self.terms, tuple(key), as_scalar(c))

    @staticmethod
    def scalar(alg, value) -> "TensorChain":
        return TensorChain(alg, 0, {(): as_scalar(value)})

    @staticmethod
    def of_elements(*elements: Element) -> "TensorChain":
        """Tensor product of elements, expanded into monomial keys."""
        alg = elements[0].alg
        terms = {(): Scalar.one()}
        for e in elements:
            assert e.alg is alg
            nxt: dict = {}
            for key, c in terms.items():
                for m, cm in e.terms.items():
                    _merge_term(nxt, key + (m,), c * cm)
            terms = nxt
        return TensorChain(alg, len(elements), terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorChain") -> "TensorChain":
        assert self.alg is other.alg and self.level == other.level
        out = dict(self.terms)
        for k, c in other.terms.items():
            _merge_term(out, k, c)
        t = TensorChain.__new__(TensorChain)
        t.alg, t.level, t.terms = self.alg, self.level, out
        return t

    def __sub__(self, other: "TensorChain") -> "TensorChain":
        return self + other.scale(-1)

    def __neg__(self) -> "TensorChain":
        return self.scale(-1)

    def scale(self, s) -> "TensorChain":
        s = as_scalar(s)
        t = TensorChain.__new__(TensorChain)
        t.alg, t.level = self.alg, self.level
        t.terms = {} if s.is_zero() else {k: c * s for k, c in self.terms.items()}
        return t

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorChain):
            return NotImplemented
        return (
            self.alg is other.alg
            and self.level == other.level
            and self.terms == other.terms
        )

    def as_scalar(self) -> Scalar:
        assert self.level == 0
        return self.terms.get((), Scalar.zero())

    def as_element(self) -> Element:
        assert self.level == 1
        return Element(self.alg, {k[0]: c for k, c in self.terms.items()})

    def slot_element(self, key, pos: int) -> Element:
        return Element.monomial(self.alg, key[pos])

    # -- slotwise operations ----------------------------------------------

    def insert_element(self, pos: int, element: Element) -> "TensorChain":
        """Insert an element as a new tensor slot at position pos."""
        assert 0 <= pos <= self.level
        out: dict = {}
        for key, c in self.terms.items():
            for m, cm in element.terms.items():
                _merge_term(out, key[:pos] + (m,) + key[pos:], c * cm)
        return TensorChain(self.alg, self.level + 1, out)

    def map_slot(self, pos: int, fn) -> "TensorChain":
        """Apply fn: monomial -> Element inside slot pos, linearly."""
        assert 0 <= pos < self.level
        out: dict = {}
        for key, c in self.terms.items():
            img = fn(key[pos])
            for m, cm in img.terms.items():
                _merge_term(out, key[:pos] + (m,) + key[pos + 1 :], c * cm)
        t = TensorChain.__new__(TensorChain)
        t.alg, t.level, t.terms = self.alg, self.level, out
        return t

    def contract_slot(self, pos: int, fn) -> "TensorChain":
        """Apply fn: monomial -> Scalar to slot pos and drop the slot."""
        assert 0 <= pos < self.level
        out: dict = {}
        for key, c in self.terms.items():
            s = fn(key[pos])
            if not s.is_zero():
                _merge_term(out, key[:pos] + key[pos + 1 :], c * s)
        return TensorChain(self.alg, self.level - 1, out)

    def coproduct_slot(self, pos: int) -> "TensorChain":
        """Replace slot pos by its coproduct, raising the level by one."""
        assert 0 <= pos < self.level
        out: dict = {}
        for key, c in self.terms.items():
            delta = self.alg.coproduct_monomial(key[pos])
            for (m1, m2), cd in delta.terms.items():
                _merge_term(out, key[:pos] + (m1, m2) + key[pos + 1 :], c * cd)
        return TensorChain(self.alg, self.level + 1, out)

    def multiply_into(self, other: "TensorChain") -> "TensorChain":
        """Componentwise product self * other in A^(x level)."""
        assert self.alg is other.alg and self.level == other.level
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = {(): c1 * c2}
                for m1, m2 in zip(k1, k2):
                    prod = self.alg.mul_monomials(m1, m2)
                    nxt: dict = {}
                    for key, c in partial.items():
                        for m, cm in prod.terms.items():
                            _merge_term(nxt, key + (m,), c * cm)
                    partial = nxt
                    if not partial:
                        break
                for key, c in partial.items():
                    _merge_term(out, key, c)
        return TensorChain(self.alg, self.level, out)

    def rotate(self) -> "TensorChain":
        """Move the last slot to the front (plain rotation, no signs)."""
        out = {(k[-1],) + k[:-1]: c for k, c in self.terms.items()}
        return TensorChain(self.alg, self.level, out)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(
            sum(self.alg.monomial_degree(m) for m in key) for key in self.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(
            self.terms, key=lambda k: tuple(self.alg.monomial_sort_key(m) for m in k)
        )
        parts = []
        for key in keys:
            c = self.terms[key]
            name = "(x)".join(self.alg.monomial_str(m) for m in key) if key else "1"
            cs = str(c)
            if cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append("-" + name)
            else:
                parts.append("[%s]%s" % (cs, name))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self) -> str:
        return "TensorChain(level=%d, %s)" % (self.level, self)


def iterated_coproduct(element: Element, n: int) -> TensorChain:
    """Delta^(n-1) lifted to chains: Element -> level-n TensorChain.

    n = 1 returns the element as a level-1 chain; coassociativity makes
    the expansion order immaterial.
    """
    assert n >= 1
    chain = TensorChain(element.alg, 1, {(m,): c for m, c in element.terms.items()})
    for _ in range(n - 1):
        chain = chain.coproduct_slot(0)
    return chain
