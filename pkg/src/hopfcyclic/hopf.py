"""Characters, group-likes, modular pairs and the twisted antipode,
plus dual / opposite / tensor constructions for finite-dimensional
Hopf algebras and the bounded axiom checkers."""

from __future__ import annotations

import itertools

from .elements import Element, TensorChain
from .linalg import SparseMatrix, solve
from .presentations import HopfBase, TablePresentation
from .report import Report
from .scalars import ONE, ZERO, Scalar, as_scalar


class Character:
    """Multiplicative linear functional, stored on generators or basis."""

    def __init__(self, hopf, name: str, values, on_basis: bool = False):
        """values: dict generator-key -> Scalar (word families), or
        dict basis-monomial -> Scalar when on_basis is set."""
        self.hopf = hopf
        self.name = name
        self.values = {k: as_scalar(v) for k, v in values.items()}
        self.on_basis = on_basis

    @staticmethod
    def counit(hopf) -> "Character":
        c = Character(hopf, "eps", {}, on_basis=True)
        c.values = None  # sentinel: delegate to the counit tables
        return c

    def of_monomial(self, m) -> Scalar:
        if self.values is None:
            return self.hopf.counit_monomial(m)
        if self.on_basis:
            return self.values.get(m, ZERO)
        out = ONE
        for key in m:
            v = self.values.get(key, ZERO)
            if v.is_zero():
                return ZERO
            out = out * v
        return out

    def __call__(self, el: Element) -> Scalar:
        return el.apply_functional(self.of_monomial)

    def check(self, max_degree: int = 2) -> Report:
        """Multiplicativity against all defining relations up to a bound."""
        rep = Report()
        hopf = self.hopf
        ok = self(hopf.unit_element()).is_one()
        rep.add_check("character-unit", "chi(1) = 1", ok, witness="1")
        basis = _bounded_basis(hopf, max_degree)
        bad = None
        for m1, m2 in itertools.product(basis, repeat=2):
            lhs = self(hopf.mul_monomials(m1, m2))
            rhs = self.of_monomial(m1) * self.of_monomial(m2)
            if lhs != rhs:
                bad = "%s * %s" % (hopf.monomial_str(m1), hopf.monomial_str(m2))
                break
        rep.add_check(
            "character-multiplicative", "chi(ab) = chi(a)chi(b)", bad is None, bad
        )
        return rep


class GroupLike:
    """Invertible element sigma with Delta(sigma) = sigma (x) sigma."""

    def __init__(self, hopf, name: str, element: Element, inverse: Element):
        self.hopf = hopf
        self.name = name
        self.element = element
        self.inverse = inverse

    @staticmethod
    def unit(hopf) -> "GroupLike":
        one = hopf.unit_element()
        return GroupLike(hopf, "1", one, one)

    def is_unit(self) -> bool:
        return self.element == self.hopf.unit_element()

    def check(self) -> Report:
        rep = Report()
        hopf = self.hopf
        s = self.element
        rep.add_check(
            "group-like-coproduct",
            "Delta(s) = s (x) s",
            hopf.coproduct(s) == TensorChain.of_elements(s, s),
            str(s),
        )
        rep.add_check("group-like-counit", "eps(s) = 1", hopf.counit(s).is_one(), str(s))
        one = hopf.unit_element()
        rep.add_check(
            "group-like-inverse",
            "s s^-1 = 1 = s^-1 s",
            s * self.inverse == one and self.inverse * s == one,
            str(s),
        )
        return rep


class ModularPair:
    """A character and a group-like with delta(sigma) = 1."""

    def __init__(self, delta: Character, sigma: GroupLike):
        assert delta.hopf is sigma.hopf
        self.hopf = delta.hopf
        self.delta = delta
        self.sigma = sigma
        if not delta(sigma.element).is_one():
            raise ValueError(
                "not a modular pair: delta(sigma) = %s" % delta(sigma.element)
            )

    @property
    def name(self) -> str:
        return "(%s,%s)" % (self.delta.name, self.sigma.name)

    def twisted_antipode_monomial(self, m) -> Element:
        memo = getattr(self, "_tw_memo", None)
        if memo is None:
            memo = self._tw_memo = {}
        cached = memo.get(m)
        if cached is not None:
            return cached
        out = self.hopf.zero_element()
        for (m1, m2), c in self.hopf.coproduct_monomial(m).terms.items():
            d = self.delta.of_monomial(m1)
            if not d.is_zero():
                out = out + self.hopf.antipode_monomial(m2).scale(c * d)
        memo[m] = out
        return out

    def twisted_antipode(self, el: Element) -> Element:
        return el.map_monomials(self.twisted_antipode_monomial)


def twisted_antipode(pair: ModularPair, el: Element) -> Element:
    return pair.twisted_antipode(el)


def twisted_antipode_convolution(pair: ModularPair, el: Element) -> Element:
    """Independent path: evaluate the convolution delta * S directly."""
    hopf = pair.hopf
    out = hopf.zero_element()
    for (m1, m2), c in hopf.coproduct(el).terms.items():
        out = out + hopf.antipode_monomial(m2).scale(c * pair.delta.of_monomial(m1))
    return out


def _bounded_basis(hopf: HopfBase, max_degree: int) -> list:
    if hopf.is_finite_dimensional():
        return hopf.basis()
    return hopf.basis(max_degree)


def check_hopf_axioms(hopf: HopfBase, degree_cutoff: int = 3) -> Report:
    """Coassociativity, counit laws, antipode law and multiplicativity of
    the coproduct on all normal-form monomials up to the cutoff."""
    rep = Report()
    basis = _bounded_basis(hopf, degree_cutoff)
    one = hopf.unit_element()

    bad = None
    for m in basis:
        chain = TensorChain(hopf, 1, {(m,): ONE})
        left = chain.coproduct_slot(0).coproduct_slot(0)
        right = chain.coproduct_slot(0).coproduct_slot(1)
        if left != right:
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta", bad is None, bad
    )

    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        delta = hopf.coproduct(el)
        left = delta.contract_slot(0, hopf.counit_monomial).as_element()
        right = delta.contract_slot(1, hopf.counit_monomial).as_element()
        if left != el or right != el:
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "counit", "(eps (x) id) Delta = id = (id (x) eps) Delta", bad is None, bad
    )

    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        target = one.scale(hopf.counit_monomial(m))
        delta = hopf.coproduct(el)
        left = _convolve(hopf, delta, antipode_first=True)
        right = _convolve(hopf, delta, antipode_first=False)
        if left != target or right != target:
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "antipode", "m(S (x) id)Delta = eps 1 = m(id (x) S)Delta", bad is None, bad
    )

    gens = _generator_monomials(hopf, degree_cutoff)
    bad = None
    for m1, m2 in itertools.product(gens, repeat=2):
        prod = hopf.mul_monomials(m1, m2)
        lhs = hopf.coproduct(prod)
        rhs = hopf.coproduct_monomial(m1).multiply_into(hopf.coproduct_monomial(m2))
        if lhs != rhs:
            bad = "%s , %s" % (hopf.monomial_str(m1), hopf.monomial_str(m2))
            break
    rep.add_check(
        "coproduct-multiplicative", "Delta(ab) = Delta(a)Delta(b)", bad is None, bad
    )
    return rep


def _convolve(hopf, delta: TensorChain, antipode_first: bool) -> Element:
    out = hopf.zero_element()
    for (m1, m2), c in delta.terms.items():
        if antipode_first:
            term = hopf.antipode_monomial(m1) * Element.monomial(hopf, m2)
        else:
            term = Element.monomial(hopf, m1) * hopf.antipode_monomial(m2)
        out = out + term.scale(c)
    return out


def _generator_monomials(hopf: HopfBase, degree_cutoff: int) -> list:
    gens = getattr(hopf, "generator_keys", None)
    if gens is not None:
        return [(k,) for k in gens(degree_cutoff)]
    return _bounded_basis(hopf, degree_cutoff)


def check_modular_pair(
    hopf: HopfBase, pair: ModularPair, degree_cutoff: int = 3
) -> Report:
    """Twisted-antipode identities and the involution condition on all
    monomials up to the cutoff."""
    rep = Report()
    basis = _bounded_basis(hopf, degree_cutoff)
    St = pair.twisted_antipode
    St_m = pair.twisted_antipode_monomial

    rep.add_check(
        "twisted-antipode-unit", "St(1) = 1", St(hopf.unit_element()) == hopf.unit_element()
    )

    bad = None
    small = [m for m in basis if hopf.monomial_degree(m) * 2 <= degree_cutoff] or basis[:6]
    for m1, m2 in itertools.product(small, repeat=2):
        lhs = St(hopf.mul_monomials(m1, m2))
        rhs = St_m(m2) * St_m(m1)
        if lhs != rhs:
            bad = "%s * %s" % (hopf.monomial_str(m1), hopf.monomial_str(m2))
            break
    rep.add_check(
        "twisted-antipode-antihom", "St(h1 h2) = St(h2) St(h1)", bad is None, bad
    )

    bad = None
    for m in basis:
        lhs = hopf.coproduct(St_m(m))
        rhs = TensorChain(hopf, 2, {})
        for (m1, m2), c in hopf.coproduct_monomial(m).terms.items():
            rhs = rhs + TensorChain.of_elements(hopf.antipode_monomial(m2), St_m(m1)).scale(c)
        if lhs != rhs:
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "twisted-antipode-coalgebra",
        "Delta St(h) = sum S(h_(2)) (x) St(h_(1))",
        bad is None,
        bad,
    )

    bad = None
    for m in basis:
        if hopf.counit(St_m(m)) != pair.delta.of_monomial(m):
            bad = hopf.monomial_str(m)
            break
    rep.add_check("counit-of-twisted", "eps . St = delta", bad is None, bad)

    bad = None
    for m in basis:
        if pair.delta(St_m(m)) != hopf.counit_monomial(m):
            bad = hopf.monomial_str(m)
            break
    rep.add_check("twist-of-twisted", "delta . St = eps", bad is None, bad)

    sigma_inv = pair.sigma.inverse
    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        once = sigma_inv * St(el)
        twice = sigma_inv * St(once)
        if twice != el:
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "involution", "(sigma^-1 . St)^2 = id", bad is None, bad
    )
    return rep


# ---------------------------------------------------------------------------
# Finite-dimensional constructions: tabulation, dual, opposite, tensor.
# ---------------------------------------------------------------------------


def tabulate(hopf: HopfBase, name: str | None = None) -> TablePresentation:
    """Explicit structure tables of a finite-dimensional Hopf algebra."""
    assert hopf.is_finite_dimensional(), "tabulate needs finite dimension"
    basis = hopf.basis()
    index = {m: i for i, m in enumerate(basis)}
    names = [hopf.monomial_str(m) for m in basis]
    mul_table = {}
    for i, m1 in enumerate(basis):
        for j, m2 in enumerate(basis):
            prod = hopf.mul_monomials(m1, m2)
            mul_table[(i, j)] = {index[m]: c for m, c in prod.terms.items()}
    unit = {index[m]: c for m, c in hopf.unit_element().terms.items()}
    cop = {}
    for i, m in enumerate(basis):
        cop[i] = {
            (index[a], index[b]): c
            for (a, b), c in hopf.coproduct_monomial(m).terms.items()
        }
    cou = {i: hopf.counit_monomial(m) for i, m in enumerate(basis)}
    anti = {}
    for i, m in enumerate(basis):
        anti[i] = {index[a]: c for a, c in hopf.antipode_monomial(m).terms.items()}
    degrees = [hopf.monomial_degree(m) for m in basis]
    return TablePresentation(
        name or hopf.name,
        names,
        mul_table,
        unit,
        cop,
        cou,
        anti,
        hopf.conductor,
        degrees,
    )


class UnsupportedOperation(ValueError):
    pass


def dual(hopf: HopfBase, name: str | None = None) -> TablePresentation:
    """Dual Hopf algebra of a finite-dimensional Hopf algebra.

    Product of the dual is the transpose of the coproduct, coproduct the
    transpose of the product, antipode the transpose of the antipode.
    """
    if not hopf.is_finite_dimensional():
        raise UnsupportedOperation("dual requires finite dimension")
    basis = hopf.basis()
    n = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    names = [hopf.monomial_str(m) + "^" for m in basis]

    mul_table: dict = {(i, j): {} for i in range(n) for j in range(n)}
    for k, m in enumerate(basis):
        for (a, b), c in hopf.coproduct_monomial(m).terms.items():
            mul_table[(index[a], index[b])][k] = (
                mul_table[(index[a], index[b])].get(k, ZERO) + c
            )
    unit = {i: hopf.counit_monomial(m) for i, m in enumerate(basis)}
    cop: dict = {k: {} for k in range(n)}
    for i, m1 in enumerate(basis):
        for j, m2 in enumerate(basis):
            for m, c in hopf.mul_monomials(m1, m2).terms.items():
                k = index[m]
                cop[k][(i, j)] = cop[k].get((i, j), ZERO) + c
    cou = {}
    for k in range(n):
        cou[k] = hopf.unit_element().coefficient(basis[k])
    anti: dict = {k: {} for k in range(n)}
    for i, m in enumerate(basis):
        for a, c in hopf.antipode_monomial(m).terms.items():
            anti[index[a]][i] = anti[index[a]].get(i, ZERO) + c
    return TablePresentation(
        name or (hopf.name + "-dual"),
        names,
        mul_table,
        unit,
        cop,
        cou,
        anti,
        hopf.conductor,
    )


def opposite(hopf: HopfBase, name: str | None = None) -> TablePresentation:
    """Opposite algebra with the same coproduct and inverse antipode."""
    if not hopf.is_finite_dimensional():
        raise UnsupportedOperation("opposite is implemented for finite dimension")
    table = tabulate(hopf)
    n = len(table.basis_names)
    smat = SparseMatrix(
        n,
        n,
        {
            (i, j): c
            for j, row in table.antipode_table.items()
            for i, c in row.items()
        },
    )
    inv_cols = []
    for j in range(n):
        rhs = [ONE if i == j else ZERO for i in range(n)]
        col = solve(smat, rhs)
        if col is None:
            raise UnsupportedOperation("antipode is not invertible")
        inv_cols.append(col)
    anti_inv = {
        j: {i: inv_cols[j][i] for i in range(n) if not inv_cols[j][i].is_zero()}
        for j in range(n)
    }
    mul_table = {
        (i, j): dict(table.mul_table.get((j, i), {}))
        for i in range(n)
        for j in range(n)
    }
    return TablePresentation(
        name or (hopf.name + "-op"),
        list(table.basis_names),
        mul_table,
        dict(table.unit_coeffs),
        {k: dict(v) for k, v in table.coproduct_table.items()},
        dict(table.counit_table),
        anti_inv,
        hopf.conductor,
        list(table.degrees),
    )


def tensor(h1: HopfBase, h2: HopfBase, name: str | None = None) -> TablePresentation:
    """Componentwise tensor product Hopf algebra (no braiding)."""
    if not (h1.is_finite_dimensional() and h2.is_finite_dimensional()):
        raise UnsupportedOperation("tensor is implemented for finite dimension")
    if h1.conductor != h2.conductor and 1 not in (h1.conductor, h2.conductor):
        raise UnsupportedOperation("conductor mismatch: %d vs %d" % (h1.conductor, h2.conductor))
    t1, t2 = tabulate(h1), tabulate(h2)
    n1, n2 = len(t1.basis_names), len(t2.basis_names)

    def pair_index(i, j):
        return i * n2 + j

    names = [
        "%s(x)%s" % (a, b) for a in t1.basis_names for b in t2.basis_names
    ]
    mul_table = {}
    for i1 in range(n1):
        for j1 in range(n2):
            for i2 in range(n1):
                for j2 in range(n2):
                    row = {}
                    for a, ca in t1.mul_table.get((i1, i2), {}).items():
                        for b, cb in t2.mul_table.get((j1, j2), {}).items():
                            row[pair_index(a, b)] = ca * cb
                    mul_table[(pair_index(i1, j1), pair_index(i2, j2))] = row
    unit = {}
    for a, ca in t1.unit_coeffs.items():
        for b, cb in t2.unit_coeffs.items():
            v = ca * cb
            if not v.is_zero():
                unit[pair_index(a, b)] = v
    cop = {}
    for i in range(n1):
        for j in range(n2):
            row = {}
            for (a1, a2), c1 in t1.coproduct_table.get(i, {}).items():
                for (b1, b2), c2 in t2.coproduct_table.get(j, {}).items():
                    key = (pair_index(a1, b1), pair_index(a2, b2))
                    row[key] = row.get(key, ZERO) + c1 * c2
            cop[pair_index(i, j)] = row
    cou = {
        pair_index(i, j): t1.counit_table.get(i, ZERO) * t2.counit_table.get(j, ZERO)
        for i in range(n1)
        for j in range(n2)
    }
    anti = {}
    for i in range(n1):
        for j in range(n2):
            row = {}
            for a, ca in t1.antipode_table.get(i, {}).items():
                for b, cb in t2.antipode_table.get(j, {}).items():
                    row[pair_index(a, b)] = ca * cb
            anti[pair_index(i, j)] = row
    conductor = max(h1.conductor, h2.conductor)
    return TablePresentation(
        name or ("%s(x)%s" % (h1.name, h2.name)),
        names,
        mul_table,
        unit,
        cop,
        cou,
        anti,
        conductor,
    )
