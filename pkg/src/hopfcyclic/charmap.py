"""Hopf actions on algebras, invariant traces, the characteristic map,
group-cocycle cyclic cocycles, Chern characters and the K-pairing."""

from __future__ import annotations

import itertools
import random
from math import factorial

from .cyclic import AlgebraCochain, AlgebraCyclicModule, HopfCyclicModule
from .elements import Element, TensorChain
from .hopf import ModularPair
from .presentations import AlgebraPresentation, HopfBase
from .report import Report
from .scalars import ONE, ZERO, Scalar, as_scalar


class HopfAction:
    """Action of a Hopf algebra on an algebra, h (x) a -> h(a).

    monomial_operator maps a Hopf-algebra basis monomial to a linear map
    on the target algebra (given on monomials); functoriality in the
    first slot is the action property, checked by sampling, as is the
    Hopf-Leibniz rule for products in the second slot.
    """

    def __init__(self, hopf: HopfBase, algebra, monomial_operator, name: str = ""):
        self.hopf = hopf
        self.algebra = algebra
        self.monomial_operator = monomial_operator
        self.name = name or "%s on %s" % (hopf.name, algebra.name)

    def act_monomials(self, hmon, amon) -> Element:
        return self.monomial_operator(hmon)(amon)

    def act(self, h: Element, a: Element) -> Element:
        out = self.algebra.zero_element()
        for hm, hc in h.terms.items():
            op = self.monomial_operator(hm)
            for am, ac in a.terms.items():
                out = out + op(am).scale(hc * ac)
        return out

    def check(self, samples: int = 30, seed: int = 0, max_degree: int = 3) -> Report:
        rep = Report()
        rng = random.Random(seed)
        hbasis = (
            self.hopf.basis()
            if self.hopf.is_finite_dimensional()
            else self.hopf.basis(max_degree)
        )
        abasis = (
            self.algebra.basis()
            if self.algebra.is_finite_dimensional()
            else self.algebra.basis(max_degree)
        )
        bad = None
        for _ in range(samples):
            h1 = Element.monomial(self.hopf, rng.choice(hbasis))
            h2 = Element.monomial(self.hopf, rng.choice(hbasis))
            a = Element.monomial(self.algebra, rng.choice(abasis))
            if self.act(h1, self.act(h2, a)) != self.act(h1 * h2, a):
                bad = "%s, %s on %s" % (h1, h2, a)
                break
        rep.add_check("action-property", "h1(h2(a)) = (h1 h2)(a)", bad is None, bad)

        bad = None
        for _ in range(samples):
            hm = rng.choice(hbasis)
            h = Element.monomial(self.hopf, hm)
            a = Element.monomial(self.algebra, rng.choice(abasis))
            b = Element.monomial(self.algebra, rng.choice(abasis))
            lhs = self.act(h, a * b)
            rhs = self.algebra.zero_element()
            for (m1, m2), c in self.hopf.coproduct_monomial(hm).terms.items():
                rhs = rhs + (
                    self.act(Element.monomial(self.hopf, m1), a)
                    * self.act(Element.monomial(self.hopf, m2), b)
                ).scale(c)
            if lhs != rhs:
                bad = "%s on %s, %s" % (h, a, b)
                break
        rep.add_check(
            "hopf-leibniz", "h(ab) = sum h_(1)(a) h_(2)(b)", bad is None, bad
        )

        ok = self.act(self.hopf.unit_element(), Element.monomial(self.algebra, abasis[0])) == Element.monomial(self.algebra, abasis[0])
        rep.add_check("action-unit", "1(a) = a", ok)
        return rep


class TracedAlgebra:
    """Algebra with a linear functional that is a sigma-trace and
    delta-invariant for a given Hopf action and modular pair."""

    def __init__(
        self,
        action: HopfAction,
        pair: ModularPair,
        trace,
        sigma_operator=None,
        name: str = "",
    ):
        """trace: monomial -> Scalar; sigma_operator realizes the pair's
        group-like as an algebra map on monomials (identity when sigma = 1)."""
        self.action = action
        self.algebra = action.algebra
        self.pair = pair
        self._trace_monomial = trace
        self.sigma_operator = sigma_operator
        self.name = name or ("trace on %s" % self.algebra.name)

    def trace(self, el: Element) -> Scalar:
        return el.apply_functional(self._trace_monomial)

    def apply_sigma(self, el: Element) -> Element:
        if self.sigma_operator is None:
            return el
        return el.map_monomials(self.sigma_operator)

    def check(self, samples: int = 40, seed: int = 0, max_degree: int = 3) -> Report:
        rep = Report()
        rng = random.Random(seed)
        alg = self.algebra
        abasis = alg.basis() if alg.is_finite_dimensional() else alg.basis(max_degree)
        hopf = self.action.hopf
        hbasis = (
            hopf.basis() if hopf.is_finite_dimensional() else hopf.basis(max_degree)
        )

        bad = None
        for _ in range(samples):
            a = Element.monomial(alg, rng.choice(abasis))
            b = Element.monomial(alg, rng.choice(abasis))
            if self.trace(a * b) != self.trace(b * self.apply_sigma(a)):
                bad = "%s, %s" % (a, b)
                break
        rep.add_check("sigma-trace", "tau(ab) = tau(b sigma(a))", bad is None, bad)

        bad = None
        for hm in hbasis:
            if bad:
                break
            h = Element.monomial(hopf, hm)
            dv = self.pair.delta.of_monomial(hm)
            for am in abasis:
                a = Element.monomial(alg, am)
                if self.trace(self.action.act(h, a)) != dv * self.trace(a):
                    bad = "%s on %s" % (h, a)
                    break
        rep.add_check(
            "delta-invariance", "tau(h(a)) = delta(h) tau(a)", bad is None, bad
        )
        return rep


# ---------------------------------------------------------------------------
# The characteristic map.
# ---------------------------------------------------------------------------


def gamma(chain: TensorChain, traced: TracedAlgebra) -> AlgebraCochain:
    """Send h^1 (x) ... (x) h^n to (a^0, ..., a^n) -> tau(a^0 h^1(a^1) ... h^n(a^n))."""
    action = traced.action
    assert chain.alg is action.hopf
    n = chain.level
    alg = traced.algebra

    def ev(key):
        assert len(key) == n + 1
        total = ZERO
        for hkey, coeff in chain.terms.items():
            prod = Element.monomial(alg, key[0])
            for hm, am in zip(hkey, key[1:]):
                prod = prod * action.act_monomials(hm, am)
                if prod.is_zero():
                    break
            if not prod.is_zero():
                total = total + coeff * traced.trace(prod)
        return total

    return AlgebraCochain(alg, n + 1, ev)


def verify_gamma(
    traced: TracedAlgebra,
    n_max: int = 2,
    samples: int = 20,
    seed: int = 0,
    max_degree: int = 3,
) -> Report:
    """gamma intertwines every face, degeneracy and cyclic operator."""
    rep = Report()
    rng = random.Random(seed)
    hmod = HopfCyclicModule(traced.action.hopf, traced.pair, sample_degree=max_degree)
    amod = AlgebraCyclicModule(traced.algebra, sample_degree=max_degree)

    def cochains_agree(x: AlgebraCochain, y: AlgebraCochain) -> str | None:
        basis = amod._basis()
        for _ in range(samples):
            key = tuple(rng.choice(basis) for _ in range(x.arity))
            if x.eval_key(key) != y.eval_key(key):
                return ",".join(traced.algebra.monomial_str(m) for m in key)
        return None

    for n in range(0, n_max + 1):
        ops = []
        for i in range(n + 2):
            ops.append(
                (
                    "face i=%d" % i,
                    "gamma . delta_i = delta_i . gamma",
                    lambda c, i=i: hmod.face(i, c),
                    lambda p, i=i: amod.face(i, p),
                    n,
                )
            )
        if n >= 1:
            for i in range(n):
                ops.append(
                    (
                        "degeneracy i=%d" % i,
                        "gamma . sigma_i = sigma_i . gamma",
                        lambda c, i=i: hmod.degeneracy(i, c),
                        lambda p, i=i: amod.degeneracy(i, p),
                        n,
                    )
                )
            ops.append(
                (
                    "cyclic",
                    "gamma . tau_n = tau_n . gamma",
                    hmod.cyclic,
                    amod.cyclic,
                    n,
                )
            )
        for opname, law, hop, aop, level in ops:
            bad = None
            for _ in range(max(3, samples // 5)):
                c = hmod.random_object(level, rng)
                left = gamma(hop(c), traced)
                right = aop(gamma(c, traced))
                bad = cochains_agree(left, right)
                if bad is not None:
                    bad = "chain %s ; args %s" % (c, bad)
                    break
            rep.add_check("gamma level=%d %s" % (level, opname), law, bad is None, bad)
    return rep


# ---------------------------------------------------------------------------
# Group cocycles.
# ---------------------------------------------------------------------------


class GroupCocycleError(ValueError):
    pass


def check_group_cocycle(
    alg, n: int, cocycle, samples: int = 60, seed: int = 0, max_degree: int = 3
) -> None:
    """Normalization and the cocycle identity on sampled group elements.

    alg must be a group-algebra presentation whose monomials multiply to
    single monomials; cocycle maps an n-tuple of monomials to a Scalar.
    """
    rng = random.Random(seed)
    basis = alg.basis() if alg.is_finite_dimensional() else alg.basis(max_degree)
    unit = alg.unit_monomial()

    def gmul(x, y):
        prod = alg.mul_monomials(x, y)
        assert len(prod.terms) == 1
        ((m, c),) = prod.terms.items()
        assert c.is_one(), "not a group-word presentation"
        return m

    for _ in range(samples):
        tup = [rng.choice(basis) for _ in range(n)]
        slot = rng.randrange(n)
        tup[slot] = unit
        if not cocycle(tuple(tup)).is_zero():
            raise GroupCocycleError(
                "cocycle is not normalized at %s" % (tuple(tup),)
            )
    for _ in range(samples):
        tup = tuple(rng.choice(basis) for _ in range(n + 1))
        total = cocycle(tup[1:])
        sign = -1
        for i in range(n):
            merged = tup[: i] + (gmul(tup[i], tup[i + 1]),) + tup[i + 2 :]
            total = total + as_scalar(sign) * cocycle(merged)
            sign = -sign
        total = total + as_scalar(sign) * cocycle(tup[:-1])
        if not total.is_zero():
            raise GroupCocycleError("cocycle identity fails at %s" % (tup,))


def group_cocycle_to_cyclic(alg, n: int, cocycle, **check_kwargs) -> AlgebraCochain:
    """Cyclic n-cochain on a group algebra from a normalized group cocycle:
    vanishes unless the arguments multiply to the identity."""
    check_group_cocycle(alg, n, cocycle, **check_kwargs)
    unit = alg.unit_monomial()

    def ev(key):
        assert len(key) == n + 1
        prod = key[0]
        coeff = ONE
        for m in key[1:]:
            out = alg.mul_monomials(prod, m)
            ((prod, c),) = out.terms.items()
            coeff = coeff * c
        if prod != unit:
            return ZERO
        return coeff * cocycle(key[1:])

    return AlgebraCochain(alg, n + 1, ev)


def area_cocycle(alg) -> "callable":
    """The bilinear form (g, h) -> g_1 h_2 on a rank-2 lattice group."""

    def c(tup) -> Scalar:
        (g, h) = tup
        return as_scalar(g[0] * h[1])

    return c


# ---------------------------------------------------------------------------
# Chern characters and the pairing.
# ---------------------------------------------------------------------------


class MatrixOverAlgebra:
    """Square matrix with entries in a presented algebra."""

    def __init__(self, alg, entries):
        self.alg = alg
        self.size = len(entries)
        self.entries = [list(row) for row in entries]
        for row in self.entries:
            assert len(row) == self.size

    @staticmethod
    def from_element(el: Element) -> "MatrixOverAlgebra":
        return MatrixOverAlgebra(el.alg, [[el]])

    def mul(self, other: "MatrixOverAlgebra") -> "MatrixOverAlgebra":
        assert self.size == other.size and self.alg is other.alg
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.alg.zero_element()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return MatrixOverAlgebra(self.alg, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixOverAlgebra):
            return NotImplemented
        return self.size == other.size and all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.size)
            for j in range(self.size)
        )

    def is_idempotent(self) -> bool:
        return self.mul(self) == self

    def idempotency_defect(self) -> str:
        sq = self.mul(self)
        for i in range(self.size):
            for j in range(self.size):
                d = sq.entries[i][j] - self.entries[i][j]
                if not d.is_zero():
                    return "(e^2 - e)[%d][%d] = %s" % (i, j, d)
        return ""


class NotIdempotentError(ValueError):
    pass


def chern_character(e: MatrixOverAlgebra, n_max: int) -> list[TensorChain]:
    """Components ch_0, ch_2, ..., as chains over the entry algebra when
    the matrix is 1 x 1, else kept matrix-valued for the pairing path.

    ch_0(e) = e and ch_2k(e) = (-1)^k (2k)!/k! (e*...*e - (1/2) 1 (x) e*...*e).
    """
    if not e.is_idempotent():
        raise NotIdempotentError(e.idempotency_defect())
    assert e.size == 1, "chain form is exposed for scalar idempotents"
    el = e.entries[0][0]
    alg = el.alg
    out = [TensorChain.of_elements(el)]
    k = 1
    while 2 * k <= n_max:
        coeff = as_scalar((-1) ** k * factorial(2 * k) // factorial(k))
        full = TensorChain.of_elements(*([el] * (2 * k + 1)))
        half = TensorChain.of_elements(alg.unit_element(), *([el] * (2 * k))).scale(
            as_scalar(1) / as_scalar(2)
        )
        out.append((full - half).scale(coeff))
        k += 1
    return out


def chern_is_cycle(
    e: MatrixOverAlgebra, n_max: int, module: AlgebraCyclicModule
) -> Report:
    """(b + B)(ch(e)) = 0 componentwise, modulo degenerate chains.

    Degenerate chains (a unit inserted in a latter slot) are acyclic
    padding of the unnormalized complex; exactness holds on the nose in
    the normalized quotient, so membership is decided by exact linear
    algebra over the degenerate span.
    """
    from .linalg import SparseMatrix, solve

    rep = Report()
    chs = chern_character(e, n_max)
    alg = module.alg
    for k in range(len(chs)):
        # residual in degree 2k - 1: b(ch_2k) + B(ch_{2k-2})
        if k == 0:
            continue
        residual = module.chain_b(chs[k]) + module.chain_B(chs[k - 1])
        level = residual.level
        keys = sorted(
            {key[:j] + key[j + 1 :] for key in residual.terms for j in range(level)},
            key=lambda t: tuple(alg.monomial_sort_key(m) for m in t),
        )
        span = module.chain_degenerate_span(level, keys)
        index: dict = {}
        for ch in span + [residual]:
            for key in ch.terms:
                index.setdefault(key, len(index))
        mat = SparseMatrix(
            len(index),
            len(span),
            {
                (index[key], col): c
                for col, ch in enumerate(span)
                for key, c in ch.terms.items()
            },
        )
        rhs = [ZERO] * len(index)
        for key, c in residual.terms.items():
            rhs[index[key]] = c
        ok = solve(mat, rhs) is not None
        rep.add_check(
            "chern-cycle degree=%d" % (2 * k - 1),
            "b ch_2k + B ch_(2k-2) = 0 mod degenerate chains",
            ok,
            None if ok else str(residual),
        )
    return rep


def pairing_direct(phi: AlgebraCochain, E: MatrixOverAlgebra) -> Scalar:
    """(phi (x) Tr)(E, ..., E) for an even cochain of arity 2k+1."""
    assert phi.arity % 2 == 1, "even cyclic cocycles have odd arity"
    n = phi.arity - 1
    total = ZERO
    size = E.size
    for idx in itertools.product(range(size), repeat=n + 1):
        args = [E.entries[idx[t]][idx[(t + 1) % (n + 1)]] for t in range(n + 1)]
        total = total + phi(tuple(args))
    return total


def pairing_unit_term(phi: AlgebraCochain, E: MatrixOverAlgebra) -> Scalar:
    """(phi (x) Tr)(1, E, ..., E), the degenerate term of the chain path."""
    n = phi.arity - 1
    assert n >= 1
    size = E.size
    one = E.alg.unit_element()
    total = ZERO
    for idx in itertools.product(range(size), repeat=n):
        args = [one] + [E.entries[idx[t]][idx[(t + 1) % n]] for t in range(n)]
        total = total + phi(tuple(args))
    return total


# The chain route <phi, ch_2k(E)> differs from (phi (x) Tr)(E, ..., E) by the
# factor below; this constant lives here and nowhere else.
def pairing_normalization(k: int) -> Scalar:
    return as_scalar((-1) ** k) * as_scalar(factorial(k)) / as_scalar(factorial(2 * k))


def pairing_via_chern(phi: AlgebraCochain, E: MatrixOverAlgebra) -> Scalar:
    """<phi (x) Tr, ch_2k(E)>: the cochain evaluated on the Chern chain."""
    k = (phi.arity - 1) // 2
    if k == 0:
        return pairing_direct(phi, E)
    coeff = as_scalar((-1) ** k * factorial(2 * k) // factorial(k))
    return coeff * (
        pairing_direct(phi, E) - pairing_unit_term(phi, E) / as_scalar(2)
    )


def pairing(
    phi: AlgebraCochain, E: MatrixOverAlgebra, check_normalized: bool = True
) -> Scalar:
    """K-theory pairing of an even cyclic cocycle with an idempotent.

    Computed as (phi (x) Tr)(E, ..., E) and cross-checked against the
    Chern-chain route, which must agree after multiplying by
    pairing_normalization(k); agreement requires the degenerate term
    (phi (x) Tr)(1, E, ..., E) to vanish, which holds for normalized
    cocycles and is asserted here.
    """
    if not E.is_idempotent():
        raise NotIdempotentError(E.idempotency_defect())
    if phi.arity % 2 == 0:
        raise ValueError("pairing needs an even cocycle (odd arity)")
    k = (phi.arity - 1) // 2
    direct = pairing_direct(phi, E)
    if k == 0:
        return direct
    if check_normalized:
        unit_term = pairing_unit_term(phi, E)
        if not unit_term.is_zero():
            raise ValueError(
                "cocycle is not normalized: (phi (x) Tr)(1, E, ..., E) = %s"
                % unit_term
            )
    chain_path = pairing_via_chern(phi, E)
    assert direct == pairing_normalization(k) * chain_path
    return direct


def gamma_chern_components(
    traced: TracedAlgebra, e: Element, h_lists: list
) -> list[Scalar]:
    """Values (-1)^k (2k)!/k! (tau(e h1(e)...h2k(e)) - (1/2) tau(h1(e)...h2k(e))),
    one per supplied list of Hopf elements; the empty list gives tau(e).
    Each value is cross-checked against gamma evaluated on the chain ch_2k."""
    action = traced.action
    out = []
    for hs in h_lists:
        k2 = len(hs)
        assert k2 % 2 == 0
        if k2 == 0:
            out.append(traced.trace(e))
            continue
        k = k2 // 2
        coeff = as_scalar((-1) ** k * factorial(2 * k) // factorial(k))
        tail = traced.algebra.unit_element()
        for h in hs:
            tail = tail * action.act(h, e)
        value = coeff * (traced.trace(e * tail) - traced.trace(tail) / as_scalar(2))
        # independent route: evaluate on the chain ch_2k(e) term by term
        chain = chern_character(MatrixOverAlgebra.from_element(e), k2)[k]
        total = ZERO
        for key, c in chain.terms.items():
            prod = Element.monomial(traced.algebra, key[0])
            for h, am in zip(hs, key[1:]):
                prod = prod * action.act(h, Element.monomial(traced.algebra, am))
            total = total + c * traced.trace(prod)
        assert total == value, "chain route disagrees with the closed form"
        out.append(value)
    return out
