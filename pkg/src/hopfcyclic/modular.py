"""Quasitriangular and ribbon verification, the Drinfeld element, and the
modular square of a finite-dimensional Hopf algebra with supplied
square-root data.  Everything is checked, nothing is trusted."""

from __future__ import annotations

from .elements import Element, TensorChain
from .hopf import Character, GroupLike, ModularPair, check_modular_pair, dual, opposite, tensor
from .linalg import SparseMatrix, solve
from .presentations import HopfBase, TablePresentation
from .report import Report
from .scalars import ONE, ZERO, Scalar, as_scalar


class RMatrixData:
    """Universal R-matrix with explicit inverse and optional ribbon element."""

    def __init__(
        self,
        hopf: HopfBase,
        R: TensorChain,
        R_inv: TensorChain,
        theta: Element | None = None,
        theta_inv: Element | None = None,
    ):
        assert R.level == 2 and R_inv.level == 2
        self.hopf = hopf
        self.R = R
        self.R_inv = R_inv
        self.theta = theta if theta is not None else hopf.unit_element()
        self.theta_inv = theta_inv if theta_inv is not None else hopf.unit_element()


def _unit_chain(hopf, level: int) -> TensorChain:
    return TensorChain.of_elements(*([hopf.unit_element()] * level))


def _embed_legs(chain: TensorChain, legs: tuple[int, int]) -> TensorChain:
    """Place a level-2 chain into slots legs of a level-3 chain, unit elsewhere."""
    hopf = chain.alg
    out = TensorChain(hopf, 3, {})
    unit = hopf.unit_element()
    for (m1, m2), c in chain.terms.items():
        slots = [unit, unit, unit]
        slots[legs[0]] = Element.monomial(hopf, m1)
        slots[legs[1]] = Element.monomial(hopf, m2)
        out = out + TensorChain.of_elements(*slots).scale(c)
    return out


def _swap(chain: TensorChain) -> TensorChain:
    return TensorChain(chain.alg, 2, {(b, a): c for (a, b), c in chain.terms.items()})


def verify_quasitriangular(data: RMatrixData, degree_cutoff: int = 3) -> Report:
    """The three defining identities, plus invertibility of R."""
    rep = Report()
    hopf = data.hopf
    R, R_inv = data.R, data.R_inv

    ok = R.multiply_into(R_inv) == _unit_chain(hopf, 2)
    ok = ok and R_inv.multiply_into(R) == _unit_chain(hopf, 2)
    rep.add_check("r-invertible", "R R^-1 = 1 (x) 1", ok)

    basis = hopf.basis() if hopf.is_finite_dimensional() else hopf.basis(degree_cutoff)
    bad = None
    for m in basis:
        delta = hopf.coproduct_monomial(m)
        flipped = _swap(delta)
        if flipped != R.multiply_into(delta).multiply_into(R_inv):
            bad = hopf.monomial_str(m)
            break
    rep.add_check(
        "r-intertwines", "Delta-op(x) = R Delta(x) R^-1", bad is None, bad
    )

    lhs = R.coproduct_slot(0)
    rhs = _embed_legs(R, (0, 2)).multiply_into(_embed_legs(R, (1, 2)))
    rep.add_check("r-coproduct-left", "(Delta (x) I)(R) = R13 R23", lhs == rhs)

    lhs = R.coproduct_slot(1)
    rhs = _embed_legs(R, (0, 2)).multiply_into(_embed_legs(R, (0, 1)))
    rep.add_check("r-coproduct-right", "(I (x) Delta)(R) = R13 R12", lhs == rhs)
    return rep


def _left_mul_matrix(hopf: HopfBase, u: Element) -> SparseMatrix:
    basis = hopf.basis()
    index = {m: i for i, m in enumerate(basis)}
    entries = {}
    for j, m in enumerate(basis):
        prod = u * Element.monomial(hopf, m)
        for mm, c in prod.terms.items():
            entries[(index[mm], j)] = c
    return SparseMatrix(len(basis), len(basis), entries)


def element_inverse(hopf: HopfBase, u: Element) -> Element | None:
    """Two-sided inverse in a finite-dimensional algebra by exact solving."""
    assert hopf.is_finite_dimensional()
    basis = hopf.basis()
    mat = _left_mul_matrix(hopf, u)
    rhs = [hopf.unit_element().coefficient(m) for m in basis]
    sol = solve(mat, rhs)
    if sol is None:
        return None
    inv = Element(hopf, {m: c for m, c in zip(basis, sol)})
    if u * inv != hopf.unit_element() or inv * u != hopf.unit_element():
        return None
    return inv


def drinfeld_u(data: RMatrixData) -> tuple[Element, Element, Report]:
    """u = sum S(t_i) s_i for R = sum s_i (x) t_i, with verified properties."""
    rep = Report()
    hopf = data.hopf
    u = hopf.zero_element()
    for (s, t), c in data.R.terms.items():
        u = u + (hopf.antipode_monomial(t) * Element.monomial(hopf, s)).scale(c)

    u_inv = element_inverse(hopf, u)
    rep.add_check("u-invertible", "u u^-1 = 1", u_inv is not None)
    if u_inv is None:
        return u, hopf.zero_element(), rep

    rep.add_check("u-counit", "eps(u) = 1", hopf.counit(u).is_one())

    basis = hopf.basis()
    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        if hopf.antipode(hopf.antipode(el)) != u * el * u_inv:
            bad = hopf.monomial_str(m)
            break
    rep.add_check("u-implements-s2", "S^2(x) = u x u^-1", bad is None, bad)

    us = u * hopf.antipode(u)
    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        if us * el != el * us:
            bad = hopf.monomial_str(m)
            break
    rep.add_check("u-su-central", "u S(u) is central", bad is None, bad)
    rep.add_check(
        "u-su-symmetric", "u S(u) = S(u) u", us == hopf.antipode(u) * u
    )

    r21r = _swap(data.R).multiply_into(data.R)
    r21r_inv = data.R_inv.multiply_into(_swap(data.R_inv))
    lhs = hopf.coproduct(u)
    rhs = r21r_inv.multiply_into(TensorChain.of_elements(u, u))
    rep.add_check(
        "u-coproduct", "Delta(u) = (R21 R)^-1 (u (x) u)", lhs == rhs
    )
    assert r21r.multiply_into(r21r_inv) == _unit_chain(hopf, 2)
    return u, u_inv, rep


def verify_ribbon(data: RMatrixData) -> Report:
    """Centrality and the ribbon identities for theta."""
    rep = Report()
    hopf = data.hopf
    theta, theta_inv = data.theta, data.theta_inv
    rep.add_check(
        "theta-invertible",
        "theta theta^-1 = 1",
        theta * theta_inv == hopf.unit_element(),
    )
    basis = hopf.basis()
    bad = None
    for m in basis:
        el = Element.monomial(hopf, m)
        if theta * el != el * theta:
            bad = hopf.monomial_str(m)
            break
    rep.add_check("theta-central", "theta x = x theta", bad is None, bad)
    rep.add_check("theta-counit", "eps(theta) = 1", hopf.counit(theta).is_one())
    rep.add_check(
        "theta-antipode", "S(theta) = theta", hopf.antipode(theta) == theta
    )
    r21r_inv = data.R_inv.multiply_into(_swap(data.R_inv))
    lhs = hopf.coproduct(theta)
    rhs = r21r_inv.multiply_into(TensorChain.of_elements(theta, theta))
    rep.add_check(
        "theta-coproduct", "Delta(theta) = (R21 R)^-1 (theta (x) theta)", lhs == rhs
    )
    return rep


def ribbon_mpi(data: RMatrixData) -> tuple[ModularPair | None, Report]:
    """The intrinsic modular pair (eps, sigma) with sigma = theta^-1 u."""
    rep = Report()
    hopf = data.hopf
    rep.extend(verify_quasitriangular(data), prefix="qt/")
    rep.extend(verify_ribbon(data), prefix="ribbon/")
    u, u_inv, urep = drinfeld_u(data)
    rep.extend(urep, prefix="drinfeld/")
    if not rep.all_passed():
        return None, rep

    sigma = data.theta_inv * u
    sigma_inv = u_inv * data.theta
    ok = hopf.coproduct(sigma) == TensorChain.of_elements(sigma, sigma)
    rep.add_check("sigma-group-like", "Delta(sigma) = sigma (x) sigma", ok, str(sigma))
    rep.add_check("sigma-counit", "eps(sigma) = 1", hopf.counit(sigma).is_one())
    rep.add_check(
        "sigma-antipode", "S(sigma) = sigma^-1", hopf.antipode(sigma) == sigma_inv
    )
    if not rep.all_passed():
        return None, rep

    pair = ModularPair(
        Character.counit(hopf), GroupLike(hopf, "ribbon-sigma", sigma, sigma_inv)
    )
    rep.extend(check_modular_pair(hopf, pair), prefix="mpi/")
    return pair, rep


# ---------------------------------------------------------------------------
# The modular square.
# ---------------------------------------------------------------------------


class MissingSquareRootError(ValueError):
    pass


class ModularSquareData:
    """Square-root data on a finite-dimensional Hopf algebra: a group-like
    square root of the designated modular element, and a character square
    root of the designated modular character."""

    def __init__(self, hopf: HopfBase, delta_root: GroupLike, sigma_root: Character):
        if not hopf.is_finite_dimensional():
            raise MissingSquareRootError("modular square needs finite dimension")
        if delta_root is None:
            raise MissingSquareRootError("no group-like square root supplied")
        if sigma_root is None:
            raise MissingSquareRootError("no character square root supplied")
        self.hopf = hopf
        self.delta_root = delta_root
        self.sigma_root = sigma_root


def _twisted_antipode_matrix(table: TablePresentation, char_values, use_left=True):
    """Matrix of omega -> chi^-1 * S_twist(omega) style maps is assembled by
    the caller; here we only expose the twisted antipode of a table algebra
    with respect to a character given by basis values."""
    n = len(table.basis_names)

    def tw(el: Element) -> Element:
        out = table.zero_element()
        for m, c in el.terms.items():
            for (m1, m2), cc in table.coproduct_monomial(m).terms.items():
                lam = char_values[m1]
                if lam.is_zero():
                    continue
                out = out + table.antipode_monomial(m2).scale(c * cc * lam)
        return out

    return tw


def modular_square(data: ModularSquareData) -> tuple[TablePresentation, Report]:
    """Build H-tilde = (dual H)^op (x) dual H, its candidate modular pair
    (delta-tilde, sigma-tilde) from the square roots, and verify:

      * delta-tilde is a character, sigma-tilde a group-like, and
        delta-tilde(sigma-tilde) = 1;
      * the twisted antipode factorizes through the two tensor legs;
      * the square of each leg against the scalar
        <sigma-root^-1, delta-root^-1>;
      * the involution (sigma-tilde^-1 . S_delta-tilde)^2 = id on the
        full basis of H-tilde.

    All outcomes are recorded; failures are findings, not errors.
    """
    rep = Report()
    hopf = data.hopf
    basis = hopf.basis()
    n = len(basis)
    hdual = dual(hopf)
    hdual_op = opposite(hdual)
    htilde = tensor(hdual_op, hdual, name="%s-square" % hopf.name)

    def pair_index(i: int, j: int) -> int:
        return i * n + j

    # sigma-tilde = chi (x) chi as an element of H-tilde
    chi_vals = [data.sigma_root.of_monomial(m) for m in basis]
    chi_inv_vals = [
        data.sigma_root(hopf.antipode_monomial(m)) for m in basis
    ]
    sigma_terms = {}
    sigma_inv_terms = {}
    for i in range(n):
        for j in range(n):
            v = chi_vals[i] * chi_vals[j]
            if not v.is_zero():
                sigma_terms[pair_index(i, j)] = v
            w = chi_inv_vals[i] * chi_inv_vals[j]
            if not w.is_zero():
                sigma_inv_terms[pair_index(i, j)] = w
    sigma_tilde = Element(htilde, sigma_terms)
    sigma_tilde_inv = Element(htilde, sigma_inv_terms)
    sigma_gl = GroupLike(htilde, "sigma-tilde", sigma_tilde, sigma_tilde_inv)
    rep.extend(sigma_gl.check(), prefix="sigma-tilde/")

    # delta-tilde = evaluation against delta_root (x) delta_root^-1
    droot = data.delta_root.element
    droot_inv = data.delta_root.inverse
    delta_vals = {}
    for i in range(n):
        for j in range(n):
            v = droot.coefficient(basis[i]) * droot_inv.coefficient(basis[j])
            delta_vals[pair_index(i, j)] = v
    delta_tilde = Character(htilde, "delta-tilde", delta_vals, on_basis=True)
    rep.extend(delta_tilde.check(), prefix="delta-tilde/")

    ok = delta_tilde(sigma_tilde).is_one()
    rep.add_check("pair", "delta-tilde(sigma-tilde) = 1", ok)
    if not ok:
        return htilde, rep

    pair = ModularPair(delta_tilde, sigma_gl)

    # factorization of the twisted antipode through the tensor legs
    left_char = {m: droot.coefficient(basis[m]) for m in range(n)}
    right_char = {m: droot_inv.coefficient(basis[m]) for m in range(n)}
    tw_left = _twisted_antipode_matrix(hdual_op, left_char)
    tw_right = _twisted_antipode_matrix(hdual, right_char)
    bad = None
    for i in range(n):
        for j in range(n):
            w = Element.monomial(htilde, pair_index(i, j))
            lhs = pair.twisted_antipode(w)
            li = tw_left(Element.monomial(hdual_op, i))
            rj = tw_right(Element.monomial(hdual, j))
            rhs_terms = {}
            for a, ca in li.terms.items():
                for b, cb in rj.terms.items():
                    rhs_terms[pair_index(a, b)] = (
                        rhs_terms.get(pair_index(a, b), ZERO) + ca * cb
                    )
            if lhs != Element(htilde, rhs_terms):
                bad = htilde.basis_names[pair_index(i, j)]
                break
        if bad:
            break
    rep.add_check(
        "factorization",
        "S-twist(w1 (x) w2) = S-twist-left(w1) (x) S-twist-right(w2)",
        bad is None,
        bad,
    )

    # per-leg square against the pairing scalar <chi^-1, droot^-1>
    scalar = ZERO
    for i in range(n):
        scalar = scalar + chi_inv_vals[i] * droot_inv.coefficient(basis[i])
    rep.add_value("per-leg-scalar", {"pairing": "<sigma-root^-1, delta-root^-1>"}, str(scalar))

    def leg_square_is_scalar(table, tw, conv_side) -> tuple[bool, str | None]:
        for i in range(n):
            w = Element.monomial(table, i)
            once = conv_side(tw(w))
            twice = conv_side(tw(once))
            if twice != w.scale(scalar):
                return False, table.basis_names[i]
        return True, None

    chi_inv_right = Element(hdual, {i: chi_inv_vals[i] for i in range(n)})
    chi_inv_left = Element(hdual_op, {i: chi_inv_vals[i] for i in range(n)})

    ok_r, bad_r = leg_square_is_scalar(
        hdual, tw_right, lambda e: chi_inv_right * e
    )
    rep.add_check(
        "leg-square-right",
        "(sigma-root^-1 . S_droot^-1-twist)^2 = <sigma-root^-1, droot^-1> id",
        ok_r,
        bad_r,
    )
    ok_l, bad_l = leg_square_is_scalar(
        hdual_op, tw_left, lambda e: chi_inv_left * e
    )
    rep.add_check(
        "leg-square-left",
        "(sigma-root^-1 . S-inv_droot-twist)^2 = reciprocal scalar id",
        ok_l,
        bad_l,
    )

    # the involution on the full basis of H-tilde
    bad = None
    for w_idx in range(n * n):
        w = Element.monomial(htilde, w_idx)
        once = sigma_tilde_inv * pair.twisted_antipode(w)
        twice = sigma_tilde_inv * pair.twisted_antipode(once)
        if twice != w:
            bad = htilde.basis_names[w_idx]
            break
    rep.add_check(
        "involution", "(sigma-tilde^-1 . S_delta-tilde)^2 = id", bad is None, bad
    )
    return htilde, rep
