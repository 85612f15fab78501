"""Chevalley-Eilenberg homology and cohomology with character coefficients.

This is the independent brute-force oracle: exterior-power bases, boundary
matrices twisted by a character, exact ranks.  Nothing here touches the
cyclic machinery, so agreement between the two is a real cross-check.
"""

from __future__ import annotations

import itertools

from .linalg import SparseMatrix, rank
from .scalars import ONE, ZERO, Scalar, as_scalar


class LieData:
    """Finite-dimensional Lie algebra by structure constants.

    brackets maps (i, j) with i < j to {k: c} meaning [x_i, x_j] = sum c x_k.
    degrees are positive integers used for filtration bookkeeping; the
    grading is called exact when every bracket is degree-homogeneous.
    """

    def __init__(
        self,
        names: list[str],
        brackets: dict,
        degrees: list[int] | None = None,
        character: dict | None = None,
    ):
        self.dim = len(names)
        self.names = list(names)
        self.degrees = list(degrees) if degrees else [1] * self.dim
        assert all(d >= 1 for d in self.degrees)
        self.brackets = {}
        for (i, j), row in brackets.items():
            assert 0 <= i < j < self.dim, "store brackets with i < j"
            clean = {k: as_scalar(c) for k, c in row.items() if not as_scalar(c).is_zero()}
            if clean:
                self.brackets[(i, j)] = clean
        self.character = (
            {i: as_scalar(c) for i, c in character.items()} if character else None
        )
        self._check_jacobi()
        if self.character:
            self._check_character()

    def bracket(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def _check_jacobi(self):
        for i, j, k in itertools.combinations(range(self.dim), 3):
            acc: dict[int, Scalar] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for m, cm in self.bracket(b, c).items():
                    for t, ct in self.bracket(a, m).items():
                        acc[t] = acc.get(t, ZERO) + cm * ct
            if any(not v.is_zero() for v in acc.values()):
                raise ValueError(
                    "Jacobi identity fails on (%s, %s, %s)"
                    % (self.names[i], self.names[j], self.names[k])
                )

    def _check_character(self):
        # a character must kill the derived subalgebra
        for (i, j), row in self.brackets.items():
            val = ZERO
            for k, c in row.items():
                val = val + c * self.character.get(k, ZERO)
            if not val.is_zero():
                raise ValueError(
                    "character does not vanish on [%s, %s]"
                    % (self.names[i], self.names[j])
                )

    def character_value(self, i: int) -> Scalar:
        if not self.character:
            return ZERO
        return self.character.get(i, ZERO)

    def is_graded(self) -> bool:
        for (i, j), row in self.brackets.items():
            d = self.degrees[i] + self.degrees[j]
            for k in row:
                if self.degrees[k] != d:
                    return False
        return True


# -- standard small Lie algebras -------------------------------------------


def abelian_lie(n: int) -> LieData:
    return LieData(["e%d" % (i + 1) for i in range(n)], {})


def heisenberg_lie() -> LieData:
    # [e1, e2] = e3, graded with weights (1, 1, 2)
    return LieData(["e1", "e2", "e3"], {(0, 1): {2: 1}}, degrees=[1, 1, 2])


def affine_line_lie() -> LieData:
    # [Y, X] = X with the trace character (X -> 0, Y -> 1)
    return LieData(
        ["X", "Y"],
        {(0, 1): {0: -1}},  # [X, Y] = -X
        degrees=[1, 1],
        character={0: 0, 1: 1},
    )


# -- Chevalley-Eilenberg complexes ------------------------------------------


def _subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), k))


def _wedge_insert(t: int, rest: tuple[int, ...]):
    """Sort t into the strictly increasing tuple rest; None if repeated."""
    if t in rest:
        return None, 0
    pos = 0
    while pos < len(rest) and rest[pos] < t:
        pos += 1
    return rest[:pos] + (t,) + rest[pos:], (-1) ** pos


def ce_boundary_matrices(lie: LieData, delta: dict | None = None) -> list[SparseMatrix]:
    """Boundary d_k : Lambda^k -> Lambda^(k-1) for k = 1..dim, coefficients
    in the 1-dimensional module where x acts by delta(x)."""
    delta = delta if delta is not None else (lie.character or {})
    delta = {i: as_scalar(c) for i, c in delta.items()}
    mats = []
    for k in range(1, lie.dim + 1):
        dom = _subsets(lie.dim, k)
        cod = _subsets(lie.dim, k - 1)
        cod_index = {s: i for i, s in enumerate(cod)}
        entries: dict = {}
        for col, S in enumerate(dom):
            # module action term
            for r, xr in enumerate(S):
                dv = delta.get(xr, ZERO)
                if not dv.is_zero():
                    rest = S[:r] + S[r + 1 :]
                    sign = as_scalar((-1) ** r)
                    row = cod_index[rest]
                    entries[(row, col)] = entries.get((row, col), ZERO) + sign * dv
            # bracket contraction term
            for r, s in itertools.combinations(range(k), 2):
                xr, xs = S[r], S[s]
                rest = tuple(x for t, x in enumerate(S) if t not in (r, s))
                sign_rs = as_scalar((-1) ** (r + s))
                for t, c in lie.bracket(xr, xs).items():
                    merged, wsign = _wedge_insert(t, rest)
                    if merged is None:
                        continue
                    row = cod_index[merged]
                    entries[(row, col)] = entries.get((row, col), ZERO) + (
                        sign_rs * as_scalar(wsign) * c
                    )
        mats.append(SparseMatrix(len(cod), len(dom), entries))
    return mats


def ce_coboundary_matrices(lie: LieData, delta: dict | None = None) -> list[SparseMatrix]:
    """Coboundary d^k : Hom(Lambda^k) -> Hom(Lambda^(k+1)), written directly
    from the cochain formula rather than by transposing the boundary."""
    delta = delta if delta is not None else (lie.character or {})
    delta = {i: as_scalar(c) for i, c in delta.items()}
    mats = []
    for k in range(0, lie.dim):
        dom = _subsets(lie.dim, k)
        cod = _subsets(lie.dim, k + 1)
        dom_index = {s: i for i, s in enumerate(dom)}
        entries: dict = {}
        for row, S in enumerate(cod):
            # (d phi)(S) = sum_i (-1)^i delta(x_i) phi(S without i)
            #            + sum_{i<j} (-1)^(i+j) phi([x_i,x_j] ^ S without i,j)
            for r, xr in enumerate(S):
                dv = delta.get(xr, ZERO)
                if not dv.is_zero():
                    rest = S[:r] + S[r + 1 :]
                    col = dom_index[rest]
                    entries[(row, col)] = entries.get((row, col), ZERO) + as_scalar(
                        (-1) ** r
                    ) * dv
            for r, s in itertools.combinations(range(k + 1), 2):
                xr, xs = S[r], S[s]
                rest = tuple(x for t, x in enumerate(S) if t not in (r, s))
                sign_rs = as_scalar((-1) ** (r + s))
                for t, c in lie.bracket(xr, xs).items():
                    merged, wsign = _wedge_insert(t, rest)
                    if merged is None:
                        continue
                    col = dom_index[merged]
                    entries[(row, col)] = entries.get((row, col), ZERO) + (
                        sign_rs * as_scalar(wsign) * c
                    )
        mats.append(SparseMatrix(len(cod), len(dom), entries))
    return mats


def ce_homology(lie: LieData, delta: dict | None = None) -> list[int]:
    """Betti numbers of H_k(g, C_delta) for k = 0..dim."""
    mats = ce_boundary_matrices(lie, delta)
    n = lie.dim
    # complex property (also exercised by homology_dim's internal check)
    for k in range(n - 1):
        assert mats[k].mul(mats[k + 1]).is_zero()
    dims = []
    for k in range(n + 1):
        space = len(_subsets(n, k))
        out_rank = rank(mats[k - 1]) if k >= 1 else 0
        in_rank = rank(mats[k]) if k < n else 0
        dims.append(space - out_rank - in_rank)
    assert all(d >= 0 for d in dims)
    return dims


def ce_cohomology(lie: LieData, delta: dict | None = None) -> list[int]:
    """Betti numbers of H^k(g, C_delta) for k = 0..dim."""
    mats = ce_coboundary_matrices(lie, delta)
    n = lie.dim
    dims = []
    for k in range(n + 1):
        space = len(_subsets(n, k))
        out_rank = rank(mats[k]) if k < n else 0
        in_rank = rank(mats[k - 1]) if k >= 1 else 0
        dims.append(space - out_rank - in_rank)
    assert all(d >= 0 for d in dims)
    # complex property
    for k in range(n - 1):
        assert mats[k + 1].mul(mats[k]).is_zero()
    return dims


def truncated_parity_dims(h_dims: list[int], degrees: int) -> list[int]:
    """Expected cyclic dimensions: sum of H_i over i <= n with i = n mod 2."""
    out = []
    for n in range(degrees + 1):
        out.append(sum(h_dims[i] for i in range(n % 2, n + 1, 2) if i < len(h_dims)))
    return out


def antisymmetrize(fn, lie: LieData, n: int, generator_elements) -> dict:
    """Restrict an n-cochain on enveloping-algebra arguments to Lambda^n g.

    fn takes an n-tuple of algebra Elements; generator_elements[i] is the
    i-th Lie generator as an Element.  Returns {k-subset: Scalar} with the
    1/n! normalization.
    """
    from math import factorial

    out = {}
    norm = as_scalar(1) / as_scalar(factorial(n))
    for S in _subsets(lie.dim, n):
        total = ZERO
        for perm in itertools.permutations(range(n)):
            sign = _perm_sign(perm)
            args = tuple(generator_elements[S[p]] for p in perm)
            total = total + as_scalar(sign) * fn(args)
        v = total * norm
        if not v.is_zero():
            out[S] = v
    return out


def _perm_sign(perm) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def ce_cochain_coboundary(lie: LieData, delta: dict | None, n: int, cochain: dict) -> dict:
    """Apply the degree-n coboundary to {n-subset: Scalar}; returns degree n+1."""
    mat = ce_coboundary_matrices(lie, delta)[n]
    dom = _subsets(lie.dim, n)
    cod = _subsets(lie.dim, n + 1)
    vec = [cochain.get(S, ZERO) for S in dom]
    img = mat.apply(vec)
    return {cod[i]: v for i, v in enumerate(img) if not v.is_zero()}
