"""Sparse exact linear algebra over cyclotomic rationals.

Rank uses fraction-free Bareiss elimination with sparsity-driven pivot
choice; kernels come from a field row-reduction with back-substitution.
Matrices are immutable after assembly and all functions here are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, Scalar, as_scalar


class SparseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in (entries or {}).items():
            assert 0 <= i < rows and 0 <= j < cols, "index out of bounds"
            v = as_scalar(v)
            if not v.is_zero():
                clean[(i, j)] = v
        self.entries = clean

    @staticmethod
    def zero(rows: int, cols: int) -> "SparseMatrix":
        return SparseMatrix(rows, cols, {})

    @staticmethod
    def identity(n: int) -> "SparseMatrix":
        return SparseMatrix(n, n, {(i, i): ONE for i in range(n)})

    @staticmethod
    def from_rows(rows_data) -> "SparseMatrix":
        rows_data = [list(r) for r in rows_data]
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows_data):
            assert len(row) == cols
            for j, v in enumerate(row):
                entries[(i, j)] = as_scalar(v)
        return SparseMatrix(rows, cols, entries)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries.get((i, j), Scalar.zero())

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        assert self.cols == other.rows, "shape mismatch"
        by_row: dict[int, list] = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, []).append((k, v))
        other_rows: dict[int, list] = {}
        for (k, j), w in other.entries.items():
            other_rows.setdefault(k, []).append((j, w))
        out: dict[tuple[int, int], Scalar] = {}
        for i, items in by_row.items():
            acc: dict[int, Scalar] = {}
            for k, v in items:
                for j, w in other_rows.get(k, ()):
                    if (cur := acc.get(j)) is None:
                        acc[j] = v * w
                    else:
                        acc[j] = cur + v * w
            for j, s in acc.items():
                if not s.is_zero():
                    out[(i, j)] = s
        return SparseMatrix(self.rows, other.cols, out)

    def apply(self, vec: list[Scalar]) -> list[Scalar]:
        assert len(vec) == self.cols
        out = [Scalar.zero()] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] = out[i] + v * vec[j]
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return "SparseMatrix(%dx%d, %d nonzero)" % (
            self.rows,
            self.cols,
            len(self.entries),
        )


def _sparse_rows(M: SparseMatrix) -> list[dict[int, Scalar]]:
    rows: list[dict[int, Scalar]] = [dict() for _ in range(M.rows)]
    for (i, j), v in M.entries.items():
        rows[i][j] = v
    return [r for r in rows if r]


def _clear_denominators(row: dict[int, Scalar]) -> dict[int, Scalar]:
    lcm = 1
    for v in row.values():
        for coeff in v.c:
            lcm = lcm * coeff.denominator // _gcd(lcm, coeff.denominator)
    if lcm == 1:
        return row
    factor = Scalar.from_rational(lcm)
    return {j: v * factor for j, v in row.items()}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def rank(M: SparseMatrix) -> int:
    """Rank over the fraction field, by fraction-free Bareiss elimination."""
    rows = [_clear_denominators(r) for r in _sparse_rows(M)]
    r = 0
    prev_inv = Scalar.one()
    while rows:
        # pick the sparsest row, then its sparsest column
        rows.sort(key=len)
        pivot_row = rows.pop(0)
        counts: dict[int, int] = {}
        for row in rows:
            for j in row:
                counts[j] = counts.get(j, 0) + 1
        pcol = min(pivot_row, key=lambda j: (counts.get(j, 0), j))
        p = pivot_row[pcol]
        r += 1
        nxt = []
        for row in rows:
            f = row.get(pcol)
            if f is None:
                new = {j: (v * p) * prev_inv for j, v in row.items()}
            else:
                new = {}
                for j, v in row.items():
                    if j == pcol:
                        continue
                    t = v * p - (f * pivot_row[j] if j in pivot_row else Scalar.zero())
                    t = t * prev_inv
                    if not t.is_zero():
                        new[j] = t
                for j, w in pivot_row.items():
                    if j != pcol and j not in row:
                        t = (-f * w) * prev_inv
                        if not t.is_zero():
                            new[j] = t
            if new:
                nxt.append(new)
        rows = nxt
        prev_inv = p.inv()
    return r


def _rref(M: SparseMatrix):
    """Reduced row echelon form over the field.

    Returns (pivot_cols, rows) where rows are dense-free dicts col->Scalar
    with leading 1 at the pivot column and zeros above/below pivots.
    """
    rows = _sparse_rows(M)
    pivots: list[int] = []
    done: list[dict[int, Scalar]] = []
    while rows:
        rows.sort(key=lambda r: (min(r), len(r)))
        row = rows.pop(0)
        pcol = min(row)
        inv = row[pcol].inv()
        row = {j: v * inv for j, v in row.items()}
        for other in done:
            f = other.get(pcol)
            if f is not None:
                for j, v in row.items():
                    t = other.get(j, Scalar.zero()) - f * v
                    if t.is_zero():
                        other.pop(j, None)
                    else:
                        other[j] = t
        nxt = []
        for other in rows:
            f = other.get(pcol)
            if f is not None:
                for j, v in row.items():
                    t = other.get(j, Scalar.zero()) - f * v
                    if t.is_zero():
                        other.pop(j, None)
                    else:
                        other[j] = t
            if other:
                nxt.append(other)
        rows = nxt
        pivots.append(pcol)
        done.append(row)
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [pivots[k] for k in order], [done[k] for k in order]


def kernel_basis(M: SparseMatrix) -> list[list[Scalar]]:
    """Vectors spanning ker(M), one per free column, in column order."""
    pivots, rows = _rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        vec = [Scalar.zero()] * M.cols
        vec[free] = Scalar.one()
        for pcol, row in zip(pivots, rows):
            coeff = row.get(free)
            if coeff is not None:
                vec[pcol] = -coeff
        basis.append(vec)
    return basis


def solve(M: SparseMatrix, rhs: list[Scalar]) -> list[Scalar] | None:
    """One solution of M x = rhs, or None if inconsistent."""
    assert len(rhs) == M.rows
    aug = SparseMatrix(
        M.rows,
        M.cols + 1,
        {**M.entries, **{(i, M.cols): v for i, v in enumerate(rhs) if v}},
    )
    pivots, rows = _rref(aug)
    x = [Scalar.zero()] * M.cols
    for pcol, row in zip(pivots, rows):
        if pcol == M.cols:
            return None
        x[pcol] = row.get(M.cols, Scalar.zero())
    return x


class NotAComplexError(ValueError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(
            "composition is nonzero on basis chain index %d" % witness
        )


def homology_dim(outgoing: SparseMatrix, incoming: SparseMatrix) -> int:
    """dim ker(outgoing) - rank(incoming) at one spot of a complex.

    outgoing acts on the space, incoming maps into it; their composite
    must vanish (checked, with a witness column on failure).
    """
    assert outgoing.cols == incoming.rows, "maps do not meet in one space"
    comp = outgoing.mul(incoming)
    if not comp.is_zero():
        bad = min(j for (_, j) in comp.entries)
        raise NotAComplexError(bad)
    dim = outgoing.cols - rank(outgoing) - rank(incoming)
    assert dim >= 0
    return dim
