"""Exact-arithmetic cyclic cohomology for algebras and Hopf algebras."""

__version__ = "0.1.0"

from .scalars import Scalar, as_scalar
from .linalg import SparseMatrix, homology_dim, kernel_basis, rank

__all__ = [
    "Scalar",
    "as_scalar",
    "SparseMatrix",
    "rank",
    "kernel_basis",
    "homology_dim",
    "__version__",
]
