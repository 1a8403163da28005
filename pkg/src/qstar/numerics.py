"""Small dense complex linear algebra and special matrices.

Everything here operates on plain numpy arrays of complex128. Matrices in
this package are tiny (n <= ~64), so direct elimination with partial
pivoting is used throughout; there is no sparse or iterative machinery.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotPowerOfTwo, SingularMatrix

#: Relative pivot threshold below which a solve is declared singular.
PIVOT_RTOL = 1e-14

#: Relative singular-value cutoff for numerical rank decisions.
RANK_RTOL = 1e-12


def as_complex_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce ``m`` to a 2-D complex128 array and check it is finite."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def solve_linear(m, rhs) -> np.ndarray:
    """Solve M X = RHS by Gaussian elimination with partial pivoting.

    Raises SingularMatrix when some pivot magnitude falls below
    ``PIVOT_RTOL`` times the largest pivot encountered.
    """
    a = as_complex_matrix(m, "M").copy()
    b = as_complex_matrix(rhs, "RHS").copy()
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionMismatch(f"M must be square, got {a.shape}")
    if b.shape[0] != n:
        raise DimensionMismatch(f"RHS has {b.shape[0]} rows, expected {n}")

    largest_pivot = 0.0
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        pivot = abs(a[pivot_row, col])
        largest_pivot = max(largest_pivot, pivot)
        if pivot == 0.0 or pivot < PIVOT_RTOL * largest_pivot:
            raise SingularMatrix(f"pivot {pivot:.3e} at column {col} below threshold")
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        factors = a[col + 1:, col] / a[col, col]
        a[col + 1:, col:] -= np.outer(factors, a[col, col:])
        b[col + 1:] -= np.outer(factors, b[col])

    x = np.zeros_like(b)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1:] @ x[row + 1:]) / a[row, row]
    return x


def hermitian_defect(m) -> float:
    """Max-norm distance of a square matrix from its conjugate transpose."""
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got {a.shape}")
    if a.size == 0:
        return 0.0
    return float(np.abs(a - a.conj().T).max())


def unitarity_defect(m) -> float:
    """Max-norm of M†M - I for a square matrix."""
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got {a.shape}")
    if a.size == 0:
        return 0.0
    g = a.conj().T @ a - np.eye(a.shape[0])
    return float(np.abs(g).max())


def rank_augmented(a, b) -> int:
    """Numerical rank of the n x 2n block matrix (A|B).

    Uses singular values with a relative cutoff of ``RANK_RTOL``.
    """
    am = as_complex_matrix(a, "A")
    bm = as_complex_matrix(b, "B")
    if am.shape[0] != bm.shape[0]:
        raise DimensionMismatch("A and B must have the same row count")
    stacked = np.hstack([am, bm])
    if stacked.size == 0:
        return 0
    sv = np.linalg.svd(stacked, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > RANK_RTOL * sv[0]))


def dft_hadamard(r: int) -> np.ndarray:
    """Complex Hadamard matrix of order r with entries exp(2*pi*i*(j-1)(k-1)/r).

    All entries have unit modulus and H/sqrt(r) is unitary; such a matrix
    exists for every order.
    """
    if r < 1:
        raise ValueError("order must be >= 1")
    idx = np.arange(r)
    return np.exp(2j * np.pi * np.outer(idx, idx) / r)


def sylvester_hadamard(r: int) -> np.ndarray:
    """Real +-1 Hadamard matrix of power-of-two order r with H H^T = r I.

    Built by the doubling recursion H(2k) = [[H, H], [H, -H]]; entries are
    exact integers. Orders that are not powers of two raise NotPowerOfTwo
    (the general 4k constructions are out of scope).
    """
    if r < 1 or (r & (r - 1)) != 0:
        raise NotPowerOfTwo(f"{r} is not a power of two")
    h = np.array([[1]], dtype=np.int64)
    block = np.array([[1, 1], [1, -1]], dtype=np.int64)
    while h.shape[0] < r:
        h = np.kron(block, h)
    return h
