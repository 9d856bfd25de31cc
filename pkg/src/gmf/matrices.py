"""Dense complex matrices: PSD validation, rank-tolerant Cholesky, submatrices.

The carrier type is a plain 2-D complex128 ndarray.  The Cholesky here is the
outer-product algorithm without pivoting: a pivot within tolerance of zero is
treated as exactly zero and the rest of its column is zeroed, which is the
limit of the epsilon-regularized factor and keeps L lower triangular with
A = L L* for rank-deficient PSD input.  The PSD test runs the diagonally
pivoted variant so indefiniteness is detected even when leading minors vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_PSD_TOL
from .errors import IndexOutOfRangeError, NotHermitianError, NotPsdError, NotSquareError


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array and reject non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix has NaN or Inf entries")
    return m


def _require_square(m: np.ndarray) -> int:
    if m.shape[0] != m.shape[1]:
        raise NotSquareError(f"matrix is {m.shape[0]}x{m.shape[1]}, expected square")
    return m.shape[0]


def max_norm(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


@dataclass
class PsdVerdict:
    is_psd: bool
    min_eigen_estimate: float
    tolerance_used: float


@dataclass
class CholeskyFactor:
    """Lower-triangular L with A = L L* up to the recorded residual."""
    l: np.ndarray
    rank_estimate: int
    reconstruction_residual: float


def _hermitize(m: np.ndarray, tol: float) -> np.ndarray:
    asym = max_norm(m - m.conj().T)
    if asym > tol * (1.0 + max_norm(m)):
        raise NotHermitianError(asym)
    return (m + m.conj().T) / 2.0


def check_psd(a, tol: float = DEFAULT_PSD_TOL) -> PsdVerdict:
    """Positive semi-definiteness via diagonally pivoted outer-product Cholesky.

    The reported min_eigen_estimate is the most negative pivot seen; when a
    zero pivot leaves a non-negligible off-diagonal residual, the estimate is
    the smallest eigenvalue of the worst 2x2 principal submatrix, which
    certifies indefiniteness.
    """
    m = as_matrix(a)
    n = _require_square(m)
    h = _hermitize(m, tol)
    norm = max_norm(h)
    floor = tol * norm
    w = h.copy()
    min_est = np.inf
    for _ in range(n):
        d = np.real(np.diagonal(w))
        j = int(np.argmax(d))
        pivot = d[j]
        if pivot <= floor:
            break
        min_est = min(min_est, pivot)
        # symmetric swap of row/col j to the front, then one elimination step
        w[[0, j], :] = w[[j, 0], :]
        w[:, [0, j]] = w[:, [j, 0]]
        col = w[1:, 0]
        w = w[1:, 1:] - np.outer(col, col.conj()) / pivot
    if w.size:
        d = np.real(np.diagonal(w))
        min_est = min(min_est, float(np.min(d)))
        off = w - np.diag(np.diagonal(w))
        if off.size and max_norm(off) > floor:
            i, j = np.unravel_index(np.argmax(np.abs(off)), off.shape)
            c = abs(off[i, j])
            half = (d[i] + d[j]) / 2.0
            min_est = min(min_est, half - np.hypot((d[i] - d[j]) / 2.0, c))
    if not np.isfinite(min_est):
        min_est = 0.0  # zero matrix
    return PsdVerdict(is_psd=bool(min_est >= -floor), min_eigen_estimate=float(min_est),
                      tolerance_used=float(tol))


def cholesky(a, tol: float = DEFAULT_PSD_TOL) -> CholeskyFactor:
    """Outer-product Cholesky without pivoting, zeroing rank-deficient columns."""
    m = as_matrix(a)
    n = _require_square(m)
    verdict = check_psd(m, tol)
    if not verdict.is_psd:
        raise NotPsdError(verdict.min_eigen_estimate, tol)
    h = _hermitize(m, tol)
    norm = max_norm(h)
    floor = tol * norm
    w = h.copy()
    l = np.zeros((n, n), dtype=np.complex128)
    rank = 0
    for k in range(n):
        pivot = float(np.real(w[k, k]))
        if pivot < -floor:
            raise NotPsdError(pivot, tol)
        if pivot <= floor:
            continue  # column of L stays zero
        rank += 1
        root = np.sqrt(pivot)
        l[k, k] = root
        col = w[k + 1:, k] / root
        l[k + 1:, k] = col
        w[k + 1:, k + 1:] -= np.outer(col, col.conj())
    residual = max_norm(l @ l.conj().T - m)
    return CholeskyFactor(l=l, rank_estimate=rank, reconstruction_residual=residual)


def submatrix(a, alpha, beta) -> np.ndarray:
    """a[alpha | beta] with 0-based index sequences; repetition allowed."""
    m = as_matrix(a)
    alpha = tuple(int(i) for i in alpha)
    beta = tuple(int(j) for j in beta)
    rows, cols = m.shape
    for i in alpha:
        if not 0 <= i < rows:
            raise IndexOutOfRangeError(f"row index {i} outside [0, {rows})")
    for j in beta:
        if not 0 <= j < cols:
            raise IndexOutOfRangeError(f"column index {j} outside [0, {cols})")
    return m[np.ix_(alpha, beta)]


def permutation_matrix(g, n: int | None = None) -> np.ndarray:
    """P_g with (P_g)[i, j] = 1 iff i = g(j); satisfies L[:, g.gamma] = L @ P_g."""
    images = g.images if hasattr(g, "images") else tuple(g)
    size = len(images) if n is None else int(n)
    if size != len(images) or sorted(images) != list(range(size)):
        raise ValueError(f"not a permutation of [{size}]: {images}")
    p = np.zeros((size, size), dtype=np.complex128)
    p[list(images), range(size)] = 1.0
    return p


def determinant(a) -> complex:
    """LU with partial pivoting via LAPACK; the signed-sum oracle lives in tests."""
    m = as_matrix(a)
    _require_square(m)
    return complex(np.linalg.det(m))
