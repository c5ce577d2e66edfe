"""Cyclic Jacobi eigen-solver for small real symmetric matrices."""

import logging
import math
from typing import Tuple

import numpy as np

from libreBiortho.errors import InvalidInput

logger = logging.getLogger(__name__)

def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))

def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero a[p, q] in place by one Jacobi rotation and accumulate it into v."""
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q

    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q

def jacobi_eigh(matrix: np.ndarray, tol: float = 1e-14,
                max_sweeps: int = 64) -> Tuple[np.ndarray, np.ndarray, int]:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Sweeps until the off-diagonal Frobenius norm is at most tol * ||matrix||_F.

    Returns
    -------
    eigenvalues : ndarray
        Sorted in descending order.
    eigenvectors : ndarray
        Orthonormal columns, column n belongs to eigenvalues[n].
    sweeps : int
        Number of sweeps performed.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInput(f"Matrix must be square, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-14 * max(1.0, float(np.abs(a).max(initial=0.0)))):
        raise InvalidInput("Matrix must be symmetric")

    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    sweeps = 0

    if scale > 0.0:
        while _off_diagonal_norm(a) > tol * scale:
            if sweeps >= max_sweeps:
                logger.warning(
                    f"Jacobi did not converge in {max_sweeps} sweeps "
                    f"(off-diagonal {_off_diagonal_norm(a):.3e})"
                )
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if a[p, q] != 0.0:
                        _rotate(a, v, p, q)
            sweeps += 1

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues)[::-1]
    return eigenvalues[order], v[:, order], sweeps
