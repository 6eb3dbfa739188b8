"""Cyclic Jacobi diagonalisation of small complex Hermitian matrices."""

from __future__ import annotations

import math

import numpy as np


class ConvergenceError(RuntimeError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


def check_hermitian(m, rtol: float = 1e-13) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = np.linalg.norm(a)
    if np.max(np.abs(a - a.conj().T), initial=0.0) > rtol * max(scale, np.finfo(float).tiny):
        raise ValueError("matrix is not Hermitian")
    return a


def _off_norm(a: np.ndarray) -> float:
    # Summed directly; total-minus-diagonal cancels catastrophically.
    upper = a[np.triu_indices(a.shape[0], 1)]
    return math.sqrt(2.0) * float(np.linalg.norm(upper))


def eigenvalues_hermitian(
    m, tol: float = 1e-14, max_sweeps: int = 60, rel_eps: float = 1e-16
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Sweeps the strict upper triangle in row order, annihilating each element
    with a complex plane rotation. An element is rotated away while
    ``|a_pq| > rel_eps * sqrt(|a_pp a_qq|)``, so couplings far below the
    matrix norm are still resolved against small diagonal entries. Iteration
    ends after a sweep with no rotations; the off-diagonal Frobenius norm is
    then below ``tol`` times that of the input, or ``ConvergenceError`` is
    raised.
    """
    a = check_hermitian(m).copy()
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    a = 0.5 * (a + a.conj().T)
    target = tol * np.linalg.norm(a)

    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                r = abs(b)
                if r == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                if r <= rel_eps * math.sqrt(abs(app * aqq)):
                    continue
                rotated = True
                phase = b / r
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # Unitary acting on columns (p, q); zeroes a[p, q].
                g = np.array([[c, s * phase], [-s * phase.conjugate(), c]])
                cols = a[:, [p, q]] @ g
                a[:, p] = cols[:, 0]
                a[:, q] = cols[:, 1]
                rows = g.conj().T @ a[[p, q], :]
                a[p, :] = rows[0]
                a[q, :] = rows[1]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        if not rotated:
            break
    off = _off_norm(a)
    if off > target:
        raise ConvergenceError(off, sweep)
    return np.sort(np.diag(a).real)
