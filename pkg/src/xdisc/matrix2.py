"""2x2 complex matrix algebra: SVD, Takagi factorization, PSD square roots.

Matrices are plain ``numpy`` arrays of shape (2, 2); ``as_matrix`` accepts
anything array-like (including a flat row-major list of four entries).
"""

from __future__ import annotations

import numpy as np

from .errors import NegativeEigenvalue, NotHermitian, NotSymmetric, SingularResolvent

_I2 = np.eye(2, dtype=complex)


def as_matrix(x) -> np.ndarray:
    a = np.asarray(x, dtype=complex)
    if a.shape == (4,):
        a = a.reshape(2, 2)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    return a


def svd2(a) -> tuple[float, float]:
    """Singular values (s1, s2), s1 >= s2 >= 0."""
    s = np.linalg.svd(as_matrix(a), compute_uv=False)
    return float(s[0]), float(s[1])


def operator_norm(a) -> float:
    return svd2(a)[0]


def is_unitary(u, tol: float = 1e-12) -> bool:
    u = as_matrix(u)
    return bool(np.max(np.abs(u @ u.conj().T - _I2)) <= tol)


def unitarity_defect(u) -> float:
    u = as_matrix(u)
    return float(np.max(np.abs(u @ u.conj().T - _I2)))


def inv2(a, min_det: float = 1e-13) -> np.ndarray:
    a = as_matrix(a)
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if abs(det) < min_det:
        raise SingularResolvent("2x2 matrix numerically singular")
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=complex) / det


def tau_swap(a) -> np.ndarray:
    """Exchange the two columns; an involution with det(tau a) = -det a."""
    a = as_matrix(a)
    return a[:, ::-1].copy()


def takagi2(a, sym_tol: float = 1e-12) -> tuple[np.ndarray, float, float]:
    """Takagi factorization a = U diag(s1, s2) U^T of a complex symmetric a.

    Works through the real symmetric embedding B = [[X, Y], [Y, -X]] of
    a = X + iY: an eigenvector (u, v) of B for s >= 0 yields a column
    w = u + iv with a conj(w) = s w.  Eigenvector mixing inside a cluster of
    equal singular values only rotates w by a phase, so U stays unitary;
    the one fragile regime (singular values clustered at zero) is repaired
    by an explicit orthogonal-complement column with a phase fix.
    """
    a = as_matrix(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.T)) > sym_tol * scale:
        raise NotSymmetric("Takagi factorization needs a symmetric matrix")
    a = 0.5 * (a + a.T)
    x, y = a.real, a.imag
    b = np.block([[x, y], [y, -x]])
    w, v = np.linalg.eigh(b)
    s1 = float(max(w[3], 0.0))
    s2 = float(max(w[2], 0.0))
    w1 = v[:2, 3] + 1j * v[2:, 3]
    w2 = v[:2, 2] + 1j * v[2:, 2]
    u = np.column_stack([w1, w2])
    if unitarity_defect(u) > 1e-12:
        if s1 <= 1e-11:
            return np.eye(2, dtype=complex), s1, s2
        w2 = np.array([-np.conj(w1[1]), np.conj(w1[0])], dtype=complex)
        s = np.vdot(w2, a @ np.conj(w2))
        if abs(s) > 1e-13:
            w2 = w2 * np.exp(0.5j * np.angle(s))
        u = np.column_stack([w1, w2])
    return u, s1, s2


def psd_sqrt2(h, herm_tol: float = 1e-12, clamp: float = 1e-12) -> np.ndarray:
    """Hermitian PSD square root; eigenvalues in [-clamp, 0) are clamped to 0."""
    h = as_matrix(h)
    scale = max(1.0, float(np.max(np.abs(h))))
    if np.max(np.abs(h - h.conj().T)) > herm_tol * scale:
        raise NotHermitian("PSD square root needs a Hermitian matrix")
    hh = 0.5 * (h + h.conj().T)
    w, v = np.linalg.eigh(hh)
    if w[0] < -clamp * scale:
        raise NegativeEigenvalue(f"eigenvalue {w[0]:.3e} below the clamp band")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T
