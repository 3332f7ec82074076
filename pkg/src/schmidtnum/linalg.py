"""Dense complex linear algebra with an explicit rank tolerance.

Every rank-dependent routine takes a :class:`ToleranceConfig`. A singular
value counts towards the rank when it exceeds
``max(rank_rel * sigma_max, zero_abs)``.

The heavy lifting is delegated to LAPACK through :mod:`numpy.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError

HERMITIAN_ATOL = 1e-10


@dataclass(frozen=True)
class ToleranceConfig:
    """Cutoffs used to turn floating-point spectra into integer ranks."""

    rank_rel: float = 1e-9
    zero_abs: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.rank_rel < 1.0:
            raise InvalidInputError(f"rank_rel must lie in (0, 1), got {self.rank_rel!r}")
        if not self.zero_abs > 0.0:
            raise InvalidInputError(f"zero_abs must be positive, got {self.zero_abs!r}")

    def cutoff(self, sigma_max: float) -> float:
        return max(self.rank_rel * sigma_max, self.zero_abs)

    def as_dict(self) -> dict:
        return {"rank_rel": self.rank_rel, "zero_abs": self.zero_abs}


DEFAULT_TOL = ToleranceConfig()


def as_matrix(M, name: str = "matrix") -> np.ndarray:
    """Return ``M`` as a 2-D complex array, rejecting empty or non-finite input."""
    arr = np.asarray(M, dtype=complex)
    if arr.ndim != 2:
        raise InvalidInputError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InvalidInputError(f"{name} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} has non-finite entries")
    return arr


def singular_values(M) -> np.ndarray:
    """Singular values of ``M`` in descending order (``min(rows, cols)`` of them)."""
    return np.linalg.svd(as_matrix(M), compute_uv=False)


def _rank_from_sigma(sigma: np.ndarray, tol: ToleranceConfig) -> int:
    if sigma.size == 0:
        return 0
    return int(np.count_nonzero(sigma > tol.cutoff(float(sigma[0]))))


def numerical_rank(M, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    return _rank_from_sigma(singular_values(M), tol)


def null_space(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of ``{x : M x = 0}``, one basis vector per column.

    The result has shape ``(cols, cols - rank)``.
    """
    arr = as_matrix(M)
    _, sigma, vh = np.linalg.svd(arr, full_matrices=True)
    k = _rank_from_sigma(sigma, tol)
    return vh[k:].conj().T


def left_null_space(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of ``{y : y M = 0}``, one row vector per row.

    The result has shape ``(rows - rank, rows)``.
    """
    arr = as_matrix(M)
    u, sigma, _ = np.linalg.svd(arr, full_matrices=True)
    k = _rank_from_sigma(sigma, tol)
    return u[:, k:].conj().T


def check_hermitian(H, atol: float = HERMITIAN_ATOL, name: str = "matrix") -> np.ndarray:
    arr = as_matrix(H, name)
    if arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"{name} must be square, got {arr.shape}")
    if np.max(np.abs(arr - arr.conj().T)) > atol:
        raise InvalidInputError(f"{name} is not Hermitian within {atol:g}")
    return arr


def hermitian_eigendecomposition(H, tol: ToleranceConfig = DEFAULT_TOL):
    """Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian matrix.

    Returns ``(w, V)`` with ``H @ V[:, i] == w[i] * V[:, i]``. ``tol`` is
    accepted for interface symmetry; Hermiticity is checked at a fixed
    ``1e-10`` per entry.
    """
    arr = check_hermitian(H)
    # symmetrize so eigh sees an exactly Hermitian matrix
    w, V = np.linalg.eigh(0.5 * (arr + arr.conj().T))
    return w[::-1].copy(), V[:, ::-1].copy()


def gram_orthonormalize(vectors: Iterable[Sequence[complex]], tol: float = 1e-10) -> np.ndarray:
    """Modified Gram-Schmidt with one re-orthogonalization pass.

    Vectors whose residual norm falls to ``tol`` (relative to their input norm)
    or below are dropped. Returns the orthonormal set as columns, shape
    ``(dim, k)``.
    """
    vecs = [np.asarray(v, dtype=complex).ravel() for v in vectors]
    if not vecs:
        raise InvalidInputError("no vectors given")
    dim = vecs[0].size
    if any(v.size != dim for v in vecs):
        raise InvalidInputError("vectors must share a dimension")
    basis: list[np.ndarray] = []
    for v in vecs:
        norm0 = np.linalg.norm(v)
        if norm0 == 0.0:
            continue
        w = v.copy()
        for _ in range(2):
            for q in basis:
                w -= np.vdot(q, w) * q
        norm = np.linalg.norm(w)
        if norm <= tol * norm0:
            continue
        basis.append(w / norm)
    if not basis:
        return np.zeros((dim, 0), dtype=complex)
    return np.column_stack(basis)


def principal_angles(U, V) -> np.ndarray:
    """Principal angles (radians, descending) between the column spans of ``U`` and ``V``.

    Both inputs must have orthonormal columns. Sines are taken from the part of
    the smaller basis outside the larger one, which keeps small angles accurate.
    """
    U = np.asarray(U, dtype=complex)
    V = np.asarray(V, dtype=complex)
    if U.shape[0] != V.shape[0]:
        raise InvalidInputError("subspaces live in different ambient dimensions")
    if U.shape[1] < V.shape[1]:
        U, V = V, U
    if V.shape[1] == 0:
        return np.zeros(0)
    residual = V - U @ (U.conj().T @ V)
    sines = np.linalg.svd(residual, compute_uv=False)
    return np.arcsin(np.clip(sines, 0.0, 1.0))


def same_subspace(U, V, atol: float = 1e-6) -> bool:
    """True when the column spans of ``U`` and ``V`` coincide to ``atol`` radians."""
    U = np.asarray(U)
    V = np.asarray(V)
    if U.shape != V.shape:
        return False
    angles = principal_angles(U, V)
    return bool(angles.size == 0 or angles.max() <= atol)
