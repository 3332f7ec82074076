"""Schmidt decomposition of bipartite pure states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, ToleranceConfig, numerical_rank
from .states import PureState


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """``|psi> = sum_i coefficients[i] |left_i> (x) |right_i>``.

    ``left_vectors`` is ``m x k`` and ``right_vectors`` is ``n x k``, one
    Schmidt vector per column.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.coefficients.size)

    def reconstruct(self) -> np.ndarray:
        """The ``m x n`` coefficient matrix ``sum_i p_i a_i b_i^T``."""
        return (self.left_vectors * self.coefficients) @ self.right_vectors.T


def schmidt_decomposition(psi: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> SchmidtDecomposition:
    # A = U S V^dagger, so |b_i> has coefficient vector conj(V[:, i]) = vh[i]
    u, s, vh = np.linalg.svd(np.asarray(psi.coeffs), full_matrices=False)
    k = int(np.count_nonzero(s > tol.cutoff(float(s[0]))))
    return SchmidtDecomposition(
        coefficients=s[:k].copy(),
        left_vectors=u[:, :k].copy(),
        right_vectors=vh[:k].T.copy(),
    )


def schmidt_rank(psi: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    return numerical_rank(psi.coeffs, tol)


def reduced_density_A(psi: PureState) -> np.ndarray:
    """Partial trace over B: the ``m x m`` matrix ``A A^dagger``."""
    A = np.asarray(psi.coeffs)
    return A @ A.conj().T


def reduced_density_B(psi: PureState) -> np.ndarray:
    """Partial trace over A: the ``n x n`` matrix ``A^T conj(A)``."""
    A = np.asarray(psi.coeffs)
    return A.T @ A.conj()
