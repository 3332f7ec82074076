"""Bipartite state model on C^m (x) C^n.

The product basis is ordered A-major, ``|0 0>, |0 1>, ..., |m-1 n-1>``, so a
pure state's flat vector is its ``m x n`` coefficient matrix in row-major
order and ``rho[i*n:(i+1)*n, j*n:(j+1)*n]`` is the ``(i, j)`` block.

Indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidInputError
from .linalg import DEFAULT_TOL, ToleranceConfig, as_matrix, hermitian_eigendecomposition, numerical_rank

NORM_ATOL = 1e-10
DENSITY_ATOL = 1e-10
UNITARY_ATOL = 1e-10


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=complex, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state stored as its ``m x n`` coefficient matrix."""

    m: int
    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = as_matrix(self.coeffs, "coeffs")
        if arr.shape != (self.m, self.n):
            raise InvalidInputError(f"coeffs shape {arr.shape} does not match ({self.m}, {self.n})")
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > NORM_ATOL:
            raise InvalidInputError(f"state norm is {norm:.12g}, expected 1")
        object.__setattr__(self, "coeffs", _frozen(arr))

    @classmethod
    def from_vector(cls, vec, m: int, n: int) -> "PureState":
        vec = np.asarray(vec, dtype=complex).ravel()
        if vec.size != m * n:
            raise InvalidInputError(f"vector length {vec.size} != {m}*{n}")
        return cls(m, n, vec.reshape(m, n))

    @classmethod
    def from_terms(cls, m: int, n: int, terms: Iterable[tuple[int, int]], amplitude: complex) -> "PureState":
        """Equal-amplitude superposition of product basis vectors ``|i j>``."""
        A = np.zeros((m, n), dtype=complex)
        for i, j in terms:
            A[i, j] += amplitude
        return cls(m, n, A)

    @property
    def vector(self) -> np.ndarray:
        return self.coeffs.reshape(-1)

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class WeightedEnsemble:
    """Convex combination ``rho = sum_k p_k |v_k><v_k|`` of pure states."""

    m: int
    n: int
    members: tuple[tuple[float, PureState], ...]

    def __post_init__(self):
        members = tuple((float(p), s) for p, s in self.members)
        if not members:
            raise InvalidInputError("ensemble has no members")
        for k, (p, s) in enumerate(members):
            if not np.isfinite(p) or p <= 0.0:
                raise InvalidInputError(f"weight {k} must be positive, got {p!r}")
            if (s.m, s.n) != (self.m, self.n):
                raise InvalidInputError(f"member {k} has dimensions ({s.m}, {s.n}), expected ({self.m}, {self.n})")
        total = sum(p for p, _ in members)
        if abs(total - 1.0) > NORM_ATOL:
            raise InvalidInputError(f"weights sum to {total:.12g}, expected 1 (normalization)")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_members(cls, members: Sequence[tuple[float, PureState]]) -> "WeightedEnsemble":
        members = list(members)
        if not members:
            raise InvalidInputError("ensemble has no members")
        s0 = members[0][1]
        return cls(s0.m, s0.n, tuple(members))

    @classmethod
    def uniform(cls, states: Sequence[PureState]) -> "WeightedEnsemble":
        return cls.from_members([(1.0 / len(states), s) for s in states])

    @classmethod
    def pure(cls, state: PureState) -> "WeightedEnsemble":
        return cls(state.m, state.n, ((1.0, state),))

    @property
    def t(self) -> int:
        return len(self.members)

    @property
    def weights(self) -> np.ndarray:
        return np.array([p for p, _ in self.members])

    @property
    def states(self) -> list[PureState]:
        return [s for _, s in self.members]

    def coefficient_stack(self) -> np.ndarray:
        """Member coefficient matrices as a ``(t, m, n)`` array."""
        return np.stack([s.coeffs for s in self.states])

    def scaled_vectors(self) -> np.ndarray:
        """``mn x t`` matrix whose columns are ``sqrt(p_k) v_k``."""
        return (self.coefficient_stack().reshape(self.t, -1) * np.sqrt(self.weights)[:, None]).T

    def __eq__(self, other):
        if not isinstance(other, WeightedEnsemble):
            return NotImplemented
        return (
            (self.m, self.n, self.t) == (other.m, other.n, other.t)
            and all(p == q and s == u for (p, s), (q, u) in zip(self.members, other.members))
        )

    __hash__ = None


def validate_density(mat, m: int, n: int, atol: float = DENSITY_ATOL) -> Optional[str]:
    """Return ``None`` for a valid density matrix, else a diagnostic.

    The diagnostic starts with the name of the first violated invariant:
    ``"hermiticity"``, ``"trace"`` or ``"positivity"``. A shape that does not
    match ``(m*n, m*n)`` raises :class:`InvalidInputError`.
    """
    arr = as_matrix(mat, "density matrix")
    if arr.shape != (m * n, m * n):
        raise InvalidInputError(f"density shape {arr.shape} does not match m*n = {m * n}")
    herm_err = float(np.max(np.abs(arr - arr.conj().T)))
    if herm_err > atol:
        return f"hermiticity: max |rho - rho^dagger| = {herm_err:.3g}"
    tr = np.trace(arr)
    if abs(tr - 1.0) > atol:
        return f"trace: trace is {tr.real:.12g}{tr.imag:+.3g}j, expected 1"
    lam_min = float(np.linalg.eigvalsh(0.5 * (arr + arr.conj().T))[0])
    if lam_min < -atol:
        return f"positivity: smallest eigenvalue is {lam_min:.3g}"
    return None


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace operator on C^m (x) C^n."""

    m: int
    n: int
    mat: np.ndarray

    def __post_init__(self):
        problem = validate_density(self.mat, self.m, self.n)
        if problem is not None:
            raise InvalidInputError(f"invalid density matrix ({problem})")
        object.__setattr__(self, "mat", _frozen(self.mat))

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and np.array_equal(self.mat, other.mat)

    __hash__ = None


def ensemble_gram(e: WeightedEnsemble) -> np.ndarray:
    """``t x t`` Gram matrix ``sqrt(p_k p_l) <v_k|v_l>``; same nonzero spectrum as rho."""
    B = e.scaled_vectors()
    return B.conj().T @ B


def ensemble_rank(e: WeightedEnsemble, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Rank of the density matrix an ensemble represents, via its Gram matrix."""
    return numerical_rank(ensemble_gram(e), tol)


def ensemble_to_density(e: WeightedEnsemble) -> DensityMatrix:
    B = e.scaled_vectors()
    rho = B @ B.conj().T
    return DensityMatrix(e.m, e.n, 0.5 * (rho + rho.conj().T))


def spectral_ensemble(rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> WeightedEnsemble:
    """Eigen-decomposition of ``rho`` as an ensemble of its nonzero eigenpairs.

    Eigenvalues below the rank cutoff are discarded and the remaining weights
    renormalized. Within a degenerate eigenspace any orthonormal basis may come
    back.
    """
    w, V = hermitian_eigendecomposition(rho.mat, tol)
    r = int(np.count_nonzero(w > tol.cutoff(float(max(abs(w[0]), abs(w[-1]))))))
    weights = w[:r] / w[:r].sum()
    members = []
    for k in range(r):
        vec = V[:, k] / np.linalg.norm(V[:, k])
        members.append((float(weights[k]), PureState.from_vector(vec, rho.m, rho.n)))
    return WeightedEnsemble(rho.m, rho.n, tuple(members))


def block(rho, i: int, j: int, m: Optional[int] = None, n: Optional[int] = None) -> np.ndarray:
    """The ``n x n`` block on rows ``|i 0..n-1>`` and columns ``|j 0..n-1>``."""
    mat, m, n = _unpack(rho, m, n)
    if not (0 <= i < m and 0 <= j < m):
        raise IndexError(f"block index ({i}, {j}) out of range for m = {m}")
    return mat[i * n:(i + 1) * n, j * n:(j + 1) * n].copy()


def partial_transpose(rho, m: Optional[int] = None, n: Optional[int] = None) -> np.ndarray:
    """Transpose on party B: every block ``(i, j)`` is replaced by its transpose.

    Accepts a :class:`DensityMatrix` or a raw ``mn x mn`` array together with
    ``m`` and ``n``. The result need not be positive, so a plain array is
    returned.
    """
    mat, m, n = _unpack(rho, m, n)
    return mat.reshape(m, n, m, n).transpose(0, 3, 2, 1).reshape(m * n, m * n)


def _unpack(rho, m, n):
    if isinstance(rho, DensityMatrix):
        return np.asarray(rho.mat), rho.m, rho.n
    if m is None or n is None:
        raise InvalidInputError("raw matrices need explicit m and n")
    mat = as_matrix(rho)
    if mat.shape != (m * n, m * n):
        raise InvalidInputError(f"matrix shape {mat.shape} does not match m*n = {m * n}")
    return mat, m, n


def _check_unitary(U, d: int, name: str) -> np.ndarray:
    U = as_matrix(U, name)
    if U.shape != (d, d):
        raise InvalidInputError(f"{name} must be {d}x{d}, got {U.shape}")
    if np.max(np.abs(U.conj().T @ U - np.eye(d))) > UNITARY_ATOL:
        raise InvalidInputError(f"{name} is not unitary within {UNITARY_ATOL:g}")
    return U


def local_unitary_transform(e: WeightedEnsemble, U_A, U_B) -> WeightedEnsemble:
    """Apply ``U_A (x) U_B`` to every member: ``A_k -> U_A A_k U_B^T``."""
    U_A = _check_unitary(U_A, e.m, "U_A")
    U_B = _check_unitary(U_B, e.n, "U_B")
    members = [(p, PureState(e.m, e.n, U_A @ s.coeffs @ U_B.T)) for p, s in e.members]
    return WeightedEnsemble(e.m, e.n, tuple(members))


def remix_ensemble(e: WeightedEnsemble, V, drop_below: float = 1e-15) -> WeightedEnsemble:
    """Another decomposition of the same density: ``w_j = sum_k V[j, k] sqrt(p_k) v_k``.

    ``V`` is a ``t' x t`` isometry (``V^dagger V = I``). Members with squared
    norm at or below ``drop_below`` are dropped.
    """
    V = as_matrix(V, "V")
    if V.shape[1] != e.t or V.shape[0] < e.t:
        raise InvalidInputError(f"V must be t' x {e.t} with t' >= {e.t}, got {V.shape}")
    if np.max(np.abs(V.conj().T @ V - np.eye(e.t))) > UNITARY_ATOL:
        raise InvalidInputError("V is not an isometry within 1e-10")
    scaled = e.coefficient_stack() * np.sqrt(e.weights)[:, None, None]
    W = np.einsum("jk,kab->jab", V, scaled)
    members = []
    for Wj in W:
        q = float(np.vdot(Wj, Wj).real)
        if q > drop_below:
            members.append((q, PureState(e.m, e.n, Wj / np.sqrt(q))))
    return WeightedEnsemble(e.m, e.n, tuple(members))


def partial_transpose_min_eigenvalue(rho, m: Optional[int] = None, n: Optional[int] = None) -> float:
    """Smallest eigenvalue of the partial transpose; negative means NPT, hence entangled."""
    pt = partial_transpose(rho, m, n)
    return float(np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))[0])
