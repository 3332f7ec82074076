"""Rank bounds on the Schmidt number of a bipartite mixed state.

For an ensemble with coefficient matrices ``A_1, ..., A_t`` define

* ``T1 = [A_1 | A_2 | ... | A_t]`` (``m x tn``), and
* ``T2 = [A_1; A_2; ...; A_t]`` (``tm x n``).

The local "unentangled" subspaces are

* ``L_A = {a : <a (x) b| rho |a (x) b> = 0 for every b}``, of dimension ``m - rank T1``,
* ``L_B`` likewise on the B side, of dimension ``n - rank T2``.

If ``rho`` has rank ``r`` then its Schmidt number ``k`` obeys
``k >= rank(T1) / r`` and ``k >= rank(T2) / r``. Any decomposition gives the
upper bound ``k <= max_k SchmidtRank(v_k)``, and when the two meet the Schmidt
number is known exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import InvalidInputError, NotDecidableError
from .linalg import DEFAULT_TOL, ToleranceConfig, left_null_space, null_space, numerical_rank
from .schmidt import schmidt_rank
from .states import DensityMatrix, WeightedEnsemble, ensemble_rank, spectral_ensemble


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal basis (columns of ``basis``) of a subspace of C^ambient_dim."""

    ambient_dim: int
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])

    def vectors(self) -> list[np.ndarray]:
        return [self.basis[:, k] for k in range(self.dim)]


def assemble_T1(e: WeightedEnsemble) -> np.ndarray:
    return np.concatenate([s.coeffs for s in e.states], axis=1)


def assemble_T2(e: WeightedEnsemble) -> np.ndarray:
    return np.concatenate([s.coeffs for s in e.states], axis=0)


def subspace_LA(e: WeightedEnsemble, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """``L_A`` as a set of kets.

    ``a (x) b`` is orthogonal to every member for all ``b`` exactly when
    ``conj(a)^T T1 = 0``, so the kets are the conjugated left null vectors of T1.
    """
    Y = left_null_space(assemble_T1(e), tol)
    return SubspaceBasis(e.m, Y.T.conj())


def subspace_LB(e: WeightedEnsemble, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """``L_B`` as a set of kets: conjugates of the null vectors of T2."""
    X = null_space(assemble_T2(e), tol)
    return SubspaceBasis(e.n, X.conj())


def hermitian_form_matrix(rho: DensityMatrix, a) -> np.ndarray:
    """Matrix of the form ``b -> <a (x) b| rho |a (x) b>`` on C^n.

    Equals ``sum_ij conj(a_i) a_j rho_ij`` over the ``n x n`` blocks of rho.
    """
    a = np.asarray(a, dtype=complex).ravel()
    if a.size != rho.m:
        raise InvalidInputError(f"vector has length {a.size}, expected m = {rho.m}")
    if abs(np.linalg.norm(a) - 1.0) > 1e-10:
        raise InvalidInputError("vector must be normalized")
    R = np.asarray(rho.mat).reshape(rho.m, rho.n, rho.m, rho.n)
    return np.einsum("i,ikjl,j->kl", a.conj(), R, a)


def oracle_LA_from_density(rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """``L_A`` straight from the density matrix, without any decomposition.

    ``a`` lies in ``L_A`` iff ``rho (a (x) e_j) = 0`` for every basis vector
    ``e_j`` of B. Column ``i*n + j`` of rho is ``rho (e_i (x) e_j)``, so the
    map ``a -> rho (a (x) e_j)`` is ``rho[:, j::n]``; stacking over ``j`` gives
    an ``(n*mn) x m`` system whose null space is ``L_A``.
    """
    mat = np.asarray(rho.mat)
    system = np.vstack([mat[:, j::rho.n] for j in range(rho.n)])
    return SubspaceBasis(rho.m, null_space(system, tol))


def oracle_LB_from_density(rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """B-side counterpart of :func:`oracle_LA_from_density`."""
    mat = np.asarray(rho.mat)
    n = rho.n
    system = np.vstack([mat[:, i * n:(i + 1) * n] for i in range(rho.m)])
    return SubspaceBasis(n, null_space(system, tol))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def schmidt_number_lower_bound(e: WeightedEnsemble, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    r = ensemble_rank(e, tol)
    rank_T1 = numerical_rank(assemble_T1(e), tol)
    rank_T2 = numerical_rank(assemble_T2(e), tol)
    return max(1, _ceil_div(rank_T1, r), _ceil_div(rank_T2, r))


def schmidt_number_upper_bound(e: WeightedEnsemble, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    return max(schmidt_rank(s, tol) for s in e.states)


@dataclass(frozen=True)
class BoundReport:
    """Everything the rank criterion says about one state.

    ``upper_bound`` is relative to the decomposition analysed; ``upper_source``
    records whether that was the caller's ensemble or the spectral one.
    """

    m: int
    n: int
    r: int
    t: int
    rank_T1: int
    rank_T2: int
    dim_LA: int
    dim_LB: int
    lower_bound: int
    upper_bound: Optional[int]
    exact: bool
    tolerance: ToleranceConfig = DEFAULT_TOL
    member_schmidt_ranks: tuple[int, ...] = field(default_factory=tuple)
    upper_source: Optional[str] = None

    def __post_init__(self):
        if self.dim_LA != self.m - self.rank_T1 or self.dim_LB != self.n - self.rank_T2:
            raise InvalidInputError("subspace dimensions inconsistent with T1/T2 ranks")
        if not 1 <= self.lower_bound <= min(self.m, self.n):
            raise InvalidInputError(f"lower bound {self.lower_bound} outside [1, min(m, n)]")
        if self.upper_bound is not None and self.lower_bound > self.upper_bound:
            raise InvalidInputError("lower bound exceeds upper bound")
        if self.exact != (self.upper_bound is not None and self.lower_bound == self.upper_bound):
            raise InvalidInputError("exact flag must equal (lower_bound == upper_bound)")


def analyze(
    state: Union[WeightedEnsemble, DensityMatrix], tol: ToleranceConfig = DEFAULT_TOL
) -> BoundReport:
    """Lower and upper Schmidt-number bounds for an ensemble or a density matrix.

    A density matrix is first split into its spectral ensemble, which then
    also supplies the upper bound.
    """
    if isinstance(state, DensityMatrix):
        e = spectral_ensemble(state, tol)
        source = "spectral"
    else:
        e = state
        source = "ensemble"
    r = ensemble_rank(e, tol)
    rank_T1 = numerical_rank(assemble_T1(e), tol)
    rank_T2 = numerical_rank(assemble_T2(e), tol)
    lower = max(1, _ceil_div(rank_T1, r), _ceil_div(rank_T2, r))
    member_ranks = tuple(schmidt_rank(s, tol) for s in e.states)
    upper = max(member_ranks)
    return BoundReport(
        m=e.m,
        n=e.n,
        r=r,
        t=e.t,
        rank_T1=rank_T1,
        rank_T2=rank_T2,
        dim_LA=e.m - rank_T1,
        dim_LB=e.n - rank_T2,
        lower_bound=lower,
        upper_bound=upper,
        exact=lower == upper,
        tolerance=tol,
        member_schmidt_ranks=member_ranks,
        upper_source=source,
    )


def locc_conversion_excluded(source: BoundReport, target: BoundReport) -> bool:
    """True when no LOCC protocol can turn ``source`` into ``target``.

    Schmidt number cannot grow under LOCC, so ``source.upper < target.lower``
    rules the conversion out. ``False`` only means this criterion is silent.
    """
    if source.upper_bound is None:
        raise NotDecidableError("source report carries no upper bound")
    return source.upper_bound < target.lower_bound
