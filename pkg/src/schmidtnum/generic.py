"""Random states and the Monte-Carlo check of the genericity bound.

A generic rank-``r`` state on C^m (x) C^n with ``m <= n`` and ``r < n`` has
Schmidt number at least ``min(ceil(n / r), m)``, because its spectral T2
matrix has full rank ``min(rm, n)`` outside a measure-zero set.

Random streams come from :class:`numpy.random.Philox`, a counter-based bit
generator, seeded with the 64-bit trial seed. Normal and exponential draws
use numpy's ``Generator`` methods, whose streams numpy keeps stable across
1.x/2.x releases for a fixed bit generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .bounds import assemble_T2, schmidt_number_lower_bound
from .errors import InvalidInputError, RegimeError
from .linalg import DEFAULT_TOL, ToleranceConfig, gram_orthonormalize, numerical_rank
from .states import PureState, WeightedEnsemble

RNG_ALGORITHM = "numpy.random.Philox (4x64, 10 rounds)"
WEIGHT_FLOOR = 1e-6
SEED_MOD = 2**64

SeedLike = Union[int, np.random.Generator]


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(int(seed) % SEED_MOD))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian entries, ``E|z|^2 = 1``."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(d: int, seed: SeedLike) -> np.ndarray:
    """Haar-distributed ``d x d`` unitary via QR with the phase correction on R's diagonal."""
    rng = make_rng(seed)
    Q, R = np.linalg.qr(complex_gaussian(rng, (d, d)))
    phases = np.diag(R) / np.abs(np.diag(R))
    return Q * phases


def random_isometry(rows: int, cols: int, seed: SeedLike) -> np.ndarray:
    """``rows x cols`` matrix with orthonormal columns (``rows >= cols``)."""
    if rows < cols:
        raise InvalidInputError("an isometry needs rows >= cols")
    return haar_unitary(rows, seed)[:, :cols]


def random_pure_state(m: int, n: int, seed: SeedLike, schmidt_rank: Optional[int] = None) -> PureState:
    """Gaussian pure state; with ``schmidt_rank`` set, a product of ``m x k`` and ``k x n`` factors."""
    rng = make_rng(seed)
    if schmidt_rank is None:
        A = complex_gaussian(rng, (m, n))
    else:
        if not 1 <= schmidt_rank <= min(m, n):
            raise InvalidInputError(f"Schmidt rank must lie in [1, {min(m, n)}]")
        A = complex_gaussian(rng, (m, schmidt_rank)) @ complex_gaussian(rng, (schmidt_rank, n))
    return PureState(m, n, A / np.linalg.norm(A))


def random_ensemble(
    m: int,
    n: int,
    t: int,
    seed: SeedLike,
    support_A: Optional[int] = None,
    support_B: Optional[int] = None,
) -> WeightedEnsemble:
    """``t`` random members whose coefficients live in random local subspaces.

    Restricting supports to ``support_A <= m`` and ``support_B <= n``
    dimensional subspaces makes ``L_A`` and ``L_B`` nontrivial.
    """
    rng = make_rng(seed)
    kA = m if support_A is None else support_A
    kB = n if support_B is None else support_B
    PA = haar_unitary(m, rng)[:, :kA]
    PB = haar_unitary(n, rng)[:, :kB]
    weights = np.maximum(rng.exponential(size=t), WEIGHT_FLOOR)
    weights /= weights.sum()
    members = []
    for p in weights:
        A = PA @ complex_gaussian(rng, (kA, kB)) @ PB.T
        members.append((float(p), PureState(m, n, A / np.linalg.norm(A))))
    return WeightedEnsemble(m, n, tuple(members))


def sample_generic_state(m: int, n: int, r: int, seed: SeedLike) -> WeightedEnsemble:
    """Rank-``r`` state in spectral form: ``r`` orthonormalized Gaussian vectors, positive weights."""
    if not 1 <= r <= m * n:
        raise InvalidInputError(f"rank r = {r} must lie in [1, {m * n}]")
    rng = make_rng(seed)
    Q = gram_orthonormalize(complex_gaussian(rng, (r, m * n)))
    if Q.shape[1] != r:
        raise InvalidInputError("Gaussian draw was rank deficient")
    weights = np.maximum(rng.exponential(size=r), WEIGHT_FLOOR)
    weights /= weights.sum()
    members = tuple((float(p), PureState.from_vector(Q[:, k], m, n)) for k, p in enumerate(weights))
    return WeightedEnsemble(m, n, members)


def check_regime(m: int, n: int, r: int) -> None:
    if m < 1 or r < 1:
        raise RegimeError("m and r must be positive")
    if m > n:
        raise RegimeError(f"need m <= n (got m={m}, n={n}); swap the parties")
    if r >= n:
        raise RegimeError(f"need r < n (got r={r}, n={n})")


def theorem2_bound(m: int, n: int, r: int) -> int:
    """The generic lower bound ``min(ceil(n / r), m)``."""
    return min(-(-n // r), m)


@dataclass(frozen=True)
class TrialOutcome:
    seed: int
    bound: int
    rank_T2: int
    passed: bool


def _run_trial(m, n, r, seed, tol) -> TrialOutcome:
    e = sample_generic_state(m, n, r, seed)
    bound = schmidt_number_lower_bound(e, tol)
    rank_T2 = numerical_rank(assemble_T2(e), tol)
    return TrialOutcome(seed, bound, rank_T2, bound >= theorem2_bound(m, n, r))


def theorem2_trial(m: int, n: int, r: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[int, bool]:
    check_regime(m, n, r)
    out = _run_trial(m, n, r, seed, tol)
    return out.bound, out.passed


@dataclass(frozen=True)
class SamplerConfig:
    m: int
    n: int
    r: int
    trials: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidInputError("trials must be at least 1")
        if not 0 <= self.seed < SEED_MOD:
            raise InvalidInputError("seed must be an unsigned 64-bit integer")
        check_regime(self.m, self.n, self.r)

    def seeds(self) -> list[int]:
        return [(self.seed + k) % SEED_MOD for k in range(self.trials)]


@dataclass(frozen=True)
class TrialSummary:
    config: SamplerConfig
    successes: int
    failures: tuple[int, ...]
    min_observed_bound: int
    full_rank_fraction: float
    required_bound: int
    bound_quotient: float
    tolerance: ToleranceConfig = DEFAULT_TOL
    rng_algorithm: str = RNG_ALGORITHM
    outcomes: tuple[TrialOutcome, ...] = field(default=(), repr=False, compare=False)

    @property
    def trials(self) -> int:
        return self.successes + len(self.failures)


def monte_carlo_theorem2(config: SamplerConfig, tol: ToleranceConfig = DEFAULT_TOL) -> TrialSummary:
    """Sample ``config.trials`` generic states with seeds ``seed, seed+1, ...``.

    Counts trials meeting ``min(ceil(n/r), m)`` and the fraction whose T2
    reached full rank ``min(rm, n)``. Trials are independent given their
    seeds; the summary is an order-free reduction.
    """
    m, n, r = config.m, config.n, config.r
    outcomes = tuple(_run_trial(m, n, r, s, tol) for s in config.seeds())
    full = min(r * m, n)
    return TrialSummary(
        config=config,
        successes=sum(o.passed for o in outcomes),
        failures=tuple(sorted(o.seed for o in outcomes if not o.passed)),
        min_observed_bound=min(o.bound for o in outcomes),
        full_rank_fraction=sum(o.rank_T2 == full for o in outcomes) / len(outcomes),
        required_bound=theorem2_bound(m, n, r),
        bound_quotient=n / r,
        tolerance=tol,
        outcomes=outcomes,
    )
