"""Built-in states with known Schmidt numbers, and a self-check over them.

Kets below are written with 1-based labels ``|i j>`` exactly as they are
usually tabulated; :func:`_ket` converts to 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, analyze, assemble_T2, locc_conversion_excluded
from .linalg import DEFAULT_TOL, ToleranceConfig, numerical_rank
from .states import PureState, WeightedEnsemble


def _ket(m: int, n: int, labels, amplitude: float) -> PureState:
    return PureState.from_terms(m, n, [(i - 1, j - 1) for i, j in labels], amplitude)


def _diag(d: int, labels, amplitude: float) -> PureState:
    return _ket(d, d, [(i, i) for i in labels], amplitude)


def block_diagonal_rho1() -> WeightedEnsemble:
    """Four block-supported states on 12 (x) 12, Schmidt ranks 3, 2, 3, 2; Schmidt number 3."""
    s3, s2 = 1 / np.sqrt(3), 1 / np.sqrt(2)
    return WeightedEnsemble.uniform([
        _diag(12, [1, 2, 3], s3),
        _diag(12, [4, 5], s2),
        _diag(12, [7, 8, 9], s3),
        _diag(12, [11, 12], s2),
    ])


def block_diagonal_rho2() -> WeightedEnsemble:
    """Three block-supported states on 12 (x) 12, Schmidt ranks 4, 3, 3; Schmidt number 4."""
    s3 = 1 / np.sqrt(3)
    return WeightedEnsemble.uniform([
        _diag(12, [1, 2, 3, 4], 0.5),
        _diag(12, [5, 6, 7], s3),
        _diag(12, [10, 11, 12], s3),
    ])


def full_rank_T2_state(weights=(1 / 3, 1 / 3, 1 / 3)) -> WeightedEnsemble:
    """Rank-3 state on 3 (x) 9 whose stacked 9 x 9 T2 is invertible; Schmidt number 3."""
    phi1 = _ket(3, 9, [(1, 1), (1, 2), (1, 3), (1, 5), (1, 7), (2, 2), (2, 8), (3, 3), (3, 9)], 1 / 3)
    phi2 = _ket(3, 9, [(1, 4), (1, 5), (1, 6), (2, 5), (2, 7), (3, 6), (3, 9)], 1 / np.sqrt(7))
    phi3 = _ket(3, 9, [(1, 7), (1, 9), (2, 8), (3, 9)], 0.5)
    return WeightedEnsemble.from_members(list(zip(weights, [phi1, phi2, phi3])))


def sliding_triples(m: int = 5) -> WeightedEnsemble:
    """Uniform mixture of ``(|ii> + |i+1,i+1> + |i+2,i+2>)/sqrt(3)``, i = 1..m-2; Schmidt number <= 3."""
    s3 = 1 / np.sqrt(3)
    return WeightedEnsemble.uniform([_diag(m, [i, i + 1, i + 2], s3) for i in range(1, m - 1)])


def half_maximally_entangled(n: int = 8) -> WeightedEnsemble:
    """Equal mixture of the maximally entangled state on n (x) n and the product ``|1 2>``."""
    psi1 = _diag(n, range(1, n + 1), 1 / np.sqrt(n))
    psi2 = _ket(n, n, [(1, 2)], 1.0)
    return WeightedEnsemble.uniform([psi1, psi2])


@dataclass(frozen=True)
class CheckRow:
    name: str
    expected: str
    observed: str
    passed: bool


def _schmidt_number_row(name: str, report: BoundReport, expected: int) -> CheckRow:
    ok = report.exact and report.lower_bound == expected
    observed = f"lower={report.lower_bound} upper={report.upper_bound} exact={report.exact}"
    return CheckRow(name, f"Schmidt number {expected} (exact)", observed, ok)


def run_checks(tol: ToleranceConfig = DEFAULT_TOL) -> list[CheckRow]:
    """Rebuild every built-in state and compare its bounds with the known answers."""
    rows = [
        _schmidt_number_row("rho1 (12x12, four block states)", analyze(block_diagonal_rho1(), tol), 3),
        _schmidt_number_row("rho2 (12x12, three block states)", analyze(block_diagonal_rho2(), tol), 4),
    ]
    e2 = full_rank_T2_state()
    rep2 = analyze(e2, tol)
    row = _schmidt_number_row("3x9 state with full-rank T2", rep2, 3)
    rank_T2 = numerical_rank(assemble_T2(e2), tol)
    rows.append(CheckRow(row.name, row.expected + ", rank T2 = 9",
                         row.observed + f" rank_T2={rank_T2}", row.passed and rank_T2 == 9))
    src, tgt = analyze(sliding_triples(5), tol), analyze(half_maximally_entangled(8), tol)
    excluded = locc_conversion_excluded(src, tgt)
    rows.append(CheckRow(
        "LOCC 5x5 triples -> 8x8 mixture",
        "excluded",
        f"source upper={src.upper_bound} target lower={tgt.lower_bound} "
        f"{'excluded' if excluded else 'undecided'}",
        excluded,
    ))
    return rows
