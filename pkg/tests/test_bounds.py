import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import exact_rank, support_matrix
from schmidtnum.bounds import (
    BoundReport,
    analyze,
    assemble_T1,
    assemble_T2,
    hermitian_form_matrix,
    locc_conversion_excluded,
    oracle_LA_from_density,
    oracle_LB_from_density,
    schmidt_number_lower_bound,
    schmidt_number_upper_bound,
    subspace_LA,
    subspace_LB,
)
from schmidtnum.errors import InvalidInputError, NotDecidableError
from schmidtnum.generic import haar_unitary, make_rng, random_ensemble, random_isometry, random_pure_state
from schmidtnum.linalg import numerical_rank, same_subspace
from schmidtnum.schmidt import schmidt_rank
from schmidtnum.states import (
    PureState,
    WeightedEnsemble,
    ensemble_to_density,
    local_unitary_transform,
    remix_ensemble,
    spectral_ensemble,
)
from schmidtnum.worked_examples import (
    block_diagonal_rho1,
    block_diagonal_rho2,
    full_rank_T2_state,
    half_maximally_entangled,
    sliding_triples,
)

KET00 = PureState(2, 2, [[1, 0], [0, 0]])
BELL = PureState(2, 2, np.eye(2) / np.sqrt(2))


def random_case(seed):
    """Ensemble with random dims <= 4, t <= 6 and random local supports."""
    rng = make_rng(seed)
    m, n = (int(x) for x in rng.integers(1, 5, size=2))
    t = int(rng.integers(1, 7))
    kA, kB = int(rng.integers(1, m + 1)), int(rng.integers(1, n + 1))
    return random_ensemble(m, n, t, rng, support_A=kA, support_B=kB)


seeds = st.integers(0, 2**32)


# exact ranks of the built-in T matrices, by rational row reduction of their supports
def _diag_labels(offset_blocks):
    return [(i, i) for block in offset_blocks for i in block]


def test_block_state_T1_ranks_match_row_reduction():
    rows1 = support_matrix(12, 12, _diag_labels([[1, 2, 3], [4, 5], [7, 8, 9], [11, 12]]))
    rows2 = support_matrix(12, 12, _diag_labels([[1, 2, 3, 4], [5, 6, 7], [10, 11, 12]]))
    # T1 columns repeat these supports per member; rank = rank of the union of row supports
    assert exact_rank(rows1) == 10
    assert exact_rank(rows2) == 10
    assert numerical_rank(assemble_T1(block_diagonal_rho1())) == 10
    assert numerical_rank(assemble_T1(block_diagonal_rho2())) == 10


def test_three_by_nine_T2_rank_matches_row_reduction():
    labels = [
        [(1, 1), (1, 2), (1, 3), (1, 5), (1, 7), (2, 2), (2, 8), (3, 3), (3, 9)],
        [(1, 4), (1, 5), (1, 6), (2, 5), (2, 7), (3, 6), (3, 9)],
        [(1, 7), (1, 9), (2, 8), (3, 9)],
    ]
    # each member's block is a 0/1 pattern times one positive scalar, which leaves rank unchanged
    stacked = [row for lab in labels for row in support_matrix(3, 9, lab)]
    assert exact_rank(stacked) == 9
    T2 = assemble_T2(full_rank_T2_state())
    assert T2.shape == (9, 9)
    assert numerical_rank(T2) == 9


def test_assembly_layout():
    e = random_ensemble(2, 3, 2, 1)
    T1, T2 = assemble_T1(e), assemble_T2(e)
    assert T1.shape == (2, 6) and T2.shape == (4, 3)
    A, B = (s.coeffs for s in e.states)
    np.testing.assert_array_equal(T1, np.hstack([A, B]))
    np.testing.assert_array_equal(T2, np.vstack([A, B]))
    single = WeightedEnsemble.pure(e.states[0])
    np.testing.assert_array_equal(assemble_T1(single), A)
    np.testing.assert_array_equal(assemble_T2(single), A)
    dup = WeightedEnsemble.uniform([e.states[0], e.states[0]])
    assert numerical_rank(assemble_T1(dup)) == numerical_rank(assemble_T2(dup)) == numerical_rank(A)
    assert assemble_T1(block_diagonal_rho1()).shape == (12, 48)


def test_subspace_examples():
    LA = subspace_LA(WeightedEnsemble.pure(KET00))
    assert LA.dim == 1
    assert abs(abs(LA.basis[1, 0]) - 1) < 1e-12
    assert subspace_LA(WeightedEnsemble.pure(BELL)).dim == 0
    assert subspace_LA(block_diagonal_rho1()).dim == 2
    assert subspace_LB(WeightedEnsemble.pure(KET00)).dim == 1
    assert subspace_LB(full_rank_T2_state()).dim == 0


def test_hermitian_form_examples():
    rho = ensemble_to_density(WeightedEnsemble.pure(KET00))
    np.testing.assert_array_equal(hermitian_form_matrix(rho, [0, 1]), np.zeros((2, 2)))
    np.testing.assert_array_equal(hermitian_form_matrix(rho, [1, 0]), [[1, 0], [0, 0]])
    with pytest.raises(InvalidInputError):
        hermitian_form_matrix(rho, [1, 0, 0])


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hermitian_form_is_the_expectation_form(seed):
    e = random_case(seed)
    rho = ensemble_to_density(e)
    rng = make_rng(seed + 1)
    a = rng.standard_normal(e.m) + 1j * rng.standard_normal(e.m)
    a /= np.linalg.norm(a)
    b = rng.standard_normal(e.n) + 1j * rng.standard_normal(e.n)
    M = hermitian_form_matrix(rho, a)
    direct = np.vdot(np.kron(a, b), rho.mat @ np.kron(a, b))
    assert np.vdot(b, M @ b) == pytest.approx(direct, abs=1e-12)
    np.testing.assert_allclose(M, M.conj().T, atol=1e-12)
    assert np.linalg.eigvalsh(M)[0] >= -1e-10


def test_oracle_examples():
    rho = ensemble_to_density(WeightedEnsemble.pure(PureState(3, 2, [[1, 0], [0, 0], [0, 0]])))
    assert oracle_LA_from_density(rho).dim == 2
    e = block_diagonal_rho1()
    oracle = oracle_LA_from_density(ensemble_to_density(e))
    assert oracle.dim == 2
    assert same_subspace(oracle.basis, subspace_LA(e).basis)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_oracles_agree_with_ensemble_subspaces(seed):
    e = random_case(seed)
    rho = ensemble_to_density(e)
    LA, LB = subspace_LA(e), subspace_LB(e)
    assert same_subspace(oracle_LA_from_density(rho).basis, LA.basis)
    assert same_subspace(oracle_LB_from_density(rho).basis, LB.basis)
    for a in LA.vectors():
        assert np.linalg.norm(hermitian_form_matrix(rho, a)) <= 1e-8
        for b in np.eye(e.n):
            assert np.linalg.norm(rho.mat @ np.kron(a, b)) <= 1e-8
    for b in LB.vectors():
        for a in np.eye(e.m):
            assert np.linalg.norm(rho.mat @ np.kron(a, b)) <= 1e-8


def test_oracle_random_rank_two_three_by_three():
    e = random_ensemble(3, 3, 2, 42, support_A=2)
    assert same_subspace(oracle_LA_from_density(ensemble_to_density(e)).basis, subspace_LA(e).basis)


def test_bound_examples():
    assert schmidt_number_lower_bound(block_diagonal_rho1()) == 3
    assert schmidt_number_lower_bound(block_diagonal_rho2()) == 4
    assert schmidt_number_lower_bound(full_rank_T2_state()) == 3
    products = WeightedEnsemble.uniform([KET00, PureState(2, 2, [[0, 0], [0, 1]]), PureState(2, 2, [[0, 1], [0, 0]])])
    assert schmidt_number_lower_bound(products) == 1
    assert schmidt_number_upper_bound(block_diagonal_rho1()) == 3
    assert schmidt_number_upper_bound(block_diagonal_rho2()) == 4
    assert schmidt_number_upper_bound(WeightedEnsemble.pure(KET00)) == 1


@pytest.mark.parametrize(
    "factory, expected",
    [
        (block_diagonal_rho1, dict(r=4, rank_T1=10, lower_bound=3, upper_bound=3, exact=True)),
        (block_diagonal_rho2, dict(r=3, rank_T1=10, lower_bound=4, upper_bound=4, exact=True)),
        (full_rank_T2_state, dict(r=3, rank_T2=9, lower_bound=3, upper_bound=3, exact=True)),
    ],
)
def test_analyze_examples(factory, expected):
    rep = analyze(factory())
    for key, value in expected.items():
        assert getattr(rep, key) == value
    assert rep.upper_source == "ensemble"


def test_analyze_density_uses_spectral_members():
    rho = ensemble_to_density(full_rank_T2_state())
    rep = analyze(rho)
    assert rep.upper_source == "spectral"
    assert rep.lower_bound == 3 and rep.r == 3 and rep.upper_bound == 3 and rep.exact


def test_report_invariants_enforced():
    with pytest.raises(InvalidInputError):
        BoundReport(m=2, n=2, r=1, t=1, rank_T1=1, rank_T2=1, dim_LA=0, dim_LB=1,
                    lower_bound=1, upper_bound=1, exact=True)
    with pytest.raises(InvalidInputError):
        BoundReport(m=2, n=2, r=1, t=1, rank_T1=2, rank_T2=2, dim_LA=0, dim_LB=0,
                    lower_bound=2, upper_bound=2, exact=False)


def test_locc_examples():
    src, tgt = analyze(sliding_triples(5)), analyze(half_maximally_entangled(8))
    assert (src.upper_bound, tgt.lower_bound) == (3, 4)
    assert locc_conversion_excluded(src, tgt)
    assert not locc_conversion_excluded(src, src)
    assert not locc_conversion_excluded(analyze(block_diagonal_rho2()), analyze(block_diagonal_rho1()))
    bare = BoundReport(m=2, n=2, r=1, t=1, rank_T1=1, rank_T2=1, dim_LA=1, dim_LB=1,
                       lower_bound=1, upper_bound=None, exact=False)
    with pytest.raises(NotDecidableError):
        locc_conversion_excluded(bare, tgt)


@pytest.mark.parametrize("m", [5, 6, 9])
def test_sliding_triples_upper_bound_three(m):
    assert analyze(sliding_triples(m)).upper_bound == 3


@pytest.mark.parametrize("n", [8, 9, 12])
def test_half_maximally_entangled_lower_bound(n):
    assert analyze(half_maximally_entangled(n)).lower_bound >= -(-n // 2) >= 4


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5), seeds)
def test_pure_state_reduction(m, n, k, seed):
    psi = random_pure_state(m, n, seed, schmidt_rank=min(k, m, n))
    rep = analyze(WeightedEnsemble.pure(psi))
    sr = schmidt_rank(psi)
    assert rep.rank_T1 == rep.rank_T2 == sr
    assert m - rep.dim_LA == n - rep.dim_LB == sr
    assert rep.lower_bound == rep.upper_bound == sr and rep.exact


def test_sandwich_over_many_ensembles():
    for seed in range(1000):
        rep = analyze(random_case(seed))
        assert 1 <= rep.lower_bound <= rep.upper_bound <= min(rep.m, rep.n)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 3))
def test_decomposition_independence(seed, extra):
    e = random_case(seed)
    V = random_isometry(e.t + extra, e.t, seed + 1)
    f = remix_ensemble(e, V)
    for sub in (subspace_LA, subspace_LB):
        before, after = sub(e), sub(f)
        assert before.dim == after.dim
        assert same_subspace(before.basis, after.basis)
    assert schmidt_number_lower_bound(e) == schmidt_number_lower_bound(f)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_local_unitary_invariance(seed):
    e = random_case(seed)
    U_A, U_B = haar_unitary(e.m, seed + 1), haar_unitary(e.n, seed + 2)
    f = local_unitary_transform(e, U_A, U_B)
    before, after = analyze(e), analyze(f)
    for key in ("dim_LA", "dim_LB", "lower_bound", "upper_bound"):
        assert getattr(before, key) == getattr(after, key)
    # kets map forward: a in L_A(rho) iff U_A a in L_A(U rho U^dagger)
    assert same_subspace(subspace_LA(f).basis, U_A @ subspace_LA(e).basis)
    assert same_subspace(subspace_LB(f).basis, U_B @ subspace_LB(e).basis)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(1, 5), seeds)
def test_rows_spanning_corollary(m, r, seed):
    r = min(r, m - 1)
    e = random_ensemble(m, m, r, seed)
    assert numerical_rank(assemble_T2(e)) == m  # stacked rows span C^m
    assert analyze(e).r == r
    assert schmidt_number_lower_bound(e) >= -(-m // r)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 3), st.integers(1, 4), seeds)
def test_full_schmidt_rank_member_corollary(m, dn, r, seed):
    n = m + dn
    r = min(r, m - 1)
    lead = random_pure_state(m, n, seed)
    assert schmidt_rank(lead) == m
    others = [random_pure_state(m, n, seed + 1 + k, schmidt_rank=1) for k in range(r - 1)]
    e = WeightedEnsemble.uniform([lead, *others])
    assert analyze(e).r == r
    assert schmidt_number_lower_bound(e) >= -(-m // r)


def test_overcomplete_ensemble_uses_true_rank():
    # t > r: three members in a two-dimensional span
    e = random_ensemble(3, 3, 2, 8)
    f = remix_ensemble(e, random_isometry(3, 2, 9))
    rep = analyze(f)
    assert rep.t == 3 and rep.r == 2
    assert rep.lower_bound == analyze(e).lower_bound


def test_spectral_and_given_decompositions_agree_on_lower_bound():
    for seed in range(30):
        e = random_case(seed)
        assert analyze(spectral_ensemble(ensemble_to_density(e))).lower_bound == analyze(e).lower_bound
