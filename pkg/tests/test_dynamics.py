import numpy as np
import pytest

from upb3q.dynamics import (
    COS_SET,
    SIN_SET,
    TAU_P,
    BadAxis,
    HamiltonianSpec,
    NoMatch,
    adjoint_matrix,
    byproduct_preparation,
    fixed_point_generator,
    flow,
    one_spin_generators,
    orbit,
    orbit_generator,
    orbit_swap_report,
    prepare_upb,
    rodrigues_flow,
    stage1_generator,
    stage2_generator,
    stationarity,
)
from upb3q.pauli import SQRT2, from_coherence, lambda_tensor, to_coherence
from upb3q.states import X, family_mixture, reflect, rho_sep, rho_upb

SQRT3 = np.sqrt(3.0)
SQRT6 = np.sqrt(6.0)


def test_period_constant():
    assert abs(TAU_P - 2 * SQRT2 * np.pi) < 1e-15


def test_hamiltonian_spec_matrix():
    h = HamiltonianSpec.from_labels("333")
    assert np.abs(h.matrix() - lambda_tensor(3, 3, 3)).max() == 0.0
    h2 = HamiltonianSpec.from_labels("011", "033", coefficients=[2.0, -1.0])
    expect = 2 * lambda_tensor(0, 1, 1) - lambda_tensor(0, 3, 3)
    assert np.abs(h2.matrix() - expect).max() < 1e-15
    assert stage2_generator().matrix().shape == (8, 8)


def test_flow_accepts_spec_or_matrix():
    rho = rho_sep()
    via_spec = flow(stage1_generator(), 0.3, rho)
    via_matrix = flow(lambda_tensor(3, 3, 3), 0.3, rho)
    assert np.abs(via_spec - via_matrix).max() < 1e-14


def test_adjoint_matrix_is_real_antisymmetric():
    for axis in (333, 222):
        r = adjoint_matrix(axis)
        assert r.shape == (64, 64)
        assert np.abs(r + r.T).max() < 1e-14
    with pytest.raises(BadAxis):
        adjoint_matrix(111)


def test_adjoint_matrix_matches_commutator():
    # column a of R must hold the components of -i[Lambda_axis, Lambda_a]
    rng = np.random.default_rng(3)
    for axis, jkl in ((333, (3, 3, 3)), (222, (2, 2, 2))):
        r = adjoint_matrix(axis)
        h = lambda_tensor(*jkl)
        for a in rng.choice(64, size=12, replace=False):
            from upb3q.pauli import LAMBDA_BASIS

            comm = -1j * (h @ LAMBDA_BASIS[a] - LAMBDA_BASIS[a] @ h)
            col = np.einsum("bij,ji->b", LAMBDA_BASIS, comm).real
            assert np.abs(r[:, a] - col).max() < 1e-13


@pytest.mark.parametrize("axis,label", [(333, "333"), (222, "222")])
def test_rodrigues_flow_matches_conjugation(axis, label):
    tens = to_coherence(rho_upb())
    h = HamiltonianSpec.from_labels(label)
    worst = 0.0
    for t in np.linspace(0.0, TAU_P, 9):
        direct = from_coherence(rodrigues_flow(axis, t, tens))
        oracle = flow(h, t, rho_upb())
        worst = max(worst, np.abs(direct - oracle).max())
    assert worst < 1e-12


def test_rodrigues_flow_period_and_identity():
    tens = to_coherence(rho_sep())
    zero = rodrigues_flow(333, 0.0, tens)
    assert np.abs(zero.components - tens.components).max() == 0.0
    again = rodrigues_flow(222, TAU_P, tens)
    assert np.abs(again.components - tens.components).max() < 1e-12


def test_preparation_standard_checkpoints():
    trace = prepare_upb("standard")
    assert trace.order == "standard"
    assert np.abs(trace.checkpoints["initial"] - rho_sep()).max() == 0.0
    assert np.abs(trace.checkpoints["intermediate"] - family_mixture("mu")).max() < 1e-12
    assert np.abs(trace.checkpoints["final"] - rho_upb()).max() < 1e-12
    # 9 interior samples per stage, each scored on all three cuts
    assert len(trace.interior) == 18
    assert {s.stage for s in trace.interior} == {1, 2}
    for s in trace.interior:
        assert len(s.min_pt_eigs) == 3
        assert max(s.min_pt_eigs) < -1e-6


def test_preparation_swapped_reflects_intermediate():
    std = prepare_upb("standard", interior_samples=2)
    swp = prepare_upb("swapped", interior_samples=2)
    assert np.abs(swp.checkpoints["final"] - rho_upb()).max() < 1e-12
    refl = from_coherence(reflect(to_coherence(std.checkpoints["intermediate"])))
    assert np.abs(swp.checkpoints["intermediate"] - refl).max() < 1e-12
    assert [s.stage for s in swp.interior] == [1, 1, 2, 2]


def test_prepare_upb_argument_validation():
    with pytest.raises(ValueError):
        prepare_upb("sideways")
    with pytest.raises(ValueError):
        prepare_upb(interior_samples=-1)


def test_orbit_grid_and_invariants():
    samples = orbit(8)
    assert len(samples) == 8
    assert samples[0].t == 0.0
    assert abs(samples[2].t - TAU_P / 4) < 1e-15
    for s in samples:
        assert s.ppt and s.reflected_ppt
        assert s.rank == 4 and s.reflected_rank == 4
    with pytest.raises(ValueError):
        orbit(1)


def test_orbit_three_coherence_law():
    for s in orbit(6):
        c = s.tensor.components
        phase = s.t / SQRT2
        assert np.abs(c[list(SIN_SET)] + X * np.sin(phase)).max() < 1e-12
        assert np.abs(c[list(COS_SET)] + X * np.cos(phase)).max() < 1e-12


def test_orbit_swap_report_values():
    rep = orbit_swap_report()
    assert rep.start_vs_psi < 1e-13
    assert rep.start_reflection_vs_upb < 1e-13
    assert rep.quarter_vs_table < 1e-13
    assert rep.quarter_vs_complement_theta < 1e-13
    assert rep.quarter_reflection_vs_theta < 1e-13
    assert rep.half_vs_phi < 1e-13
    x3 = X**3
    assert all(abs(v + x3) < 1e-15 for v in rep.upb_triple_products_on_start_reflection)
    assert all(abs(v + x3) < 1e-15 for v in rep.oq_triple_products_on_quarter)
    assert rep.oq_triple_counts_on_upb == (2, 2, 2, 2)
    assert rep.upb_triple_counts_on_quarter == (2, 2, 2, 2)


def test_stationarity_of_named_generators():
    rho = rho_upb()
    assert stationarity(fixed_point_generator(), rho) < 1e-12
    assert abs(stationarity(orbit_generator(), rho) - 0.125) < 1e-12
    # the individual single-qubit generators all move the state; the norms
    # are sqrt(3)*x for axes 1 and 3 and sqrt(6)*x for axis 2
    for gen in one_spin_generators():
        (j, k, l), _ = gen.terms[0]
        axis = max(j, k, l)
        expect = (SQRT6 if axis == 2 else SQRT3) * X
        assert abs(stationarity(gen, rho) - expect) < 1e-12


def test_fixed_point_terms_move_individually():
    rho = rho_upb()
    for (j, k, l), _ in fixed_point_generator().terms:
        assert stationarity(lambda_tensor(j, k, l), rho) > 0.1


def test_byproduct_preparation():
    res = byproduct_preparation()
    assert res.distance < 1e-12
    assert abs(res.matched_parameter - 3 * TAU_P / 4) < 1e-9
    assert np.abs(res.state - rho_upb()).max() < 1e-12
    # four signed labels collapse to two distinct evolutions mod the period
    assert len(res.candidates) == 4
    assert len(res.evolutions) == 2
    misses = [d for _, d in res.evolutions if d > 1e-10]
    assert len(misses) == 1 and misses[0] > 0.3


def test_byproduct_no_match_when_tolerance_is_absurd():
    with pytest.raises(NoMatch):
        byproduct_preparation(tol=1e-30)


def test_bloch_rotation_between_psi_and_phi():
    # member-aligned pi rotation about axis 2: (x,y,z) -> (-x,y,-z)
    from upb3q.pauli import bloch_vector
    from upb3q.states import family

    rot = np.diag([-1.0, 1.0, -1.0])
    psi = family("psi").kets
    phi = family("phi").kets
    for p, f in zip(psi, phi):
        for lp, lf in zip(p.locals, f.locals):
            bp = bloch_vector(np.outer(lp, lp.conj()))
            bf = bloch_vector(np.outer(lf, lf.conj()))
            assert np.abs(bf - rot @ bp).max() < 1e-12
