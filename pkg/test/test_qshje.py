import numpy as np
import pytest

from qfound.core.errors import DegeneratePair, InvalidState, NonMonotoneTime
from qfound.qshje import (ACTION_COLUMNS, ReducedAction, Trajectory, action_table, bipolar_reconstruct,
                          classical_limit_scan, floyd_trajectory, phase_consistency_deviation, qshje_residual,
                          quantum_potential, reconstruct_w, reduced_action_from_pair, trajectory_rows)
from qfound.schrodinger1d import Potential, SolutionPair, Wavefunction, solution_pair
from qfound.schwarzian import RealGrid

HARMONIC = Potential.harmonic()
FREE = Potential.free()


@pytest.fixture(scope='module', params=[0.5, 0.7, 2.5])
def harmonic_pair(request):
    return solution_pair(HARMONIC, request.param, RealGrid(-4.0, 4.0, 4001))


def closed_form_free_pair(grid: RealGrid, k: float) -> SolutionPair:
    q, energy = grid.points, k * k / 2
    return SolutionPair(Wavefunction(grid, np.cos(k * q), energy), Wavefunction(grid, np.sin(k * q), energy),
                        k, FREE, u_prime=-k * np.sin(k * q), v_prime=k * np.cos(k * q))


def test_qshje_holds_for_harmonic_pairs(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    assert qshje_residual(S, HARMONIC) < 1e-8


def test_momentum_is_positive_and_matches_the_action(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    assert np.all(S.S0_prime > 0)
    middle = S.grid.n_points // 2
    assert S.S0[middle] == pytest.approx(0.0, abs=1e-12)

    gradient = np.gradient(S.S0, S.grid.spacing)[1:-1]
    np.testing.assert_allclose(gradient, S.S0_prime[1:-1], rtol=1e-4, atol=1e-10)


def test_momentum_is_bounded_below_by_the_largest_amplitude(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    rho2 = harmonic_pair.u.values**2 + harmonic_pair.v.values**2
    assert np.min(S.S0_prime) >= S.hbar * S.wronskian / rho2.max() * (1 - 1e-12)


def test_free_particle_action_is_linear():
    grid = RealGrid(-5.0, 5.0, 2001)
    S = reduced_action_from_pair(solution_pair(FREE, 2.0, grid))
    np.testing.assert_allclose(S.S0_prime, 2.0, rtol=1e-6)
    np.testing.assert_allclose(S.S0, 2.0 * grid.points, atol=1e-6)
    assert np.max(np.abs(quantum_potential(S).values)) < 1e-6
    assert qshje_residual(S, FREE) < 1e-8


def test_closed_form_pair_has_exact_residual():
    S = reduced_action_from_pair(closed_form_free_pair(RealGrid(-10.0, 10.0, 4001), 1.0))
    assert qshje_residual(S, FREE) < 1e-10


def test_finite_difference_residual_converges():
    coarse, fine = (reduced_action_from_pair(solution_pair(HARMONIC, 0.7, RealGrid(-3.0, 3.0, n)))
                    for n in (1501, 3001))
    coarse_residual = qshje_residual(coarse, HARMONIC, 'finite_difference')
    fine_residual = qshje_residual(fine, HARMONIC, 'finite_difference')
    assert fine_residual < 5e-3
    assert coarse_residual / fine_residual > 3


def test_quantum_potential_is_affine_invariant(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    Q = quantum_potential(S).values
    np.testing.assert_allclose(quantum_potential(S.rescaled(2.0, 1.0)).values, Q, rtol=1e-10, atol=1e-12)


def test_wronskian_sign_is_oriented():
    pair = solution_pair(HARMONIC, 0.7, RealGrid(-4.0, 4.0, 801))
    flipped = SolutionPair(pair.v, pair.u, -pair.wronskian, HARMONIC, u_prime=pair.v_prime, v_prime=pair.u_prime)
    S = reduced_action_from_pair(flipped)
    assert np.all(S.S0_prime > 0)
    assert S.wronskian == pytest.approx(abs(pair.wronskian))


def test_bipolar_form_rebuilds_both_members(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    u, v = harmonic_pair.u.values, harmonic_pair.v.values
    scale = np.sqrt(S.hbar * S.wronskian)

    cosine = bipolar_reconstruct(S, 0.5, 0.5).values
    np.testing.assert_allclose(cosine.real * scale, u, rtol=1e-9, atol=1e-9)
    assert np.max(np.abs(cosine.imag)) < 1e-9

    sine = bipolar_reconstruct(S, 0.5 / 1j, -0.5 / 1j).values
    np.testing.assert_allclose(sine.real * scale, v, rtol=1e-9, atol=1e-9)


def test_bipolar_form_rejects_zero_coefficients(harmonic_pair):
    with pytest.raises(DegeneratePair):
        bipolar_reconstruct(reduced_action_from_pair(harmonic_pair), 0, 0)


def test_phase_factor_matches_the_pair(harmonic_pair):
    S = reduced_action_from_pair(harmonic_pair)
    assert phase_consistency_deviation(S, harmonic_pair) < 1e-10


def test_schwarzian_of_the_phase_reproduces_w():
    grid = RealGrid(-3.0, 3.0, 8001)
    energy = 0.7
    w = reconstruct_w(solution_pair(HARMONIC, energy, grid))
    central = grid.central_slice()
    expected = HARMONIC.values(grid.points[central]) - energy
    np.testing.assert_allclose(w.restricted(central.start, central.stop), expected, atol=1e-3)


def test_reduced_action_needs_nonzero_momentum():
    grid = RealGrid(0.0, 1.0, 11)
    with pytest.raises(InvalidState):
        ReducedAction(grid, np.zeros(11), np.zeros(11), energy=0.5, hbar=1.0, mass=1.0)


def test_free_trajectories_are_uniform_motion():
    slow, fast = floyd_trajectory(FREE, 0.5), floyd_trajectory(FREE, 2.0)
    for path, speed in ((slow, 1.0), (fast, 2.0)):
        assert path.t[0] == 0.0
        np.testing.assert_allclose(path.t, (path.q - path.q[0]) / speed, rtol=1e-4)
        np.testing.assert_allclose(path.p, speed, rtol=1e-6)


def test_harmonic_trajectory_covers_the_central_grid():
    grid = RealGrid(-4.0, 4.0, 1601)
    path = floyd_trajectory(HARMONIC, 0.5, grid)
    central = grid.central_slice()
    assert len(path.t) == central.stop - central.start
    assert np.all(np.diff(path.t) > 0)
    np.testing.assert_allclose(path.q, grid.points[central])


def test_trajectory_rejects_bad_steps():
    with pytest.raises(ValueError):
        floyd_trajectory(FREE, 0.5, dE=0.0)


def test_trajectory_time_must_be_monotone():
    with pytest.raises(NonMonotoneTime):
        Trajectory(np.array([0.0, 1.0, 0.5]), np.array([0.0, 1.0, 2.0]), np.ones(3), energy=1.0)


def test_classical_limit():
    rows = classical_limit_scan(HARMONIC, 2.5, (1.0, 0.5, 0.25, 0.125), RealGrid(-4.0, 4.0, 4001))
    sups = [row.sup_quantum_potential for row in rows]
    assert [row.hbar for row in rows] == [1.0, 0.5, 0.25, 0.125]
    assert all(b < a for a, b in zip(sups, sups[1:]))
    assert sups[-1] < sups[0] / 10
    assert rows[-1].max_momentum_gap < rows[0].max_momentum_gap
    assert all(row.min_abs_momentum > 0 for row in rows)


def test_classical_limit_needs_an_allowed_region():
    with pytest.raises(ValueError):
        classical_limit_scan(HARMONIC, -1.0, (1.0,), RealGrid(-4.0, 4.0, 401))


def test_action_table_rows():
    grid = RealGrid(-4.0, 4.0, 4001)
    S = reduced_action_from_pair(solution_pair(HARMONIC, 0.7, grid))
    rows = action_table(S, HARMONIC)
    central = grid.central_slice()
    assert len(rows) == central.stop - central.start
    assert tuple(rows[0]) == ACTION_COLUMNS
    assert rows[0]['q'] == pytest.approx(grid.points[central.start])
    assert max(abs(row['residual']) for row in rows) < 1e-8


def test_trajectory_rows():
    path = floyd_trajectory(FREE, 0.5, RealGrid(-5.0, 5.0, 401))
    rows = trajectory_rows(path)
    assert len(rows) == len(path.t)
    assert rows[0] == {'t': 0.0, 'q': path.q[0], 'p': path.p[0]}
