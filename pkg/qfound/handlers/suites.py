"""Audit suites: each runs one family of invariants and reports every measured value against its limit."""
from typing import Any, Callable

import numpy as np
from pydantic import BaseModel, Field

from qfound.core import Tolerances
from qfound.core.errors import NegativeEigenvalue
from qfound.qshje import (bipolar_reconstruct, classical_limit_scan, floyd_trajectory, qshje_residual,
                          reduced_action_from_pair)
from qfound.saqm import (AmplitudeNetwork, DensityMatrix, MeasurementBasis, Predictor, ProbabilityTable,
                         amplitude_tolerance, born_probabilities, composite_counts, compose_amplitudes,
                         density_from_table, exponent_scan, hardy_counts, mub_set, no_signalling_check, path_sum,
                         random_basis, random_density_matrix, random_predictor, random_series_parallel_network,
                         reverse_amplitude, statistical_distance, table_from_density, trace_probability,
                         wootters_g_identity)
from qfound.schrodinger1d import Potential, SolutionPair, Wavefunction, find_eigenvalues, solution_pair
from qfound.schwarzian import (MoebiusMap, RealGrid, SampledFunction, apply_moebius, cocycle_deviation,
                               moebius_invariance_deviation, schwarzian)


class Check(BaseModel):
    value: float
    limit: float
    passed: bool


class SuiteResult(BaseModel):
    name: str
    passed: bool = True
    checks: dict[str, Check] = Field(default_factory=dict)
    data: dict[str, Any] = Field(default_factory=dict)

    def below(self, key: str, value: float, limit: float) -> None:
        self._record(key, value, limit, bool(value < limit))

    def above(self, key: str, value: float, limit: float) -> None:
        self._record(key, value, limit, bool(value > limit))

    def holds(self, key: str, condition: bool) -> None:
        self._record(key, float(condition), 1.0, bool(condition))

    def _record(self, key: str, value: float, limit: float, passed: bool) -> None:
        self.checks[key] = Check(value=float(value), limit=float(limit), passed=passed)
        self.passed = self.passed and passed


def _random_moebius(rng: np.random.Generator, values: np.ndarray) -> MoebiusMap:
    while True:
        A, B, C, D = rng.normal(size=4)
        if abs(A * D - B * C) > 0.1 and np.min(np.abs(C * values + D)) > 0.5:
            return MoebiusMap(A, B, C, D)


def schwarzian_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='schwarzian')
    grid = RealGrid(0.0, 1.0, 2001)
    x = grid.points
    moebius = SampledFunction(grid, (2 * x + 1) / (x + 3), 5 / (x + 3)**2, -10 / (x + 3)**3, 30 / (x + 3)**4)
    result.below('moebius_analytic', np.max(np.abs(schwarzian(moebius).values)), tol.schwarzian_analytic)
    result.below('moebius_fd', np.max(np.abs(schwarzian(SampledFunction(grid, moebius.values)).values)),
                 tol.schwarzian_fd)

    cubic_grid = RealGrid(-1.0, 1.0, 2001)
    q = cubic_grid.points
    f = SampledFunction(cubic_grid, q**3 + q, 3 * q**2 + 1, 6 * q, np.full_like(q, 6.0))
    deviations = [moebius_invariance_deviation(f, _random_moebius(rng, f.values)) for _ in range(20)]
    result.below('moebius_invariance', max(deviations), tol.invariance)

    cocycles = []
    for _ in range(10):
        a, b, c = rng.uniform(0.1, 0.9, size=3)
        qA = SampledFunction(cubic_grid, q + a * q**3, 1 + 3 * a * q**2, 6 * a * q, np.full_like(q, 6 * a))
        qC = SampledFunction(cubic_grid, q + b * np.sin(c * q), 1 + b * c * np.cos(c * q),
                             -b * c**2 * np.sin(c * q), -b * c**3 * np.cos(c * q))
        cocycles.append(cocycle_deviation(qA, cubic_grid, qC, xi=1.0, mass=1.0))
    result.below('cocycle', max(cocycles), tol.cocycle)
    return result


def spectrum_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='spectrum')
    harmonic = Potential.harmonic()
    levels = find_eigenvalues(harmonic, (0.0, 6.0), 6, RealGrid(-10.0, 10.0, 4001))
    result.holds('harmonic_count', len(levels) == 6)
    result.below('harmonic_error', max(abs(e - (n + 0.5)) for n, e in enumerate(levels.energies)),
                 tol.spectrum_harmonic)
    result.holds('harmonic_nodes', list(levels.node_counts) == list(range(len(levels))))

    well = find_eigenvalues(Potential.infinite_well(1.0), (0.0, 60.0), 3)
    result.below('well_error', max(abs(e - (n + 1)**2 * np.pi**2 / 2) for n, e in enumerate(well.energies)),
                 tol.spectrum_well)

    pair = solution_pair(harmonic, 0.7, RealGrid(-4.0, 4.0, 4001))
    drift = np.max(np.abs(pair.local_wronskian() - pair.wronskian)) / abs(pair.wronskian)
    result.below('wronskian_drift', drift, tol.wronskian)
    result.data['harmonic'] = list(levels.energies)
    result.data['well'] = list(well.energies)
    return result


def _free_pair(grid: RealGrid, k: float) -> SolutionPair:
    """cos(kq), sin(kq) in closed form, Wronskian k."""
    q, energy = grid.points, k * k / 2
    return SolutionPair(Wavefunction(grid, np.cos(k * q), energy), Wavefunction(grid, np.sin(k * q), energy),
                        k, Potential.free(), u_prime=-k * np.sin(k * q), v_prime=k * np.cos(k * q))


def _linearity(t: np.ndarray, q: np.ndarray) -> tuple[float, float]:
    slope, intercept = np.polyfit(q, t, 1)
    return float(np.max(np.abs(t - (slope * q + intercept))) / np.max(np.abs(t))), float(slope)


def qshje_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='qshje')
    harmonic, free = Potential.harmonic(), Potential.free()
    grid = harmonic.default_grid()

    for energy in (0.5, 0.7, 2.5):
        pair = solution_pair(harmonic, energy, grid)
        S = reduced_action_from_pair(pair)
        result.below(f'residual_harmonic_{energy}', qshje_residual(S, harmonic), tol.residual)
        bound = S.hbar * S.wronskian / np.max(pair.u.values**2 + pair.v.values**2)
        result.holds(f'momentum_bound_{energy}', bool(0 < bound * (1 - 1e-12) <= np.min(S.S0_prime)))
    S = reduced_action_from_pair(solution_pair(free, 0.5))
    result.below('residual_free', qshje_residual(S, free), tol.residual)
    closed = reduced_action_from_pair(_free_pair(free.default_grid(), 1.0))
    result.below('residual_free_closed_form', qshje_residual(closed, free), 1e-10)

    for energy in (0.5, 1.5):
        pair = solution_pair(harmonic, energy, grid)
        rebuilt = bipolar_reconstruct(reduced_action_from_pair(pair), 0.5, 0.5).values
        u = pair.u.values
        scale = np.vdot(rebuilt, u) / np.vdot(rebuilt, rebuilt)
        result.below(f'bipolar_{energy}', np.max(np.abs(scale * rebuilt - u)) / np.max(np.abs(u)), tol.bipolar)

    slopes = []
    for energy in (0.5, 2.0):
        path = floyd_trajectory(free, energy)
        deviation, slope = _linearity(path.t, path.q)
        slopes.append(slope)
        result.below(f'trajectory_linearity_{energy}', deviation, tol.trajectory_linearity)
    result.below('trajectory_slope_ratio', abs(slopes[0] / slopes[1] - 2), 1e-3)

    scan = classical_limit_scan(harmonic, 2.5, (1.0, 0.5, 0.25, 0.125), RealGrid(-4.0, 4.0, 4001))
    sups = [row.sup_quantum_potential for row in scan]
    result.holds('classical_limit_decreasing', all(b < a for a, b in zip(sups, sups[1:])))
    result.holds('classical_limit_momentum_nonzero', all(row.min_abs_momentum > 0 for row in scan))
    result.data['sup_quantum_potential'] = sups
    return result


def tomography_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='tomography')
    for n in (2, 3, 5):
        mubs = mub_set(n)
        worst = max(np.max(np.abs(np.abs(a.vectors.conj() @ b.vectors.T)**2 - 1 / n))
                    for i, a in enumerate(mubs.bases) for b in mubs.bases[i + 1:])
        result.below(f'mub_unbiased_{n}', worst, tol.tomography)

    errors = []
    for n, count in ((2, 100), (3, 50)):
        mubs = mub_set(n)
        for _ in range(count):
            rho = random_density_matrix(n, rng)
            back = density_from_table(table_from_density(rho, mubs), mubs)
            errors.append(np.linalg.norm(back.entries - rho.entries))
    result.below('round_trip', max(errors), tol.tomography)
    result.data['round_trip_errors'] = [float(e) for e in errors]

    try:
        density_from_table(ProbabilityTable(np.array([[1.0, 0.0]] * 3)), mub_set(2))
        rejected = False
    except NegativeEigenvalue:
        rejected = True
    result.holds('unphysical_table_rejected', rejected)
    return result


def born_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='born')
    normalization, scans = [], {}
    for n in (2, 3, 5):
        basis = random_basis(n, rng)
        predictors = [random_predictor(n, rng) for _ in range(100)]
        normalization.extend(abs(born_probabilities(psi, basis).sum() - 1) for psi in predictors)
        scans[n] = exponent_scan(predictors, basis, (2.0, 1.0, 1.5, 3.0))
    result.below('born_normalization', max(normalization), tol.exponent)
    result.below('exponent_k2', max(scan[2.0][1] for scan in scans.values()), tol.exponent)
    for k in (1.0, 1.5, 3.0):
        result.above(f'exponent_k{k:g}', min(scan[k][0] for scan in scans.values()), tol.exponent_gap)

    basis = MeasurementBasis.computational(3)
    e0, e1 = Predictor.basis_vector(3, 0), Predictor.basis_vector(3, 1)
    psi = random_predictor(3, rng)
    result.below('distance_same_eigenket', statistical_distance(e0, e0, basis), tol.distance)
    result.below('distance_orthogonal', abs(statistical_distance(e0, e1, basis) - np.pi / 2), tol.distance)
    result.below('distance_hilbert_angle',
                 abs(statistical_distance(e0, psi, basis) - np.arccos(abs(psi.components[0]))), tol.distance)

    half = np.array([1, 1j]) / np.sqrt(2)
    result.below('reverse_completeness', abs(sum(a * reverse_amplitude(a) for a in half) - 1), tol.exponent)
    plus = DensityMatrix.from_predictor(Predictor.normalized([1, 1]))
    result.below('trace_probability', abs(trace_probability(plus, np.diag([1.0, 0.0])) - 0.5), tol.exponent)
    return result


def counting_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='counting')
    for n, r, K in ((2, 2, 4), (2, 1, 2), (4, 2, 16)):
        counts = hardy_counts(n, r)
        result.holds(f'hardy_{n}_{r}', counts.K == K and counts.monotone_ok and counts.composite_ok)

    real_pair = composite_counts(2, 2, 'real')
    result.holds('real_qubit_pair', (real_pair.K_joint, real_pair.K_product, real_pair.violates) == (10, 9, True))
    real_mixed = composite_counts(2, 3, 'real')
    result.holds('real_2x3', (real_mixed.K_joint, real_mixed.K_product, real_mixed.violates) == (21, 18, True))
    complex_pair = composite_counts(2, 2, 'complex')
    result.holds('complex_qubit_pair', (complex_pair.K_joint, complex_pair.K_product, complex_pair.violates)
                 == (16, 16, False))

    identity = max(wootters_g_identity(a, b, r) for r in (1, 2) for a in (2, 3, 5) for b in (2, 3, 5))
    result.holds('g_identity_exact', identity == 0)
    result.holds('g_identity_negative_control', wootters_g_identity(2, 2, 2, offset=0) > 0)
    result.data['real_qubit_pair'] = {'K_joint': real_pair.K_joint, 'K_product': real_pair.K_product,
                                      'violates': real_pair.violates}
    return result


def amplitudes_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='amplitudes')
    worst_order, worst_expansion = 0.0, 0.0
    for _ in range(100):
        net = random_series_parallel_network(int(rng.integers(1, 51)), rng)
        budget = amplitude_tolerance(net, tol.amplitudes)
        reference = compose_amplitudes(net)
        reordered = compose_amplitudes(net, order_seed=int(rng.integers(2**31)))
        worst_order = max(worst_order, abs(reordered - reference) / budget)
        worst_expansion = max(worst_expansion, abs(path_sum(net) - reference) / budget)
    result.below('order_invariance', worst_order, 1.0)
    result.below('expansion', worst_expansion, 1.0)

    a, b, c = (complex(z) for z in rng.uniform(-0.7, 0.7, 3) + 1j * rng.uniform(-0.7, 0.7, 3))
    net = AmplitudeNetwork.from_edges([('I', 'm', a), ('I', 'm', b), ('m', 'T', c)])
    result.below('distributivity', abs(compose_amplitudes(net) - (a * c + b * c)), 4 * tol.amplitudes)
    return result


def no_signalling_suite(rng: np.random.Generator, tol: Tolerances) -> SuiteResult:
    result = SuiteResult(name='no_signalling')
    qubit = mub_set(2)
    sides = (qubit.bases[0], qubit.bases[1])
    worst = max(no_signalling_check(random_density_matrix(4, rng), sides, qubit) for _ in range(50))
    result.below('random_states', worst, tol.no_signalling)

    bell = DensityMatrix.from_predictor(Predictor.normalized([1, 0, 0, 1]))
    result.below('bell_state', no_signalling_check(bell, sides, qubit), tol.no_signalling)
    product = random_density_matrix(2, rng).tensor(random_density_matrix(2, rng))
    result.below('product_state', no_signalling_check(product, sides, qubit), tol.no_signalling)
    return result


SUITES: dict[str, Callable[[np.random.Generator, Tolerances], SuiteResult]] = {
    'schwarzian': schwarzian_suite,
    'spectrum': spectrum_suite,
    'qshje': qshje_suite,
    'tomography': tomography_suite,
    'born': born_suite,
    'counting': counting_suite,
    'amplitudes': amplitudes_suite,
    'no_signalling': no_signalling_suite,
}
