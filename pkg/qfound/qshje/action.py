"""Reduced action, quantum potential and the QSHJE identity from a solution pair.

With psi = u + i v and psi~ = u - i v,  e^{2i S0/hbar} = psi/psi~ and
S0 = hbar arg(psi). The QSHJE reads
    (1/2m) S0'^2 + V - E + (hbar^2/4m) {S0, q} = 0.
"""
from typing import Literal

import numpy as np

from qfound.core.errors import DegeneratePair, InvalidState
from qfound.schrodinger1d import Potential, SolutionPair, Wavefunction
from qfound.schwarzian import InteriorSamples, SampledFunction, schwarzian

from .models import ReducedAction

DerivativeMethod = Literal['closed_form', 'finite_difference']


def _oriented(pair: SolutionPair):
    """u, v, u', v' with v flipped if needed so that the Wronskian is positive."""
    w = pair.wronskian
    if w == 0 or not np.isfinite(w):
        raise DegeneratePair("solution pair has a vanishing Wronskian")
    if pair.u_prime is None or pair.v_prime is None:
        raise InvalidState("solution pair carries no derivatives")
    sign = 1.0 if w > 0 else -1.0
    return pair.u.values, sign * pair.v.values, pair.u_prime, sign * pair.v_prime, abs(w)


def reduced_action_from_pair(pair: SolutionPair, hbar: float | None = None) -> ReducedAction:
    """S0 = hbar * unwrapped arctan(v/u); p = hbar W / (u^2 + v^2) exactly.

    The unwrap constant is chosen so that S0 lies in (-pi hbar, pi hbar] at
    the grid midpoint. S0'' and S0''' follow in closed form from
    rho2 = u^2 + v^2 and psi'' = -g psi.
    """
    hbar = pair.potential.hbar if hbar is None else hbar
    u, v, du, dv, w = _oriented(pair)
    grid = pair.grid

    theta = np.unwrap(np.arctan2(v, u))
    middle = grid.n_points // 2
    theta -= 2 * np.pi * np.round(theta[middle] / (2 * np.pi))

    rho = np.hypot(u, v)
    p = hbar * w / rho / rho

    rho2 = rho * rho
    g = pair.potential.wave_number_squared(pair.energy, grid.points)
    r1 = 2 * (u * du + v * dv) / rho2
    r2 = 2 * (du * du + dv * dv) / rho2 - 2 * g
    second = -p * r1
    third = p * (2 * r1 * r1 - r2)

    return ReducedAction(grid, hbar * theta, p, pair.energy, hbar, pair.potential.mass,
                         wronskian=w, S0_second=second, S0_third=third)


def quantum_potential(S: ReducedAction, method: DerivativeMethod = 'closed_form') -> InteriorSamples:
    """Q = (hbar^2/4m) {S0, q}.

    `finite_difference` ignores the stored higher derivatives and differences
    the exact S0' samples instead, which loses one point at each edge.
    """
    if method == 'closed_form' and S.S0_second is not None and S.S0_third is not None:
        samples = SampledFunction(S.grid, S.S0, S.S0_prime, S.S0_second, S.S0_third)
    else:
        samples = SampledFunction(S.grid, S.S0, S.S0_prime)
    s = schwarzian(samples, vanishing_ratio=0.0)
    return InteriorSamples(S.grid, s.start, s.stop, S.hbar**2 / (4 * S.mass) * s.values)


def residual_samples(S: ReducedAction, V: Potential, method: DerivativeMethod = 'closed_form') -> InteriorSamples:
    Q = quantum_potential(S, method)
    window = slice(Q.start, Q.stop)
    q = S.grid.points[window]
    values = S.S0_prime[window]**2 / (2 * S.mass) + V.values(q) - S.energy + Q.values
    return InteriorSamples(S.grid, Q.start, Q.stop, values)


def qshje_residual(S: ReducedAction, V: Potential, method: DerivativeMethod = 'closed_form') -> float:
    """sup |S0'^2/2m + V - E + Q| over the central 90% of the grid."""
    central = S.grid.central_slice()
    residual = residual_samples(S, V, method)
    start, stop = max(central.start, residual.start), min(central.stop, residual.stop)
    return float(np.max(np.abs(residual.restricted(start, stop))))


def bipolar_reconstruct(S: ReducedAction, A: complex, B: complex) -> Wavefunction:
    """psi = S0'^(-1/2) (A e^{i S0/hbar} + B e^{-i S0/hbar}).

    (A, B) = (1/2, 1/2) gives u / sqrt(hbar W) and (1/2i, -1/2i) gives v / sqrt(hbar W).
    """
    if A == 0 and B == 0:
        raise DegeneratePair("A = B = 0 gives the identically zero function")
    if np.any(S.S0_prime <= 0):
        raise InvalidState("bipolar form needs S0' > 0; orient the pair first")
    phase = np.exp(1j * S.S0 / S.hbar)
    values = (A * phase + B * np.conj(phase)) / np.sqrt(S.S0_prime)
    return Wavefunction(S.grid, values, S.energy)


def phase_consistency_deviation(S: ReducedAction, pair: SolutionPair) -> float:
    """max |e^{2i S0/hbar} psi~/psi - 1| with psi = u + i v."""
    u, v, _, _, _ = _oriented(pair)
    psi, psi_tilde = u + 1j * v, u - 1j * v
    return float(np.max(np.abs(np.exp(2j * S.S0 / S.hbar) * psi_tilde / psi - 1)))


def reconstruct_w(pair: SolutionPair, hbar: float | None = None) -> InteriorSamples:
    """-(hbar^2/4m) {e^{2i S0/hbar}, q}, which reproduces W = V - E.

    Only the first derivative of the phase factor is exact; the second and
    third are central differences of it.
    """
    S = reduced_action_from_pair(pair, hbar)
    z = np.exp(2j * S.S0 / S.hbar)
    dz = 2j * S.S0_prime / S.hbar * z
    s = schwarzian(SampledFunction(S.grid, z, dz), vanishing_ratio=0.0)
    return InteriorSamples(S.grid, s.start, s.stop, (-S.hbar**2 / (4 * S.mass) * s.values).real)
