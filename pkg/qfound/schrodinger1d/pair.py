import math

import numpy as np

from qfound.core.errors import DegeneratePair, InvalidState
from qfound.schwarzian import RealGrid

from .models import Potential, SolutionPair, Wavefunction
from .numerov import numerov_derivative, numerov_factors, sweep

Seed = tuple[float, float]


def _taylor_step(psi: float, dpsi: float, g: np.ndarray, h: float, r: int) -> float:
    """psi(q_r + h) to fourth order from psi'' = -g psi."""
    g0 = g[r]
    g1 = (g[r + 1] - g[r - 1]) / (2 * h)
    g2 = (g[r + 1] - 2 * g[r] + g[r - 1]) / h**2
    d2 = -g0 * psi
    d3 = -g1 * psi - g0 * dpsi
    d4 = -g2 * psi - 2 * g1 * dpsi + g0**2 * psi
    return psi + h * dpsi + h**2 / 2 * d2 + h**3 / 6 * d3 + h**4 / 24 * d4


def _member(f: list, g: np.ndarray, h: float, r: int, seed: Seed) -> np.ndarray:
    psi = [0.0] * len(f)
    psi[r] = seed[0]
    psi[r + 1] = _taylor_step(seed[0], seed[1], g, h, r)
    sweep(f, psi, r, len(f) - 1)
    sweep(f, psi, r + 1, 0)
    return np.array(psi)


def discrete_wronskian(f, u, v, h: float, i: int) -> float:
    """Conserved quantity of two Numerov sweeps; equals u v' - v u' for the Numerov derivative."""
    return f[i] * f[i + 1] * (u[i] * v[i + 1] - u[i + 1] * v[i]) / h


def solution_pair(potential: Potential, energy: float, grid: RealGrid | None = None,
                  reference: int | None = None, seeds: tuple[Seed, Seed] | None = None) -> SolutionPair:
    """Two independent real solutions at `energy`, scaled so that u v' - v u' = hbar.

    Both are launched at the reference index (the midpoint by default) with
    the (psi, psi') pairs in `seeds`; by default (1, 0) and (0, kappa) with
    kappa the local wave number. Walls are ignored: the pair is a local basis,
    not a bound state.
    """
    grid = grid or potential.default_grid()
    n, h = grid.n_points, grid.spacing
    r = n // 2 if reference is None else int(reference)
    if not 1 <= r <= n - 2:
        raise InvalidState(f"reference index {r} must leave a neighbour on each side")

    g = potential.wave_number_squared(energy, grid.points)
    if seeds is None:
        kappa = math.sqrt(abs(g[r]))
        if kappa < 1e-8:
            kappa = 1.0 / (grid.q_max - grid.q_min)
        seeds = ((1.0, 0.0), (0.0, kappa))
    (u0, du0), (v0, dv0) = seeds
    if abs(u0 * dv0 - v0 * du0) <= 1e-12 * math.hypot(u0, du0) * math.hypot(v0, dv0):
        raise DegeneratePair("seed vectors are linearly dependent")

    f = numerov_factors(potential, energy, grid).tolist()
    u = _member(f, g, h, r, seeds[0])
    v = _member(f, g, h, r, seeds[1])

    w = discrete_wronskian(f, u, v, h, r)
    if w == 0 or not math.isfinite(w):
        raise DegeneratePair("pair members are linearly dependent on the grid")
    scale = math.sqrt(potential.hbar / abs(w))
    u, v = u * scale, v * scale * math.copysign(1.0, w)

    u_wave, v_wave = Wavefunction(grid, u, energy), Wavefunction(grid, v, energy)
    return SolutionPair(u_wave, v_wave, discrete_wronskian(f, u, v, h, r), potential,
                        u_prime=numerov_derivative(u_wave, potential),
                        v_prime=numerov_derivative(v_wave, potential))
