"""Numerov recurrence for psi'' = -g(q) psi with g = 2m(E - V)/hbar^2.

With f_i = 1 + h^2 g_i / 12 the step is
    psi[i+1] = ((12 - 10 f[i]) psi[i] - f[i-1] psi[i-1]) / f[i+1]
and the local error is O(h^6), O(h^4) over a fixed interval.
"""
import math
from typing import Literal

import numpy as np

from qfound.core.errors import WavefunctionOverflow
from qfound.schwarzian import RealGrid

from .models import Potential, Side, Wavefunction

Direction = Literal['left_to_right', 'right_to_left']

DECAY_SEED = 1e-30
RENORMALIZE_AT = 1e100
OVERFLOW_LIMIT = 1e150


def numerov_factors(potential: Potential, energy: float, grid: RealGrid) -> np.ndarray:
    h = grid.spacing
    return 1.0 + h * h * potential.wave_number_squared(energy, grid.points) / 12.0


def sweep(f, psi: list, start: int, stop: int, renormalize: bool = False) -> None:
    """Fill psi from the two seeded entries at `start` and its neighbour up to `stop` inclusive.

    The direction is taken from the sign of stop - start. With `renormalize`
    the filled part is rescaled whenever it grows past RENORMALIZE_AT;
    otherwise growth past OVERFLOW_LIMIT raises.
    """
    step = 1 if stop > start else -1
    i = start + step
    while i != stop:
        following = ((12.0 - 10.0 * f[i]) * psi[i] - f[i - step] * psi[i - step]) / f[i + step]
        if not math.isfinite(following):
            raise WavefunctionOverflow(f"Numerov sweep produced a non-finite value at index {i + step}")
        magnitude = abs(following)
        psi[i + step] = following
        if renormalize and magnitude > RENORMALIZE_AT:
            lo, hi = min(start, i + step), max(start, i + step) + 1
            psi[lo:hi] = [x / magnitude for x in psi[lo:hi]]
        elif not renormalize and magnitude > OVERFLOW_LIMIT:
            raise WavefunctionOverflow(
                f"Numerov sweep exceeded {OVERFLOW_LIMIT:.0e} at index {i + step}; enable renormalization")
        i += step


def boundary_seed(potential: Potential, energy: float, grid: RealGrid, side: Side) -> tuple[float, float]:
    """psi at the end point and its inner neighbour.

    A wall gives (0, h). An open end gives the decaying WKB ratio exp(kappa h),
    which degrades to a flat seed where the end is classically allowed.
    """
    h = grid.spacing
    if potential.has_wall(side):
        return 0.0, h
    end = grid.q_min if side == 'left' else grid.q_max
    excess = float(potential.values(np.array([end]))[0]) - energy
    kappa = math.sqrt(2 * potential.mass * max(excess, 0.0)) / potential.hbar
    return DECAY_SEED, DECAY_SEED * math.exp(kappa * h)


def numerov_integrate(potential: Potential, energy: float, grid: RealGrid,
                      direction: Direction = 'left_to_right', seed: tuple[float, float] | None = None,
                      renormalize: bool = False) -> Wavefunction:
    """Sweep the whole grid in one direction.

    `seed` holds psi at the first two points met in that direction and
    defaults to `boundary_seed` of the starting end.
    """
    potential.validate_grid(grid)
    n = grid.n_points
    f = numerov_factors(potential, energy, grid).tolist()
    side: Side = 'left' if direction == 'left_to_right' else 'right'
    first, second = seed if seed is not None else boundary_seed(potential, energy, grid, side)

    psi = [0.0] * n
    if direction == 'left_to_right':
        psi[0], psi[1] = first, second
        sweep(f, psi, 0, n - 1, renormalize)
    else:
        psi[n - 1], psi[n - 2] = first, second
        sweep(f, psi, n - 1, 0, renormalize)
    return Wavefunction(grid, np.array(psi), energy)


def numerov_derivative(psi: Wavefunction, potential: Potential) -> np.ndarray:
    """psi' consistent with the Numerov recurrence.

    psi'_i = f_i (f_{i+1} psi_{i+1} - f_{i-1} psi_{i-1}) / 2h + (h^2/12) g'_i psi_i
    is O(h^4) and keeps u v' - v u' exactly constant for any two sweeps at
    the same energy. At the two end points the missing f psi neighbour is the
    one the recurrence itself would produce.
    """
    grid = psi.grid
    h = grid.spacing
    g = potential.wave_number_squared(psi.energy, grid.points)
    f = 1.0 + h * h * g / 12.0
    dg = np.gradient(g, h)
    psi_values = psi.values

    y = f * psi_values
    before = (12.0 - 10.0 * f[0]) * psi_values[0] - y[1]
    after = (12.0 - 10.0 * f[-1]) * psi_values[-1] - y[-2]
    padded = np.concatenate([[before], y, [after]])
    return f * (padded[2:] - padded[:-2]) / (2 * h) + h * h * dg * psi_values / 12.0


def count_nodes(values) -> int:
    """Sign changes of a real sample sequence; exact zeros are skipped."""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
