"""Bound states by shooting from both ends of the grid.

Eigenvalue indices are bracketed by counting the nodes of the solution
shot from the left (Sturm oscillation); each bracket is then refined by
bisection on the sign of the matching Wronskian at a fixed match point.
"""
import numpy as np

from qfound.core.errors import InvalidGrid, NoEigenvalueInRange
from qfound.logger import logger
from qfound.schwarzian import RealGrid

from .models import EigenResult, Potential, Wavefunction
from .numerov import boundary_seed, count_nodes, numerov_factors, sweep

ENERGY_TOLERANCE = 1e-12
MAX_REFINEMENTS = 60
MAX_ISOLATIONS = 200


def match_index(potential: Potential, energy: float, grid: RealGrid) -> int:
    """Grid index just inside the rightmost classical turning point, or the midpoint."""
    n = grid.n_points
    above = potential.values(grid.points) > energy
    crossings = np.flatnonzero(~above[:-1] & above[1:])
    index = int(crossings[-1]) if crossings.size else n // 2
    return int(np.clip(index, 2, n - 3))


def _shoot_left(f, potential, energy, grid, stop, renormalize=True) -> list:
    psi = [0.0] * grid.n_points
    psi[0], psi[1] = boundary_seed(potential, energy, grid, 'left')
    sweep(f, psi, 0, stop, renormalize)
    return psi


def _shoot_right(f, potential, energy, grid, stop, renormalize=True) -> list:
    n = grid.n_points
    psi = [0.0] * n
    psi[n - 1], psi[n - 2] = boundary_seed(potential, energy, grid, 'right')
    sweep(f, psi, n - 1, stop, renormalize)
    return psi


def _matching_state(potential: Potential, energy: float, grid: RealGrid, m: int):
    """(psi, psi') of the left and the right solution at index m."""
    f = numerov_factors(potential, energy, grid).tolist()
    left = _shoot_left(f, potential, energy, grid, m + 1)
    right = _shoot_right(f, potential, energy, grid, m - 1)
    h2 = 2 * grid.spacing
    return ((left[m], (left[m + 1] - left[m - 1]) / h2),
            (right[m], (right[m + 1] - right[m - 1]) / h2),
            left, right)


def shoot_mismatch(potential: Potential, energy: float, grid: RealGrid | None = None,
                   match: int | None = None) -> float:
    """psi_L'/psi_L - psi_R'/psi_R at the match point; zero at an eigenvalue.

    The match point defaults to the rightmost turning point at this energy.
    Near a node of either solution the value has a pole.
    """
    grid = grid or potential.default_grid()
    potential.validate_grid(grid)
    m = match if match is not None else match_index(potential, energy, grid)
    (l0, l1), (r0, r1), _, _ = _matching_state(potential, energy, grid, m)
    return l1 / l0 - r1 / r0


def _matching_wronskian(potential, energy, grid, m) -> float:
    """Pole-free form of the mismatch: Wronskian of the unit (psi, psi') vectors."""
    (l0, l1), (r0, r1), _, _ = _matching_state(potential, energy, grid, m)
    left = np.array([l0, l1]) / np.hypot(l0, l1)
    right = np.array([r0, r1]) / np.hypot(r0, r1)
    return float(left[0] * right[1] - left[1] * right[0])


class _NodeCounter:
    """Node count of the left-shot solution over the whole grid, memoized per energy."""

    def __init__(self, potential: Potential, grid: RealGrid):
        self.potential = potential
        self.grid = grid
        self.cache: dict[float, int] = {}

    def __call__(self, energy: float) -> int:
        if energy not in self.cache:
            f = numerov_factors(self.potential, energy, self.grid).tolist()
            psi = _shoot_left(f, self.potential, energy, self.grid, self.grid.n_points - 1)
            self.cache[energy] = count_nodes(psi[1:])
        return self.cache[energy]


def _isolate(counter: _NodeCounter, index: int, lo: float, hi: float) -> tuple[float, float]:
    """Shrink [lo, hi] until exactly the eigenvalue with `index` nodes lies inside."""
    for _ in range(MAX_ISOLATIONS):
        if counter(lo) == index and counter(hi) == index + 1:
            break
        middle = 0.5 * (lo + hi)
        if counter(middle) <= index:
            lo = middle
        else:
            hi = middle
        if hi - lo < ENERGY_TOLERANCE:
            break
    return lo, hi


def _refine(potential, grid, counter: _NodeCounter, index: int, lo: float, hi: float) -> float:
    m = match_index(potential, 0.5 * (lo + hi), grid)
    w_lo = _matching_wronskian(potential, lo, grid, m)
    w_hi = _matching_wronskian(potential, hi, grid, m)
    by_wronskian = np.sign(w_lo) != np.sign(w_hi)
    if not by_wronskian:
        logger.warning(f"matching Wronskian keeps its sign on [{lo:.12g}, {hi:.12g}]; "
                       f"refining level {index} by node counting")

    for _ in range(MAX_REFINEMENTS):
        if hi - lo < ENERGY_TOLERANCE:
            break
        middle = 0.5 * (lo + hi)
        if by_wronskian:
            w_mid = _matching_wronskian(potential, middle, grid, m)
            if w_mid == 0:
                return middle
            if np.sign(w_mid) == np.sign(w_lo):
                lo, w_lo = middle, w_mid
            else:
                hi = middle
        elif counter(middle) <= index:
            lo = middle
        else:
            hi = middle
    return 0.5 * (lo + hi)


def _eigenfunction(potential: Potential, energy: float, grid: RealGrid) -> Wavefunction:
    """Join the left and right solutions at the match point and normalize to sum |psi|^2 h = 1."""
    m = match_index(potential, energy, grid)
    _, _, left, right = _matching_state(potential, energy, grid, m)
    overlap = slice(m - 1, m + 2)
    r = np.array(right[overlap])
    scale = float(np.dot(left[overlap], r) / np.dot(r, r)) if np.any(r) else 1.0

    psi = np.empty(grid.n_points)
    psi[:m] = left[:m]
    psi[m:] = scale * np.array(right[m:])
    psi /= np.sqrt(np.sum(psi**2) * grid.spacing)

    significant = np.flatnonzero(np.abs(psi) > 1e-3 * np.abs(psi).max())
    if psi[significant[0]] < 0:
        psi = -psi
    return Wavefunction(grid, psi, energy)


def find_eigenvalues(potential: Potential, energy_range: tuple[float, float], max_count: int,
                     grid: RealGrid | None = None) -> EigenResult:
    """The lowest `max_count` bound-state energies inside energy_range, ascending.

    The range is clipped below the continuum threshold of the grid's open
    ends. Raises NoEigenvalueInRange if no level is found.
    """
    if max_count < 1:
        raise ValueError("max_count must be at least 1")
    grid = grid or potential.default_grid()
    potential.validate_grid(grid)
    if grid.n_points < 5:
        raise InvalidGrid("shooting needs at least 5 grid points")

    lo, hi = map(float, energy_range)
    threshold = potential.continuum_threshold(grid)
    if np.isfinite(threshold):
        hi = min(hi, threshold - 1e-9 * max(1.0, abs(threshold)))
    if not lo < hi:
        raise NoEigenvalueInRange(f"no bound states possible in [{energy_range[0]}, {energy_range[1]}] "
                                  f"below the continuum threshold {threshold:.6g}")

    counter = _NodeCounter(potential, grid)
    first, last = counter(lo), counter(hi)
    if last <= first:
        raise NoEigenvalueInRange(f"no eigenvalue in [{lo:.6g}, {hi:.6g}]")

    energies, nodes, states = [], [], []
    for index in range(first, min(last, first + max_count)):
        a, b = _isolate(counter, index, lo, hi)
        energy = _refine(potential, grid, counter, index, a, b)
        state = _eigenfunction(potential, energy, grid)
        energies.append(energy)
        nodes.append(count_nodes(state.values))
        states.append(state)
        logger.debug(f"level {index}: E = {energy:.12g}")
    return EigenResult(tuple(energies), tuple(nodes), tuple(states))
