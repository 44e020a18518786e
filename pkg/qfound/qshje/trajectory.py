import numpy as np

from qfound.core.errors import NonMonotoneTime
from qfound.logger import logger
from qfound.schrodinger1d import Potential, solution_pair
from qfound.schwarzian import RealGrid

from .action import quantum_potential, reduced_action_from_pair
from .models import ClassicalLimitRow, Trajectory


def _resolved_run(t: np.ndarray, kinetic: np.ndarray) -> slice:
    """The run of strictly increasing t around the point of largest E - V.

    Deep in a forbidden region dS0/dE stops changing faster than the central
    difference can resolve, and t goes flat there. A non-increasing step on an
    allowed point is a real failure and raises NonMonotoneTime.
    """
    rising = np.diff(t) > 0
    anchor = int(np.argmax(kinetic))
    start = anchor
    while start > 0 and rising[start - 1]:
        start -= 1
    stop = anchor + 1
    while stop < len(t) and rising[stop - 1]:
        stop += 1

    allowed = np.flatnonzero(kinetic > 0)
    outside = allowed[(allowed < start) | (allowed >= stop)]
    if outside.size:
        raise NonMonotoneTime(f"t(q) is not strictly monotone inside the allowed region, "
                              f"{outside.size} sample(s) affected")
    return slice(start, stop)


def floyd_trajectory(V: Potential, E: float, grid: RealGrid | None = None, dE: float | None = None) -> Trajectory:
    """Trajectory with time t(q) = dS0/dE, taken as a central difference.

    The three pairs at E - dE, E and E + dE share the reference point and the
    seeding rule, so their actions agree at that point. Samples cover the
    central 90% of the grid, cut back to where t is still resolved, and t
    starts at 0.
    """
    grid = grid or V.default_grid()
    dE = 1e-6 * max(abs(E), 1.0) if dE is None else dE
    if dE <= 0:
        raise ValueError("dE must be positive")

    lower, central, upper = (reduced_action_from_pair(solution_pair(V, energy, grid))
                             for energy in (E - dE, E, E + dE))
    t = (upper.S0 - lower.S0) / (2 * dE)

    window = grid.central_slice()
    q, t, p = grid.points[window], t[window], central.S0_prime[window]
    run = _resolved_run(t, E - V.values(q))
    if run.stop - run.start < len(t):
        logger.debug(f"trajectory at E = {E:.6g}: t unresolved outside [{q[run.start]:.6g}, {q[run.stop - 1]:.6g}]")
    q, t, p = q[run], t[run], p[run]
    trajectory = Trajectory(t - t[0], q, p, E)
    logger.debug(f"trajectory at E = {E:.6g}: {len(t)} samples, t spans {trajectory.t[-1]:.6g}")
    return trajectory


def _central_allowed_region(V: Potential, E: float, q: np.ndarray) -> np.ndarray:
    """Points where E - V is at least half its maximum over the grid."""
    kinetic = E - V.values(q)
    return kinetic >= 0.5 * kinetic.max()


def classical_limit_scan(V: Potential, E: float, hbar_sequence, grid: RealGrid | None = None) -> list[ClassicalLimitRow]:
    """sup |Q| and the distance of S0' to the classical momentum, one row per hbar.

    Everything is measured on the central allowed region, where E - V is at
    least half its maximum on the grid.
    """
    rows = []
    for hbar in hbar_sequence:
        potential = V.with_hbar(hbar)
        scan_grid = grid or potential.default_grid()
        q = scan_grid.points
        if np.max(E - potential.values(q)) <= 0:
            raise ValueError(f"E = {E} is below the potential everywhere on the grid")

        S = reduced_action_from_pair(solution_pair(potential, E, scan_grid))
        Q = quantum_potential(S)
        region = _central_allowed_region(potential, E, q)
        region[:Q.start] = False
        region[Q.stop:] = False

        p_classical = np.sqrt(2 * potential.mass * (E - potential.values(q[region])))
        gap = np.abs(np.abs(S.S0_prime[region]) - p_classical)
        row = ClassicalLimitRow(
            hbar=float(hbar),
            sup_quantum_potential=float(np.max(np.abs(Q.values[region[Q.start:Q.stop]]))),
            max_momentum_gap=float(gap.max()),
            min_momentum_gap=float(gap.min()),
            min_abs_momentum=float(np.min(np.abs(S.S0_prime))),
        )
        logger.debug(f"hbar = {hbar:.4g}: sup|Q| = {row.sup_quantum_potential:.4g}, "
                     f"max|p - p_cl| = {row.max_momentum_gap:.4g}")
        rows.append(row)
    return rows
