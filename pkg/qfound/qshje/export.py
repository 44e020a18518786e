import numpy as np

from qfound.schrodinger1d import Potential

from .action import quantum_potential, residual_samples
from .models import ReducedAction, Trajectory

ACTION_COLUMNS = ('q', 'S0', 'p', 'Q', 'residual')
TRAJECTORY_COLUMNS = ('t', 'q', 'p')


def action_table(S: ReducedAction, V: Potential) -> list[dict[str, float]]:
    """Rows (q, S0, p, Q, residual) over the central 90% of the grid."""
    Q = quantum_potential(S)
    residual = residual_samples(S, V)
    central = S.grid.central_slice()
    start, stop = max(central.start, residual.start), min(central.stop, residual.stop)

    columns = np.column_stack([S.grid.points[start:stop], S.S0[start:stop], S.S0_prime[start:stop],
                               Q.restricted(start, stop), residual.restricted(start, stop)])
    return [dict(zip(ACTION_COLUMNS, row)) for row in columns.tolist()]


def trajectory_rows(T: Trajectory) -> list[dict[str, float]]:
    return [dict(zip(TRAJECTORY_COLUMNS, sample)) for sample in T.samples]
