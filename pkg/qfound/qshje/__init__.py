from .models import ReducedAction, Trajectory, ClassicalLimitRow
from .action import (reduced_action_from_pair, quantum_potential, residual_samples, qshje_residual,
                     bipolar_reconstruct, phase_consistency_deviation, reconstruct_w)
from .trajectory import floyd_trajectory, classical_limit_scan
from .export import action_table, trajectory_rows, ACTION_COLUMNS, TRAJECTORY_COLUMNS
