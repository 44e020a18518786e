from qfound.core import RunConfig
from qfound.logger import logger
from qfound.qshje import TRAJECTORY_COLUMNS, floyd_trajectory, qshje_residual, reduced_action_from_pair, trajectory_rows
from qfound.schrodinger1d import solution_pair
from qfound.utils import emit_rows, parse_potential, resolve_grid, with_run_config


@with_run_config
async def trajectory(args, run_config: RunConfig) -> int:
    potential = parse_potential(args.potential, run_config)
    grid = resolve_grid(potential, run_config)
    path = floyd_trajectory(potential, args.energy, grid, args.de)
    residual = qshje_residual(reduced_action_from_pair(solution_pair(potential, args.energy, grid)), potential)

    emit_rows(trajectory_rows(path), TRAJECTORY_COLUMNS, run_config)
    logger.info(f"trajectory: {len(path.t)} samples at E = {args.energy:g}, QSHJE residual {residual:.3e} "
                f"({'ok' if residual < run_config.tolerances.residual else 'above tolerance'})")
    return 0


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser('trajectory', parents=parents, help='Floyd trajectory t(q) = dS0/dE')
    parser.add_argument('--potential', required=True)
    parser.add_argument('--energy', type=float, required=True)
    parser.add_argument('--de', type=float, default=None, help='energy step of the central difference')
    parser.set_defaults(handler=trajectory)
