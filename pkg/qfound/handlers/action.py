from qfound.core import RunConfig
from qfound.logger import logger
from qfound.qshje import ACTION_COLUMNS, action_table, qshje_residual, reduced_action_from_pair
from qfound.schrodinger1d import solution_pair
from qfound.utils import emit_rows, parse_potential, resolve_grid, with_run_config


@with_run_config
async def action(args, run_config: RunConfig) -> int:
    potential = parse_potential(args.potential, run_config)
    grid = resolve_grid(potential, run_config)
    S = reduced_action_from_pair(solution_pair(potential, args.energy, grid))

    emit_rows(action_table(S, potential), ACTION_COLUMNS, run_config)
    logger.info(f"action: E = {args.energy:g}, QSHJE residual {qshje_residual(S, potential):.3e}, "
                f"min p = {S.S0_prime.min():.3e}")
    return 0


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser('action', parents=parents, help='reduced action, momentum and quantum potential')
    parser.add_argument('--potential', required=True)
    parser.add_argument('--energy', type=float, required=True)
    parser.set_defaults(handler=action)
