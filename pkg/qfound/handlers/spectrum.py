from qfound.core import RunConfig
from qfound.logger import logger
from qfound.schrodinger1d import find_eigenvalues
from qfound.utils import emit_rows, parse_potential, resolve_grid, with_run_config

COLUMNS = ('n', 'energy', 'nodes')


def parse_range(text: str) -> tuple[float, float]:
    low, sep, high = text.partition(':')
    if not sep:
        raise ValueError(f"--range expects LOW:HIGH, got {text!r}")
    low, high = float(low), float(high)
    if not low < high:
        raise ValueError(f"--range needs LOW < HIGH, got {text!r}")
    return low, high


@with_run_config
async def spectrum(args, run_config: RunConfig) -> int:
    potential = parse_potential(args.potential, run_config)
    grid = resolve_grid(potential, run_config)
    result = find_eigenvalues(potential, parse_range(args.range), args.count, grid)

    rows = [{'n': n, 'energy': energy, 'nodes': nodes}
            for n, (energy, nodes) in enumerate(zip(result.energies, result.node_counts))]
    emit_rows(rows, COLUMNS, run_config)
    logger.info(f"spectrum: {len(result)} level(s) of {args.potential} in [{args.range}]")
    return 0


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser('spectrum', parents=parents, help='bound-state energies in a range')
    parser.add_argument('--potential', required=True, help='harmonic[:m=..,w=..] | well:L=.. | linear:a=.. | free | table:PATH')
    parser.add_argument('--range', required=True, help='energy window LOW:HIGH')
    parser.add_argument('--count', type=int, default=10, help='maximum number of levels')
    parser.set_defaults(handler=spectrum)
