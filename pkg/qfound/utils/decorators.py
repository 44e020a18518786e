from argparse import Namespace
from functools import wraps

from qfound.core import GridSpec, RunConfig, Tolerances
from qfound.core.errors import QFoundError
from qfound.logger import logger


def _split(text: str, sep: str, count: int, flag: str) -> list[str]:
    parts = text.split(sep)
    if len(parts) != count:
        raise ValueError(f"{flag} expects {count} fields separated by '{sep}', got {text!r}")
    return parts


def parse_grid(text: str | None) -> GridSpec | None:
    if text is None:
        return None
    q_min, q_max, n = _split(text, ':', 3, '--grid')
    return GridSpec(q_min=float(q_min), q_max=float(q_max), n_points=int(n))


def parse_overrides(items: list[str] | None) -> dict[str, float]:
    overrides = {}
    for item in items or []:
        name, value = _split(item, '=', 2, '--tol-override')
        overrides[name.strip()] = float(value)
    return overrides


def run_config_from_args(args: Namespace) -> RunConfig:
    return RunConfig(
        hbar=args.hbar,
        mass=args.mass,
        grid=parse_grid(args.grid),
        output_format=args.format,
        output_path=args.out,
        seed=args.seed,
        tolerances=Tolerances().with_overrides(parse_overrides(args.tol_override)),
    )


def with_run_config(func):
    """Inject the validated RunConfig and turn failures into exit codes."""
    @wraps(func)
    async def wrapper(args: Namespace) -> int:
        try:
            run_config = run_config_from_args(args)
            return await func(args, run_config=run_config)
        except QFoundError as e:
            logger.error(f"{args.command}: {e}")
            return e.exit_code
        except ValueError as e:
            logger.error(f"{args.command}: invalid input: {e}")
            return 1
    return wrapper
