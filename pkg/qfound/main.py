import argparse
import asyncio
import sys
from pathlib import Path

from qfound.core import config
from qfound.handlers import action, audit, spectrum, trajectory
from qfound.logger import logger


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1, not argparse's 2, which is reserved for empty results."""

    def error(self, message):
        self.print_usage(sys.stderr)
        logger.error(message)
        raise SystemExit(1)


def common_options() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument('--hbar', type=float, default=config.units.hbar)
    parser.add_argument('--mass', type=float, default=config.units.mass)
    parser.add_argument('--grid', default=None, help='QMIN:QMAX:N; write --grid=-4:4:801 when QMIN is negative')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--format', choices=['csv', 'json'], default='csv')
    parser.add_argument('--out', type=Path, default=None, help='write data here instead of stdout')
    parser.add_argument('--tol-override', action='append', default=None, metavar='NAME=VALUE')
    return parser


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='qfound', description='QSHJE numerics and SAQM checks')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for module in (spectrum, trajectory, action, audit):
        module.register(subparsers, [common_options()])
    return parser


async def main(args: argparse.Namespace) -> int:
    logger.debug(f"running {args.command}")
    return await args.handler(args)


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    return asyncio.run(main(args))


if __name__ == '__main__':
    sys.exit(run())
