import asyncio

import numpy as np
from pydantic import BaseModel

from qfound.core import RunConfig
from qfound.core.errors import InvariantFailure
from qfound.logger import logger
from qfound.utils import emit_json, with_run_config

from .suites import SUITES, SuiteResult


class AuditReport(BaseModel):
    passed: bool
    seed: int
    suites: dict[str, SuiteResult]


def suite_rng(seed: int, name: str) -> np.random.Generator:
    """Each suite draws from its own stream, so results do not depend on which suites run together."""
    return np.random.default_rng([seed, list(SUITES).index(name)])


async def run_suites(names: list[str], run_config: RunConfig) -> AuditReport:
    results = await asyncio.gather(*(
        asyncio.to_thread(SUITES[name], suite_rng(run_config.seed, name), run_config.tolerances)
        for name in names))
    suites = {result.name: result for result in results}
    return AuditReport(passed=all(r.passed for r in results), seed=run_config.seed, suites=suites)


@with_run_config
async def audit(args, run_config: RunConfig) -> int:
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    report = await run_suites(names, run_config)
    emit_json(report.model_dump_json(indent=2), run_config)

    for name, suite in report.suites.items():
        failed = [key for key, check in suite.checks.items() if not check.passed]
        if failed:
            logger.warning(f"audit {name}: failed {', '.join(failed)}")
        else:
            logger.info(f"audit {name}: {len(suite.checks)} checks passed")
    if not report.passed:
        raise InvariantFailure(f"audit {args.suite} failed")
    return 0


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser('audit', parents=parents, help='check the invariants of one suite or all')
    parser.add_argument('suite', choices=[*SUITES, 'all'])
    parser.set_defaults(handler=audit, format='json')
