import csv
from pathlib import Path

import numpy as np

from qfound.core.errors import InvalidPotentialSpec, InvalidState
from qfound.logger import logger

from .models import Potential


def _parse_row(row: list[str]) -> tuple[float, float]:
    if len(row) != 2:
        raise ValueError(f"{len(row)} columns, expected 2")
    return float(row[0]), float(row[1])


def load_tabulated_potential(path: str | Path, mass: float = 1.0, hbar: float = 1.0) -> Potential:
    """Read a two-column CSV of (q, V) rows.

    A non-numeric first line is taken as the header. Blank lines and lines
    starting with '#' are ignored; any other unparsable line is an error.
    """
    path = Path(path)
    if not path.is_file():
        raise InvalidPotentialSpec(f"potential table {path} does not exist")

    rows = []
    with open(path, newline='', encoding='utf-8') as f:
        for line_number, row in enumerate(csv.reader(f), start=1):
            if not row or not ''.join(row).strip() or row[0].lstrip().startswith('#'):
                continue
            try:
                rows.append(_parse_row(row))
            except ValueError as e:
                if line_number == 1:
                    continue
                raise InvalidPotentialSpec(f"potential table {path}, line {line_number}: {e}") from e

    logger.debug(f"loaded {len(rows)} rows from {path}")
    table = np.array(rows, dtype=float).reshape(-1, 2)
    try:
        return Potential.tabulated(table[:, 0], table[:, 1], mass=mass, hbar=hbar)
    except InvalidState as e:
        raise InvalidPotentialSpec(f"potential table {path}: {e}") from e
