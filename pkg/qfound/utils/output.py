"""Data goes to --out or stdout, never through the logger."""
import csv
import io
import json
import sys
from collections.abc import Sequence

from qfound.core import RunConfig


def _write(text: str, run_config: RunConfig) -> None:
    if run_config.output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        run_config.output_path.write_text(text, encoding='utf-8')


def emit_rows(rows: Sequence[dict], columns: Sequence[str], run_config: RunConfig) -> None:
    if run_config.output_format == 'json':
        _write(json.dumps(list(rows), indent=2) + '\n', run_config)
        return
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    _write(buffer.getvalue(), run_config)


def emit_json(text: str, run_config: RunConfig) -> None:
    _write(text.rstrip('\n') + '\n', run_config)
