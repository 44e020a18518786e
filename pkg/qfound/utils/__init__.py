from .decorators import with_run_config, run_config_from_args
from .potential_spec import parse_potential, resolve_grid
from .output import emit_rows, emit_json
