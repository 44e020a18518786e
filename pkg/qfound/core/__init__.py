from .config import config, load_config, RunConfig, GridSpec, Tolerances
from . import errors
