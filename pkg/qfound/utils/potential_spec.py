"""The --potential mini-grammar: harmonic[:m=..,w=..], well:L=..[,m=..], linear:a=..[,m=..], free, table:PATH."""
from qfound.core import RunConfig
from qfound.core.errors import InvalidPotentialSpec
from qfound.schrodinger1d import Potential, load_tabulated_potential
from qfound.schwarzian import RealGrid

KNOWN_PARAMETERS = {
    'harmonic': {'m', 'w'},
    'well': {'m', 'L'},
    'linear': {'m', 'a'},
    'free': {'m'},
}


def _parameters(kind: str, text: str) -> dict[str, float]:
    parameters = {}
    for item in filter(None, (part.strip() for part in text.split(','))):
        name, sep, value = item.partition('=')
        if not sep:
            raise InvalidPotentialSpec(f"expected NAME=VALUE in potential spec, got {item!r}")
        if name not in KNOWN_PARAMETERS[kind]:
            raise InvalidPotentialSpec(f"{kind} potential takes {sorted(KNOWN_PARAMETERS[kind])}, got {name!r}")
        try:
            parameters[name] = float(value)
        except ValueError as e:
            raise InvalidPotentialSpec(f"{name} must be a number, got {value!r}") from e
    return parameters


def parse_potential(spec: str, run_config: RunConfig) -> Potential:
    kind, _, rest = spec.strip().partition(':')
    if kind == 'table':
        if not rest:
            raise InvalidPotentialSpec("table potential needs a path: table:PATH")
        return load_tabulated_potential(rest, mass=run_config.mass, hbar=run_config.hbar)
    if kind not in KNOWN_PARAMETERS:
        raise InvalidPotentialSpec(f"unknown potential {kind!r}; use harmonic, well, linear, free or table")

    parameters = _parameters(kind, rest)
    mass = parameters.get('m', run_config.mass)
    try:
        match kind:
            case 'harmonic':
                return Potential.harmonic(mass=mass, omega=parameters.get('w', run_config.omega), hbar=run_config.hbar)
            case 'well':
                if 'L' not in parameters:
                    raise InvalidPotentialSpec("well potential needs L, e.g. well:L=1")
                return Potential.infinite_well(parameters['L'], mass=mass, hbar=run_config.hbar)
            case 'linear':
                return Potential.linear(parameters.get('a', 1.0), mass=mass, hbar=run_config.hbar)
            case _:
                return Potential.free(mass=mass, hbar=run_config.hbar)
    except ValueError as e:
        raise InvalidPotentialSpec(str(e)) from e


def resolve_grid(potential: Potential, run_config: RunConfig) -> RealGrid:
    """--grid when given, the potential's default grid otherwise."""
    spec = run_config.grid
    if spec is None:
        return potential.default_grid(run_config.n_points)
    return RealGrid(spec.q_min, spec.q_max, spec.n_points)
