from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np
from scipy.interpolate import CubicSpline

from qfound.core.errors import InvalidGrid, InvalidState
from qfound.schwarzian import RealGrid

PotentialKind = Literal['harmonic', 'infinite_well', 'linear', 'tabulated', 'free']
Side = Literal['left', 'right']


@dataclass(frozen=True, eq=False)
class Potential:
    """V(q) of the stationary equation (-hbar^2/2m d^2/dq^2 + V) psi = E psi.

    Hard walls are boundary conditions, never large finite values:
    `infinite_well` has walls at 0 and `length`, `linear` is slope * q with a
    wall at q = 0.
    """

    kind: PotentialKind
    hbar: float = 1.0
    mass: float = 1.0
    omega: float = 1.0
    length: float = 1.0
    slope: float = 1.0
    table_q: np.ndarray | None = None
    table_v: np.ndarray | None = None
    _spline: CubicSpline | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.hbar <= 0 or self.mass <= 0:
            raise InvalidState("hbar and mass must be positive")
        if self.kind == 'harmonic' and self.omega <= 0:
            raise InvalidState("harmonic potential needs omega > 0")
        if self.kind == 'infinite_well' and self.length <= 0:
            raise InvalidState("infinite well needs L > 0")
        if self.kind == 'linear' and self.slope <= 0:
            raise InvalidState("linear potential needs a positive slope")
        if self.kind == 'tabulated':
            q = np.asarray(self.table_q, dtype=float)
            v = np.asarray(self.table_v, dtype=float)
            if q.ndim != 1 or q.shape != v.shape or q.size < 4:
                raise InvalidState("tabulated potential needs two equal columns of at least 4 rows")
            if not np.all(np.isfinite(v)) or not np.all(np.isfinite(q)):
                raise InvalidState("tabulated potential values must be finite")
            if not np.all(np.diff(q) > 0):
                raise InvalidState("tabulated q column must be strictly increasing")
            object.__setattr__(self, 'table_q', q)
            object.__setattr__(self, 'table_v', v)
            object.__setattr__(self, '_spline', CubicSpline(q, v, extrapolate=False))

    @classmethod
    def harmonic(cls, mass: float = 1.0, omega: float = 1.0, hbar: float = 1.0) -> "Potential":
        return cls('harmonic', hbar=hbar, mass=mass, omega=omega)

    @classmethod
    def infinite_well(cls, length: float = 1.0, mass: float = 1.0, hbar: float = 1.0) -> "Potential":
        return cls('infinite_well', hbar=hbar, mass=mass, length=length)

    @classmethod
    def linear(cls, slope: float = 1.0, mass: float = 1.0, hbar: float = 1.0) -> "Potential":
        return cls('linear', hbar=hbar, mass=mass, slope=slope)

    @classmethod
    def free(cls, mass: float = 1.0, hbar: float = 1.0) -> "Potential":
        return cls('free', hbar=hbar, mass=mass)

    @classmethod
    def tabulated(cls, q, values, mass: float = 1.0, hbar: float = 1.0) -> "Potential":
        return cls('tabulated', hbar=hbar, mass=mass, table_q=q, table_v=values)

    def with_hbar(self, hbar: float) -> "Potential":
        return replace(self, hbar=hbar)

    def values(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        match self.kind:
            case 'harmonic':
                return 0.5 * self.mass * self.omega**2 * q**2
            case 'linear':
                return self.slope * q
            case 'tabulated':
                v = self._spline(q)
                if np.any(np.isnan(v)):
                    raise InvalidGrid("grid leaves the range of the tabulated potential")
                return v
            case _:
                return np.zeros_like(q)

    def wave_number_squared(self, energy: float, q) -> np.ndarray:
        """g(q) = 2m(E - V(q))/hbar^2, so that psi'' = -g psi."""
        return 2 * self.mass * (energy - self.values(q)) / self.hbar**2

    def has_wall(self, side: Side) -> bool:
        if self.kind == 'infinite_well':
            return True
        return self.kind == 'linear' and side == 'left'

    def default_grid(self, n_points: int = 4001) -> RealGrid:
        match self.kind:
            case 'harmonic':
                scale = np.sqrt(self.hbar / (self.mass * self.omega))
                return RealGrid(-10 * scale, 10 * scale, n_points)
            case 'infinite_well':
                return RealGrid(0.0, self.length, n_points)
            case 'linear':
                scale = (self.hbar**2 / (2 * self.mass * self.slope)) ** (1 / 3)
                return RealGrid(0.0, 25 * scale, n_points)
            case 'tabulated':
                return RealGrid(float(self.table_q[0]), float(self.table_q[-1]), n_points)
            case _:
                return RealGrid(-10.0, 10.0, n_points)

    def validate_grid(self, grid: RealGrid) -> None:
        """Walls must sit exactly on the grid ends."""
        if self.has_wall('left') and abs(grid.q_min) > 1e-12:
            raise InvalidGrid(f"{self.kind} potential needs the grid to start at its wall q = 0")
        if self.kind == 'infinite_well' and abs(grid.q_max - self.length) > 1e-12 * self.length:
            raise InvalidGrid(f"infinite well needs the grid to end at its wall q = {self.length}")
        if self.kind == 'tabulated':
            self.values(np.array([grid.q_min, grid.q_max]))

    def continuum_threshold(self, grid: RealGrid) -> float:
        """Lowest energy at which some open grid end stops being classically forbidden."""
        ends = [q for q, side in ((grid.q_min, 'left'), (grid.q_max, 'right')) if not self.has_wall(side)]
        if not ends:
            return np.inf
        return float(np.min(self.values(np.array(ends))))


@dataclass(frozen=True, eq=False)
class Wavefunction:
    grid: RealGrid
    values: np.ndarray
    energy: float

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.shape != (self.grid.n_points,):
            raise InvalidState(f"wavefunction has {values.shape} samples for {self.grid.n_points} grid points")
        if not np.any(values):
            raise InvalidState("wavefunction is identically zero")
        object.__setattr__(self, 'values', values)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values)**2) * self.grid.spacing))


@dataclass(frozen=True, eq=False)
class SolutionPair:
    """Two real, linearly independent solutions at one energy.

    `wronskian` is u v' - v u'; solution_pair scales it to hbar.
    """

    u: Wavefunction
    v: Wavefunction
    wronskian: float
    potential: Potential
    u_prime: np.ndarray | None = None
    v_prime: np.ndarray | None = None

    def __post_init__(self):
        if self.u.grid != self.v.grid or self.u.energy != self.v.energy:
            raise InvalidState("pair members must share grid and energy")

    @property
    def grid(self) -> RealGrid:
        return self.u.grid

    @property
    def energy(self) -> float:
        return self.u.energy

    def local_wronskian(self) -> np.ndarray:
        if self.u_prime is None or self.v_prime is None:
            raise InvalidState("pair was built without derivatives")
        return self.u.values * self.v_prime - self.v.values * self.u_prime


@dataclass(frozen=True, eq=False)
class EigenResult:
    energies: tuple[float, ...]
    node_counts: tuple[int, ...]
    wavefunctions: tuple[Wavefunction, ...]

    def __post_init__(self):
        if not len(self.energies) == len(self.node_counts) == len(self.wavefunctions):
            raise InvalidState("eigen result lists differ in length")
        if any(b <= a for a, b in zip(self.energies, self.energies[1:])):
            raise InvalidState("eigenvalues must be strictly increasing")

    def __len__(self) -> int:
        return len(self.energies)
