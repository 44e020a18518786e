from dataclasses import dataclass, field

import numpy as np

from qfound.core.errors import DegenerateMoebius, GridTooSmall, InvalidGrid, InvalidState

MIN_POINTS = 9


@dataclass(frozen=True)
class RealGrid:
    """Uniform discretization of a real coordinate."""

    q_min: float
    q_max: float
    n_points: int

    def __post_init__(self):
        if not self.q_min < self.q_max:
            raise InvalidGrid(f"grid requires q_min < q_max, got [{self.q_min}, {self.q_max}]")
        if self.n_points < MIN_POINTS:
            raise GridTooSmall(f"grid needs at least {MIN_POINTS} points, got {self.n_points}")

    @property
    def spacing(self) -> float:
        return (self.q_max - self.q_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.n_points)

    def index_of(self, q: float) -> int:
        """Index of the grid point nearest to q."""
        return int(np.clip(round((q - self.q_min) / self.spacing), 0, self.n_points - 1))

    def central_slice(self, edge_fraction: float = 0.05) -> slice:
        cut = int(np.ceil(edge_fraction * self.n_points))
        return slice(cut, self.n_points - cut)


def _as_samples(values, grid: RealGrid, name: str) -> np.ndarray:
    array = np.asarray(values)
    if array.dtype.kind not in 'fc':
        array = array.astype(float)
    if array.shape != (grid.n_points,):
        raise InvalidState(f"{name} has shape {array.shape}, grid has {grid.n_points} points")
    return array


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Samples of f on a grid, optionally with caller-supplied f', f'', f'''.

    Missing derivatives are produced by centered finite differences, see
    `qfound.schwarzian.stencils.derivative_stack`.
    """

    grid: RealGrid
    values: np.ndarray
    d1: np.ndarray | None = None
    d2: np.ndarray | None = None
    d3: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, 'values', _as_samples(self.values, self.grid, 'values'))
        for name in ('d1', 'd2', 'd3'):
            samples = getattr(self, name)
            if samples is not None:
                object.__setattr__(self, name, _as_samples(samples, self.grid, name))

    @classmethod
    def from_callables(cls, grid: RealGrid, f, *derivatives) -> "SampledFunction":
        q = grid.points
        return cls(grid, f(q), *(d(q) for d in derivatives))


@dataclass(frozen=True, eq=False)
class InteriorSamples:
    """Samples reported only on grid indices [start, stop); nothing is padded."""

    grid: RealGrid
    start: int
    stop: int
    values: np.ndarray

    @property
    def points(self) -> np.ndarray:
        return self.grid.points[self.start:self.stop]

    def restricted(self, start: int, stop: int) -> np.ndarray:
        if start < self.start or stop > self.stop:
            raise InvalidState(f"[{start}, {stop}) is outside the sampled domain [{self.start}, {self.stop})")
        return self.values[start - self.start:stop - self.start]

    def sup_distance(self, other: "InteriorSamples") -> float:
        start, stop = max(self.start, other.start), min(self.stop, other.stop)
        return float(np.max(np.abs(self.restricted(start, stop) - other.restricted(start, stop))))


@dataclass(frozen=True, eq=False)
class TransformedW(InteriorSamples):
    """W' sampled at the images q' = q'(q) of the interior grid points."""

    q_prime: np.ndarray = field(default_factory=lambda: np.empty(0))


@dataclass(frozen=True)
class MoebiusMap:
    """q -> (A q + B) / (C q + D)."""

    A: complex
    B: complex
    C: complex
    D: complex

    def __post_init__(self):
        if abs(self.determinant) == 0:
            raise DegenerateMoebius(f"AD - BC vanishes for {self}")

    @classmethod
    def from_matrix(cls, matrix) -> "MoebiusMap":
        (a, b), (c, d) = np.asarray(matrix)
        return cls(a, b, c, d)

    @property
    def determinant(self) -> complex:
        return self.A * self.D - self.B * self.C

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.A, self.B], [self.C, self.D]], dtype=complex)

    def compose(self, inner: "MoebiusMap") -> "MoebiusMap":
        """self ∘ inner."""
        return MoebiusMap.from_matrix(self.matrix @ inner.matrix)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.D, -self.B, -self.C, self.A)

    def __call__(self, z):
        return (self.A * z + self.B) / (self.C * z + self.D)
