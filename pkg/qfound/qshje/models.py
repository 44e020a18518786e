from dataclasses import dataclass, replace

import numpy as np

from qfound.core.errors import InvalidState, NonMonotoneTime
from qfound.schwarzian import RealGrid


@dataclass(frozen=True, eq=False)
class ReducedAction:
    """S0 on a grid with p = dS0/dq.

    `S0_second` and `S0_third` are exact higher derivatives when the action
    was built from a solution pair; they are None for actions given only by
    samples.
    """

    grid: RealGrid
    S0: np.ndarray
    S0_prime: np.ndarray
    energy: float
    hbar: float
    mass: float
    wronskian: float = 0.0
    S0_second: np.ndarray | None = None
    S0_third: np.ndarray | None = None

    def __post_init__(self):
        n = self.grid.n_points
        if np.shape(self.S0) != (n,) or np.shape(self.S0_prime) != (n,):
            raise InvalidState("S0 and S0_prime must have one sample per grid point")
        if not np.all(np.abs(self.S0_prime) > 0):
            raise InvalidState("S0_prime vanishes on the grid; a reduced action is never constant")

    def rescaled(self, a: float, b: float = 0.0) -> "ReducedAction":
        """a S0 + b with every stored derivative scaled along."""
        scale = (lambda d: None if d is None else a * d)
        return replace(self, S0=a * self.S0 + b, S0_prime=a * self.S0_prime,
                       S0_second=scale(self.S0_second), S0_third=scale(self.S0_third))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Samples (t, q, p) ordered along q; t is strictly monotone."""

    t: np.ndarray
    q: np.ndarray
    p: np.ndarray
    energy: float

    def __post_init__(self):
        if not len(self.t) == len(self.q) == len(self.p):
            raise InvalidState("trajectory columns differ in length")
        steps = np.diff(self.t)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            worst = int(np.argmin(steps * np.sign(np.sum(steps))))
            raise NonMonotoneTime(f"t(q) is not strictly monotone near q = {self.q[worst]:.6g}")

    @property
    def samples(self) -> list[tuple[float, float, float]]:
        return list(zip(self.t.tolist(), self.q.tolist(), self.p.tolist()))


@dataclass(frozen=True)
class ClassicalLimitRow:
    hbar: float
    sup_quantum_potential: float
    max_momentum_gap: float
    min_momentum_gap: float
    min_abs_momentum: float
