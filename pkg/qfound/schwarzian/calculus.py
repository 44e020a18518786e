import numpy as np

from qfound.core.errors import DerivativeVanishes, InvalidGrid, NonMonotoneMap, PoleOnGrid

from .models import InteriorSamples, MoebiusMap, RealGrid, SampledFunction, TransformedW
from .stencils import derivative_stack

VANISHING_RATIO = 1e-12
POLE_RATIO = 1e-12


def _interior_derivatives(f: SampledFunction):
    d1, d2, d3, margin = derivative_stack(f)
    start, stop = margin, f.grid.n_points - margin
    return d1[start:stop], d2[start:stop], d3[start:stop], start, stop


def _guard_derivative(d1: np.ndarray, grid: RealGrid, start: int, ratio: float = VANISHING_RATIO) -> None:
    modulus = np.abs(d1)
    scale = modulus.max()
    small = (modulus <= ratio * scale) if ratio else (modulus == 0)
    if scale == 0 or small.any():
        index = start + int(np.argmax(small)) if scale else start
        raise DerivativeVanishes(f"f' vanishes near q = {grid.points[index]:.6g}; Schwarzian undefined there")


def _require_monotone(d1: np.ndarray, name: str) -> None:
    if np.iscomplexobj(d1) and np.abs(d1.imag).max() > 1e-12 * np.abs(d1).max():
        raise NonMonotoneMap(f"{name} is not a real coordinate map")
    slope = d1.real
    if not (np.all(slope > 0) or np.all(slope < 0)):
        raise NonMonotoneMap(f"{name} is not strictly monotone: its derivative changes sign or vanishes")


def _schwarzian_from(d1, d2, d3):
    ratio = d2 / d1
    return d3 / d1 - 1.5 * ratio**2


def schwarzian(f: SampledFunction, vanishing_ratio: float = VANISHING_RATIO) -> InteriorSamples:
    """{f, x} = f'''/f' - (3/2)(f''/f')^2 on the points where every derivative is known."""
    d1, d2, d3, start, stop = _interior_derivatives(f)
    _guard_derivative(d1, f.grid, start, vanishing_ratio)
    return InteriorSamples(f.grid, start, stop, _schwarzian_from(d1, d2, d3))


def apply_moebius(m: MoebiusMap, f: SampledFunction) -> SampledFunction:
    """Pointwise (A f + B)/(C f + D); supplied derivatives follow by the chain rule."""
    denominator = m.C * f.values + m.D
    reach = np.abs(m.C * f.values) + abs(m.D)
    if np.any(np.abs(denominator) <= POLE_RATIO * max(reach.max(), 1.0)):
        raise PoleOnGrid(f"C f + D vanishes on the grid for {m}")

    det = m.determinant
    values = (m.A * f.values + m.B) / denominator
    d1 = d2 = d3 = None
    if f.d1 is not None:
        d1 = det * f.d1 / denominator**2
        if f.d2 is not None:
            d2 = det * (f.d2 / denominator**2 - 2 * m.C * f.d1**2 / denominator**3)
            if f.d3 is not None:
                d3 = det * (f.d3 / denominator**2
                            - 6 * m.C * f.d1 * f.d2 / denominator**3
                            + 6 * m.C**2 * f.d1**3 / denominator**4)
    return SampledFunction(f.grid, values, d1, d2, d3)


def moebius_invariance_deviation(f: SampledFunction, m: MoebiusMap) -> float:
    return schwarzian(apply_moebius(m, f)).sup_distance(schwarzian(f))


def affine_invariance_deviation(f: SampledFunction, a: complex, b: complex) -> float:
    """sup |{a f + b, x} - {f, x}|; the affine maps are the Moebius maps with C = 0."""
    return moebius_invariance_deviation(f, MoebiusMap(a, b, 0, 1))


def _same_grid(*grids: RealGrid) -> None:
    if any(grid != grids[0] for grid in grids):
        raise InvalidGrid("coordinate maps must be sampled over the same base grid")


def cocycle_deviation(qA: SampledFunction, qB_grid: RealGrid, qC: SampledFunction, *,
                      xi: float, mass: float) -> float:
    """Compare (qA; qC) with (dqB/dqC)^2 [(qA; qB) - (qC; qB)], where (x; y) = -(xi^2/4m){x, y}.

    Both maps are sampled over the base coordinate qB. The left side is built
    independently by re-expressing the derivatives of qA with respect to qC.
    """
    _same_grid(qB_grid, qA.grid, qC.grid)
    A1, A2, A3, a_start, a_stop = _interior_derivatives(qA)
    C1, C2, C3, c_start, c_stop = _interior_derivatives(qC)
    start, stop = max(a_start, c_start), min(a_stop, c_stop)
    A1, A2, A3 = (d[start - a_start:stop - a_start] for d in (A1, A2, A3))
    C1, C2, C3 = (d[start - c_start:stop - c_start] for d in (C1, C2, C3))
    _require_monotone(A1, 'qA')
    _require_monotone(C1, 'qC')

    k = xi**2 / (4 * mass)
    right = (1 / C1)**2 * (-k * _schwarzian_from(A1, A2, A3) + k * _schwarzian_from(C1, C2, C3))

    a1 = A1 / C1
    a2 = (A2 * C1 - A1 * C2) / C1**3
    a3 = (A3 / C1**2 - 3 * A2 * C2 / C1**3 - A1 * C3 / C1**3 + 3 * A1 * C2**2 / C1**4) / C1
    left = -k * _schwarzian_from(a1, a2, a3)
    return float(np.max(np.abs(left - right)))


def inhomogeneous_term(coordinate_map: SampledFunction, *, xi: float, mass: float) -> InteriorSamples:
    """(q; q') = -(xi^2/4m){q, q'} for q' = coordinate_map(q).

    Uses the inverse-function rule {q, q'} = -{q', q} / (dq'/dq)^2.
    """
    d1, d2, d3, start, stop = _interior_derivatives(coordinate_map)
    _require_monotone(d1, 'coordinate map')
    k = xi**2 / (4 * mass)
    return InteriorSamples(coordinate_map.grid, start, stop, k * _schwarzian_from(d1, d2, d3) / d1**2)


def transform_W(W: SampledFunction, coordinate_map: SampledFunction, *, xi: float, mass: float,
                include_inhomogeneous: bool = True) -> TransformedW:
    """W'(q') = (dq/dq')^2 W(q) + (q; q').

    Without the inhomogeneous term this is the quadratic-differential law that
    keeps W = 0 fixed; with it, W = 0 is mapped to (q; q').
    """
    _same_grid(W.grid, coordinate_map.grid)
    term = inhomogeneous_term(coordinate_map, xi=xi, mass=mass)
    slope = coordinate_map.d1 if coordinate_map.d1 is not None else derivative_stack(coordinate_map)[0]
    slope = slope[term.start:term.stop]
    values = W.values[term.start:term.stop] / slope**2
    if include_inhomogeneous:
        values = values + term.values
    return TransformedW(W.grid, term.start, term.stop, values,
                        q_prime=coordinate_map.values[term.start:term.stop])
