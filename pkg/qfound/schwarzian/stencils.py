"""Centered finite-difference stencils on uniform grids.

Each stencil returns an array of the input's length; entries where the stencil
does not fit are NaN and the accompanying margin tells how many points at
each edge are invalid. Truncation error is O(h^2) for all three.
"""
import numpy as np

from .models import SampledFunction


def _blank(y: np.ndarray) -> np.ndarray:
    return np.full(y.shape, np.nan, dtype=np.result_type(y, float))


def first_difference(y: np.ndarray, h: float) -> np.ndarray:
    out = _blank(y)
    out[1:-1] = (y[2:] - y[:-2]) / (2 * h)
    return out


def second_difference(y: np.ndarray, h: float) -> np.ndarray:
    out = _blank(y)
    out[1:-1] = (y[2:] - 2 * y[1:-1] + y[:-2]) / h**2
    return out


def third_difference(y: np.ndarray, h: float) -> np.ndarray:
    out = _blank(y)
    out[2:-2] = (y[4:] - 2 * y[3:-1] + 2 * y[1:-3] - y[:-4]) / (2 * h**3)
    return out


def derivative_stack(f: SampledFunction) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """f', f'', f''' and the edge margin where all of them are defined.

    A missing derivative is differenced from the highest supplied lower one,
    so exact samples are never discarded in favour of a longer stencil.
    """
    h = f.grid.spacing
    margin = 0

    d1 = f.d1
    if d1 is None:
        d1 = first_difference(f.values, h)
        margin = max(margin, 1)

    d2 = f.d2
    if d2 is None:
        d2 = first_difference(f.d1, h) if f.d1 is not None else second_difference(f.values, h)
        margin = max(margin, 1)

    d3 = f.d3
    if d3 is None:
        if f.d2 is not None:
            d3 = first_difference(f.d2, h)
            margin = max(margin, 1)
        elif f.d1 is not None:
            d3 = second_difference(f.d1, h)
            margin = max(margin, 1)
        else:
            d3 = third_difference(f.values, h)
            margin = max(margin, 2)

    return d1, d2, d3, margin
