"""Born rule and the geometry of predictors."""
from collections.abc import Iterable, Sequence

import numpy as np
from scipy.linalg import expm

from qfound.core.errors import DimensionMismatch, InvalidEffect, InvalidState

from .models import DensityMatrix, MeasurementBasis, Predictor

EFFECT_SLACK = 1e-10
PROBABILITY_SLACK = 1e-12


def _check_dimensions(*dimensions: int) -> None:
    if len(set(dimensions)) != 1:
        raise DimensionMismatch(f"dimensions disagree: {dimensions}")


def overlaps(psi: Predictor, basis: MeasurementBasis) -> np.ndarray:
    """<a_k|psi> for every basis vector."""
    _check_dimensions(psi.dimension, basis.dimension)
    return basis.vectors.conj() @ psi.components


def born_probabilities(psi: Predictor, basis: MeasurementBasis) -> np.ndarray:
    return np.abs(overlaps(psi, basis))**2


def exponent_deviation(psi: Predictor, basis: MeasurementBasis, k: float) -> float:
    """|sum_i |<a_i|psi>|^k - 1|; vanishes for every predictor only at k = 2.

    A basis vector gives 0 for any k, so scans must skip near-eigenstates
    (see `is_eigenstate_like`).
    """
    if k <= 0:
        raise ValueError(f"exponent must be positive, got {k}")
    return float(abs(np.sum(np.abs(overlaps(psi, basis))**k) - 1))


def is_eigenstate_like(psi: Predictor, basis: MeasurementBasis, threshold: float = 0.99) -> bool:
    return bool(np.max(born_probabilities(psi, basis)) >= threshold)


def exponent_scan(predictors: Iterable[Predictor], basis: MeasurementBasis, exponents: Sequence[float],
                  threshold: float = 0.99) -> dict[float, tuple[float, float]]:
    """(min, max) of exponent_deviation per exponent over the predictors that are not eigenstate-like."""
    kept = [psi for psi in predictors if not is_eigenstate_like(psi, basis, threshold)]
    if not kept:
        raise InvalidState("every predictor was filtered out as eigenstate-like")
    scan = {}
    for k in exponents:
        deviations = [exponent_deviation(psi, basis, k) for psi in kept]
        scan[k] = (min(deviations), max(deviations))
    return scan


def statistical_distance(psi1: Predictor, psi2: Predictor, basis: MeasurementBasis) -> float:
    """arccos sum_i |<a_i|psi1>||<a_i|psi2>|, in [0, pi/2].

    Evaluated as 2 arcsin(|sqrt(p1) - sqrt(p2)| / 2), which is the same angle
    for normalized probability vectors and stays exact at zero distance.
    """
    root1 = np.abs(overlaps(psi1, basis))
    root2 = np.abs(overlaps(psi2, basis))
    half_chord = np.linalg.norm(root1 - root2) / 2
    if half_chord > np.sqrt(0.5) + PROBABILITY_SLACK:
        raise InvalidState("probability vectors are not normalized")
    return float(2 * np.arcsin(min(half_chord, np.sqrt(0.5))))


def hilbert_angle(psi_a: Predictor, psi_b: Predictor) -> float:
    _check_dimensions(psi_a.dimension, psi_b.dimension)
    return float(np.arccos(min(abs(np.vdot(psi_a.components, psi_b.components)), 1.0)))


def same_ray(psi_a: Predictor, psi_b: Predictor, tolerance: float = 1e-10) -> bool:
    """True when the predictors differ at most by a global phase."""
    _check_dimensions(psi_a.dimension, psi_b.dimension)
    return abs(abs(np.vdot(psi_a.components, psi_b.components)) - 1) <= tolerance


def reverse_amplitude(a: complex) -> complex:
    """Amplitude of the reversed transition; the conjugate branch."""
    return complex(a).conjugate()


def trace_probability(rho: DensityMatrix, effect) -> float:
    """tr(rho E) for an effect 0 <= E <= 1."""
    effect = np.asarray(effect, dtype=complex)
    if effect.shape != rho.entries.shape:
        raise DimensionMismatch(f"effect of shape {effect.shape} for a {rho.dimension}-dimensional state")
    if np.max(np.abs(effect - effect.conj().T)) > PROBABILITY_SLACK:
        raise InvalidEffect("effect is not Hermitian")
    eigenvalues = np.linalg.eigvalsh(effect)
    if eigenvalues[0] < -EFFECT_SLACK or eigenvalues[-1] > 1 + EFFECT_SLACK:
        raise InvalidEffect(f"effect eigenvalues must lie in [0, 1], got [{eigenvalues[0]:.6g}, {eigenvalues[-1]:.6g}]")
    return float(np.clip(np.trace(rho.entries @ effect).real, 0.0, 1.0))


def continuous_path(psi_a: Predictor, psi_b: Predictor, steps: int) -> list[Predictor]:
    """steps + 1 predictors along the geodesic from psi_a to the ray of psi_b.

    One unitary U = exp(K / steps) is applied repeatedly, where K rotates psi_a
    towards the component of psi_b orthogonal to it. The end point equals
    psi_b up to a global phase.
    """
    if steps < 1:
        raise ValueError("a path needs at least one step")
    _check_dimensions(psi_a.dimension, psi_b.dimension)
    a = psi_a.components
    overlap = np.vdot(a, psi_b.components)
    b = psi_b.components * np.exp(-1j * np.angle(overlap)) if abs(overlap) > 0 else psi_b.components

    cosine = min(abs(overlap), 1.0)
    w = b - cosine * a
    norm = np.linalg.norm(w)
    if norm < 1e-15:
        return [psi_a] * (steps + 1)
    w = w / norm

    angle = np.arccos(cosine)
    generator = angle * (np.outer(w, a.conj()) - np.outer(a, w.conj()))
    step = expm(generator / steps)

    path, state = [psi_a], a
    for _ in range(steps):
        state = step @ state
        path.append(Predictor.normalized(state))
    return path
