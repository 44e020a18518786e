"""Seeded random predictors, bases, states and networks."""
import networkx as nx
import numpy as np
from scipy.stats import unitary_group

from .models import AmplitudeNetwork, DensityMatrix, MeasurementBasis, Predictor


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_predictor(n: int, rng: np.random.Generator) -> Predictor:
    return Predictor.normalized(_complex_gaussian(rng, n))


def random_basis(n: int, rng: np.random.Generator) -> MeasurementBasis:
    """Rows of a Haar-random unitary."""
    return MeasurementBasis(unitary_group.rvs(n, random_state=rng))


def random_density_matrix(n: int, rng: np.random.Generator, rank: int | None = None) -> DensityMatrix:
    """G G^dagger / tr for a Ginibre matrix G with `rank` columns (full rank by default)."""
    g = _complex_gaussian(rng, (n, rank or n))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real)


def random_amplitude(rng: np.random.Generator) -> complex:
    """Uniform on the closed unit disk."""
    return complex(np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))


def random_series_parallel_network(n_edges: int, rng: np.random.Generator) -> AmplitudeNetwork:
    """Grow a single edge by random subdivisions (series) and duplications (parallel)."""
    if n_edges < 1:
        raise ValueError("a network needs at least one edge")
    graph = nx.MultiDiGraph()
    graph.add_edge('I', 'T', amplitude=random_amplitude(rng))
    fresh = 0
    while graph.number_of_edges() < n_edges:
        edges = list(graph.edges(keys=True))
        u, v, key = edges[int(rng.integers(len(edges)))]
        if rng.uniform() < 0.5:
            fresh += 1
            middle = f'n{fresh}'
            graph.remove_edge(u, v, key)
            graph.add_edge(u, middle, amplitude=random_amplitude(rng))
            graph.add_edge(middle, v, amplitude=random_amplitude(rng))
        else:
            graph.add_edge(u, v, amplitude=random_amplitude(rng))
    return AmplitudeNetwork(graph)
