import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfound.core.errors import InvalidState, NotSeriesParallel
from qfound.saqm import (AmplitudeNetwork, amplitude_tolerance, compose_amplitudes, path_sum, random_amplitude,
                         random_series_parallel_network)


def test_parallel_then_series_is_distributive():
    a, b, c = 0.3 + 0.4j, -0.5 + 0.1j, 0.2 - 0.6j
    net = AmplitudeNetwork.from_edges([('I', 'm', a), ('I', 'm', b), ('m', 'T', c)])
    assert abs(compose_amplitudes(net) - (a * c + b * c)) < 4e-15
    assert abs(path_sum(net) - (a + b) * c) < 4e-15


def test_series_chain_multiplies():
    amplitudes = [0.9, 0.5j, -0.7 + 0.1j, 0.3]
    nodes = ['I', 'a', 'b', 'c', 'T']
    net = AmplitudeNetwork.from_edges(zip(nodes, nodes[1:], amplitudes))
    assert compose_amplitudes(net) == pytest.approx(np.prod(amplitudes), abs=1e-15)


def test_single_edge():
    net = AmplitudeNetwork.from_edges([('I', 'T', 0.25j)])
    assert compose_amplitudes(net) == 0.25j
    assert net.n_edges == 1


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), n_edges=st.integers(min_value=1, max_value=50))
def test_reduction_order_and_path_expansion_agree(seed, n_edges):
    rng = np.random.default_rng(seed)
    net = random_series_parallel_network(n_edges, rng)
    assert net.n_edges == n_edges
    budget = amplitude_tolerance(net)
    reference = compose_amplitudes(net)
    assert abs(compose_amplitudes(net, order_seed=seed) - reference) <= budget
    assert abs(path_sum(net) - reference) <= budget


def test_bridge_is_not_series_parallel():
    amplitude = {('I', 'a'): 0.5, ('I', 'b'): 0.5j, ('a', 'b'): -0.3, ('a', 'T'): 0.8, ('b', 'T'): 0.1 + 0.2j}
    net = AmplitudeNetwork.from_edges((u, v, a) for (u, v), a in amplitude.items())
    with pytest.raises(NotSeriesParallel):
        compose_amplitudes(net)
    expected = (amplitude['I', 'a'] * amplitude['a', 'T'] + amplitude['I', 'b'] * amplitude['b', 'T']
                + amplitude['I', 'a'] * amplitude['a', 'b'] * amplitude['b', 'T'])
    assert path_sum(net) == pytest.approx(expected, abs=1e-15)


def test_network_validation():
    with pytest.raises(InvalidState):
        AmplitudeNetwork.from_edges([('I', 'a', 1), ('a', 'b', 1), ('b', 'a', 1), ('b', 'T', 1)])
    with pytest.raises(InvalidState):
        AmplitudeNetwork.from_edges([('I', 'T', 1), ('I', 'dead', 1)])
    graph = nx.MultiDiGraph()
    graph.add_edge('I', 'T')
    with pytest.raises(InvalidState):
        AmplitudeNetwork(graph)


def test_tolerance_scales_with_size_and_magnitude():
    small = AmplitudeNetwork.from_edges([('I', 'T', 0.5)])
    assert amplitude_tolerance(small) == pytest.approx(1e-15)
    large = AmplitudeNetwork.from_edges([('I', 'm', 3.0), ('I', 'm', -3.0), ('m', 'T', 2.0)])
    assert amplitude_tolerance(large, base=1e-15) == pytest.approx(3 * 12 * 1e-15)


def test_random_amplitudes_lie_in_the_unit_disk():
    rng = np.random.default_rng(9)
    assert all(abs(random_amplitude(rng)) <= 1 for _ in range(1000))
    with pytest.raises(ValueError):
        random_series_parallel_network(0, rng)
