"""Feynman rules on series-parallel networks: amplitudes multiply along successive
transitions and add over parallel alternatives."""
import networkx as nx
import numpy as np

from qfound.core.errors import NotSeriesParallel

from .models import AmplitudeNetwork

ROUNDING = 1e-15


def _reductions(graph: nx.MultiDiGraph, source, sink) -> list[tuple[str, tuple]]:
    candidates = []
    for u, v in set(graph.edges()):
        if graph.number_of_edges(u, v) > 1:
            candidates.append(('parallel', (u, v)))
    for node in graph.nodes:
        if node not in (source, sink) and graph.in_degree(node) == 1 and graph.out_degree(node) == 1:
            candidates.append(('series', (node,)))
    return sorted(candidates, key=repr)


def _merge_parallel(graph: nx.MultiDiGraph, u, v) -> None:
    first, second = list(graph[u][v])[:2]
    total = graph[u][v][first]['amplitude'] + graph[u][v][second]['amplitude']
    graph.remove_edge(u, v, second)
    graph[u][v][first]['amplitude'] = total


def _merge_series(graph: nx.MultiDiGraph, node) -> None:
    (u, _, a), = graph.in_edges(node, data='amplitude')
    (_, v, b), = graph.out_edges(node, data='amplitude')
    graph.remove_node(node)
    graph.add_edge(u, v, amplitude=a * b)


def compose_amplitudes(net: AmplitudeNetwork, order_seed: int | None = None) -> complex:
    """Total source-to-sink amplitude by repeated series and parallel reduction.

    Without `order_seed` the reductions are applied in a fixed order; with it
    they are picked at random, which must not change the result beyond rounding.
    """
    graph = nx.MultiDiGraph(net.graph)
    rng = np.random.default_rng(order_seed) if order_seed is not None else None
    while candidates := _reductions(graph, net.source, net.sink):
        kind, target = candidates[int(rng.integers(len(candidates)))] if rng else candidates[0]
        if kind == 'parallel':
            _merge_parallel(graph, *target)
        else:
            _merge_series(graph, *target)

    if graph.number_of_edges() != 1 or not graph.has_edge(net.source, net.sink):
        raise NotSeriesParallel(f"network does not reduce to a single edge; "
                                f"{graph.number_of_edges()} edges remain")
    (amplitude,) = (data for _, _, data in graph.edges(data='amplitude'))
    return complex(amplitude)


def path_sum(net: AmplitudeNetwork, absolute: bool = False) -> complex:
    """Sum over every source-to-sink path of the product of its amplitudes.

    Works on any DAG. With `absolute` the moduli are summed instead, which
    bounds the magnitudes met during a reduction.
    """
    reach = {node: 0j for node in net.graph.nodes}
    reach[net.source] = 1.0 + 0j
    for node in nx.topological_sort(net.graph):
        for _, target, a in net.graph.out_edges(node, data='amplitude'):
            reach[target] += reach[node] * (abs(a) if absolute else a)
    return reach[net.sink]


def amplitude_tolerance(net: AmplitudeNetwork, base: float = ROUNDING) -> float:
    """Rounding budget for comparing two evaluations of the same network."""
    return base * net.n_edges * max(1.0, path_sum(net, absolute=True).real)
