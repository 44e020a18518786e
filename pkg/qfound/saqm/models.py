from dataclasses import dataclass

import networkx as nx
import numpy as np

from qfound.core.errors import DimensionMismatch, InvalidState, NegativeEigenvalue

NORM_TOLERANCE = 1e-12
HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
EIGENVALUE_FLOOR = -1e-10
UNBIASED_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class Predictor:
    """Unit vector of outcome amplitudes; compared only up to a global phase."""

    components: np.ndarray

    def __post_init__(self):
        components = np.asarray(self.components, dtype=complex)
        if components.ndim != 1 or components.size < 2:
            raise InvalidState("a predictor needs at least two components")
        if abs(np.linalg.norm(components) - 1) > NORM_TOLERANCE:
            raise InvalidState(f"predictor norm is {np.linalg.norm(components):.15g}, expected 1")
        object.__setattr__(self, 'components', components)

    @classmethod
    def normalized(cls, components) -> "Predictor":
        components = np.asarray(components, dtype=complex)
        norm = np.linalg.norm(components)
        if norm == 0:
            raise InvalidState("cannot normalize the zero vector")
        return cls(components / norm)

    @classmethod
    def basis_vector(cls, dimension: int, index: int) -> "Predictor":
        return cls(np.eye(dimension, dtype=complex)[index])

    @property
    def dimension(self) -> int:
        return self.components.size


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """Orthonormal vectors stored as the rows of `vectors`."""

    vectors: np.ndarray

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=complex)
        if vectors.ndim != 2 or vectors.shape[0] != vectors.shape[1]:
            raise InvalidState(f"a basis of C^N needs N vectors of length N, got shape {vectors.shape}")
        gram = vectors.conj() @ vectors.T
        if np.max(np.abs(gram - np.eye(len(vectors)))) > NORM_TOLERANCE:
            raise InvalidState("basis vectors are not orthonormal")
        object.__setattr__(self, 'vectors', vectors)

    @classmethod
    def computational(cls, dimension: int) -> "MeasurementBasis":
        return cls(np.eye(dimension, dtype=complex))

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def projectors(self) -> np.ndarray:
        """Stack of rank-one projectors |a_k><a_k|."""
        return np.einsum('ki,kj->kij', self.vectors, self.vectors.conj())


@dataclass(frozen=True, eq=False)
class MubSet:
    bases: tuple[MeasurementBasis, ...]

    def __post_init__(self):
        bases = tuple(self.bases)
        n = bases[0].dimension
        if len(bases) != n + 1 or any(b.dimension != n for b in bases):
            raise InvalidState(f"a complete MUB set in dimension {n} has {n + 1} bases")
        for i, first in enumerate(bases):
            for second in bases[i + 1:]:
                overlaps = np.abs(first.vectors.conj() @ second.vectors.T)**2
                if np.max(np.abs(overlaps - 1 / n)) > UNBIASED_TOLERANCE:
                    raise InvalidState("bases are not mutually unbiased")
        object.__setattr__(self, 'bases', bases)

    @property
    def dimension(self) -> int:
        return self.bases[0].dimension


def _is_hermitian(matrix: np.ndarray) -> bool:
    return np.max(np.abs(matrix - matrix.conj().T)) <= HERMITIAN_TOLERANCE


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidState(f"density matrix must be square, got shape {entries.shape}")
        if not _is_hermitian(entries):
            raise InvalidState("density matrix is not Hermitian")
        if abs(np.trace(entries) - 1) > TRACE_TOLERANCE:
            raise InvalidState(f"density matrix trace is {np.trace(entries).real:.15g}, expected 1")
        eigenvalues = np.linalg.eigvalsh(entries)
        if eigenvalues[0] < EIGENVALUE_FLOOR:
            raise NegativeEigenvalue(f"density matrix has eigenvalue {eigenvalues[0]:.6g} < 0", eigenvalues)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_predictor(cls, psi: Predictor) -> "DensityMatrix":
        return cls(np.outer(psi.components, psi.components.conj()))

    @classmethod
    def maximally_mixed(cls, dimension: int) -> "DensityMatrix":
        return cls(np.eye(dimension, dtype=complex) / dimension)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    def partial_trace(self, dims: tuple[int, int], keep: int = 0) -> "DensityMatrix":
        """Reduced state of subsystem `keep` (0 or 1) of a bipartite dims[0] x dims[1] system."""
        n1, n2 = dims
        if n1 * n2 != self.dimension:
            raise DimensionMismatch(f"{n1} x {n2} does not factor a {self.dimension}-dimensional state")
        blocks = self.entries.reshape(n1, n2, n1, n2)
        reduced = np.einsum('ijkj->ik', blocks) if keep == 0 else np.einsum('jijk->ik', blocks)
        return DensityMatrix(reduced)

    def tensor(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(np.kron(self.entries, other.entries))


@dataclass(frozen=True, eq=False)
class ProbabilityTable:
    """Row b holds the outcome probabilities of MUB basis b; (N+1) x N."""

    rows: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[0] != rows.shape[1] + 1:
            raise InvalidState(f"probability table must be (N+1) x N, got shape {rows.shape}")
        if np.any(rows < -NORM_TOLERANCE) or np.any(rows > 1 + NORM_TOLERANCE):
            raise InvalidState("probability table entries must lie in [0, 1]")
        if np.max(np.abs(rows.sum(axis=1) - 1)) > NORM_TOLERANCE:
            raise InvalidState("every row of a probability table must sum to 1")
        object.__setattr__(self, 'rows', rows)

    @property
    def dimension(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True, eq=False)
class AmplitudeNetwork:
    """Series-parallel transition graph from `source` to `sink`.

    Edges carry their complex amplitude in the 'amplitude' attribute; parallel
    edges between the same pair of nodes are allowed.
    """

    graph: nx.MultiDiGraph
    source: str = 'I'
    sink: str = 'T'

    def __post_init__(self):
        graph = self.graph
        if self.source not in graph or self.sink not in graph:
            raise InvalidState("network must contain its source and sink")
        if not nx.is_directed_acyclic_graph(graph):
            raise InvalidState("amplitude network has a cycle")
        on_paths = ((nx.descendants(graph, self.source) | {self.source})
                    & (nx.ancestors(graph, self.sink) | {self.sink}))
        if on_paths != set(graph.nodes):
            raise InvalidState("every node must lie on a source-to-sink path")
        if any('amplitude' not in data for _, _, data in graph.edges(data=True)):
            raise InvalidState("every edge needs an amplitude")

    @classmethod
    def from_edges(cls, edges, source: str = 'I', sink: str = 'T') -> "AmplitudeNetwork":
        graph = nx.MultiDiGraph()
        graph.add_nodes_from([source, sink])
        for u, v, amplitude in edges:
            graph.add_edge(u, v, amplitude=complex(amplitude))
        return cls(graph, source, sink)

    @property
    def n_edges(self) -> int:
        return self.graph.number_of_edges()
