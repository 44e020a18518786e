import numpy as np

from qfound.core.errors import DimensionMismatch

from .models import DensityMatrix, MeasurementBasis, MubSet
from .tomography import table_from_density


def conditioned_table(rho_joint: DensityMatrix, mub_a: MubSet, basis_b: MeasurementBasis) -> np.ndarray:
    """Side-A MUB probabilities obtained by summing joint outcomes over a side-B measurement."""
    n1, n2 = mub_a.dimension, basis_b.dimension
    blocks = rho_joint.entries.reshape(n1, n2, n1, n2)
    b = basis_b.vectors
    rows = []
    for basis in mub_a.bases:
        a = basis.vectors
        joint = np.einsum('ix,jy,xyuv,iu,jv->ij', a.conj(), b.conj(), blocks, a, b).real
        rows.append(joint.sum(axis=1))
    return np.array(rows)


def no_signalling_check(rho_joint: DensityMatrix, side_b_bases: tuple[MeasurementBasis, MeasurementBasis],
                        mub_a: MubSet) -> float:
    """Largest disagreement between side-A statistics under either side-B choice and the reduced state."""
    n1 = mub_a.dimension
    first, second = side_b_bases
    if first.dimension != second.dimension:
        raise DimensionMismatch("the two side-B bases differ in dimension")
    n2 = first.dimension
    if rho_joint.dimension != n1 * n2:
        raise DimensionMismatch(f"joint state of dimension {rho_joint.dimension} is not {n1} x {n2}")

    direct = table_from_density(rho_joint.partial_trace((n1, n2), keep=0), mub_a).rows
    tables = [conditioned_table(rho_joint, mub_a, basis) for basis in side_b_bases]
    return float(max(np.max(np.abs(tables[0] - tables[1])),
                     np.max(np.abs(tables[0] - direct)),
                     np.max(np.abs(tables[1] - direct))))
