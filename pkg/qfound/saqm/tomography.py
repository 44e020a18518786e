"""Probability tables over a complete set of mutually unbiased bases.

For N + 1 MUBs, sum_{b,i} tr(rho P_bi) P_bi = rho + I, which makes the table
an invertible image of the density matrix.
"""
import numpy as np

from qfound.core.errors import DimensionMismatch, NegativeEigenvalue, UnsupportedDimension
from qfound.logger import logger

from .models import EIGENVALUE_FLOOR, DensityMatrix, MeasurementBasis, MubSet, ProbabilityTable


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _qubit_mubs() -> MubSet:
    s = 1 / np.sqrt(2)
    z = [[1, 0], [0, 1]]
    x = [[s, s], [s, -s]]
    y = [[s, 1j * s], [s, -1j * s]]
    return MubSet(tuple(MeasurementBasis(np.array(v, dtype=complex)) for v in (z, x, y)))


def mub_set(n: int) -> MubSet:
    """Computational basis plus the N Weyl-Heisenberg bases omega^(a j^2 + b j)/sqrt(N), N prime.

    N = 2 returns the sigma_z, sigma_x, sigma_y eigenbases in that order.
    """
    if not is_prime(n):
        raise UnsupportedDimension(f"complete MUB sets are built only for prime dimensions, got {n}")
    if n == 2:
        return _qubit_mubs()

    j = np.arange(n)
    bases = [MeasurementBasis.computational(n)]
    for a in range(n):
        exponents = (a * j**2 + np.outer(j, j)) % n
        bases.append(MeasurementBasis(np.exp(2j * np.pi * exponents / n) / np.sqrt(n)))
    return MubSet(tuple(bases))


def table_from_density(rho: DensityMatrix, mubs: MubSet) -> ProbabilityTable:
    """Entry (b, i) = <v_bi| rho |v_bi>."""
    if rho.dimension != mubs.dimension:
        raise DimensionMismatch(f"{rho.dimension}-dimensional state against {mubs.dimension}-dimensional MUBs")
    rows = [np.einsum('ki,ij,kj->k', basis.vectors.conj(), rho.entries, basis.vectors).real
            for basis in mubs.bases]
    return ProbabilityTable(np.clip(np.array(rows), 0.0, 1.0))


def density_from_table(table: ProbabilityTable, mubs: MubSet) -> DensityMatrix:
    """rho = sum_{b,i} p_bi P_bi - I, rejected if it has a negative eigenvalue."""
    if table.dimension != mubs.dimension:
        raise DimensionMismatch(f"{table.dimension}-outcome table against {mubs.dimension}-dimensional MUBs")
    rho = -np.eye(table.dimension, dtype=complex)
    for row, basis in zip(table.rows, mubs.bases):
        rho += np.einsum('k,kij->ij', row, basis.projectors())
    rho = (rho + rho.conj().T) / 2

    eigenvalues = np.linalg.eigvalsh(rho)
    if eigenvalues[0] < EIGENVALUE_FLOOR:
        logger.debug(f"table reconstructs to eigenvalues {eigenvalues}")
        raise NegativeEigenvalue(f"table is not realizable by a state: eigenvalue {eigenvalues[0]:.6g}", eigenvalues)
    return DensityMatrix(rho)
