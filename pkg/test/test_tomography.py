import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from qfound.core.errors import DimensionMismatch, NegativeEigenvalue, UnsupportedDimension
from qfound.saqm import (DensityMatrix, Predictor, ProbabilityTable, density_from_json, density_from_table,
                         density_to_json, mub_set, no_signalling_check, random_density_matrix, table_from_density,
                         table_from_json, table_to_json)
from qfound.saqm.composite import conditioned_table
from qfound.saqm.tomography import is_prime


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize('n', [2, 3, 5, 7])
def test_mub_sets_are_complete_and_unbiased(n):
    mubs = mub_set(n)
    assert len(mubs.bases) == n + 1
    for i, first in enumerate(mubs.bases):
        for second in mubs.bases[i + 1:]:
            overlaps = np.abs(first.vectors.conj() @ second.vectors.T)**2
            np.testing.assert_allclose(overlaps, 1 / n, atol=1e-12)


@pytest.mark.parametrize('n', [1, 4, 6])
def test_mub_sets_need_a_prime_dimension(n):
    with pytest.raises(UnsupportedDimension):
        mub_set(n)


def test_qubit_bases_are_the_pauli_eigenbases():
    z, x, y = mub_set(2).bases
    for basis, pauli in ((z, np.diag([1, -1])), (x, np.array([[0, 1], [1, 0]])),
                         (y, np.array([[0, -1j], [1j, 0]]))):
        for vector, eigenvalue in zip(basis.vectors, (1, -1)):
            np.testing.assert_allclose(pauli @ vector, eigenvalue * vector, atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1), n=st.sampled_from([2, 3, 5]),
       rank=st.sampled_from([None, 1]))
def test_tables_determine_the_state(seed, n, rank):
    mubs = mub_set(n)
    rho = random_density_matrix(n, np.random.default_rng(seed), rank=rank)
    back = density_from_table(table_from_density(rho, mubs), mubs)
    assert np.linalg.norm(back.entries - rho.entries) < 1e-10


def test_maximally_mixed_table_is_flat():
    table = table_from_density(DensityMatrix.maximally_mixed(3), mub_set(3))
    np.testing.assert_allclose(table.rows, 1 / 3, atol=1e-15)


def test_unrealizable_table_is_rejected():
    with pytest.raises(NegativeEigenvalue) as raised:
        density_from_table(ProbabilityTable(np.array([[1.0, 0.0]] * 3)), mub_set(2))
    assert raised.value.eigenvalues[0] == pytest.approx(0.5 - np.sqrt(3) / 2)


def test_table_dimensions_must_match():
    with pytest.raises(DimensionMismatch):
        table_from_density(DensityMatrix.maximally_mixed(3), mub_set(2))
    with pytest.raises(DimensionMismatch):
        density_from_table(ProbabilityTable(np.full((4, 3), 1 / 3)), mub_set(2))


def test_table_json_wire_format():
    table = table_from_density(DensityMatrix.from_predictor(Predictor.normalized([1, 1j])), mub_set(2))
    text = table_to_json(table)
    assert '"n":2' in text
    np.testing.assert_array_equal(table_from_json(text).rows, table.rows)
    with pytest.raises(ValidationError):
        table_from_json('{"n": 2, "rows": [[1.0, 0.0]]}')


def test_density_json_wire_format():
    rho = random_density_matrix(3, np.random.default_rng(4))
    np.testing.assert_array_equal(density_from_json(density_to_json(rho)).entries, rho.entries)
    with pytest.raises(ValidationError):
        density_from_json('{"n": 2, "real": [[1.0, 0.0], [0.0, 0.0]], "imag": [[0.0, 0.0]]}')


@pytest.mark.parametrize('seed', range(10))
def test_random_joint_states_do_not_signal(seed):
    qubit = mub_set(2)
    rho = random_density_matrix(4, np.random.default_rng(seed))
    assert no_signalling_check(rho, (qubit.bases[0], qubit.bases[1]), qubit) < 1e-12


def test_bell_state_does_not_signal():
    qubit = mub_set(2)
    bell = DensityMatrix.from_predictor(Predictor.normalized([1, 0, 0, 1]))
    assert no_signalling_check(bell, (qubit.bases[0], qubit.bases[2]), qubit) < 1e-12
    np.testing.assert_allclose(conditioned_table(bell, qubit, qubit.bases[1]), 0.5, atol=1e-15)


def test_product_state_conditions_to_the_local_table():
    rng = np.random.default_rng(6)
    qubit, qutrit = mub_set(2), mub_set(3)
    rho_a, rho_b = random_density_matrix(2, rng), random_density_matrix(3, rng)
    conditioned = conditioned_table(rho_a.tensor(rho_b), qubit, qutrit.bases[1])
    np.testing.assert_allclose(conditioned, table_from_density(rho_a, qubit).rows, atol=1e-12)


def test_no_signalling_dimensions_must_match():
    qubit = mub_set(2)
    with pytest.raises(DimensionMismatch):
        no_signalling_check(DensityMatrix.maximally_mixed(3), (qubit.bases[0], qubit.bases[1]), qubit)
    with pytest.raises(DimensionMismatch):
        no_signalling_check(DensityMatrix.maximally_mixed(6), (qubit.bases[0], mub_set(3).bases[0]), qubit)
