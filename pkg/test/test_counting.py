import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfound.saqm import composite_counts, hardy_counts, real_space_violation, wootters_g_identity
from qfound.saqm.counting import parameter_count

SUBSYSTEM = st.integers(min_value=2, max_value=12)


@pytest.mark.parametrize('n,r,K', [(2, 2, 4), (2, 1, 2), (4, 2, 16), (6, 1, 6), (1, 2, 1)])
def test_hardy_counts(n, r, K):
    counts = hardy_counts(n, r)
    assert counts.K == K
    assert counts.monotone_ok
    assert counts.composite_ok


@pytest.mark.parametrize('n,r', [(0, 2), (2, 3)])
def test_hardy_counts_arguments(n, r):
    with pytest.raises(ValueError):
        hardy_counts(n, r)


def test_parameter_counts():
    assert [parameter_count(n, 'real') for n in (1, 2, 3, 4)] == [1, 3, 6, 10]
    assert [parameter_count(n, 'complex') for n in (1, 2, 3, 4)] == [1, 4, 9, 16]
    with pytest.raises(ValueError):
        parameter_count(2, 'quaternion')


def test_real_amplitudes_break_local_tomography():
    pair = composite_counts(2, 2, 'real')
    assert (pair.K_joint, pair.K_product, pair.violates) == (10, 9, True)
    mixed = real_space_violation(2, 3)
    assert (mixed.K_joint, mixed.K_product, mixed.violates) == (21, 18, True)


@given(n1=SUBSYSTEM, n2=SUBSYSTEM)
def test_complex_amplitudes_are_locally_tomographic(n1, n2):
    counts = composite_counts(n1, n2, 'complex')
    assert counts.K_joint == counts.K_product
    assert not counts.violates
    assert real_space_violation(n1, n2).violates


@given(n1=SUBSYSTEM, n2=SUBSYSTEM, r=st.sampled_from([1, 2]))
def test_g_identity_is_exact(n1, n2, r):
    assert wootters_g_identity(n1, n2, r) == 0


def test_g_identity_negative_control():
    assert wootters_g_identity(2, 2, 2, offset=0) == 8
    assert wootters_g_identity(3, 2, 1, offset=2) > 0


def test_composite_counts_need_two_subsystems():
    with pytest.raises(ValueError):
        composite_counts(1, 2)
    with pytest.raises(ValueError):
        wootters_g_identity(2, 1, 2)
