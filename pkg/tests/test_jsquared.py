import pytest

from rigid2step import linalg as la
from rigid2step.catalog import gnla
from rigid2step.clifford import build_htype
from rigid2step.jsquared import (doubled_34_witness, forall_check, forall_witness_search,
                                 j2_general_probe, j2_pointwise, j2_standard,
                                 probe_lattice, recheck_witness, residual_tensor)
from rigid2step.lie import heisenberg, j_maps, MTypeAlgebra


def test_pointwise_examples():
    J12 = j_maps(build_htype(1, 2))
    assert j2_pointwise(J12, (0, 0, 0, 0), (0, 2))
    assert j2_pointwise(J12, (1, 0, 0, 0), (0, 1))
    A, x, pair = doubled_34_witness(1)
    assert pair == (2, 3)
    assert not j2_pointwise(j_maps(A), x, pair)


def test_pointwise_errors():
    J = j_maps(gnla(5).m_type())
    with pytest.raises(ValueError):
        j2_pointwise(J, (1, 0, 0, 0), (1, 2))
    with pytest.raises(ValueError):
        j2_pointwise(J, (1, 0, 0, 0), (0, 0))


def test_standard_holds_with_certificate():
    v = j2_standard(build_htype(3, 0))
    assert v.holds and v.mode == "standard" and v.residual_certificate == ((0, 1), (0, 2), (1, 2))


def test_standard_trivial_for_small_m():
    assert j2_standard(build_htype(1, 0)).holds
    assert j2_standard(MTypeAlgebra.euclidean(heisenberg())).holds


def test_standard_mixed_12_witness():
    A = build_htype(1, 2, (("+", 2), ("-", 2)))
    v = j2_standard(A)
    assert not v.holds
    assert v.witness["checks"]["norm"] != 0
    assert recheck_witness(j_maps(A), v.witness)


def test_standard_21_fails():
    A = build_htype(2, 1)
    v = j2_standard(A)
    assert not v.holds and v.witness["x"] == (1, 0, 0, 0, 0, 1, 0, 0)


def test_standard_errors():
    with pytest.raises(ValueError):
        j2_standard(gnla(1).m_type())
    with pytest.raises(ValueError):
        j2_standard(gnla(5).m_type())


def test_residual_tensor_zero_iff_holds():
    J = j_maps(build_htype(3, 0))
    assert not residual_tensor(J, 0, 1).any()
    J = j_maps(build_htype(0, 3))
    assert residual_tensor(J, 0, 1).any()


def test_general_probe_examples():
    assert j2_general_probe(j_maps(build_htype(3, 0))).holds
    assert j2_general_probe(j_maps(build_htype(7, 0))).holds
    v = j2_general_probe(j_maps(build_htype(0, 3)))
    assert not v.holds and v.mode == "general-probe"
    assert recheck_witness(j_maps(build_htype(0, 3)), v.witness)


def test_general_probe_null_cone_34():
    # the standard condition holds on n^{3,4}, the general one fails at a null vector
    J = j_maps(build_htype(3, 4))
    assert j2_standard(build_htype(3, 4)).holds
    v = j2_general_probe(J)
    assert not v.holds and v.witness["checks"]["norm"] == 0


def test_forall_examples():
    A = build_htype(1, 2, (("+", 2), ("-", 2)))
    found = forall_witness_search(A)
    assert found is not None
    x, i, j = found
    assert forall_check(j_maps(A), x, (i, j))
    # the witness mixes the V+ and V- halves
    assert any(x[:8]) and any(x[8:])
    assert forall_witness_search(build_htype(3, 0)) is None
    A, x, pair = doubled_34_witness(1)
    assert forall_check(j_maps(A), x, pair)
    assert forall_witness_search(A) is not None


def test_probe_lattice_order():
    xs = list(probe_lattice(3, 2))
    assert xs[:4] == [(1, 0, 0), (-1, 0, 0), (2, 0, 0), (-2, 0, 0)]
    assert len(xs) == 3 * 4 + 3 * 16
