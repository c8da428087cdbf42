import pytest

from rigid2step import linalg as la
from rigid2step.catalog import gnla
from rigid2step.clifford import build_htype
from rigid2step.lie import (Graded2Step, Metric, MTypeAlgebra, abelian, ad_matrix,
                            ad_matrix_symbolic, condition_C, default_metivier_probes,
                            free_two_step, heisenberg, j_maps, metivier_probe,
                            orthonormal_center, structure_from_jmaps, validate,
                            verify_htype, verify_jtype)


def euclid(a):
    return j_maps(MTypeAlgebra.euclidean(a))


def test_bracket_antisymmetry_and_repeats():
    a = Graded2Step(3, 1, [(0, 1, [1]), (1, 0, [2]), (0, 2, ["1/2"])])
    assert a.C[0][0][1] == -1 and a.C[0][1][0] == 1
    assert a.bracket((1, 0, 0), (0, 0, 1)) == (la.rat("1/2"),)
    with pytest.raises(ValueError):
        Graded2Step(2, 1, [(0, 0, [1])])
    with pytest.raises(ValueError):
        Graded2Step(2, 1, [(0, 2, [1])])


def test_validate_examples():
    assert validate(heisenberg()).fundamental
    r = validate(abelian(2, 1))
    assert not r.fundamental and not r.surjective_bracket and len(r.central_in_minus1) == 2
    assert validate(gnla(1).algebra).fundamental


def test_ad_matrix_symbolic():
    assert [[str(p) for p in row] for row in ad_matrix_symbolic(heisenberg())] == [["-x2", "x1"]]
    Z = ad_matrix_symbolic(abelian(3, 2))
    assert all(not p for row in Z for p in row)
    assert la.rank(ad_matrix(gnla(1).algebra, (1, 0, 0, 0))) == 1


def test_j_maps_examples():
    # column convention: <J_z x, y> = <z, [x, y]> gives J e1 = e2 for [e1, e2] = f1
    assert euclid(heisenberg()).maps[0] == ((0, -1), (1, 0))
    J5 = euclid(gnla(5).algebra).maps[0]
    e = la.identity(4)
    assert la.matvec(J5, e[0]) == e[1] and la.matvec(J5, e[1]) == tuple(-v for v in e[0])
    assert la.matvec(J5, e[2]) == e[3] and la.matvec(J5, e[3]) == tuple(-v for v in e[2])
    assert euclid(gnla(5).algebra).J((0, 0, 0)) == la.zeros(4, 4)


def test_structure_from_jmaps_roundtrip():
    a = gnla(6).algebra
    assert structure_from_jmaps(euclid(a).maps) == a


def test_verify_htype_examples():
    assert verify_htype(j_maps(build_htype(1, 2)))
    assert not verify_htype(euclid(gnla(1).algebra))
    assert verify_htype(euclid(heisenberg()))


def test_verify_jtype_examples():
    assert verify_jtype(j_maps(build_htype(1, 2))) == (-1, 1, 1)
    assert verify_jtype(j_maps(build_htype(3, 0))) == (-1, -1, -1)
    assert verify_jtype(euclid(gnla(1).algebra)) is None


def test_gnla5_metric_is_pseudo_htype():
    A = gnla(5).m_type()
    assert verify_htype(j_maps(A))
    assert la.signature(A.metric.Z) == (1, 2, 0)
    assert sorted(verify_jtype(j_maps(A))) == [-1, 1, 1]
    B = orthonormal_center(A)
    assert B.metric.Z == ((-1, 0, 0), (0, -1, 0), (0, 0, 1))
    assert verify_htype(j_maps(B)) and validate(B.algebra).fundamental


def test_gnla6_euclidean_htype():
    assert verify_htype(j_maps(gnla(6).m_type()))


def test_condition_c_examples():
    c = condition_C(j_maps(build_htype(3, 0)))
    assert c is not None and c.product() == -1
    assert all(c.sigma[i][j] == -1 for i in range(3) for j in range(3) if i != j)
    assert condition_C(j_maps(build_htype(3, 4))) is not None
    assert condition_C(euclid(gnla(1).algebra)) is None
    with pytest.raises(ValueError):
        condition_C(euclid(heisenberg()))


def test_metivier_examples():
    J30 = j_maps(build_htype(3, 0))
    assert metivier_probe(J30, default_metivier_probes(3)).all_nondegenerate_on_probes
    r = metivier_probe(euclid(gnla(1).algebra), [(1, 0, 0)])
    assert not r.all_nondegenerate_on_probes and r.degenerate_witness == (1, 0, 0)
    J = euclid(gnla(1).algebra)
    assert metivier_probe(J, [(2, 0, 0)]).all_nondegenerate_on_probes == \
        metivier_probe(J, [(1, 0, 0)]).all_nondegenerate_on_probes


def test_free_two_step():
    assert free_two_step(2) == heisenberg()
    assert free_two_step(3).m == 3 and free_two_step(4).m == 6


def test_metric_checks():
    with pytest.raises(ValueError):
        Metric(((1, 1), (0, 1)), ((1,),))
    with pytest.raises(ValueError):
        Metric(((1, 0), (0, 0)), ((1,),))
