import pytest

from rigid2step import linalg as la
from rigid2step.clifford import (EIGEN_COLUMNS_34, TABLE1, TABLE2_34, admissible_form,
                                 build_generators, build_htype, clifford_relations_hold,
                                 involution_set, irreducible_dim, is_admissible,
                                 minimal_admissible, pair_closure_check, table1_grid,
                                 table3_check)
from rigid2step.lie import j_maps, validate, verify_htype


def test_irreducible_dim_examples():
    assert irreducible_dim(1, 2) == (2, True)
    assert irreducible_dim(3, 4) == (8, True)
    assert irreducible_dim(0, 0) == (1, False)


def test_base_generators():
    assert build_generators(1, 0) == [((0, -1), (1, 0))]
    assert build_generators(0, 1) == [((1,),)]
    assert admissible_form(build_generators(0, 1)) is None
    assert admissible_form(build_generators(1, 0)) == la.identity(2)


def test_v_plus_relation_12():
    J1, J2, J3 = build_generators(1, 2, "+")
    assert J1 == la.scale(-1, la.matmul(J2, J3))


def test_minimal_examples():
    r = minimal_admissible(0, 1)
    assert r.dim == 2 and la.signature(r.G) == (1, 1, 0)
    r = minimal_admissible(1, 2)
    assert r.dim == 4 and r.composition == (("V+", 2),)
    r = minimal_admissible(3, 4)
    assert r.dim == 8 and r.twin_flag and not r.mixed_flag
    r = minimal_admissible(0, 0)
    assert r.dim == 1 and r.G == ((1,),)


@pytest.mark.parametrize("rs", [(r, s) for r in range(5) for s in range(5)])
def test_relations_and_admissibility(rs):
    r, s = rs
    rep = minimal_admissible(r, s)
    assert clifford_relations_hold(rep.gens, r, s)
    assert is_admissible(rep.gens, rep.G)
    if s >= 1:
        assert la.signature(rep.G) == (rep.dim // 2, rep.dim // 2, 0)


def test_table1_small_entries():
    grid = table1_grid(max_dim=16)
    assert grid
    for rs, got in grid.items():
        assert got == tuple(TABLE1[rs]), rs


def test_build_htype_examples():
    A = build_htype(3, 0)
    assert (A.algebra.n, A.algebra.m) == (4, 3)
    A = build_htype(1, 2)
    assert (A.algebra.n, A.algebra.m) == (4, 3)
    A = build_htype(1, 0)
    assert (A.algebra.n, A.algebra.m) == (2, 1)
    for rs, copies in [((3, 4), (("+", 2),)), ((1, 2), (("+", 1), ("-", 1))), ((2, 1), (("min", 1),))]:
        A = build_htype(*rs, copies)
        assert verify_htype(j_maps(A)) and validate(A.algebra).fundamental
    with pytest.raises(ValueError):
        build_htype(1, 2, (("+", 0),))
    with pytest.raises(ValueError):
        build_htype(1, 2, (("x", 1),))


def test_polarised_identity_on_probes():
    A = build_htype(1, 2, (("+", 1), ("-", 1)))
    J = j_maps(A)
    G, Z = A.metric.V, A.metric.Z
    for x in [(1, 0, 0, 0, 1, 0, 0, 0), (1, 2, 0, -1, 0, 0, 1, 0)]:
        Jx = [la.matvec(M, x) for M in J.maps]
        xx = la.dot(x, la.matvec(G, x))
        for k in range(3):
            for l in range(3):
                assert la.dot(Jx[k], la.matvec(G, Jx[l])) == Z[k][l] * xx


def test_involutions_34():
    rep = minimal_admissible(3, 4)
    inv = involution_set(rep)
    assert inv.sign_table == TABLE2_34
    assert sorted(len(b) for b in inv.eigenbasis.values()) == [1] * 8
    t3 = table3_check(rep, inv)
    assert set(t3) == set(EIGEN_COLUMNS_34)
    assert all(all(sg) and inside for sg, inside in t3.values())
    assert len(pair_closure_check(rep, inv)) == 8 * 21


def test_involutions_70():
    rep = minimal_admissible(7, 0)
    inv = involution_set(rep)
    assert sorted(len(b) for b in inv.eigenbasis.values()) == [1] * 8
    assert len(pair_closure_check(rep, inv)) == 8 * 21


def test_involution_errors():
    rep = minimal_admissible(3, 4)
    with pytest.raises(ValueError):
        involution_set(rep, ((1, 2, 3, 9),))
    with pytest.raises(ValueError):
        involution_set(minimal_admissible(1, 2))
