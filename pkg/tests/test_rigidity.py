import pytest

from rigid2step import linalg as la
from rigid2step.catalog import example_35, gnla, random_algebra
from rigid2step.clifford import build_htype
from rigid2step.lie import MTypeAlgebra, abelian, free_two_step, heisenberg, j_maps
from rigid2step.poly import vanishes_only_at_origin
from rigid2step.rigidity import (INFINITE, RIGID, Inconclusive, NotFundamental,
                                 burnside_check, corank_ideal, decide, prolong,
                                 rank_one_probes, sample_generic, verify_certificate)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_gnla_rank_one(k):
    v = decide(gnla(k).algebra)
    assert v.verdict == INFINITE
    assert v.certificate.kind == "RankOneWitness" and v.certificate.data["x"] == (1, 0, 0, 0)
    assert verify_certificate(gnla(k).algebra, v)


def test_gnla4_gaussian_witness():
    a = gnla(4).algebra
    v = decide(a)
    i = la.GaussRat(0, 1)
    assert v.verdict == INFINITE and v.certificate.data["x"] == (1, i, 0, 0)
    assert verify_certificate(a, v)


@pytest.mark.parametrize("k, kind", [(5, "IdealOriginOnly"), (6, "ConditionC")])
def test_gnla_rigid(k, kind):
    v = decide(gnla(k).algebra)
    assert v.verdict == RIGID and v.certificate.kind == kind
    assert verify_certificate(gnla(k).algebra, v)


def test_example_35_ideal():
    a = example_35().algebra
    v = decide(a, method="ideal")
    assert v.verdict == RIGID
    assert v.certificate.data["minors"] == 30 and v.certificate.data["generators"] == 28
    assert verify_certificate(a, v)


def test_small_center():
    assert decide(heisenberg()).certificate.kind == "SmallCenter"
    for seed in range(5):
        assert decide(random_algebra(2, 5, seed)).verdict == INFINITE


def test_not_fundamental():
    a = abelian(4, 3)
    with pytest.raises(NotFundamental):
        decide(a)


def test_corank_ideal_examples():
    assert len(corank_ideal(heisenberg())) == 0
    assert vanishes_only_at_origin(corank_ideal(free_two_step(3)))


def test_prolong_examples():
    r = prolong(free_two_step(3), 6)
    assert r.terminated and r.level_dims == (9, 3, 3, 0) and r.total_dim == 21
    r = prolong(heisenberg(), 4)
    assert not r.terminated and all(r.level_dims)
    r = prolong(gnla(6).algebra, 6)
    assert r.terminated and r.level_dims == (7, 4, 3, 0)
    assert prolong(example_35().algebra, 4).level_dims == (5, 0)


def test_burnside_examples():
    assert burnside_check(j_maps(build_htype(3, 0))) is None
    assert burnside_check(j_maps(example_35().m_type())) == 25
    assert burnside_check(j_maps(gnla(1).m_type())) is None


def test_methods_agree_on_gnla6():
    a = gnla(6).algebra
    for method in ("auto", "ideal", "prolong", "fast"):
        assert decide(a, method=method).verdict == RIGID
    v = decide(a, method="all")
    assert {c[0] for c in v.checks} >= {"ideal", "metric", "prolong"}


def test_inconclusive_paths():
    with pytest.raises(Inconclusive):
        decide(gnla(1).algebra, method="prolong", max_level=2)
    # gnla(5) has no shortcut certificate under the Euclidean metric
    with pytest.raises(Inconclusive):
        decide(gnla(5).algebra, method="fast")


def test_unknown_method():
    with pytest.raises(ValueError):
        decide(gnla(1).algebra, method="magic")


def test_sample_generic_small_cases():
    assert sample_generic(2, 5, 11, 10).infinite_count == 10
    assert sample_generic(1, 2, 11, 5).infinite_count == 5


def test_rank_one_probes_order():
    p = list(rank_one_probes(3))
    assert p[0] == (1, 0, 0)
    assert len(set(p)) == len(p)


def test_htype_rigid_cross_check():
    # J^2 holds on these H-type algebras with m >= 3, so they must be rigid
    for rs in [(3, 0), (1, 2)]:
        A = build_htype(*rs)
        assert decide(A.algebra, metric=A.metric).verdict == RIGID
