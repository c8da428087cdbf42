import pytest

from rigid2step.poly import (Ideal, Poly, ResourceExhausted, groebner, linear_form,
                             normal_form, symbolic_matrix_minors, vanishes_only_at_origin)
from rigid2step.catalog import example_35
from rigid2step.lie import ad_matrix_symbolic

x, y = Poly.var(2, 0), Poly.var(2, 1)


def test_arithmetic_and_printing():
    p = Poly(4, {(2, 0, 1, 0): "3/2", (0, 1, 0, 1): -1})
    assert str(p) == "3/2*x1^2*x3 - x2*x4"
    assert (x + y) * (x - y) == x * x - y * y
    assert not (x - x)
    assert (x * y).evaluate((2, 3)) == 6


def test_groebner_examples():
    G = groebner(Ideal([x * x, x * y, y * y]))
    assert sorted(map(str, G)) == ["x1*x2", "x1^2", "x2^2"]
    G = groebner(Ideal([x - y, y * y]))
    assert sorted(map(str, G)) == ["x1 - x2", "x2^2"]
    G = groebner(Ideal([x * x + y * y, x * y]))
    assert y * y * y in G


def test_normal_form_reduces_members():
    I = Ideal([x * x + y * y, x * y])
    G = groebner(I)
    assert not normal_form(x * x * y, G)
    assert normal_form(x, G) == x


def test_budget_exhaustion():
    I = Ideal([x * x + y * y, x * y])
    with pytest.raises(ResourceExhausted):
        groebner(I, budget=0)


def test_origin_only_examples():
    assert vanishes_only_at_origin(Ideal([x * x, y * y]))
    assert not vanishes_only_at_origin(Ideal([x * y]))
    v = [Poly.var(3, i) for i in range(3)]
    I = symbolic_matrix_minors([[v[0], v[1]], [v[1], v[2]]], 2)
    assert not vanishes_only_at_origin(I)
    with pytest.raises(ValueError):
        vanishes_only_at_origin(Ideal([x + Poly.constant(2, 1)]))


def test_minors_examples():
    z = Poly.zero(2)
    assert list(symbolic_matrix_minors([[x, z], [z, y]], 2)) == [x * y]
    assert list(symbolic_matrix_minors([[x, y]], 1)) == [x, y]
    with pytest.raises(ValueError):
        symbolic_matrix_minors([[x, y]], 2)


def test_example_35_minors():
    M = ad_matrix_symbolic(example_35().algebra)
    I = symbolic_matrix_minors(M, 2)
    # 3 x 5 matrix: C(3,2) * C(5,2) = 30 minors, two of them identically zero
    assert len(I) == 28
    assert vanishes_only_at_origin(I)


def test_linear_form():
    assert str(linear_form([1, 0, -2])) == "x1 - 2*x3"
