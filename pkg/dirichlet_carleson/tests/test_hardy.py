import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirichlet_carleson.exceptions import (
    DuplicateNodes,
    InputError,
    NotARoot,
)
from dirichlet_carleson.hardy import (
    TWO_PI,
    BoundaryPoint,
    Poly,
    divide_out_roots,
    divided_quotient,
    h2_inner,
    h2_norm_sq,
    lagrange_interp,
    poly_eval,
    szego_kernel,
)

from . import conftest


@pytest.mark.parametrize(
    ('angle', 'expected'),
    [
        pytest.param(0.0, 0.0, id='zero'),
        pytest.param(-math.pi / 2, 3 * math.pi / 2, id='negative'),
        pytest.param(TWO_PI, 0.0, id='full-turn'),
        pytest.param(-1e-17, 0.0, id='rounds-to-turn'),
        pytest.param(5 * math.pi, math.pi, id='several-turns'),
    ],
)
def test_boundary_point_normalizes(angle, expected):
    point = BoundaryPoint(angle)
    assert 0.0 <= point.angle < TWO_PI
    assert point.angle == pytest.approx(expected, abs=1e-12)


def test_boundary_point_value_semantics():
    assert BoundaryPoint(1.0) == BoundaryPoint(1.0 + TWO_PI)
    assert len({BoundaryPoint(0.5), BoundaryPoint(0.5)}) == 1
    assert BoundaryPoint(0.1).separation(BoundaryPoint(TWO_PI - 0.1)) == (
        pytest.approx(0.2)
    )
    assert abs(BoundaryPoint(math.pi / 2).point - 1j) < 1e-15
    with pytest.raises(AttributeError):
        BoundaryPoint(0.0).angle = 1.0


def test_boundary_point_from_complex():
    assert BoundaryPoint.from_complex(-2.0).angle == pytest.approx(math.pi)
    with pytest.raises(InputError):
        BoundaryPoint.from_complex(0)


def test_poly_arithmetic():
    p = Poly([1, 2])
    q = Poly([0, 1])
    assert p * q == Poly([0, 1, 2])
    assert p + 1 == Poly([2, 2])
    assert 1 - p == Poly([0, -2])
    assert (p * Poly.zero()).is_zero()
    assert Poly([1, 0, 0]) == Poly([1])
    assert Poly([1, 2, 3]).derivative() == Poly([2, 6])
    assert Poly.monomial(3, 2j) == Poly([0, 0, 0, 2j])
    assert Poly.zero().degree == -1


def test_poly_from_roots():
    p = Poly.from_roots([0.0, math.pi])
    assert p.allclose(Poly([-1, 0, 1]), atol=1e-15)


def test_poly_eval_shapes():
    p = Poly([1, 1, 1])
    assert isinstance(poly_eval(p, 0.5), complex)
    assert poly_eval(p, 0.5) == pytest.approx(1.75)
    values = p(np.array([0.0, 1j]))
    np.testing.assert_allclose(values, [1.0, 1j])


def test_h2_inner_products():
    p = Poly([1, 1j])
    q = Poly([2, 1, 5])
    assert h2_inner(p, q) == pytest.approx(2 + 1j)
    assert h2_norm_sq(q) == pytest.approx(30.0)
    assert h2_inner(q, p) == pytest.approx(np.conj(h2_inner(p, q)))


def test_divided_quotient_example():
    assert divided_quotient(Poly.monomial(3), 0.0) == Poly([1, 1, 1])
    assert divided_quotient(Poly([5]), 1.0).is_zero()


@pytest.mark.property
@settings(deadline=None, max_examples=50)
@given(
    p=conftest.polys(max_degree=12),
    k=st.integers(0, conftest.ANGLE_GRID - 1),
)
def test_division_identity(p, k):
    lam = cmath.exp(1j * TWO_PI * k / conftest.ANGLE_GRID)
    q = divided_quotient(p, TWO_PI * k / conftest.ANGLE_GRID)
    rebuilt = Poly([-lam, 1]) * q + poly_eval(p, lam)
    assert rebuilt.allclose(p, atol=1e-12)


def test_divide_out_roots():
    roots = [0.0, 2.0, 4.0]
    g = Poly([1, -2j, 0.5])
    p = Poly.from_roots(roots) * g
    assert divide_out_roots(p, roots).allclose(g, atol=1e-12)


def test_divide_out_roots_rejects():
    with pytest.raises(NotARoot) as excinfo:
        divide_out_roots(Poly([1, 1]), [0.0])
    assert excinfo.value.residual == pytest.approx(2.0)
    with pytest.raises(DuplicateNodes):
        divide_out_roots(Poly.from_roots([0.0]), [0.0, TWO_PI])


def test_lagrange_interp_at_nodes():
    nodes = [0.0, 1.0, 2.5, 4.0]
    values = [1.0, -2j, 0.0, 3 + 1j]
    p = lagrange_interp(nodes, values)
    assert p.degree <= len(nodes) - 1
    for angle, value in zip(nodes, values):
        assert abs(p(cmath.exp(1j * angle)) - value) < 1e-12


@pytest.mark.parametrize(
    ('nodes', 'values', 'error'),
    [
        pytest.param([0.0, 1.0], [1.0], InputError, id='lengths'),
        pytest.param([], [], InputError, id='empty'),
        pytest.param([1.0, 1.0], [1.0, 2.0], DuplicateNodes, id='duplicate'),
    ],
)
def test_lagrange_interp_rejects(nodes, values, error):
    with pytest.raises(error):
        lagrange_interp(nodes, values)


def test_szego_kernel_reproduces():
    w = 0.3 + 0.4j
    k = Poly(np.conj(w) ** np.arange(80))
    assert abs(k(0.1j) - szego_kernel(w, 0.1j)) < 1e-14
    f = Poly([1, -1, 2j])
    assert h2_inner(f, k) == pytest.approx(f(w), abs=1e-14)
