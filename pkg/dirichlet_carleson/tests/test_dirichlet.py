import math

import numpy as np
import pytest
from hypothesis import given, settings
from scipy import special

from dirichlet_carleson.dirichlet import (
    DirichletSpace,
    decompose,
    dirichlet_mu,
    dirichlet_mu_form,
    dirichlet_mu_area,
    dmu_inner,
    dmu_norm_sq,
    explicit_product_bound,
    gram_matrix,
    gram_matrix_direct,
    local_dirichlet,
    norm_inequality_ratio,
    weighted_dirichlet_norm_sq,
)
from dirichlet_carleson.exceptions import InputError
from dirichlet_carleson.hardy import Poly, h2_norm_sq
from dirichlet_carleson.measures import AtomicBoundaryMeasure
from dirichlet_carleson.quadrature import disk_quadrature

from . import conftest


@pytest.mark.parametrize('n', [1, 2, 5, 40])
@pytest.mark.parametrize('angle', [0.0, 1.0, math.pi])
def test_local_dirichlet_monomials(n, angle):
    assert local_dirichlet(Poly.monomial(n), angle) == pytest.approx(n)


def test_norm_examples(delta_one):
    z = Poly([0, 1])
    assert dmu_norm_sq(z, delta_one) == pytest.approx(2.0)
    assert local_dirichlet(Poly([0, 0, 1]), 0.3) == pytest.approx(2.0)
    assert dirichlet_mu(Poly([4]), delta_one) == 0.0


def test_decompose_example(delta_one):
    parts = decompose(Poly.monomial(3), delta_one)
    assert parts.p.allclose(Poly([1]))
    assert parts.g.allclose(Poly([1, 1, 1]))


@pytest.mark.property
@settings(deadline=None, max_examples=40)
@given(f=conftest.polys(max_degree=10), mu=conftest.boundary_measures())
def test_decompose_roundtrip(f, mu):
    parts = decompose(f, mu)
    assert parts.p.degree <= mu.n - 1
    assert parts.reconstruct(mu).allclose(f, atol=1e-8)
    for point in mu.points:
        assert abs(parts.p(point.point) - f(point.point)) < 1e-8


def test_decompose_idempotent_on_interpolant(three_atoms):
    p = Poly([1, 2j, -1])
    parts = decompose(p, three_atoms)
    assert parts.p.allclose(p, atol=1e-12)
    assert parts.g.allclose(Poly.zero(), atol=1e-12)


@pytest.mark.property
@settings(deadline=None, max_examples=25)
@given(f=conftest.polys(max_degree=8), mu=conftest.boundary_measures())
def test_area_integral_matches_local_sum(f, mu):
    expected = dirichlet_mu(f, mu)
    value = dirichlet_mu_area(f, mu)
    assert value == pytest.approx(expected, rel=1e-7, abs=1e-9)


def test_area_integral_fixed_rule(two_atoms):
    f = Poly([0.5, -1, 2j, 0, 1])
    quad = disk_quadrature(64, 64)
    assert dirichlet_mu_area(f, two_atoms, quad=quad) == pytest.approx(
        dirichlet_mu(f, two_atoms), rel=1e-10
    )


def test_area_integral_modes(delta_one):
    assert dirichlet_mu_area(Poly([3]), delta_one, mode='pointwise') == 0.0
    with pytest.raises(InputError, match='unknown mode'):
        dirichlet_mu_area(Poly([0, 1]), delta_one, mode='exact')


def test_gram_matrix_example():
    mu = AtomicBoundaryMeasure([(math.pi / 2, 1.0)])
    gram = gram_matrix(mu, 3)
    assert gram.matrix[3, 2] == pytest.approx(2j)
    assert gram.size == 4
    with pytest.raises(ValueError):
        gram.matrix[0, 0] = 0


def test_gram_matrix_closed_form(three_atoms):
    gram = gram_matrix(three_atoms, 20).matrix
    direct = gram_matrix_direct(three_atoms, 20)
    np.testing.assert_allclose(gram, direct, rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(gram, gram.conj().T, atol=1e-15)


def test_gram_inner_and_cholesky(two_atoms):
    gram = gram_matrix(two_atoms, 6)
    f, g = Poly([1, 0, 1j, 2]), Poly([0, 1, -1, 0, 0, 0, 3])
    assert gram.inner(f, g) == pytest.approx(dmu_inner(f, g, two_atoms))
    rhs = np.arange(7, dtype=complex)
    np.testing.assert_allclose(
        gram.matrix @ gram.solve(rhs), rhs, atol=1e-9
    )
    with pytest.raises(InputError):
        gram_matrix(two_atoms, -1)


def test_explicit_product_bound(delta_one, two_atoms, three_atoms):
    assert explicit_product_bound(delta_one) == 1.0
    assert explicit_product_bound(two_atoms) == pytest.approx(1.0)
    assert explicit_product_bound(three_atoms) is None


@pytest.mark.property
@settings(deadline=None, max_examples=40)
@given(
    g=conftest.polys(max_degree=6),
    mu=conftest.boundary_measures(max_atoms=2),
)
def test_product_bound_holds(g, mu):
    product = Poly.from_roots(mu.points) * g
    bound = explicit_product_bound(mu)
    assert bound * h2_norm_sq(g) <= dmu_norm_sq(product, mu) * (1 + 1e-9)


def test_norm_inequality_ratio(two_atoms):
    f = Poly([1, 2, 3, 4, 5])
    ratio = norm_inequality_ratio(f, two_atoms)
    assert 0 < ratio < math.inf
    with pytest.raises(InputError):
        norm_inequality_ratio(Poly.zero(), two_atoms)


@pytest.mark.parametrize('alpha', [0.0, 0.5, 1.0])
def test_weighted_dirichlet_norm(alpha):
    f = Poly([1, 1, 1])
    if alpha == 1.0:
        expected = h2_norm_sq(f)
    elif alpha == 0.0:
        expected = 1 + 2 + 3
    else:
        weights = special.binom(np.arange(3) + alpha - 1, np.arange(3))
        expected = float(np.sum(1.0 / weights))
    assert weighted_dirichlet_norm_sq(f, alpha) == pytest.approx(expected)
    with pytest.raises(InputError):
        weighted_dirichlet_norm_sq(f, 1.5)


def test_dirichlet_space(three_atoms):
    space = DirichletSpace(three_atoms)
    f = Poly([0, 1, 1])
    assert space.n == 3
    assert space.norm(f) ** 2 == pytest.approx(space.norm_sq(f))
    assert space.norm_sq(f) == pytest.approx(
        h2_norm_sq(f) + space.dirichlet(f)
    )
    assert space.inner(f, f) == pytest.approx(space.norm_sq(f))
    assert space.gram(4).degree == 4
    with pytest.raises(InputError):
        DirichletSpace([(0.0, 1.0)])


def test_dirichlet_mu_form(two_atoms):
    f = Poly([1.0, 2.0 - 1.0j, 0.5j])
    g = Poly([0.0, 1.0, -1.0, 3.0])
    assert dirichlet_mu_form(f, g, two_atoms) == pytest.approx(
        np.conj(dirichlet_mu_form(g, f, two_atoms)), abs=1e-12
    )
    assert dirichlet_mu_form(f, f, two_atoms).real == pytest.approx(
        dirichlet_mu(f, two_atoms), rel=1e-12
    )
