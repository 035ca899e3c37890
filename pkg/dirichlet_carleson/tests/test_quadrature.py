import math

import numpy as np
import pytest

from dirichlet_carleson.exceptions import InputError
from dirichlet_carleson.quadrature import (
    circle_quadrature,
    disk_quadrature,
    graded_ray_rule,
    polar_box_quadrature,
)


def test_disk_quadrature_mass():
    quad = disk_quadrature(16, 16)
    assert quad.weights.shape == (16, 16)
    assert quad.weights.sum() == pytest.approx(1.0, abs=1e-14)
    assert quad.integrate(lambda z: np.abs(z) ** 4) == pytest.approx(1 / 3)


def test_disk_quadrature_is_cached_and_read_only():
    quad = disk_quadrature(8, 8)
    assert disk_quadrature(8, 8) is quad
    with pytest.raises(ValueError):
        quad.weights[0, 0] = 1.0


def test_disk_quadrature_monomials_vanish():
    quad = disk_quadrature(8, 16)
    assert abs(quad.integrate(lambda z: z**3)) < 1e-14


def test_disk_quadrature_converges():
    exact = math.log(6.0)

    def f(z):
        # ∫ 5/(1 + 5|z|²) dA = log 6
        return 5.0 / (1.0 + 5.0 * np.abs(z) ** 2)

    errors = [
        abs(disk_quadrature(n, 64).integrate(f) - exact) for n in (4, 8)
    ]
    assert errors[1] < errors[0] / 4


@pytest.mark.parametrize(
    ('n_r', 'n_theta'),
    [pytest.param(3, 8, id='radial'), pytest.param(8, 2, id='angular')],
)
def test_disk_quadrature_rejects_small(n_r, n_theta):
    with pytest.raises(InputError):
        disk_quadrature(n_r, n_theta)


def test_circle_quadrature_mean_value():
    points, weights = circle_quadrature(0.7, 32)
    assert np.abs(points) == pytest.approx(np.full(32, 0.7))
    assert np.dot(weights, 1.0 / (2.0 - points)) == pytest.approx(0.5)
    with pytest.raises(InputError):
        circle_quadrature(0.5, 0)


def test_polar_box_quadrature_area():
    h, beta = 0.25, 0.3
    _, weights = polar_box_quadrature(1 - h, 1.0, 2.0, beta, 8, 8)
    assert weights.sum() == pytest.approx(beta / math.pi * (2 * h - h * h))


def test_graded_ray_rule():
    t, weights = graded_ray_rule(8, 0.5)
    assert weights.sum() == pytest.approx(1.0, abs=1e-13)
    assert np.all((t > 0) & (t < 1))
    # ∫₀¹ t^{-1/2} dt, singular at the graded end
    assert np.dot(weights, t**-0.5) == pytest.approx(2.0, rel=1e-4)
