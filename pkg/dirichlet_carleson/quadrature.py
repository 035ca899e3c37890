"""Quadrature rules on the disk, the circle and polar boxes.

Areas are measured with the normalized area measure dA = r dr dθ / π, so the
unit disk has mass one.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from typing import Callable, Tuple

import numpy as np

from .exceptions import InputError

TWO_PI = 2 * math.pi


@functools.lru_cache(maxsize=64)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return read-only Gauss–Legendre nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre_interval(n: int, a: float, b: float):
    """Return Gauss–Legendre nodes and weights mapped to [a, b]."""
    x, w = gauss_legendre(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


@dataclasses.dataclass(frozen=True)
class DiskQuadrature:
    """Tensor polar rule for the normalized area measure.

    ``nodes`` and ``weights`` have shape ``(n_r, n_theta)``: row ``i`` is the
    ring of radius ``radii[i]``.
    """

    n_r: int
    n_theta: int
    radii: np.ndarray
    radial_weights: np.ndarray
    angles: np.ndarray
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.n_r * self.n_theta

    def integrate(self, f: Callable) -> float:
        """Return Σ wᵢ f(zᵢ) with ``f`` evaluated on all nodes at once."""
        values = np.asarray(f(self.nodes))
        values = np.broadcast_to(values, self.nodes.shape)
        # fixed-order reduction
        return np.dot(self.weights.ravel(), values.ravel())

    def __repr__(self):
        return '<DiskQuadrature n_r={} n_theta={}>'.format(
            self.n_r, self.n_theta
        )


@functools.lru_cache(maxsize=32)
def disk_quadrature(n_r: int, n_theta: int) -> DiskQuadrature:
    """Build the Gauss–Legendre × trapezoid rule on the unit disk.

    Radial nodes are Gauss–Legendre nodes mapped to [0, 1] and weighted by
    2r; angular nodes are 2πj/n_θ with weight 1/n_θ. The weights sum to one.

    Parameters
    ----------
    n_r : int
        Radial node count, at least 4.
    n_theta : int
        Angular node count, at least 4.

    Returns
    -------
    DiskQuadrature

    Raises
    ------
    InputError
        if either count is below 4.

    Examples
    --------
    >>> quad = disk_quadrature(32, 32)
    >>> round(quad.integrate(lambda z: abs(z) ** 4), 12)
    0.333333333333
    """
    if int(n_r) < 4 or int(n_theta) < 4:
        raise InputError(
            'disk quadrature needs n_r, n_theta >= 4, got {}, {}'.format(
                n_r, n_theta
            )
        )
    n_r, n_theta = int(n_r), int(n_theta)
    radii, w = gauss_legendre_interval(n_r, 0.0, 1.0)
    # ∫₀¹ g(r) 2r dr
    radial_weights = 2.0 * w * radii
    angles = TWO_PI * np.arange(n_theta) / n_theta
    nodes = np.outer(radii, np.exp(1j * angles))
    weights = np.outer(radial_weights, np.full(n_theta, 1.0 / n_theta))
    for arr in (radii, radial_weights, angles, nodes, weights):
        arr.setflags(write=False)
    return DiskQuadrature(
        n_r=n_r,
        n_theta=n_theta,
        radii=radii,
        radial_weights=radial_weights,
        angles=angles,
        nodes=nodes,
        weights=weights,
    )


def circle_quadrature(r: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return the n-point trapezoid rule for the mean over |z| = r."""
    if n < 1:
        raise InputError('circle quadrature needs n >= 1, got {}'.format(n))
    points = r * np.exp(1j * TWO_PI * np.arange(n) / n)
    return points, np.full(n, 1.0 / n)


def polar_box_quadrature(
    r0: float,
    r1: float,
    center: float,
    halfwidth: float,
    n_r: int,
    n_phi: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss rule on the polar box r0 < r < r1, |φ − center| < halfwidth.

    Weights are in normalized area units (r dr dφ / π).

    Returns
    -------
    nodes : ndarray of complex
    weights : ndarray of float
    """
    r, wr = gauss_legendre_interval(n_r, r0, r1)
    phi, wphi = gauss_legendre_interval(
        n_phi, center - halfwidth, center + halfwidth
    )
    nodes = np.outer(r, np.exp(1j * phi)).ravel()
    weights = np.outer(wr * r, wphi).ravel() / math.pi
    return nodes, weights


def graded_ray_rule(
    n: int, exponent: float, levels: int = 48
) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss rule on t ∈ (0, 1] graded towards t = 0.

    Panels are [T_{k+1}, T_k] with T_k = (2^{-k})^exponent, plus [0, T_levels]
    so that functions of s = t^{1/exponent} with features at every dyadic
    scale of s are resolved with a fixed number of nodes per scale.

    Returns
    -------
    t : ndarray
    weights : ndarray
    """
    breaks = np.concatenate(
        [2.0 ** (-exponent * np.arange(levels + 1)), [0.0]]
    )
    x, w = gauss_legendre(n)
    a, b = breaks[1:], breaks[:-1]
    half = 0.5 * (b - a)
    t = (a[:, None] + half[:, None] * (x[None, :] + 1.0)).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return t, weights
