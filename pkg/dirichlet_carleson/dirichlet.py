"""The Dirichlet-type space D(μ) for a finitely atomic boundary measure μ.

For μ = Σ αⱼ δ_{λⱼ} the Dirichlet integral splits into local integrals,

    D_μ(f) = Σ αⱼ D_{λⱼ}(f),    D_λ(f) = ||(f − f(λ))/(z − λ)||₂²,

and the norm is ||f||²_μ = ||f||₂² + D_μ(f). The same quantity is also
available as the area integral ∫ |f′|² P_μ dA, which is evaluated
independently by quadrature.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from typing import Optional

import numpy as np
from loguru import logger
from scipy import linalg, special

from . import config
from .exceptions import InputError, QuadratureNotConverged, SolveFailed
from .hardy import (
    Poly,
    as_boundary_point,
    divide_out_roots,
    divided_quotient,
    h2_inner,
    h2_norm,
    h2_norm_sq,
    lagrange_interp,
    poly_eval,
)
from .measures import AtomicBoundaryMeasure, poisson_extension
from .quadrature import DiskQuadrature, disk_quadrature

__all__ = (
    'DirichletSpace',
    'Decomposition',
    'GramMatrix',
    'local_dirichlet',
    'local_dirichlet_form',
    'dirichlet_mu',
    'dirichlet_mu_form',
    'dirichlet_mu_area',
    'dmu_norm_sq',
    'dmu_norm',
    'dmu_inner',
    'decompose',
    'gram_matrix',
    'gram_matrix_direct',
    'explicit_product_bound',
    'norm_inequality_ratio',
    'weighted_dirichlet_norm_sq',
)


def local_dirichlet(f: Poly, lam) -> float:
    """Return D_λ(f) = ||(f − f(λ))/(z − λ)||₂².

    Examples
    --------
    >>> local_dirichlet(Poly([0, 0, 1]), 0.0)
    2.0
    """
    return h2_norm_sq(divided_quotient(f, lam))


def local_dirichlet_form(f: Poly, g: Poly, lam) -> complex:
    """Polarized local Dirichlet integral, linear in ``f``."""
    lam = as_boundary_point(lam)
    return h2_inner(divided_quotient(f, lam), divided_quotient(g, lam))


def dirichlet_mu(f: Poly, mu: AtomicBoundaryMeasure) -> float:
    """Return D_μ(f) = Σ αⱼ D_{λⱼ}(f)."""
    return float(
        sum(mass * local_dirichlet(f, point) for point, mass in mu.atoms)
    )


def dirichlet_mu_form(f: Poly, g: Poly, mu: AtomicBoundaryMeasure) -> complex:
    return complex(
        sum(
            mass * local_dirichlet_form(f, g, point)
            for point, mass in mu.atoms
        )
    )


def _spectral_area(derivative: Poly, mu, quad: DiskQuadrature) -> float:
    # ring by ring: Fourier coefficients of |f′|² against the Poisson
    # multiplier r^{|k|} λ^k
    samples = np.abs(poly_eval(derivative, quad.nodes)) ** 2
    n_theta = quad.n_theta
    coeffs = np.fft.fft(samples, axis=1) / n_theta
    k = np.rint(np.fft.fftfreq(n_theta, d=1.0 / n_theta))
    phases = np.zeros(n_theta, dtype=complex)
    for point, mass in mu.atoms:
        phases += mass * np.exp(1j * k * point.angle)
    damping = quad.radii[:, None] ** np.abs(k)[None, :]
    rings = np.real(np.sum(coeffs * damping * phases[None, :], axis=1))
    return float(np.dot(quad.radial_weights, rings))


def _pointwise_area(derivative: Poly, mu, quad: DiskQuadrature) -> float:
    return float(
        quad.integrate(
            lambda z: np.abs(poly_eval(derivative, z)) ** 2
            * poisson_extension(mu, z)
        )
    )


_AREA_MODES = {'spectral': _spectral_area, 'pointwise': _pointwise_area}


def dirichlet_mu_area(
    f: Poly,
    mu: AtomicBoundaryMeasure,
    quad: Optional[DiskQuadrature] = None,
    mode: str = 'spectral',
    tol: Optional[float] = None,
) -> float:
    """Evaluate D_μ(f) = ∫ |f′|² P_μ dA by quadrature.

    Parameters
    ----------
    f : Poly
    mu : AtomicBoundaryMeasure
    quad : DiskQuadrature, optional
        Rule to use. When omitted, rules sized from the degree of ``f`` are
        doubled until two successive values agree to ``tol``.
    mode : {'spectral', 'pointwise'}
        ``spectral`` integrates every ring exactly against the Poisson
        kernel through its Fourier series; ``pointwise`` multiplies node
        values of |f′|² and P_μ.
    tol : float, optional
        Relative agreement required when refining (quadrature tolerance by
        default).

    Returns
    -------
    float

    Raises
    ------
    QuadratureNotConverged
        if refinement stalls.
    """
    try:
        area = _AREA_MODES[mode]
    except KeyError:
        raise InputError(
            'unknown mode {!r}, expected one of {}'.format(
                mode, ', '.join(_AREA_MODES)
            )
        )
    derivative = f.derivative()
    if derivative.is_zero():
        return 0.0
    if quad is not None:
        return area(derivative, mu, quad)

    tol = config.tolerance('quadrature', tol)
    n_r = max(8, derivative.degree + 4)
    n_theta = max(8, 2 * derivative.degree + 4)
    previous = area(derivative, mu, disk_quadrature(n_r, n_theta))
    while n_r <= 2048:
        n_r, n_theta = 2 * n_r, 2 * n_theta
        value = area(derivative, mu, disk_quadrature(n_r, n_theta))
        error = abs(value - previous)
        logger.debug(
            'area Dirichlet integral n_r={} n_theta={}: {} (change {:.2e})',
            n_r,
            n_theta,
            value,
            error,
        )
        if error <= tol * (1.0 + abs(value)):
            return value
        previous = value
    raise QuadratureNotConverged(value, error, tol, where='dirichlet area')


def dmu_inner(f: Poly, g: Poly, mu: AtomicBoundaryMeasure) -> complex:
    """Return ⟨f, g⟩_μ = ⟨f, g⟩₂ + Σ αⱼ ⟨f, g⟩_{λⱼ}."""
    return h2_inner(f, g) + dirichlet_mu_form(f, g, mu)


def dmu_norm_sq(f: Poly, mu: AtomicBoundaryMeasure) -> float:
    """Return ||f||²_μ = ||f||₂² + D_μ(f)."""
    return h2_norm_sq(f) + dirichlet_mu(f, mu)


def dmu_norm(f: Poly, mu: AtomicBoundaryMeasure) -> float:
    return math.sqrt(dmu_norm_sq(f, mu))


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """f = p + ∏ (z − λⱼ)·g with deg p ≤ n − 1."""

    p: Poly
    g: Poly

    def reconstruct(self, mu: AtomicBoundaryMeasure) -> Poly:
        return self.p + Poly.from_roots(mu.points) * self.g


def decompose(f: Poly, mu: AtomicBoundaryMeasure) -> Decomposition:
    """Split ``f`` into its interpolating part and a multiple of ∏(z − λⱼ).

    ``p`` interpolates ``f`` at the atoms; ``g`` is obtained by dividing
    f − p by the linear factors one at a time.

    Examples
    --------
    >>> d = decompose(Poly([0, 0, 0, 1]), AtomicBoundaryMeasure([(0, 1)]))
    >>> d.p, d.g
    (<Poly [1.+0.j]>, <Poly [1.+0.j 1.+0.j 1.+0.j]>)
    """
    points = mu.points
    values = [poly_eval(f, point.point) for point in points]
    p = lagrange_interp(points, values)
    g = divide_out_roots(f - p, points)
    return Decomposition(p=p, g=g.normalize())


@dataclasses.dataclass(frozen=True)
class GramMatrix:
    """G[m, k] = ⟨zᵐ, zᵏ⟩_μ for 0 ≤ m, k ≤ N."""

    mu: AtomicBoundaryMeasure
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def degree(self) -> int:
        return self.size - 1

    def inner(self, f: Poly, g: Poly) -> complex:
        """⟨f, g⟩_μ for polynomials of degree ≤ N."""
        fc, gc = f.padded(self.size), g.padded(self.size)
        return complex(fc @ self.matrix @ np.conj(gc))

    @functools.cached_property
    def cholesky(self):
        """Upper Cholesky factor in ``scipy.linalg.cho_factor`` form.

        Raises
        ------
        SolveFailed
            if the matrix is not numerically positive definite.
        """
        try:
            factor = linalg.cho_factor(
                self.matrix, lower=False, check_finite=False
            )
        except linalg.LinAlgError as e:
            raise SolveFailed(self.size, str(e))
        diagonal = np.abs(np.diag(factor[0]))
        logger.debug(
            'Gram factorization of size {} (condition estimate {:.2e})',
            self.size,
            (diagonal.max() / diagonal.min()) ** 2,
        )
        return factor

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        return linalg.cho_solve(self.cholesky, rhs, check_finite=False)

    def __repr__(self):
        return '<GramMatrix N={} {!r}>'.format(self.degree, self.mu)


@functools.lru_cache(maxsize=16)
def gram_matrix(mu: AtomicBoundaryMeasure, N: int) -> GramMatrix:
    """Assemble the monomial Gram matrix of D(μ) in closed form.

    G[m, k] = δ_{mk} + Σⱼ αⱼ·min(m, k)·λⱼ^{m−k}.

    Examples
    --------
    >>> gram_matrix(AtomicBoundaryMeasure([(math.pi / 2, 1)]), 3).matrix[3, 2]
    2j
    """
    if N < 0:
        raise InputError('Gram size N must be >= 0, got {}'.format(N))
    m = np.arange(N + 1)
    low = np.minimum.outer(m, m).astype(float)
    shift = np.subtract.outer(m, m)
    matrix = np.eye(N + 1, dtype=complex)
    for point, mass in mu.atoms:
        matrix += mass * low * np.exp(1j * point.angle * shift)
    matrix.setflags(write=False)
    return GramMatrix(mu=mu, matrix=matrix)


def gram_matrix_direct(mu: AtomicBoundaryMeasure, N: int) -> np.ndarray:
    """Gram matrix from divided-quotient inner products, entry by entry."""
    monomials = [Poly.monomial(n) for n in range(N + 1)]
    matrix = np.empty((N + 1, N + 1), dtype=complex)
    for m, zm in enumerate(monomials):
        for k, zk in enumerate(monomials):
            matrix[m, k] = h2_inner(zm, zk) + dirichlet_mu_form(zm, zk, mu)
    return matrix


def explicit_product_bound(mu: AtomicBoundaryMeasure) -> Optional[float]:
    """Constant c with c·||g||₂² ≤ ||∏(z − λⱼ)·g||²_μ when it is explicit.

    One atom: c = α₁. Two atoms: c = min(α₁, α₂)·|λ₁ − λ₂|²/2. ``None`` for
    three or more atoms.
    """
    if mu.n == 1:
        return float(mu.masses[0])
    if mu.n == 2:
        lam1, lam2 = mu.lambdas
        return float(np.min(mu.masses) * abs(lam1 - lam2) ** 2 / 2.0)
    return None


def norm_inequality_ratio(f: Poly, mu: AtomicBoundaryMeasure) -> float:
    """Return ||g||₂/||f||_μ for the decomposition of ``f``."""
    norm = dmu_norm(f, mu)
    if norm == 0:
        raise InputError('the ratio is undefined for the zero function')
    return h2_norm(decompose(f, mu).g) / norm


def _weighted_dirichlet_weights(n: int, alpha: float) -> np.ndarray:
    # Taylor coefficients cₖ of the kernel: Σ cₖ uᵏ = (1 − u)^{−α}, or
    # log(1/(1 − u))/u when α = 0
    k = np.arange(n)
    if alpha == 0:
        return 1.0 / (k + 1.0)
    return np.exp(
        special.gammaln(k + alpha) - special.gammaln(alpha)
        - special.gammaln(k + 1.0)
    )


def weighted_dirichlet_norm_sq(f: Poly, alpha: float) -> float:
    """Norm of the weighted Dirichlet space D_α with kernel k^α.

    ||f||² = Σ |aₙ|²/cₙ where cₙ are the Taylor coefficients of the kernel;
    α = 1 gives H², α = 0 gives Σ (n + 1)|aₙ|².
    """
    alpha = float(alpha)
    if not 0 <= alpha <= 1:
        raise InputError('alpha must lie in [0, 1], got {!r}'.format(alpha))
    weights = _weighted_dirichlet_weights(len(f), alpha)
    return float(np.sum(np.abs(f.coeffs) ** 2 / weights))


class DirichletSpace:
    """D(μ) for μ = Σ αⱼ δ_{λⱼ}.

    Parameters
    ----------
    mu : AtomicBoundaryMeasure

    Examples
    --------
    >>> space = DirichletSpace(AtomicBoundaryMeasure([(0, 1)]))
    >>> space.norm_sq(Poly([0, 1]))
    2.0
    """

    __slots__ = ('mu',)

    def __init__(self, mu: AtomicBoundaryMeasure):
        if not isinstance(mu, AtomicBoundaryMeasure):
            raise InputError(
                'expected an AtomicBoundaryMeasure, got {!r}'.format(mu)
            )
        self.mu = mu

    @property
    def n(self) -> int:
        return self.mu.n

    def local(self, f: Poly, lam) -> float:
        return local_dirichlet(f, lam)

    def dirichlet(self, f: Poly) -> float:
        return dirichlet_mu(f, self.mu)

    def dirichlet_area(self, f: Poly, **kwargs) -> float:
        return dirichlet_mu_area(f, self.mu, **kwargs)

    def inner(self, f: Poly, g: Poly) -> complex:
        return dmu_inner(f, g, self.mu)

    def norm_sq(self, f: Poly) -> float:
        return dmu_norm_sq(f, self.mu)

    def norm(self, f: Poly) -> float:
        return dmu_norm(f, self.mu)

    def decompose(self, f: Poly) -> Decomposition:
        return decompose(f, self.mu)

    def gram(self, N: int) -> GramMatrix:
        return gram_matrix(self.mu, N)

    def __repr__(self):
        return '<DirichletSpace {!r}>'.format(self.mu)
