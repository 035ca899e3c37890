"""Reproducing kernels of D(μ), of H² and of the weighted Dirichlet spaces.

For a single atom μ = α·δ_λ the space D(μ) coincides with the de
Branges–Rovnyak space H(b_λ) with

    b_λ(z) = (1 − a₀)·conj(λ)·z / (1 − a₀·conj(λ)·z),

a₀ being the smaller root of (a₀ − 1)² = α·a₀, so that its kernel is
(1 − conj(b(w))·b(z))/(1 − conj(w)·z). No such formula is available for
several atoms; there the kernel is approximated by its section on the
polynomials of degree ≤ N, obtained from the monomial Gram system.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from typing import Iterable, Optional, Sequence

import numpy as np
from loguru import logger
from scipy import linalg, signal

from . import config
from .dirichlet import GramMatrix, gram_matrix
from .exceptions import (
    InputError,
    NonPositiveAlpha,
    OutsideDisk,
    SolveFailed,
)
from .hardy import BoundaryPoint, Poly, as_boundary_point, poly_eval
from .hardy import szego_kernel as _szego_kernel
from .measures import AtomicBoundaryMeasure

__all__ = (
    'solve_a0',
    'OneAtomKernelModel',
    'b_lambda',
    'one_atom_kernel',
    'inf4_margin',
    'inf2_ratio',
    'angular_ratio',
    'normalized_kernel_value',
    'weighted_dirichlet_kernel',
    'SzegoKernel',
    'OneAtomKernel',
    'TruncatedKernel',
    'TruncatedKernelSpace',
    'default_truncation_degree',
    'truncated_kernel',
    'kernel_for',
    'atom_constants',
    'posdef_probe',
)


def _check_disk(w):
    if not abs(w) < 1:
        raise OutsideDisk(w)
    return complex(w)


def solve_a0(alpha: float) -> float:
    """Return the smaller root a₀ ∈ (0, 1) of (a₀ − 1)² = α·a₀.

    Computed as 2/((2 + α) + sqrt(α(4 + α))), which equals
    ((2 + α) − sqrt((2 + α)² − 4))/2 without the cancellation for small α.

    Raises
    ------
    NonPositiveAlpha
        if α ≤ 0.

    Examples
    --------
    >>> round(solve_a0(1.0), 7)
    0.381966
    """
    alpha = float(alpha)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise NonPositiveAlpha(alpha)
    return 2.0 / ((2.0 + alpha) + math.sqrt(alpha * (4.0 + alpha)))


@dataclasses.dataclass(frozen=True)
class OneAtomKernelModel:
    """Kernel data of D(α·δ_λ)."""

    lam: BoundaryPoint
    alpha: float
    a0: float = dataclasses.field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'lam', as_boundary_point(self.lam))
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'a0', solve_a0(self.alpha))

    @classmethod
    def from_measure(cls, mu: AtomicBoundaryMeasure) -> OneAtomKernelModel:
        if mu.n != 1:
            raise InputError(
                'closed-form kernels need a single atom, got {}'.format(mu.n)
            )
        (point, mass), = mu.atoms
        return cls(point, mass)

    @property
    def residual(self) -> float:
        """(a₀ − 1)² − α·a₀, zero up to rounding."""
        return (self.a0 - 1.0) ** 2 - self.alpha * self.a0

    def b(self, z):
        return b_lambda(self, z)

    def kernel(self, w: complex) -> OneAtomKernel:
        return OneAtomKernel(self, w)


def b_lambda(model: OneAtomKernelModel, z):
    """Return b_λ(z) = (1 − a₀)·conj(λ)·z / (1 − a₀·conj(λ)·z)."""
    x = np.conj(model.lam.point) * z
    return (1.0 - model.a0) * x / (1.0 - model.a0 * x)


def one_atom_kernel(model: OneAtomKernelModel, w, z):
    """Return k_w(z) = (1 − conj(b(w))·b(z))/(1 − conj(w)·z)."""
    bw = b_lambda(model, w)
    return (1.0 - np.conj(bw) * b_lambda(model, z)) / (1.0 - np.conj(w) * z)


def inf4_margin(model: OneAtomKernelModel, z):
    """Return (1 − |b_λ(z)|²) − a₀|z − λ|²/|λ − a₀z|², which is ≥ 0."""
    lam, a0 = model.lam.point, model.a0
    return (1.0 - np.abs(b_lambda(model, z)) ** 2) - a0 * np.abs(
        z - lam
    ) ** 2 / np.abs(lam - a0 * z) ** 2


def inf2_ratio(model: OneAtomKernelModel, z):
    """Return (1 − |b_λ(z)|²)/|z − λ|², bounded below by a₀/(1 + a₀)²."""
    return (1.0 - np.abs(b_lambda(model, z)) ** 2) / np.abs(
        z - model.lam.point
    ) ** 2


def angular_ratio(model: OneAtomKernelModel, w):
    """Return (1 − |w|²)/(1 − |b_λ(w)|²).

    Tends to zero along radii ending at ζ ≠ λ and to 1 − a₀ along the
    radius ending at the atom.
    """
    return (1.0 - np.abs(w) ** 2) / (1.0 - np.abs(b_lambda(model, w)) ** 2)


def normalized_kernel_value(model: OneAtomKernelModel, w, z):
    """Return k_w(z)/||k_w||."""
    return one_atom_kernel(model, w, z) / np.sqrt(
        np.real(one_atom_kernel(model, w, w))
    )


def weighted_dirichlet_kernel(alpha: float, w, z):
    """Kernel of the weighted Dirichlet space D_α.

    (1 − conj(w)·z)^{−α} for α ∈ (0, 1]; log(1/(1 − u))/u with
    u = conj(w)·z for α = 0, by its series when |u| < 0.25.
    """
    alpha = float(alpha)
    if not 0 <= alpha <= 1:
        raise InputError('alpha must lie in [0, 1], got {!r}'.format(alpha))
    u = np.conj(w) * np.asarray(z, dtype=complex)
    if alpha > 0:
        value = (1.0 - u) ** (-alpha)
        return complex(value) if value.ndim == 0 else value
    small = np.abs(u) < 0.25
    safe = np.where(small, 0.5, u)
    closed = -np.log1p(-safe) / safe
    n = np.arange(20)
    series = np.sum(
        np.where(small, u, 0)[..., None] ** n / (n + 1.0), axis=-1
    )
    value = np.where(small, series, closed)
    return complex(value) if value.ndim == 0 else value


class SzegoKernel:
    """k_w(z) = 1/(1 − conj(w)·z), the reproducing kernel of H²."""

    __slots__ = ('w',)

    def __init__(self, w: complex):
        self.w = _check_disk(w)

    def __call__(self, z):
        return _szego_kernel(self.w, z)

    @property
    def norm_sq(self) -> float:
        return 1.0 / (1.0 - abs(self.w) ** 2)

    def taylor(self, n: int) -> np.ndarray:
        return np.conj(self.w) ** np.arange(n)

    def geometric_terms(self):
        return np.array([1.0 + 0j]), np.array([np.conj(self.w)])

    def __repr__(self):
        return '<SzegoKernel w={:.6g}>'.format(self.w)


class OneAtomKernel:
    """Closed-form kernel of D(α·δ_λ) at a fixed point w."""

    __slots__ = ('model', 'w', 'bw')

    def __init__(self, model: OneAtomKernelModel, w: complex):
        self.model = model
        self.w = _check_disk(w)
        self.bw = complex(b_lambda(model, self.w))

    def __call__(self, z):
        return one_atom_kernel(self.model, self.w, z)

    @property
    def norm_sq(self) -> float:
        """||k_w||² = k_w(w) = (1 − |b(w)|²)/(1 − |w|²)."""
        return (1.0 - abs(self.bw) ** 2) / (1.0 - abs(self.w) ** 2)

    def _forcing(self):
        # 1 − conj(b(w))·b(z) = 1 + Σ_{m≥1} fₘ zᵐ, fₘ = −conj(b(w))·c·a^{m−1}
        lam_bar = np.conj(self.model.lam.point)
        c = (1.0 - self.model.a0) * lam_bar
        a = self.model.a0 * lam_bar
        return -np.conj(self.bw) * c, a

    def taylor(self, n: int) -> np.ndarray:
        """First ``n`` Taylor coefficients, kₘ = conj(w)·kₘ₋₁ + fₘ."""
        scale, a = self._forcing()
        forcing = np.empty(n, dtype=complex)
        forcing[:1] = 1.0
        forcing[1:] = scale * a ** np.arange(n - 1)
        return signal.lfilter([1.0], [1.0, -np.conj(self.w)], forcing)

    def geometric_terms(self):
        """(A, x) with kₘ = Σ Aᵢ xᵢᵐ, or None when the ratios coincide."""
        scale, a = self._forcing()
        w_bar = np.conj(self.w)
        gap = w_bar - a
        if abs(gap) < 1e-6:
            return None
        return (
            np.array([1.0 + scale / gap, -scale / gap]),
            np.array([w_bar, a]),
        )

    def __repr__(self):
        return '<OneAtomKernel w={:.6g} {!r}>'.format(self.w, self.model)


@dataclasses.dataclass(frozen=True)
class TruncatedKernel:
    """Degree-N section k_w^{μ,N} of the reproducing kernel of D(μ)."""

    w: complex
    degree: int
    coeffs: Poly

    def __call__(self, z):
        return poly_eval(self.coeffs, z)

    @property
    def norm_sq(self) -> float:
        return float(np.real(poly_eval(self.coeffs, self.w)))


def default_truncation_degree(
    r_max: float, tol: Optional[float] = None
) -> int:
    """Return ceil(log(tol)/log(r_max)) + 20, uncapped."""
    tol = config.tolerance('kernel', tol)
    if r_max <= 0:
        return 20
    if r_max >= 1:
        raise OutsideDisk(r_max)
    return int(math.ceil(math.log(tol) / math.log(r_max))) + 20


def capped_truncation_degree(
    r_max: float, tol: Optional[float] = None
) -> int:
    """``default_truncation_degree`` capped at ``Settings.max_degree``."""
    degree = default_truncation_degree(r_max, tol)
    cap = config.get_settings().max_degree
    if degree > cap:
        logger.warning(
            'truncation degree {} for |w| = {} capped at {}',
            degree,
            r_max,
            cap,
        )
        return cap
    return degree


class TruncatedKernelSpace:
    """Kernel sections of D(μ) of a fixed degree N.

    The Gram matrix of 1, z, …, z^N is factorized once; every kernel is a
    Cholesky solve with right-hand side (1, w, …, w^N).
    """

    __slots__ = ('mu', 'degree', 'gram')

    def __init__(self, mu: AtomicBoundaryMeasure, degree: int):
        if degree < 0:
            raise InputError(
                'truncation degree must be >= 0, got {}'.format(degree)
            )
        self.mu = mu
        self.degree = int(degree)
        self.gram: GramMatrix = gram_matrix(mu, self.degree)
        # factorize eagerly so concurrent readers share it
        self.gram.cholesky

    def coefficients(self, ws: Sequence[complex]) -> np.ndarray:
        """Kernel coefficients, one column per w.

        ⟨zᵐ, k_w⟩_μ = (G·conj(c))ₘ = wᵐ, hence c = conj(G⁻¹ w⃗).
        """
        ws = np.asarray(ws, dtype=complex)
        rhs = ws[None, :] ** np.arange(self.degree + 1)[:, None]
        return np.conj(self.gram.solve(rhs))

    def kernel(self, w: complex) -> TruncatedKernel:
        w = _check_disk(w)
        coeffs = self.coefficients([w])[:, 0]
        return TruncatedKernel(w=w, degree=self.degree, coeffs=Poly(coeffs))

    def kernels(self, ws: Iterable[complex]):
        ws = [_check_disk(w) for w in ws]
        if not ws:
            return []
        columns = self.coefficients(ws)
        return [
            TruncatedKernel(w=w, degree=self.degree, coeffs=Poly(column))
            for w, column in zip(ws, columns.T)
        ]

    def __repr__(self):
        return '<TruncatedKernelSpace N={} {!r}>'.format(
            self.degree, self.mu
        )


@functools.lru_cache(maxsize=8)
def kernel_space(mu: AtomicBoundaryMeasure, degree: int):
    """Shared TruncatedKernelSpace per (μ, N)."""
    return TruncatedKernelSpace(mu, degree)


def truncated_kernel(
    mu: AtomicBoundaryMeasure, w: complex, N: Optional[int] = None
) -> TruncatedKernel:
    """Return the degree-N section of the kernel of D(μ) at ``w``.

    Parameters
    ----------
    mu : AtomicBoundaryMeasure
    w : complex
        Point of the open disk.
    N : int, optional
        Truncation degree; defaults to the capped
        ``default_truncation_degree(|w|)``.

    Raises
    ------
    OutsideDisk
        if |w| ≥ 1.
    SolveFailed
        if the Gram matrix cannot be factorized.
    """
    w = _check_disk(w)
    if N is None:
        N = capped_truncation_degree(abs(w))
    return kernel_space(mu, int(N)).kernel(w)


def kernel_for(mu: AtomicBoundaryMeasure, ws, N: Optional[int] = None):
    """Kernels of D(μ) at the points ``ws``.

    Closed form for one atom, degree-N sections otherwise (N defaults to the
    capped degree for the largest |w|).
    """
    ws = [_check_disk(w) for w in ws]
    if mu.n == 1:
        model = OneAtomKernelModel.from_measure(mu)
        return [OneAtomKernel(model, w) for w in ws]
    if N is None:
        N = capped_truncation_degree(max((abs(w) for w in ws), default=0))
    return kernel_space(mu, int(N)).kernels(ws)


def atom_constants(
    mu: AtomicBoundaryMeasure, N: Optional[int] = None
) -> np.ndarray:
    """Masses aⱼ for which k^{aⱼ δ_{λⱼ}}/k^μ is positive definite.

    Mⱼ = {f : f(λᵢ) = 0 for i ≠ j} has a one-dimensional wandering
    subspace Mⱼ ⊖ zMⱼ spanned by the minimal-norm element φⱼ of Mⱼ with
    φⱼ(0) = 1, and aⱼ = αⱼ·|φⱼ(λⱼ)|²/||φⱼ||²_μ. φⱼ is computed among the
    polynomials of degree ≤ N (default 120).

    Raises
    ------
    SolveFailed
        if the restricted Gram matrix is not numerically positive definite.
    """
    N = 120 if N is None else int(N)
    if N < mu.n:
        raise InputError(
            'degree {} is too small for {} atoms'.format(N, mu.n)
        )
    gram = gram_matrix(mu, N).matrix
    constants = []
    for j, (point, mass) in enumerate(mu.atoms):
        others = Poly.from_roots(
            [p for i, p in enumerate(mu.points) if i != j]
        ).coeffs
        size = N + 2 - len(others)
        basis = np.zeros((N + 1, size), dtype=complex)
        for col in range(size):
            basis[col : col + len(others), col] = others
        # ||B·c||² = cᵀ A conj(c) with A Hermitian
        restricted = basis.T @ gram @ np.conj(basis)
        try:
            factor = linalg.cho_factor(restricted, check_finite=False)
        except linalg.LinAlgError as e:
            raise SolveFailed(size, str(e))
        unit = np.zeros(size, dtype=complex)
        unit[0] = 1.0
        d = linalg.cho_solve(factor, unit, check_finite=False)
        phi = Poly(basis @ np.conj(d))
        norm_sq = float(np.real(d[0]))
        constants.append(mass * abs(phi(point.point)) ** 2 / norm_sq)
    logger.debug('atom constants {} for {!r}', constants, mu)
    return np.array(constants)


def posdef_probe(
    mu: AtomicBoundaryMeasure,
    points: Sequence[complex],
    N: Optional[int] = None,
    slack: float = 1e-6,
):
    """Compare one-atom kernels with the kernel of D(μ) on pairs of points.

    For every atom j and pair (z, w) the ratio |k^j_z(w)/k_z(w)|² is
    compared with k^j_z(z)·k^j_w(w)/(k_z(z)·k_w(w)), where k^j is the
    kernel of D(aⱼ δ_{λⱼ}) with aⱼ from :func:`atom_constants` and k the
    kernel of D(μ). Positive definiteness of k^j/k makes every excess
    non-positive.

    Returns
    -------
    dict
        ``pairs`` checked, ``violations`` whose excess relative to
        max(1, right-hand side) is beyond ``slack``, the ``worst`` such
        relative excess and the ``constants`` aⱼ.
    """
    points = [_check_disk(z) for z in points]
    if N is None:
        N = capped_truncation_degree(max(abs(z) for z in points))
    full = dict(zip(points, kernel_for(mu, points, N)))
    constants = atom_constants(mu, N)
    pairs = violations = 0
    worst = -math.inf
    for point, a in zip(mu.points, constants):
        model = OneAtomKernelModel(point, a)
        for i, z in enumerate(points):
            for w in points[i + 1 :]:
                kz = full[z]
                lhs = abs(one_atom_kernel(model, z, w) / kz(w)) ** 2
                rhs = (
                    OneAtomKernel(model, z).norm_sq
                    * OneAtomKernel(model, w).norm_sq
                    / (kz.norm_sq * full[w].norm_sq)
                )
                excess = (lhs - rhs) / max(1.0, rhs)
                pairs += 1
                worst = max(worst, excess)
                if excess > slack:
                    violations += 1
    return {
        'pairs': pairs,
        'violations': violations,
        'worst': worst,
        'constants': constants,
    }
