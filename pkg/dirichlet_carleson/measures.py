"""Boundary measures μ, planar test measures ν and Carleson boxes."""
from __future__ import annotations

import abc
import dataclasses
import math
import warnings
from typing import Callable, Iterable, NamedTuple, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy import integrate as sp_integrate

from . import config
from .exceptions import (
    InputError,
    NonPositiveAlpha,
    OutsideDisk,
    QuadratureNotConverged,
)
from .hardy import BoundaryPoint, Poly, as_boundary_point, check_distinct
from .quadrature import disk_quadrature, graded_ray_rule, polar_box_quadrature

__all__ = (
    'AtomicBoundaryMeasure',
    'point_mass',
    'poisson_extension',
    'CarlesonBox',
    'Integral',
    'PlanarMeasure',
    'Atoms',
    'RadialPower',
    'Area',
    'box_mass',
    'weight_by_product',
    'integrate',
)

#: smallest distance 1 − |z| of a ray node, well above the spacing of
#: floats below 1
_MIN_DEPTH = 2.0**-50


class AtomicBoundaryMeasure:
    """μ = Σ αⱼ δ_{λⱼ}, a finite positive measure on the unit circle.

    Parameters
    ----------
    atoms : iterable of (point, mass)
        ``point`` is a BoundaryPoint or an angle in radians; masses must be
        strictly positive and points pairwise distinct.

    Raises
    ------
    NonPositiveAlpha
        if some mass is not strictly positive.
    DuplicateNodes
        if two atoms coincide.
    """

    __slots__ = ('atoms',)

    def __init__(self, atoms: Iterable[Tuple[object, float]]):
        parsed = []
        for point, mass in atoms:
            mass = float(mass)
            if not (mass > 0 and math.isfinite(mass)):
                raise NonPositiveAlpha(mass)
            parsed.append((as_boundary_point(point), mass))
        if not parsed:
            raise InputError('a boundary measure needs at least one atom')
        check_distinct([point for point, _ in parsed])
        object.__setattr__(self, 'atoms', tuple(parsed))

    def __setattr__(self, name, value):
        raise AttributeError('AtomicBoundaryMeasure is immutable')

    @classmethod
    def from_angles(
        cls, angles: Sequence[float], masses: Sequence[float] = None
    ) -> AtomicBoundaryMeasure:
        """Build μ from atom angles; masses default to one."""
        if masses is None:
            masses = [1.0] * len(angles)
        if len(masses) != len(angles):
            raise InputError(
                'got {} angles but {} masses'.format(len(angles), len(masses))
            )
        return cls(zip(angles, masses))

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def points(self) -> Tuple[BoundaryPoint, ...]:
        return tuple(point for point, _ in self.atoms)

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([point.point for point, _ in self.atoms])

    @property
    def masses(self) -> np.ndarray:
        return np.array([mass for _, mass in self.atoms])

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    def rotate(self, angle: float) -> AtomicBoundaryMeasure:
        return AtomicBoundaryMeasure(
            (point.rotate(angle), mass) for point, mass in self.atoms
        )

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __eq__(self, other):
        if not isinstance(other, AtomicBoundaryMeasure):
            return NotImplemented
        return self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return '<AtomicBoundaryMeasure {}>'.format(
            ' + '.join(
                '{:g}·δ({:g})'.format(mass, point.angle)
                for point, mass in self.atoms
            )
        )


def point_mass(angle: float = 0.0, mass: float = 1.0) -> AtomicBoundaryMeasure:
    """Return mass·δ_λ with λ = exp(i·angle)."""
    return AtomicBoundaryMeasure([(angle, mass)])


def _check_inside(z: np.ndarray):
    outside = ~(np.abs(z) < 1)
    if np.any(outside):
        raise OutsideDisk(complex(z[outside][0]))


def poisson_extension(mu: AtomicBoundaryMeasure, z):
    """Return P_μ(z) = Σ αⱼ (1 − |z|²)/|λⱼ − z|².

    ``z`` may be a scalar or an array of points of the open disk.

    Raises
    ------
    OutsideDisk
        if some |z| ≥ 1.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    _check_inside(z)
    defect = 1.0 - np.abs(z) ** 2
    total = np.zeros(z.shape)
    for lam, alpha in zip(mu.lambdas, mu.masses):
        total += alpha * defect / np.abs(lam - z) ** 2
    return float(total) if scalar else total


@dataclasses.dataclass(frozen=True)
class CarlesonBox:
    """S(ζ, h) = {1 − h < |z| < 1 and |z/|z| − ζ| < h/2}."""

    zeta: BoundaryPoint
    h: float

    def __post_init__(self):
        object.__setattr__(self, 'zeta', as_boundary_point(self.zeta))
        h = float(self.h)
        if not 0 < h < 1:
            raise InputError(
                'box size h must lie in (0, 1), got {!r}'.format(h)
            )
        object.__setattr__(self, 'h', h)

    @property
    def angular_halfwidth(self) -> float:
        """Half opening angle: |φ − arg ζ| < 2·arcsin(h/4)."""
        return 2.0 * math.asin(self.h / 4.0)

    def contains(self, z):
        """Membership test with strict inequalities; vectorized."""
        scalar = np.ndim(z) == 0
        z = np.asarray(z, dtype=complex)
        r = np.abs(z)
        direction = z / np.where(r > 0, r, 1.0)
        inside = (
            (r > 1.0 - self.h)
            & (r < 1.0)
            & (np.abs(direction - self.zeta.point) < self.h / 2.0)
        )
        return bool(inside) if scalar else inside

    def rotate(self, angle: float) -> CarlesonBox:
        return CarlesonBox(self.zeta.rotate(angle), self.h)


class Integral(NamedTuple):
    """Quadrature value with its error estimate."""

    value: float
    error: float

    def __float__(self):
        return float(self.value)


def _shifted_log_series(u, d: int):
    """Return Σ_{n≥0} uⁿ/(n + d + 1) for |u| < 1, elementwise."""
    u = np.asarray(u, dtype=complex)
    out = np.empty_like(u)
    small = np.abs(u) < 0.5
    if np.any(small):
        n = np.arange(60)
        us = u[small]
        out[small] = np.sum(
            us[..., None] ** n / (n + d + 1.0), axis=-1
        )
    if np.any(~small):
        ul = u[~small]
        head = sum(ul**k / k for k in range(1, d + 1))
        out[~small] = (-np.log1p(-ul) - head) / ul ** (d + 1)
    return out


class PlanarMeasure(abc.ABC):
    """A finite positive measure ν on the open unit disk."""

    family: str = ''

    @abc.abstractmethod
    def total_mass(self) -> float:
        """Return ν(𝔻)."""

    @abc.abstractmethod
    def box_mass(self, box: CarlesonBox) -> float:
        """Return ν(S(ζ, h))."""

    @abc.abstractmethod
    def integrate(self, f: Callable, tol: float = None) -> Integral:
        """Return ∫ f dν with an error estimate."""

    @abc.abstractmethod
    def sq_mass(self, func: Callable, tol: float = None) -> float:
        """Return ∫ |F|² dν for an analytic function ``F``."""

    @abc.abstractmethod
    def scaled(self, factor: float) -> PlanarMeasure:
        pass

    @abc.abstractmethod
    def rotate(self, angle: float) -> PlanarMeasure:
        pass

    @abc.abstractmethod
    def weight_by_product(self, points: Sequence[BoundaryPoint]):
        """Return ∏ |z − λⱼ|² dν."""

    def support_directions(self) -> Tuple[BoundaryPoint, ...]:
        """Directions where box masses concentrate (empty if spread out)."""
        return ()

    @staticmethod
    def _check_factor(factor):
        factor = float(factor)
        if not (factor > 0 and math.isfinite(factor)):
            raise InputError(
                'scale factor must be positive, got {!r}'.format(factor)
            )
        return factor


class Atoms(PlanarMeasure):
    """Σ mᵢ δ_{zᵢ} with every |zᵢ| < 1."""

    family = 'atoms'

    def __init__(self, atoms: Iterable[Tuple[complex, float]]):
        atoms = [(complex(z), float(m)) for z, m in atoms]
        if not atoms:
            raise InputError('an atomic measure needs at least one atom')
        self.points = np.array([z for z, _ in atoms])
        self.masses = np.array([m for _, m in atoms])
        _check_inside(self.points)
        if not np.all(self.masses > 0):
            raise InputError('atom masses must be positive')
        self.points.setflags(write=False)
        self.masses.setflags(write=False)

    @property
    def atoms(self):
        return list(zip(self.points.tolist(), self.masses.tolist()))

    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    def box_mass(self, box: CarlesonBox) -> float:
        return float(np.sum(self.masses[box.contains(self.points)]))

    def integrate(self, f: Callable, tol: float = None) -> Integral:
        values = np.broadcast_to(
            np.asarray(f(self.points)), self.points.shape
        )
        return Integral(float(np.real(np.dot(self.masses, values))), 0.0)

    def sq_mass(self, func: Callable, tol: float = None) -> float:
        values = np.abs(func(self.points)) ** 2
        return float(np.dot(self.masses, values))

    def scaled(self, factor: float) -> Atoms:
        factor = self._check_factor(factor)
        return Atoms(zip(self.points, self.masses * factor))

    def rotate(self, angle: float) -> Atoms:
        return Atoms(zip(self.points * np.exp(1j * angle), self.masses))

    def weight_by_product(self, points) -> Atoms:
        weight = np.ones(len(self.points))
        for point in points:
            weight = weight * np.abs(self.points - point.point) ** 2
        return Atoms(zip(self.points, self.masses * weight))

    def support_directions(self):
        seen = []
        for z in self.points:
            if z != 0:
                point = BoundaryPoint.from_complex(z)
                if point not in seen:
                    seen.append(point)
        return tuple(seen)

    def __eq__(self, other):
        if not isinstance(other, Atoms):
            return NotImplemented
        return np.array_equal(self.points, other.points) and np.array_equal(
            self.masses, other.masses
        )

    __hash__ = None

    def __repr__(self):
        return '<Atoms {}>'.format(
            ', '.join(
                '{:.4g}@{:.4g}'.format(m, z) for z, m in self.atoms
            )
        )


def _weights_repr(weights):
    if not weights:
        return ''
    return ' weights=[{}]'.format(
        ', '.join('{:.4g}'.format(w.angle) for w in weights)
    )


class RadialPower(PlanarMeasure):
    """scale · (1 − r)^{−α} dr on the ray {r·e^{iθ} : 0 ≤ r < 1}.

    Optional ``weights`` λⱼ multiply the density by ∏ |z − λⱼ|².
    """

    family = 'radial_power'

    def __init__(
        self,
        alpha: float,
        theta: float = 0.0,
        weights: Sequence = (),
        scale: float = 1.0,
    ):
        alpha = float(alpha)
        if not 0 <= alpha < 1:
            raise InputError(
                'radial power exponent must lie in [0, 1), '
                'got {!r}'.format(alpha)
            )
        self.alpha = alpha
        self.direction = as_boundary_point(theta)
        self.weights = tuple(as_boundary_point(w) for w in weights)
        self.scale = self._check_factor(scale)
        self._coeffs = self._weight_coefficients()

    @property
    def theta(self) -> float:
        return self.direction.angle

    def _weight_coefficients(self) -> np.ndarray:
        # ∏ |(1 − s)u − λ|² as a polynomial in s = 1 − r
        u = self.direction.point
        coeffs = np.array([1.0])
        for weight in self.weights:
            c = (u * weight.conjugate()).real
            coeffs = np.convolve(coeffs, [2.0 - 2.0 * c, 2.0 * c - 2.0, 1.0])
        return coeffs

    def _weight(self, s):
        return np.polynomial.polynomial.polyval(s, self._coeffs)

    def segment_mass(self, h: float) -> float:
        """Mass of the ray segment 1 − h < r < 1, in closed form."""
        k = np.arange(len(self._coeffs))
        powers = k + 1.0 - self.alpha
        return float(
            self.scale * np.sum(self._coeffs * h**powers / powers)
        )

    def total_mass(self) -> float:
        return self.segment_mass(1.0)

    def box_mass(self, box: CarlesonBox) -> float:
        if abs(self.direction.point - box.zeta.point) < box.h / 2.0:
            return self.segment_mass(box.h)
        return 0.0

    def integrate(self, f: Callable, tol: float = None) -> Integral:
        """Adaptive quadrature in t = (1 − r)^{1−α}.

        In this variable the density is bounded: dν = W(s) dt / (1 − α).

        Raises
        ------
        QuadratureNotConverged
            if the error estimate exceeds ``tol``.
        """
        tol = config.tolerance('quadrature', tol)
        e = 1.0 - self.alpha
        u = self.direction.point

        def integrand(t):
            s = t ** (1.0 / e)
            return float(np.real(f((1.0 - s) * u))) * self._weight(s)

        with warnings.catch_warnings():
            warnings.simplefilter('ignore', sp_integrate.IntegrationWarning)
            value, error = sp_integrate.quad(
                integrand, 0.0, 1.0, epsabs=tol, epsrel=tol, limit=400
            )
        value, error = value * self.scale / e, error * self.scale / e
        logger.debug(
            'radial power integral {} ± {:.2e} (alpha={})',
            value,
            error,
            self.alpha,
        )
        if error > tol * max(1.0, abs(value)):
            raise QuadratureNotConverged(value, error, tol, where='ray')
        return Integral(value, error)

    def ray_rule(self, n: int = 16) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes z and weights w with Σ w·g(z) ≈ ∫ g dν.

        The rule is graded in t = (1 − r)^{1−α}, one Gauss panel per dyadic
        scale of 1 − r.
        """
        e = 1.0 - self.alpha
        t, wt = graded_ray_rule(n, e)
        s = t ** (1.0 / e)
        # nodes stay off the circle, where 1 − s rounds to 1
        nodes = (1.0 - np.maximum(s, _MIN_DEPTH)) * self.direction.point
        return nodes, wt * self._weight(s) * self.scale / e

    def sq_mass(self, func: Callable, tol: float = None) -> float:
        tol = config.tolerance('quadrature', tol)
        coarse_nodes, coarse_weights = self.ray_rule(8)
        nodes, weights = self.ray_rule(16)
        coarse = np.dot(coarse_weights, np.abs(func(coarse_nodes)) ** 2)
        value = np.dot(weights, np.abs(func(nodes)) ** 2)
        error = abs(value - coarse)
        if error > tol * max(1.0, abs(value)):
            raise QuadratureNotConverged(
                value, error, tol, where='ray kernel mass'
            )
        return float(value)

    def scaled(self, factor: float) -> RadialPower:
        factor = self._check_factor(factor)
        return RadialPower(
            self.alpha, self.theta, self.weights, self.scale * factor
        )

    def rotate(self, angle: float) -> RadialPower:
        return RadialPower(
            self.alpha,
            self.theta + angle,
            [w.rotate(angle) for w in self.weights],
            self.scale,
        )

    def weight_by_product(self, points) -> RadialPower:
        return RadialPower(
            self.alpha,
            self.theta,
            self.weights + tuple(points),
            self.scale,
        )

    def support_directions(self):
        return (self.direction,)

    def __eq__(self, other):
        if not isinstance(other, RadialPower):
            return NotImplemented
        return (self.alpha, self.direction, self.weights, self.scale) == (
            other.alpha,
            other.direction,
            other.weights,
            other.scale,
        )

    __hash__ = None

    def __repr__(self):
        return '<RadialPower alpha={:g} theta={:.4g} scale={:g}{}>'.format(
            self.alpha,
            self.theta,
            self.scale,
            _weights_repr(self.weights),
        )


class Area(PlanarMeasure):
    """scale · dA, optionally weighted by ∏ |z − λⱼ|²."""

    family = 'area'

    #: doubling sequence for the tensor polar rules
    refinements = (16, 32, 64, 128, 256, 512, 1024)

    def __init__(self, scale: float = 1.0, weights: Sequence = ()):
        self.scale = self._check_factor(scale)
        self.weights = tuple(as_boundary_point(w) for w in weights)
        self.weight_poly = Poly.from_roots(self.weights)

    def _density(self, z):
        return self.scale * np.abs(self.weight_poly(z)) ** 2

    def total_mass(self) -> float:
        return self.analytic_sq_integral(np.array([1.0]))

    def box_mass(self, box: CarlesonBox, tol: float = None) -> float:
        h, beta = box.h, box.angular_halfwidth
        if not self.weights:
            return self.scale * beta / math.pi * (2.0 * h - h * h)
        tol = config.tolerance('quadrature', tol)
        previous = None
        for n in (8, 16, 32, 64, 128):
            nodes, weights = polar_box_quadrature(
                1.0 - h, 1.0, box.zeta.angle, beta, n, n
            )
            value = float(np.dot(weights, self._density(nodes)))
            if previous is not None and abs(value - previous) <= tol * max(
                1.0, value
            ):
                return value
            previous = value
        raise QuadratureNotConverged(
            value, abs(value - previous), tol, where='weighted box mass'
        )

    def integrate(self, f: Callable, tol: float = None) -> Integral:
        """Tensor polar quadrature, doubling both node counts.

        Raises
        ------
        QuadratureNotConverged
            if two successive rules differ by more than ``tol`` (relative to
            max(1, |value|)) at the finest level.
        """
        tol = config.tolerance('quadrature', tol)
        previous = None
        for n in self.refinements:
            quad = disk_quadrature(n, n)
            value = float(
                np.real(quad.integrate(lambda z: f(z) * self._density(z)))
            )
            if previous is not None:
                error = abs(value - previous)
                logger.debug(
                    'area integral n={}: {} (change {:.2e})', n, value, error
                )
                if error <= tol * max(1.0, abs(value)):
                    return Integral(value, error)
            previous = value
        raise QuadratureNotConverged(value, error, tol, where='area')

    def analytic_sq_integral(self, coeffs) -> float:
        """Return ∫ |F|² dν for F = Σ cₘ zᵐ, exactly.

        Monomials are orthogonal for dA with ∫ |z|^{2m} dA = 1/(m + 1); the
        weight is absorbed by multiplying F with ∏ (z − λⱼ).
        """
        product = np.convolve(
            np.asarray(coeffs, dtype=complex), self.weight_poly.coeffs
        )
        m = np.arange(len(product))
        return float(self.scale * np.sum(np.abs(product) ** 2 / (m + 1.0)))

    def geometric_sq_integral(self, amplitudes, ratios) -> float:
        """Return ∫ |F|² dν for F with Taylor coefficients Σᵢ Aᵢ xᵢᵐ.

        Requires every |xᵢ| < 1. Exact: the tail of the weighted coefficient
        sequence is again geometric and sums to shifted logarithms.
        """
        a = np.asarray(amplitudes, dtype=complex)
        x = np.asarray(ratios, dtype=complex)
        p = self.weight_poly.coeffs
        d = len(p) - 1
        head = 0.0
        if d > 0:
            k = np.arange(d)
            taylor = np.sum(a[None, :] * x[None, :] ** k[:, None], axis=1)
            g = np.convolve(taylor, p)[:d]
            head = np.sum(np.abs(g) ** 2 / (k + 1.0))
        j = np.arange(d + 1)
        amp = a * np.sum(p[None, :] * x[:, None] ** (d - j)[None, :], axis=1)
        cross = _shifted_log_series(np.outer(x, np.conj(x)), d)
        tail = np.real(np.sum(np.outer(amp, np.conj(amp)) * cross))
        return float(self.scale * (head + tail))

    def sq_mass(self, func: Callable, tol: float = None) -> float:
        terms = getattr(func, 'geometric_terms', lambda: None)()
        if terms is not None:
            return self.geometric_sq_integral(*terms)
        if isinstance(func, Poly):
            return self.analytic_sq_integral(func.coeffs)
        coeffs = getattr(func, 'coeffs', None)
        if isinstance(coeffs, Poly):
            return self.analytic_sq_integral(coeffs.coeffs)
        return self.integrate(lambda z: np.abs(func(z)) ** 2, tol).value

    def scaled(self, factor: float) -> Area:
        factor = self._check_factor(factor)
        return Area(self.scale * factor, self.weights)

    def rotate(self, angle: float) -> Area:
        return Area(self.scale, [w.rotate(angle) for w in self.weights])

    def weight_by_product(self, points) -> Area:
        return Area(self.scale, self.weights + tuple(points))

    def __eq__(self, other):
        if not isinstance(other, Area):
            return NotImplemented
        return (self.scale, self.weights) == (other.scale, other.weights)

    __hash__ = None

    def __repr__(self):
        return '<Area scale={:g}{}>'.format(
            self.scale, _weights_repr(self.weights)
        )


def box_mass(nu: PlanarMeasure, box: CarlesonBox) -> float:
    """Return ν(S(ζ, h)).

    Exact for atoms, closed form for radial powers, closed form or Gauss
    refinement for area measures.

    Examples
    --------
    >>> box_mass(RadialPower(0.5), CarlesonBox(BoundaryPoint(0.0), 0.25))
    1.0
    """
    return nu.box_mass(box)


def weight_by_product(nu: PlanarMeasure, points: Sequence) -> PlanarMeasure:
    """Return the measure ∏ |z − λⱼ|² dν(z).

    Raises
    ------
    DuplicateNodes
        if two of the λⱼ coincide.
    """
    points = [as_boundary_point(p) for p in points]
    check_distinct(points)
    return nu.weight_by_product(points)


def integrate(nu: PlanarMeasure, f: Callable, tol: float = None) -> Integral:
    """Return ∫ f dν and an error estimate.

    ``f`` is evaluated on arrays of points for atoms and area measures, and
    on scalars for the adaptive ray quadrature.
    """
    return nu.integrate(f, tol)
