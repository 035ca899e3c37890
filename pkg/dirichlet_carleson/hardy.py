"""Analytic polynomials as elements of the Hardy space H².

All elements of the spaces handled by the package are polynomials: they are
dense in every D(μ), and their H² inner products, difference quotients and
interpolants are exact up to floating point.
"""
from __future__ import annotations

import cmath
import math
from typing import Iterable, Sequence, Union

import numpy as np
from scipy import signal

from . import config
from .exceptions import DuplicateNodes, InputError, NotARoot

TWO_PI = 2 * math.pi

Number = Union[int, float, complex]


class BoundaryPoint:
    """A point λ = exp(i·angle) of the unit circle.

    The angle is normalized to [0, 2π).
    """

    __slots__ = ('angle',)

    def __init__(self, angle: float):
        angle = float(angle) % TWO_PI
        # -1e-17 % 2π rounds to 2π
        if angle >= TWO_PI:
            angle = 0.0
        object.__setattr__(self, 'angle', angle)

    def __setattr__(self, name, value):
        raise AttributeError('BoundaryPoint is immutable')

    @classmethod
    def from_complex(cls, z: complex) -> BoundaryPoint:
        """Return the boundary point in the direction of ``z``."""
        if z == 0:
            raise InputError('the origin has no boundary direction')
        return cls(cmath.phase(z))

    @property
    def point(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))

    def __complex__(self):
        return self.point

    def conjugate(self) -> complex:
        return self.point.conjugate()

    def rotate(self, angle: float) -> BoundaryPoint:
        return BoundaryPoint(self.angle + angle)

    def separation(self, other: BoundaryPoint) -> float:
        """Return the angular distance to ``other``, in [0, π]."""
        d = abs(self.angle - other.angle) % TWO_PI
        return min(d, TWO_PI - d)

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return self.angle == other.angle

    def __hash__(self):
        return hash(('BoundaryPoint', self.angle))

    def __repr__(self):
        return 'BoundaryPoint({!r})'.format(self.angle)


def as_boundary_point(value) -> BoundaryPoint:
    """Coerce an angle (float) or a BoundaryPoint to a BoundaryPoint."""
    if isinstance(value, BoundaryPoint):
        return value
    if isinstance(value, complex):
        return BoundaryPoint.from_complex(value)
    return BoundaryPoint(value)


def check_distinct(points: Sequence[BoundaryPoint], tol: float = None):
    """Raise DuplicateNodes if two points are closer than ``tol``."""
    tol = config.tolerance('node', tol)
    for i, first in enumerate(points):
        for second in points[i + 1 :]:
            if first.separation(second) <= tol:
                raise DuplicateNodes(first, second, tol)


class Poly:
    """Analytic polynomial Σ coeffs[k]·z^k, coefficients in ascending order.

    An empty coefficient sequence is the zero function.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable[Number] = ()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        if not hasattr(coeffs, '__array__'):
            coeffs = list(coeffs)
        arr = np.array(coeffs, dtype=complex).ravel()
        arr.setflags(write=False)
        object.__setattr__(self, 'coeffs', arr)

    def __setattr__(self, name, value):
        raise AttributeError('Poly is immutable')

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def constant(cls, c: Number) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Number = 1) -> Poly:
        coeffs = np.zeros(n + 1, dtype=complex)
        coeffs[n] = c
        return cls(coeffs)

    @classmethod
    def from_roots(cls, points: Iterable) -> Poly:
        """Return ∏ (z − λⱼ) over the given boundary points."""
        coeffs = np.array([1.0 + 0j])
        for point in points:
            lam = complex(as_boundary_point(point))
            coeffs = np.convolve(coeffs, [-lam, 1.0])
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Length of the coefficient sequence minus one (-1 for zero)."""
        return len(self.coeffs) - 1

    def normalize(self) -> Poly:
        """Strip exact-zero trailing coefficients."""
        nonzero = np.flatnonzero(self.coeffs)
        if len(nonzero) == 0:
            return Poly.zero()
        return Poly(self.coeffs[: nonzero[-1] + 1])

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def padded(self, length: int) -> np.ndarray:
        """Return the coefficients zero-padded (or cut) to ``length``."""
        out = np.zeros(length, dtype=complex)
        n = min(length, len(self.coeffs))
        out[:n] = self.coeffs[:n]
        return out

    def derivative(self) -> Poly:
        if len(self.coeffs) <= 1:
            return Poly.zero()
        return Poly(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def __call__(self, z):
        return poly_eval(self, z)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return Poly(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Poly(self.coeffs * other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        return Poly(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.normalize().coeffs, other.normalize().coeffs
        return len(a) == len(b) and bool(np.all(a == b))

    __hash__ = None

    def allclose(self, other, atol: float = 1e-10) -> bool:
        """Coefficient-wise comparison after zero padding."""
        other = self._coerce(other)
        n = max(len(self), len(other), 1)
        return bool(
            np.max(np.abs(self.padded(n) - other.padded(n))) <= atol
        )

    def __repr__(self):
        return '<Poly {}>'.format(np.array2string(self.coeffs, precision=6))


def poly_eval(p: Poly, z):
    """Evaluate ``p`` at ``z`` by Horner's rule.

    ``z`` may be a scalar or an array; evaluation is formal, callers restrict
    to the closed disk.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    result = np.zeros_like(z)
    for c in p.coeffs[::-1]:
        result = result * z + c
    return complex(result) if scalar else result


def h2_inner(p: Poly, q: Poly) -> complex:
    """Return ⟨p, q⟩₂ = Σ p_k · conj(q_k)."""
    n = min(len(p), len(q))
    return complex(np.dot(p.coeffs[:n], np.conj(q.coeffs[:n])))


def h2_norm_sq(p: Poly) -> float:
    return float(np.sum(np.abs(p.coeffs) ** 2))


def h2_norm(p: Poly) -> float:
    return math.sqrt(h2_norm_sq(p))


def divided_quotient(p: Poly, lam) -> Poly:
    """Return q with (z − λ)·q(z) = p(z) − p(λ).

    Synthetic division: q_{d-1} = p_d and q_j = p_{j+1} + λ·q_{j+1}, i.e.
    q_j = Σ_{k>j} p_k λ^{k-1-j}.
    """
    lam = complex(as_boundary_point(lam))
    if len(p) <= 1:
        return Poly.zero()
    # the recurrence is a first-order IIR filter on the reversed coefficients
    reversed_tail = p.coeffs[:0:-1]
    q = signal.lfilter([1.0], [1.0, -lam], reversed_tail)
    return Poly(q[::-1])


def divide_out_roots(p: Poly, roots: Sequence, tol: float = None) -> Poly:
    """Return g with p = ∏ (z − λⱼ)·g.

    Parameters
    ----------
    p : Poly
    roots : sequence of BoundaryPoint or angles
        Pairwise distinct points at which ``p`` vanishes.
    tol : float, optional
        Relative vanishing tolerance; the absolute threshold is
        ``tol * (1 + ||p||_2)``.

    Raises
    ------
    NotARoot
        if |p(λ)| exceeds the threshold for some root.
    DuplicateNodes
        if two roots coincide.
    """
    roots = [as_boundary_point(r) for r in roots]
    check_distinct(roots)
    threshold = config.tolerance('root', tol) * (1 + h2_norm(p))
    g = p
    for lam in roots:
        residual = abs(poly_eval(g, lam.point))
        if residual > threshold:
            raise NotARoot(lam, residual, threshold)
        g = divided_quotient(g, lam)
    return g


def lagrange_interp(nodes: Sequence, values: Sequence[Number]) -> Poly:
    """Return the polynomial of degree ≤ n−1 with p(λⱼ) = vⱼ.

    Built as Σⱼ vⱼ ∏_{k≠j} (z − λ_k)/(λⱼ − λ_k).

    Raises
    ------
    InputError
        if lengths differ or no node is given.
    DuplicateNodes
        if two nodes coincide within the node tolerance.
    """
    nodes = [as_boundary_point(n) for n in nodes]
    values = [complex(v) for v in values]
    if len(nodes) != len(values):
        raise InputError(
            'got {} nodes but {} values'.format(len(nodes), len(values))
        )
    if not nodes:
        raise InputError('at least one interpolation node is required')
    check_distinct(nodes)
    points = [n.point for n in nodes]
    coeffs = np.zeros(len(nodes), dtype=complex)
    for j, (lam_j, v_j) in enumerate(zip(points, values)):
        if v_j == 0:
            continue
        basis = np.array([1.0 + 0j])
        for k, lam_k in enumerate(points):
            if k != j:
                basis = np.convolve(basis, [-lam_k, 1.0]) / (lam_j - lam_k)
        coeffs[: len(basis)] += v_j * basis
    return Poly(coeffs).normalize()


def szego_kernel(w, z):
    """Return the Hardy space reproducing kernel 1/(1 − conj(w)·z)."""
    return 1.0 / (1.0 - np.conj(w) * z)
