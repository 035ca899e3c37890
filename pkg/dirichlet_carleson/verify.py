"""Invariant suite: every theorem-backed property as a runnable check.

Properties are registered with :func:`register` and executed by
:func:`verify_suite`. Each property draws its random inputs from its own
generator, seeded from the suite seed and the property name, so a filtered
run samples exactly the inputs of the full run. A failing or raising
property is recorded in the report; the suite itself never raises for it.
"""
from __future__ import annotations

import dataclasses
import json
import math
import zlib
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd
import regex as re
from loguru import logger

from . import config
from .carleson import (
    BoxScanConfig,
    Verdict,
    box_kernel_bound,
    compactness_profile,
    dmu_carleson_test,
    h2_box_sup,
    rkt_sup,
    theorem_agreement,
    trivial_estimate,
)
from .dirichlet import (
    decompose,
    dirichlet_mu,
    dirichlet_mu_area,
    dmu_inner,
    dmu_norm_sq,
    gram_matrix,
    gram_matrix_direct,
    local_dirichlet,
    norm_inequality_ratio,
    weighted_dirichlet_norm_sq,
)
from .exceptions import AtomDirection, InputError
from .hardy import (
    TWO_PI,
    BoundaryPoint,
    Poly,
    divided_quotient,
    h2_inner,
    h2_norm_sq,
    lagrange_interp,
    poly_eval,
)
from .kernels import (
    OneAtomKernelModel,
    angular_ratio,
    inf2_ratio,
    inf4_margin,
    kernel_space,
    one_atom_kernel,
    posdef_probe,
    solve_a0,
    truncated_kernel,
)
from .measures import (
    Area,
    AtomicBoundaryMeasure,
    Atoms,
    CarlesonBox,
    RadialPower,
    poisson_extension,
)
from .quadrature import circle_quadrature, disk_quadrature
from .serialization import dumps, measure_from_json, measure_to_json

__all__ = (
    'Outcome',
    'Property',
    'PropertyResult',
    'VerifyReport',
    'PROPERTIES',
    'register',
    'select',
    'verify_suite',
)


class Outcome(NamedTuple):
    """What a property check returns: verdict, worst metric, summary."""

    passed: bool
    value: float
    detail: str


class Property(NamedTuple):
    name: str
    module: str
    check: Callable[[np.random.Generator, float], Outcome]
    slow: bool = False
    informational: bool = False


#: registered properties, in registration order
PROPERTIES: Dict[str, Property] = {}


def register(module: str, slow: bool = False, informational: bool = False):
    """Register ``check(rng, scale) -> Outcome`` under its function name.

    ``scale`` multiplies every tolerance the check compares against.
    Informational properties are reported but always count as passed.
    """

    def decorator(check):
        name = check.__name__
        if name in PROPERTIES:
            raise ValueError(
                'property {!r} is already registered'.format(name)
            )
        PROPERTIES[name] = Property(name, module, check, slow, informational)
        return check

    return decorator


def _bounded(value: float, limit: float, label: str) -> Outcome:
    value = float(value)
    return Outcome(
        bool(value <= limit),
        value,
        '{} {:.3e} (limit {:.1e})'.format(label, value, limit),
    )


def _all(flags, label: str, value: float = 0.0) -> Outcome:
    flags = np.asarray(flags, dtype=bool)
    failed = int(np.count_nonzero(~flags))
    return Outcome(
        failed == 0,
        float(value),
        '{}: {} of {} cases fail'.format(label, failed, flags.size),
    )


def _pair_names(pairs: pd.DataFrame) -> str:
    return ''.join(' {}/{}'.format(nu, mu) for nu, mu in pairs.to_numpy())


def _random_poly(rng, max_degree: int, min_degree: int = 1) -> Poly:
    degree = int(rng.integers(min_degree, max_degree + 1))
    return Poly(
        rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
    )


def _random_angles(rng, n: int, min_separation: float = 0.3):
    while True:
        angles = np.sort(rng.uniform(0, TWO_PI, n))
        gaps = np.diff(np.concatenate([angles, [angles[0] + TWO_PI]]))
        if n == 1 or np.min(gaps) >= min_separation:
            return angles


def _random_mu(rng, n: Optional[int] = None, max_atoms: int = 4):
    if n is None:
        n = int(rng.integers(1, max_atoms + 1))
    angles = _random_angles(rng, n)
    return AtomicBoundaryMeasure(zip(angles, rng.uniform(0.1, 2.0, n)))


def _standard_mus() -> Dict[str, AtomicBoundaryMeasure]:
    return {
        'one-atom': AtomicBoundaryMeasure([(0.0, 1.0)]),
        'two-atoms': AtomicBoundaryMeasure([(0.0, 1.0), (math.pi, 0.5)]),
        'three-atoms': AtomicBoundaryMeasure(
            [(0.0, 1.0), (2 * math.pi / 3, 2.0), (4 * math.pi / 3, 1.0)]
        ),
        'atoms-0-2': AtomicBoundaryMeasure([(0.0, 1.0), (2.0, 0.5)]),
    }


def _random_disk_points(rng, n: int, r_max: float = 1.0):
    r = r_max * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(1j * rng.uniform(0, TWO_PI, n))


def _polar_grid(n: int = 100, r_max: float = 0.999):
    r = np.linspace(0.0, r_max, n)
    theta = np.linspace(0.0, TWO_PI, n, endpoint=False)
    return np.outer(r, np.exp(1j * theta)).ravel()


# hardy-core


@register('hardy-core')
def division_identity(rng, scale):
    """(z − λ)·q + p(λ) reproduces p."""
    worst = 0.0
    for _ in range(50):
        p = _random_poly(rng, 30)
        lam = BoundaryPoint(rng.uniform(0, TWO_PI))
        q = divided_quotient(p, lam)
        rebuilt = Poly([-lam.point, 1.0]) * q + poly_eval(p, lam.point)
        worst = max(
            worst, np.max(np.abs(rebuilt.padded(len(p)) - p.coeffs))
        )
    return _bounded(worst, 1e-12 * scale, 'max coefficient error')


@register('hardy-core')
def local_dirichlet_monomials(rng, scale):
    """D_λ(zⁿ) = n for n ≤ 50."""
    worst = 0.0
    for angle in rng.uniform(0, TWO_PI, 8):
        for n in range(1, 51):
            worst = max(
                worst, abs(local_dirichlet(Poly.monomial(n), angle) - n)
            )
    return _bounded(worst, 1e-12 * scale, 'max |D_λ(zⁿ) − n|')


@register('hardy-core')
def lagrange_at_nodes(rng, scale):
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(1, 7))
        nodes = [BoundaryPoint(a) for a in _random_angles(rng, n)]
        values = rng.normal(size=n) + 1j * rng.normal(size=n)
        p = lagrange_interp(nodes, values)
        at_nodes = poly_eval(p, np.array([node.point for node in nodes]))
        worst = max(worst, np.max(np.abs(at_nodes - values)))
    return _bounded(worst, 1e-10 * scale, 'max interpolation error')


@register('hardy-core')
def h2_form_hermitian(rng, scale):
    """Conjugate symmetry, positivity, and definiteness of ⟨·,·⟩₂."""
    worst = 0.0
    ok = []
    for _ in range(50):
        p, q = _random_poly(rng, 20), _random_poly(rng, 20)
        a, b = h2_inner(p, q), h2_inner(q, p)
        worst = max(worst, abs(a - b.conjugate()) / (1 + abs(a)))
        ok.append(h2_norm_sq(p) > 0)
    ok.append(h2_norm_sq(Poly.zero()) == 0)
    if worst > 1e-14 * scale:
        return _bounded(worst, 1e-14 * scale, 'conjugate symmetry error')
    return _all(ok, 'positive definiteness', worst)


# measures-quad


@register('measures-quad')
def poisson_positive(rng, scale):
    mu = _random_mu(rng)
    z = _random_disk_points(rng, 10_000, 1.0 - 1e-9)
    values = poisson_extension(mu, z)
    return _all(values > 0, 'P_μ > 0', float(np.min(values)))


@register('measures-quad')
def poisson_mean_value(rng, scale):
    """The circle mean of P_μ is the total mass of μ."""
    mu = _random_mu(rng)
    worst = 0.0
    for r in (0.1, 0.5, 0.9, 0.95):
        points, weights = circle_quadrature(r, 1024)
        mean = np.dot(weights, poisson_extension(mu, points))
        worst = max(worst, abs(mean / mu.total_mass - 1.0))
    return _bounded(worst, 1e-8 * scale, 'max |mean − 1|')


@register('measures-quad')
def box_nesting(rng, scale):
    mu = _random_mu(rng, 2)
    measures = [
        Atoms(zip(_random_disk_points(rng, 200, 0.999), np.ones(200))),
        RadialPower(0.5, rng.uniform(0, TWO_PI)),
        RadialPower(0.25, 0.0, mu.points),
        Area(2.0),
        Area(1.0, mu.points),
    ]
    tol = config.tolerance('quadrature') * scale
    ok = []
    for nu in measures:
        for zeta in list(mu.points) + [BoundaryPoint(rng.uniform(0, TWO_PI))]:
            masses = [
                nu.box_mass(CarlesonBox(zeta, 2.0**-k)) for k in range(1, 12)
            ]
            ok.extend(np.diff(masses) <= tol)
    return _all(ok, 'box mass monotone in h')


@register('measures-quad')
def quadrature_order(rng, scale):
    """Error ratio of the disk rule per doubling of n_r is at least 4."""
    exact = math.log(6.0)
    errors = [
        abs(
            disk_quadrature(n_r, 64).integrate(
                lambda z: 1.0 / (1.2 - np.abs(z) ** 2)
            )
            - exact
        )
        for n_r in (4, 8, 16)
    ]
    ratio = min(errors[0] / errors[1], errors[1] / errors[2])
    return Outcome(
        ratio >= 4, ratio, 'smallest error ratio {:.3g}'.format(ratio)
    )


# dirichlet-space


@register('dirichlet-space')
def fubini_area(rng, scale):
    """Local formula against ∫ |f′|² P_μ dA on a 256 × 256 rule."""
    quad = disk_quadrature(256, 256)
    worst = 0.0
    for _ in range(100):
        f, mu = _random_poly(rng, 10), _random_mu(rng)
        local = dirichlet_mu(f, mu)
        area = dirichlet_mu_area(f, mu, quad=quad)
        worst = max(worst, abs(area - local) / (1.0 + local))
    return _bounded(worst, 1e-4 * scale, 'max relative deviation')


@register('dirichlet-space')
def decomposition_roundtrip(rng, scale):
    """f = p + ∏(z − λⱼ)·g, p(λⱼ) = f(λⱼ), and decompose is idempotent."""
    worst = 0.0
    for _ in range(200):
        f, mu = _random_poly(rng, 12), _random_mu(rng)
        d = decompose(f, mu)
        again = decompose(d.reconstruct(mu), mu)
        at_atoms = poly_eval(d.p, mu.lambdas) - poly_eval(f, mu.lambdas)
        worst = max(
            worst,
            np.max(np.abs(d.reconstruct(mu).padded(len(f)) - f.coeffs)),
            np.max(np.abs(at_atoms)),
            np.max(np.abs(again.p.padded(mu.n) - d.p.padded(mu.n))),
            np.max(
                np.abs(again.g.padded(len(f)) - d.g.padded(len(f))),
                initial=0.0,
            ),
        )
    return _bounded(worst, 1e-10 * scale, 'max coefficient error')


@register('dirichlet-space')
def norm_inequality_finite(rng, scale):
    """sup ||g||₂/||f||_μ over a sample family is finite, for each μ."""
    sups = {}
    for name, mu in _standard_mus().items():
        sups[name] = max(
            norm_inequality_ratio(_random_poly(rng, 15), mu)
            for _ in range(200)
        )
    worst = max(sups.values())
    return Outcome(
        all(math.isfinite(s) for s in sups.values()),
        worst,
        'max ||g||₂/||f||_μ: {}'.format(
            ', '.join('{} {:.4g}'.format(k, v) for k, v in sups.items())
        ),
    )


@register('dirichlet-space')
def gram_closed_form(rng, scale):
    mu = _random_mu(rng, 3)
    closed = gram_matrix(mu, 50).matrix
    direct = gram_matrix_direct(mu, 50)
    worst = np.max(np.abs(closed - direct) / np.maximum(1.0, np.abs(closed)))
    return _bounded(worst, 1e-12 * scale, 'max relative entry deviation')


@register('dirichlet-space')
def norm_dominates_h2(rng, scale):
    ok = []
    for _ in range(100):
        f, mu = _random_poly(rng, 20), _random_mu(rng)
        ok.append(dmu_norm_sq(f, mu) >= h2_norm_sq(f))
    return _all(ok, '||f||²_μ ≥ ||f||₂²')


@register('dirichlet-space')
def weighted_norm_endpoints(rng, scale):
    """D_1 is H² and D_0 carries the weights n + 1."""
    worst = 0.0
    for _ in range(20):
        f = _random_poly(rng, 20)
        n = np.arange(len(f))
        expected = float(np.sum((n + 1.0) * np.abs(f.coeffs) ** 2))
        worst = max(
            worst,
            abs(weighted_dirichlet_norm_sq(f, 1.0) - h2_norm_sq(f))
            / h2_norm_sq(f),
            abs(weighted_dirichlet_norm_sq(f, 0.0) - expected) / expected,
        )
    return _bounded(worst, 1e-12 * scale, 'max relative deviation')


# kernels


@register('kernels')
def a0_root(rng, scale):
    """(a₀ − 1)² = α·a₀ and a₀(1) = (3 − √5)/2."""
    alphas = np.concatenate([[0.25, 1.0, 4.0], rng.uniform(0.01, 10.0, 20)])
    worst = max(
        abs(OneAtomKernelModel(0.0, alpha).residual) for alpha in alphas
    )
    worst = max(worst, abs(solve_a0(1.0) - (3.0 - math.sqrt(5.0)) / 2.0))
    return _bounded(worst, 1e-14 * scale, 'max residual')


@register('kernels')
def one_atom_matches_truncated(rng, scale):
    """Closed-form kernel against its degree-120 section."""
    worst = 0.0
    for alpha in (0.25, 1.0, 4.0):
        mu = AtomicBoundaryMeasure([(rng.uniform(0, TWO_PI), alpha)])
        model = OneAtomKernelModel.from_measure(mu)
        ws = _random_disk_points(rng, 10, 0.9)
        zs = _random_disk_points(rng, 50, 0.9)
        for kernel in kernel_space(mu, 120).kernels(ws):
            exact = one_atom_kernel(model, kernel.w, zs)
            worst = max(worst, np.max(np.abs(kernel(zs) - exact)))
    return _bounded(worst, 1e-6 * scale, 'max kernel deviation')


@register('kernels')
def reproducing_property(rng, scale):
    worst = 0.0
    for n_atoms in (2, 3):
        mu = _random_mu(rng, n_atoms)
        for _ in range(50):
            w = complex(_random_disk_points(rng, 1, 0.9)[0])
            f = _random_poly(rng, 30)
            kernel = truncated_kernel(mu, w, 60)
            error = abs(dmu_inner(f, kernel.coeffs, mu) - poly_eval(f, w))
            worst = max(worst, error)
    limit = config.tolerance('reproducing') * scale
    return _bounded(worst, limit, 'max |⟨f, k_w⟩_μ − f(w)|')


@register('kernels')
def kernel_hermitian(rng, scale):
    """k_w(z) = conj(k_z(w)) for both kernel constructions."""
    worst = 0.0
    model = OneAtomKernelModel(rng.uniform(0, TWO_PI), rng.uniform(0.1, 3))
    space = kernel_space(_random_mu(rng, 2), 200)
    for _ in range(50):
        w, z = _random_disk_points(rng, 2, 0.9)
        worst = max(
            worst,
            abs(
                one_atom_kernel(model, w, z)
                - np.conj(one_atom_kernel(model, z, w))
            ),
            abs(space.kernel(w)(z) - np.conj(space.kernel(z)(w))),
        )
    return _bounded(worst, 1e-10 * scale, 'max asymmetry')


@register('kernels')
def one_atom_kernel_masses(rng, scale):
    """Closed-form area masses and norms of one-atom kernels.

    ∫ |k_w|² dA against the Taylor sum Σ |kₘ|²/(m + 1), also for area
    weighted at the atom, and ||k_w||²_μ against k_w(w).
    """
    worst = 0.0
    for alpha in (0.25, 1.0, 4.0):
        mu = AtomicBoundaryMeasure([(rng.uniform(0, TWO_PI), alpha)])
        model = OneAtomKernelModel.from_measure(mu)
        measures = (Area(1.0), Area(1.0, mu.points))
        for w in _random_disk_points(rng, 5, 0.9):
            kernel = model.kernel(w)
            taylor = kernel.taylor(400)
            for nu in measures:
                exact = nu.sq_mass(kernel)
                series = nu.analytic_sq_integral(taylor)
                worst = max(worst, abs(exact - series) / series)
            norm_sq = dmu_norm_sq(Poly(taylor), mu)
            worst = max(
                worst,
                abs(norm_sq - kernel.norm_sq) / kernel.norm_sq,
                abs(kernel(w) - kernel.norm_sq) / kernel.norm_sq,
            )
    return _bounded(worst, 1e-8 * scale, 'max relative deviation')


def _near_atom(lam: complex) -> np.ndarray:
    eps = 10.0 ** -np.arange(1, 13)
    radial = lam * (1.0 - eps)
    return np.concatenate(
        [radial, radial * np.exp(1j * eps), radial * np.exp(-1j * eps)]
    )


@register('kernels')
def inf4_nonnegative(rng, scale):
    """Margin on a polar grid and on points tending to the atom."""
    grid = _polar_grid()
    worst = math.inf
    for alpha in (0.25, 1.0, 4.0):
        model = OneAtomKernelModel(rng.uniform(0, TWO_PI), alpha)
        points = np.concatenate([grid, _near_atom(model.lam.point)])
        worst = min(worst, float(np.min(inf4_margin(model, points))))
    return Outcome(
        worst >= -1e-12 * scale, worst, 'min margin {:.3e}'.format(worst)
    )


@register('kernels')
def inf2_lower_bound(rng, scale):
    """(1 − |b(z)|²)/|z − λ|² ≥ a₀/(1 + a₀)²."""
    grid = _polar_grid()
    worst = math.inf
    for alpha in (0.25, 1.0, 4.0):
        model = OneAtomKernelModel(rng.uniform(0, TWO_PI), alpha)
        bound = model.a0 / (1.0 + model.a0) ** 2
        ratios = inf2_ratio(model, grid)
        worst = min(worst, float(np.min(ratios / bound)) - 1.0)
    return Outcome(
        worst >= -1e-12 * scale,
        worst,
        'min relative margin {:.3e}'.format(worst),
    )


@register('kernels')
def posdef_consequence(rng, scale):
    """Cauchy–Schwarz comparison of one-atom kernels with D(μ) kernels."""
    violations = pairs = 0
    worst = -math.inf
    for n_atoms in (1, 2, 3):
        mu = _random_mu(rng, n_atoms)
        points = _random_disk_points(rng, 8, 0.8)
        comparison = posdef_probe(mu, points, 160, slack=1e-6 * scale)
        violations += comparison['violations']
        pairs += comparison['pairs']
        worst = max(worst, comparison['worst'])
    return Outcome(
        violations == 0,
        worst,
        '{} of {} pairs exceed the slack (worst excess {:.3e})'.format(
            violations, pairs, worst
        ),
    )


@register('kernels')
def angular_ratio_asymptotics(rng, scale):
    """Decay along radii to ζ ≠ λ, no decay along the radius to λ."""
    model = OneAtomKernelModel(rng.uniform(0, TWO_PI), rng.uniform(0.1, 3))
    hs = 2.0 ** -np.arange(4, 21)
    lam = model.lam
    towards = [lam.rotate(math.pi), lam.rotate(rng.uniform(0.5, TWO_PI - 0.5))]
    decay = max(
        angular_ratio(model, (1 - hs[-1]) * zeta.point)
        / angular_ratio(model, (1 - hs[0]) * zeta.point)
        for zeta in towards
    )
    along = angular_ratio(model, (1 - hs) * lam.point)
    if not decay <= 1e-2 * scale:
        return _bounded(decay, 1e-2 * scale, 'decay off the atom')
    floor = float(np.min(along) / along[0])
    return Outcome(
        floor >= 0.1,
        floor,
        'decay off the atom {:.3e}, along the atom {:.3g}'.format(
            decay, floor
        ),
    )


# carleson-tests


@register('carleson-tests')
def radial_power_example(rng, scale):
    """ν = (1 − r)^{−1/2} dr on [0, 1): Carleson for D(δ₁), not for H²."""
    nu = RadialPower(0.5)
    mu = AtomicBoundaryMeasure([(0.0, 1.0)])
    worst = max(
        abs(
            nu.box_mass(CarlesonBox(0.0, 2.0**-k))
            - (2.0**-k) ** 0.5 / 0.5
        )
        for k in range(2, 13)
    )
    if worst > 1e-8 * scale:
        return _bounded(worst, 1e-8 * scale, 'max box mass error')
    h2 = h2_box_sup(nu)
    doubling = np.asarray(h2.levels[2:]) / np.asarray(h2.levels[:-2])
    dmu = dmu_carleson_test(nu, mu)
    passed = (
        h2.verdict is Verdict.DIVERGING
        and dmu.verdict is Verdict.BOUNDED
        and np.allclose(doubling, 2.0, rtol=1e-9)
    )
    return Outcome(
        bool(passed),
        float(dmu.sup_ratio),
        'H² {}, D(δ₁) {} (sup {:.4g})'.format(
            h2.verdict, dmu.verdict, dmu.sup_ratio
        ),
    )


_SMALL = BoxScanConfig(n_zeta=16, k_max=12, rkt_k_max=6)


@register('carleson-tests')
def rotation_equivariance(rng, scale):
    mu = _random_mu(rng, 2)
    cloud = zip(_random_disk_points(rng, 20, 0.99), rng.uniform(0.1, 1, 20))
    measures = [
        Atoms(cloud),
        RadialPower(0.5, rng.uniform(0, TWO_PI)),
        Area(1.0),
    ]
    angle = rng.uniform(0, TWO_PI)
    worst = 0.0
    for nu in measures:
        before = dmu_carleson_test(nu, mu, _SMALL)
        after = dmu_carleson_test(
            nu.rotate(angle), mu.rotate(angle), _SMALL.rotate(angle)
        )
        worst = max(
            worst,
            np.max(
                np.abs(np.subtract(before.levels, after.levels))
                / np.maximum(1.0, np.abs(before.levels))
            ),
        )
    return _bounded(worst, 1e-10 * scale, 'max relative deviation')


@register('carleson-tests')
def monotone_in_mass(rng, scale):
    """Adding mass to ν never lowers the box or kernel suprema."""
    mu = _random_mu(rng, 1)
    cloud = list(
        zip(_random_disk_points(rng, 10, 0.99), rng.uniform(0.1, 1, 10))
    )
    extra = list(zip(_random_disk_points(rng, 5, 0.99), np.ones(5)))
    pairs = [
        (Atoms(cloud), Atoms(cloud + extra)),
        (RadialPower(0.5), RadialPower(0.5).scaled(1.5)),
        (Area(1.0), Area(3.0)),
    ]
    ok = []
    for small, large in pairs:
        ok.append(
            dmu_carleson_test(large, mu, _SMALL).sup_ratio
            >= dmu_carleson_test(small, mu, _SMALL).sup_ratio
        )
        ok.append(
            rkt_sup(large, mu, cfg=_SMALL).sup
            >= rkt_sup(small, mu, cfg=_SMALL).sup
        )
    return _all(ok, 'suprema monotone in ν')


@register('carleson-tests')
def trivial_estimate_holds(rng, scale):
    """4^{n−1}h²||ν|| for area and radial measures, 5/4 of it for atoms."""
    ok = []
    for n_atoms in (1, 2, 3):
        mu = _random_mu(rng, n_atoms)
        for nu in (Area(1.0), RadialPower(0.5, mu.points[0].angle)):
            ok.extend(trivial_estimate(nu, mu)['holds'])
        cloud = Atoms(zip(_random_disk_points(rng, 40, 0.999), np.ones(40)))
        ok.extend(trivial_estimate(cloud, mu)['holds_relaxed'])
    return _all(ok, 'weighted box mass below the trivial bound')


@register('carleson-tests')
def box_below_kernel(rng, scale):
    """σ(S(ζ, h))/(4h) ≤ H² kernel ratio at (1 − h)ζ for h ≤ 7/16."""
    ok = []
    measures = [
        Area(1.0),
        RadialPower(0.5, 1.0),
        Atoms(zip(_random_disk_points(rng, 50, 0.99), np.ones(50))),
    ]
    for sigma in measures:
        directions = [1.0] + list(rng.uniform(0, TWO_PI, 3))
        for zeta in directions:
            for k in range(2, 11):
                ok.append(box_kernel_bound(sigma, zeta, 2.0**-k).holds)
        ok.append(box_kernel_bound(sigma, 1.0, 7.0 / 16.0).holds)
    return _all(ok, 'box side ≤ kernel side')


@register('carleson-tests')
def compactness_rejects_atoms(rng, scale):
    mu = _random_mu(rng, 3)
    rejected = []
    for point in mu.points:
        try:
            compactness_profile(Area(1.0), mu, point, [0.5])
        except AtomDirection:
            rejected.append(True)
        else:
            rejected.append(False)
    return _all(rejected, 'atom directions rejected')


@register('carleson-tests')
def compactness_profile_decay(rng, scale):
    """Area measure and δ₁: kernel ratios vanish off the atom."""
    mu = AtomicBoundaryMeasure([(0.0, 1.0)])
    worst = 0.0
    monotone = []
    for zeta in (math.pi, math.pi / 2):
        profile = compactness_profile(Area(1.0), mu, zeta)
        monotone.append(bool(np.all(np.diff(profile) < 0)))
        worst = max(worst, profile[-1] / profile[0])
    if not all(monotone):
        return _all(monotone, 'strictly decreasing profiles', worst)
    return _bounded(worst, 1e-2 * scale, 'final/initial ratio')


@register('carleson-tests', slow=True)
def box_kernel_agreement(rng, scale):
    """Box and kernel verdicts are conclusive and agree on every pair."""
    table = theorem_agreement()
    inconclusive = table.loc[~table['conclusive'], ['nu', 'mu']]
    disagree = table.loc[table['conclusive'] & ~table['agree'], ['nu', 'mu']]
    return Outcome(
        bool(table['agree'].all()),
        float(len(table) - int(table['agree'].sum())),
        '{} of {} pairs disagree{}; {} inconclusive{}'.format(
            len(disagree),
            len(table),
            _pair_names(disagree),
            len(inconclusive),
            _pair_names(inconclusive),
        ),
    )


# cli


@register('cli')
def report_schema_roundtrip(rng, scale):
    """Reports and measures survive a pass through their JSON form."""
    mu = _random_mu(rng, 2)
    measures = [
        Atoms(zip(_random_disk_points(rng, 3, 0.9), np.ones(3))),
        RadialPower(0.5, 1.0, mu.points, 2.0),
        Area(0.5, mu.points),
    ]
    ok = [measure_from_json(measure_to_json(nu)) == nu for nu in measures]
    report = dmu_carleson_test(measures[1], mu, _SMALL).to_dict()
    text = dumps(report)
    ok.append(dumps(json.loads(text)) == text)
    return _all(ok, 'JSON round trips')


@dataclasses.dataclass(frozen=True)
class PropertyResult:
    name: str
    module: str
    passed: bool
    value: float
    detail: str
    informational: bool = False

    def to_dict(self) -> Dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    """Outcome of :func:`verify_suite`."""

    seed: int
    tolerance_scale: float
    results: Tuple[PropertyResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed or r.informational for r in self.results)

    @property
    def failures(self) -> List[PropertyResult]:
        return [
            r for r in self.results if not (r.passed or r.informational)
        ]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [r.to_dict() for r in self.results],
            columns=[f.name for f in dataclasses.fields(PropertyResult)],
        )

    def to_dict(self) -> Dict:
        return {
            'seed': self.seed,
            'tolerance_scale': self.tolerance_scale,
            'passed': self.passed,
            'properties': [r.to_dict() for r in self.results],
        }


def select(like: Optional[str] = None, include_slow: bool = True):
    """Return the registered properties matching ``like``.

    ``like`` is a regular expression searched in ``module.name``.

    Raises
    ------
    InputError
        if ``like`` is not a valid pattern.
    """
    try:
        pattern = re.compile(like) if like else None
    except re.error as e:
        raise InputError('invalid property pattern {!r}: {}'.format(like, e))
    return [
        prop
        for prop in PROPERTIES.values()
        if (include_slow or not prop.slow)
        and (
            pattern is None
            or pattern.search('{}.{}'.format(prop.module, prop.name))
        )
    ]


def _generator(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence([seed, zlib.crc32(name.encode('utf-8'))])
    )


def _run(prop: Property, seed: int, scale: float) -> PropertyResult:
    try:
        outcome = prop.check(_generator(seed, prop.name), scale)
    except Exception as e:
        outcome = Outcome(
            False, math.nan, 'raised {}: {}'.format(type(e).__name__, e)
        )
    return PropertyResult(
        name=prop.name,
        module=prop.module,
        passed=bool(outcome.passed),
        value=float(outcome.value),
        detail=outcome.detail,
        informational=prop.informational,
    )


def verify_suite(
    seed: Optional[int] = None,
    like: Optional[str] = None,
    tolerance_scale: float = 1.0,
    include_slow: bool = True,
) -> VerifyReport:
    """Run the invariant suite.

    Parameters
    ----------
    seed : int, optional
        Defaults to ``Settings.seed``; recorded in the report.
    like : str, optional
        Regular expression selecting properties by ``module.name``.
    tolerance_scale : float
        Multiplies every tolerance the properties compare against.
    include_slow : bool
        Whether to run the properties marked slow.

    Returns
    -------
    VerifyReport
    """
    seed = config.get_settings().seed if seed is None else int(seed)
    tolerance_scale = float(tolerance_scale)
    if not tolerance_scale > 0:
        raise InputError(
            'tolerance scale must be positive, got {!r}'.format(
                tolerance_scale
            )
        )
    results = []
    for prop in select(like, include_slow):
        result = _run(prop, seed, tolerance_scale)
        logger.debug(
            '{}.{}: {} ({})',
            result.module,
            result.name,
            'pass' if result.passed else 'FAIL',
            result.detail,
        )
        results.append(result)
    report = VerifyReport(
        seed=seed, tolerance_scale=tolerance_scale, results=tuple(results)
    )
    logger.info(
        '{} properties, {} failing (seed {})',
        len(results),
        len(report.failures),
        seed,
    )
    return report
