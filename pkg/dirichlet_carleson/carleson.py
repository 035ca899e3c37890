"""Executable Carleson-measure tests.

A measure ν is Carleson for H² iff ν(S(ζ, h)) = O(h), and Carleson for D(μ)
iff the weighted measure ∏ |z − λⱼ|² dν is Carleson for H². Both conditions,
and the reproducing-kernel tests that are equivalent to them, are evaluated
on dyadic levels h = 2^{−k}; the asymptotic statement is then decided by a
deterministic rule applied to the per-level suprema (``classify_levels``).
The rule is a heuristic: no finite computation separates O(h) from
unbounded growth.
"""
from __future__ import annotations

import dataclasses
import enum
import math
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from . import config, util
from .exceptions import AtomDirection, InputError
from .hardy import BoundaryPoint, as_boundary_point
from .kernels import (
    SzegoKernel,
    capped_truncation_degree,
    default_truncation_degree,
    kernel_for,
)
from .measures import (
    Area,
    AtomicBoundaryMeasure,
    Atoms,
    CarlesonBox,
    PlanarMeasure,
    RadialPower,
    weight_by_product,
)

__all__ = (
    'Verdict',
    'BoxScanConfig',
    'Witness',
    'ScanReport',
    'RKTReport',
    'classify_levels',
    'h2_box_sup',
    'alpha_carleson_sup',
    'dmu_carleson_test',
    'dmu_compact_carleson_test',
    'rkt_ratio',
    'rkt_sup',
    'h2_rkt_ratio',
    'h2_rkt_sup',
    'box_kernel_bound',
    'compactness_profile',
    'trivial_estimate',
    'agreement_family',
    'theorem_agreement',
)


class Verdict(enum.Enum):
    BOUNDED = 'Bounded'
    DIVERGING = 'Diverging'
    INCONCLUSIVE = 'Inconclusive'

    def __str__(self):
        return self.value


@dataclasses.dataclass(frozen=True)
class BoxScanConfig:
    """Grid of boxes S(ζ, 2^{−k}) and the verdict parameters.

    Parameters
    ----------
    n_zeta : int
        Number of equispaced directions ζ (support directions of the
        measures under test are always added).
    k_min, k_max : int
        Dyadic levels h = 2^{−k} scanned by box tests.
    rho : float
        Growth factor over ``window`` steps that signals divergence.
    window : int
        Number of trailing level steps the verdict looks at.
    vanish_factor : float
        A Bounded profile is vanishing when its last level is at most this
        fraction of its peak.
    offset : float
        Angle of the first equispaced direction.
    rkt_k_max : int
        Deepest level 1 − |w| = 2^{−k} of the reproducing-kernel grids.
    """

    n_zeta: int = 64
    k_min: int = 1
    k_max: int = 20
    rho: float = 1.5
    window: int = 3
    vanish_factor: float = 1e-2
    offset: float = 0.0
    rkt_k_max: int = 14

    def __post_init__(self):
        if self.n_zeta < 8:
            raise InputError(
                'n_zeta must be >= 8, got {}'.format(self.n_zeta)
            )
        if not 1 <= self.k_min <= self.k_max <= 40:
            raise InputError(
                'levels must satisfy 1 <= k_min <= k_max <= 40, '
                'got {}..{}'.format(self.k_min, self.k_max)
            )
        if not 1 <= self.rkt_k_max <= 40:
            raise InputError(
                'rkt_k_max must lie in [1, 40], '
                'got {}'.format(self.rkt_k_max)
            )
        if not self.rho > 1:
            raise InputError('rho must be > 1, got {}'.format(self.rho))
        if self.window < 1:
            raise InputError(
                'window must be >= 1, got {}'.format(self.window)
            )
        if not 0 < self.vanish_factor < 1:
            raise InputError(
                'vanish_factor must lie in (0, 1), '
                'got {}'.format(self.vanish_factor)
            )

    def levels(self) -> List[Tuple[int, float]]:
        return util.dyadic_levels(self.k_min, self.k_max)

    def rkt_levels(self) -> List[Tuple[int, float]]:
        return util.dyadic_levels(self.k_min, self.rkt_k_max)

    def directions(self, extra: Sequence = ()) -> List[BoundaryPoint]:
        """Equispaced directions followed by ``extra`` ones not yet present."""
        tol = config.tolerance('node')
        points = [
            BoundaryPoint(self.offset + 2 * math.pi * j / self.n_zeta)
            for j in range(self.n_zeta)
        ]
        for point in extra:
            point = as_boundary_point(point)
            if all(point.separation(p) > tol for p in points):
                points.append(point)
        return points

    def rotate(self, angle: float) -> BoxScanConfig:
        return dataclasses.replace(self, offset=self.offset + angle)


class Witness(NamedTuple):
    """Box (or kernel point) attaining a per-level supremum."""

    zeta: BoundaryPoint
    h: float
    ratio: float


def classify_levels(
    levels: Sequence[float],
    rho: float = 1.5,
    window: int = 3,
    rtol: float = 1e-9,
) -> Verdict:
    """Decide the asymptotic behavior of a sequence of per-level suprema.

    Let ``tail`` be the last ``window + 1`` values.

    * all values zero: Bounded;
    * ``tail`` strictly increasing: Bounded if its log-increments decrease
      geometrically and the extrapolated total growth from ``tail[0]``
      stays below ρ; Diverging if ``tail[-1] ≥ ρ·tail[0]``;
    * Bounded if ``tail`` is non-increasing or the last ``window`` values
      never exceed the maximum of the earlier ones;
    * Bounded if the profile has turned over: the peak is followed by at
      least ``window - 1`` values and none of them increases;
    * Inconclusive otherwise, including when fewer than ``window + 1``
      levels are available.
    """
    values = np.asarray(levels, dtype=float)
    if len(values) and np.max(values) <= 0:
        return Verdict.BOUNDED
    if len(values) < window + 1:
        return Verdict.INCONCLUSIVE
    tail = values[-(window + 1) :]
    head_max = np.max(values[:-window])
    window_max = np.max(values[-window:])
    if np.all(np.diff(tail) > 0):
        if tail[0] > 0:
            steps = np.diff(np.log(tail))
            if len(steps) > 1:
                q = np.max(steps[1:] / steps[:-1])
                if q < 1:
                    projected = np.sum(steps) + steps[-1] * q / (1 - q)
                    if projected < math.log(rho):
                        return Verdict.BOUNDED
        if tail[-1] >= rho * tail[0]:
            return Verdict.DIVERGING
        if window_max <= head_max * (1 + rtol):
            return Verdict.BOUNDED
        return Verdict.INCONCLUSIVE
    if np.all(tail[1:] <= tail[:-1] * (1 + rtol)):
        return Verdict.BOUNDED
    if window_max <= head_max * (1 + rtol):
        return Verdict.BOUNDED
    after = values[int(np.argmax(values)) :]
    turned = np.all(after[1:] <= after[:-1] * (1 + rtol))
    if len(after) >= window and turned:
        return Verdict.BOUNDED
    return Verdict.INCONCLUSIVE


def _is_vanishing(levels, verdict: Verdict, factor: float) -> bool:
    if verdict is not Verdict.BOUNDED:
        return False
    peak = max(levels) if len(levels) else 0.0
    return peak <= 0 or levels[-1] <= factor * peak


def _level_rows(ks, hs, sups) -> List[Dict]:
    return [
        {'level': int(k), 'h': float(h), 'sup_ratio': float(s)}
        for k, h, s in zip(ks, hs, sups)
    ]


@dataclasses.dataclass(frozen=True)
class ScanReport:
    """Result of a box scan.

    ``levels`` holds the supremum over directions at every level k, with
    ``witnesses`` the maximizing box; ``sup_ratio`` is the largest of them.
    """

    sup_ratio: float
    levels: Tuple[float, ...]
    ks: Tuple[int, ...]
    hs: Tuple[float, ...]
    verdict: Verdict
    witnesses: Tuple[Witness, ...]
    vanishing: bool
    normalization: str = 'h'

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                'level': list(self.ks),
                'h': list(self.hs),
                'sup_ratio': list(self.levels),
                'zeta': [w.zeta.angle for w in self.witnesses],
            }
        )

    def to_csv(self, path_or_buf=None, **kwargs):
        """Write (or return) the columns level, h, sup_ratio."""
        frame = self.to_frame()[['level', 'h', 'sup_ratio']]
        return frame.to_csv(path_or_buf, index=False, **kwargs)

    def to_dict(self) -> Dict:
        return {
            'verdict': str(self.verdict),
            'sup_ratio': float(self.sup_ratio),
            'vanishing': bool(self.vanishing),
            'normalization': self.normalization,
            'levels': _level_rows(self.ks, self.hs, self.levels),
            'witnesses': [
                {'zeta': w.zeta.angle, 'h': w.h, 'ratio': w.ratio}
                for w in self.witnesses
            ],
        }


def _scan(
    nu: PlanarMeasure,
    cfg: BoxScanConfig,
    normalizer: Callable[[float], float],
    normalization: str,
    extra: Sequence = (),
) -> ScanReport:
    directions = cfg.directions(tuple(extra) + nu.support_directions())

    def level_sup(level):
        _, h = level
        scale = normalizer(h)
        best = Witness(directions[0], h, -math.inf)
        for zeta in directions:
            ratio = nu.box_mass(CarlesonBox(zeta, h)) / scale
            if ratio > best.ratio:
                best = Witness(zeta, h, ratio)
        return best

    levels = cfg.levels()
    witnesses = tuple(util.parallel_map(level_sup, levels))
    sups = tuple(w.ratio for w in witnesses)
    verdict = classify_levels(sups, cfg.rho, cfg.window)
    logger.debug(
        'box scan of {!r} over {} directions: verdict {}, sup {}',
        nu,
        len(directions),
        verdict,
        max(sups),
    )
    return ScanReport(
        sup_ratio=max(sups),
        levels=sups,
        ks=tuple(k for k, _ in levels),
        hs=tuple(h for _, h in levels),
        verdict=verdict,
        witnesses=witnesses,
        vanishing=_is_vanishing(sups, verdict, cfg.vanish_factor),
        normalization=normalization,
    )


def h2_box_sup(
    nu: PlanarMeasure, cfg: Optional[BoxScanConfig] = None
) -> ScanReport:
    """Scan ν(S(ζ, h))/h over the grid of boxes.

    Examples
    --------
    >>> h2_box_sup(RadialPower(0.5)).verdict
    <Verdict.DIVERGING: 'Diverging'>
    """
    return _scan(nu, cfg or BoxScanConfig(), lambda h: h, 'h')


def alpha_carleson_sup(
    nu: PlanarMeasure, alpha: float, cfg: Optional[BoxScanConfig] = None
) -> ScanReport:
    """Scan ν(S(ζ, h))/h^α, or ν(S(ζ, h))·log(e/h) when α = 0."""
    alpha = float(alpha)
    if not 0 <= alpha <= 1:
        raise InputError('alpha must lie in [0, 1], got {!r}'.format(alpha))
    if alpha == 0:
        return _scan(
            nu,
            cfg or BoxScanConfig(),
            lambda h: 1.0 / math.log(math.e / h),
            '1/log(e/h)',
        )
    return _scan(
        nu,
        cfg or BoxScanConfig(),
        lambda h: h**alpha,
        'h' if alpha == 1 else 'h^{:g}'.format(alpha),
    )


def dmu_carleson_test(
    nu: PlanarMeasure,
    mu: AtomicBoundaryMeasure,
    cfg: Optional[BoxScanConfig] = None,
) -> ScanReport:
    """Carleson test for D(μ): the H² box scan of ∏ |z − λⱼ|² dν."""
    sigma = weight_by_product(nu, mu.points)
    return _scan(sigma, cfg or BoxScanConfig(), lambda h: h, 'h', mu.points)


def dmu_compact_carleson_test(
    nu: PlanarMeasure,
    mu: AtomicBoundaryMeasure,
    cfg: Optional[BoxScanConfig] = None,
) -> Tuple[bool, ScanReport]:
    """Compactness test for D(μ): is the weighted box ratio o(h)?

    Returns
    -------
    compact : bool
        ``report.vanishing``.
    report : ScanReport
    """
    report = dmu_carleson_test(nu, mu, cfg)
    return report.vanishing, report


@dataclasses.dataclass(frozen=True)
class RKTReport:
    """Reproducing-kernel ratios ∫ |k_w|² dν / ||k_w||² over a grid of w."""

    sup: float
    ratios: pd.DataFrame
    levels: Tuple[float, ...]
    ks: Tuple[int, ...]
    hs: Tuple[float, ...]
    verdict: Verdict
    degree: Optional[int] = None

    def __float__(self):
        return float(self.sup)

    def to_csv(self, path_or_buf=None, **kwargs):
        frame = pd.DataFrame(_level_rows(self.ks, self.hs, self.levels))
        return frame.to_csv(path_or_buf, index=False, **kwargs)

    def to_dict(self) -> Dict:
        return {
            'verdict': str(self.verdict),
            'sup_ratio': float(self.sup),
            'degree': self.degree,
            'levels': _level_rows(self.ks, self.hs, self.levels),
        }


def rkt_ratio(nu: PlanarMeasure, kernel, tol: Optional[float] = None):
    """Return ∫ |k_w|² dν / ||k_w||²."""
    return nu.sq_mass(kernel, tol) / kernel.norm_sq


def _grid_from_points(points) -> List[Tuple[int, float, List[complex]]]:
    # explicit grids are grouped by radius, innermost first
    groups: Dict[float, List[complex]] = {}
    for w in points:
        w = complex(w)
        groups.setdefault(round(abs(w), 12), []).append(w)
    return [
        (k, 1.0 - r, groups[r]) for k, r in enumerate(sorted(groups), 1)
    ]


def _default_grid(cfg: BoxScanConfig, directions, max_level=None):
    grid = []
    for k, h in cfg.rkt_levels():
        if max_level is not None and k > max_level:
            break
        grid.append(
            (k, h, [(1.0 - h) * zeta.point for zeta in directions])
        )
    return grid


def _deepest_feasible_level(cfg: BoxScanConfig) -> int:
    cap = config.get_settings().max_degree
    deepest = 0
    for k, h in cfg.rkt_levels():
        if default_truncation_degree(1.0 - h) > cap:
            break
        deepest = k
    return deepest


def _rkt_scan(nu, grid, make_kernels, cfg, tol, degree=None) -> RKTReport:
    def level_ratios(level):
        k, h, ws = level
        kernels = make_kernels(ws)
        return [
            (k, h, w, rkt_ratio(nu, kernel, tol))
            for w, kernel in zip(ws, kernels)
        ]

    rows = [
        row for level in util.parallel_map(level_ratios, grid) for row in level
    ]
    frame = pd.DataFrame(rows, columns=['level', 'h', 'w', 'ratio'])
    frame['angle'] = np.angle(frame['w'].to_numpy(dtype=complex)) % (
        2 * math.pi
    )
    per_level = frame.groupby('level', sort=True)['ratio'].max()
    ks = tuple(int(k) for k in per_level.index)
    hs = tuple(float(h) for _, h, _ in grid)
    levels = tuple(float(v) for v in per_level.to_numpy())
    verdict = classify_levels(levels, cfg.rho, cfg.window)
    logger.debug(
        'kernel test of {!r}: {} points, verdict {}, sup {}',
        nu,
        len(frame),
        verdict,
        max(levels),
    )
    return RKTReport(
        sup=max(levels),
        ratios=frame,
        levels=levels,
        ks=ks,
        hs=hs,
        verdict=verdict,
        degree=degree,
    )


def rkt_sup(
    nu: PlanarMeasure,
    mu: AtomicBoundaryMeasure,
    w_grid: Optional[Sequence[complex]] = None,
    N: Optional[int] = None,
    cfg: Optional[BoxScanConfig] = None,
    tol: Optional[float] = None,
) -> RKTReport:
    """Reproducing-kernel test ∫ |k_w|² dν ≤ C ||k_w||²_μ over a grid of w.

    Parameters
    ----------
    nu : PlanarMeasure
    mu : AtomicBoundaryMeasure
    w_grid : sequence of complex, optional
        Points of the disk; grouped into levels by their modulus. By default
        the radii 1 − 2^{−k}, k ≤ ``cfg.rkt_k_max``, towards the scan
        directions, the support directions of ν and the atoms of μ.
    N : int, optional
        Truncation degree for several atoms; by default the degree needed
        for the outermost grid radius. Default grids are cut at the deepest
        level whose degree fits ``Settings.max_degree``.
    cfg : BoxScanConfig, optional
    tol : float, optional
        Quadrature tolerance for the kernel masses.

    Returns
    -------
    RKTReport
        ``sup`` is the largest ratio, ``levels`` the per-level suprema and
        ``verdict`` their classification.

    Raises
    ------
    QuadratureNotConverged
        from the kernel-mass quadrature.
    """
    cfg = cfg or BoxScanConfig()
    if w_grid is not None:
        grid = _grid_from_points(w_grid)
    else:
        directions = cfg.directions(
            tuple(mu.points) + nu.support_directions()
        )
        max_level = None
        if mu.n > 1 and N is None:
            max_level = _deepest_feasible_level(cfg)
            if max_level < cfg.rkt_k_max:
                logger.warning(
                    'kernel grid cut at level {} (max_degree {})',
                    max_level,
                    config.get_settings().max_degree,
                )
            if max_level < 1:
                raise InputError(
                    'max_degree {} is too small for any kernel level'.format(
                        config.get_settings().max_degree
                    )
                )
        grid = _default_grid(cfg, directions, max_level)
    degree = None
    if mu.n > 1:
        r_max = max(abs(w) for _, _, ws in grid for w in ws)
        degree = N if N is not None else capped_truncation_degree(r_max)
    return _rkt_scan(
        nu, grid, lambda ws: kernel_for(mu, ws, degree), cfg, tol, degree
    )


def h2_rkt_ratio(sigma: PlanarMeasure, w: complex, tol=None) -> float:
    """Return (1 − |w|²) ∫ |1 − conj(w)·z|^{−2} dσ."""
    return rkt_ratio(sigma, SzegoKernel(w), tol)


def h2_rkt_sup(
    sigma: PlanarMeasure,
    cfg: Optional[BoxScanConfig] = None,
    tol: Optional[float] = None,
) -> RKTReport:
    """Carleson's kernel test for H² on the default grid."""
    cfg = cfg or BoxScanConfig()
    grid = _default_grid(cfg, cfg.directions(sigma.support_directions()))
    return _rkt_scan(
        sigma, grid, lambda ws: [SzegoKernel(w) for w in ws], cfg, tol
    )


class BoxKernelBound(NamedTuple):
    box_side: float
    kernel_side: float

    @property
    def holds(self) -> bool:
        return self.box_side <= self.kernel_side * (1 + 1e-12)


def box_kernel_bound(
    sigma: PlanarMeasure, zeta, h: float, tol=None
) -> BoxKernelBound:
    """Compare σ(S(ζ, h))/(4h) with the H² kernel ratio at w = (1 − h)ζ.

    The box side is the smaller one whenever h ≤ 7/16.
    """
    box = CarlesonBox(zeta, h)
    return BoxKernelBound(
        box_side=sigma.box_mass(box) / (4.0 * h),
        kernel_side=h2_rkt_ratio(sigma, (1.0 - h) * box.zeta.point, tol),
    )


def compactness_profile(
    nu: PlanarMeasure,
    mu: AtomicBoundaryMeasure,
    zeta,
    h_levels: Optional[Sequence[float]] = None,
    tol: Optional[float] = None,
) -> np.ndarray:
    """Kernel ratios along the radius w = (1 − h)ζ.

    A profile decaying to zero at every ζ away from the atoms indicates a
    compact embedding of D(μ).

    Raises
    ------
    AtomDirection
        if ζ coincides with an atom of μ.
    """
    zeta = as_boundary_point(zeta)
    node_tol = config.tolerance('node')
    for point in mu.points:
        if zeta.separation(point) <= node_tol:
            raise AtomDirection(zeta, point)
    if h_levels is None:
        h_levels = [h for _, h in util.dyadic_levels(1, 14)]
    profile = []
    for h in h_levels:
        if not 0 < h < 1:
            raise InputError('h must lie in (0, 1), got {!r}'.format(h))
        (kernel,) = kernel_for(mu, [(1.0 - h) * zeta.point])
        profile.append(rkt_ratio(nu, kernel, tol))
    return np.array(profile)


def trivial_estimate(
    nu: PlanarMeasure,
    mu: AtomicBoundaryMeasure,
    h_levels: Optional[Sequence[float]] = None,
) -> pd.DataFrame:
    """Weighted box masses at the atoms against 4^{n−1}·h²·||ν||.

    ``holds`` compares the mass with ``bound`` = 4^{n−1}·h²·||ν||. Inside
    S(λᵢ, h) one has |z − λᵢ|² < (5/4)·h² and |z − λⱼ|² ≤ 4, so
    ``holds_relaxed`` against ``relaxed_bound`` = (5/4)·``bound`` is
    guaranteed for every ν; ``holds`` also needs ν(S(λᵢ, h)) ≤ (4/5)·||ν||
    or a smaller average of |z − λᵢ|² over the box, as for measures
    without an atom near λᵢ.
    """
    if h_levels is None:
        h_levels = [h for _, h in util.dyadic_levels(1, 20)]
    sigma = weight_by_product(nu, mu.points)
    total = nu.total_mass()
    factor = 4.0 ** (mu.n - 1)
    rows = []
    for point in mu.points:
        for h in h_levels:
            mass = sigma.box_mass(CarlesonBox(point, h))
            bound = factor * h * h * total
            rows.append(
                {
                    'atom': point.angle,
                    'h': h,
                    'mass': mass,
                    'bound': bound,
                    'relaxed_bound': 1.25 * bound,
                    'holds': mass <= bound * (1 + 1e-12),
                    'holds_relaxed': mass <= 1.25 * bound * (1 + 1e-12),
                }
            )
    return pd.DataFrame(rows)


def agreement_family():
    """The (ν, μ) family used to compare box and kernel verdicts.

    Returns
    -------
    measures : dict of name -> PlanarMeasure
        Four atom clouds, four radial powers (rays through and away from
        the atom at angle 0), four scaled area measures.
    mus : dict of name -> AtomicBoundaryMeasure
        One, two and three atoms, all containing the atom at angle 0.
    """
    measures = {
        'atoms-center': Atoms([(0.5, 1.0)]),
        'atoms-pair': Atoms([(0.9 * np.exp(0.3j), 1.0), (0.7j, 2.0)]),
        'atoms-origin': Atoms([(0.0, 3.0)]),
        'atoms-triple': Atoms(
            [
                (0.95 * np.exp(1j * math.pi), 1.0),
                (0.8 * np.exp(2j), 0.5),
                (0.6 * np.exp(-1j), 1.0),
            ]
        ),
        'ray-0.25-through': RadialPower(0.25, 0.0),
        'ray-0.5-through': RadialPower(0.5, 0.0),
        'ray-0.75-away': RadialPower(0.75, math.pi / 2),
        'ray-0.9-away': RadialPower(0.9, math.pi / 2),
        'area-0.25': Area(0.25),
        'area-1': Area(1.0),
        'area-2': Area(2.0),
        'area-5': Area(5.0),
    }
    mus = {
        'one-atom': AtomicBoundaryMeasure([(0.0, 1.0)]),
        'two-atoms': AtomicBoundaryMeasure([(0.0, 1.0), (math.pi, 0.5)]),
        'three-atoms': AtomicBoundaryMeasure(
            [(0.0, 1.0), (2 * math.pi / 3, 2.0), (4 * math.pi / 3, 1.0)]
        ),
    }
    return measures, mus


def theorem_agreement(
    measures: Optional[Dict[str, PlanarMeasure]] = None,
    mus: Optional[Dict[str, AtomicBoundaryMeasure]] = None,
    cfg: Optional[BoxScanConfig] = None,
) -> pd.DataFrame:
    """Box verdict of the weighted measure against the kernel verdict.

    A pair is conclusive when neither verdict is Inconclusive, and agrees
    when it is conclusive and the box scan is Diverging exactly when the
    per-level kernel suprema are Diverging.
    """
    default_measures, default_mus = agreement_family()
    measures = default_measures if measures is None else measures
    mus = default_mus if mus is None else mus
    cfg = cfg or BoxScanConfig()
    rows = []
    for mu_name, mu in mus.items():
        for nu_name, nu in measures.items():
            box = dmu_carleson_test(nu, mu, cfg)
            kernel = rkt_sup(nu, mu, cfg=cfg)
            box_unbounded = box.verdict is Verdict.DIVERGING
            kernel_unbounded = kernel.verdict is Verdict.DIVERGING
            conclusive = Verdict.INCONCLUSIVE not in (
                box.verdict,
                kernel.verdict,
            )
            agree = conclusive and box_unbounded == kernel_unbounded
            rows.append(
                {
                    'nu': nu_name,
                    'mu': mu_name,
                    'box_verdict': str(box.verdict),
                    'rkt_verdict': str(kernel.verdict),
                    'rkt_sup': kernel.sup,
                    'conclusive': conclusive,
                    'agree': agree,
                }
            )
            logger.info(
                '{} / {}: box {}, kernels {}',
                nu_name,
                mu_name,
                box.verdict,
                kernel.verdict,
            )
    return pd.DataFrame(rows)
