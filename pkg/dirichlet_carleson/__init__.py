"""Dirichlet-type spaces D(μ) for finitely atomic boundary measures μ."""
from __future__ import annotations

from importlib_metadata import PackageNotFoundError, version
from loguru import logger

try:
    __version__ = version("dirichlet_carleson")
except PackageNotFoundError:
    __version__ = ""

from .carleson import (  # noqa: E402
    BoxScanConfig,
    RKTReport,
    ScanReport,
    Verdict,
    alpha_carleson_sup,
    box_kernel_bound,
    classify_levels,
    compactness_profile,
    dmu_carleson_test,
    dmu_compact_carleson_test,
    h2_box_sup,
    h2_rkt_ratio,
    h2_rkt_sup,
    rkt_ratio,
    rkt_sup,
    theorem_agreement,
    trivial_estimate,
)
from .config import Settings, Tolerances, get_settings, override  # noqa: E402
from .dirichlet import (  # noqa: E402
    Decomposition,
    DirichletSpace,
    GramMatrix,
    decompose,
    dirichlet_mu,
    dirichlet_mu_area,
    dmu_inner,
    dmu_norm,
    dmu_norm_sq,
    gram_matrix,
    local_dirichlet,
    weighted_dirichlet_norm_sq,
)
from .exceptions import (  # noqa: E402
    AtomDirection,
    DirichletCarlesonError,
    DuplicateNodes,
    InputError,
    NonPositiveAlpha,
    NotARoot,
    NumericalError,
    OutsideDisk,
    QuadratureNotConverged,
    SchemaError,
    SolveFailed,
)
from .hardy import (  # noqa: E402
    BoundaryPoint,
    Poly,
    divided_quotient,
    h2_inner,
    h2_norm,
    h2_norm_sq,
    lagrange_interp,
)
from .kernels import (  # noqa: E402
    OneAtomKernel,
    OneAtomKernelModel,
    SzegoKernel,
    TruncatedKernel,
    kernel_for,
    one_atom_kernel,
    solve_a0,
    truncated_kernel,
    weighted_dirichlet_kernel,
)
from .measures import (  # noqa: E402
    Area,
    AtomicBoundaryMeasure,
    Atoms,
    CarlesonBox,
    PlanarMeasure,
    RadialPower,
    point_mass,
    poisson_extension,
)
from .verify import verify_suite  # noqa: E402

logger.disable("dirichlet_carleson")

__all__ = (
    '__version__',
    'Area',
    'AtomDirection',
    'AtomicBoundaryMeasure',
    'Atoms',
    'BoundaryPoint',
    'BoxScanConfig',
    'CarlesonBox',
    'Decomposition',
    'DirichletCarlesonError',
    'DirichletSpace',
    'DuplicateNodes',
    'GramMatrix',
    'InputError',
    'NonPositiveAlpha',
    'NotARoot',
    'NumericalError',
    'OneAtomKernel',
    'OneAtomKernelModel',
    'OutsideDisk',
    'PlanarMeasure',
    'Poly',
    'QuadratureNotConverged',
    'RKTReport',
    'RadialPower',
    'ScanReport',
    'SchemaError',
    'Settings',
    'SolveFailed',
    'SzegoKernel',
    'Tolerances',
    'TruncatedKernel',
    'Verdict',
    'alpha_carleson_sup',
    'box_kernel_bound',
    'classify_levels',
    'compactness_profile',
    'decompose',
    'dirichlet_mu',
    'dirichlet_mu_area',
    'divided_quotient',
    'dmu_carleson_test',
    'dmu_compact_carleson_test',
    'dmu_inner',
    'dmu_norm',
    'dmu_norm_sq',
    'get_settings',
    'gram_matrix',
    'h2_box_sup',
    'h2_inner',
    'h2_norm',
    'h2_norm_sq',
    'h2_rkt_ratio',
    'h2_rkt_sup',
    'kernel_for',
    'lagrange_interp',
    'local_dirichlet',
    'one_atom_kernel',
    'override',
    'point_mass',
    'poisson_extension',
    'rkt_ratio',
    'rkt_sup',
    'solve_a0',
    'theorem_agreement',
    'trivial_estimate',
    'truncated_kernel',
    'verify_suite',
    'weighted_dirichlet_kernel',
    'weighted_dirichlet_norm_sq',
)
