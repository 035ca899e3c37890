"""dirichlet_carleson test configuration module."""
import math
import os

import numpy as np
import pytest
from hypothesis import strategies as st

from dirichlet_carleson import config
from dirichlet_carleson.hardy import TWO_PI, Poly
from dirichlet_carleson.measures import (
    Area,
    AtomicBoundaryMeasure,
    RadialPower,
)

TEST_SEED = int(os.environ.get('DIRICHLET_CARLESON_TEST_SEED', 1729))
TEST_WORKERS = int(os.environ.get('DIRICHLET_CARLESON_TEST_WORKERS', 1))

#: atom angles are drawn from a grid of this many equispaced points
ANGLE_GRID = 36


def polys(max_degree: int = 10, min_size: int = 1):
    """Strategy for polynomials with coefficients in the unit disk."""
    return st.lists(
        st.complex_numbers(
            max_magnitude=1.0, allow_nan=False, allow_infinity=False
        ),
        min_size=min_size,
        max_size=max_degree + 1,
    ).map(Poly)


def boundary_measures(max_atoms: int = 4):
    """Strategy for atomic boundary measures with separated atoms."""
    return st.lists(
        st.tuples(
            st.integers(0, ANGLE_GRID - 1),
            st.floats(0.1, 2.0, allow_nan=False),
        ),
        min_size=1,
        max_size=max_atoms,
        unique_by=lambda atom: atom[0],
    ).map(
        lambda atoms: AtomicBoundaryMeasure(
            (TWO_PI * k / ANGLE_GRID, mass) for k, mass in atoms
        )
    )


@pytest.fixture(scope='module')
def settings():
    """Define the settings the tests run with.

    Returns
    -------
    dirichlet_carleson.config.Settings
    """
    with config.override(seed=TEST_SEED, workers=TEST_WORKERS) as current:
        yield current


@pytest.fixture
def rng(settings) -> np.random.Generator:
    """Define a random generator seeded from the test settings."""
    return np.random.default_rng(settings.seed)


@pytest.fixture(scope='module')
def delta_one() -> AtomicBoundaryMeasure:
    """Unit point mass at λ = 1."""
    return AtomicBoundaryMeasure([(0.0, 1.0)])


@pytest.fixture(scope='module')
def two_atoms() -> AtomicBoundaryMeasure:
    """δ₁ + ½·δ₋₁."""
    return AtomicBoundaryMeasure([(0.0, 1.0), (math.pi, 0.5)])


@pytest.fixture(scope='module')
def three_atoms() -> AtomicBoundaryMeasure:
    """Three atoms at the cube roots of unity."""
    return AtomicBoundaryMeasure(
        [(0.0, 1.0), (2 * math.pi / 3, 2.0), (4 * math.pi / 3, 1.0)]
    )


@pytest.fixture(scope='module')
def area() -> Area:
    """Normalized area measure."""
    return Area(1.0)


@pytest.fixture(scope='module')
def radial_half() -> RadialPower:
    """(1 − r)^{−1/2} dr on the radius ending at 1."""
    return RadialPower(0.5, 0.0)
