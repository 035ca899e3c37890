"""Tolerances and defaults.

Every value can be overridden through environment variables, e.g.::

    DIRICHLET_CARLESON_SEED=7
    DIRICHLET_CARLESON_WORKERS=4
    DIRICHLET_CARLESON_MAX_DEGREE=2000
    DIRICHLET_CARLESON_TOL_QUADRATURE=1e-10
"""
import contextlib
import dataclasses
import os
from typing import Iterator, Mapping, Optional

from .exceptions import InputError

ENV_PREFIX = 'DIRICHLET_CARLESON_'


@dataclasses.dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances.

    Parameters
    ----------
    root : float
        Relative tolerance for "p vanishes at λ", scaled by 1 + ||p||_2.
    node : float
        Minimal angular separation of distinct boundary points.
    quadrature : float
        Absolute tolerance of adaptive quadrature.
    reproducing : float
        Tolerance of the reproducing-property checks.
    kernel : float
        Target size of the neglected kernel tail when choosing a
        truncation degree.
    """

    root: float = 1e-9
    node: float = 1e-12
    quadrature: float = 1e-8
    reproducing: float = 1e-8
    kernel: float = 1e-10

    @classmethod
    def names(cls):
        return tuple(f.name for f in dataclasses.fields(cls))

    def replace(self, **overrides) -> 'Tolerances':
        """Return a copy with the given tolerances replaced.

        Raises
        ------
        InputError
            if a name is unknown or a value is not positive.
        """
        unknown = set(overrides) - set(self.names())
        if unknown:
            raise InputError(
                'unknown tolerance(s): {}; expected one of {}'.format(
                    ', '.join(sorted(unknown)), ', '.join(self.names())
                )
            )
        for name, value in overrides.items():
            if not float(value) > 0:
                raise InputError(
                    'tolerance {} must be positive, got {!r}'.format(
                        name, value
                    )
                )
        return dataclasses.replace(
            self, **{k: float(v) for k, v in overrides.items()}
        )


@dataclasses.dataclass(frozen=True)
class Settings:
    """Process-wide defaults."""

    seed: int = 1729
    tolerances: Tolerances = Tolerances()
    max_degree: int = 1500
    workers: int = 1

    def replace(self, **overrides) -> 'Settings':
        tolerances = overrides.pop('tolerances', None)
        settings = dataclasses.replace(self, **overrides)
        if tolerances:
            settings = dataclasses.replace(
                settings, tolerances=settings.tolerances.replace(**tolerances)
            )
        return settings


def from_environment(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Build settings from ``DIRICHLET_CARLESON_*`` environment variables.

    Parameters
    ----------
    environ : mapping, optional
        Defaults to ``os.environ``.

    Returns
    -------
    Settings
    """
    environ = os.environ if environ is None else environ
    default = Settings()
    tolerances = {
        name: environ[ENV_PREFIX + 'TOL_' + name.upper()]
        for name in Tolerances.names()
        if ENV_PREFIX + 'TOL_' + name.upper() in environ
    }
    try:
        return default.replace(
            seed=int(environ.get(ENV_PREFIX + 'SEED', default.seed)),
            workers=int(environ.get(ENV_PREFIX + 'WORKERS', default.workers)),
            max_degree=int(
                environ.get(ENV_PREFIX + 'MAX_DEGREE', default.max_degree)
            ),
            tolerances=tolerances,
        )
    except ValueError as e:
        raise InputError('invalid environment setting: {}'.format(e))


_settings = from_environment()


def get_settings() -> Settings:
    """Return the current settings."""
    return _settings


def set_settings(settings: Settings) -> Settings:
    """Install new settings and return the previous ones."""
    global _settings
    previous, _settings = _settings, settings
    return previous


@contextlib.contextmanager
def override(**overrides) -> Iterator[Settings]:
    """Temporarily replace settings.

    Examples
    --------
    >>> with override(tolerances={'quadrature': 1e-6}):
    ...     pass
    """
    previous = set_settings(get_settings().replace(**overrides))
    try:
        yield get_settings()
    finally:
        set_settings(previous)


def tolerance(name: str, value: Optional[float] = None) -> float:
    """Return ``value`` if given, else the configured tolerance ``name``."""
    if value is not None:
        return float(value)
    return getattr(get_settings().tolerances, name)
