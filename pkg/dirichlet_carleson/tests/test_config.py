import pytest

from dirichlet_carleson import config
from dirichlet_carleson.exceptions import InputError


def test_defaults():
    settings = config.Settings()
    assert settings.seed == 1729
    assert settings.max_degree == 1500
    assert settings.workers == 1
    assert settings.tolerances.quadrature == 1e-8
    assert settings.tolerances.node == 1e-12


def test_from_environment():
    settings = config.from_environment(
        {
            'DIRICHLET_CARLESON_SEED': '7',
            'DIRICHLET_CARLESON_WORKERS': '4',
            'DIRICHLET_CARLESON_TOL_QUADRATURE': '1e-10',
            'UNRELATED': 'x',
        }
    )
    assert settings.seed == 7
    assert settings.workers == 4
    assert settings.tolerances.quadrature == 1e-10
    assert settings.tolerances.root == config.Tolerances().root


@pytest.mark.parametrize(
    'environ',
    [
        pytest.param({'DIRICHLET_CARLESON_SEED': 'seven'}, id='seed'),
        pytest.param({'DIRICHLET_CARLESON_TOL_NODE': '-1'}, id='negative'),
        pytest.param({'DIRICHLET_CARLESON_TOL_ROOT': 'tiny'}, id='nan-text'),
    ],
)
def test_from_environment_rejects(environ):
    with pytest.raises(InputError):
        config.from_environment(environ)


def test_unknown_tolerance():
    with pytest.raises(InputError, match='unknown tolerance'):
        config.Tolerances().replace(precision=1e-3)


def test_override_restores():
    before = config.get_settings()
    with config.override(seed=3, tolerances={'kernel': 1e-6}) as inside:
        assert config.get_settings() is inside
        assert inside.seed == 3
        assert config.tolerance('kernel') == 1e-6
    assert config.get_settings() is before


def test_explicit_tolerance_wins():
    assert config.tolerance('quadrature', 1e-3) == 1e-3
    assert config.tolerance('quadrature') == (
        config.get_settings().tolerances.quadrature
    )
