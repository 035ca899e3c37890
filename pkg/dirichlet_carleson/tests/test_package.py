import pytest

import dirichlet_carleson


def test_versioning():
    if not dirichlet_carleson.__version__:
        pytest.skip('package metadata is not installed')
    assert dirichlet_carleson.__version__ not in (None, "0.0.0")


def test_public_names_resolve():
    for name in dirichlet_carleson.__all__:
        assert hasattr(dirichlet_carleson, name), name
