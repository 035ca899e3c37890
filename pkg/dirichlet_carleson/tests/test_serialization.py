import json
import math

import numpy as np
import pytest

from dirichlet_carleson.exceptions import (
    DuplicateNodes,
    NonPositiveAlpha,
    SchemaError,
)
from dirichlet_carleson.hardy import BoundaryPoint, Poly
from dirichlet_carleson.measures import Area, Atoms, RadialPower
from dirichlet_carleson.serialization import (
    check_keys,
    dumps,
    load_json,
    measure_from_json,
    measure_to_json,
    mu_from_json,
    mu_to_json,
    poly_from_json,
    poly_to_json,
)


def test_mu_from_json(two_atoms):
    doc = {
        'atoms': [
            {'angle': 0, 'mass': 1},
            {'angle': math.pi, 'mass': 0.5},
        ]
    }
    assert mu_from_json(doc) == two_atoms
    assert mu_from_json(mu_to_json(two_atoms)) == two_atoms


@pytest.mark.parametrize(
    ('doc', 'error'),
    [
        pytest.param([], SchemaError, id='not-object'),
        pytest.param({}, SchemaError, id='missing-atoms'),
        pytest.param(
            {'atoms': [], 'extra': 1}, SchemaError, id='unknown-key'
        ),
        pytest.param({'atoms': {}}, SchemaError, id='atoms-object'),
        pytest.param(
            {'atoms': [{'angle': 0}]}, SchemaError, id='missing-mass'
        ),
        pytest.param(
            {'atoms': [{'angle': '0', 'mass': 1}]},
            SchemaError,
            id='string-angle',
        ),
        pytest.param(
            {'atoms': [{'angle': 0, 'mass': True}]},
            SchemaError,
            id='bool-mass',
        ),
        pytest.param(
            {'atoms': [{'angle': 0, 'mass': math.nan}]},
            SchemaError,
            id='nan-mass',
        ),
        pytest.param(
            {'atoms': [{'angle': 0, 'mass': 0}]},
            NonPositiveAlpha,
            id='zero-mass',
        ),
        pytest.param(
            {'atoms': [{'angle': 0, 'mass': 1}, {'angle': 0, 'mass': 2}]},
            DuplicateNodes,
            id='duplicate',
        ),
    ],
)
def test_mu_from_json_rejects(doc, error):
    with pytest.raises(error):
        mu_from_json(doc)


def test_poly_json():
    p = Poly([1, 2j, -0.5])
    assert poly_to_json(p) == [[1.0, 0.0], [0.0, 2.0], [-0.5, 0.0]]
    assert poly_from_json(poly_to_json(p)) == p
    assert poly_from_json([]).is_zero()


@pytest.mark.parametrize(
    'doc',
    [
        pytest.param({'re': 1}, id='object'),
        pytest.param([[1.0]], id='short-pair'),
        pytest.param([1.0, 0.0], id='flat'),
        pytest.param([[1.0, 'x']], id='string'),
    ],
)
def test_poly_from_json_rejects(doc):
    with pytest.raises(SchemaError):
        poly_from_json(doc)


@pytest.mark.parametrize(
    'nu',
    [
        pytest.param(Atoms([(0.5 + 0.1j, 2.0), (-0.3j, 1.0)]), id='atoms'),
        pytest.param(RadialPower(0.5), id='ray'),
        pytest.param(
            RadialPower(0.25, 1.0, [0.0, 2.0], 3.0), id='weighted-ray'
        ),
        pytest.param(Area(), id='area'),
        pytest.param(Area(0.5, [math.pi]), id='weighted-area'),
    ],
)
def test_measure_json(nu):
    doc = measure_to_json(nu)
    assert measure_from_json(json.loads(json.dumps(doc))) == nu


def test_measure_from_json_defaults():
    nu = measure_from_json({'family': 'radial_power', 'alpha': 0.5})
    assert nu == RadialPower(0.5, 0.0)
    assert measure_from_json({'family': 'area'}) == Area(1.0)


@pytest.mark.parametrize(
    'doc',
    [
        pytest.param({'alpha': 0.5}, id='no-family'),
        pytest.param({'family': 'disk'}, id='unknown-family'),
        pytest.param({'family': 'area', 'alpha': 1}, id='foreign-key'),
        pytest.param({'family': 'radial_power'}, id='missing-alpha'),
        pytest.param(
            {'family': 'atoms', 'atoms': [{'re': 0.1, 'mass': 1}]},
            id='missing-im',
        ),
        pytest.param(
            {'family': 'area', 'weights': 0.0}, id='weights-not-array'
        ),
    ],
)
def test_measure_from_json_rejects(doc):
    with pytest.raises(SchemaError):
        measure_from_json(doc)


def test_check_keys():
    obj = {'a': 1, 'b': 2}
    assert check_keys(obj, frozenset('a'), frozenset('b')) is obj
    with pytest.raises(SchemaError, match='job: unknown key'):
        check_keys(obj, frozenset('a'), where='job')


def test_dumps_is_deterministic():
    report = {
        'b': np.float64(0.1),
        'a': [np.int64(3), 1 + 2j, np.bool_(True)],
        'c': {'point': BoundaryPoint(1.0), 'poly': Poly([1j])},
        'd': np.array([1.0, 2.0]),
    }
    text = dumps(report)
    assert text == dumps(dict(reversed(list(report.items()))))
    assert list(json.loads(text)) == ['a', 'b', 'c', 'd']
    assert json.loads(text)['a'] == [3, [1.0, 2.0], True]
    assert json.loads(text)['c'] == {'point': 1.0, 'poly': [[0.0, 1.0]]}
    with pytest.raises(TypeError):
        dumps({'x': object()})


def test_load_json(tmp_path):
    path = tmp_path / 'mu.json'
    path.write_text('{"atoms": [{"angle": 0, "mass": 1}]}', encoding='utf-8')
    assert load_json(path) == {'atoms': [{'angle': 0, 'mass': 1}]}
    broken = tmp_path / 'broken.json'
    broken.write_text('{"atoms": ', encoding='utf-8')
    with pytest.raises(SchemaError, match='not valid JSON'):
        load_json(broken)
    with pytest.raises(SchemaError, match='cannot read'):
        load_json(tmp_path / 'missing.json')
