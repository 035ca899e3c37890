"""JSON schemas for polynomials, boundary measures and planar measures.

Polynomial::

    [[re, im], [re, im], ...]          ascending degree

Boundary measure μ::

    {"atoms": [{"angle": 0.0, "mass": 1.0}, ...]}

Planar measure ν::

    {"family": "atoms", "atoms": [{"re": 0.5, "im": 0.0, "mass": 2.0}]}
    {"family": "radial_power", "alpha": 0.5, "theta": 0.0}
    {"family": "area", "scale": 1.0}

``radial_power`` and ``area`` also accept ``weights`` (a list of angles,
the density gains ∏ |z − λⱼ|²); ``radial_power`` accepts ``scale``.
Unknown keys are rejected.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Dict, FrozenSet, Union

import numpy as np

from .exceptions import SchemaError
from .hardy import BoundaryPoint, Poly
from .measures import (
    Area,
    AtomicBoundaryMeasure,
    Atoms,
    PlanarMeasure,
    RadialPower,
)

_MU_KEYS = frozenset({'atoms'})
_MU_ATOM_KEYS = frozenset({'angle', 'mass'})
_PLANAR_ATOM_KEYS = frozenset({'re', 'im', 'mass'})

_FAMILY_KEYS = {
    'atoms': (frozenset({'family', 'atoms'}), frozenset()),
    'radial_power': (
        frozenset({'family', 'alpha'}),
        frozenset({'theta', 'weights', 'scale'}),
    ),
    'area': (frozenset({'family'}), frozenset({'scale', 'weights'})),
}


def check_keys(
    obj: Any,
    required: FrozenSet[str],
    optional: FrozenSet[str] = frozenset(),
    where: str = 'document',
) -> Dict[str, Any]:
    """Validate the key set of a JSON object.

    Raises
    ------
    SchemaError
        if ``obj`` is not an object, misses a required key or has an
        unknown one.
    """
    if not isinstance(obj, dict):
        raise SchemaError(
            '{}: expected an object, got {}'.format(where, type(obj).__name__)
        )
    missing = required - obj.keys()
    if missing:
        raise SchemaError(
            '{}: missing key(s) {}'.format(where, ', '.join(sorted(missing)))
        )
    unknown = obj.keys() - required - optional
    if unknown:
        raise SchemaError(
            '{}: unknown key(s) {}'.format(where, ', '.join(sorted(unknown)))
        )
    return obj


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(
            '{}: expected a number, got {!r}'.format(where, value)
        )
    if not math.isfinite(value):
        raise SchemaError('{}: non-finite number {!r}'.format(where, value))
    return float(value)


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(
            '{}: expected an array, got {!r}'.format(where, value)
        )
    return value


def poly_to_json(p: Poly) -> list:
    return [[float(c.real), float(c.imag)] for c in p.coeffs]


def poly_from_json(obj: Any) -> Poly:
    """Parse ``[[re, im], ...]`` into a Poly."""
    coeffs = []
    for i, pair in enumerate(_list(obj, 'polynomial')):
        where = 'polynomial[{}]'.format(i)
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError('{}: expected [re, im]'.format(where))
        re_part, im_part = _number(pair[0], where), _number(pair[1], where)
        coeffs.append(complex(re_part, im_part))
    return Poly(coeffs)


def point_to_json(point: BoundaryPoint) -> float:
    return point.angle


def point_from_json(obj: Any, where: str = 'point') -> BoundaryPoint:
    return BoundaryPoint(_number(obj, where))


def mu_to_json(mu: AtomicBoundaryMeasure) -> Dict[str, Any]:
    return {
        'atoms': [
            {'angle': point.angle, 'mass': mass} for point, mass in mu.atoms
        ]
    }


def mu_from_json(obj: Any) -> AtomicBoundaryMeasure:
    """Parse ``{"atoms": [{"angle": …, "mass": …}, …]}``."""
    check_keys(obj, _MU_KEYS, where='mu')
    atoms = []
    for i, atom in enumerate(_list(obj['atoms'], 'mu.atoms')):
        where = 'mu.atoms[{}]'.format(i)
        check_keys(atom, _MU_ATOM_KEYS, where=where)
        atoms.append(
            (_number(atom['angle'], where), _number(atom['mass'], where))
        )
    return AtomicBoundaryMeasure(atoms)


def _weights_to_json(weights):
    return [w.angle for w in weights]


def _weights_from_json(obj, where):
    return [
        point_from_json(w, '{}.weights[{}]'.format(where, i))
        for i, w in enumerate(_list(obj, where + '.weights'))
    ]


def measure_to_json(nu: PlanarMeasure) -> Dict[str, Any]:
    if isinstance(nu, Atoms):
        return {
            'family': 'atoms',
            'atoms': [
                {'re': z.real, 'im': z.imag, 'mass': m} for z, m in nu.atoms
            ],
        }
    if isinstance(nu, RadialPower):
        out = {'family': 'radial_power', 'alpha': nu.alpha, 'theta': nu.theta}
        if nu.scale != 1.0:
            out['scale'] = nu.scale
    elif isinstance(nu, Area):
        out = {'family': 'area', 'scale': nu.scale}
    else:
        raise SchemaError('no schema for measure {!r}'.format(nu))
    if nu.weights:
        out['weights'] = _weights_to_json(nu.weights)
    return out


def measure_from_json(obj: Any) -> PlanarMeasure:
    """Parse a planar measure document (see the module docstring)."""
    if not isinstance(obj, dict) or 'family' not in obj:
        raise SchemaError('nu: expected an object with a "family" key')
    family = obj['family']
    if family not in _FAMILY_KEYS:
        raise SchemaError(
            'nu: unknown family {!r}, expected one of {}'.format(
                family, ', '.join(sorted(_FAMILY_KEYS))
            )
        )
    required, optional = _FAMILY_KEYS[family]
    check_keys(obj, required, optional, where='nu')
    weights = _weights_from_json(obj.get('weights', []), 'nu')
    if family == 'atoms':
        atoms = []
        for i, atom in enumerate(_list(obj['atoms'], 'nu.atoms')):
            where = 'nu.atoms[{}]'.format(i)
            check_keys(atom, _PLANAR_ATOM_KEYS, where=where)
            z = complex(_number(atom['re'], where), _number(atom['im'], where))
            atoms.append((z, _number(atom['mass'], where)))
        return Atoms(atoms)
    if family == 'radial_power':
        return RadialPower(
            _number(obj['alpha'], 'nu.alpha'),
            _number(obj.get('theta', 0.0), 'nu.theta'),
            weights,
            _number(obj.get('scale', 1.0), 'nu.scale'),
        )
    return Area(_number(obj.get('scale', 1.0), 'nu.scale'), weights)


def _default(obj):
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Poly):
        return poly_to_json(obj)
    if isinstance(obj, BoundaryPoint):
        return obj.angle
    raise TypeError('{!r} is not JSON serializable'.format(obj))


def dumps(obj: Any) -> str:
    """Serialize a report deterministically (sorted keys, full precision)."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)


def load_json(path: Union[str, Path]) -> Any:
    """Read a JSON document.

    Raises
    ------
    SchemaError
        if the file cannot be read or does not contain JSON.
    """
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise SchemaError('cannot read {}: {}'.format(path, e.strerror))
    except json.JSONDecodeError as e:
        raise SchemaError('{} is not valid JSON: {}'.format(path, e))
