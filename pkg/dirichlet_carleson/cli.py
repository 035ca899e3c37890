"""Command-line interface.

Usage::

    dirichlet-carleson norm --mu mu.json --f f.json
    dirichlet-carleson decompose --mu mu.json --f f.json --format json
    dirichlet-carleson gram --mu mu.json --degree 10 --format csv
    dirichlet-carleson kernel-eval --mu mu.json --w 0.5 --z 0.3+0.2j
    dirichlet-carleson carleson --nu nu.json [--mu mu.json]
    dirichlet-carleson rkt --nu nu.json [--mu mu.json]
    dirichlet-carleson compactness --nu nu.json --mu mu.json --zeta 3.14
    dirichlet-carleson alpha-carleson --nu nu.json --alpha 0.5
    dirichlet-carleson verify [--like PATTERN] [--tolerance-scale 0.01]
    dirichlet-carleson --job job.json

``--mu``, ``--f`` and ``--nu`` take a path to a JSON document or the
document itself. Exit codes: 0 success, 1 failing verify properties,
2 invalid input, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
import regex as re
from loguru import logger

from . import __version__, config
from .carleson import (
    BoxScanConfig,
    alpha_carleson_sup,
    compactness_profile,
    dmu_carleson_test,
    h2_box_sup,
    h2_rkt_sup,
    rkt_sup,
)
from .dirichlet import decompose, dirichlet_mu, dmu_norm_sq, gram_matrix
from .exceptions import InputError, NumericalError, SchemaError
from .hardy import TWO_PI, BoundaryPoint, h2_norm_sq
from .kernels import kernel_for
from .serialization import (
    check_keys,
    dumps,
    load_json,
    measure_from_json,
    mu_from_json,
    poly_from_json,
    poly_to_json,
)
from .verify import verify_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

COMMANDS = (
    'norm',
    'decompose',
    'gram',
    'kernel-eval',
    'carleson',
    'rkt',
    'compactness',
    'alpha-carleson',
    'verify',
)

#: keys of a --job document; list values repeat the flag
_JOB_REQUIRED = frozenset({'command'})
_JOB_OPTIONAL = frozenset(
    {
        'mu',
        'f',
        'nu',
        'format',
        'tol',
        'seed',
        'workers',
        'degree',
        'w',
        'z',
        'zeta',
        'alpha',
        'n_zeta',
        'k_max',
        'like',
        'tolerance_scale',
        'skip_slow',
    }
)

_TOL_OVERRIDE = re.compile(
    r'^\s*(?P<name>[A-Za-z_]+)\s*=\s*(?P<value>\S+)\s*$'
)


class Result:
    """A command's report: a JSON payload and its tabular form."""

    __slots__ = ('payload', 'frame', 'exit_code')

    def __init__(
        self,
        payload: Dict[str, Any],
        frame: Optional[pd.DataFrame] = None,
        exit_code: int = EXIT_OK,
    ):
        self.payload = payload
        self.frame = frame
        self.exit_code = exit_code


def _document(value: str, where: str) -> Any:
    """Parse inline JSON or read it from a file."""
    if value.lstrip()[:1] in ('{', '['):
        try:
            return json.loads(value)
        except json.JSONDecodeError as e:
            raise SchemaError('{}: invalid inline JSON: {}'.format(where, e))
    return load_json(value)


def _require(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise InputError('--{} is required for {}'.format(name, args.command))
    return value


def _mu(args, required: bool = True):
    if args.mu is None and not required:
        return None
    return mu_from_json(_document(_require(args, 'mu'), '--mu'))


def _poly(args):
    return poly_from_json(_document(_require(args, 'f'), '--f'))


def _nu(args):
    return measure_from_json(_document(_require(args, 'nu'), '--nu'))


def _complex(value: str) -> complex:
    try:
        return complex(value.replace(' ', ''))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected a complex number such as 0.5+0.2j, got {!r}'.format(
                value
            )
        )


def _tol_override(value: str) -> Tuple[str, float]:
    match = _TOL_OVERRIDE.match(value)
    if match is None:
        raise argparse.ArgumentTypeError(
            'expected NAME=VALUE, got {!r}'.format(value)
        )
    try:
        number = float(match.group('value'))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'tolerance {} needs a number, got {!r}'.format(
                match.group('name'), match.group('value')
            )
        )
    return match.group('name').lower(), number


def _scan_config(args) -> BoxScanConfig:
    overrides = {}
    if args.n_zeta is not None:
        overrides['n_zeta'] = args.n_zeta
    if args.k_max is not None:
        overrides['k_max'] = args.k_max
        overrides['rkt_k_max'] = min(args.k_max, BoxScanConfig.rkt_k_max)
    return BoxScanConfig(**overrides)


def _complex_json(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def cmd_norm(args) -> Result:
    """Hardy norm, Dirichlet integral and D(μ) norm of f."""
    mu, f = _mu(args), _poly(args)
    payload = {
        'h2_norm_sq': h2_norm_sq(f),
        'dirichlet_integral': dirichlet_mu(f, mu),
        'norm_sq': dmu_norm_sq(f, mu),
    }
    payload['norm'] = math.sqrt(payload['norm_sq'])
    return Result(payload, pd.DataFrame([payload]))


def cmd_decompose(args) -> Result:
    mu, f = _mu(args), _poly(args)
    d = decompose(f, mu)
    payload = {'p': poly_to_json(d.p), 'g': poly_to_json(d.g)}
    rows = [
        {'part': name, 'power': k, 're': c.real, 'im': c.imag}
        for name, poly in (('p', d.p), ('g', d.g))
        for k, c in enumerate(poly.coeffs)
    ]
    return Result(
        payload, pd.DataFrame(rows, columns=['part', 'power', 're', 'im'])
    )


def cmd_gram(args) -> Result:
    mu = _mu(args)
    gram = gram_matrix(mu, _require(args, 'degree'))
    matrix = gram.matrix
    rows = [
        {'m': m, 'k': k, 're': matrix[m, k].real, 'im': matrix[m, k].imag}
        for m in range(gram.size)
        for k in range(gram.size)
    ]
    payload = {
        'degree': gram.degree,
        'matrix': [[_complex_json(v) for v in row] for row in matrix],
    }
    return Result(payload, pd.DataFrame(rows))


def cmd_kernel_eval(args) -> Result:
    """Evaluate k_w(z), closed form for one atom, truncated otherwise."""
    mu = _mu(args)
    ws = _require(args, 'w')
    zs = args.z or []
    kernels = kernel_for(mu, ws, args.degree)
    rows, payload_kernels = [], []
    for w, kernel in zip(ws, kernels):
        values = [complex(kernel(z)) for z in zs]
        payload_kernels.append(
            {
                'w': _complex_json(w),
                'norm_sq': float(kernel.norm_sq),
                'values': [
                    {'z': _complex_json(z), 'value': _complex_json(v)}
                    for z, v in zip(zs, values)
                ],
            }
        )
        for z, v in zip(zs, values):
            rows.append(
                {
                    'w_re': w.real,
                    'w_im': w.imag,
                    'z_re': z.real,
                    'z_im': z.imag,
                    're': v.real,
                    'im': v.imag,
                    'norm_sq': float(kernel.norm_sq),
                }
            )
    degree = getattr(kernels[0], 'degree', None) if kernels else None
    payload = {'closed_form': mu.n == 1, 'degree': degree}
    payload['kernels'] = payload_kernels
    return Result(payload, pd.DataFrame(rows))


def _scan_result(report) -> Result:
    frame = report.to_frame()[['level', 'h', 'sup_ratio']]
    return Result(report.to_dict(), frame)


def cmd_carleson(args) -> Result:
    """Box test for D(μ), or for H² when no μ is given."""
    nu, mu, cfg = _nu(args), _mu(args, required=False), _scan_config(args)
    if mu is None:
        return _scan_result(h2_box_sup(nu, cfg))
    return _scan_result(dmu_carleson_test(nu, mu, cfg))


def cmd_alpha_carleson(args) -> Result:
    nu, alpha = _nu(args), _require(args, 'alpha')
    return _scan_result(alpha_carleson_sup(nu, alpha, _scan_config(args)))


def cmd_rkt(args) -> Result:
    nu, mu, cfg = _nu(args), _mu(args, required=False), _scan_config(args)
    if mu is None:
        report = h2_rkt_sup(nu, cfg)
    else:
        report = rkt_sup(nu, mu, N=args.degree, cfg=cfg)
    frame = pd.DataFrame(report.to_dict()['levels'])
    return Result(report.to_dict(), frame)


def _between_atoms(mu) -> List[BoundaryPoint]:
    angles = sorted(point.angle for point in mu.points)
    following = angles[1:] + [angles[0] + TWO_PI]
    return [BoundaryPoint((a + b) / 2) for a, b in zip(angles, following)]


def cmd_compactness(args) -> Result:
    """Kernel ratios along radii; defaults to the midpoints between atoms."""
    nu, mu = _nu(args), _mu(args)
    k_max = args.k_max or 14
    hs = [2.0**-k for k in range(1, k_max + 1)]
    directions = (
        [BoundaryPoint(a) for a in args.zeta]
        if args.zeta
        else _between_atoms(mu)
    )
    rows, profiles = [], []
    for zeta in directions:
        profile = compactness_profile(nu, mu, zeta, hs)
        levels = [
            {'level': k, 'h': h, 'ratio': float(ratio)}
            for k, (h, ratio) in enumerate(zip(hs, profile), 1)
        ]
        profiles.append(
            {
                'zeta': zeta.angle,
                'decay': float(profile[-1] / profile[0]),
                'levels': levels,
            }
        )
        rows.extend(dict(level, zeta=zeta.angle) for level in levels)
    return Result({'profiles': profiles}, pd.DataFrame(rows))


def cmd_verify(args) -> Result:
    report = verify_suite(
        seed=args.seed,
        like=args.like,
        tolerance_scale=args.tolerance_scale,
        include_slow=not args.skip_slow,
    )
    return Result(
        report.to_dict(),
        report.to_frame(),
        EXIT_OK if report.passed else EXIT_FAILED,
    )


_HANDLERS = {
    'norm': cmd_norm,
    'decompose': cmd_decompose,
    'gram': cmd_gram,
    'kernel-eval': cmd_kernel_eval,
    'carleson': cmd_carleson,
    'rkt': cmd_rkt,
    'compactness': cmd_compactness,
    'alpha-carleson': cmd_alpha_carleson,
    'verify': cmd_verify,
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format',
        choices=('json', 'csv', 'text'),
        default='text',
        help='report format (text rounds to 6 significant digits)',
    )
    common.add_argument(
        '--tol',
        action='append',
        type=_tol_override,
        default=[],
        metavar='NAME=VALUE',
        help='tolerance override, one of {}'.format(
            ', '.join(config.Tolerances.names())
        ),
    )
    common.add_argument('--seed', type=int, default=None)
    common.add_argument(
        '--workers',
        type=int,
        default=None,
        help='threads for box scans (1 runs serially)',
    )
    common.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='log to standard error (-v info, -vv debug)',
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='dirichlet-carleson',
        description='Dirichlet-type spaces with finitely atomic measures.',
    )
    parser.add_argument(
        '--version', action='version', version='%(prog)s ' + __version__
    )
    parser.add_argument(
        '--job', metavar='FILE', help='run the JSON job description FILE'
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    helps = {
        'norm': 'H² norm, Dirichlet integral and D(μ) norm of f',
        'decompose': 'split f = p + ∏(z − λⱼ)·g',
        'gram': 'monomial Gram matrix of D(μ)',
        'kernel-eval': 'evaluate reproducing kernels k_w(z)',
        'carleson': 'box test for D(μ) (for H² without --mu)',
        'rkt': 'reproducing kernel test (for H² without --mu)',
        'compactness': 'kernel ratios along radii away from the atoms',
        'alpha-carleson': 'box test ν(S)/h^α for weighted Dirichlet spaces',
        'verify': 'run the invariant suite',
    }
    for name in COMMANDS:
        cmd = sub.add_parser(name, parents=[common], help=helps[name])
        if name != 'verify':
            cmd.add_argument('--mu', metavar='JSON')
        if name in ('norm', 'decompose'):
            cmd.add_argument('--f', metavar='JSON')
        if name in ('carleson', 'rkt', 'compactness', 'alpha-carleson'):
            cmd.add_argument('--nu', metavar='JSON')
            cmd.add_argument('--k-max', type=int, default=None)
        if name in ('carleson', 'rkt', 'alpha-carleson'):
            cmd.add_argument('--n-zeta', type=int, default=None)
        if name in ('gram', 'kernel-eval', 'rkt'):
            cmd.add_argument('--degree', type=int, default=None)
        if name == 'kernel-eval':
            cmd.add_argument('--w', action='append', type=_complex)
            cmd.add_argument('--z', action='append', type=_complex)
        if name == 'compactness':
            cmd.add_argument(
                '--zeta', action='append', type=float, metavar='ANGLE'
            )
        if name == 'alpha-carleson':
            cmd.add_argument('--alpha', type=float)
        if name == 'verify':
            cmd.add_argument('--like', metavar='PATTERN')
            cmd.add_argument('--tolerance-scale', type=float, default=1.0)
            cmd.add_argument('--skip-slow', action='store_true')
    return parser


def _flag(key: str) -> str:
    return '--' + key.replace('_', '-')


def job_argv(job: Any) -> List[str]:
    """Translate a JSON job description into command-line arguments.

    Raises
    ------
    SchemaError
        on unknown keys or an unknown command.
    """
    check_keys(job, _JOB_REQUIRED, _JOB_OPTIONAL, where='job')
    if job['command'] not in COMMANDS:
        raise SchemaError(
            'job: unknown command {!r}, expected one of {}'.format(
                job['command'], ', '.join(COMMANDS)
            )
        )
    argv = [job['command']]
    for key in sorted(job.keys() - _JOB_REQUIRED):
        value = job[key]
        if key == 'tol':
            if not isinstance(value, dict):
                raise SchemaError('job.tol: expected an object of tolerances')
            for name in sorted(value):
                argv += ['--tol', '{}={!r}'.format(name, value[name])]
        elif key in ('mu', 'f', 'nu') and not isinstance(value, str):
            argv += [_flag(key), json.dumps(value)]
        elif isinstance(value, bool):
            if value:
                argv.append(_flag(key))
        elif isinstance(value, list):
            for item in value:
                argv += [_flag(key), str(item)]
        else:
            argv += [_flag(key), str(value)]
    return argv


def _text(result: Result) -> str:
    lines = []
    for key, value in result.payload.items():
        if isinstance(value, float):
            lines.append('{}: {:.6g}'.format(key, value))
        elif isinstance(value, (bool, int, str)) or value is None:
            lines.append('{}: {}'.format(key, value))
    nested = any(
        isinstance(value, (list, dict)) for value in result.payload.values()
    )
    if nested and result.frame is not None and not result.frame.empty:
        lines.append(
            result.frame.to_string(
                index=False, float_format=lambda x: '{:.6g}'.format(x)
            )
        )
    return '\n'.join(lines)


def emit(result: Result, fmt: str, out=None) -> None:
    out = sys.stdout if out is None else out
    if fmt == 'json':
        out.write(dumps(result.payload) + '\n')
    elif fmt == 'csv':
        frame = result.frame if result.frame is not None else pd.DataFrame()
        out.write(frame.to_csv(index=False))
    else:
        out.write(_text(result) + '\n')


def _configure_logging(verbosity: int) -> Optional[int]:
    if verbosity <= 0:
        return None
    logger.remove()
    logger.enable('dirichlet_carleson')
    return logger.add(
        sys.stderr,
        level='DEBUG' if verbosity > 1 else 'INFO',
        format='{time:HH:mm:ss} | {level: <8} | {name}: {message}',
    )


def _parse(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.job is not None:
        if args.command is not None:
            parser.error('--job cannot be combined with a command')
        args = parser.parse_args(job_argv(load_json(args.job)))
    if args.command is None:
        parser.error('a command or --job is required')
    return args


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line ``argv`` and return the exit code."""
    try:
        args = _parse(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    except InputError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_INPUT
    handler = _configure_logging(args.verbose)
    try:
        overrides = {'tolerances': dict(args.tol)}
        if args.seed is not None:
            overrides['seed'] = args.seed
        if args.workers is not None:
            overrides['workers'] = args.workers
        with config.override(**overrides):
            result = _HANDLERS[args.command](args)
        emit(result, args.format)
        return result.exit_code
    except InputError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as e:
        print('numerical error: {}'.format(e), file=sys.stderr)
        return EXIT_NUMERICAL
    finally:
        if handler is not None:
            logger.remove(handler)
            logger.disable('dirichlet_carleson')


def main():
    sys.exit(run())
