import json
import math

import pytest

from dirichlet_carleson import cli, config
from dirichlet_carleson.exceptions import QuadratureNotConverged, SchemaError
from dirichlet_carleson.verify import PropertyResult, VerifyReport

DELTA_ONE = '{"atoms": [{"angle": 0, "mass": 1}]}'
TWO_ATOMS = (
    '{"atoms": [{"angle": 0, "mass": 1}, {"angle": 3.14159, "mass": 0.5}]}'
)
RAY = '{"family": "radial_power", "alpha": 0.5}'
AREA = '{"family": "area"}'
Z = '[[0, 0], [1, 0]]'


def run_json(capsys, argv):
    code = cli.run(argv + ['--format', 'json'])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_norm_example(capsys):
    code, payload = run_json(capsys, ['norm', '--mu', DELTA_ONE, '--f', Z])
    assert code == cli.EXIT_OK
    assert payload['norm_sq'] == pytest.approx(2.0)
    assert payload['h2_norm_sq'] == pytest.approx(1.0)
    assert payload['dirichlet_integral'] == pytest.approx(1.0)
    assert payload['norm'] == pytest.approx(math.sqrt(2.0))


def test_norm_from_files(capsys, tmp_path):
    mu_path, f_path = tmp_path / 'mu.json', tmp_path / 'f.json'
    mu_path.write_text(DELTA_ONE, encoding='utf-8')
    f_path.write_text('[[0, 0], [0.3333333333333333, 0]]', encoding='utf-8')
    code = cli.run(['norm', '--mu', str(mu_path), '--f', str(f_path)])
    assert code == cli.EXIT_OK
    assert 'norm_sq: 0.222222' in capsys.readouterr().out.splitlines()


def test_decompose_example(capsys):
    code, payload = run_json(
        capsys,
        ['decompose', '--mu', DELTA_ONE, '--f', '[[0,0],[0,0],[0,0],[1,0]]'],
    )
    assert code == cli.EXIT_OK
    assert payload['p'] == [pytest.approx([1.0, 0.0])]
    assert payload['g'] == [pytest.approx([1.0, 0.0])] * 3


def test_gram_csv(capsys):
    code = cli.run(
        ['gram', '--mu', TWO_ATOMS, '--degree', '2', '--format', 'csv']
    )
    lines = capsys.readouterr().out.splitlines()
    assert code == cli.EXIT_OK
    assert lines[0] == 'm,k,re,im'
    assert len(lines) == 1 + 9


def test_kernel_eval(capsys):
    code, payload = run_json(
        capsys,
        ['kernel-eval', '--mu', DELTA_ONE, '--w', '0.5', '--z', '0.5'],
    )
    assert code == cli.EXIT_OK
    assert payload['closed_form'] is True
    assert payload['degree'] is None
    (kernel,) = payload['kernels']
    value = kernel['values'][0]['value']
    assert value[0] == pytest.approx(kernel['norm_sq'])
    assert value[1] == pytest.approx(0.0, abs=1e-15)


def test_kernel_eval_truncated(capsys):
    code, payload = run_json(
        capsys,
        [
            'kernel-eval',
            '--mu',
            TWO_ATOMS,
            '--w',
            '0.2+0.1j',
            '--w',
            '0.1-0.3j',
            '--degree',
            '30',
        ],
    )
    assert code == cli.EXIT_OK
    assert payload['closed_form'] is False
    assert payload['degree'] == 30
    assert len(payload['kernels']) == 2


def test_carleson_csv(capsys):
    code = cli.run(
        [
            'carleson',
            '--nu',
            RAY,
            '--mu',
            DELTA_ONE,
            '--n-zeta',
            '8',
            '--k-max',
            '10',
            '--format',
            'csv',
        ]
    )
    lines = capsys.readouterr().out.splitlines()
    assert code == cli.EXIT_OK
    assert lines[0] == 'level,h,sup_ratio'
    assert len(lines) == 11


def test_carleson_h2_verdict(capsys):
    code, payload = run_json(capsys, ['carleson', '--nu', RAY])
    assert code == cli.EXIT_OK
    assert payload['verdict'] == 'Diverging'


def test_carleson_output_is_deterministic(capsys):
    argv = ['carleson', '--nu', AREA, '--mu', TWO_ATOMS, '--k-max', '8']
    cli.run(argv + ['--format', 'json'])
    first = capsys.readouterr().out
    cli.run(argv + ['--format', 'json'])
    assert capsys.readouterr().out == first


def test_carleson_text(capsys):
    code = cli.run(['carleson', '--nu', AREA, '--k-max', '6'])
    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    assert 'verdict: Bounded' in out
    assert 'sup_ratio' in out.splitlines()[-7]


def test_alpha_carleson(capsys):
    code, payload = run_json(
        capsys, ['alpha-carleson', '--nu', RAY, '--alpha', '0.5']
    )
    assert code == cli.EXIT_OK
    assert payload['normalization'] == 'h^0.5'
    assert payload['verdict'] == 'Bounded'


def test_rkt(capsys):
    code, payload = run_json(
        capsys, ['rkt', '--nu', AREA, '--n-zeta', '8', '--k-max', '6']
    )
    assert code == cli.EXIT_OK
    assert [row['level'] for row in payload['levels']] == list(range(1, 7))
    assert payload['degree'] is None


def test_compactness_defaults_between_atoms(capsys):
    code, payload = run_json(
        capsys,
        ['compactness', '--nu', AREA, '--mu', DELTA_ONE, '--k-max', '6'],
    )
    assert code == cli.EXIT_OK
    (profile,) = payload['profiles']
    assert profile['zeta'] == pytest.approx(math.pi)
    assert len(profile['levels']) == 6
    assert profile['decay'] < 1


def test_verify(capsys):
    code, payload = run_json(capsys, ['verify', '--like', 'hardy-core'])
    assert code == cli.EXIT_OK
    assert payload['passed'] is True
    assert len(payload['properties']) == 4


def test_verify_tolerance_scale(capsys, mocker):
    spy = mocker.spy(cli, 'verify_suite')
    code, payload = run_json(
        capsys, ['verify', '--like', 'a0_root', '--tolerance-scale', '0.5']
    )
    assert code == cli.EXIT_OK
    assert payload['tolerance_scale'] == 0.5
    assert spy.call_args.kwargs['tolerance_scale'] == 0.5


def test_verify_failure_exit_code(capsys, mocker):
    report = VerifyReport(
        seed=1,
        tolerance_scale=1.0,
        results=(PropertyResult('broken', 'testing', False, 1.0, 'bad'),),
    )
    mocker.patch.object(cli, 'verify_suite', return_value=report)
    code, payload = run_json(capsys, ['verify'])
    assert code == cli.EXIT_FAILED
    assert payload['passed'] is False


@pytest.mark.parametrize(
    'argv',
    [
        pytest.param([], id='no-command'),
        pytest.param(['norm', '--f', Z], id='missing-mu'),
        pytest.param(
            ['norm', '--mu', '{"atoms": []', '--f', Z], id='bad-inline'
        ),
        pytest.param(
            ['norm', '--mu', 'missing.json', '--f', Z], id='missing-file'
        ),
        pytest.param(
            ['norm', '--mu', '{"atoms": [], "x": 1}', '--f', Z],
            id='unknown-key',
        ),
        pytest.param(
            ['norm', '--mu', DELTA_ONE, '--f', Z, '--tol', 'quadrature'],
            id='tol-format',
        ),
        pytest.param(
            ['norm', '--mu', DELTA_ONE, '--f', Z, '--tol', 'speed=1'],
            id='tol-name',
        ),
        pytest.param(
            ['kernel-eval', '--mu', DELTA_ONE, '--w', 'half'], id='complex'
        ),
        pytest.param(['kernel-eval', '--mu', DELTA_ONE], id='missing-w'),
        pytest.param(
            ['kernel-eval', '--mu', DELTA_ONE, '--w', '1.5'], id='outside'
        ),
        pytest.param(['alpha-carleson', '--nu', RAY], id='missing-alpha'),
        pytest.param(
            ['compactness', '--nu', AREA, '--mu', DELTA_ONE, '--zeta', '0'],
            id='atom-direction',
        ),
        pytest.param(['verify', '--like', '('], id='pattern'),
    ],
)
def test_input_errors(capsys, argv):
    assert cli.run(argv) == cli.EXIT_INPUT
    assert capsys.readouterr().err


def test_numerical_error(capsys, mocker):
    mocker.patch.object(
        cli,
        'dmu_norm_sq',
        side_effect=QuadratureNotConverged(1.0, 1e-3, 1e-8, where='test'),
    )
    assert cli.run(['norm', '--mu', DELTA_ONE, '--f', Z]) == (
        cli.EXIT_NUMERICAL
    )
    assert 'did not converge' in capsys.readouterr().err


def test_version(capsys):
    assert cli.run(['--version']) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith('dirichlet-carleson')


def test_tolerance_override_applies(capsys, mocker):
    seen = {}

    def spy(f, mu):
        seen['settings'] = config.get_settings()
        return 2.0

    mocker.patch.object(cli, 'dmu_norm_sq', side_effect=spy)
    argv = ['norm', '--mu', DELTA_ONE, '--f', Z, '--seed', '5']
    assert cli.run(argv + ['--tol', 'quadrature=1e-6']) == cli.EXIT_OK
    assert seen['settings'].tolerances.quadrature == 1e-6
    assert seen['settings'].seed == 5


def test_workers_override_applies(capsys, mocker):
    seen = {}

    def spy(f, mu):
        seen['workers'] = config.get_settings().workers
        return 2.0

    mocker.patch.object(cli, 'dmu_norm_sq', side_effect=spy)
    argv = ['norm', '--mu', DELTA_ONE, '--f', Z, '--workers', '3']
    assert cli.run(argv) == cli.EXIT_OK
    assert seen['workers'] == 3
    assert cli.job_argv({'command': 'norm', 'workers': 2})[-2:] == [
        '--workers',
        '2',
    ]


def test_job_argv():
    job = {
        'command': 'kernel-eval',
        'mu': {'atoms': [{'angle': 0, 'mass': 1}]},
        'w': ['0.5', '0.1j'],
        'tol': {'kernel': 1e-8},
        'format': 'json',
    }
    assert cli.job_argv(job) == [
        'kernel-eval',
        '--format',
        'json',
        '--mu',
        '{"atoms": [{"angle": 0, "mass": 1}]}',
        '--tol',
        'kernel=1e-08',
        '--w',
        '0.5',
        '--w',
        '0.1j',
    ]
    assert cli.job_argv({'command': 'verify', 'skip_slow': True}) == [
        'verify',
        '--skip-slow',
    ]


@pytest.mark.parametrize(
    'job',
    [
        pytest.param({'mu': 'x'}, id='no-command'),
        pytest.param({'command': 'plot'}, id='unknown-command'),
        pytest.param({'command': 'norm', 'speed': 1}, id='unknown-key'),
        pytest.param({'command': 'norm', 'tol': 1e-3}, id='tol-not-object'),
    ],
)
def test_job_argv_rejects(job):
    with pytest.raises(SchemaError):
        cli.job_argv(job)


def test_job_file(capsys, tmp_path):
    job = {
        'command': 'norm',
        'mu': json.loads(DELTA_ONE),
        'f': json.loads(Z),
        'format': 'json',
    }
    path = tmp_path / 'job.json'
    path.write_text(json.dumps(job), encoding='utf-8')
    assert cli.run(['--job', str(path)]) == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['norm_sq'] == pytest.approx(2.0)
    assert cli.run(['--job', str(path), 'verify']) == cli.EXIT_INPUT
    assert cli.run(['--job', str(tmp_path / 'none.json')]) == cli.EXIT_INPUT


def test_verbose_logs_to_stderr(capsys):
    code = cli.run(['verify', '--like', 'a0_root', '-v'])
    captured = capsys.readouterr()
    assert code == cli.EXIT_OK
    assert '1 properties, 0 failing' in captured.err
