import csv
import json

import pytest

from qfound.main import run


def read_csv(path):
    with open(path, newline='', encoding='utf-8') as f:
        return list(csv.DictReader(f))


def test_spectrum_writes_levels(tmp_path):
    out = tmp_path / 'levels.csv'
    assert run(['spectrum', '--potential', 'harmonic', '--range', '0:3', '--count', '3', '--out', str(out)]) == 0
    rows = read_csv(out)
    assert list(rows[0]) == ['n', 'energy', 'nodes']
    assert [int(row['nodes']) for row in rows] == [0, 1, 2]
    assert [float(row['energy']) for row in rows] == pytest.approx([0.5, 1.5, 2.5], abs=1e-6)


def test_spectrum_as_json(tmp_path):
    out = tmp_path / 'levels.json'
    code = run(['spectrum', '--potential', 'well:L=1', '--range', '0:25', '--format', 'json', '--out', str(out)])
    assert code == 0
    levels = json.loads(out.read_text())
    assert [level['n'] for level in levels] == [0, 1]
    assert levels[1]['energy'] == pytest.approx(2 * 3.141592653589793**2, rel=1e-6)


def test_spectrum_without_levels_exits_with_2(tmp_path):
    assert run(['spectrum', '--potential', 'free', '--range', '0:10', '--out', str(tmp_path / 'x.csv')]) == 2


@pytest.mark.parametrize('argv', [
    [],
    ['spectrum', '--potential', 'harmonic'],
    ['spectrum', '--potential', 'bogus', '--range', '0:1'],
    ['spectrum', '--potential', 'harmonic', '--range', '3'],
    ['spectrum', '--potential', 'harmonic', '--range', '6:0'],
    ['trajectory', '--potential', 'free', '--energy', '0.5', '--de', '0'],
    ['spectrum', '--potential', 'harmonic', '--range', '0:1', '--grid', '1:2'],
    ['spectrum', '--potential', 'harmonic', '--range', '0:1', '--tol-override', 'nonsense=1'],
    ['audit', 'everything'],
])
def test_invalid_input_exits_with_1(argv):
    assert run(argv) == 1


def test_help_exits_cleanly():
    assert run(['--help']) == 0


def test_trajectory_rows(tmp_path):
    out = tmp_path / 'path.json'
    code = run(['trajectory', '--potential', 'harmonic', '--energy', '0.5', '--grid=-4:4:1601',
                '--format', 'json', '--out', str(out)])
    assert code == 0
    samples = json.loads(out.read_text())
    assert len(samples) == 1601 - 2 * 81
    assert set(samples[0]) == {'t', 'q', 'p'}
    assert samples[0]['t'] == 0.0
    assert all(b['t'] > a['t'] for a, b in zip(samples, samples[1:]))


def test_action_table(tmp_path):
    out = tmp_path / 'action.csv'
    assert run(['action', '--potential', 'free', '--energy', '0.5', '--grid=-5:5:1001', '--out', str(out)]) == 0
    rows = read_csv(out)
    assert list(rows[0]) == ['q', 'S0', 'p', 'Q', 'residual']
    assert all(float(row['p']) == pytest.approx(1.0, rel=1e-6) for row in rows)


def test_audit_reports_the_real_qubit_pair(tmp_path):
    out = tmp_path / 'audit.json'
    assert run(['audit', 'counting', '--out', str(out)]) == 0
    report = json.loads(out.read_text())
    assert report['passed'] is True
    assert report['suites']['counting']['data']['real_qubit_pair'] == {'K_joint': 10, 'K_product': 9,
                                                                       'violates': True}


def test_audit_failure_exits_with_3(tmp_path):
    out = tmp_path / 'audit.json'
    assert run(['audit', 'schwarzian', '--tol-override', 'schwarzian_fd=1e-12', '--out', str(out)]) == 3
    report = json.loads(out.read_text())
    assert report['passed'] is False
    assert report['suites']['schwarzian']['checks']['moebius_fd']['passed'] is False
    assert report['suites']['schwarzian']['checks']['moebius_analytic']['passed'] is True


def test_spectrum_defaults_to_csv(tmp_path):
    out = tmp_path / 'levels.csv'
    assert run(['spectrum', '--potential', 'harmonic', '--range', '0:6', '--out', str(out)]) == 0
    assert out.read_text().splitlines()[0] == 'n,energy,nodes'
    rows = read_csv(out)
    assert [float(row['energy']) for row in rows] == pytest.approx([0.5, 1.5, 2.5, 3.5, 4.5, 5.5], abs=1e-6)


@pytest.mark.parametrize('potential,energy,allowed', [('harmonic', '0.5', (-1.0, 1.0)), ('linear:a=1', '2', (1.3, 1.9))])
def test_trajectory_on_the_default_grid(tmp_path, potential, energy, allowed):
    out = tmp_path / 'path.csv'
    assert run(['trajectory', '--potential', potential, '--energy', energy, '--out', str(out)]) == 0
    rows = read_csv(out)
    t = [float(row['t']) for row in rows]
    q = [float(row['q']) for row in rows]
    assert t[0] == 0.0
    assert all(b > a for a, b in zip(t, t[1:]))
    assert q[0] <= allowed[0] and q[-1] >= allowed[1]


@pytest.mark.parametrize('suite', ['tomography', 'all'])
def test_audit_suites_pass(tmp_path, suite):
    out = tmp_path / 'audit.json'
    assert run(['audit', suite, '--out', str(out)]) == 0
    report = json.loads(out.read_text())
    assert report['passed'] is True
    assert all(check['passed'] for result in report['suites'].values() for check in result['checks'].values())
    if suite == 'tomography':
        errors = report['suites']['tomography']['data']['round_trip_errors']
        assert len(errors) >= 100 and max(errors) < 1e-10
