import json
import os
from unittest.mock import patch

import pytest

from temporank import constants, methods
from tests.test_utils import data_path, run_cli

EXAMPLE = data_path('example4.csv')

@pytest.fixture(autouse=True)
def workspace(tmp_path, monkeypatch):
    """Each test runs in a fresh directory with its own global config"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(constants.output_dir_env, raising=False)
    with patch('temporank.config.globalconfigfile', str(tmp_path / 'globalconfig')):
        yield tmp_path

def write_file(path, text):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    return str(path)

def csv_rows(text):
    return [line.split(',') for line in text.strip().split('\n')]

def test_rate_temporal_golden():
    status, out, err = run_cli(['rate', '-i', EXAMPLE, '-m', 'tmassey'])
    assert status == 0, err
    with open(data_path('example4_tmassey.csv')) as golden:
        assert out == golden.read()

def test_rate_static():
    status, out, _ = run_cli(['rate', '-i', EXAMPLE, '-m', 'massey'])
    assert status == 0
    assert out == 'team,rating\nA,1.250000\nC,0.000000\nB,0.000000\nD,-1.250000\n'

def test_rate_json():
    status, out, _ = run_cli(['rate', '-i', EXAMPLE, '-m', 'tmassey', '--format', 'json'])
    assert status == 0
    document = json.loads(out)
    assert document['method'] == 'tmassey'
    assert document['upto'] == 3
    assert document['games']['D'] == [0, 1, 2, 3]
    assert document['ratings']['A'][:3] == [0.0, 1.0, 1.5]
    assert abs(document['ratings']['A'][3] - 4 / 3) < 1e-12

def test_rate_upto_and_constants():
    status, out, _ = run_cli(['rate', '-i', EXAMPLE, '-m', 'cmassey', '--alpha', '0.5', '--upto', '1'])
    assert status == 0
    assert csv_rows(out)[1:] == [['A', '1', '0.500000', '1'], ['C', '1', '-0.500000', '1'],
                                 ['B', '1', '0.500000', '1'], ['D', '1', '-0.500000', '1']]

def test_simulate_then_rate_is_deterministic():
    status, season, _ = run_cli(['simulate', '--teams', '6', '--seed', '3', '--noise', '2'])
    assert status == 0
    assert season.startswith(','.join(constants.MATCH_HEADER) + '\n')
    assert len(season.strip().split('\n')) == 31
    first = run_cli(['rate', '-i', '-', '-m', 'tmassey'], stdin=season)
    second = run_cli(['rate', '-i', '-', '-m', 'tmassey'], stdin=season)
    assert first[0] == 0
    assert first == second

def test_simulate_dates(workspace):
    status, _, _ = run_cli(['simulate', '--teams', '4', '--single', '--start-date', '2015-08-22',
                            '-o', 'season.csv'])
    assert status == 0
    with open(workspace / 'season.csv') as f:
        rows = csv_rows(f.read())
    assert {row[1] for row in rows[1:]} == {'2015-08-22', '2015-08-29', '2015-09-05'}

def test_output_dir_from_environment(workspace, monkeypatch):
    monkeypatch.setenv(constants.output_dir_env, str(workspace / 'out'))
    status, out, _ = run_cli(['standings', '-i', EXAMPLE, '-o', 'table.csv'])
    assert status == 0 and out == ''
    assert os.path.exists(workspace / 'out' / 'table.csv')

def test_parse_error(workspace):
    path = write_file(workspace / 'bad.csv', 'round,home,away\n1,A,B\n')
    status, out, err = run_cli(['rate', '-i', path, '-m', 'tmassey'])
    assert status == constants.EXIT_PARSE
    assert err.startswith('temporank: error: row 1')

def test_data_invariant_error(workspace):
    path = write_file(workspace / 'double.csv',
                      ','.join(constants.MATCH_HEADER) + '\n1,,A,B,1,0\n1,,A,C,0,0\n')
    status, _, err = run_cli(['validate', '-i', path])
    assert status == constants.EXIT_DATA
    assert 'temporank: error:' in err

def test_usage_errors():
    assert run_cli(['rate', '-i', EXAMPLE, '-m', 'tmassey', '--upto', '9'])[0] == constants.EXIT_USAGE
    assert run_cli(['rate', '-i', EXAMPLE, '-m', 'cmassey', '--alpha', '1.5'])[0] == constants.EXIT_USAGE
    assert run_cli(['trace', '-i', EXAMPLE, '--team', 'Z'])[0] == constants.EXIT_USAGE
    with pytest.raises(SystemExit) as caught:
        run_cli(['rate', '-i', EXAMPLE, '-m', 'glicko'])
    assert caught.value.code == 2

def test_missing_file():
    status, _, err = run_cli(['rate', '-i', 'missing.csv', '-m', 'tmassey'])
    assert status == constants.EXIT_IO
    assert 'missing.csv' in err

def test_undecodable_input(workspace):
    path = workspace / 'latin1.csv'
    with open(path, 'wb') as f:
        f.write(','.join(constants.MATCH_HEADER).encode() + b'\n1,,A,B,1,0\n1,,C,D\xff,0,0\n')
    status, _, err = run_cli(['rate', '-i', str(path), '-m', 'tmassey'])
    assert status == constants.EXIT_PARSE
    assert err.startswith('temporank: error: row 3')
    assert len(err.strip().split('\n')) == 1

def test_non_ascii_score(workspace):
    path = write_file(workspace / 'score.csv',
                      ','.join(constants.MATCH_HEADER) + '\n1,,A,C,²,1\n')
    status, _, err = run_cli(['rate', '-i', path, '-m', 'tmassey'])
    assert status == constants.EXIT_PARSE
    assert 'row 2' in err

def test_prior_must_be_finite(workspace):
    prior = write_file(workspace / 'prior.csv', 'team,rating\nA,nan\n')
    status, _, err = run_cli(['rate', '-i', EXAMPLE, '-m', 'tmassey', '--rho-file', prior])
    assert status == constants.EXIT_PARSE
    assert 'row 2' in err

@pytest.mark.parametrize('argv', [
    ['evaluate', '--report', 'histogram', '--warmup', '5'],
    ['evaluate', '--warmup', '-1'],
    ['calibrate', '--warmup', '-1', '--grid', '0', '1', '0.5'],
    ['evaluate', '--report', 'correlation', '--from-round', '0'],
])
def test_bad_evaluation_arguments(argv):
    status, _, err = run_cli(argv[:1] + ['-i', EXAMPLE] + argv[1:])
    assert status == constants.EXIT_USAGE
    assert err.startswith('temporank: error:')
    assert len(err.strip().split('\n')) == 1

def test_disconnected_static_rate():
    status, _, err = run_cli(['rate', '-i', EXAMPLE, '-m', 'massey', '--upto', '1'])
    assert status == constants.EXIT_NUMERIC
    assert 'connected components' in err

def test_trace():
    status, out, _ = run_cli(['trace', '-i', EXAMPLE, '--team', 'A'])
    assert status == 0
    rows = csv_rows(out)
    assert rows[0] == constants.TRACE_HEADER
    assert len(rows) == 1 + 4 + 4 * 3
    assert ['A', '3', '0.333333'] in rows
    assert ['D', '1', '0.333333'] in rows

def test_trace_json():
    status, out, _ = run_cli(['trace', '-i', EXAMPLE, '--team', 'A', '--format', 'json'])
    assert status == 0
    document = json.loads(out)
    assert document['teams'] == ['A', 'C', 'B', 'D']
    assert abs(document['rating'] - 4 / 3) < 1e-12
    assert [round(c, 12) for c in document['column_sums']] == [1.0, 0.5, round(1 / 3, 12)]

def test_spectral():
    status, out, _ = run_cli(['spectral', '-i', EXAMPLE])
    assert status == 0
    rows = dict(csv_rows(out)[1:])
    assert rows['eigenvalue_1'] == '0.000000'
    assert rows['algebraic_connectivity'] == '4.000000'
    assert rows['connected'] == 'true'
    assert rows['deviation'] == '0.000000'

def test_evaluate_accuracy():
    status, out, _ = run_cli(['evaluate', '-i', EXAMPLE, '-m', 'tmassey'])
    assert status == 0
    assert csv_rows(out) == [constants.ACCURACY_HEADER, ['2', '1', '1', '1.000000'],
                             ['3', '2', '2', '1.000000']]

def test_evaluate_reports():
    status, out, _ = run_cli(['evaluate', '-i', EXAMPLE, '--report', 'histogram'])
    assert status == 0
    assert csv_rows(out)[-1] == ['0.900000', '1.000000', '2']
    status, out, _ = run_cli(['evaluate', '-i', EXAMPLE, '--report', 'summary', '--format', 'json'])
    assert json.loads(out)['mean'] == 1.0
    status, out, _ = run_cli(['evaluate', '-i', EXAMPLE, '--report', 'correlation',
                              '--compare', 'tmassey', 'official'])
    assert status == 0
    assert csv_rows(out)[1][:2] == ['1', 'tmassey-official']

def test_evaluate_table():
    status, out, _ = run_cli(['evaluate', '-i', EXAMPLE, '--all-methods', '--format', 'json'])
    assert status == 0
    rows = json.loads(out)['rows']
    assert [row['method'] for row in rows] == methods.__all__
    assert all(row['accuracy_hfa'] >= row['accuracy'] for row in rows)

def test_calibrate_curve():
    status, out, _ = run_cli(['calibrate', '-i', EXAMPLE, '--grid', '0', '1', '0.5', '--curve'])
    assert status == 0
    assert [row[0] for row in csv_rows(out)[1:]] == ['0.000000', '0.500000', '1.000000']

def test_trajectory():
    status, out, _ = run_cli(['trajectory', '-i', EXAMPLE, '--teams', 'A', 'D', '--rounds', '2-3'])
    assert status == 0
    assert csv_rows(out)[1:] == [['A', '2', '1.500000', '1'], ['A', '3', '1.333333', '1'],
                                 ['D', '2', '-1.500000', '4'], ['D', '3', '-1.333333', '4']]

def test_standings():
    status, out, _ = run_cli(['standings', '-i', EXAMPLE])
    assert status == 0
    rows = csv_rows(out)
    assert rows[0] == constants.STANDINGS_HEADER
    assert rows[1] == ['A', '9', '5', '6', '1']
    assert rows[4] == ['D', '0', '-5', '1', '4']

def test_validate_ok():
    status, out, _ = run_cli(['validate', '-i', EXAMPLE])
    assert status == 0
    assert out == '4 teams, 6 matches, 3 rounds: ok\n'

def test_runs_are_recorded(workspace):
    run_cli(['standings', '-i', EXAMPLE])
    run_cli(['rate', '-i', EXAMPLE, '-m', 'massey', '--upto', '1'])
    run_cli(['history'])
    with open(workspace / constants.run_index) as f:
        lines = f.read().strip().split('\n')
    assert len(lines) == 2
    assert lines[1].split(',')[3:6] == ['rate', 'massey', '5']
    status, out, _ = run_cli(['history', '--failed'])
    assert status == 0
    assert 'massey' in out and 'standings' not in out

def test_record_history_off(workspace):
    run_cli(['config', '--write', 'DEFAULT', 'record_history', 'no'])
    run_cli(['standings', '-i', EXAMPLE])
    assert not os.path.exists(workspace / constants.run_index)

def test_config_changes_method_constants():
    run_cli(['config', '--write', 'elo', 'kappa', '50'])
    _, out, _ = run_cli(['rate', '-i', EXAMPLE, '-m', 'elo', '--upto', '1'])
    assert csv_rows(out)[1] == ['A', '1', '25.000000', '1']
    _, out, _ = run_cli(['rate', '-i', EXAMPLE, '-m', 'elo', '--upto', '1', '--kappa', '25'])
    assert csv_rows(out)[1] == ['A', '1', '12.500000', '1']

def test_bad_config_value():
    run_cli(['config', '--write', 'cmassey', 'alpha', 'high'])
    status, _, err = run_cli(['rate', '-i', EXAMPLE, '-m', 'cmassey'])
    assert status == constants.EXIT_USAGE
    assert 'cmassey.alpha' in err
