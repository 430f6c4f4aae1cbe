# -*- coding: utf-8 -*-

import csv
import json
import math
import time

import pytest

from libs.common import ValidationError
from libs.cli import RunConfig, ResultRecord, parse_int_list, parse_float_list
from libs.cli import cmd_theory, cmd_exact, cmd_scan, cmd_run, execute, replay
from libs.cli import AcceptanceSuite, CriterionResult
from libs.model import ModelParams

from runners.pspin import main


def _config(op: str, estimator: dict = None, output: dict = None, model: dict = None, seed: int = 7) -> dict:
    info = {
        'schema': 1,
        'seed': seed,
        'model': model or {'N': 6, 'p': 3, 'beta': 0.05, 'h': 0.5},
        'engine': {'kind': 'exact'},
        'estimator': dict(estimator or {}, op=op),
    }
    if output is not None:
        info['output'] = output
    return info


def _write(tmp_path, info: dict) -> str:
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(info))
    return str(path)


class TestRecords:

    def test_parse(self):
        config = RunConfig.parse(text=json.dumps(_config(op='theory')))
        assert config.seed == 7
        assert config.model == ModelParams(n=6, p=3, beta=0.05, h=0.5)
        assert config.op == 'theory'
        assert config.output_format == 'json'
        assert config.output_path(root='/tmp/out') == '/tmp/out/theory-7.json'

    @pytest.mark.parametrize('change', [
        {'schema': 2},
        {'seed': -3},
        {'model': {'N': 6, 'p': 3, 'beta': 0.05}},
        {'model': {'N': 6, 'p': 3, 'beta': 0.05, 'h': 0.0}},
        {'estimator': {'ns': [6]}},
        {'engine': {'kind': 'quantum'}},
        {'output': {'format': 'xml'}},
    ])
    def test_rejects(self, change):
        info = _config(op='theory')
        info.update(change)
        with pytest.raises(ValidationError):
            RunConfig.parse(text=json.dumps(info))

    def test_rejects_text(self):
        with pytest.raises(ValidationError):
            RunConfig.parse(text='{not json')
        with pytest.raises(ValidationError):
            RunConfig.parse(text='[1, 2]')
        with pytest.raises(ValidationError):
            RunConfig.load(path='/nonexistent/config.json')

    def test_lists(self):
        assert parse_int_list('8,10, 12') == [8, 10, 12]
        assert parse_int_list(None) is None
        assert parse_float_list('0.25,0.5') == [0.25, 0.5]
        with pytest.raises(ValidationError):
            parse_int_list('8,ten')


class TestCommands:

    def test_theory_json(self):
        info = json.loads(cmd_theory(p=3, beta=0.0, h=0.5))
        assert info['q'] == pytest.approx(0.213552, abs=1e-6)
        assert info['phi'] == pytest.approx(0.813261, abs=1e-6)
        assert info['clt_var'] == pytest.approx(0.954396, abs=1e-4)
        assert info['inside_H'] is True
        assert info['a2_variant'] == 'proof'
        assert 'beta_at' not in info

    def test_exact_free(self):
        info = cmd_exact(params=ModelParams(n=6, p=3, beta=0.0, h=0.5), seed=3)
        assert info['p_N'] == pytest.approx(math.log(2.0) + math.log(math.cosh(0.5)), abs=1e-12)

    def test_unknown_scan(self):
        with pytest.raises(ValidationError):
            cmd_scan(stat='entropy', params=ModelParams(n=6, p=3, beta=0.0, h=0.5), ns=[6], n_disorder=1, seed=1)

    def test_execute_flags(self):
        record, rows = execute(config=RunConfig.parse(text=json.dumps(_config(op='pn_sample'))))
        assert rows is None
        assert record.rigorous_regime
        assert record.at_region
        assert set(record.payload.keys()) == {'p_N'}
        with pytest.raises(ValidationError):
            execute(config=RunConfig.parse(text=json.dumps(_config(op='nothing'))))

    def test_run_and_replay(self, tmp_path):
        out = tmp_path / 'results' / 'theory.json'
        path = _write(tmp_path, _config(op='theory', output={'path': str(out), 'format': 'json'}))
        record, written = cmd_run(config_path=path, root=str(tmp_path))
        assert written == str(out)
        loaded = ResultRecord.load(path=written)
        assert loaded.payload_text() == record.payload_text()
        assert loaded.get(key='schema') == 1
        assert replay(record=loaded)

    def test_scan_to_csv(self, tmp_path):
        info = _config(op='pn_vs_phi_scan', estimator={'ns': [6, 8], 'n_disorder': 2},
                       output={'format': 'csv'})
        record, written = cmd_run(config_path=_write(tmp_path, info), root=str(tmp_path))
        assert written == str(tmp_path / 'pn_vs_phi_scan-7.csv')
        with open(written, newline='') as file:
            lines = list(csv.reader(file))
        assert lines[0][:2] == ['N', 'stat']
        assert len(lines) == 3
        assert replay(record=ResultRecord.load(path=written + '.record.json'))

    def test_csv_needs_rows(self, tmp_path):
        info = _config(op='theory', output={'format': 'csv'})
        with pytest.raises(ValidationError):
            cmd_run(config_path=_write(tmp_path, info), root=str(tmp_path))


class TestMain:

    def test_theory(self, gates, capsys):
        assert main(['theory', '--p', '3', '--beta', '0', '--h', '0.5']) == 0
        info = json.loads(capsys.readouterr().out)
        assert info['q'] == pytest.approx(0.213552, abs=1e-6)

    def test_bad_field(self, gates, capsys):
        assert main(['theory', '--p', '3', '--beta', '0.05', '--h', '-1']) == 1
        assert 'ValidationError' in capsys.readouterr().out

    def test_gate(self, gates, capsys):
        assert main(['exact', '--N', '30', '--p', '3', '--beta', '0.05', '--h', '0.5', '--seed', '1']) == 3
        assert 'ResourceLimitError' in capsys.readouterr().out

    def test_usage(self, gates):
        assert main(['--help']) == 0
        assert main([]) == 1
        assert main(['dance']) == 1
        assert main(['theory', '--colour=red']) == 1
        assert main(['theory', '--config', '/nonexistent/config.ini', '--p', '3', '--beta', '0', '--h', '1']) == 1

    def test_verify_needs_seed(self, gates, capsys):
        assert main(['verify', '--quick']) == 1
        assert '--seed is required' in capsys.readouterr().out

    def test_run(self, gates, tmp_path, capsys):
        out = tmp_path / 'record.json'
        path = _write(tmp_path, _config(op='theory', output={'path': str(out)}))
        assert main(['run', path]) == 0
        assert capsys.readouterr().out.strip() == str(out)
        assert out.exists()


class TestAcceptance:

    def test_levels(self):
        with pytest.raises(ValidationError):
            AcceptanceSuite(level='medium', seed=1)
        assert len(AcceptanceSuite(level='quick', seed=1).criteria()) == 13

    def test_zero_beta_closure(self):
        result = AcceptanceSuite(level='quick', seed=1).zero_beta_closure()
        assert isinstance(result, CriterionResult)
        assert result.passed
        assert result.details['printed_variant_gap'] > 1e-3
        assert not AcceptanceSuite(level='quick', seed=1, variant='printed').zero_beta_closure().passed

    @pytest.mark.parametrize('name', ['fixed_point', 'q_hat_identities', 'free_energy_identities',
                                      'large_p_limit', 'decomposition', 'combinatorics'])
    def test_deterministic_criteria(self, name):
        result = getattr(AcceptanceSuite(level='quick', seed=20240101), name)()
        assert result.passed, result.details
        assert result.to_dict()['criterion'] == result.number

    def test_statuses(self):
        suite = AcceptanceSuite(level='quick', seed=1)
        start = time.perf_counter()
        assert suite._result(7, 'self averaging', start, 0.5, {}).status == 'pass'
        unresolved = suite._result(7, 'self averaging', start, -0.5, {}, inconclusive=True)
        assert unresolved.status == 'inconclusive'
        assert not unresolved.passed and not unresolved.failed
        assert unresolved.to_dict()['status'] == 'inconclusive'
        assert 'INCONCLUSIVE' in str(unresolved)
        assert suite._result(7, 'self averaging', start, -0.5, {}).failed
        with pytest.raises(ValidationError):
            CriterionResult(number=1, name='x', status='maybe', margin=0.0, elapsed=0.0, details={})

    @pytest.mark.slow
    def test_self_averaging_reports_resolution(self):
        result = AcceptanceSuite(level='quick', seed=20240101).self_averaging()
        assert 'noise_floor' not in result.details
        assert isinstance(result.details['min_resolved'], bool)
        if result.details['ratio'] is not None and result.details['ratio'] >= 5.0:
            assert not result.passed
        if result.status == 'inconclusive':
            assert not result.details['min_resolved']

    @pytest.mark.slow
    def test_delta_sq_has_no_slack(self):
        result = AcceptanceSuite(level='quick', seed=20240101).delta_sq()
        assert 'slack' not in result.details
        estimate = result.details['estimate']
        within = abs(estimate['mean'] - result.details['prediction']) <= 4.0 * estimate['std_err']
        beta0 = result.details['beta0_estimate']
        zero_ok = abs(beta0['mean'] - result.details['beta0_exact']) <= 4.0 * beta0['std_err']
        assert result.passed == (within and zero_ok)

    @pytest.mark.slow
    def test_quick_verify(self, gates, capsys):
        assert main(['verify', '--quick', '--seed', '20240101']) == 0
        out = capsys.readouterr().out
        assert ' FAIL ' not in out
        assert 'all criteria passed' in out or 'no criterion failed' in out
