"""
コマンドラインのテスト (main を直接呼び出す)
"""
import json

import pytest

from main import main


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestCheck:
    """check サブコマンド"""

    def test_text_output(self, capsys):
        code = main(['check', '--field', 'GF(2)', '--poly', 'x^2+xy+y^2+x'])
        lines = _lines(capsys)
        assert code == 0
        assert 'verdict: absolutely_irreducible' in lines
        assert 'rule: main-theorem' in lines
        assert 'gaps: 1' in lines

    def test_json_output(self, capsys):
        code = main(['check', '--json', '--field', 'GF(2)', '--poly', 'x^9+y^9+x^6+y^3+1'])
        certificate = json.loads(capsys.readouterr().out)
        assert code == 0
        assert certificate['verdict'] == 'factor_bounds'
        assert certificate['max_factors'] == 3
        assert certificate['min_factor_degree'] == 3

    def test_witness(self, capsys):
        assert main(['check', '--json', '--field', 'GF(2)', '--poly', 'x^3+y^3']) == 0
        certificate = json.loads(capsys.readouterr().out)
        assert certificate['verdict'] == 'not_absolutely_irreducible'
        assert certificate['witness'] == 'x + y'

    def test_inconclusive_is_not_an_error(self, capsys):
        assert main(['check', '--field', 'GF(2)', '--poly', 'x^2+y^2+x']) == 0
        assert 'failed_hypotheses: leading_squarefree' in _lines(capsys)

    def test_parse_error(self, capsys):
        code = main(['check', '--json', '--field', 'GF(2)', '--poly', '(bad'])
        record = json.loads(capsys.readouterr().out)
        assert code == 2
        assert record['error'] == 'ParseError'
        assert record['offset'] == 1

    def test_parse_error_text(self, capsys):
        assert main(['check', '--field', 'GF(4)', '--poly', 'x']) == 2
        assert capsys.readouterr().err.startswith('error:')

    def test_zero_polynomial(self, capsys):
        assert main(['check', '--field', 'GF(2)', '--poly', '0']) == 3

    def test_missing_polynomial(self, capsys):
        assert main(['check', '--field', 'GF(2)']) == 2

    def test_bad_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv('ABSIRR_ORACLE_BUDGET', 'lots')
        assert main(['check', '--field', 'GF(2)', '--poly', 'x']) == 2

    def test_bad_budget_flag(self, capsys):
        assert main(['oracle', '--budget', '0', '--field', 'GF(2)', '--poly', 'x']) == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as info:
            main(['factor'])
        assert info.value.code == 2


class TestBatch:
    """check --in"""

    def test_jsonl_and_exit_code(self, tmp_path, capsys):
        path = tmp_path / 'input.tsv'
        path.write_text("# 先頭はコメント\nGF(2)\tx^2+xy+y^2+x\n\nGF(4)\tx+1\nGF(3)\t0\n", encoding='utf-8')
        code = main(['check', '--in', str(path)])
        records = [json.loads(line) for line in _lines(capsys)]
        assert code == 2
        assert [r['row'] for r in records] == [1, 2, 3]
        assert records[0]['rule'] == 'main-theorem'
        assert records[1]['error'] == 'ParseError'
        assert records[1]['code'] == 'non_prime'
        assert records[2]['exit_code'] == 3

    def test_oversized_literal_does_not_stop_the_batch(self, tmp_path, capsys):
        path = tmp_path / 'input.tsv'
        path.write_text("GF(2)\t" + "9" * 5000 + "x\nGF(" + "9" * 5000 + ")\tx+1\nGF(2)\tx+y\n",
                        encoding='utf-8')
        code = main(['check', '--in', str(path)])
        records = [json.loads(line) for line in _lines(capsys)]
        assert code == 2
        assert len(records) == 3
        assert [r.get('code') for r in records[:2]] == ['number_too_large', 'number_too_large']
        assert records[0]['offset'] == 0
        assert records[1]['offset'] == 3
        assert records[2]['rule'] == 'degree-one'

    def test_all_rows_succeed(self, tmp_path, capsys):
        path = tmp_path / 'input.tsv'
        path.write_text("GF(3)\tx^2+y^2\nGF(5)\tx+y+1\n", encoding='utf-8')
        assert main(['check', '--in', str(path)]) == 0
        assert len(_lines(capsys)) == 2

    def test_xlsx_output(self, tmp_path, capsys):
        path = tmp_path / 'input.tsv'
        path.write_text("GF(2)\tx^3+y^3\n", encoding='utf-8')
        out_dir = tmp_path / 'out'
        assert main(['check', '--in', str(path), '--xlsx', str(out_dir)]) == 0
        assert len(list(out_dir.glob('certificates_*.xlsx'))) == 1

    def test_missing_file(self, tmp_path, capsys):
        assert main(['check', '--in', str(tmp_path / 'missing.tsv')]) == 2


class TestDecompose:
    """decompose サブコマンド"""

    def test_gap_profile(self, capsys):
        assert main(['decompose', '--field', 'GF(2)', '--poly', 'x^10+xy^9+x^7+y^5+x']) == 0
        lines = _lines(capsys)
        assert 'degree: 10' in lines
        assert 'degree-gap: 3' in lines
        assert 'gaps: 3,5,9' in lines
        assert 'span: -, outside, inside' in lines
        assert '  F_5 = y^5' in lines

    def test_homogeneous(self, capsys):
        assert main(['decompose', '--field', 'GF(2)', '--poly', 'x^2+y^2']) == 0
        lines = _lines(capsys)
        assert 'degree-gap: infinity' in lines
        assert 'gaps: -' in lines

    def test_json(self, capsys):
        assert main(['decompose', '--json', '--field', 'GF(3)', '--poly', 'x^3+y+1']) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['gaps'] == [2, 3]
        assert report['forms'] == {'3': 'x^3', '1': 'y', '0': '1'}

    def test_constant(self, capsys):
        assert main(['decompose', '--field', 'GF(2)', '--poly', '1']) == 3


class TestSpan:
    """span サブコマンド"""

    def test_not_representable(self, capsys):
        assert main(['span', '7', '--gens', '3,5']) == 0
        assert _lines(capsys) == ['not representable; gaps below 7: 1,2,4']

    def test_representable(self, capsys):
        assert main(['span', '9', '--gens', '5,3']) == 0
        assert _lines(capsys) == ['representable; gaps below 9: 1,2,4,7']

    def test_no_gaps(self, capsys):
        assert main(['span', '3', '--gens', '1']) == 0
        assert _lines(capsys) == ['representable; gaps below 3: none']

    def test_json(self, capsys):
        assert main(['span', '--json', '4', '--gens', '2']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {'target': 4, 'generators': [2], 'representable': True, 'gaps_below': [1, 3]}

    def test_invalid_generator(self, capsys):
        assert main(['span', '4', '--gens', '0,2']) == 2


class TestOracle:
    """oracle サブコマンド"""

    def test_split_over_extension(self, capsys):
        assert main(['oracle', '--json', '--field', 'GF(3)', '--poly', 'x^2+y^2']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['irreducible_over'] == {'1': True, '2': False}
        assert data['max_factor_count'] == 2
        assert data['absolutely_irreducible'] is False

    def test_univariate_input(self, capsys):
        assert main(['oracle', '--json', '--field', 'GF(2)', '--poly', 'x^2+1']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['max_factor_count'] == 2

    def test_out_of_budget(self, capsys):
        assert main(['oracle', '--budget', '1', '--field', 'GF(2)', '--poly', 'x^4+y^4+x^3+x^2y+1']) == 3


class TestSampleAndSelftest:
    """sample / selftest サブコマンド"""

    def test_exhaustive_sample(self, capsys):
        code = main(['sample', '--field', 'GF(2)', '--degree', '3', '--arity', '1', '--count', 'all'])
        lines = _lines(capsys)
        assert code == 0
        assert 'count: 8' in lines
        assert 'squarefree_fraction: 0.5' in lines
        assert 'violations: 0' in lines

    def test_random_sample_is_reproducible(self, capsys):
        argv = ['sample', '--json', '--field', 'GF(3)', '--degree', '2', '--count', '20', '--seed', '5']
        assert main(argv) == 0
        first = json.loads(capsys.readouterr().out)
        assert main(argv) == 0
        second = json.loads(capsys.readouterr().out)
        assert first == second
        assert first['count'] == 20
        assert first['violations'] == 0

    def test_sample_reports_checker_rates(self, capsys):
        argv = ['sample', '--json', '--field', 'GF(2)', '--degree', '2', '--arity', '2', '--count', 'all']
        assert main(argv) == 0
        summary = json.loads(capsys.readouterr().out)
        rates = summary['checker_rates']
        assert set(rates) == {'prop-2.4', 'prop-2.5', 'prop-2.6'}
        assert 0 < rates['prop-2.4'] <= summary['rule_rates']['main-theorem']
        # 次数 2 では γ_2 = 2 は γ_1 = 1 の倍数で、成分は 3 個まで
        assert rates['prop-2.5'] == 0
        assert rates['prop-2.6'] == 0

    def test_invalid_count(self):
        with pytest.raises(SystemExit) as info:
            main(['sample', '--field', 'GF(2)', '--count', '0'])
        assert info.value.code == 2

    def test_selftest(self, capsys):
        assert main(['selftest', '--max-degree', '2']) == 0
        lines = _lines(capsys)
        assert 'count: 63' in lines
        assert 'violations: 0' in lines

    def test_selftest_near_misses(self, capsys):
        assert main(['selftest', '--json', '--max-degree', '2', '--near-misses']) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary['violations'] == 0
        assert any('x^2 + y^2 + x + y' in item for item in summary['near_misses'])

    def test_selftest_xlsx(self, tmp_path, capsys):
        assert main(['selftest', '--max-degree', '1', '--xlsx', str(tmp_path)]) == 0
        assert len(list(tmp_path.glob('selftest_*.xlsx'))) == 1
