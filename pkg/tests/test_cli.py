import io
import json

import pytest

from cli import CoefficientRecord, read_table, run, write_table
from config import EngineConfig
from infra import ShapeError
from scripts.table_stats import collect_stats, main as table_stats_main


def test_coeff_text(quiet_config, capsys):
    code = run(['coeff', '--space', 'B:n=7', '--lambda', '5,3,1', '--mu', '5,2', '--nu', '6,5,4,1'],
               quiet_config)
    assert code == 0
    assert capsys.readouterr().out.strip() == '4'


def test_coeff_jsonl(quiet_config, capsys):
    code = run(['coeff', '--space', 'A:k=3,m=3', '--lambda', '2,1', '--mu', '2,1', '--nu', '3,2,1',
                '--format', 'jsonl'], quiet_config)
    assert code == 0
    line = capsys.readouterr().out.strip()
    assert json.loads(line) == {'space': 'A:k=3,m=3', 'lambda': [2, 1], 'mu': [2, 1], 'nu': [3, 2, 1], 'coeff': 2}


def test_coeff_standard_convention(quiet_config, capsys):
    code = run(['coeff', '--space', 'C:n=2', '--lambda', '1', '--mu', '1', '--nu', '2',
                '--convention', 'standard'], quiet_config)
    assert code == 0
    assert capsys.readouterr().out.strip() == '2'


def test_product_text(quiet_config, capsys):
    assert run(['product', '--space', 'A:k=2,m=2', '--lambda', '1', '--mu', '1'], quiet_config) == 0
    assert capsys.readouterr().out.strip() == 's(2) + s(1,1)'


def test_pieri_text(quiet_config, capsys):
    assert run(['pieri', '--space', 'B:n=3', '--p', '1', '--lambda', '2'], quiet_config) == 0
    assert capsys.readouterr().out.strip() == 's(3) + s(2,1)'


@pytest.mark.parametrize(
    'argv, fragment',
    (
        (['coeff', '--space', 'B:n=4', '--lambda', '3,3', '--mu', '1', '--nu', '4,3'], '3,3'),
        (['coeff', '--space', 'B:n=4', '--lambda', '3,x', '--mu', '1', '--nu', '4,3'], 'x'),
        (['coeff', '--space', 'Q:n=4', '--lambda', '1', '--mu', '1', '--nu', '2'], 'Q:n=4'),
        (['pieri', '--space', 'B:n=2', '--p', '0', '--lambda', '1'], 'Special class'),
        (['trace', '--space', 'B:n=3', '--mode', 'a', '--lambda', '', '--mu', '', '--nu', '1', '--p', '1'],
         'type A'),
    ),
)
def test_bad_input_exits_2(quiet_config, capsys, argv, fragment):
    assert run(argv, quiet_config) == 2
    assert fragment in capsys.readouterr().err


@pytest.mark.parametrize(
    'argv',
    (
        ['coeff', '--space', 'B:n=4'],
        ['nope'],
        ['pieri', '--space', 'B:n=2', '--p', 'x', '--lambda', '1'],
    ),
)
def test_usage_errors_exit_2(quiet_config, capsys, argv):
    assert run(argv, quiet_config) == 2
    assert capsys.readouterr().err


def test_table_round_trip(quiet_config, tmp_path):
    out = tmp_path / 'table.jsonl'
    assert run(['table', '--space', 'B:n=3', '--out', str(out)], quiet_config) == 0
    records = read_table(out)
    assert records
    assert all(r.coeff for r in records)
    assert CoefficientRecord.of('B:n=3', (2,), (2,), (3, 1), 2) in records

    buffer = io.StringIO()
    assert write_table(records, buffer) == len(records)
    assert buffer.getvalue() == out.read_text(encoding='utf-8')


def test_table_all_includes_zeros(quiet_config, tmp_path):
    out = tmp_path / 'table.jsonl'
    assert run(['table', '--space', 'A:k=2,m=2', '--all', '--out', str(out)], quiet_config) == 0
    records = read_table(out)
    assert CoefficientRecord.of('A:k=2,m=2', (2,), (1, 1), (2, 2), 0) in records


def test_type_d_table_matches_b(quiet_config, capsys):
    assert run(['table', '--space', 'D:n=3'], quiet_config) == 0
    d_text = capsys.readouterr().out
    assert run(['table', '--space', 'B:n=2'], quiet_config) == 0
    assert capsys.readouterr().out == d_text


def test_verify_ok(quiet_config, capsys):
    assert run(['verify', '--space', 'A:k=2,m=2', '--space', 'B:n=2', '--oracle'], quiet_config) == 0
    out = capsys.readouterr().out
    assert 'A:k=2,m=2' in out and 'B:n=2' in out
    assert 'FAIL' not in out


def test_verify_jsonl(quiet_config, capsys):
    assert run(['verify', '--space', 'C:n=2', '--format', 'jsonl'], quiet_config) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['space'] == 'C:n=2'
    assert report['total_violations'] == 0


def test_trace_type_a(quiet_config, capsys):
    assert run(['trace', '--space', 'A:k=2,m=2', '--mode', 'a', '--lambda', '1', '--mu', '1',
                '--nu', '2,1', '--p', '1'], quiet_config) == 0
    assert 'problems: 0' in capsys.readouterr().out


def test_trace_shifted(quiet_config, capsys):
    assert run(['trace', '--space', 'B:n=3', '--mode', 'shifted', '--lambda', '1', '--mu', '1',
                '--nu', '2,1', '--p', '1'], quiet_config) == 0
    assert 'problems: 0' in capsys.readouterr().out


def test_run_log_is_a_json_array(tmp_path, capsys):
    config = EngineConfig(log_dir=str(tmp_path / 'runs'))
    assert run(['product', '--space', 'A:k=2,m=2', '--lambda', '1', '--mu', '1'], config) == 0
    run_dirs = list((tmp_path / 'runs').iterdir())
    assert len(run_dirs) == 1 and run_dirs[0].name.endswith('-product')
    events = json.loads((run_dirs[0] / 'run.json').read_text(encoding='utf-8'))
    assert [e['type'] for e in events] == ['run_start', 'run_end']
    assert events[-1]['exit_code'] == 0


def test_record_rejects_extra_fields():
    with pytest.raises(ShapeError):
        CoefficientRecord.from_line('{"space":"B:n=2","lambda":[1],"mu":[1],"nu":[2],"coeff":1,"x":0}')
    with pytest.raises(ShapeError):
        CoefficientRecord.from_line('not json')


def test_record_line_uses_lambda_key():
    line = CoefficientRecord.of('B:n=2', (1,), (1,), (2,), 1).to_line()
    assert line == '{"space":"B:n=2","lambda":[1],"mu":[1],"nu":[2],"coeff":1}'


def test_table_stats_reads_dumped_table(quiet_config, tmp_path):
    out = tmp_path / 'table.jsonl'
    assert run(['table', '--space', 'B:n=3', '--out', str(out)], quiet_config) == 0
    stats = collect_stats(read_table(out))
    assert stats['spaces'] == {'B:n=3': stats['records']}
    assert stats['records'] == stats['nonzero']
    assert stats['largest'].coeff == 2


def test_table_stats_rejects_malformed_lines(tmp_path, capsys, monkeypatch):
    bad = tmp_path / 'bad.jsonl'
    bad.write_text('{"space":"B:n=2"}\n', encoding='utf-8')
    monkeypatch.setattr('sys.argv', ['table_stats.py', str(bad)])
    with pytest.raises(SystemExit) as info:
        table_stats_main()
    assert info.value.code == 1
    assert 'Error' in capsys.readouterr().out
