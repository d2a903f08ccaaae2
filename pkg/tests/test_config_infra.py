import json

from pydantic import ValidationError
import pytest

from config import EngineConfig
from infra import (
    CoefficientOverflow,
    ShapeError,
    check_coefficient,
    filter_none,
    finalize_json_array,
    write_json_event,
)
from infra.run_log import set_run_dir, write_entry


def test_defaults():
    config = EngineConfig()
    assert config.output_format == 'text'
    assert config.convention == 'paper'
    assert config.verify_spaces == ['A:k=3,m=3', 'B:n=4', 'C:n=4']
    assert config.max_coefficient == 2**63 - 1


def test_from_env(monkeypatch):
    monkeypatch.setenv('SCHUBERT_OUTPUT_FORMAT', 'jsonl')
    monkeypatch.setenv('SCHUBERT_VERIFY_SPACES', 'A:k=2,m=2; B:n=3')
    monkeypatch.setenv('SCHUBERT_VERIFY_MAX_SIZE', '3')
    monkeypatch.setenv('SCHUBERT_WRITE_RUN_LOG', 'false')
    config = EngineConfig.from_env()
    assert config.output_format == 'jsonl'
    assert config.verify_spaces == ['A:k=2,m=2', 'B:n=3']
    assert config.verify_max_size == 3
    assert config.write_run_log is False


def test_from_env_empty_resets_optional(monkeypatch):
    monkeypatch.setenv('SCHUBERT_ORACLE_P_VARIABLES', '')
    base = EngineConfig(oracle_p_variables=6)
    assert EngineConfig.from_env(base).oracle_p_variables is None


@pytest.mark.parametrize('field, value', (('output_format', 'xml'), ('max_coefficient', 0), ('convention', 'other')))
def test_invalid_values(field, value):
    with pytest.raises(ValidationError):
        EngineConfig(**{field: value})


def test_shape_error_keeps_token():
    error = ShapeError('Invalid partition part', 'x')
    assert error.token == 'x'
    assert str(error) == "Invalid partition part: 'x'"
    assert isinstance(error, ValueError)


def test_check_coefficient():
    assert check_coefficient(5, 10) == 5
    with pytest.raises(CoefficientOverflow) as info:
        check_coefficient(11, 10)
    assert info.value.limit == 10


def test_json_events_finalize_to_array(tmp_path):
    log_file = tmp_path / 'run.json'
    write_json_event(log_file, {'type': 'run_start'})
    write_json_event(log_file, {'type': 'run_end', 'error': None})
    finalize_json_array(log_file)
    events = json.loads(log_file.read_text(encoding='utf-8'))
    assert [e['type'] for e in events] == ['run_start', 'run_end']
    assert all('_ts' in e for e in events)


def test_json_events_without_file_are_ignored(tmp_path):
    write_json_event(None, {'type': 'run_start'})
    finalize_json_array(None)
    finalize_json_array(tmp_path / 'missing.json')


def test_write_entry(run_dir):
    assert write_entry('traces', {'mode': 'a', 'round_trip': True})
    write_entry('traces', {'mode': 'a', 'round_trip': False})
    lines = (run_dir / 'traces.jsonl').read_text(encoding='utf-8').splitlines()
    assert [json.loads(line)['round_trip'] for line in lines] == [True, False]


def test_write_entry_without_run_dir(tmp_path):
    set_run_dir(None)
    assert write_entry('violations', {'check': 'grading'}) is False
    assert list(tmp_path.iterdir()) == []


def test_filter_none():
    assert filter_none({'a': None, 'b': [{'c': None, 'd': 1}]}) == {'b': [{'d': 1}]}
