# encoding: utf8

import json
import pytest

from gentlear import Settings
from gentlear.cli import main, parse_jordan, parse_window, run_config, build_parser
from gentlear.core import WalkError

Settings.reset_prefs()

def run(argv, capsys):
    with pytest.raises(SystemExit) as exception:
        main(argv)
    captured = capsys.readouterr()
    return exception.value.code, captured.out, captured.err


def test_validate(capsys):
    status, out, err = run(['validate', '--quiver', 'Q2'], capsys)
    assert not status
    assert out.startswith('Q2: gentle\n')
    assert 'Σ tables: chains' in out

    status, out, err = run(['validate', '--quiver', 'q3', '--format', 'json'], capsys)
    assert not status
    data = json.loads(out)
    assert data['gentle'] is True
    assert data['S'] == dict(a=1, b=-1)


def test_corrupted_quiver(tmp_path, capsys):
    path = tmp_path / 'fan.quiver'
    path.write_text('\n'.join([
        'vertex 1', 'vertex 2',
        'arrow a : 1 -> 2', 'arrow b : 1 -> 2', 'arrow c : 1 -> 2',
    ]) + '\n')
    status, out, err = run(['validate', '--quiver', str(path)], capsys)
    assert status
    assert 'error' in out + err

    status, out, err = run(['strings', '--quiver', str(path)], capsys)
    assert status
    assert 'not gentle' in out + err

    status, out, err = run(['validate', '--quiver', str(tmp_path / 'missing.quiver')], capsys)
    assert status


def test_ar(capsys):
    status, out, err = run(
        ['ar', '--quiver', 'Q1', '--walk', '1:(2,-)', '--format', 'json'], capsys
    )
    assert not status
    data = json.loads(out)
    assert data['shifted'] == '(-1, 1:(2,-))'
    assert len(data['middle']) == 1

    status, out, err = run(
        ['component', '--quiver', 'Q3', '--band', 'a b-', '--jordan', '1,1', '--steps', '2',
         '--format', 'json'],
        capsys,
    )
    assert not status
    data = json.loads(out)
    assert data['direction'] == 'tau-inverse'
    assert len(data['nodes']) == 3

    status, out, err = run(['ar', '--quiver', 'Q3', '--band', 'a b-'], capsys)
    assert status
    assert 'a band triangle needs --jordan n,λ' in out + err


def test_output_file(tmp_path, capsys):
    path = tmp_path / 'q1.dot'
    status, out, err = run(
        ['repetitive', '--quiver', 'Q1', '--window=-1:1', '--format', 'dot', '-o', str(path)],
        capsys,
    )
    assert not status
    assert out == ''
    assert '"2[1]" -> "1[0]"' in path.read_text(encoding='utf8')


def test_selftest(capsys):
    status, out, err = run(
        ['selftest', '--quiver', 'Q1', '--max-len', '2', '--format', 'json'], capsys
    )
    assert not status
    report = json.loads(out)
    assert report['status'] == 'pass'
    assert report['field'] == 'F5'
    assert list(report['suites']) == [
        'gentle', 'string functions', 'complexes', 'repetitive', 'happel', 'ar',
    ]


def test_options():
    parser = build_parser()
    with pytest.raises(WalkError) as exception:
        run_config(parser.parse_args(['strings', '--max-len', '-1']))
    assert str(exception.value) == '--max-len: must not be negative.'

    assert parse_window('-2:3') == (-2, 3)
    with pytest.raises(WalkError) as exception:
        parse_window('2')
    assert str(exception.value) == '2: expected m0:m1.'

    with Settings.prefs(field='F5'):
        assert parse_jordan('2,3').jordan_form() == (2, 3)
    with pytest.raises(WalkError) as exception:
        parse_jordan('0,1')
    assert str(exception.value) == '0,1: expected n,λ with n ≥ 1.'
