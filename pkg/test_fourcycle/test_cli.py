import json

from pytest import raises

from fourcycle.cli import main


def test_construct_writes_document(tmp_path, capsys):
    out = tmp_path / 'system.json'
    assert 0 == main(['construct', '--s', '2', '--h', '1', '--c', '3', '--out', str(out)])

    document = json.loads(out.read_text())
    assert 17 == document['params']['v']
    assert 34 == len(document['blocks'])
    stdout = capsys.readouterr().out
    assert 'splus1 case' in stdout
    assert 'PASS' in stdout


def test_construct_to_stdout_keeps_document_clean(capsys):
    assert 0 == main(['construct', '--s', '1', '--h', '1', '--c', '1'])
    captured = capsys.readouterr()
    assert 9 == json.loads(captured.out)['params']['v']
    assert captured.err.startswith('PASS')


def test_construct_outside_spectrum_is_a_usage_error(capsys):
    assert 2 == main(['construct', '--s', '2', '--h', '1', '--c', '4'])
    assert 'OutOfSpectrum' in capsys.readouterr().err


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / 'system.json'
    main(['construct', '--s', '3', '--h', '1', '--c', '7', '--out', str(out)])
    capsys.readouterr()

    assert 0 == main(['verify', str(out)])
    assert 'PASS' in capsys.readouterr().out


def test_verify_with_overrides_fails(tmp_path, capsys):
    out = tmp_path / 'system.json'
    main(['construct', '--s', '3', '--h', '1', '--c', '7', '--out', str(out)])
    capsys.readouterr()

    assert 1 == main(['verify', str(out), '--c', '6'])
    captured = capsys.readouterr()
    assert 'FAIL' in captured.out
    assert 'colour_count' in captured.err

    assert 1 == main(['verify', str(out), '--s', '2'])


def test_verify_broken_document(tmp_path, capsys):
    out = tmp_path / 'broken.json'
    out.write_text('{"schema_version": 1}')
    assert 2 == main(['verify', str(out)])
    assert 'params' in capsys.readouterr().err


def test_verify_missing_file(tmp_path):
    assert 2 == main(['verify', str(tmp_path / 'nothing.json')])


def test_spectrum_lists_cases(capsys):
    assert 0 == main(['spectrum', '--s', '3', '--h', '1'])
    lines = capsys.readouterr().out.splitlines()
    assert '3 4 5 6 7' == lines[0]
    assert ['3 base', '4 splus1', '5 mid', '6 mid', '7 high'] == lines[1:6]
    assert 'lower index 3, constructed up to 7, proved upper bound 8' == lines[6]


def test_spectrum_check(capsys):
    assert 0 == main(['spectrum', '--s', '2', '--h', '1', '--check'])
    lines = capsys.readouterr().out.splitlines()
    assert ['2 PASS', '3 PASS'] == lines[-2:]


def test_spectrum_check_reports_each_timeout(capsys):
    assert 1 == main(['spectrum', '--s', '3', '--h', '1', '--check', '--timeout', '0.000001'])
    captured = capsys.readouterr()
    assert ['3 FAIL', '4 FAIL', '5 FAIL', '6 FAIL', '7 FAIL'] == captured.out.splitlines()[-5:]
    assert 5 == captured.err.count('TIMEOUT')


def test_bound(capsys):
    assert 0 == main(['bound', '--v', '17', '--s', '2'])
    assert '34/9 (floor 3)\n' == capsys.readouterr().out


def test_bound_rejects_bad_order(capsys):
    assert 2 == main(['bound', '--v', '18', '--s', '2'])


def test_decompose_certificate(capsys):
    assert 0 == main(['decompose', '--s', '4', '--t', '1'])
    out = capsys.readouterr().out
    assert 'K_8 - I, I = 1-2 3-4 5-6 7-8' in out
    assert 'triangles: 4' in out
    assert 'quadrilaterals: 3' in out
    assert 'C_7 = (' in out


def test_decompose_out_of_range(capsys):
    assert 2 == main(['decompose', '--s', '3', '--t', '2'])


def test_invalid_flags_exit_with_2(capsys):
    with raises(SystemExit) as e:
        main(['construct', '--s', '2'])
    assert 2 == e.value.code

    with raises(SystemExit) as e:
        main(['bound', '--v', '17', '--s', '0'])
    assert 2 == e.value.code

    with raises(SystemExit) as e:
        main([])
    assert 2 == e.value.code


def test_verify_huge_declared_order_fails_cleanly(tmp_path, capsys):
    k = 10 ** 6
    document = {
        'schema_version': 1,
        'params': {'s': 1, 'h': k, 'k': k, 'v': 1 + 8 * k, 'c': 1, 'q': 4 * k, 'r': 0},
        'construction_case': 'base',
        'blocks': [[0, 1, 2, 3]],
        'colours': [1],
        'provenance': None,
    }
    out = tmp_path / 'huge.json'
    out.write_text(json.dumps(document))

    assert 1 == main(['verify', str(out)])
    captured = capsys.readouterr()
    assert 'FAIL cycle_system: blocks=1' in captured.out
    assert 'truncated=' in captured.err
