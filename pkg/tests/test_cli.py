import re

import pytest
from click.testing import CliRunner
from numwall.arguments import config_digest, output_path
from numwall.cli import cli, main
from numwall.exceptions import EffortExhausted, WallZeroDivision
from numwall.wall.dump import load_wall, read_wall

from fixtures import SIMPLE_SPEC, app_config, no_output_dir, write_file  # noqa: F401

DIGEST = re.compile(r'numwall 0\.1 config=([0-9a-f]{64})')


def invoke(*args):
    runner = CliRunner()
    return runner.invoke(cli, list(args), catch_exceptions=False)


def test_seq_builtin():
    result = invoke('seq', '--builtin', 'rueppel', '--count', '16')
    assert '1101000100000001' in result.output
    assert result.exit_code == 0


def test_seq_list():
    result = invoke('seq', '--list')
    for name in ('pagoda', 'knight', 'rueppel', 'thue-morse', 'libran'):
        assert name in result.output


def test_seq_period_and_mod():
    assert '111010111010' in invoke('seq', '--period', '111010', '--count', '12').output
    assert '12201' in invoke('seq', '--builtin', 'pagoda', '--start', '-2', '--count', '5').output
    big = invoke('seq', '--builtin', 'libran', '--mod', '1000003', '--count', '3', '--seed', '4')
    assert ',' in big.output.splitlines()[-1]


def test_seq_spec_file(tmp_path):
    path = write_file(tmp_path, 'tm.d0l', SIMPLE_SPEC)
    assert '01101001' in invoke('seq', '--spec', str(path), '--count', '8').output
    # the spec is reread in the requested field
    assert '0110' in invoke('seq', '--spec', str(path), '--mod', '3', '--count', '4').output
    broken = write_file(tmp_path, 'broken.d0l', SIMPLE_SPEC.replace('mod 2', 'mod 4'))
    result = invoke('seq', '--spec', str(broken))
    assert result.exit_code == 2
    assert 'is not a valid sequence spec' in result.output
    assert '"missing.d0l" not found' in invoke('seq', '--spec', 'missing.d0l').output


def test_seq_digits_file(tmp_path):
    path = write_file(tmp_path, 'digits.txt', '0101 1\n')
    assert '01011' in invoke('seq', '--digits', str(path), '--count', '5').output
    assert '0101101011' in invoke('seq', '--digits', str(path), '--periodic-digits', '--count', '10').output


def test_seq_source_errors():
    result = invoke('seq')
    assert result.exit_code == 2
    assert 'Give exactly one sequence source' in result.output
    result = invoke('seq', '--builtin', 'pagoda', '--period', '11')
    assert 'got --builtin, --period' in result.output
    result = invoke('seq', '--builtin', 'fibonacci')
    assert result.exit_code == 2
    assert 'Unknown sequence "fibonacci"' in result.output
    result = invoke('seq', '--period', '1x')
    assert 'is not a word of digits' in result.output
    result = invoke('seq', '--builtin', 'pagoda', '--mod', '4')
    assert '4 is not a prime modulus' in result.output


def test_run_header_is_reproducible():
    first = DIGEST.search(invoke('seq', '--builtin', 'knight', '--count', '4').output).group(1)
    again = DIGEST.search(invoke('seq', '--builtin', 'knight', '--count', '4').output).group(1)
    other = DIGEST.search(invoke('seq', '--builtin', 'knight', '--count', '5').output).group(1)
    assert first == again
    assert first != other
    assert config_digest({'a': 1, 'b': [1, 2]}) == config_digest({'b': [1, 2], 'a': 1})


def test_wall_dump_to_stdout(app_config):  # noqa: F811
    result = invoke('wall', '--period', '111010', '--mod', '2', '--rows', '8')
    assert result.exit_code == 0
    text = result.output[result.output.index('#wall'):]
    assert text.startswith('#wall mod=2 mode=periodic 6 rows=5\n')
    assert read_wall(text).terminal_zero_row == 5


def test_wall_needs_a_segment(app_config):  # noqa: F811
    result = invoke('wall', '--builtin', 'pagoda', '--rows', '4')
    assert result.exit_code == 2
    assert 'give --segment LENGTH' in result.output


def test_wall_to_file(app_config, no_output_dir):  # noqa: F811
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ['wall', '--builtin', 'knight', '--segment', '17', '--start', '-8',
                                     '--rows', '8', '--check', '10', '--out', 'knight.wall'],
                               catch_exceptions=False)
        assert result.exit_code == 0
        assert 'Wrote knight.wall' in result.output
        wall = load_wall('knight.wall')
    assert wall.start == -8
    assert wall.max_row == 8


def test_wall_output_dir(monkeypatch, tmp_path, app_config):  # noqa: F811
    monkeypatch.setenv('NUMWALL_OUTPUT_DIR', str(tmp_path / 'out'))
    invoke('wall', '--builtin', 'rueppel', '--segment', '16', '--rows', '7', '--out', 'rueppel.wall')
    assert load_wall(tmp_path / 'out' / 'rueppel.wall').width == 16
    assert output_path(str(tmp_path / 'elsewhere.wall')) == tmp_path / 'elsewhere.wall'


def test_wall_naive_engine(app_config):  # noqa: F811
    result = invoke('wall', '--builtin', 'libran', '--mod', '1000003', '--seed', '3', '--segment', '13',
                    '--rows', '6', '--engine', 'naive')
    assert result.exit_code == 0
    with pytest.raises(WallZeroDivision):
        invoke('wall', '--builtin', 'rueppel', '--segment', '32', '--rows', '8', '--engine', 'naive')


def test_main_reports_zero_division(monkeypatch, capsys, app_config):  # noqa: F811
    monkeypatch.setattr('sys.argv', ['numwall', 'wall', '--builtin', 'rueppel', '--segment', '32',
                                     '--rows', '8', '--engine', 'naive'])
    with pytest.raises(SystemExit):
        main()
    out, err = capsys.readouterr()
    assert 'Division by zero computing entry m=2, n=2' in err
    assert 'use the frame engine instead' in err


def test_render(app_config, no_output_dir):  # noqa: F811
    runner = CliRunner()
    with runner.isolated_filesystem():
        runner.invoke(cli, ['wall', '--builtin', 'knight', '--segment', '17', '--start', '-8', '--rows', '8',
                            '--out', 'knight.wall'], catch_exceptions=False)
        result = runner.invoke(cli, ['render', '--wall', 'knight.wall', '--scale', '2', '--palette', 'rainbow',
                                     '--out', 'knight.ppm'], catch_exceptions=False)
        assert result.exit_code == 0
        with open('knight.ppm', 'rb') as fd:
            image = fd.read()
        assert image.startswith(b'P6\n34 22\n255\n')
        runner.invoke(cli, ['render', '--builtin', 'pagoda', '--segment', '9', '--rows', '4', '--quarter-turn',
                            '--out', 'pagoda.ppm'], catch_exceptions=False)
        with open('pagoda.ppm', 'rb') as fd:
            assert fd.read().startswith(b'P6\n7 9\n255\n')
        result = runner.invoke(cli, ['render', '--wall', 'nothing.wall'], catch_exceptions=False)
        assert '"nothing.wall" not found' in result.output


def test_census(app_config):  # noqa: F811
    result = invoke('census', '--builtin', 'rueppel', '--segment', '48', '--rows', '64')
    assert result.exit_code == 0
    assert 'Windows' in result.output
    assert '600 entries in rows 0..23, 2 clipped windows left out' in result.output
    result = invoke('census', '--builtin', 'rueppel', '--segment', '48', '--rows', '64', '--chi2')
    assert 'df=3' in result.output
    assert result.exit_code == 1


def test_census_needs_a_field(app_config):  # noqa: F811
    result = invoke('census', '--builtin', 'pagoda', '--mod', 'Z', '--segment', '20', '--rows', '4')
    assert result.exit_code == 2
    assert 'need a prime modulus' in result.output
    result = invoke('census', '--builtin', 'pagoda', '--segment', '20', '--region-rows', '5:x')
    assert 'is not a range like 0:511' in result.output


def test_deficiency(app_config):  # noqa: F811
    result = invoke('deficiency', '--period', '111010', '--mod', '2', '--d', '2')
    assert 'depth=5 t=6 r=5' in result.output
    result = invoke('deficiency', '--builtin', 'rueppel', '--segment', '48', '--rows', '64', '--d', '20')
    assert 'depth=24' in result.output
    assert 'lower bound' in result.output
    assert invoke('deficiency', '--period', '111010').exit_code == 2


def test_search(app_config):  # noqa: F811
    result = invoke('search', '--mod', '2', '--d', '2', '--max-period', '8')
    assert result.exit_code == 0
    assert 'depth=5' in result.output
    result = invoke('search', '--mod', 'Z', '--d', '1')
    assert result.exit_code == 2
    assert 'search needs a prime modulus' in result.output
    with pytest.raises(EffortExhausted):
        invoke('search', '--d', '2', '--max-period', '8', '--max-nodes', '3')


def test_search_uses_configuration(app_config):  # noqa: F811
    app_config['search.max_period'] = '2'
    result = invoke('search', '--mod', '2', '--d', '2')
    assert 'Searching periods 1..2' in result.output


def test_zerocheck(app_config):  # noqa: F811
    result = invoke('zerocheck', '--builtin', 'pagoda', '--segment', '81', '--start', '-40', '--rows', '40')
    assert 'zero density 252/1681' in result.output
    assert '0 violations' in result.output
    assert result.exit_code == 0
    result = invoke('zerocheck', '--builtin', 'knight', '--segment', '65', '--start', '-32', '--rows', '32',
                    '--rule', 'knight', '--cone', '0:0')
    assert 'zero density 1/5' in result.output
    assert '|n - 0| <= m - 0' in result.output
    result = invoke('zerocheck', '--builtin', 'knight', '--segment', '17', '--start', '-8', '--rows', '8')
    assert result.exit_code == 1
    assert 'Zeros break the pagoda rule' in result.output


def test_powerfree():
    result = invoke('powerfree', '--builtin', 'thue-morse', '--terms', '1000', '--power', '3')
    assert 'No cube with period >= 1 in 1000 terms' in result.output
    assert result.exit_code == 0
    result = invoke('powerfree', '--builtin', 'thue-morse', '--terms', '200')
    assert 'squares, longest period' in result.output
    assert result.exit_code == 1
    result = invoke('powerfree', '--builtin', 'nosquare4', '--terms', '500', '--max-square-len', '4')
    assert result.exit_code == 0


def test_survey():
    result = invoke('survey', '--primes', '3', '--length', '41', '--rows', '20')
    assert result.exit_code == 0
    assert 'Isolated only' in result.output
    result = invoke('survey', '--primes', '3,4')
    assert result.exit_code == 2
    assert '4 is not a prime modulus' in result.output


def test_tiling_density():
    result = invoke('tiling', 'density')
    assert 'zero density 3/20' in result.output
    assert result.exit_code == 0


def test_tiling_verify():
    result = invoke('tiling', 'verify', '--radius', '16')
    assert '0 mismatches' in result.output
    assert 'Tiling matches the wall' in result.output
    assert 'Seed: 2AI@(-2, 0)' in result.output


def test_tiling_audit():
    result = invoke('tiling', 'audit', '--level', '4')
    assert result.exit_code == 0
    assert 'failing tiles [1, 2]' in result.output


def test_tiling_broken_table(tmp_path):
    from numwall.tiling.tiles import TILES_FILE
    path = write_file(tmp_path, 'tiles.txt', TILES_FILE.read_text().replace('symm AI BI', 'symm AI CI', 1))
    result = invoke('tiling', 'audit', '--tiles', str(path), '--level', '2')
    assert result.exit_code == 1
    assert 'Audit failed' in result.output
