# -*- coding: utf-8 -*-

"""
Tests of the ``gossipmon`` command line interface, run in-process.
"""


from os.path import exists, join

import pytest

from gossipmon._version import get_version
from gossipmon.cli.cli import run
from gossipmon.formats import dump, format_graph, format_matrix, \
    format_word, load, parse_matrix, parse_metadata, parse_word
from gossipmon.semiring import BoolMatrix
from gossipmon.solvers.domination import make_graph


# -- Helpers -----------------------------------------------------------------

@pytest.fixture
def write(tmp_path):
    """
    Returns a function that writes a text file into the temporary directory
    and returns its path.
    """
    def _write(name, text):
        path = str(tmp_path / name)
        dump(path, text)
        return path
    return _write

def _matrix_file(write, name, *rows):
    return write(name, format_matrix(BoolMatrix.from_strings(rows)))


# -- Basics ------------------------------------------------------------------

class TestBasics:

    def test_no_arguments_prints_help(self, capsys):
        assert run([]) == 1
        assert 'usage' in capsys.readouterr().out

    def test_version(self, capsys):
        assert run(['-v']) == 0
        assert capsys.readouterr().out.strip() == get_version()

    def test_description(self, capsys):
        assert run(['-d']) == 0
        assert 'gossipmon' in capsys.readouterr().out

    def test_initialize_writes_configuration(self, tmp_path):
        assert run(['-i', str(tmp_path)]) == 0
        assert exists(str(tmp_path / 'configuration.py'))

    @pytest.mark.parametrize('argv', [['unknown'], ['member'],
                                      ['enumerate', '--n', 'x'],
                                      ['--budget', '1']])
    def test_usage_errors(self, argv, capsys):
        assert run(argv) == 64

    def test_invalid_budget(self, write):
        path = _matrix_file(write, 'a.bmat', '1')
        assert run(['--budget', '0', 'member', path]) == 64


# -- Simulation and enumeration ----------------------------------------------

class TestSimulate:

    def test_word_file(self, write, capsys):
        path = write('gossip.word', '1 2\n2 3\n1 2\n')
        assert run(['simulate', '--n', '3', path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[:4] == ['call 1: 1 2', '110', '110', '001']
        assert lines[-4:] == ['call 3: 1 2', '111', '111', '111']

    def test_random_word(self, capsys):
        assert run(['--seed', '3', 'simulate', '--n', '4', '--random',
                    '5']) == 0
        first = capsys.readouterr().out
        assert run(['--seed', '3', 'simulate', '--n', '4', '--random',
                    '5']) == 0
        assert capsys.readouterr().out == first
        assert first.count('call ') == 5

    def test_word_is_required(self):
        assert run(['simulate', '--n', '3']) == 64

    def test_call_out_of_range(self, write):
        path = write('bad.word', '1 4\n')
        assert run(['simulate', '--n', '3', path]) == 64


class TestEnumerate:

    def test_all_calls(self, capsys):
        assert run(['enumerate', '--n', '3']) == 0
        assert capsys.readouterr().out.strip() == \
            'n=3 mode=AllCalls count=11 diameter=3'

    def test_adjacent_calls_with_idempotents(self, capsys):
        assert run(['enumerate', '--n', '3', '--mode', 'adjacent',
                    '--idempotents']) == 0
        assert capsys.readouterr().out.strip().startswith(
            'n=3 mode=AdjacentCalls count=6 diameter=3 idempotents=')

    def test_idempotents_of_g4(self, capsys):
        assert run(['enumerate', '--n', '4', '--idempotents']) == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith('n=4 mode=AllCalls count=189 ')
        assert line.endswith(' idempotents=15')

    def test_cap_refusal(self):
        assert run(['enumerate', '--n', '5', '--cap', '4']) == 1


# -- Solvers -----------------------------------------------------------------

class TestSolvers:

    def test_member_of_identity(self, write, capsys):
        path = _matrix_file(write, 'i.bmat', '1000', '0100', '0010', '0001')
        assert run(['member', path]) == 0
        assert capsys.readouterr().out == 'yes\nnodes_expanded=0\n'

    def test_member_prints_witness_after_verdict(self, write, capsys):
        path = _matrix_file(write, 'ones.bmat', '11', '11')
        assert run(['member', path]) == 0
        assert capsys.readouterr().out == 'yes\nnodes_expanded=1\n1 2\n'

    def test_member_with_witness(self, write, tmp_path, capsys):
        path = _matrix_file(write, 'ones.bmat', '111', '111', '111')
        out = str(tmp_path / 'ones.word')
        assert run(['member', path, '--witness', out]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'yes'
        assert len(load(out, parse_word)) == 3
        assert run(['verify', 'member', path, '--witness', out]) == 0

    def test_non_member(self, write, capsys):
        path = _matrix_file(write, 'upper.bmat', '11', '01')
        assert run(['member', path]) == 1
        assert capsys.readouterr().out.splitlines()[0] == 'no'

    def test_inconclusive(self, write, capsys):
        path = _matrix_file(write, 'ones.bmat', '1111', '1111', '1111',
                            '1111')
        assert run(['--budget', '1', 'member', path]) == 2
        assert capsys.readouterr().out == \
            'inconclusive\nnodes_expanded=1\n'

    def test_budget_from_configuration_file(self, write):
        matrix = _matrix_file(write, 'ones.bmat', '1111', '1111', '1111',
                              '1111')
        configuration = write('configuration.py', 'budget = 1\n')
        assert run(['--configuration', configuration, 'member',
                    matrix]) == 2
        assert run(['--configuration', configuration, '--budget', '10000',
                    'member', matrix]) == 0

    def test_missing_configuration_file(self, write, tmp_path):
        matrix = _matrix_file(write, 'i.bmat', '1')
        assert run(['--configuration', str(tmp_path / 'none.py'), 'member',
                    matrix]) == 65

    def test_transform(self, write, capsys):
        x = _matrix_file(write, 'x.bmat', '10', '01')
        y = _matrix_file(write, 'y.bmat', '11', '11')
        assert run(['transform', x, y]) == 0
        assert capsys.readouterr().out == 'yes\nnodes_expanded=1\n1 2\n'

    def test_transform_dimension_mismatch(self, write):
        x = _matrix_file(write, 'x.bmat', '10', '01')
        y = _matrix_file(write, 'y.bmat', '111', '111', '111')
        assert run(['transform', x, y]) == 64

    def test_restricted_transform_rejects_malformed(self, write):
        x = _matrix_file(write, 'x.bmat', '11', '01')
        y = _matrix_file(write, 'y.bmat', '11', '11')
        assert run(['transform', '--maximal', x, y]) == 64

    def test_jorder(self, write, tmp_path, capsys):
        x = _matrix_file(write, 'x.bmat', '11', '11')
        y = _matrix_file(write, 'y.bmat', '10', '01')
        left, right = str(tmp_path / 'u.word'), str(tmp_path / 'v.word')
        assert run(['jorder', x, y, '--left-witness', left,
                    '--right-witness', right]) == 0
        out = capsys.readouterr().out
        assert 'left:' in out and 'right:' in out
        assert run(['verify', 'jorder', x, y, '--left-witness', left,
                    '--right-witness', right]) == 0

    def test_jorder_of_non_member(self, write):
        x = _matrix_file(write, 'x.bmat', '11', '11')
        y = _matrix_file(write, 'y.bmat', '11', '01')
        assert run(['jorder', x, y]) == 64

    def test_domset(self, write, tmp_path, capsys):
        graph = write('path.graph', format_graph(
            make_graph(3, [(1, 2), (2, 3)])))
        out = str(tmp_path / 'd.set')
        assert run(['domset', graph, '--k', '1', '--witness', out]) == 0
        assert capsys.readouterr().out == 'yes\n2\n'
        assert run(['verify', 'domset', graph, '--k', '1', '--witness',
                    out]) == 0

    def test_domset_no(self, write, capsys):
        graph = write('empty.graph', '2 0\n')
        assert run(['domset', graph, '--k', '1']) == 1
        assert capsys.readouterr().out == 'no\n'


# -- Reductions --------------------------------------------------------------

class TestReduce:

    def test_ds_mgtp_end_to_end(self, write, tmp_path, capsys):
        graph = write('triangle.graph', '3 3\n1 2\n1 3\n2 3\n')
        output = str(tmp_path)
        assert run(['reduce', 'ds-mgtp', graph, '--k', '1', '--output',
                    output]) == 0
        a, b = join(output, 'A.bmat'), join(output, 'B.bmat')
        assert load(a, parse_matrix).n == 9
        metadata = load(join(output, 'reduction.meta'), parse_metadata)
        assert (metadata.name, metadata.source_n, metadata.k) == \
            ('ds-mgtp', 3, 1)
        capsys.readouterr()
        assert run(['transform', '--maximal', a, b]) == 0
        assert capsys.readouterr().out.startswith('yes\n')

    def test_gtp_gjp(self, write, tmp_path):
        a = _matrix_file(write, 'a.bmat', '10', '01')
        b = _matrix_file(write, 'b.bmat', '11', '11')
        output = str(tmp_path)
        assert run(['reduce', 'gtp-gjp', a, b, '--output', output]) == 0
        x = join(output, 'X.bmat')
        assert load(x, parse_matrix).n == 20
        assert run(['verify', 'member', x, '--witness',
                    join(output, 'X.word')]) == 0
        assert run(['verify', 'member', join(output, 'Y.bmat'),
                    '--witness', join(output, 'Y.word')]) == 0
        assert run(['jorder', '--certified', join(output, 'Y.bmat'),
                    x]) == 0

    def test_mgtp_gmp_with_word(self, write, tmp_path):
        a = _matrix_file(write, 'a.bmat', '10', '01')
        b = _matrix_file(write, 'b.bmat', '11', '11')
        g = write('g.word', '1 2\n')
        output = str(tmp_path)
        assert run(['reduce', 'mgtp-gmp', a, b, '--output', output,
                    '--g-word', g]) == 0
        c = join(output, 'C.bmat')
        assert load(c, parse_matrix).n == 12
        assert run(['verify', 'member', c, '--witness',
                    join(output, 'C.word')]) == 0

    def test_mgtp_gmp_with_wrong_word(self, write, tmp_path):
        a = _matrix_file(write, 'a.bmat', '10', '01')
        b = _matrix_file(write, 'b.bmat', '11', '11')
        g = write('g.word', '')
        assert run(['reduce', 'mgtp-gmp', a, b, '--output', str(tmp_path),
                    '--g-word', g]) == 1


# -- Verification ------------------------------------------------------------

class TestVerify:

    def test_corrupted_witness_is_rejected(self, write, capsys):
        x = _matrix_file(write, 'x.bmat', '100', '010', '001')
        y = _matrix_file(write, 'y.bmat', '111', '111', '111')
        word = write('w.word', format_word(parse_word('1 2\n2 3\n1 2\n')))
        assert run(['verify', 'transform', x, y, '--witness', word]) == 0
        assert capsys.readouterr().out == 'accepted\n'
        broken = write('broken.word', '1 2\n2 3\n')
        assert run(['verify', 'transform', x, y, '--witness', broken]) == 1
        assert capsys.readouterr().out == 'rejected\n'

    def test_out_of_range_witness_is_rejected(self, write):
        a = _matrix_file(write, 'a.bmat', '11', '11')
        word = write('w.word', '1 5\n')
        assert run(['verify', 'member', a, '--witness', word]) == 1


# -- Input errors ------------------------------------------------------------

class TestInputErrors:

    def test_missing_file(self, tmp_path):
        assert run(['member', str(tmp_path / 'missing.bmat')]) == 65

    def test_malformed_matrix(self, write, capsys):
        path = write('bad.bmat', '2\n11\n2\n')
        assert run(['member', path]) == 65
        assert 'line 3' in capsys.readouterr().err

    def test_malformed_graph(self, write):
        path = write('bad.graph', '3 1\n1 1\n')
        assert run(['domset', path, '--k', '1']) == 65

    def test_unexpected_error_is_reported(self, write, monkeypatch, capsys):
        def _broken(graph, k):
            raise RuntimeError('broken solver')
        monkeypatch.setattr('gossipmon.cli.cli.solve_dominating_set',
                            _broken)
        graph = write('path.graph', '2 1\n1 2\n')
        assert run(['domset', graph, '--k', '1']) == 1
        captured = capsys.readouterr()
        assert captured.out == ''
        assert 'CRITICAL - an unexpected error occurred' in captured.err
        assert 'broken solver' in captured.err


# -- Conference calls --------------------------------------------------------

class TestFactorConference:

    def test_four_nodes(self, capsys):
        assert run(['factor-conference', '--n', '4', '--set',
                    '1,2,3,4']) == 0
        assert capsys.readouterr().out == '1 2\n3 4\n1 3\n2 4\n'

    @pytest.mark.parametrize('text', ['1,x', '0,1', '1,7'])
    def test_invalid_sets(self, text):
        assert run(['factor-conference', '--n', '6', '--set', text]) == 64
