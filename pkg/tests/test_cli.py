import json

import pytest

from holkit import run
from holkit.utils.certificates import Certificate, replay_certificate, run_operation


def lines(result):
    return result.stdout.splitlines()


class TestArithmeticCommands:
    def test_pi_product(self, invoke):
        result = invoke('mul', '--group', 'pi', '(a;;)', '(;ta;)')
        assert result.exit_code == 0
        assert result.stdout == '(a ; ta ; 1)\n'

    def test_word_commands(self, invoke):
        assert invoke('reduce', 'a b b^-1 a').stdout == 'a^2\n'
        assert invoke('mul', 'a b', 'b^-1 a').stdout == 'a^2\n'
        assert invoke('inv', 'a b').stdout == 'b^-1 a^-1\n'
        assert invoke('reduce', '--alphabet', 'x,y,z', 'x z z^-1 y').stdout == 'x y\n'

    def test_f_inverse(self, invoke):
        assert invoke('inv', '--group', 'f', '(a ; x1)').stdout == '(b^2 a^-1 ; x1^-1)\n'

    def test_hol_product_prints_witness(self, invoke):
        result = invoke('mul', '--group', 'hol', '(1 ; b -> b a^2)', '(b ; id)')
        assert result.stdout == '(b a^2 ; a -> a; b -> b a^2 | a -> a; b -> b a^-2)\n'

    def test_maps(self, invoke):
        assert invoke('apply', 'a -> a b^2', 'a').stdout == 'a b^2\n'
        assert invoke('compose', 'a -> a b^2', 'a -> a b^2').stdout == 'a -> a b^4; b -> b\n'
        assert invoke('ab', 'a -> a b^2').stdout == '[[1,0],[2,1]]\n'
        assert invoke('ab', 'b -> b a^2').stdout == '[[1,2],[0,1]]\n'
        rank_three = invoke('ab', '--alphabet', 'a,b,c', 'a -> a b; c -> c^-1')
        assert rank_three.stdout == '[[1,0,0],[1,1,0],[0,0,-1]]\n'
        assert invoke('is-inner', 'a -> b a b^-1').stdout == 'b\n'

    def test_sanov_rewrite(self, invoke):
        assert invoke('sanov-rewrite', '[[5,2],[2,1]]').stdout == 'sign=+1 word=A1 A2\n'
        assert invoke('sanov-rewrite', '[[-1,0],[0,-1]]').stdout == 'sign=-1 word=1\n'

    def test_decompose_f(self, invoke):
        result = invoke('decompose-f', 'a -> a^2 b^2 a^-1; b -> a b a^-1')
        assert result.exit_code == 0
        assert result.stdout == '(a ; x1)\n'


class TestPiCommands:
    def test_normal_form(self, invoke):
        assert invoke('nf-pi', '(a ; a -> b a b^-1)').stdout == '(a b ; tb ; 1)\n'

    def test_projections(self, invoke):
        assert invoke('f1', '(a b ; tb ; )').stdout == '(a b ; 1)\n'
        assert invoke('f2', '(a b ; tb ; )').stdout == '(b ; 1)\n'
        assert lines(invoke('embed-ff', '( ; ta ; )')) == ['(1 ; 1)', '(a ; 1)']

    def test_embed_aut3(self, invoke):
        result = invoke('embed-aut3', '(a b ; id)')
        assert result.stdout == 'a -> a; b -> b; z1 -> b^-1 a^-1 z1 a b\n'

    def test_semidirect(self, invoke):
        assert invoke('semidirect', '--table', 'z', '(a ; t)', '(b ; 1)').stdout == '(a b ; t)\n'
        product = invoke('semidirect', '--table', 'x', '(1 ; s1)', '(a ; 1)')
        assert product.stdout == '(a b^2 ; s1)\n'

    def test_semidirect_inject(self, invoke):
        result = invoke('semidirect', '--table', 'z', '--inject', '(a ; t)')
        assert lines(result) == ['(a ; a -> b a b^-1; b -> b | a -> b^-1 a b; b -> b)', 't']

    def test_inject_takes_one_element(self, invoke):
        assert invoke('semidirect', '--inject', '(a ; t)', '(b ; t)').exit_code == 2


class TestVerification:
    def test_relations(self, invoke):
        result = invoke('verify-relations')
        assert result.exit_code == 0
        assert len(lines(result)) == 16
        assert all(line.startswith('PASS ') for line in lines(result))

    def test_relations_with_control(self, invoke):
        result = invoke('verify-relations', '--extended', '--with-control')
        assert result.exit_code == 0
        assert len(lines(result)) == 23
        assert lines(result)[-1] == 'FAIL x1 a x1^-1 = a b'

    def test_random_check(self, invoke):
        result = invoke('random-check', '--suite', 'sanov-roundtrip', '--count', '40', '--seed', '7')
        assert result.exit_code == 0
        assert result.stdout == 'PASS sanov-roundtrip count=40 seed=7\n'

    def test_random_check_is_deterministic(self, invoke):
        args = ('--format', 'records', 'random-check', '--suite', 'pi-mul', '--count', '30')
        assert invoke(*args).stdout == invoke(*args).stdout

    def test_workers_do_not_change_output(self, invoke):
        args = ('random-check', '--suite', 'embed-ff', '--count', '60', '--seed', '5')
        assert invoke(*args, '--workers', '2').stdout == invoke(*args, '--workers', '1').stdout

    def test_seed_from_environment(self, app, runner):
        result = runner.invoke(app, ['random-check', '--suite', 'words-axioms', '--count', '10'],
                               env={'HOLKIT_SEED': '11'})
        assert result.stdout == 'PASS words-axioms count=10 seed=11\n'

    def test_unknown_suite(self, invoke):
        result = invoke('random-check', '--suite', 'nope', '--count', '5')
        assert result.exit_code == 2
        assert 'unknown suite' in result.stderr


class TestExitCodes:
    def test_not_in_f(self, invoke):
        result = invoke('decompose-f', 'a -> b; b -> a')
        assert result.exit_code == 1
        assert result.stdout == ''
        assert result.stderr.startswith('error: not in F (NotCongruent)')

    def test_not_congruent(self, invoke):
        assert invoke('sanov-rewrite', '[[1,1],[0,1]]').exit_code == 1

    def test_parse_error(self, invoke):
        result = invoke('reduce', 'a b^x')
        assert result.exit_code == 2
        assert 'position' in result.stderr

    def test_huge_exponent_is_a_parse_error(self, invoke):
        result = invoke('reduce', 'a^99999999999999999999')
        assert result.exit_code == 2
        assert 'longer than' in result.stderr

    def test_unknown_generator(self, invoke):
        assert invoke('reduce', 'a c').exit_code == 2

    def test_usage_errors(self, invoke):
        assert invoke('frobnicate').exit_code == 2
        assert invoke('mul', '--group', 'ring', 'a').exit_code == 2
        assert invoke('random-check', '--count', '0').exit_code == 2

    def test_run_returns_exit_codes(self, capsys):
        assert run(['mul', '--group', 'pi', '(a;;)', '(;ta;)']) == 0
        assert capsys.readouterr().out == '(a ; ta ; 1)\n'
        assert run(['decompose-f', 'a -> a^-1; b -> b^-1']) == 1
        assert 'MinusSign' in capsys.readouterr().err
        assert run(['no-such-command']) == 2
        assert run(['reduce', 'a ^']) == 2


class TestCertificates:
    def test_records_format(self, invoke):
        result = invoke('--format', 'records', 'mul', 'a', 'b')
        record = json.loads(result.stdout)
        assert record == {
            'kind': 'word.mul', 'inputs': ['a,b', 'a', 'b'], 'outputs': ['a b'],
            'seed': None, 'verdict': 'pass',
        }

    def test_failure_record(self, invoke):
        result = invoke('--format', 'records', 'decompose-f', 'a -> a^-1; b -> b^-1')
        assert result.exit_code == 1
        record = json.loads(result.stdout)
        assert record['verdict'] == 'fail'
        assert record['outputs'] == ['NotInF', 'MinusSign']
        assert replay_certificate(record)

    @pytest.mark.parametrize('kind, inputs', [
        ('word.reduce', ['a,b', 'a b b^-1 a']),
        ('hol.mul', ['a,b', '(a ; b -> b a^2)', '(b ; a -> b a b^-1)']),
        ('pi.mul', ['( ; ; x1)', '( ; ta ; )', '( ; ; x1^-1)']),
        ('f.decompose', ['a -> a^2 b^2 a^-1; b -> a b a^-1']),
        ('pi.normal-form', ['(a ; a -> b a b^-1)']),
        ('hol.embed-aut3', ['2', 'a,b', '(a ; a -> a b^2)']),
        ('semidirect.inject', ['x', '(a b ; s2^-1 s1)']),
        ('relations.verify', ['extended', 'control']),
    ])
    def test_replay(self, kind, inputs):
        certificate = run_operation(kind, inputs)
        assert replay_certificate(certificate.to_json())

    def test_replay_random_check(self):
        certificate = run_operation('random.check', ['hol-axioms', '20', 'word=8 x=2 sanov=16', '10'],
                                    seed=4)
        assert certificate.passed
        assert replay_certificate(certificate.to_dict(), workers=2)

    def test_tampered_record_fails(self):
        record = run_operation('word.mul', ['a,b', 'a', 'b']).to_dict()
        record['outputs'] = ['b a']
        assert not replay_certificate(record)

    def test_replay_command(self, invoke, tmp_path):
        records = [
            run_operation('word.inv', ['a,b', 'a b']).to_json(),
            Certificate('word.inv', ['a,b', 'a b'], ['a b']).to_json(),
        ]
        path = tmp_path / 'records.jsonl'
        path.write_text('\n'.join(records) + '\n')
        result = invoke('replay', str(path))
        assert result.exit_code == 1
        assert lines(result) == ['PASS word.inv', 'FAIL word.inv']
