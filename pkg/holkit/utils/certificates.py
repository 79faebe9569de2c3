"""
Operations behind the command line, and the certificates they emit.

Each operation takes its inputs as text, parses them, and returns the
canonical text of the inputs together with the text of its outputs. A
certificate records both, so running the named operation again on the
recorded inputs must reproduce the recorded outputs.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from holkit.errors import HolkitError, ParseError
from holkit.models.endomorphism import Endomorphism
from holkit.models.fgroup import FElement
from holkit.models.holomorph import HolElement
from holkit.models.intmat import IntMatrix2
from holkit.models.pi import PiElement
from holkit.models.word import AB, Word
from holkit.parsing import (parse_alphabet, parse_endomorphism, parse_f, parse_hol,
                            parse_matrix, parse_pi, parse_semidirect, parse_word)
from holkit.utils.decomposition import decompose_f, is_inner
from holkit.utils.embeddings import corollary_injection, embed_e, semidirect_standard_tables
from holkit.utils.pi_embed import embed_pi, map_f1, map_f2, pi_normal_form
from holkit.utils.random_checks import Limits, random_check
from holkit.utils.relations import CORRUPTED_RELATION, verify_relations
from holkit.utils.sanov import sanov_rewrite

logger = logging.getLogger(__name__)


class Outcome(NamedTuple):
    inputs: list
    outputs: list
    passed: bool = True


@dataclass
class Certificate:
    kind: str
    inputs: list
    outputs: list
    seed: Optional[int] = None
    verdict: str = 'pass'
    error: Optional[HolkitError] = field(default=None, compare=False, repr=False)

    @property
    def passed(self):
        return self.verdict == 'pass'

    def to_dict(self):
        return {
            'kind': self.kind,
            'inputs': list(self.inputs),
            'outputs': list(self.outputs),
            'seed': self.seed,
            'verdict': self.verdict,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, record):
        return cls(record['kind'], list(record['inputs']), list(record['outputs']),
                   record.get('seed'), record.get('verdict', 'pass'))

    def __repr__(self):
        return f'<Certificate {self.kind} {self.verdict}>'


OPERATIONS = {}


def operation(kind):
    """Register ``func(*inputs, seed=None, **options) -> Outcome`` under ``kind``."""
    def register(func):
        OPERATIONS[kind] = func
        return func
    return register


def _texts(*values):
    return [str(value) for value in values]


def _product(elements, identity):
    result = identity
    for element in elements:
        result = result * element
    return result


# ==================== Words ====================

@operation('word.reduce')
def _reduce(alphabet, word, seed=None):
    alphabet = parse_alphabet(alphabet)
    return Outcome([str(alphabet), word], _texts(parse_word(word, alphabet)))


@operation('word.mul')
def _word_mul(alphabet, *words, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = [parse_word(word, alphabet) for word in words]
    return Outcome(_texts(alphabet, *parsed), _texts(_product(parsed, Word.identity(alphabet))))


@operation('word.inv')
def _word_inv(alphabet, word, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = parse_word(word, alphabet)
    return Outcome(_texts(alphabet, parsed), _texts(parsed.inverse()))


# ==================== Group elements ====================

def _hol_texts(elements):
    return [element.to_text(witness=True) for element in elements]


@operation('hol.mul')
def _hol_mul(alphabet, *elements, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = [parse_hol(element, alphabet) for element in elements]
    product = _product(parsed, HolElement.identity(alphabet))
    return Outcome([str(alphabet)] + _hol_texts(parsed), _hol_texts([product]))


@operation('hol.inv')
def _hol_inv(alphabet, element, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = parse_hol(element, alphabet)
    return Outcome([str(alphabet)] + _hol_texts([parsed]), _hol_texts([parsed.inverse()]))


@operation('f.mul')
def _f_mul(*elements, seed=None):
    parsed = [parse_f(element) for element in elements]
    return Outcome(_texts(*parsed), _texts(_product(parsed, FElement.identity())))


@operation('f.inv')
def _f_inv(element, seed=None):
    parsed = parse_f(element)
    return Outcome(_texts(parsed), _texts(parsed.inverse()))


@operation('pi.mul')
def _pi_mul(*elements, seed=None):
    parsed = [parse_pi(element) for element in elements]
    return Outcome(_texts(*parsed), _texts(_product(parsed, PiElement.identity())))


@operation('pi.inv')
def _pi_inv(element, seed=None):
    parsed = parse_pi(element)
    return Outcome(_texts(parsed), _texts(parsed.inverse()))


# ==================== Maps ====================

@operation('endo.apply')
def _apply(alphabet, endo, word, seed=None):
    alphabet = parse_alphabet(alphabet)
    phi = parse_endomorphism(endo, alphabet)
    w = parse_word(word, alphabet)
    return Outcome(_texts(alphabet, phi, w), _texts(phi.apply(w)))


@operation('endo.compose')
def _compose(alphabet, *endos, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = [parse_endomorphism(endo, alphabet) for endo in endos]
    result = Endomorphism.identity(alphabet)
    for endo in parsed:
        result = result.compose(endo)
    return Outcome(_texts(alphabet, *parsed), _texts(result))


@operation('endo.abelianize')
def _abelianize(alphabet, endo, seed=None):
    alphabet = parse_alphabet(alphabet)
    phi = parse_endomorphism(endo, alphabet)
    matrix = phi.abelianize()
    if isinstance(matrix, IntMatrix2):
        matrix = matrix.to_sympy()
    # same [[p,q],[r,s]] text as IntMatrix2 at every rank
    text = str(matrix.tolist()).replace(' ', '')
    return Outcome(_texts(alphabet, phi), [text])


@operation('sanov.rewrite')
def _sanov_rewrite(matrix, seed=None):
    parsed = parse_matrix(matrix)
    return Outcome(_texts(parsed), _texts(sanov_rewrite(parsed)))


@operation('endo.is-inner')
def _is_inner(alphabet, endo, seed=None):
    alphabet = parse_alphabet(alphabet)
    phi = parse_endomorphism(endo, alphabet)
    return Outcome(_texts(alphabet, phi), _texts(is_inner(phi)))


@operation('f.decompose')
def _decompose_f(endo, seed=None):
    phi = parse_endomorphism(endo, AB)
    return Outcome(_texts(phi), _texts(decompose_f(phi)))


# ==================== pi and embeddings ====================

@operation('pi.normal-form')
def _nf_pi(element, seed=None):
    parsed = parse_hol(element, AB)
    return Outcome(_hol_texts([parsed]), _texts(pi_normal_form(parsed)))


@operation('pi.f1')
def _f1(element, seed=None):
    parsed = parse_pi(element)
    return Outcome(_texts(parsed), _texts(map_f1(parsed)))


@operation('pi.f2')
def _f2(element, seed=None):
    parsed = parse_pi(element)
    return Outcome(_texts(parsed), _texts(map_f2(parsed)))


@operation('pi.embed-ff')
def _embed_ff(element, seed=None):
    parsed = parse_pi(element)
    return Outcome(_texts(parsed), _texts(*embed_pi(parsed)))


@operation('hol.embed-aut3')
def _embed_aut3(m, alphabet, element, seed=None):
    alphabet = parse_alphabet(alphabet)
    parsed = parse_hol(element, alphabet)
    return Outcome([str(int(m)), str(alphabet)] + _hol_texts([parsed]),
                   _texts(embed_e(int(m), parsed)))


def _table(name):
    tables = semidirect_standard_tables()
    if name not in tables:
        raise ParseError(f"unknown action table '{name}' (choose from {', '.join(tables)})")
    return tables[name]


@operation('semidirect.mul')
def _semidirect_mul(table_name, *elements, seed=None):
    table = _table(table_name)
    parsed = [parse_semidirect(element, table) for element in elements]
    return Outcome([table_name] + _texts(*parsed), _texts(_product(parsed, table.identity())))


@operation('semidirect.inject')
def _semidirect_inject(table_name, element, seed=None):
    table = _table(table_name)
    parsed = parse_semidirect(element, table)
    p, h = corollary_injection(parsed)
    return Outcome([table_name, str(parsed)], [p.to_text(witness=True), str(h)])


# ==================== Checks ====================

@operation('relations.verify')
def _verify_relations(table, control='no-control', seed=None):
    extra = [CORRUPTED_RELATION] if control == 'control' else []
    results = verify_relations(extended=(table == 'extended'), extra=extra)
    table_results = results[:len(results) - len(extra)]
    passed = all(result.passed for result in table_results)
    if extra:
        passed = passed and not results[-1].passed
    return Outcome([table, control], _texts(*results), passed)


@operation('random.check')
def _random_check(suite, count, limits, chunk_size='250', seed=None, workers=1):
    # chunking fixes the PRNG streams, so the chunk size is part of the inputs
    report = random_check(suite, int(count), seed, Limits.parse(limits), workers, int(chunk_size))
    return Outcome([suite, str(report.count), limits, str(int(chunk_size))],
                   _texts(report) + list(report.failures), report.passed)


def run_operation(kind, inputs, seed=None, **options):
    """
    Run a registered operation and wrap the result in a certificate.

    Mathematical failures (exit code 1) become a ``fail`` verdict whose
    outputs name the error; input errors propagate.

    Args:
        kind: Key of OPERATIONS
        inputs: Text inputs
        seed: Seed for randomized operations
        options: Execution settings that do not change the outputs (workers, chunk size)

    Returns:
        Certificate
    """
    func = OPERATIONS[kind]
    try:
        outcome = func(*inputs, seed=seed, **options)
    except HolkitError as exc:
        if exc.exit_code != 1:
            raise
        outputs = [type(exc).__name__]
        if hasattr(exc, 'reason'):
            outputs.append(exc.reason)
        logger.info('%s failed: %s', kind, exc)
        return Certificate(kind, list(inputs), outputs, seed, 'fail', exc)
    verdict = 'pass' if outcome.passed else 'fail'
    return Certificate(kind, list(outcome.inputs), list(outcome.outputs), seed, verdict)


def replay_certificate(record, **options):
    """
    Re-run a certificate and compare.

    Args:
        record: Certificate, dict, or JSON text of one record

    Returns:
        bool: True when the recorded outputs and verdict are reproduced exactly
    """
    if isinstance(record, str):
        record = json.loads(record)
    if isinstance(record, dict):
        record = Certificate.from_dict(record)
    if record.kind not in OPERATIONS:
        logger.warning('cannot replay unknown operation %s', record.kind)
        return False
    try:
        replayed = run_operation(record.kind, record.inputs, record.seed, **options)
    except HolkitError as exc:
        logger.warning('replay of %s rejected its inputs: %s', record.kind, exc)
        return False
    matches = replayed.outputs == record.outputs and replayed.verdict == record.verdict
    if not matches:
        logger.warning('replay of %s produced %s, recorded %s',
                       record.kind, replayed.outputs, record.outputs)
    return matches
