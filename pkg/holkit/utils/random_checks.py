"""
Seeded randomized invariant suites.

Every suite draws its cases from a ``random.Random`` stream, so a run is fully
determined by (suite, count, seed, limits). Cases are split into chunks; chunk
``i`` gets its own stream seeded with ``derive_seed(seed, i)``, which keeps
the result independent of how many workers process the chunks.
"""

import logging
import random
from dataclasses import dataclass, field

from joblib import Parallel, delayed

from holkit.errors import HolkitError, UnknownSuite
from holkit.models.endomorphism import SWAP, Automorphism, inner
from holkit.models.fgroup import FElement
from holkit.models.holomorph import HolElement, hol_eq
from holkit.models.pi import PiElement, t_transcribe
from holkit.models.word import AB, SANOV, TATB, X12, Word
from holkit.utils.decomposition import decompose_f, is_inner
from holkit.utils.embeddings import corollary_injection, embed_e, semidirect_standard_tables
from holkit.utils.pi_embed import (embed_pi, pi_from_normal_form, pi_mul_via_hol,
                                   pi_normal_form, unembed_pi)
from holkit.utils.sanov import eval_sanov, sanov_rewrite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    """Length caps for generated words."""

    word: int = 32
    x: int = 6
    sanov: int = 64

    @classmethod
    def from_config(cls, config):
        return cls(config.MAX_WORD_LENGTH, config.MAX_X_LENGTH, config.SANOV_MAX_LENGTH)

    @classmethod
    def parse(cls, text):
        """'word=32 x=6 sanov=64' -> Limits(32, 6, 64)"""
        values = dict(item.split('=', 1) for item in text.split())
        return cls(int(values['word']), int(values['x']), int(values['sanov']))

    def __str__(self):
        return f'word={self.word} x={self.x} sanov={self.sanov}'


class RandomElements:
    """Random reduced words and group elements drawn from one PRNG stream."""

    def __init__(self, rng, limits=Limits()):
        self.rng = rng
        self.limits = limits

    def word(self, alphabet, max_length=None, min_length=0):
        """
        Uniform letters with no immediate cancellation, so the result is reduced as drawn.

        Args:
            alphabet: Alphabet of the word
            max_length: Length cap, defaults to the word limit
            min_length: Lower bound on the length
        """
        max_length = self.limits.word if max_length is None else max_length
        length = self.rng.randint(min_length, max_length)
        choices = [sign * index for index in range(1, alphabet.rank + 1) for sign in (1, -1)]
        letters = []
        for _ in range(length):
            options = [c for c in choices if not letters or c != -letters[-1]]
            letters.append(self.rng.choice(options))
        return Word(alphabet, tuple(letters))

    def x_word(self, min_length=0):
        return self.word(X12, self.limits.x, min_length)

    def sanov_word(self):
        return self.word(SANOV, self.limits.sanov)

    def f_element(self):
        return FElement(self.word(AB), self.x_word())

    def pi_element(self):
        return PiElement(self.word(AB), self.word(TATB), self.x_word())

    def automorphism(self) -> Automorphism:
        """Element of F, composed with the swap half of the time so it can leave F."""
        phi = self.f_element().to_automorphism()
        if self.rng.random() < 0.5:
            phi = SWAP.compose(phi)
        return phi

    def hol_element(self):
        return HolElement(self.word(AB), self.automorphism())


# ==================== Suites ====================
# A suite takes a RandomElements and returns a failure message, or None.

def _words_axioms(draw):
    u, v, w = draw.word(AB), draw.word(AB), draw.word(AB)
    if (u * v) * w != u * (v * w):
        return f'associativity fails for {u} | {v} | {w}'
    if not (u * u.inverse()).is_identity():
        return f'{u} times its inverse is not trivial'
    if Word.reduce(u.letters + v.letters, AB) != u * v:
        return f'reduce disagrees with mul on {u} | {v}'
    conjugator, core = u.cyclic_decompose()
    if not core.is_cyclically_reduced() or conjugator * core * conjugator.inverse() != u:
        return f'cyclic decomposition of {u} is wrong'
    return None


def _sanov_roundtrip(draw):
    word = draw.sanov_word()
    matrix = eval_sanov(word)
    certificate = sanov_rewrite(matrix)
    if (certificate.word, certificate.sign) != (word, 1):
        return f'{word} rewrote to {certificate}'
    negated = sanov_rewrite(-matrix)
    if (negated.word, negated.sign) != (word, -1):
        return f'-({word}) rewrote to {negated}'
    return None


def _f_roundtrip(draw):
    e = draw.f_element()
    recovered = decompose_f(e.to_automorphism())
    if recovered != e:
        return f'{e} decomposed back to {recovered}'
    return None


def _f_mul(draw):
    e1, e2 = draw.f_element(), draw.f_element()
    if (e1 * e2).to_automorphism() != e1.to_automorphism().compose(e2.to_automorphism()):
        return f'f_mul disagrees with composition on {e1} | {e2}'
    if not (e1 * e1.inverse()).is_identity():
        return f'{e1} times its inverse is not trivial'
    return None


def _inner_recovery(draw):
    w = draw.word(AB, draw.limits.sanov)
    recovered = is_inner(inner(w))
    if recovered != w:
        return f'is_inner(inner({w})) returned {recovered}'
    return None


def _pi_roundtrip(draw):
    e = draw.pi_element()
    p = pi_from_normal_form(e)
    if pi_normal_form(p) != e:
        return f'{e} did not survive the normal-form roundtrip'
    if not hol_eq(pi_from_normal_form(pi_normal_form(p)), p):
        return f'{p} did not survive the Hol roundtrip'
    w = draw.word(AB)
    transcribed = pi_normal_form(HolElement.from_automorphism(inner(w)))
    if transcribed != PiElement(w, t_transcribe(w), Word.identity(X12)):
        return f'tau_{w} has normal form {transcribed}'
    return None


def _pi_mul(draw):
    e1, e2 = draw.pi_element(), draw.pi_element()
    if e1 * e2 != pi_mul_via_hol(e1, e2):
        return f'rewriting and Hol products differ on {e1} | {e2}'
    if not (e1 * e1.inverse()).is_identity():
        return f'{e1} times its inverse is not trivial'
    return None


def _embed_ff(draw):
    e1, e2 = draw.pi_element(), draw.pi_element()
    (a1, b1), (a2, b2) = embed_pi(e1), embed_pi(e2)
    if embed_pi(e1 * e2) != (a1 * a2, b1 * b2):
        return f'f1 x f2 is not multiplicative on {e1} | {e2}'
    if e1 != e2 and (a1, b1) == (a2, b2):
        return f'{e1} and {e2} have the same image'
    if unembed_pi(a1, b1) != e1:
        return f'{e1} not recovered from its image'

    identity_x = Word.identity(X12)
    kernel_elements = (
        PiElement(Word.identity(AB), draw.word(TATB, min_length=1), identity_x),
        PiElement(draw.word(AB, min_length=1), Word.identity(TATB), identity_x),
    )
    for e in kernel_elements:
        first, second = embed_pi(e)
        if first.is_identity() and second.is_identity():
            return f'nontrivial {e} maps to the identity'
    return None


def _embed_aut3(draw):
    p, q = draw.hol_element(), draw.hol_element()
    if embed_e(1, p * q) != embed_e(1, p).compose(embed_e(1, q)):
        return f'E is not multiplicative on {p} | {q}'
    if not p.is_identity() and embed_e(1, p).is_identity():
        return f'nontrivial {p} maps to the identity of Aut(F3)'
    return None


def _corollary(draw):
    for name, table in semidirect_standard_tables().items():
        e1 = table.element(draw.word(table.fiber), draw.word(table.base, draw.limits.x))
        e2 = table.element(draw.word(table.fiber), draw.word(table.base, draw.limits.x))
        p1, h1 = corollary_injection(e1)
        p2, h2 = corollary_injection(e2)
        p12, h12 = corollary_injection(e1 * e2)
        if not hol_eq(p12, p1 * p2) or h12 != h1 * h2:
            return f'injection is not multiplicative over table {name} on {e1} | {e2}'
        if e1 != e2 and hol_eq(p1, p2) and h1 == h2:
            return f'{e1} and {e2} collide over table {name}'
    return None


def _hol_axioms(draw):
    p, q, r = draw.hol_element(), draw.hol_element(), draw.hol_element()
    if not hol_eq((p * q) * r, p * (q * r)):
        return f'associativity fails for {p} | {q} | {r}'
    if not (p * p.inverse()).is_identity() or not (p.inverse() * p).is_identity():
        return f'{p} times its inverse is not trivial'
    if (p * q).phi != p.phi.compose(q.phi):
        return f'projection to Aut(F2) is not multiplicative on {p} | {q}'
    return None


SUITES = {
    'words-axioms': _words_axioms,
    'sanov-roundtrip': _sanov_roundtrip,
    'f-roundtrip': _f_roundtrip,
    'f-mul': _f_mul,
    'inner-recovery': _inner_recovery,
    'pi-roundtrip': _pi_roundtrip,
    'pi-mul': _pi_mul,
    'embed-ff': _embed_ff,
    'embed-aut3': _embed_aut3,
    'corollary': _corollary,
    'hol-axioms': _hol_axioms,
}


@dataclass
class SuiteReport:
    suite: str
    count: int
    seed: int
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            'suite': self.suite,
            'count': self.count,
            'seed': self.seed,
            'failures': list(self.failures),
            'verdict': 'pass' if self.passed else 'fail',
        }

    def __str__(self):
        status = 'PASS' if self.passed else f'FAIL ({len(self.failures)} failing)'
        return f'{status} {self.suite} count={self.count} seed={self.seed}'

    def __repr__(self):
        return f'<SuiteReport {self}>'


def derive_seed(seed, chunk):
    """Independent 64-bit seed for one chunk of a run."""
    return random.Random(f'{seed}/{chunk}').getrandbits(64)


def _run_chunk(suite, seed, chunk, start, size, limits):
    check = SUITES[suite]
    draw = RandomElements(random.Random(derive_seed(seed, chunk)), limits)
    failures = []
    for case in range(start, start + size):
        try:
            message = check(draw)
        except HolkitError as exc:
            message = f'{type(exc).__name__}: {exc}'
        if message is not None:
            logger.warning('%s case %d (seed %d): %s', suite, case, seed, message)
            failures.append(f'case {case}: {message}')
    return failures


def random_check(suite, count, seed, limits=Limits(), workers=1, chunk_size=250):
    """
    Run one randomized invariant suite.

    Args:
        suite: Name from SUITES
        count: Number of cases, at least 1
        seed: Master seed
        limits: Length caps for generated words
        workers: joblib worker count; 1 runs in process
        chunk_size: Cases per independently seeded chunk

    Returns:
        SuiteReport: failures in case order

    Raises:
        UnknownSuite: if ``suite`` is not registered
    """
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite '{suite}' (choose from {', '.join(SUITES)})")
    if count < 1:
        raise ValueError(f'count must be at least 1, got {count}')

    chunks = [
        (index, start, min(chunk_size, count - start))
        for index, start in enumerate(range(0, count, chunk_size))
    ]
    logger.info('running %s: %d cases in %d chunks, seed %d', suite, count, len(chunks), seed)

    if workers > 1:
        results = Parallel(n_jobs=workers)(
            delayed(_run_chunk)(suite, seed, index, start, size, limits)
            for index, start, size in chunks
        )
    else:
        results = [_run_chunk(suite, seed, index, start, size, limits)
                   for index, start, size in chunks]

    report = SuiteReport(suite, count, seed, [failure for chunk in results for failure in chunk])
    logger.info('%s', report)
    return report
