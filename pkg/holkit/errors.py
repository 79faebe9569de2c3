"""
Exception hierarchy for holkit.

Every error carries an ``exit_code`` so the command layer can turn it into
the right process status: 2 for usage and input problems, 1 for
mathematical failures (an element outside a subgroup, a failed check).
"""


class HolkitError(Exception):
    """Base class for all holkit errors."""

    exit_code = 1


class InvalidGenerator(HolkitError):
    """A generator index or name outside the ambient alphabet."""

    exit_code = 2


class RankMismatch(HolkitError):
    """Two operands live in free groups of different rank or basis."""


class ParseError(HolkitError):
    """Malformed text input."""

    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f'{message} (at position {position})'
        super().__init__(message)
        self.position = position


class NotCongruent(HolkitError):
    """Matrix is not in the level-2 congruence subgroup (det 1, identity mod 2)."""


class NotInSanov(HolkitError):
    """Ping-pong reduction stalled on a congruent matrix."""


class NotInverse(HolkitError):
    """An inverse witness does not compose to the identity."""


class InvalidChi(HolkitError):
    """chi(n, k, i) requested with k == i."""


class GeneratorIndexError(HolkitError, IndexError):
    """chi(n, k, i) requested with an index outside 1..n."""


class NotInner(HolkitError):
    """Automorphism is not conjugation by a word."""


class NotInF(HolkitError):
    """Automorphism of F2 outside the subgroup generated by Inn(F2), x1, x2."""

    REASONS = ('NotCongruent', 'MinusSign', 'NotInner')

    def __init__(self, reason, detail=''):
        if reason not in self.REASONS:
            raise ValueError(f'unknown NotInF reason: {reason}')
        message = f'not in F ({reason})'
        if detail:
            message = f'{message}: {detail}'
        super().__init__(message)
        self.reason = reason


class NotInPi(HolkitError):
    """Holomorph element whose automorphism part lies outside F."""


class UnknownSuite(HolkitError):
    """random-check asked for a suite that does not exist."""

    exit_code = 2
