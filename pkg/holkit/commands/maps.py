"""
Endomorphisms of free groups: application, composition, abelianization and
the decompositions into Sanov words, inner parts and F normal forms.
"""

import click

from holkit.commands import alphabet_option, emit


@click.command('apply')
@alphabet_option
@click.argument('endomorphism')
@click.argument('word')
def apply_command(alphabet, endomorphism, word):
    """Image of WORD under ENDOMORPHISM."""
    emit('endo.apply', [alphabet, endomorphism, word])


@click.command('compose')
@alphabet_option
@click.argument('endomorphisms', nargs=-1, required=True)
def compose_command(alphabet, endomorphisms):
    """Composite of ENDOMORPHISMS; the rightmost is applied first."""
    emit('endo.compose', [alphabet, *endomorphisms])


@click.command('ab')
@alphabet_option
@click.argument('endomorphism')
def ab_command(alphabet, endomorphism):
    """Abelianization matrix, image exponent vectors as columns."""
    emit('endo.abelianize', [alphabet, endomorphism])


@click.command('sanov-rewrite')
@click.argument('matrix')
def sanov_rewrite_command(matrix):
    """Write MATRIX, given as [[p,q],[r,s]], as a sign times a word in A1, A2."""
    emit('sanov.rewrite', [matrix])


@click.command('is-inner')
@alphabet_option
@click.argument('endomorphism')
def is_inner_command(alphabet, endomorphism):
    """Conjugator w with ENDOMORPHISM = tau_w, if there is one."""
    emit('endo.is-inner', [alphabet, endomorphism])


@click.command('decompose-f')
@click.argument('endomorphism')
def decompose_f_command(endomorphism):
    """Normal form (w ; X) of an automorphism of F2 = <a, b> lying in F."""
    emit('f.decompose', [endomorphism])


commands = [
    apply_command, compose_command, ab_command, sanov_rewrite_command,
    is_inner_command, decompose_f_command,
]
