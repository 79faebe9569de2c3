"""
Embeddings of Hol(F_n) into Aut(F_{n+m}) and of semidirect products into Hol(F2) x F_k.
"""

import click

from holkit.commands import alphabet_option, emit

TABLES = ('z', 'x')


@click.command('embed-aut3')
@click.option('--m', 'm', type=click.IntRange(min=1), default=1, show_default=True,
              help='Number of extra generators z1..zm.')
@alphabet_option
@click.argument('element')
def embed_aut3_command(m, alphabet, element):
    """Image of the Hol element ELEMENT in Aut(F_{n+m})."""
    emit('hol.embed-aut3', [str(m), alphabet, element])


@click.command('semidirect')
@click.option('--table', type=click.Choice(TABLES), default='z', show_default=True,
              help="z: t acts by tau_b. x: s1, s2 act by x1, x2.")
@click.option('--inject', is_flag=True,
              help='Map the single ELEMENT into Hol(F2) x F_k instead of multiplying.')
@click.argument('elements', nargs=-1, required=True)
def semidirect_command(table, inject, elements):
    """Multiply semidirect product ELEMENTS given as (g ; h)."""
    if inject:
        if len(elements) != 1:
            raise click.UsageError('--inject takes exactly one element')
        emit('semidirect.inject', [table, elements[0]])
    else:
        emit('semidirect.mul', [table, *elements])


commands = [embed_aut3_command, semidirect_command]
