"""
Element arithmetic: reduction, products and inverses.
"""

import click

from holkit.commands import alphabet_option, emit

GROUPS = ('word', 'hol', 'f', 'pi')


def _with_alphabet(group, alphabet, elements):
    # F and pi elements live over fixed alphabets
    if group in ('word', 'hol'):
        return [alphabet, *elements]
    return list(elements)


@click.command('reduce')
@alphabet_option
@click.argument('word')
def reduce_command(alphabet, word):
    """Freely reduce WORD."""
    emit('word.reduce', [alphabet, word])


@click.command('mul')
@click.option('--group', type=click.Choice(GROUPS), default='word', show_default=True)
@alphabet_option
@click.argument('elements', nargs=-1, required=True)
def mul_command(group, alphabet, elements):
    """Multiply ELEMENTS left to right."""
    emit(f'{group}.mul', _with_alphabet(group, alphabet, elements))


@click.command('inv')
@click.option('--group', type=click.Choice(GROUPS), default='word', show_default=True)
@alphabet_option
@click.argument('element')
def inv_command(group, alphabet, element):
    """Invert ELEMENT."""
    emit(f'{group}.inv', _with_alphabet(group, alphabet, [element]))


commands = [reduce_command, mul_command, inv_command]
