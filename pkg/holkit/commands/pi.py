"""
The subgroup pi of Hol(F2): normal forms and the two projections to F.
"""

import click

from holkit.commands import emit


@click.command('nf-pi')
@click.argument('element')
def nf_pi_command(element):
    """Triple (u ; v ; X) of a Hol(F2) ELEMENT lying in pi."""
    emit('pi.normal-form', [element])


@click.command('f1')
@click.argument('element')
def f1_command(element):
    emit('pi.f1', [element])


@click.command('f2')
@click.argument('element')
def f2_command(element):
    emit('pi.f2', [element])


@click.command('embed-ff')
@click.argument('element')
def embed_ff_command(element):
    """Both coordinates of the embedding pi -> F x F, one per line."""
    emit('pi.embed-ff', [element])


commands = [nf_pi_command, f1_command, f2_command, embed_ff_command]
