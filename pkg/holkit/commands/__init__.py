"""
Command modules. Each module exposes ``commands``, the click commands that
``create_app`` registers on the top-level group.
"""

import click

from holkit.utils.certificates import run_operation

alphabet_option = click.option(
    '--alphabet', default='a,b', show_default=True,
    help='Generator names of the ambient free group, comma separated.',
)


def emit(kind, inputs, seed=None, exit_on_fail=True, **options):
    """
    Run an operation, print its result and exit 1 when the verdict is fail.

    Text mode prints the outputs one per line; records mode prints the
    certificate as one JSON object.
    """
    ctx = click.get_current_context()
    certificate = run_operation(kind, inputs, seed, **options)
    if ctx.obj['format'] == 'records':
        click.echo(certificate.to_json())
    elif certificate.error is None:
        for line in certificate.outputs:
            click.echo(line)
    if certificate.error is not None:
        click.echo(f'error: {certificate.error}', err=True)
    if exit_on_fail and not certificate.passed:
        ctx.exit(1)
    return certificate
