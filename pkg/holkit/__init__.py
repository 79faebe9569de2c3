import logging
import sys

import click

from holkit.errors import HolkitError

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


class HolkitGroup(click.Group):
    """Command group that turns library errors into one-line diagnostics and exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except HolkitError as exc:
            click.echo(f'error: {exc}', err=True)
            ctx.exit(exc.exit_code)


def configure_logging(level):
    """One stderr handler on the ``holkit`` logger; stdout carries results only."""
    logger = logging.getLogger('holkit')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(level.upper())
    logger.propagate = False
    return logger


def create_app(config_name=None):
    from config import get_config

    config_class = get_config(config_name)

    @click.group(cls=HolkitGroup, context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--format', 'output_format', type=click.Choice(['text', 'records']),
                  default=config_class.OUTPUT_FORMAT, show_default=True,
                  help='Plain text, or one JSON certificate per line.')
    @click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False),
                  default=config_class.LOG_LEVEL, show_default=True)
    @click.pass_context
    def app(ctx, output_format, log_level):
        """Exact arithmetic in Hol(F2), its subgroup pi, and their embeddings."""
        configure_logging(log_level)
        config_class.init_app(app)
        ctx.obj = {'config': config_class, 'format': output_format}

    app.config = config_class

    # Register command modules
    from holkit.commands import checks, embeddings, maps, pi, words
    for module in (words, maps, pi, embeddings, checks):
        for command in module.commands:
            app.add_command(command)

    return app


def run(argv=None, config_name=None):
    """
    Run the command line with ``argv`` and return the exit code.

    Returns:
        int: 0 on success, 1 on a mathematical failure, 2 on a usage error
    """
    app = create_app(config_name)
    try:
        result = app.main(args=argv, prog_name='holkit', standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    except ValueError as exc:
        click.echo(f'error: {exc}', err=True)
        return 2
    return result if isinstance(result, int) else 0
