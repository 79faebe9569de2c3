"""
Verification: the relation table, the randomized suites and certificate replay.
"""

import json

import click

from holkit.commands import emit
from holkit.errors import ParseError
from holkit.utils.certificates import replay_certificate
from holkit.utils.random_checks import SUITES, Limits


def _config():
    return click.get_current_context().obj['config']


@click.command('verify-relations')
@click.option('--extended', is_flag=True,
              help='Also check the t-generator action and tau_a a = a tau_a, tau_b b = b tau_b.')
@click.option('--with-control', is_flag=True,
              help='Append the corrupted relation x1 a x1^-1 = a b, which must FAIL.')
def verify_relations_command(extended, with_control):
    """Check the defining relations of pi, one PASS/FAIL line each."""
    emit('relations.verify', [
        'extended' if extended else 'standard',
        'control' if with_control else 'no-control',
    ])


@click.command('random-check')
@click.option('--suite', default='all', show_default=True,
              help=f"One of: {', '.join(SUITES)}; or 'all'.")
@click.option('--count', type=click.IntRange(min=1), default=None,
              help='Number of cases [default: HOLKIT_COUNT or 1000].')
@click.option('--seed', type=int, envvar='HOLKIT_SEED', default=None,
              help='Master seed [default: HOLKIT_SEED or 7].')
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Parallel workers; output does not depend on it.')
def random_check_command(suite, count, seed, workers):
    """Run randomized invariant suites; deterministic in (suite, count, seed)."""
    config = _config()
    count = config.DEFAULT_COUNT if count is None else count
    seed = config.DEFAULT_SEED if seed is None else seed
    workers = config.WORKERS if workers is None else workers
    limits = str(Limits.from_config(config))

    suites = list(SUITES) if suite == 'all' else [suite]
    passed = True
    for name in suites:
        certificate = emit('random.check', [name, str(count), limits, str(config.CHUNK_SIZE)], seed,
                           exit_on_fail=False, workers=workers)
        passed = passed and certificate.passed
    if not passed:
        click.get_current_context().exit(1)


@click.command('replay')
@click.argument('records', type=click.File('r'))
def replay_command(records):
    """Re-run every certificate in RECORDS (JSON lines) and compare outputs."""
    all_match = True
    for number, line in enumerate(records, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f'line {number} is not JSON: {exc.msg}') from exc
        matches = replay_certificate(record, **_replay_options(record))
        all_match = all_match and matches
        click.echo(f"{'PASS' if matches else 'FAIL'} {record.get('kind')}")
    if not all_match:
        click.get_current_context().exit(1)


def _replay_options(record):
    if record.get('kind') != 'random.check':
        return {}
    return {'workers': _config().WORKERS}


commands = [verify_relations_command, random_check_command, replay_command]
