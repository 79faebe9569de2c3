import pytest
from click.testing import CliRunner

from holkit import create_app


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(app, runner):
    def _invoke(*args, **kwargs):
        return runner.invoke(app, list(args), **kwargs)
    return _invoke
