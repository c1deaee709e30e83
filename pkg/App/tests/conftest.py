import pytest

from wsgi import app as cli_app


@pytest.fixture
def cli_runner():
    """CLI runner with stderr (logs, diagnostics) kept apart from command output"""
    return cli_app.test_cli_runner(mix_stderr=False)
