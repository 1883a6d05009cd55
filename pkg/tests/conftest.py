import io
from pathlib import Path

import pytest

from dframes.cli import main as cli_main

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture
def run_cli():
    def runner(args):
        out, err = io.StringIO(), io.StringIO()
        code = cli_main(args, stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return runner
