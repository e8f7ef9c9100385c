import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from topecom import from_central_arrangement  # noqa: E402
from topecom.cli import main as cli_main  # noqa: E402

DATA = ROOT / "data"

TRIANGLE_VECTORS = ((1, 0), (-1, 1), (-1, -1))
FOURLINES_VECTORS = ((1, 0), (0, 1), (-1, 1), (-1, -1))
QUADRANT_VECTORS = ((1, 0), (0, 1))


@pytest.fixture(scope="session")
def triangle():
    return from_central_arrangement(TRIANGLE_VECTORS)


@pytest.fixture(scope="session")
def fourlines():
    return from_central_arrangement(FOURLINES_VECTORS)


@pytest.fixture(scope="session")
def quadrants():
    return from_central_arrangement(QUADRANT_VECTORS)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def run_cli(*argv: str) -> tuple[int, str, str]:
    """In-process CLI invocation; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli():
    return run_cli
