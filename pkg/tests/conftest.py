import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from softsemi import SoftSet, enumerate_semi_family  # noqa: E402
from softsemi.builtin import ex38, ex38_sets  # noqa: E402

ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture(scope="session")
def ex38_top():
    return ex38()


@pytest.fixture(scope="session")
def ctx(ex38_top):
    return ex38_top.context


@pytest.fixture(scope="session")
def G(ctx):
    return ex38_sets(ctx)


@pytest.fixture(scope="session")
def fam(ex38_top):
    return enumerate_semi_family(ex38_top)


@pytest.fixture(scope="session")
def S(ctx):
    """Build an EX38-context soft set: S(e1="h1 h2", e2="h3")."""

    def make(**slices):
        return SoftSet.from_slices(ctx, {e: xs.split() for e, xs in slices.items()})

    return make


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
