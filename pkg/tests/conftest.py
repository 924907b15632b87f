from pathlib import Path

import pytest

from linkednets import fixtures as fx

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def seg2():
    return fx.seg2()


@pytest.fixture(scope="session")
def tri3():
    return fx.tri3()


@pytest.fixture(scope="session")
def z2_nets():
    return {tag: fx.z2_fixture(tag, radius=4) for tag in ["Exact", "I", "II", "III", "IV", "V"]}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
