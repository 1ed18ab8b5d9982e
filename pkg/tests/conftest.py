import pytest

from quivergrass.linalg import GF, QQ
from quivergrass.standard import by_name


@pytest.fixture
def A2():
    return by_name("A2")


@pytest.fixture
def K2():
    return by_name("K2")


@pytest.fixture(params=[2, 3], ids=["F2", "F3"])
def Fp(request):
    return GF(request.param)


FIELDS = [QQ, GF(2), GF(3)]


_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, text, ok):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {text}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
