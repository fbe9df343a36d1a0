from pathlib import Path

import pytest

from semiauto import core
from semiauto.fileformat import read_automaton

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
SCHEMAS = ROOT / "docs" / "schemas"

core.VERIFY_WITNESSES = True


def load(name):
    return read_automaton(CORPUS / f"{name}.aut")


@pytest.fixture(scope="session")
def A():
    return load("a")


@pytest.fixture(scope="session")
def B():
    return load("b")


@pytest.fixture(scope="session")
def AxB():
    return load("axb")


@pytest.fixture(scope="session")
def C():
    return load("c")


@pytest.fixture
def single():
    return core.make_automaton(["q"], ["a"], [("q", "a", "q")])


_ACCEPTANCE: dict[int, str] = {}


def record(n, title, ok, detail=""):
    _ACCEPTANCE[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} ({detail})"


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
