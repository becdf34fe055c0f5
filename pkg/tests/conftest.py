from pathlib import Path

import pytest

from levelrank import config
from levelrank.blocks import _memo

GOLDEN = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true",
                     help="rewrite golden files from current output")


@pytest.fixture
def golden(request):
    update = request.config.getoption("--update-golden")

    def check(name, text):
        path = GOLDEN / name
        if update:
            path.write_text(text, encoding="utf-8")
        assert path.exists(), f"missing golden file {name}; run pytest --update-golden"
        assert text == path.read_text(encoding="utf-8")

    return check


@pytest.fixture(autouse=True)
def default_limits():
    saved = config.limits()
    config.set_limits(config.Limits())
    yield
    config.set_limits(saved)


@pytest.fixture
def cold_memo():
    _memo.clear()
    yield


@pytest.fixture
def golden_dir():
    return GOLDEN


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Collects one (number, title, ok, detail) line per acceptance criterion."""
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(lines):
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {number}. {title}  ({detail})")
