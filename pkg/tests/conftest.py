import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="also run the slow p=5, n in {8, 9} cases")


def pytest_configure(config):
    config.addinivalue_line("markers", "long: slow case, enabled with --long")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """``criterion(label, ok, detail)`` records one acceptance line for the summary."""
    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
