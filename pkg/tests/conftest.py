import pytest

from cp3conf.suites import symmetric_complex


@pytest.fixture(scope="session")
def sym():
    """Cached SymmetricComplex per m (shared across the whole session)."""
    return symmetric_complex


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
