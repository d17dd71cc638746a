import pytest

_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if "test_acceptance.py" in report.nodeid:
            _results.append((report.nodeid.split("::", 1)[1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _results:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")


@pytest.fixture
def within():
    """Assert a block finishes within a wall-clock limit in seconds."""
    import time
    from contextlib import contextmanager

    @contextmanager
    def _within(seconds):
        t0 = time.perf_counter()
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"

    return _within
