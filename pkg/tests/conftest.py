import contextlib
import time

import pytest

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion's outcome."""

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            _CRITERIA[number] = (False, title, time.perf_counter() - start, str(exc).splitlines()[0][:160])
            raise
        _CRITERIA[number] = (True, title, time.perf_counter() - start, "")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok, title, secs, note = _CRITERIA[number]
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f}s)"
        if note:
            line += f"  -- {note}"
        terminalreporter.write_line(line)
