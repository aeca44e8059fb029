import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    """Record the outcome of one acceptance criterion: ``record(n, ok, detail)``."""
    def _record(n, ok, detail=""):
        ACCEPTANCE[n] = (ok, detail)
        line = f"acceptance criterion {n}: {'PASS' if ok else 'FAIL'}"
        print(line + (f" ({detail})" if detail else ""))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f"  {detail}" if detail else ""))
