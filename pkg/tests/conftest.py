import pytest

ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion():
    """Record (criterion number, passed, detail) and fail the test when not passed."""

    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE.setdefault(number, []).append((bool(passed), detail))
        assert passed, f"criterion {number}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        entries = ACCEPTANCE[number]
        ok = all(p for p, _ in entries)
        failed = [d for p, d in entries if not p]
        detail = "; ".join(failed) if failed else entries[-1][1]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
