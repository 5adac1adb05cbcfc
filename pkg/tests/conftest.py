import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the line is printed in the terminal summary.

    A test that raises before recording is listed as failed.
    """
    seen = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        seen.append(name)
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    yield record
    if not seen:
        _ACCEPTANCE.append((request.node.name, False, "raised before reporting"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
