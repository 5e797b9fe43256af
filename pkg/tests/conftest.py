import pytest

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed in the terminal summary."""
    record = {"name": request.node.name, "detail": ""}

    def set_detail(text):
        record["detail"] = text

    yield set_detail
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _criteria.append((record["name"], passed, record["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
