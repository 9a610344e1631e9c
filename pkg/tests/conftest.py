import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a one-line summary for an acceptance criterion.

    Call the returned function with a short detail string; the pass/fail
    status is taken from the test outcome.
    """
    name = request.node.name
    _ACCEPTANCE.setdefault(name, {"title": request.node.function.__doc__.strip().splitlines()[0], "detail": ""})

    def note(detail: str) -> None:
        _ACCEPTANCE[name]["detail"] = detail

    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    entry = _ACCEPTANCE.get(item.name)
    if entry is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        entry["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[name]
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"[{status}] {entry['title']}  {entry['detail']}".rstrip())
