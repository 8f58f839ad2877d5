import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion test."""
    holder = {}

    def declare(number, title):
        holder["key"] = (number, title)

    yield declare
    if "key" in holder:
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
        # parametrized cases share one line; any failing case fails it
        if failed or ACCEPTANCE.get(holder["key"]) == "FAIL":
            ACCEPTANCE[holder["key"]] = "FAIL"
        else:
            ACCEPTANCE[holder["key"]] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
