import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance test under its criterion label."""
    label = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE.setdefault(label, True)
    yield label


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call" and not report.passed:
        ACCEPTANCE[marker.args[0]] = False
    if marker and report.when == "setup" and report.failed:
        ACCEPTANCE[marker.args[0]] = False


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE[label] else 'FAIL'}  {label}")
