import pytest

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.append((marker.args[0], marker.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    grouped = {}
    for number, title, passed in _criteria:
        grouped.setdefault(number, [title, True])[1] &= passed
    for number, (title, passed) in sorted(grouped.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  AC{number:<2d} {title}")
