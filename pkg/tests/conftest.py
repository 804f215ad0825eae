import pytest

_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, text = mark.args
    ok = _RESULTS.get(n, (text, True))[1]
    if rep.when == "call" or rep.failed:
        ok = ok and rep.passed
        _RESULTS[n] = (text, ok)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        text, ok = _RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
