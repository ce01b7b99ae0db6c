import pytest

_CRITERIA = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA.setdefault(m.args[0], [m.args[1], None])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None or rep.when != "call" and not rep.failed:
        return
    entry = _CRITERIA.setdefault(m.args[0], [m.args[1], None])
    if rep.failed:
        entry[1] = False
    elif rep.when == "call" and entry[1] is None:
        entry[1] = True


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance")
    for n in sorted(_CRITERIA):
        name, ok = _CRITERIA[n]
        status = "not run" if ok is None else ("PASS" if ok else "FAIL")
        terminalreporter.write_line("%d. %-44s %s" % (n, name, status))
