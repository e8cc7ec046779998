"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

_results: dict[str, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    if call.when != "call" or not item.nodeid.startswith("tests/test_acceptance.py::"):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _results[item.name] = (doc, "FAIL" if call.excinfo is not None else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        doc, outcome = _results[name]
        terminalreporter.write_line(f"{outcome}  {doc}")
