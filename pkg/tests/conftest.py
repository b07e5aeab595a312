import hypothesis
import pytest

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    marker = _ACCEPTANCE.get(report.nodeid)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marker["outcome"] = report.outcome
        marker["duration"] = report.duration


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            number, title = m.args
            _ACCEPTANCE[item.nodeid] = {"number": number, "title": title, "outcome": "not run"}


def pytest_terminal_summary(terminalreporter):
    ran = [m for m in _ACCEPTANCE.values() if m["outcome"] != "not run"]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for m in sorted(ran, key=lambda m: m["number"]):
        verdict = "PASS" if m["outcome"] == "passed" else "FAIL"
        terminalreporter.write_line(
            f"[{verdict}] criterion {m['number']}: {m['title']} ({m['duration']:.1f}s)"
        )
