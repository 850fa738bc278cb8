import os

from hypothesis import HealthCheck, settings

import pauvc.fpt

# every DP table built under the test suite is checked structurally
pauvc.fpt.CHECK_TABLES = True
os.environ.setdefault("PAUVC_CHECK_TABLES", "1")

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_verdicts = {}


def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    if report.when == "call" or report.failed:
        props = dict(report.user_properties)
        verdict = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
        if _verdicts.get(number, (None, "PASS"))[1] == "FAIL":
            verdict = "FAIL"
        _verdicts[number] = (props["title"], verdict, props.get("detail", ""), report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        title, verdict, detail, secs = _verdicts[number]
        line = f"criterion {number}: {verdict}  {title} ({secs:.1f} s)"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
