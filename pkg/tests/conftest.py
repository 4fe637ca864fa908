import re

import pytest

_RESULTS: dict[str, tuple[str, str]] = {}
_AC_NAME = re.compile(r"test_ac(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = _AC_NAME.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    key = f"AC{int(m.group(1))}"
    _RESULTS[key] = ("PASS" if report.passed else "FAIL", m.group(2).replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: int(k[2:])):
        verdict, name = _RESULTS[key]
        terminalreporter.write_line(f"{key:<5} {verdict}  {name}")


@pytest.fixture
def rng():
    import random
    return random.Random(12345)
