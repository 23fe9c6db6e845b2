import re
from collections import OrderedDict

import pytest

_CRITERIA: "OrderedDict[int, list[tuple[str, str]]]" = OrderedDict()
_NAME = re.compile(r"test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = _NAME.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    _CRITERIA.setdefault(int(m.group(1)), []).append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        results = _CRITERIA[k]
        failed = [name for name, outcome in results if outcome != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {k}: {verdict} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)


@pytest.fixture(scope="session")
def rng():
    import numpy as np
    return np.random.default_rng(20240917)
