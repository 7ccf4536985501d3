import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="run the n=6 checks")


def slow_enabled(config) -> bool:
    return config.getoption("--run-slow") or os.environ.get("DIAGHARM_SLOW") == "1"


def pytest_collection_modifyitems(config, items):
    if slow_enabled(config):
        return
    skip = pytest.mark.skip(reason="n=6 check; use --run-slow or DIAGHARM_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    k, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        entry = _criteria.setdefault(k, {"title": title, "parts": []})
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        entry["parts"].append((item.name, status, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_criteria):
        entry = _criteria[k]
        statuses = [s for _, s, _ in entry["parts"]]
        ran = [s for s in statuses if s != "SKIP"]
        if "FAIL" in statuses:
            verdict = "FAIL"
        elif ran:
            verdict = "PASS"
        else:
            verdict = "SKIP"
        secs = sum(d for _, _, d in entry["parts"])
        note = ""
        if verdict == "PASS" and len(ran) < len(statuses):
            note = " (opt-in parts skipped)"
        tr.write_line(f"criterion {k:>2}: {verdict}  {entry['title']}  [{secs:.2f}s]{note}")
