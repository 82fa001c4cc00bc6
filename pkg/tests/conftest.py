import time
from collections import defaultdict

import pytest

_criteria = defaultdict(list)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run long-running optional tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="long-running; use --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or "slow" in item.keywords:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[marker.args[0]].append((item.name, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        runs = _criteria[n]
        ok = all(outcome == "passed" for _, outcome, _ in runs)
        secs = sum(d for _, _, d in runs)
        failed = [name for name, outcome, _ in runs if outcome != "passed"]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({len(runs)} tests, {secs:.1f}s)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def brandl5_splitting():
    from intersective.polyring import cyclotomic, parse_poly
    from intersective.splitfield import splitting_data

    t0 = time.perf_counter()
    sd = splitting_data([parse_poly("x^5-2"), cyclotomic(5)], cap=24)
    return sd, time.perf_counter() - t0
