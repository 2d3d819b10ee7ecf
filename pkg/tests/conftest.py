import functools
from collections import defaultdict

import pytest

import slidecx.complex
import slidecx.coxeter
import slidecx.pipedream
import slidecx.polynomial

_MODULES = (slidecx.coxeter, slidecx.polynomial, slidecx.pipedream, slidecx.complex)


def clear_caches() -> None:
    for mod in _MODULES:
        for obj in vars(mod).values():
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()


@pytest.fixture
def cold_caches():
    """Start from empty memo tables so wall-clock limits are honest."""
    clear_caches()
    yield
    clear_caches()


_criteria: dict[str, list[tuple[str, str]]] = defaultdict(list)


def pytest_runtest_logreport(report):
    key = getattr(report, "criterion", None)
    if key and (report.when == "call" or report.failed):
        _criteria[key].append((report.nodeid.split("::")[-1], report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark:
        report.criterion = str(mark.args[0])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        results = _criteria[key]
        ok = all(outcome == "passed" for _, outcome in results)
        verdict = "PASS" if ok else "FAIL"
        detail = ", ".join(f"{name}={outcome}" for name, outcome in results)
        terminalreporter.write_line(f"criterion {key}: {verdict}  ({detail})")
