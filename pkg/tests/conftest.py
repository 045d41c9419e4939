"""Collects acceptance outcomes and prints one line per criterion after the run."""

import pytest

_OUTCOMES: dict[int, list[tuple[str, str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _OUTCOMES.setdefault(marker.args[0], []).append((item.name, rep.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        results = _OUTCOMES[n]
        ok = all(o == "passed" for _, o, _ in results)
        details = "; ".join(d for _, _, d in results if d)
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({details})" if details else ""))
