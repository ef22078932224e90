import pytest

CRITERIA = {
    1: "cyclic-germ table for z^k = x^2 + y^3",
    2: "det of z^k = x^2 + y^2 equals k",
    3: "Brieskorn-Pham suite, exponents <= 12",
    4: "Hirzebruch-Jung bamboo determinants, d <= 50",
    5: "superisolated determinants against an assembled matrix",
    6: "C^4 family: graph determinant, dq cancellation, ZHS criterion",
    7: "group orders and abelianizations",
    8: "S3 quotients separate the aligned and non-aligned groups",
    9: "flex collinearity dichotomy",
    10: "Cremona degree law and displayed conic",
    11: "periodicity scan and bounded homology-sphere search",
}

_results: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(n, []).append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        outs = _results.get(n)
        if not outs:
            status = "NOT RUN"
        elif all(o == "passed" for o in outs):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {CRITERIA[n]}")
