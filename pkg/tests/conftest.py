import numpy as np
import pytest

from ptvdp import IntegratorConfig, InitialData, ModelParams, integrate

_criteria: dict[int, tuple[str, str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        number, title = props["criterion"]
        outcome = "PASS" if report.passed else "FAIL"
        _criteria[number] = (title, outcome, props.get("measured", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome, measured = _criteria[number]
        line = f"criterion {number:>2}: {outcome}  {title}"
        terminalreporter.write_line(line + (f"  [{measured}]" if measured else ""))


@pytest.fixture(scope="session")
def integrated():
    """Memoised integrator so several test modules can share long runs."""
    cache = {}

    def run(mu1, mu2, a0=1.0, b0=1.0, t_end=100.0, omega=1.0, tol=1e-10):
        key = (mu1, mu2, a0, b0, t_end, omega, tol)
        if key not in cache:
            cfg = IntegratorConfig(rel_tol=tol, abs_tol=tol, t_end=t_end)
            cache[key] = integrate(InitialData(0.0, a0, b0), ModelParams(omega, mu1, mu2), cfg)
        return cache[key]

    return run


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
