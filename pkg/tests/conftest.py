import sys

import mpmath as mp
import pytest


def mp_bessel_i(chi, w, terms=40, dps=50):
    """Defining power series of I_chi(w) in extended precision."""
    with mp.workdps(dps):
        w = mp.mpf(w)
        return mp.fsum(
            (w / 2) ** (2 * k + chi) / (mp.factorial(k) * mp.factorial(chi + k))
            for k in range(terms)
        )


@pytest.fixture
def bessel_oracle():
    return mp_bessel_i


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
