import numpy as np
import pytest
from scipy import integrate

from bunchlab.temporal_modes import WavePacket


def quad_overlap(p: WavePacket, q: WavePacket) -> complex:
    """Numerical <p|q> straight from the time-domain amplitudes."""
    lo = min(p.center_time - 12 * p.width, q.center_time - 12 * q.width)
    hi = max(p.center_time + 12 * p.width, q.center_time + 12 * q.width)

    def integrand(t, part):
        v = np.conj(p.amplitude(t)) * q.amplitude(t)
        return float(v.real if part == 0 else v.imag)

    points = sorted({p.center_time, q.center_time})
    kw = dict(limit=400, epsabs=1e-14, epsrel=1e-12, points=points)
    re = integrate.quad(integrand, lo, hi, args=(0,), **kw)[0]
    im = integrate.quad(integrand, lo, hi, args=(1,), **kw)[0]
    return complex(re, im)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def identical(n, **kw):
    return tuple(WavePacket(**kw) for _ in range(n))



# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
