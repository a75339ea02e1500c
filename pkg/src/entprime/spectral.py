"""Recover cosine-mode amplitudes from one sampled period of a signal.

Signals follow ``f(t) = c_0 - sum_n c_n cos(n omega t)``, so extracted
amplitudes carry the opposite sign of a plain cosine projection.
"""

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_ALIAS_TARGET = 1e-10
_LOG_QUIET = math.log(1e-30)


@dataclass(frozen=True)
class TimeSeries:
    omega: float
    m_samples: int
    values: np.ndarray

    @property
    def period(self):
        return 2 * math.pi / self.omega

    @property
    def times(self):
        return np.arange(self.m_samples) * (self.period / self.m_samples)


def sample_period(evaluator, omega, M):
    """``M`` samples ``evaluator(j T / M)``, ``j = 0..M-1`` (endpoint excluded)."""
    M = int(M)
    if M < 3:
        raise ValueError(f"need at least 3 samples, got {M}")
    T = 2 * math.pi / omega
    values = np.array([float(evaluator(j * T / M)) for j in range(M)])
    values.flags.writeable = False
    return TimeSeries(float(omega), M, values)


def extract_mode(ts, n):
    """``-(2/M) sum_j f_j cos(2 pi n j / M)``.

    Equals ``c_n`` plus the folded modes ``c_{kM-n} + c_{kM+n}``, ``k >= 1``.
    """
    n = int(n)
    M = ts.m_samples
    if not 1 <= n < M / 2:
        raise ValueError(f"mode {n} must satisfy 1 <= n < M/2 = {M / 2}")
    j = np.arange(M)
    return -2.0 / M * math.fsum(ts.values * np.cos(2 * math.pi * n * j / M))


def extract_modes(ts, n_max):
    return np.array([extract_mode(ts, n) for n in range(1, n_max + 1)])


def extract_dc(ts):
    return math.fsum(ts.values) / ts.m_samples


def reconstruct(dc, modes, M):
    """Samples of ``dc - sum_n modes[n-1] cos(2 pi n j / M)`` on the grid."""
    j = np.arange(M)
    n = np.arange(1, len(modes) + 1)
    return dc - np.cos(2 * math.pi * np.outer(j, n) / M) @ np.asarray(modes, dtype=float)


def alias_budget(coeff_tail, M, n_stop=None, cap=None):
    """Bound on the aliasing error of every mode below ``M/2``.

    ``coeff_tail(n)`` must return an upper bound on ``|c_n|`` as a LogReal.
    The bound sums ``coeff_tail`` from ``ceil(M/2)`` upward. The sum stops at
    ``n_stop`` if given, otherwise once 64 consecutive terms have each fallen
    below 1e-30 of the running total (or all vanish), which suits the
    super-exponentially decaying coefficients here. With ``cap`` set, the
    walk gives up and returns ``inf`` as soon as the bound exceeds it.
    """
    M = int(M)
    if M < 4:
        raise ValueError(f"M must be >= 4, got {M}")
    n = math.ceil(M / 2)
    quiet = 0
    total = -math.inf
    log_cap = math.inf if cap is None else math.log(cap)
    while True:
        lt = coeff_tail(n)
        lm = -math.inf if lt.sign == 0 else lt.log_mag
        total = float(np.logaddexp(total, lm))
        if total > log_cap:
            return math.inf
        if n_stop is not None:
            if n >= n_stop:
                break
        else:
            if total == -math.inf or lm < total + _LOG_QUIET:
                quiet += 1
            else:
                quiet = 0
            if quiet >= 64:
                break
        n += 1
    return 0.0 if total == -math.inf else math.exp(total)


def choose_samples(coeff_tail, n_max, target=DEFAULT_ALIAS_TARGET, M_max=1 << 16):
    """Smallest power of two ``M > 2 n_max`` whose alias budget is below ``target``."""
    M = 4
    while M <= 2 * n_max:
        M *= 2
    while M <= M_max:
        if alias_budget(coeff_tail, M, cap=target) < target:
            return M
        M *= 2
    raise ValueError(f"no M <= {M_max} meets alias target {target}")
