"""Log-domain modified Bessel I and the finite binomial sum G."""

import math
import threading
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .lognum import ZERO, from_log, logsumexp_exact

DEFAULT_EPS = 1e-16

_lf_lock = threading.Lock()
_lf_table = gammaln(np.arange(1024, dtype=float) + 1.0)


def log_factorials(n_max):
    """Table ``lf`` with ``lf[k] = ln k!`` for ``0 <= k <= n_max``.

    The table grows by doubling and is never shrunk; callers may keep the
    returned array, it is not mutated afterwards.
    """
    global _lf_table
    table = _lf_table
    if n_max < table.size:
        return table
    with _lf_lock:
        table = _lf_table
        if n_max >= table.size:
            size = table.size
            while size <= n_max:
                size *= 2
            table = gammaln(np.arange(size, dtype=float) + 1.0)
            _lf_table = table
    return table


def log_factorial(n):
    return float(log_factorials(n)[n])


def _check_eps(eps):
    if not 0.0 < eps < 1e-6:
        raise ValueError(f"eps must lie in (0, 1e-6), got {eps}")


def _bessel_log_terms(chi, w, n_terms):
    k = np.arange(n_terms, dtype=float)
    lf = log_factorials(chi + n_terms)
    ki = np.arange(n_terms)
    return (2.0 * k + chi) * math.log(w / 2.0) - lf[ki] - lf[ki + chi]


def bessel_i_log(chi, w, eps=DEFAULT_EPS):
    """``ln I_chi(w)`` from the power series, as a ``LogReal``.

    The terms ``(w/2)^(2k+chi) / (k! (chi+k)!)`` rise until roughly
    ``k* = (sqrt(chi^2 + w^2) - chi) / 2`` and fall afterwards, so the series
    is only cut once past ``k*`` and once the geometric tail bound
    ``t_K * r / (1 - r)``, with ``r`` the (decreasing) term ratio, is below
    ``eps`` times the partial sum.
    """
    chi = int(chi)
    if chi < 0:
        raise ValueError(f"order must be non-negative, got {chi}")
    w = float(w)
    if not w > 0.0:
        raise ValueError(f"argument must be positive, got {w}")
    _check_eps(eps)
    return _bessel_i_log(chi, w, eps)


@lru_cache(maxsize=1 << 16)
def _bessel_i_log(chi, w, eps):
    return from_log(_bessel_series(chi, w, eps)[0])


def _bessel_series(chi, w, eps):
    peak = 0.5 * (math.hypot(chi, w) - chi)
    n_terms = int(peak) + 32
    log_eps = math.log(eps)
    q = (w / 2.0) ** 2
    while True:
        logs = _bessel_log_terms(chi, w, n_terms)
        total = logsumexp_exact(logs)
        # ratio of the first omitted term to the last kept one
        ratio = q / (n_terms * (chi + n_terms))
        if ratio < 0.5 and logs[-1] + math.log(ratio / (1.0 - ratio)) < log_eps + total:
            return total, n_terms
        n_terms *= 2


def bessel_i_terms(chi, w, eps=DEFAULT_EPS):
    """Number of series terms ``bessel_i_log`` uses for ``(chi, w)``."""
    _check_eps(eps)
    return _bessel_series(int(chi), float(w), eps)[1]


def bessel_i_log_fixed(chi, w, n_terms):
    """Series for ``ln I_chi(w)`` cut at exactly ``n_terms`` terms."""
    return from_log(logsumexp_exact(_bessel_log_terms(int(chi), float(w), int(n_terms))))


_WORD = 1 << 63


@lru_cache(maxsize=4096)
def log_binomials(two_s):
    """``ln C(2S, k)`` for ``k = 0..2S``.

    Exact integer binomials are used while they fit a machine word, log-gamma
    differences beyond that.
    """
    two_s = int(two_s)
    out = np.empty(two_s + 1)
    lf = None
    for k in range(two_s + 1):
        c = math.comb(two_s, k)
        if c < _WORD:
            out[k] = math.log(c)
        else:
            if lf is None:
                lf = log_factorials(two_s)
            out[k] = lf[two_s] - lf[k] - lf[two_s - k]
    out.flags.writeable = False
    return out


def g_poly_log(chi, two_s, w, reverse=False):
    """``G_chi(w) = sum_{k=0}^{2S-chi} C(2S,k) C(2S,k+chi) w^(2k+chi)``.

    Exact finite sum; the zero element when ``chi > 2S``. ``reverse`` sums
    the terms in the reindexed order ``k -> 2S - chi - k`` and exists for
    consistency checks.
    """
    chi = int(chi)
    two_s = int(two_s)
    if two_s < 1:
        raise ValueError(f"twoS must be >= 1, got {two_s}")
    if chi < 0:
        raise ValueError(f"order must be non-negative, got {chi}")
    w = float(w)
    if not w > 0.0:
        raise ValueError(f"argument must be positive, got {w}")
    if chi > two_s:
        return ZERO
    return _g_poly_log(chi, two_s, w, bool(reverse))


@lru_cache(maxsize=1 << 15)
def _g_poly_log(chi, two_s, w, reverse):
    lb = log_binomials(two_s)
    k = np.arange(two_s - chi + 1)
    if reverse:
        k = k[::-1]
    logs = lb[k] + lb[k + chi] + (2 * k + chi) * math.log(w)
    return from_log(logsumexp_exact(logs))
