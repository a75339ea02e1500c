"""Two Kerr-coupled oscillators started in a product of coherent states.

The linear entropy ``S(t) = 1 - Tr rho_A(t)^2`` is periodic with period
``T = 2 pi / omega`` and has the cosine series ``S(t) = c_0 - sum c_n cos(n omega t)``
with

    c_n(u) = 4 e^{-2u} sum_{mu | n} I_mu(u) I_{n/mu}(u).

Every coefficient is returned as a :class:`~entprime.lognum.LogReal`.
"""

import math
from dataclasses import dataclass

import numpy as np

from .lognum import ZERO, LogReal, from_log, log_add, logsumexp_exact
from .numtheory import Classification, divisors
from .special import DEFAULT_EPS, bessel_i_log, log_factorials

LN2 = math.log(2.0)
LN4 = math.log(4.0)
TUPLE_SCAN_MAX_K = 128
C0_CONSISTENCY = 1e-9
LOG_TAIL_MAX = math.log(1e-30)


class NumericalFault(RuntimeError):
    """Two independent evaluations of the same quantity disagree."""


def fock_cutoff_policy(u):
    """Default Fock cutoff for intensity ``u``.

    ``u/2`` is the Poisson mean of each mode; twelve standard deviations past
    it leave a tail mass far below 1e-30. Explicit cutoffs are accepted as
    long as their tail mass stays below that level.
    """
    return math.ceil(u / 2 + 12 * math.sqrt(u / 2 + 1) + 30)


def _log_poisson_tail(lam, x):
    """Upper bound on ``ln P(X > x)`` for ``X ~ Poisson(lam)``, ``x + 2 > lam``."""
    k = x + 1
    lpmf = -lam + k * math.log(lam) - math.lgamma(k + 1)
    return lpmf - math.log1p(-lam / (k + 1))


@dataclass(frozen=True)
class OscParams:
    u: float
    omega: float = 1.0
    series_eps: float = DEFAULT_EPS
    fock_cutoff: int = None

    def __post_init__(self):
        if not self.u > 0:
            raise ValueError(f"u must be positive, got {self.u}")
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not 0 < self.series_eps < 1e-6:
            raise ValueError(f"series_eps must lie in (0, 1e-6), got {self.series_eps}")
        if self.fock_cutoff is None:
            object.__setattr__(self, "fock_cutoff", fock_cutoff_policy(self.u))
        elif (
            self.fock_cutoff + 2 <= self.u / 2
            or _log_poisson_tail(self.u / 2, self.fock_cutoff) > LOG_TAIL_MAX
        ):
            raise ValueError(
                f"fock_cutoff {self.fock_cutoff} leaves Poisson tail mass above "
                f"1e-30 for u={self.u}; the policy value is {fock_cutoff_policy(self.u)}"
            )

    @property
    def period(self):
        return 2 * math.pi / self.omega


def _as_params(p):
    return p if isinstance(p, OscParams) else OscParams(float(p))


def _ilog(chi, p):
    return bessel_i_log(chi, p.u, p.series_eps).log_mag


def _pair_sum(n, mus, p, scale_log):
    """``exp(scale_log) * sum_{mu in mus} I_mu(u) I_{n/mu}(u)`` (mus may repeat)."""
    if not mus:
        return ZERO
    logs = [_ilog(mu, p) + _ilog(n // mu, p) for mu in mus]
    return from_log(scale_log + logsumexp_exact(sorted(logs)))


def _prefactor(p):
    return LN4 - 2.0 * p.u


def prime_bound(n, p):
    """``8 e^{-2u} I_1(u) I_n(u)``; a lower bound on ``c_n`` for ``n > 1``."""
    p = _as_params(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return from_log(LN2 + _prefactor(p) + _ilog(1, p) + _ilog(n, p))


def gap(n, p):
    """``A(n, u) = c_n - c_n^(p)`` summed over the reduced divisor set.

    Never formed as a difference of totals, so it is the exact zero element
    for every prime.
    """
    p = _as_params(p)
    if n < 2:
        raise ValueError(f"gap needs n >= 2, got {n}")
    return _pair_sum(n, list(divisors(n).reduced), p, _prefactor(p))


def osc_coeff(n, p):
    """Fourier amplitude ``c_n(u)`` of the ``cos(n omega t)`` mode."""
    p = _as_params(p)
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return from_log(_prefactor(p) + 2 * _ilog(1, p))
    # bound (the {1, n} pair, the smallest term) first, then the rest
    return log_add(prime_bound(n, p), gap(n, p))


def _check_family(q, n):
    if q not in (2, 3):
        raise ValueError(f"family must be 2 or 3, got {q}")
    if n < q or n % q:
        raise ValueError(f"family curve f{q} is defined on multiples of {q} >= {q}, got {n}")


def family_curve(q, n, p):
    """``8 e^{-2u} [I_1 I_n + I_q I_{n/q}]``, the curve through the f_q semiprimes."""
    p = _as_params(p)
    _check_family(q, n)
    return _pair_sum(n, [1, n, q, n // q], p, _prefactor(p))


def family_excess(q, n, p):
    """Signed ``c_n - c_n^(f_q)``, with all shared divisor pairs cancelled exactly.

    The curve is the four-term list ``[1, n, q, n/q]`` of divisor pairs and
    ``c_n`` the full divisor list; common entries are removed before any
    floating-point work, so the members of f_q (and ``q**3``) give the exact
    zero element.
    """
    p = _as_params(p)
    _check_family(q, n)
    plus = list(divisors(n))
    minus = []
    for mu in (1, n, q, n // q):
        if mu in plus:
            plus.remove(mu)
        else:
            minus.append(mu)
    scale = _prefactor(p)
    return log_add(_pair_sum(n, plus, p, scale), -_pair_sum(n, minus, p, scale))


# -- DC term ---------------------------------------------------------------


def _poisson_logs(u, K):
    lf = log_factorials(K)
    j = np.arange(K + 1)
    return -u / 2 + j * math.log(u / 2) - lf[: K + 1]


def c0_direct(p):
    """DC term from the tuples of the quadruple sum with ``(j-k)(l-m) = 0``.

    With Poisson weights ``p_j`` and ``Q = sum p_j^2`` the constrained sum is
    ``2 Q P^2 - Q^2`` where ``P = sum p_j``.
    """
    p = _as_params(p)
    w = np.exp(_poisson_logs(p.u, p.fock_cutoff))
    q = math.fsum(w * w)
    s = math.fsum(w)
    return 1.0 - (2.0 * q * s * s - q * q)


def c0_sum_rule(p, n_max=None):
    """DC term as ``sum_{n>=1} c_n`` (the entropy vanishes at ``t = 0``).

    Truncated once ``16 P(Poisson(u/2) > sqrt(N))``, a bound on the weight of
    every tuple with ``|(j-k)(l-m)| > N``, drops below ``series_eps`` times the
    running sum.
    """
    p = _as_params(p)
    logs = []
    total = -math.inf
    n = 0
    lam = p.u / 2
    while True:
        n += 1
        logs.append(osc_coeff(n, p).log_mag)
        if n % 16 == 0 or n == n_max:
            total = logsumexp_exact(logs)
            x = math.isqrt(n)
            if n == n_max:
                break
            if x + 2 > lam and math.log(16) + _log_poisson_tail(lam, x) < math.log(p.series_eps) + total:
                break
    return math.exp(total)


def c0_osc(p):
    """DC Fourier term ``c_0(u)``; both routes must agree to 1e-9 relative."""
    p = _as_params(p)
    a = c0_direct(p)
    b = c0_sum_rule(p)
    if abs(a - b) > C0_CONSISTENCY * max(abs(a), abs(b)):
        raise NumericalFault(f"c0 routes disagree: direct={a!r} sum-rule={b!r}")
    return from_log(math.log(a)) if a > 0 else ZERO


# -- time signal -------------------------------------------------------------


def entropy_osc(p, t):
    """``S_L(t)`` from ``1 - sum_{l,m} w_l w_m |Phi_{l-m}(t)|^2``, O(K^2) per point.

    Grouping ``l - m = d`` with ``r_d = sum_{l-m=d} w_l w_m`` and expanding
    ``|Phi_d|^2`` the same way turns the entropy into
    ``2 sum_{d,e} r_d r_e sin^2(omega t d e / 2)`` (weights normalised), a sum
    of non-negative terms that vanishes exactly at ``t = 0``.
    """
    p = _as_params(p)
    w = np.exp(_poisson_logs(p.u, p.fock_cutoff))
    return pair_entropy(w, p.omega * float(t))


def pair_entropy(w, phase):
    """``2 sum_{d,e} r_d r_e sin^2(phase d e / 2)`` for level weights ``w``."""
    K = len(w) - 1
    r = np.correlate(w, w, mode="full")
    r = r / math.fsum(r)
    # r_d = r_{-d} and d = 0 or e = 0 contributes nothing: keep d, e >= 1, times 4
    rp = r[K + 1 :]
    d = np.arange(1, K + 1)
    s = np.sin((0.5 * phase) * np.outer(d, d))
    return 8.0 * float(rp @ (s * s) @ rp)


def purity_oracle_osc(p, t, omega0=0.0):
    """Linear entropy from the full two-mode state and an explicit partial trace.

    Eigenphases are ``omega0 (j + l + 1) + omega (j + 1/2)(l + 1/2)``; the
    ``omega0`` part is local and must not change the result.
    """
    p = _as_params(p)
    K = p.fock_cutoff
    amp = np.exp(0.5 * _poisson_logs(p.u, K))
    j = np.arange(K + 1)[:, None]
    l = np.arange(K + 1)[None, :]
    theta = omega0 * (j + l + 1) + p.omega * (j + 0.5) * (l + 0.5)
    psi = np.outer(amp, amp) * np.exp(-1j * theta * float(t))
    rho_a = psi @ psi.conj().T
    return max(0.0, 1.0 - float(np.real(np.sum(rho_a * rho_a.conj()))))


# -- brute force coefficient -------------------------------------------------


def tuple_scan_coeff(n, u, K):
    """``c_n`` straight from the four-index sum, with all indices ``<= K``.

    Walks every ``j > k``; whenever ``j - k`` divides ``n`` the matching
    ``l - m = n / (j - k)`` pairs are added. Divisor sets are not consulted.
    """
    n, K = int(n), int(K)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > K:
        raise ValueError(f"tuple scan needs n <= K, got n={n}, K={K}")
    if K > TUPLE_SCAN_MAX_K:
        raise ValueError(f"K={K} exceeds the tuple-scan budget {TUPLE_SCAN_MAX_K}")
    lw = _poisson_logs(float(u), K)
    # pair[nu] = ln sum_{l-m=nu} w_l w_m
    pair = np.full(K + 1, -math.inf)
    for nu in range(1, K + 1):
        pair[nu] = logsumexp_exact(lw[nu:] + lw[: K + 1 - nu])
    logs = []
    for j in range(1, K + 1):
        for k in range(j):
            mu = j - k
            if n % mu == 0:
                logs.append(lw[j] + lw[k] + pair[n // mu])
    return from_log(LN4 + logsumexp_exact(logs))


# -- per-n record ------------------------------------------------------------


@dataclass(frozen=True)
class CoeffRecord:
    n: int
    c_n: LogReal
    prime_bound: LogReal
    f2_curve: LogReal
    f3_curve: LogReal
    gap: LogReal
    classification: Classification


def coeff_record(n, p, classification=None):
    """All oscillator quantities for one ``n``.

    ``classification`` defaults to the verdict of
    :func:`entprime.classify.classify_osc` on the analytic coefficient.
    """
    from .classify import classify_osc

    p = _as_params(p)
    c = osc_coeff(n, p)
    if classification is None:
        classification = classify_osc(n, p, c)
    return CoeffRecord(
        n=n,
        c_n=c,
        prime_bound=prime_bound(n, p),
        f2_curve=family_curve(2, n, p) if n >= 2 and n % 2 == 0 else None,
        f3_curve=family_curve(3, n, p) if n >= 3 and n % 3 == 0 else None,
        gap=gap(n, p) if n >= 2 else None,
        classification=classification,
    )


def coeff_table(n_max, p, n_min=1):
    p = _as_params(p)
    return [coeff_record(n, p) for n in range(n_min, n_max + 1)]


__all__ = [
    "CoeffRecord",
    "NumericalFault",
    "OscParams",
    "c0_direct",
    "c0_osc",
    "c0_sum_rule",
    "coeff_record",
    "coeff_table",
    "entropy_osc",
    "family_curve",
    "family_excess",
    "fock_cutoff_policy",
    "gap",
    "osc_coeff",
    "prime_bound",
    "purity_oracle_osc",
    "tuple_scan_coeff",
]
