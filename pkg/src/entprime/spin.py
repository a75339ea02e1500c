"""Two coupled spins of size S started in a product of spin coherent states.

Only ``twoS = 2S`` is stored. The weights ``v_j = C(2S, j) u^j (1+u)^{-2S}``
sum to one, and the linear entropy has finitely many Fourier modes,
``c̄_n = 0`` for ``n > (2S)^2``. Nothing in this module is truncated.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .lognum import ZERO, from_log, logsumexp_exact
from .numtheory import divisors
from .oscillator import pair_entropy
from .special import g_poly_log, log_binomials

LN4 = math.log(4.0)
LN8 = math.log(8.0)
TUPLE_SCAN_MAX_TWO_S = 40


@dataclass(frozen=True)
class SpinParams:
    two_s: int
    u: float
    omega: float = 1.0

    def __post_init__(self):
        if int(self.two_s) != self.two_s or self.two_s < 1:
            raise ValueError(f"twoS must be a positive integer, got {self.two_s}")
        object.__setattr__(self, "two_s", int(self.two_s))
        if not self.u > 0:
            raise ValueError(f"u must be positive, got {self.u}")
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")

    @property
    def n_modes(self):
        return self.two_s**2

    @property
    def period(self):
        return 2 * math.pi / self.omega

    def _norm_log(self):
        # ln (1+u)^{-8S}
        return -4 * self.two_s * math.log1p(self.u)


class Region(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    def __str__(self):
        return self.value


def region_of(n, sp):
    """I: 1 < n <= 2S, II: 2S < n <= 4S, III: 4S < n <= 4S^2, IV: beyond."""
    if n < 2:
        raise ValueError(f"regions start at n = 2, got {n}")
    if n <= sp.two_s:
        return Region.I
    if n <= 2 * sp.two_s:
        return Region.II
    if n <= sp.two_s**2:
        return Region.III
    return Region.IV


def lambda_bar_set(n, sp, k, m):
    """Divisors ``mu`` of ``n`` with ``mu <= 2S - k`` and ``n / mu <= 2S - m``."""
    if not (0 <= k < sp.two_s and 0 <= m < sp.two_s):
        raise ValueError(f"k, m must lie in [0, {sp.two_s - 1}], got k={k}, m={m}")
    return [mu for mu in divisors(n) if mu <= sp.two_s - k and n // mu <= sp.two_s - m]


def _admissible(n, sp, mus):
    return [mu for mu in mus if mu <= sp.two_s and n // mu <= sp.two_s]


def _g_pair_sum(n, sp, mus, scale_log):
    if not mus:
        return ZERO
    logs = [
        g_poly_log(mu, sp.two_s, sp.u).log_mag + g_poly_log(n // mu, sp.two_s, sp.u).log_mag
        for mu in mus
    ]
    return from_log(scale_log + logsumexp_exact(sorted(logs)))


def spin_coeff(n, sp):
    """Fourier amplitude ``c̄_n(u)``.

    A divisor ``mu`` belongs to ``Λ̄_n^(k,m)`` exactly on the rectangle
    ``0 <= k <= 2S - mu``, ``0 <= m <= 2S - n/mu``, and the terms over that
    rectangle factor into ``G_mu(u) G_{n/mu}(u)``. The coefficient is the
    admissible-divisor sum of those products.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > sp.two_s**2:
        return ZERO
    mus = _admissible(n, sp, divisors(n))
    return _g_pair_sum(n, sp, mus, LN4 + sp._norm_log())


def spin_coeff_literal(n, sp):
    """``c̄_n`` summed term by term over ``k, m`` and the sets ``Λ̄_n^(k,m)``.

    O((2S)^2 d(n)); kept as a cross-check of :func:`spin_coeff`.
    """
    n = int(n)
    lb = log_binomials(sp.two_s)
    lu = math.log(sp.u)
    logs = []
    for k in range(sp.two_s):
        for m in range(sp.two_s):
            for mu in lambda_bar_set(n, sp, k, m):
                nu = n // mu
                logs.append(
                    lb[k + mu] + lb[k] + lb[m + nu] + lb[m] + (2 * k + 2 * m + mu + nu) * lu
                )
    if not logs:
        return ZERO
    return from_log(LN4 + sp._norm_log() + logsumexp_exact(logs))


def _check_region1(n, sp):
    if not 2 <= n <= sp.two_s:
        raise ValueError(f"n={n} is outside region I (2..{sp.two_s})")


def spin_prime_bound_region1(n, sp):
    """``8 (1+u)^{-8S} G_1(u) G_n(u)``; equals ``c̄_n`` for primes in region I."""
    _check_region1(n, sp)
    return from_log(
        LN8 + sp._norm_log()
        + g_poly_log(1, sp.two_s, sp.u).log_mag
        + g_poly_log(n, sp.two_s, sp.u).log_mag
    )


def spin_gap_region1(n, sp):
    """Region I excess ``c̄_n - c̄_n^(p)`` over the reduced divisors; zero iff n prime."""
    _check_region1(n, sp)
    mus = _admissible(n, sp, divisors(n).reduced)
    return _g_pair_sum(n, sp, mus, LN4 + sp._norm_log())


# -- brute force -------------------------------------------------------------


@lru_cache(maxsize=16)
def _tuple_grid(two_s, u):
    lb = log_binomials(two_s)
    lu = math.log(u)
    idx = np.arange(two_s + 1)
    j, k, l, m = np.meshgrid(idx, idx, idx, idx, indexing="ij", sparse=True)
    keep = (j > k) & (l > m)
    prod = ((j - k) * (l - m))[keep]
    logs = (lb[j] + lb[k] + lb[l] + lb[m] + (j + k + l + m) * lu)[keep]
    return prod, logs


def spin_tuple_scan(n, sp):
    """``c̄_n`` from all tuples ``j > k``, ``l > m`` with ``(j-k)(l-m) = n``."""
    if sp.two_s > TUPLE_SCAN_MAX_TWO_S:
        raise ValueError(f"twoS={sp.two_s} exceeds the tuple-scan budget {TUPLE_SCAN_MAX_TWO_S}")
    prod, logs = _tuple_grid(sp.two_s, float(sp.u))
    hit = logs[prod == int(n)]
    if hit.size == 0:
        return ZERO
    return from_log(LN4 + sp._norm_log() + logsumexp_exact(hit))


# -- DC term and time signal -------------------------------------------------


def _weights(sp):
    lb = log_binomials(sp.two_s)
    j = np.arange(sp.two_s + 1)
    return np.exp(lb + j * math.log(sp.u) - sp.two_s * math.log1p(sp.u))


def c0_spin(sp):
    """DC term from the ``(j-k)(l-m) = 0`` tuples: ``1 - (2Q - Q^2) = (1 - Q)^2``."""
    v = _weights(sp)
    q = math.fsum(v * v)
    return (1.0 - q) ** 2


def c0_spin_sum_rule(sp):
    """``sum_{n=1}^{4S^2} c̄_n``, which must equal :func:`c0_spin`."""
    logs = [spin_coeff(n, sp).log_mag for n in range(1, sp.n_modes + 1)]
    return math.exp(logsumexp_exact(logs))


def entropy_spin(sp, t):
    """``S̄_L(t) = 1 - sum_{l,m} v_l v_m |Psi_{l-m}(t)|^2``.

    Evaluated in the same non-negative ``sin^2`` form as the oscillator
    entropy, so ``t = 0`` gives exactly zero.
    """
    return pair_entropy(_weights(sp), sp.omega * float(t))


def purity_oracle_spin(sp, t, omega0=0.0):
    """Linear entropy of spin A from the full state vector.

    Eigenphases ``omega0 (m_A + m_B) + omega m_A m_B`` with ``m = n - S``.
    """
    S = sp.two_s / 2
    amp = np.sqrt(_weights(sp))
    mz = np.arange(sp.two_s + 1) - S
    theta = omega0 * (mz[:, None] + mz[None, :]) + sp.omega * np.outer(mz, mz)
    psi = np.outer(amp, amp) * np.exp(-1j * theta * float(t))
    rho_a = psi @ psi.conj().T
    return max(0.0, 1.0 - float(np.real(np.sum(rho_a * rho_a.conj()))))
