"""Oracle cross-checks and invariants runnable from the command line."""

import functools
import math
import random
import time

from .classify import classify_osc, prime_count
from .lognum import rel_diff, to_real
from .numtheory import is_prime, sieve_classify, sieve_pi
from .oscillator import (
    OscParams,
    c0_direct,
    c0_sum_rule,
    entropy_osc,
    gap,
    osc_coeff,
    purity_oracle_osc,
    tuple_scan_coeff,
)
from .spectral import choose_samples, extract_mode, sample_period
from .spin import (
    SpinParams,
    c0_spin,
    c0_spin_sum_rule,
    entropy_spin,
    purity_oracle_spin,
    spin_coeff,
    spin_gap_region1,
    spin_tuple_scan,
)

SIZES = {
    "quick": {"n_prime": 2000, "n_scan": 24, "two_s": (4, 10), "region_two_s": 24, "n_dft": 12},
    "full": {"n_prime": 10000, "n_scan": 60, "two_s": (4, 10, 20), "region_two_s": 60, "n_dft": 20},
}


def _prime_gaps(size):
    for u in (1.0, 10.0, 1000.0):
        p = OscParams(u)
        for n in range(2, size["n_prime"] + 1):
            if gap(n, p).is_zero != is_prime(n):
                return False, f"u={u} n={n}"
    return True, f"n <= {size['n_prime']}"


def _tuple_scan(size):
    worst = 0.0
    for u in (0.5, 1.0, 2.0, 4.0):
        for n in range(1, size["n_scan"] + 1):
            worst = max(worst, rel_diff(tuple_scan_coeff(n, u, 128), osc_coeff(n, OscParams(u))))
    return worst <= 1e-10, f"max rel {worst:.2e}"


def _dft(size):
    p = OscParams(4.0)
    M = choose_samples(lambda n: osc_coeff(n, p), size["n_dft"], target=1e-16)
    ts = sample_period(functools.partial(entropy_osc, p), p.omega, M)
    worst = 0.0
    for n in range(1, size["n_dft"] + 1):
        c = to_real(osc_coeff(n, p))
        if c > 1e-8:
            worst = max(worst, abs(extract_mode(ts, n) / c - 1))
    return worst <= 1e-6, f"M={M} max rel {worst:.2e}"


def _purity():
    rng = random.Random(7)
    p = OscParams(1.0, fock_cutoff=40)
    sp = SpinParams(8, 1.0)
    d_osc = max(
        abs(entropy_osc(p, t) - purity_oracle_osc(p, t, 2.7))
        for t in (rng.uniform(0, p.period) for _ in range(16))
    )
    d_spin = max(
        abs(entropy_spin(sp, t) - purity_oracle_spin(sp, t, 2.7))
        for t in (rng.uniform(0, sp.period) for _ in range(16))
    )
    return d_osc <= 1e-10 and d_spin <= 1e-12, f"osc {d_osc:.1e} spin {d_spin:.1e}"


def _spin_scan(size):
    for two_s in size["two_s"]:
        for u in (0.5, 1.0):
            sp = SpinParams(two_s, u)
            for n in range(1, two_s**2 + 1):
                a, b = spin_coeff(n, sp), spin_tuple_scan(n, sp)
                if a.is_zero != b.is_zero or rel_diff(a, b) > 1e-12:
                    return False, f"twoS={two_s} u={u} n={n}"
    return True, f"twoS in {size['two_s']}"


def _regions(size):
    two_s = size["region_two_s"]
    sp = SpinParams(two_s, 1.0)
    for n in range(2, two_s + 1):
        if spin_gap_region1(n, sp).is_zero != is_prime(n):
            return False, f"region I n={n}"
    for n in range(two_s + 1, 2 * two_s + 1):
        if spin_coeff(n, sp).is_zero != is_prime(n):
            return False, f"region II n={n}"
    return True, f"twoS={two_s}"


def _sum_rules():
    p = OscParams(1.0)
    a, b = c0_direct(p), c0_sum_rule(p)
    sp = SpinParams(10, 1.0)
    x, y = c0_spin(sp), c0_spin_sum_rule(sp)
    ok = abs(a - b) <= 1e-10 * a and abs(x - y) <= 1e-12 * x
    return ok, f"osc {abs(a - b):.1e} spin {abs(x - y):.1e}"


def _counting(size):
    N = size["n_prime"]
    got = prime_count(N, OscParams(1000.0))
    return got == sieve_pi(N), f"pi({N}) = {got}"


def _classify(size):
    p = OscParams(1000.0)
    bad = [
        n
        for n in range(1, size["n_prime"] + 1)
        if classify_osc(n, p, osc_coeff(n, p)).kind != sieve_classify(n).kind
    ]
    return not bad, f"mismatches {bad[:5]}"


def checks(level):
    size = SIZES[level]
    return [
        ("prime gaps vanish exactly on primes", lambda: _prime_gaps(size)),
        ("tuple scan vs divisor sum", lambda: _tuple_scan(size)),
        ("spectral extraction vs divisor sum", lambda: _dft(size)),
        ("entropy vs state-vector purity", _purity),
        ("spin constrained sum vs tuple scan", lambda: _spin_scan(size)),
        ("spin region I/II laws", lambda: _regions(size)),
        ("sum rules at t = 0", _sum_rules),
        ("prime counting from gap zeros", lambda: _counting(size)),
        ("classification vs sieve", lambda: _classify(size)),
    ]


def run(level="quick", out=print):
    """Run every check, report one line each, return the number of failures."""
    if level not in SIZES:
        raise ValueError(f"level must be one of {sorted(SIZES)}, got {level!r}")
    failures = 0
    for name, fn in checks(level):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        failures += not ok
        out(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail}; {dt:.2f}s)")
    return failures


if __name__ == "__main__":
    raise SystemExit(1 if run() else 0)
