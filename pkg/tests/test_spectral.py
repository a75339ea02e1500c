import functools
import math

import mpmath as mp
import numpy as np
import pytest

from entprime.lognum import ZERO, to_real
from entprime.oscillator import OscParams, c0_osc, entropy_osc, osc_coeff
from entprime.spectral import (
    alias_budget,
    choose_samples,
    extract_dc,
    extract_mode,
    extract_modes,
    reconstruct,
    sample_period,
)
from entprime.spin import SpinParams, c0_spin, entropy_spin, spin_coeff


def synthetic(c0, modes):
    return lambda t: c0 - sum(c * math.cos(n * t) for n, c in modes.items())


def test_constant_signal():
    ts = sample_period(lambda t: 0.25, 1.0, 8)
    assert list(ts.values) == [0.25] * 8
    assert extract_dc(ts) == 0.25


def test_sampling_grid():
    ts = sample_period(lambda t: t, 2.0, 5)
    assert ts.values[0] == 0.0
    assert ts.times[-1] == pytest.approx(math.pi * 4 / 5)
    with pytest.raises(ValueError):
        sample_period(lambda t: t, 1.0, 2)


def test_errors_propagate():
    def boom(t):
        raise RuntimeError("evaluator failed")

    with pytest.raises(RuntimeError):
        sample_period(boom, 1.0, 8)


def test_single_mode_orthogonality():
    ts = sample_period(synthetic(0.4, {5: 0.3}), 1.0, 64)
    assert extract_mode(ts, 5) == pytest.approx(0.3, abs=1e-12)
    assert extract_mode(ts, 4) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        extract_mode(ts, 32)
    with pytest.raises(ValueError):
        extract_mode(ts, 0)


def test_aliasing_contamination_formula():
    M = 16
    ts = sample_period(synthetic(0.0, {3: 0.2, M - 3: 0.05, M + 3: 0.01}), 1.0, M)
    assert extract_mode(ts, 3) == pytest.approx(0.26, abs=1e-12)


def test_linearity():
    f = synthetic(0.1, {2: 0.3, 7: -0.2})
    g = synthetic(0.3, {2: 0.1, 5: 0.4})
    M = 32
    a, b = sample_period(f, 1.0, M), sample_period(g, 1.0, M)
    s = sample_period(lambda t: f(t) + g(t), 1.0, M)
    for n in range(1, 16):
        assert extract_mode(s, n) == pytest.approx(extract_mode(a, n) + extract_mode(b, n), abs=1e-12)


def test_osc_t0_sample_is_zero():
    p = OscParams(1.0)
    ts = sample_period(functools.partial(entropy_osc, p), p.omega, 16)
    assert ts.values[0] == 0.0


def test_spin_round_trip():
    sp = SpinParams(4, 1.0)
    ts = sample_period(functools.partial(entropy_spin, sp), sp.omega, 64)
    modes = extract_modes(ts, 31)
    rec = reconstruct(extract_dc(ts), modes, 64)
    assert np.max(np.abs(rec - ts.values)) < 1e-10


def test_spin_dft_closure():
    sp = SpinParams(6, 1.0)
    M = 2 * sp.two_s**2 + 1
    ts = sample_period(functools.partial(entropy_spin, sp), sp.omega, M)
    for n in range(1, sp.two_s**2 + 1):
        assert extract_mode(ts, n) == pytest.approx(to_real(spin_coeff(n, sp)), abs=1e-9)
    ts2 = sample_period(functools.partial(entropy_spin, sp), sp.omega, M + 1)
    assert extract_dc(ts2) == pytest.approx(c0_spin(sp), abs=1e-12)


def test_osc_dc_matches_c0():
    p = OscParams(1.0)
    ts = sample_period(functools.partial(entropy_osc, p), p.omega, 512)
    assert extract_dc(ts) == pytest.approx(to_real(c0_osc(p)), abs=1e-9)


def test_osc_round_trip_and_parseval():
    p = OscParams(2.0)
    tail = lambda n: osc_coeff(n, p)
    M = 128
    budget = alias_budget(tail, M)
    ts = sample_period(functools.partial(entropy_osc, p), p.omega, M)
    modes = extract_modes(ts, M // 2 - 1)
    dc = extract_dc(ts)
    # Nyquist term carries half weight in the cosine basis
    nyq = -math.fsum(ts.values * np.cos(np.pi * np.arange(M))) / M
    rec = reconstruct(dc, modes, M) - nyq * np.cos(np.pi * np.arange(M))
    assert np.max(np.abs(rec - ts.values)) <= 10 * budget + 1e-14
    lhs = math.fsum(ts.values**2) / M
    rhs = dc**2 + 0.5 * math.fsum(modes**2) + nyq**2
    assert lhs == pytest.approx(rhs, abs=10 * budget + 1e-14)


def test_alias_budget_spin_is_zero():
    sp = SpinParams(6, 1.0)
    assert alias_budget(lambda n: spin_coeff(n, sp), 2 * 36 + 2) == 0.0


def test_alias_budget_osc_u1_against_mpmath():
    # independent tail: c_n from the divisor sum evaluated with mpmath's besseli
    def mp_tail(M, n_stop=400):
        with mp.workdps(30):
            tot = mp.mpf(0)
            for n in range(M // 2, n_stop):
                s = mp.fsum(
                    mp.besseli(d, 1) * mp.besseli(n // d, 1) for d in range(1, n + 1) if n % d == 0
                )
                tot += 4 * mp.e**-2 * s
            return float(tot)

    p = OscParams(1.0)
    b64 = alias_budget(lambda n: osc_coeff(n, p), 64)
    assert b64 == pytest.approx(mp_tail(64), rel=1e-8)
    assert 1e-9 < b64 < 2e-9
    assert alias_budget(lambda n: osc_coeff(n, p), 128) < 1e-10


def test_alias_budget_monotone():
    p = OscParams(3.0)
    vals = [alias_budget(lambda n: osc_coeff(n, p), M) for M in (8, 16, 32, 64, 128, 256)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        alias_budget(lambda n: ZERO, 3)


def test_choose_samples():
    p = OscParams(1.0)
    M = choose_samples(lambda n: osc_coeff(n, p), 10)
    assert M == 128
    assert choose_samples(lambda n: osc_coeff(n, p), 70) == 256


def test_measurement_pathway_u40():
    p = OscParams(40.0)
    M = choose_samples(lambda n: osc_coeff(n, p), 30, target=1e-16)
    ts = sample_period(functools.partial(entropy_osc, p), p.omega, M)
    for n in range(1, 31):
        c = to_real(osc_coeff(n, p))
        assert c > 1e-8
        assert extract_mode(ts, n) == pytest.approx(c, rel=1e-6)
