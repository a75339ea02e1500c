import pytest

from entprime.classify import (
    TOL_SPECTRAL,
    classify_osc,
    classify_spin,
    gap_is_zero,
    prime_count,
)
from entprime.lognum import ZERO, from_real, to_real
from entprime.numtheory import Kind, sieve_classify, sieve_pi
from entprime.oscillator import OscParams, family_curve, osc_coeff, prime_bound
from entprime.spin import SpinParams, spin_coeff

P1 = OscParams(1.0)


def test_prime_from_bound():
    assert classify_osc(11, P1, prime_bound(11, P1)).kind is Kind.PRIME


def test_unit():
    assert classify_osc(1, P1, osc_coeff(1, P1)).kind is Kind.UNIT


def test_cube_exception():
    c8 = osc_coeff(8, P1)
    assert c8 == family_curve(2, 8, P1) or abs(to_real(c8) / to_real(family_curve(2, 8, P1)) - 1) < 1e-14
    assert classify_osc(8, P1, c8).kind is Kind.OTHER_COMPOSITE
    assert classify_osc(27, P1, osc_coeff(27, P1)).kind is Kind.OTHER_COMPOSITE


def test_six_has_both_families():
    got = classify_osc(6, P1, osc_coeff(6, P1))
    assert got.kind is Kind.SEMIPRIME_F2
    assert got.families == {"f2", "f3"}


def test_float_input_accepted():
    c = to_real(osc_coeff(15, P1))
    assert classify_osc(15, P1, c).kind is Kind.SEMIPRIME_F3


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        classify_osc(5, P1, 0.0)
    with pytest.raises(ValueError):
        classify_osc(5, P1, -1.0)
    with pytest.raises(ValueError):
        classify_osc(0, P1, 1.0)
    with pytest.raises(ValueError):
        classify_osc(5, P1, 1.0, tol_rel=0.5)


def test_matches_sieve_up_to_200():
    for n in range(1, 201):
        assert classify_osc(n, P1, osc_coeff(n, P1)) == sieve_classify(n)


def test_perturbed_prime_is_not_prime():
    c = from_real(to_real(prime_bound(13, P1)) * (1 + 1e-3))
    assert classify_osc(13, P1, c).kind is not Kind.PRIME


def test_verdict_independent_of_u():
    ref = [classify_osc(n, 0.5, osc_coeff(n, 0.5)) for n in range(1, 501)]
    for u in (1.0, 10.0, 1000.0):
        p = OscParams(u)
        assert [classify_osc(n, p, osc_coeff(n, p)) for n in range(1, 501)] == ref


def test_spin_examples():
    sp = SpinParams(12, 1.0)
    assert classify_spin(7, sp, spin_coeff(7, sp)).kind is Kind.PRIME
    assert classify_spin(8, sp, spin_coeff(8, sp)).kind is Kind.OTHER_COMPOSITE
    sp6 = SpinParams(6, 1.0)
    assert classify_spin(11, sp6, 0.0).kind is Kind.PRIME
    assert classify_spin(11, sp6, ZERO).kind is Kind.PRIME
    assert classify_spin(10, sp6, spin_coeff(10, sp6)).kind is Kind.OTHER_COMPOSITE
    assert classify_spin(20, sp6, spin_coeff(20, sp6)).kind is Kind.NOT_DECIDABLE
    assert classify_spin(40, sp6, ZERO).kind is Kind.NOT_DECIDABLE
    with pytest.raises(ValueError):
        classify_spin(1, sp6, 1.0)


def test_spin_region_two_tiny_composite_is_exact():
    # at twoS = 60 the region II composite 118 = 2 * 59 is ~1e-35, below the float floor
    sp = SpinParams(60, 1.0)
    c = spin_coeff(118, sp)
    assert to_real(c) < 1e-30
    assert classify_spin(118, sp, c).kind is Kind.OTHER_COMPOSITE


def test_prime_count_small():
    assert prime_count(10, P1) == 4
    assert prime_count(100, P1) == 25 == sieve_pi(100)
    with pytest.raises(ValueError):
        prime_count(1, P1)


def test_prime_count_steps_at_primes():
    p = OscParams(3.0)
    prev = 0
    for N in range(2, 400):
        cur = prime_count(N, p)
        assert cur - prev == (sieve_classify(N).kind is Kind.PRIME)
        prev = cur


def test_gap_is_zero_tolerance():
    assert gap_is_zero(13, P1)
    assert not gap_is_zero(12, P1)


def test_spectral_tolerance_default():
    assert TOL_SPECTRAL == 1e-4
