"""
Primes as zeros of the gap
==========================

Every Fourier amplitude c_n of the oscillator entropy sits on or above the
curve 8 e^{-2u} I_1(u) I_n(u). It touches the curve exactly when n is prime.
"""

from entprime.lognum import to_real
from entprime.numtheory import is_prime
from entprime.oscillator import OscParams, gap, osc_coeff, prime_bound
from entprime.classify import prime_count

p = OscParams(1.0)

# a few amplitudes next to the prime bound
print(" n        c_n          bound        gap")
for n in range(2, 21):
    print(f"{n:2d}  {to_real(osc_coeff(n, p)):.6e}  {to_real(prime_bound(n, p)):.6e}  "
          f"{to_real(gap(n, p)):.3e}{'  <- prime' if is_prime(n) else ''}")

# the gap is an exact zero at primes, so counting zeros gives pi(N)
for N in (10, 100, 1000):
    print(f"pi({N}) =", prime_count(N, OscParams(1000.0)))
