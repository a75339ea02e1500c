"""
Finite spins: four regions
==========================

With spin S the amplitudes are finite sums. Below 2S the gap works as for
the oscillator; between 2S and 4S primes give exact zeros; beyond that a
zero no longer singles out primes, and past 4S^2 everything vanishes.
"""

from entprime.numtheory import is_prime
from entprime.spin import SpinParams, region_of, spin_coeff
from entprime.classify import classify_spin

sp = SpinParams(12, 1.0)
for n in (5, 9, 13, 14, 26, 34, 49, 143, 145):
    c = spin_coeff(n, sp)
    print(f"{n:4d} region {region_of(n, sp)!s:3s} zero={c.is_zero!s:5s} prime={is_prime(n)!s:5s} "
          f"-> {classify_spin(n, sp, c).kind}")

# composites that vanish in region III
print([n for n in range(25, 145) if not is_prime(n) and spin_coeff(n, sp).is_zero])
