"""
Reading the primes off a sampled entropy curve
==============================================

Sample S_L(t) over one period, take cosine amplitudes with a DFT, and feed
the measured numbers to the classifier. u = 40 keeps every mode up to 30
comfortably above 1e-8.
"""

import functools

import numpy as np

from entprime.classify import TOL_SPECTRAL, classify_osc
from entprime.lognum import from_real, to_real
from entprime.oscillator import OscParams, c0_osc, entropy_osc, osc_coeff
from entprime.spectral import alias_budget, choose_samples, extract_mode, sample_period

p = OscParams(40.0)
tail = lambda n: osc_coeff(n, p)
M = choose_samples(tail, 30, target=1e-16)
print("samples per period:", M, " folded tail:", alias_budget(tail, M))

ts = sample_period(functools.partial(entropy_osc, p), p.omega, M)
print("S_L range:", ts.values.min(), ts.values.max())

for n in range(1, 31):
    c = extract_mode(ts, n)
    v = classify_osc(n, p, from_real(c), TOL_SPECTRAL)
    err = abs(c / to_real(osc_coeff(n, p)) - 1)
    print(f"{n:2d} {c:.8e}  rel err {err:.1e}  {v.kind} {v.families_str()}")

print("mean of samples:", np.mean(ts.values), " c0:", to_real(c0_osc(p)))
