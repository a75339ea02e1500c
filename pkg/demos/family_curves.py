"""
Semiprime families and the cube exceptions
==========================================

Numbers 2p (p an odd prime) all land on one curve, and so do 3p.
The curve for q is reached by 2p and 3p, but also by q**3, which is why
8 and 27 are handled by rule when classifying.
"""

from entprime.oscillator import OscParams, family_excess
from entprime.numtheory import sieve_classify

u = 1.0
for q in (2, 3):
    on = [n for n in range(q, 200, q) if family_excess(q, n, u).is_zero]
    below = [n for n in range(q, 200, q) if family_excess(q, n, u).sign < 0]
    print(f"f{q}: on curve {on[:12]} ...")
    print(f"f{q}: below {below}")

for n in (6, 8, 14, 27, 33):
    c = sieve_classify(n)
    print(n, c.kind, c.families_str() or "-")
