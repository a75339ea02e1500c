"""
Log-amplitude tables for plotting
=================================

Writes two CSV files (u = 1 up to n = 40, u = 1000 up to n = 120) with the
amplitudes, the prime bound and the family curves, ready for any plotting
tool. Output goes to the current directory.
"""

import sys

from entprime.cli import main

for u, n_max in (("1", "40"), ("1000", "120")):
    out = f"osc_u{u}.csv"
    code = main(["osc-coeffs", "--u", u, "--n-max", n_max, "--out", out])
    if code:
        sys.exit(code)
    print("wrote", out)
