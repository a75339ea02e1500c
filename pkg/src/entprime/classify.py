"""Primality and semiprime-family verdicts from coefficient values."""

import math

from .lognum import LogReal, from_real, rel_diff
from .numtheory import NOT_DECIDABLE, Classification, Kind
from .oscillator import OscParams, family_curve, gap, prime_bound
from .spin import Region, SpinParams, region_of, spin_prime_bound_region1

TOL_ANALYTIC = 1e-6
TOL_SPECTRAL = 1e-4
SPIN_TOL_ABS = 1e-30
# q**3 has divisors {1, q, q^2, q^3} and sits exactly on the f_q curve
CUBE_COLLISIONS = {2: 8, 3: 27}


def _as_logreal(c):
    return c if isinstance(c, LogReal) else from_real(c)


def _check_tol(tol_rel):
    if not 0 < tol_rel < 1e-2:
        raise ValueError(f"tol_rel must lie in (0, 1e-2), got {tol_rel}")


def classify_osc(n, p, c_measured, tol_rel=TOL_ANALYTIC):
    """Verdict for ``n`` from a measured oscillator amplitude ``c_n``.

    Prime when ``c_n`` matches the prime bound within ``tol_rel``; otherwise a
    semiprime family when it matches that family's curve. ``8`` and ``27``
    also lie on their curves and are reported as ``OtherComposite`` by rule.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_tol(tol_rel)
    if not isinstance(p, OscParams):
        p = OscParams(float(p))
    c = _as_logreal(c_measured)
    if c.sign <= 0:
        raise ValueError(f"coefficients are strictly positive, got {c_measured!r}")
    if n == 1:
        return Classification(Kind.UNIT)
    if rel_diff(c, prime_bound(n, p)) <= tol_rel:
        return Classification(Kind.PRIME)
    fams = set()
    for q, name in ((2, "f2"), (3, "f3")):
        if n % q == 0 and n != CUBE_COLLISIONS[q]:
            if rel_diff(c, family_curve(q, n, p)) <= tol_rel:
                fams.add(name)
    if "f2" in fams:
        kind = Kind.SEMIPRIME_F2
    elif "f3" in fams:
        kind = Kind.SEMIPRIME_F3
    else:
        kind = Kind.OTHER_COMPOSITE
    return Classification(kind, frozenset(fams))


def classify_spin(n, sp, cbar_measured, tol_rel=TOL_ANALYTIC, tol_abs=SPIN_TOL_ABS):
    """Verdict for ``n`` from a spin amplitude ``c̄_n``, or ``NotDecidable``.

    Region I compares against the region I prime bound. Region II calls a
    prime when the amplitude vanishes: a ``LogReal`` must be the exact zero
    element, a plain float must be below ``tol_abs``. Regions III and IV carry
    no verdict. Families are not resolved for spins.
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    _check_tol(tol_rel)
    region = region_of(n, sp)
    if region is Region.I:
        c = _as_logreal(cbar_measured)
        bound = spin_prime_bound_region1(n, sp)
        prime = rel_diff(c, bound) <= tol_rel
    elif region is Region.II:
        if isinstance(cbar_measured, LogReal):
            prime = cbar_measured.is_zero
        else:
            prime = abs(float(cbar_measured)) < tol_abs
    else:
        return NOT_DECIDABLE
    return Classification(Kind.PRIME if prime else Kind.OTHER_COMPOSITE)


def prime_count(N, p, tol_rel=TOL_ANALYTIC):
    """Number of ``2 <= n <= N`` whose gap ``A(n, u)`` vanishes.

    A gap counts as zero when it is the exact zero element or below
    ``tol_rel`` relative to the prime bound.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if not isinstance(p, OscParams):
        p = OscParams(float(p))
    return sum(1 for n in range(2, int(N) + 1) if gap_is_zero(n, p, tol_rel))


def gap_is_zero(n, p, tol_rel=TOL_ANALYTIC):
    g = gap(n, p)
    if g.is_zero:
        return True
    return g.log_mag - prime_bound(n, p).log_mag < math.log(tol_rel)
