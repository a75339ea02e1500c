"""``entprime`` command line: coefficient tables, verdicts, pi(N), entropy samples.

Exit codes: 0 success (or a decided verdict), 1 usage/runtime error,
2 ``NotDecidable`` from ``classify``.
"""

import argparse
import functools
import sys

from . import tables
from .classify import (
    SPIN_TOL_ABS,
    TOL_ANALYTIC,
    TOL_SPECTRAL,
    classify_osc,
    classify_spin,
    prime_count,
)
from .lognum import from_real
from .numtheory import sieve_pi
from .oscillator import OscParams, entropy_osc, gap, osc_coeff, prime_bound
from .spectral import choose_samples, extract_mode, sample_period
from .spin import (
    Region,
    SpinParams,
    entropy_spin,
    region_of,
    spin_coeff,
    spin_gap_region1,
    spin_prime_bound_region1,
)

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2
SPECTRAL_SPIN_TOL_ABS = 1e-12


class CliError(Exception):
    pass


def _write(text, out_path):
    if out_path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {out_path}: {exc}") from exc


def _render(rows, columns, meta, fmt):
    if fmt == "csv":
        return tables.to_csv(rows, columns)
    return tables.to_json(rows, meta)


def cmd_osc_coeffs(args):
    if not 1 <= args.n_max <= 100_000:
        raise CliError(f"--n-max must lie in [1, 100000], got {args.n_max}")
    p = OscParams(args.u, omega=args.omega)
    rows = tables.osc_rows(args.n_max, p)
    _write(_render(rows, tables.OSC_COLUMNS, tables.osc_meta(p), args.format), args.out)
    return EXIT_OK


def cmd_spin_coeffs(args):
    if not 1 <= args.two_s <= 200:
        raise CliError(f"--two-s must lie in [1, 200], got {args.two_s}")
    sp = SpinParams(args.two_s, args.u, omega=args.omega)
    rows = tables.spin_rows(sp)
    _write(_render(rows, tables.SPIN_COLUMNS, tables.spin_meta(sp), args.format), args.out)
    return EXIT_OK


def _fmt(x):
    v = tables.log10_value(x)
    return "" if v is None else (v if isinstance(v, str) else repr(v))


def _classify_osc(args):
    p = OscParams(args.u, omega=args.omega)
    n = args.n
    if args.source == "analytic":
        c = osc_coeff(n, p)
        tol = args.tol or TOL_ANALYTIC
    else:
        M = choose_samples(lambda k: osc_coeff(k, p), n, target=1e-16)
        ts = sample_period(functools.partial(entropy_osc, p), p.omega, M)
        c = from_real(extract_mode(ts, n))
        tol = args.tol or TOL_SPECTRAL
        if c.sign <= 0:
            raise CliError(f"extracted amplitude of mode {n} is not positive: {c}")
    verdict = classify_osc(n, p, c, tol)
    evidence = {
        "coefficient_log10": _fmt(c),
        "prime_bound_log10": _fmt(prime_bound(n, p)),
        "gap_log10": _fmt(gap(n, p)) if n >= 2 else "",
    }
    return verdict, evidence, tol


def _classify_spin(args):
    if args.two_s is None:
        raise CliError("--two-s is required for the spin system")
    sp = SpinParams(args.two_s, args.u, omega=args.omega)
    n = args.n
    if n < 2:
        raise CliError("the spin system classifies n >= 2 only")
    if args.source == "analytic":
        c = spin_coeff(n, sp)
        tol, tol_abs = args.tol or TOL_ANALYTIC, SPIN_TOL_ABS
    else:
        M = 2 * sp.two_s**2 + 2
        ts = sample_period(functools.partial(entropy_spin, sp), sp.omega, M)
        c = extract_mode(ts, n) if n < M / 2 else 0.0
        tol, tol_abs = args.tol or TOL_SPECTRAL, SPECTRAL_SPIN_TOL_ABS
    verdict = classify_spin(n, sp, c, tol, tol_abs)
    region = region_of(n, sp)
    evidence = {
        "region": str(region),
        "coefficient_log10": _fmt(c if not isinstance(c, float) else from_real(c)),
    }
    if region is Region.I:
        evidence["prime_bound_log10"] = _fmt(spin_prime_bound_region1(n, sp))
        evidence["gap_log10"] = _fmt(spin_gap_region1(n, sp))
    return verdict, evidence, tol


def cmd_classify(args):
    if args.n < 1:
        raise CliError(f"n must be >= 1, got {args.n}")
    if args.system == "osc":
        verdict, evidence, tol = _classify_osc(args)
    else:
        verdict, evidence, tol = _classify_spin(args)
    lines = [
        f"n: {args.n}",
        f"system: {args.system}",
        f"source: {args.source}",
        f"tol_rel: {tol!r}",
        f"kind: {verdict.kind}",
        f"families: {verdict.families_str()}",
    ]
    lines += [f"{k}: {v}" for k, v in evidence.items()]
    print("\n".join(lines))
    return EXIT_OK if verdict.decided else EXIT_UNDECIDED


def cmd_pi(args):
    if args.N < 2:
        raise CliError(f"N must be >= 2, got {args.N}")
    got = prime_count(args.N, OscParams(args.u), args.tol)
    ref = sieve_pi(args.N)
    print(f"{got} {ref} {'MATCH' if got == ref else 'MISMATCH'}")
    return EXIT_OK


def cmd_entropy(args):
    if args.system == "osc":
        p = OscParams(args.u, omega=args.omega)
        f = functools.partial(entropy_osc, p)
    else:
        if args.two_s is None:
            raise CliError("--two-s is required for the spin system")
        p = SpinParams(args.two_s, args.u, omega=args.omega)
        f = functools.partial(entropy_spin, p)
    ts = sample_period(f, p.omega, args.samples)
    rows = [
        {"t_over_T": j / ts.m_samples, "S_L": float(v)} for j, v in enumerate(ts.values)
    ]
    if args.format == "csv":
        text = tables.to_csv(rows, ["t_over_T", "S_L"])
    else:
        meta = {"system": args.system, "u": args.u, "omega": args.omega, "samples": args.samples}
        if args.system == "spin":
            meta["two_s"] = args.two_s
        text = tables.to_json(rows, meta)
    _write(text, args.out)
    return EXIT_OK


def cmd_selftest(args):
    from .selftest import run

    return EXIT_ERROR if run(args.level) else EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="entprime",
        description="Primes from the Fourier amplitudes of linear-entropy dynamics.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, u_default=1.0):
        sp.add_argument("--u", type=float, default=u_default, help="initial-state intensity u")
        sp.add_argument("--omega", type=float, default=1.0, help="coupling frequency (default 1)")

    def output(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default="-", help="output path, '-' for stdout")

    s = sub.add_parser("osc-coeffs", help="oscillator coefficient table")
    common(s)
    s.add_argument("--n-max", type=int, default=40)
    output(s)
    s.set_defaults(func=cmd_osc_coeffs)

    s = sub.add_parser("spin-coeffs", help="spin coefficient table over n in [2, 4S^2+10]")
    common(s)
    s.add_argument("--two-s", type=int, required=True, help="twice the spin, 2S")
    output(s)
    s.set_defaults(func=cmd_spin_coeffs)

    s = sub.add_parser("classify", help="classify one integer")
    s.add_argument("n", type=int)
    s.add_argument("--system", choices=("osc", "spin"), default="osc")
    common(s)
    s.add_argument("--two-s", type=int, default=None)
    s.add_argument("--source", choices=("analytic", "spectral"), default="analytic")
    s.add_argument("--tol", type=float, default=None, help="relative tolerance")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("pi", help="count primes <= N from the zeros of the gap")
    s.add_argument("N", type=int)
    s.add_argument("--u", type=float, default=1000.0)
    s.add_argument("--tol", type=float, default=TOL_ANALYTIC)
    s.set_defaults(func=cmd_pi)

    s = sub.add_parser("entropy", help="sample the linear entropy over one period")
    s.add_argument("--system", choices=("osc", "spin"), default="osc")
    common(s)
    s.add_argument("--two-s", type=int, default=None)
    s.add_argument("--samples", "-M", type=int, default=256)
    output(s)
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("selftest", help="run the oracle cross-checks")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"entprime: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
