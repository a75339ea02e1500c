"""Row tables for the oscillator and spin coefficient datasets, CSV/JSON I/O.

Values are ``log10`` of the coefficient. An exact zero is written as the
string ``"-inf"``; a column that does not apply to a row is empty in CSV and
``null`` in JSON.
"""

import csv
import io
import json
import math

from . import __version__
from .classify import TOL_ANALYTIC, SPIN_TOL_ABS, classify_spin
from .oscillator import OscParams, coeff_record
from .spin import Region, SpinParams, region_of, spin_coeff, spin_prime_bound_region1

OSC_COLUMNS = [
    "n",
    "log10_c_n",
    "log10_prime_bound",
    "log10_f2_curve",
    "log10_f3_curve",
    "log10_gap",
    "kind",
    "families",
]
SPIN_COLUMNS = ["n", "region", "log10_cbar", "log10_region1_bound", "kind"]
NEG_INF = "-inf"


def log10_value(x):
    """``log10`` of a LogReal; ``"-inf"`` for zero, ``None`` for a missing value."""
    if x is None:
        return None
    if x.is_zero:
        return NEG_INF
    return x.log10()


def osc_rows(n_max, p, n_min=1):
    rows = []
    for n in range(n_min, n_max + 1):
        rec = coeff_record(n, p)
        rows.append(
            {
                "n": n,
                "log10_c_n": log10_value(rec.c_n),
                "log10_prime_bound": log10_value(rec.prime_bound),
                "log10_f2_curve": log10_value(rec.f2_curve),
                "log10_f3_curve": log10_value(rec.f3_curve),
                "log10_gap": log10_value(rec.gap),
                "kind": str(rec.classification.kind),
                "families": rec.classification.families_str(),
            }
        )
    return rows


def spin_rows(sp, n_max=None):
    n_max = sp.two_s**2 + 10 if n_max is None else n_max
    rows = []
    for n in range(2, n_max + 1):
        region = region_of(n, sp)
        cbar = spin_coeff(n, sp)
        bound = spin_prime_bound_region1(n, sp) if region is Region.I else None
        rows.append(
            {
                "n": n,
                "region": str(region),
                "log10_cbar": log10_value(cbar),
                "log10_region1_bound": log10_value(bound),
                "kind": str(classify_spin(n, sp, cbar).kind),
            }
        )
    return rows


def osc_meta(p, tol=TOL_ANALYTIC):
    return {
        "system": "osc",
        "u": p.u,
        "omega": p.omega,
        "tolerances": {"tol_rel": tol, "series_eps": p.series_eps},
        "artifact_version": __version__,
    }


def spin_meta(sp, tol=TOL_ANALYTIC, tol_abs=SPIN_TOL_ABS):
    return {
        "system": "spin",
        "two_s": sp.two_s,
        "u": sp.u,
        "omega": sp.omega,
        "tolerances": {"tol_rel": tol, "tol_abs": tol_abs},
        "artifact_version": __version__,
    }


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(rows, columns):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[c]) for c in columns])
    return buf.getvalue()


def to_json(rows, meta):
    return json.dumps({"meta": meta, "rows": rows}, indent=1, allow_nan=False) + "\n"


def _parse_cell(col, text):
    if col in ("n",):
        return int(text)
    if col.startswith("log10_"):
        if text == "":
            return None
        if text == NEG_INF:
            return NEG_INF
        return float(text)
    return text


def read_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    return [{k: _parse_cell(k, v) for k, v in row.items()} for row in reader]


def read_json(text):
    doc = json.loads(text)
    return doc["meta"], doc["rows"]


def same_value(a, b, tol=0.0):
    """Compare two log10 table cells (floats, ``"-inf"`` or ``None``)."""
    if isinstance(a, float) and isinstance(b, float):
        return math.isclose(a, b, rel_tol=tol, abs_tol=tol) if tol else a == b
    return a == b


__all__ = [
    "NEG_INF",
    "OSC_COLUMNS",
    "SPIN_COLUMNS",
    "OscParams",
    "SpinParams",
    "log10_value",
    "osc_meta",
    "osc_rows",
    "read_csv",
    "read_json",
    "same_value",
    "spin_meta",
    "spin_rows",
    "to_csv",
    "to_json",
]
