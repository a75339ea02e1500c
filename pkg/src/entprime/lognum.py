"""Signed log-magnitude reals.

Coefficients in this package span hundreds of thousands of orders of
magnitude (``e^{-2u} I_1(u) I_n(u)`` at ``u = 1e3`` multiplies numbers near
``e^{-2000}`` and ``e^{+1000}``), so everything is carried as
``sign * exp(log_mag)``.

Saturation: ``log_mag`` is an ordinary float. Adding two of them can overflow
to ``inf`` only for magnitudes beyond ``e^{1e308}``, which nothing here comes
near; if it happens the result carries ``log_mag = inf`` and ``to_real``
returns ``±inf``.
"""

import math
from dataclasses import dataclass

import numpy as np

# relative difference under which a signed sum is snapped to exact zero
CANCEL_REL = 1e-14


@dataclass(frozen=True, slots=True)
class LogReal:
    sign: int
    log_mag: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign != 0 and math.isnan(self.log_mag):
            raise ValueError("log_mag is NaN")

    @property
    def is_zero(self):
        return self.sign == 0

    def __mul__(self, other):
        return log_mul(self, other)

    def __add__(self, other):
        return log_add(self, other)

    def __sub__(self, other):
        return log_add(self, -other)

    def __neg__(self):
        return LogReal(-self.sign, self.log_mag)

    def __float__(self):
        return to_real(self)

    def log10(self):
        """Base-10 log of |x|; ``-inf`` for the zero element."""
        if self.sign == 0:
            return -math.inf
        return self.log_mag / math.log(10.0)

    def __repr__(self):
        if self.sign == 0:
            return "LogReal(0)"
        return f"LogReal({'+' if self.sign > 0 else '-'}, {self.log_mag!r})"


ZERO = LogReal(0, -math.inf)
ONE = LogReal(1, 0.0)


def from_log(log_mag, sign=1):
    if sign == 0 or log_mag == -math.inf:
        return ZERO
    return LogReal(sign, float(log_mag))


def from_real(x):
    x = float(x)
    if x == 0.0:
        return ZERO
    return LogReal(1 if x > 0 else -1, math.log(abs(x)))


def to_real(a):
    if a.sign == 0:
        return 0.0
    return a.sign * math.exp(a.log_mag)


def log_mul(a, b):
    if a.sign == 0 or b.sign == 0:
        return ZERO
    return LogReal(a.sign * b.sign, a.log_mag + b.log_mag)


def log_div(a, b):
    if b.sign == 0:
        raise ZeroDivisionError("division by the zero LogReal")
    if a.sign == 0:
        return ZERO
    return LogReal(a.sign * b.sign, a.log_mag - b.log_mag)


def log_add(a, b):
    if a.sign == 0:
        return b
    if b.sign == 0:
        return a
    if a.log_mag < b.log_mag:
        a, b = b, a
    d = b.log_mag - a.log_mag
    if a.sign == b.sign:
        return LogReal(a.sign, a.log_mag + math.log1p(math.exp(d)))
    # opposite signs: |a| - |b| with |a| >= |b|
    if d == 0.0 or -math.expm1(d) < CANCEL_REL:
        return ZERO
    return LogReal(a.sign, a.log_mag + math.log1p(-math.exp(d)))


def log_sum(values):
    """Sum positive-or-zero LogReals by an ascending-magnitude fold."""
    terms = sorted((v for v in values if v.sign != 0), key=lambda v: v.log_mag)
    total = ZERO
    for v in terms:
        if v.sign < 0:
            raise ValueError("log_sum expects non-negative terms")
        total = log_add(total, v)
    return total


def logsumexp_exact(logs):
    """Log of ``sum(exp(logs))`` with a correctly rounded inner sum.

    Returns ``-inf`` for an empty input. The shifted exponentials are summed
    with ``math.fsum`` so the result does not depend on term order.
    """
    logs = np.asarray(logs, dtype=float).ravel()
    if logs.size == 0:
        return -math.inf
    top = logs.max()
    if top == -math.inf:
        return -math.inf
    return float(top + math.log(math.fsum(np.exp(logs - top))))


def log_sum_array(logs):
    """``LogReal`` sum of positive terms given by their natural logs."""
    return from_log(logsumexp_exact(logs))


def rel_diff(a, b):
    """|a/b - 1| for two LogReals of equal sign; ``inf`` otherwise."""
    if a.sign == 0 and b.sign == 0:
        return 0.0
    if a.sign != b.sign or a.sign == 0:
        return math.inf
    d = a.log_mag - b.log_mag
    if d > 700.0:
        return math.inf
    return abs(math.expm1(d))
