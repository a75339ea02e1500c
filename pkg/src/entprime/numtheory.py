"""Reference integer arithmetic: divisors, a sieve, and ground-truth labels."""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import isqrt

import numpy as np

N_MAX = 10**9


class Kind(str, Enum):
    UNIT = "Unit"
    PRIME = "Prime"
    SEMIPRIME_F2 = "SemiprimeF2"
    SEMIPRIME_F3 = "SemiprimeF3"
    OTHER_COMPOSITE = "OtherComposite"
    NOT_DECIDABLE = "NotDecidable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    kind: Kind
    families: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        bad = set(self.families) - {"f2", "f3"}
        if bad:
            raise ValueError(f"unknown families {sorted(bad)}")
        if self.kind in (Kind.PRIME, Kind.UNIT, Kind.NOT_DECIDABLE) and self.families:
            raise ValueError(f"{self.kind} carries no families")

    @property
    def decided(self):
        return self.kind is not Kind.NOT_DECIDABLE

    def families_str(self):
        return "+".join(sorted(self.families))


NOT_DECIDABLE = Classification(Kind.NOT_DECIDABLE)


@dataclass(frozen=True)
class DivisorSet:
    n: int
    divisors: tuple

    def __len__(self):
        return len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)

    def __contains__(self, d):
        return d in self.divisors

    @property
    def reduced(self):
        return self.divisors[1:-1]


def divisors(n):
    """All positive divisors of ``n``, ascending, by trial division to sqrt(n)."""
    n = int(n)
    if not 1 <= n <= N_MAX:
        raise ValueError(f"n must lie in [1, {N_MAX}], got {n}")
    return DivisorSet(n, _divisors(n))


@lru_cache(maxsize=1 << 15)
def _divisors(n):
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


def reduced_divisors(n):
    """Divisors of ``n`` other than 1 and ``n``; empty exactly when n is prime."""
    if n < 2:
        raise ValueError(f"reduced divisor set needs n >= 2, got {n}")
    return list(divisors(n).reduced)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def sieve(n_max):
    """Boolean primality table for ``0..n_max`` (read-only)."""
    return _sieve(int(n_max))


@lru_cache(maxsize=8)
def _sieve(n_max):
    flags = np.ones(max(n_max + 1, 2), dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(n_max) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    flags = flags[: n_max + 1]
    flags.flags.writeable = False
    return flags


def sieve_pi(n_max):
    """Number of primes ``<= n_max``."""
    if n_max < 1:
        raise ValueError(f"N must be >= 1, got {n_max}")
    return int(np.count_nonzero(sieve(n_max)))


def sieve_classify(n):
    """Ground-truth label of ``n``.

    ``f2`` holds ``2p`` with ``p`` an odd prime and ``f3`` holds ``3p`` with
    ``p`` a prime other than 3. Only 6 is in both; it reports kind
    ``SemiprimeF2`` and keeps both families.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return Classification(Kind.UNIT)
    if is_prime(n):
        return Classification(Kind.PRIME)
    fams = set()
    if n % 2 == 0 and n // 2 != 2 and is_prime(n // 2):
        fams.add("f2")
    if n % 3 == 0 and n // 3 != 3 and is_prime(n // 3):
        fams.add("f3")
    if "f2" in fams:
        kind = Kind.SEMIPRIME_F2
    elif "f3" in fams:
        kind = Kind.SEMIPRIME_F3
    else:
        kind = Kind.OTHER_COMPOSITE
    return Classification(kind, frozenset(fams))
