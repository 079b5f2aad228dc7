"""Representability sieves for a^2+b^2 and a^2+ab+b^2, and the density constants.

The number of integers up to N represented by either form grows like
``C * N / sqrt(log N)``.  For sums of two squares ``C`` is the
Landau-Ramanujan constant; the Loeschian analogue uses primes 2 mod 3.
Both are evaluated here as truncated Euler products.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt

import numpy as np

from .lattice import Lattice, ResourceGuardError

SIEVE_LIMIT = 10**8
DEFAULT_PRIME_BOUND = 10**6


class Form(enum.Enum):
    TWO_SQUARES = "two_squares"
    LOESCHIAN = "loeschian"

    @classmethod
    def for_lattice(cls, lattice: Lattice) -> "Form":
        return cls.LOESCHIAN if lattice is Lattice.TRIANGULAR else cls.TWO_SQUARES


@dataclass(frozen=True, eq=False)
class RepresentabilitySieve:
    """``flags[n]`` is true iff ``1 <= n <= limit`` is represented by the form."""

    form: Form
    limit: int
    flags: np.ndarray = field(repr=False)

    def __contains__(self, n: int) -> bool:
        return 1 <= n <= self.limit and bool(self.flags[n])

    @cached_property
    def prefix(self) -> np.ndarray:
        """``prefix[m]`` = number of represented integers in ``[1, m]``."""
        return np.cumsum(self.flags, dtype=np.int64)

    def values(self) -> np.ndarray:
        return np.flatnonzero(self.flags)


def build_sieve(form: Form, limit: int) -> RepresentabilitySieve:
    """Mark every value of the form in ``[1, limit]``.

    Non-negative ``a, b`` suffice for both forms: sign changes leave
    ``a^2+b^2`` alone, and ``N(a, b) = N(a+b, -b) = N(-a, -b)`` folds every
    mixed-sign pair of the Loeschian form into the first quadrant.  By
    symmetry we also only need ``b >= a``.
    """
    if not 1 <= limit <= SIEVE_LIMIT:
        raise ResourceGuardError(f"sieve limit {limit} outside [1, {SIEVE_LIMIT}]")
    flags = np.zeros(limit + 1, dtype=bool)
    loeschian = form is Form.LOESCHIAN
    for a in range(isqrt(limit) + 1):
        if loeschian:
            # a^2 + ab + b^2 <= limit  <=>  (2b + a)^2 <= 4*limit - 3a^2
            rest = 4 * limit - 3 * a * a
            if rest < 0:
                break
            b_max = (isqrt(rest) - a) // 2
        else:
            rest = limit - a * a
            b_max = isqrt(rest)
        if b_max < a:
            break
        b = np.arange(a, b_max + 1, dtype=np.int64)
        if loeschian:
            flags[a * a + a * b + b * b] = True
        else:
            flags[a * a + b * b] = True
    flags[0] = False
    return RepresentabilitySieve(form, limit, flags)


def count_representable(sieve: RepresentabilitySieve, limit: int) -> int:
    if limit > sieve.limit:
        raise ValueError(f"limit {limit} exceeds sieve limit {sieve.limit}")
    if limit < 1:
        return 0
    return int(sieve.prefix[limit])


# --- Euler products --------------------------------------------------------

def primes_up_to(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(n) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime)


def euler_product(prime_bound: int, modulus: int, residue: int) -> float:
    """prod p^2/(p^2-1) over primes p <= prime_bound with p = residue (mod modulus)."""
    p = primes_up_to(prime_bound)
    p = p[p % modulus == residue].astype(np.float64)
    # p^2/(p^2-1) = 1 + 1/(p^2-1); log1p keeps the tiny factors accurate
    return math.exp(math.fsum(np.log1p(1.0 / (p * p - 1.0)).tolist()))


@dataclass(frozen=True)
class ConstantEstimate:
    value: float
    prime_bound: int
    constant_id: str  # "c", "c_prime", "ratio" or "conjecture"

    def __float__(self) -> float:
        return self.value


def _check_bound(prime_bound: int) -> None:
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")


def landau_ramanujan(prime_bound: int = DEFAULT_PRIME_BOUND) -> ConstantEstimate:
    _check_bound(prime_bound)
    value = math.sqrt(0.5 * euler_product(prime_bound, 4, 3))
    return ConstantEstimate(value, prime_bound, "c")


def loeschian_constant(prime_bound: int = DEFAULT_PRIME_BOUND) -> ConstantEstimate:
    _check_bound(prime_bound)
    value = math.sqrt(euler_product(prime_bound, 3, 2) / (2 * math.sqrt(3)))
    return ConstantEstimate(value, prime_bound, "c_prime")


def ratio_from(c: float, c_prime: float) -> float:
    """Predicted k_tri / k_sq for equal point counts: covolume ratio times c'/c."""
    return math.sqrt(3) / 2 * c_prime / c


def heuristic_ratio(prime_bound: int = DEFAULT_PRIME_BOUND) -> ConstantEstimate:
    c = landau_ramanujan(prime_bound).value
    c_prime = loeschian_constant(prime_bound).value
    return ConstantEstimate(ratio_from(c, c_prime), prime_bound, "ratio")


def conjecture_constant(prime_bound: int = DEFAULT_PRIME_BOUND) -> ConstantEstimate:
    """(1/pi) * sqrt(2*sqrt(3) * prod_{p = 2 mod 3} p^2/(p^2-1))."""
    _check_bound(prime_bound)
    value = math.sqrt(2 * math.sqrt(3) * euler_product(prime_bound, 3, 2)) / math.pi
    return ConstantEstimate(value, prime_bound, "conjecture")
