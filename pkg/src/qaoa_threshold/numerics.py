"""Stable scalar primitives: binomial coefficients, binomial masses, integer
powers of complex numbers."""

from __future__ import annotations

import math

import numpy as np
from scipy.stats import binom

from .errors import DomainError

# Exact integer arithmetic below this size; C(64, 32) still fits in 64 bits.
EXACT_LIMIT = 64
MAX_N = 10_000


def _check_range(n, k):
    if n < 0 or n > MAX_N:
        raise DomainError(f"n={n} outside [0, {MAX_N}]")
    if k < 0 or k > n:
        raise DomainError(f"k={k} outside [0, n={n}]")


def log_binomial(n: int, k: int) -> float:
    """Natural log of C(n, k).

    math.log accepts arbitrarily large integers, so the exact coefficient is
    used throughout; log-gamma differences lose ~1e-12 to cancellation.
    """
    _check_range(n, k)
    return math.log(math.comb(n, k))


def binom_pmf(n: int, k: int) -> float:
    """P_n(k) = 2^-n C(n, k), the number of heads in n fair coin flips."""
    _check_range(n, k)
    if n <= EXACT_LIMIT:
        return math.comb(n, k) / 2**n
    return float(binom.pmf(k, n, 0.5))


def bernoulli_pmf(p: float, n: int, l: int) -> float:
    """Mass of Binomial(n, p) at l, with 0**0 = 1 at the endpoints p in {0, 1}."""
    _check_range(n, l)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p} is not a probability")
    if n <= EXACT_LIMIT:
        return math.comb(n, l) * p**l * (1.0 - p) ** (n - l)
    if p == 0.0:
        return 1.0 if l == 0 else 0.0
    if p == 1.0:
        return 1.0 if l == n else 0.0
    return float(binom.pmf(l, n, p))


def bernoulli_pmf_vector(p: float, n: int) -> np.ndarray:
    """Full mass vector of Binomial(n, p) over l = 0..n."""
    if n < 0 or n > MAX_N:
        raise DomainError(f"n={n} outside [0, {MAX_N}]")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p} is not a probability")
    if p == 0.0 or p == 1.0:
        out = np.zeros(n + 1)
        out[0 if p == 0.0 else n] = 1.0
        return out
    if n <= EXACT_LIMIT:
        return np.array([math.comb(n, l) * p**l * (1.0 - p) ** (n - l) for l in range(n + 1)])
    return binom.pmf(np.arange(n + 1), n, p)


def binom_pmf_vector(n: int) -> np.ndarray:
    return bernoulli_pmf_vector(0.5, n)


def cpow_int(z: complex, e: int) -> complex:
    """z**e for a non-negative integer e by repeated squaring."""
    if e < 0:
        raise DomainError("negative exponent")
    result = complex(1.0, 0.0)
    base = complex(z)
    while e:
        if e & 1:
            result *= base
        e >>= 1
        if e:
            base *= base
    return result
