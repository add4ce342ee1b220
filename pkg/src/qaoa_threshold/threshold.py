"""Exact expected performance of the 1- and 2-step threshold algorithms on
D-regular graphs of girth > 5.

Setting: an edge (i, j) of a D-regular graph, ``n = D - 1`` further neighbours
on each side. Each step, every vertex that shares its spin with at least tau of
its D neighbours flips; all flips of a step use the pre-step configuration.
The expected cut is ``1/2 - <Z_i2 Z_j2>/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .numerics import bernoulli_pmf, bernoulli_pmf_vector, binom_pmf_vector
from .stats import CutStats

SPINS = (1, -1)


def _spin_index(s):
    # +1 -> 0, -1 -> 1
    return (1 - s) // 2


@dataclass(frozen=True)
class ThresholdParams:
    steps: int
    tau1: int
    tau2: int | None = None

    def __post_init__(self):
        if self.steps not in (1, 2):
            raise DomainError(f"steps must be 1 or 2, got {self.steps}")
        if self.steps == 2 and self.tau2 is None:
            raise DomainError("two-step thresholds need tau2")

    def taus(self) -> tuple[int, ...]:
        return (self.tau1,) if self.steps == 1 else (self.tau1, self.tau2)

    def validate(self, D: int) -> None:
        for tau in self.taus():
            _check_tau(D, tau)


@dataclass(frozen=True)
class NeighborStepStats:
    """Step-1 behaviour of a side neighbour, measured relative to the centre's initial spin.

    ``p_plus``: chance a neighbour that initially agreed with the centre still
    carries the centre's initial spin after step 1. ``p_minus``: the same for a
    neighbour that initially disagreed. ``z1_* = 2 p_* - 1``.
    """

    z1_plus: float
    z1_minus: float
    p_plus: float
    p_minus: float
    n: int


@dataclass(frozen=True)
class Z2Table:
    """``values[a, b, k] = sum_{l,r} H(k,l,r) Q(l,r,A,B)`` with a, b the indices of A, B in (+1, -1)."""

    values: np.ndarray
    n: int

    def get(self, A: int, B: int, k: int) -> float:
        return float(self.values[_spin_index(A), _spin_index(B), k])

    def row(self, A: int, B: int) -> np.ndarray:
        return self.values[_spin_index(A), _spin_index(B)]


def _check_degree(D):
    if int(D) != D or D < 2:
        raise DomainError(f"degree D={D} must be an integer >= 2")


def _check_tau(D, tau):
    if int(tau) != tau or not 0 <= tau <= D + 1:
        raise DomainError(f"threshold {tau} outside [0, {D + 1}] for D={D}")


def q_threshold(k: int, tau: int) -> int:
    """-1 (flip) when the agreement count k reaches tau, else +1."""
    if k < 0:
        raise DomainError(f"negative agreement count {k}")
    return -1 if k >= tau else 1


def neighbor_step_stats(n: int, tau1: int) -> NeighborStepStats:
    if n < 0:
        raise DomainError(f"n={n} must be >= 0")
    pmf = binom_pmf_vector(n)
    m = np.arange(n + 1)
    # agreeing neighbour has m + 1 agreements (the centre included) and keeps its spin below tau1
    p_plus = float(min(1.0, pmf[m + 1 < tau1].sum()))
    # disagreeing neighbour has m agreements and takes the centre's spin by flipping
    p_minus = float(min(1.0, pmf[m >= tau1].sum()))
    return NeighborStepStats(2 * p_plus - 1, 2 * p_minus - 1, p_plus, p_minus, n)


def agreement_pmf(k: int, l: int, r: int, stats: NeighborStepStats) -> float:
    """H(k, l, r): chance that l of the k initial agreers and r of the n - k initial
    disagreers carry the centre's initial spin after step 1."""
    n = stats.n
    if not (0 <= k <= n and 0 <= l <= k and 0 <= r <= n - k):
        raise DomainError(f"H index out of range: k={k}, l={l}, r={r}, n={n}")
    return bernoulli_pmf(stats.p_plus, k, l) * bernoulli_pmf(stats.p_minus, n - k, r)


def q2_count(l: int, r: int, A: int, B: int, n: int, tau2: int) -> int:
    """Second-step spin factor given l + r side neighbours on the centre's initial spin.

    A = +1 when the centre kept its spin in step 1 (count l + r, else n - l - r);
    B = +1 when the two edge endpoints agree after step 1 (adds one).
    """
    if not 0 <= l + r <= n:
        raise DomainError(f"l + r = {l + r} outside [0, {n}]")
    count = (n - l - r) * (1 - A) // 2 + (l + r) * (1 + A) // 2 + (1 + B) // 2
    return q_threshold(count, tau2)


@lru_cache(maxsize=256)
def _agreement_sum_pmf(n: int, tau1: int) -> np.ndarray:
    """S[k, s] = P(l + r = s | k initial agreers), rows summing to one."""
    stats = neighbor_step_stats(n, tau1)
    out = np.zeros((n + 1, n + 1))
    for k in range(n + 1):
        out[k] = np.convolve(
            bernoulli_pmf_vector(stats.p_plus, k), bernoulli_pmf_vector(stats.p_minus, n - k)
        )
    out.flags.writeable = False
    return out


def z2_table(n: int, tau1: int, tau2: int) -> Z2Table:
    if n < 0:
        raise DomainError(f"n={n} must be >= 0")
    _check_tau(n + 1, tau1)
    _check_tau(n + 1, tau2)
    sums = _agreement_sum_pmf(n, tau1)
    s = np.arange(n + 1)
    values = np.empty((2, 2, n + 1))
    for A in SPINS:
        base = s if A == 1 else n - s
        for B in SPINS:
            q2 = np.where(base + (1 + B) // 2 >= tau2, -1.0, 1.0)
            values[_spin_index(A), _spin_index(B)] = sums @ q2
    return Z2Table(values, n)


def _step1(k, tau):
    return np.where(k >= tau, -1, 1)


def correlation2(D: int, tau1: int, tau2: int, *, shared_index: bool = False) -> float:
    """<Z_i2 Z_j2> averaged over equal and unequal initial spins on the edge.

    With ``shared_index=True`` j's second-step average is read at i's agreement
    count k instead of its own count u. That is not the algorithm's expectation;
    it exists only to regenerate tables computed with that indexing.
    """
    _check_degree(D)
    _check_tau(D, tau1)
    _check_tau(D, tau2)
    n = D - 1
    table = z2_table(n, tau1, tau2).values
    pmf = binom_pmf_vector(n)
    weights = np.outer(pmf, pmf)
    k = np.arange(n + 1)
    total = 0.0
    # (Z_i1 as function of k, Z_j1 as function of u, Z_j0); Z_i0 = +1 by symmetry
    cases = (
        (_step1(k + 1, tau1), _step1(k + 1, tau1), 1),
        (_step1(k, tau1), -_step1(k, tau1), -1),
    )
    for zi1, zj1, zj0 in cases:
        b_idx = _spin_index(zi1[:, None] * zj1[None, :])
        ai_idx = _spin_index(zi1)[:, None]
        aj_idx = _spin_index(zj1 * zj0)[None, :]
        t_i = table[ai_idx, b_idx, k[:, None]]
        j_count = k[:, None] if shared_index else k[None, :]
        t_j = table[aj_idx, b_idx, j_count]
        z_i2 = zi1[:, None] * t_i
        z_j2 = zj1[None, :] * t_j
        total += 0.5 * float(np.sum(weights * z_i2 * z_j2))
    return total


def threshold2_improvement(D: int, tau1: int, tau2: int, *, shared_index: bool = False) -> CutStats:
    corr = correlation2(D, tau1, tau2, shared_index=shared_index)
    return CutStats.from_improvement(-0.5 * corr, D)


def threshold1_improvement(D: int, tau: int) -> CutStats:
    """One-step algorithm, evaluated as a two-step run whose second step never flips."""
    _check_degree(D)
    _check_tau(D, tau)
    return threshold2_improvement(D, tau, D + 1)


def threshold_improvement(D: int, params: ThresholdParams, *, shared_index: bool = False) -> CutStats:
    params.validate(D)
    if params.steps == 1:
        return threshold1_improvement(D, params.tau1)
    return threshold2_improvement(D, params.tau1, params.tau2, shared_index=shared_index)
