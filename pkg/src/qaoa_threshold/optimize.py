"""Maximise the closed forms: continuous QAOA angles and integer thresholds."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, Union

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .errors import DomainError
from .qaoa import Qaoa2Angles, f1, f2, f2_value
from .stats import CutStats
from .threshold import ThresholdParams, threshold_improvement

DEFAULT_STARTS = 64
SIMPLEX_FATOL = 1e-12
SIMPLEX_XATOL = 1e-10
SIMPLEX_MAXITER = 2000
FREE_TAU_LIMIT = 50  # free (tau1, tau2) search only below this degree by default
FULL_RANGE_LIMIT = 60
TIE_TOL = 1e-13
WINNER_TOL = 1e-9

QAOA2_BOUNDS = [(0.0, math.pi), (0.0, math.pi / 4)] * 2


class WindowWarning(UserWarning):
    """The best threshold sits on the edge of a restricted search window."""


@dataclass(frozen=True)
class OptResult:
    best_params: Union[Qaoa2Angles, ThresholdParams]
    stats: CutStats
    starts_used: int
    converged: bool
    window_violation: bool = False


@dataclass(frozen=True)
class TauWindow:
    """Threshold search window ``D/2 + k sqrt(D)`` for k in [k_min, k_max], or an explicit
    inclusive integer range that takes precedence."""

    k_min: float = 0.3
    k_max: float = 0.6
    explicit_range: tuple[int, int] | None = None

    def __post_init__(self):
        if not self.k_min < self.k_max:
            raise DomainError(f"k_min={self.k_min} must be < k_max={self.k_max}")

    @classmethod
    def for_degree(cls, D: int) -> TauWindow:
        if D <= 150:
            return cls(0.3, 0.6)
        return cls(0.35, 0.52)

    def candidates(self, D: int) -> range:
        if self.explicit_range is not None:
            lo, hi = self.explicit_range
            lo, hi = max(lo, 0), min(hi, D + 1)
        elif D <= FULL_RANGE_LIMIT:
            lo, hi = 0, D + 1
        else:
            root = math.sqrt(D)
            lo = math.ceil(D / 2 + self.k_min * root)
            hi = math.floor(D / 2 + self.k_max * root)
        if lo > hi:
            raise DomainError(f"empty threshold window for D={D}")
        return range(lo, hi + 1)

    def is_restricted(self, D: int) -> bool:
        return self.explicit_range is None and D > FULL_RANGE_LIMIT


def optimize_qaoa1(D: int) -> OptResult:
    """Best QAOA_1: beta = pi/8 (sin 4 beta = 1), gamma by bounded 1-D search."""
    if D < 2:
        raise DomainError(f"degree D={D} must be >= 2")
    beta = math.pi / 8
    # the peak narrows like 1/sqrt(D); bracket it on a grid before refining
    grid = np.linspace(0.0, math.pi / 2, 4097)
    vals = np.sin(grid) * np.cos(grid) ** (D - 1)
    i = int(np.argmax(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    res = minimize_scalar(
        lambda g: -f1(D, g, beta).cut_fraction,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    gamma = float(res.x)
    return OptResult(Qaoa2Angles(gamma, beta, 0.0, 0.0), f1(D, gamma, beta), 1, bool(res.success))


def _neg_f2(x, D):
    return -f2_value(D, x[0], x[1], x[2], x[3])


def qaoa2_starts(D: int, starts: int, seed: int) -> list[np.ndarray]:
    """The QAOA_1 optimum extended by zero second-stage angles, then uniform draws in the box.

    Draws come from one stream, so the first k starts do not depend on ``starts``.
    """
    q1 = optimize_qaoa1(D).best_params
    out = [np.array([q1.gamma1, q1.beta1, 0.0, 0.0])]
    rng = np.random.default_rng(seed)
    lo = np.array([b[0] for b in QAOA2_BOUNDS])
    hi = np.array([b[1] for b in QAOA2_BOUNDS])
    for _ in range(starts - 1):
        out.append(rng.uniform(lo, hi))
    return out


def optimize_qaoa2(D: int, starts: int = DEFAULT_STARTS, seed: int = 0) -> OptResult:
    """Multistart bounded Nelder-Mead on the QAOA_2 closed form."""
    if D < 2:
        raise DomainError(f"degree D={D} must be >= 2")
    if starts < 1:
        raise DomainError(f"starts must be >= 1, got {starts}")
    best_x, best_val, best_ok = None, math.inf, False
    for x0 in qaoa2_starts(D, starts, seed):
        res = minimize(
            _neg_f2,
            x0,
            args=(D,),
            method="Nelder-Mead",
            bounds=QAOA2_BOUNDS,
            options={"xatol": SIMPLEX_XATOL, "fatol": SIMPLEX_FATOL, "maxiter": SIMPLEX_MAXITER},
        )
        if res.fun < best_val:
            best_x, best_val, best_ok = res.x, float(res.fun), bool(res.success)
    angles = Qaoa2Angles(*(float(v) for v in best_x))
    return OptResult(angles, f2(D, angles), starts, best_ok)


def optimize_threshold(
    D: int,
    steps: int = 2,
    equal_taus: bool = False,
    window: TauWindow | None = None,
    *,
    shared_index: bool = False,
) -> OptResult:
    """Exhaustive integer threshold search; ties go to the lexicographically smallest taus."""
    if D < 2:
        raise DomainError(f"degree D={D} must be >= 2")
    window = TauWindow.for_degree(D) if window is None else window
    cands = window.candidates(D)
    if steps == 1:
        grid: Iterable[tuple[int, ...]] = ((t,) for t in cands)
    elif equal_taus:
        grid = ((t, t) for t in cands)
    else:
        grid = ((a, b) for a in cands for b in cands)

    best_taus, best_stats = None, None
    for taus in grid:
        params = ThresholdParams(steps, *taus)
        stats = threshold_improvement(D, params, shared_index=shared_index)
        if best_stats is None or stats.improvement > best_stats.improvement + TIE_TOL:
            best_taus, best_stats = params, stats

    violation = window.is_restricted(D) and any(t in (cands[0], cands[-1]) for t in best_taus.taus())
    if violation:
        warnings.warn(
            f"D={D}: best thresholds {best_taus.taus()} lie on the search window edge "
            f"[{cands[0]}, {cands[-1]}]",
            WindowWarning,
            stacklevel=2,
        )
    return OptResult(best_taus, best_stats, len(cands), True, violation)


ALGORITHMS = ("qaoa1", "qaoa2", "threshold1", "threshold2")


@dataclass(frozen=True)
class SweepConfig:
    algorithms: tuple[str, ...] = ALGORITHMS
    starts: int = DEFAULT_STARTS
    seed: int = 0
    free_taus: bool | None = None  # None: free search only for D < FREE_TAU_LIMIT
    window: TauWindow | None = None
    shared_index: bool = False

    def __post_init__(self):
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise DomainError(f"unknown algorithms {sorted(unknown)}")

    def canonical(self) -> dict:
        d = asdict(self)
        d["algorithms"] = sorted(self.algorithms)
        return d


@dataclass
class SweepRecord:
    D: int
    qaoa1_impr: float | None = None
    qaoa2_impr: float | None = None
    thr1_impr: float | None = None
    thr2_impr: float | None = None
    gamma1: float | None = None
    beta1: float | None = None
    gamma2: float | None = None
    beta2: float | None = None
    thr1_tau: int | None = None
    tau1: int | None = None
    tau2: int | None = None
    thr2_equal_impr: float | None = None
    thr2_equal_tau: int | None = None
    thr2_free: bool | None = None
    b_qaoa1: float | None = None
    b_qaoa2: float | None = None
    b_thr1: float | None = None
    b_thr2: float | None = None
    winner: str | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def qaoa2_angles(self):
        return (self.gamma1, self.beta1, self.gamma2, self.beta2)

    @property
    def thr_taus(self):
        return (self.tau1, self.tau2)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls) if f.name != "warnings"]


def _scaled(impr, D):
    return None if impr is None else impr * math.sqrt(D)


def sweep_record(D: int, config: SweepConfig = SweepConfig()) -> SweepRecord:
    rec = SweepRecord(D)
    algos = set(config.algorithms)
    if "qaoa1" in algos:
        rec.qaoa1_impr = optimize_qaoa1(D).stats.improvement
    if "qaoa2" in algos:
        res = optimize_qaoa2(D, config.starts, config.seed)
        rec.qaoa2_impr = res.stats.improvement
        rec.gamma1, rec.beta1, rec.gamma2, rec.beta2 = res.best_params.as_tuple()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", WindowWarning)
        if "threshold1" in algos:
            res = optimize_threshold(D, 1, window=config.window)
            rec.thr1_impr, rec.thr1_tau = res.stats.improvement, res.best_params.tau1
        if "threshold2" in algos:
            eq = optimize_threshold(D, 2, True, config.window, shared_index=config.shared_index)
            rec.thr2_equal_impr, rec.thr2_equal_tau = eq.stats.improvement, eq.best_params.tau1
            free = D < FREE_TAU_LIMIT if config.free_taus is None else config.free_taus
            best = eq
            if free:
                best = optimize_threshold(D, 2, False, config.window, shared_index=config.shared_index)
            rec.thr2_free = free
            rec.thr2_impr = best.stats.improvement
            rec.tau1, rec.tau2 = best.best_params.tau1, best.best_params.tau2
    rec.warnings = [str(w.message) for w in caught if issubclass(w.category, WindowWarning)]
    rec.b_qaoa1 = _scaled(rec.qaoa1_impr, D)
    rec.b_qaoa2 = _scaled(rec.qaoa2_impr, D)
    rec.b_thr1 = _scaled(rec.thr1_impr, D)
    rec.b_thr2 = _scaled(rec.thr2_impr, D)
    if rec.qaoa2_impr is not None and rec.thr2_impr is not None:
        diff = rec.thr2_impr - rec.qaoa2_impr
        rec.winner = "tie" if abs(diff) <= WINNER_TOL else ("threshold2" if diff > 0 else "qaoa2")
    return rec


def compare_sweep(
    D_min: int,
    D_max: int,
    config: SweepConfig = SweepConfig(),
    *,
    degrees: Iterable[int] | None = None,
    jobs: int = 1,
    cache=None,
) -> list[SweepRecord]:
    """One record per degree in ``[D_min, D_max]`` (or in ``degrees``), ascending in D.

    With ``cache`` (a ``ResultCache``) finished degrees are reused and new ones appended.
    """
    if not 2 <= D_min <= D_max:
        raise DomainError(f"need 2 <= D_min <= D_max, got {D_min}, {D_max}")
    todo = sorted(set(degrees)) if degrees is not None else list(range(D_min, D_max + 1))
    done: dict[int, SweepRecord] = {}
    if cache is not None:
        for D in todo:
            hit = cache.get("sweep", D, config.canonical())
            if hit is not None:
                done[D] = SweepRecord(**hit)
    missing = [D for D in todo if D not in done]
    if jobs > 1 and len(missing) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            computed = list(pool.map(sweep_record, missing, [config] * len(missing)))
    else:
        computed = [sweep_record(D, config) for D in missing]
    for rec in computed:
        done[rec.D] = rec
        if cache is not None:
            cache.put("sweep", rec.D, config.canonical(), asdict(rec))
    return [done[D] for D in todo]
