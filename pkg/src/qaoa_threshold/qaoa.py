"""Graph-size-independent QAOA_1 / QAOA_2 expected cut fraction on D-regular
graphs of girth > 5.

Conventions: the cost phase is ``exp(-i gamma C)`` with ``C = sum_uv (1 - Z_u Z_v)/2``
and the mixer is ``exp(-i beta sum_v X_v)``, starting from ``|+>^n``.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass
from typing import Iterable

from .errors import ConsistencyError, DomainError
from .numerics import cpow_int
from .stats import CutStats

# Relative bound on the imaginary part left over after summing conjugate pairs.
IMAG_RESIDUE_TOL = 1e-9


@dataclass(frozen=True)
class Qaoa2Angles:
    gamma1: float
    beta1: float
    gamma2: float
    beta2: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in astuple(self)):
            raise DomainError(f"non-finite angle in {astuple(self)}")

    @classmethod
    def from_sequence(cls, values: Iterable[float]) -> Qaoa2Angles:
        vals = [float(v) for v in values]
        if len(vals) != 4:
            raise DomainError(f"expected 4 angles, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return astuple(self)


@dataclass(frozen=True)
class TrigBundle:
    """Trigonometric shorthands of the four angles.

    ``c, s`` are cos/sin(2 beta2); ``m, n`` cos/sin(gamma2); ``r, t``
    cos/sin(2 beta1); ``y, z`` cos/sin(gamma1); ``p, q`` cos/sin(gamma1 / 2);
    ``k, l`` cos/sin(beta1).
    """

    c: float
    s: float
    m: float
    n: float
    r: float
    t: float
    y: float
    z: float
    p: float
    q: float
    k: float
    l: float


def trig_bundle(angles: Qaoa2Angles) -> TrigBundle:
    return _trig(*angles.as_tuple())


def _check_degree(D):
    if int(D) != D or D < 2:
        raise DomainError(f"degree D={D} must be an integer >= 2")


def _real_part(value: complex, name: str) -> float:
    if abs(value.imag) > IMAG_RESIDUE_TOL * (1.0 + abs(value.real)):
        raise ConsistencyError(f"{name} has imaginary residue {value.imag!r}")
    return value.real


def f1(D: int, gamma: float, beta: float) -> CutStats:
    """QAOA_1 expected cut fraction on a triangle-free D-regular graph."""
    _check_degree(D)
    cut = 0.5 + math.sin(2 * beta) * math.cos(2 * beta) * math.sin(gamma) * math.cos(gamma) ** (D - 1)
    return CutStats.from_cut_fraction(cut, D)


def _trig(g1, b1, g2, b2) -> TrigBundle:
    return TrigBundle(
        math.cos(2 * b2), math.sin(2 * b2), math.cos(g2), math.sin(g2),
        math.cos(2 * b1), math.sin(2 * b1), math.cos(g1), math.sin(g1),
        math.cos(g1 / 2), math.sin(g1 / 2), math.cos(b1), math.sin(b1),
    )


def _blocks(D: int, tb: TrigBundle) -> tuple[float, float, float]:
    """(A, alpha, kappa) from one set of trig values."""
    e = D - 1
    m, n, r, t, y, z = tb.m, tb.n, tb.r, tb.t, tb.y, tb.z
    y_pow = y**e
    a_term = -2.0 * tb.c**2 * r * t * y_pow * z
    ty = t * y_pow * z
    # (m +/- i n t y^(D-1) z)^(D-1) are the only genuinely complex factors
    w_plus = cpow_int(complex(m, n * ty), e)
    w_minus = cpow_int(complex(m, -n * ty), e)
    minus_pow = cpow_int(complex(m * y - n * r * z), e)
    plus_pow = cpow_int(complex(m * y + n * r * z), e)
    alpha_c = (
        (1 + r) * (-m * r * z - n * y) * minus_pow
        + (1 - r) * (m * r * z - n * y) * plus_pow
        + t * (complex(m * ty, n) * w_plus + complex(m * ty, -n) * w_minus)
    )
    kappa_c = ((1 + r) * minus_pow - (1 - r) * plus_pow) * (w_plus + w_minus)
    return a_term, _real_part(alpha_c, "alpha"), _real_part(kappa_c, "kappa")


def term_A(D: int, angles: Qaoa2Angles) -> float:
    """The ``Z_u Z_v`` block of the two-stage expectation: ``-2 c^2 r t y^(D-1) z``."""
    _check_degree(D)
    tb = trig_bundle(angles)
    return -2.0 * tb.c**2 * tb.r * tb.t * tb.y ** (D - 1) * tb.z


def alpha(D: int, gamma1: float, beta1: float, gamma2: float) -> float:
    """Real part of alpha(gamma1, beta1, gamma2); the ``Y_u Z_v`` block is ``cs alpha / 2``."""
    _check_degree(D)
    return _blocks(D, _trig(gamma1, beta1, gamma2, 0.0))[1]


def kappa(D: int, gamma1: float, beta1: float, gamma2: float) -> float:
    """Real part of kappa(gamma1, beta1, gamma2); the ``Y_u Y_v`` block is ``s^2 t z kappa / 2``."""
    _check_degree(D)
    return _blocks(D, _trig(gamma1, beta1, gamma2, 0.0))[2]


def f2_value(D: int, g1: float, b1: float, g2: float, b2: float) -> float:
    """Bare cut fraction of the QAOA_2 closed form (no validation); used in inner loops."""
    tb = _trig(g1, b1, g2, b2)
    a_term, alpha_v, kappa_v = _blocks(D, tb)
    b1_term = 0.5 * tb.c * tb.s * alpha_v
    e_term = 0.5 * tb.s**2 * tb.t * tb.z * kappa_v
    return 0.5 - 0.5 * (a_term + 2 * b1_term + e_term)


def f2(D: int, angles: Qaoa2Angles) -> CutStats:
    """QAOA_2 expected cut fraction on any D-regular graph of girth > 5.

    Assembled as ``1/2 - (A + 2 B1 + E) / 2`` with ``B1 = cs alpha / 2`` and
    ``E = s^2 t z kappa / 2``. The raw value is returned without clamping.
    """
    _check_degree(D)
    return CutStats.from_cut_fraction(f2_value(D, *angles.as_tuple()), D)


def f2_ring(angles: Qaoa2Angles) -> CutStats:
    """Polynomial form of the D = 2 (ring) expectation, written out independently of f2."""
    tb = trig_bundle(angles)
    c, s, m, n, r, t, y, z = tb.c, tb.s, tb.m, tb.n, tb.r, tb.t, tb.y, tb.z
    cut = (
        0.5
        + c**2 * r * t * y * z
        - c * s * m * n * (r**2 * z**2 - y**2)
        - c * s * y * z * (t**2 - r**2) * (m**2 - n**2)
        - s**2 * t * z * m * r * (m * y - n * z)
    )
    return CutStats.from_cut_fraction(cut, 2)
