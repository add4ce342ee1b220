"""Invariant suites behind ``qaoa-threshold verify``.

Each suite returns ``(checks_run, failures)``; a failure is a JSON-ready dict
naming the inputs that broke the check.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import DomainError
from .graphs import Graph, girth
from .oracle import enumerate_threshold_exact, mc_threshold, qaoa_statevector_cut_fraction
from .qaoa import Qaoa2Angles, f1, f2, f2_ring
from .threshold import ThresholdParams, threshold_improvement

REDUCTION_DEGREES = (2, 3, 5, 17, 100)


class GirthGateError(DomainError):
    """The graph's girth is too small for the closed forms to apply."""


def _random_angles(rng, count, width=math.pi):
    return rng.uniform(-width, width, size=(count, 4))


def reductions(points: int = 1000, ring_points: int = 10_000, tol: float = 1e-12, seed: int = 0):
    """Two-stage form collapses to one stage when either stage is switched off; the ring
    polynomial matches the general form at D = 2."""
    rng = np.random.default_rng(seed)
    failures, checks = [], 0
    for D in REDUCTION_DEGREES:
        for g, b in rng.uniform(-math.pi, math.pi, size=(points, 2)):
            ref = f1(D, g, b).cut_fraction
            for name, angles in (("second-stage", (0.0, 0.0, g, b)), ("first-stage", (g, b, 0.0, 0.0))):
                checks += 1
                got = f2(D, Qaoa2Angles(*angles)).cut_fraction
                if abs(got - ref) > tol:
                    failures.append({"check": f"reduction-{name}", "D": D, "angles": list(angles), "delta": got - ref})
    for row in _random_angles(rng, ring_points):
        checks += 1
        angles = Qaoa2Angles(*row)
        delta = f2_ring(angles).cut_fraction - f2(2, angles).cut_fraction
        if abs(delta) > tol:
            failures.append({"check": "ring", "angles": list(row), "delta": delta})
    return checks, failures


def girth_gate(g: Graph, minimum: int = 6) -> int:
    """Return the common degree, refusing irregular graphs and girth below ``minimum``."""
    D = g.regular_degree()
    if D is None or D < 2:
        raise GirthGateError("closed forms need a regular graph of degree >= 2")
    gg = girth(g)
    if gg < minimum:
        raise GirthGateError(f"girth {gg} < {minimum}: the closed forms do not describe this graph")
    return D


def oracle_qaoa(g: Graph, samples: int = 20, tol: float = 1e-9, seed: int = 0):
    """Closed-form QAOA_1 / QAOA_2 against exact statevector simulation."""
    D = girth_gate(g)
    rng = np.random.default_rng(seed)
    failures, checks = [], 0
    for row in _random_angles(rng, samples):
        angles = Qaoa2Angles(*row)
        checks += 2
        sim2 = qaoa_statevector_cut_fraction(g, angles, p=2)
        delta2 = f2(D, angles).cut_fraction - sim2
        if abs(delta2) > tol:
            failures.append({"check": "qaoa2", "D": D, "angles": list(row), "delta": delta2})
        sim1 = qaoa_statevector_cut_fraction(g, row[:2], p=1)
        delta1 = f1(D, row[0], row[1]).cut_fraction - sim1
        if abs(delta1) > tol:
            failures.append({"check": "qaoa1", "D": D, "angles": list(row[:2]), "delta": delta1})
    return checks, failures


def oracle_threshold(g: Graph, tol: float = 1e-12):
    """Closed-form threshold performance against enumeration of all initial spins,
    for every threshold pair in [0, D + 1]."""
    D = girth_gate(g)
    failures, checks = [], 0
    taus = range(D + 2)
    cases = [ThresholdParams(1, t) for t in taus]
    cases += [ThresholdParams(2, a, b) for a, b in itertools.product(taus, taus)]
    for params in cases:
        checks += 1
        exact = enumerate_threshold_exact(g, params)
        closed = threshold_improvement(D, params).cut_fraction
        if abs(closed - exact) > tol:
            failures.append({"check": "threshold", "D": D, "taus": list(params.taus()), "delta": closed - exact})
    return checks, failures


def mc(g: Graph, params: ThresholdParams, trials: int = 1_000_000, seed: int = 0, sigmas: float = 4.0):
    """Monte-Carlo threshold dynamics within ``sigmas`` standard errors of the closed form."""
    D = girth_gate(g)
    est = mc_threshold(g, params, trials, seed)
    closed = threshold_improvement(D, params).cut_fraction
    failures = []
    if abs(est.mean - closed) > sigmas * est.stderr:
        failures.append(
            {
                "check": "mc",
                "D": D,
                "taus": list(params.taus()),
                "mean": est.mean,
                "stderr": est.stderr,
                "closed_form": closed,
            }
        )
    return 1, failures
