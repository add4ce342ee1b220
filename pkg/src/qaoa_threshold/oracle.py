"""Brute-force ground truth on concrete graphs: exact statevector QAOA and exact
or sampled threshold dynamics."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError
from .graphs import Graph
from .qaoa import Qaoa2Angles
from .threshold import ThresholdParams

MAX_VERTICES = 24
NORM_TOL = 1e-10
_ENUM_CHUNK = 1 << 16
MC_BLOCK = 1 << 16


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int


def _check_size(g: Graph):
    if g.vertex_count > MAX_VERTICES:
        raise ResourceError(f"{g.vertex_count} vertices exceeds the limit of {MAX_VERTICES}")


def _cut_values(g: Graph) -> np.ndarray:
    """Number of cut edges for every computational basis state (bit v = vertex v)."""
    idx = np.arange(1 << g.vertex_count, dtype=np.int64)
    cut = np.zeros(idx.shape, dtype=np.int64)
    for u, v in g.edges():
        cut += ((idx >> u) ^ (idx >> v)) & 1
    return cut


def _apply_mixer(psi: np.ndarray, beta: float, n_qubits: int) -> np.ndarray:
    """exp(-i beta X) on every qubit, one butterfly per qubit."""
    c, s = math.cos(beta), -1j * math.sin(beta)
    for q in range(n_qubits):
        view = psi.reshape(-1, 2, 1 << q)
        a0 = view[:, 0, :].copy()
        a1 = view[:, 1, :]
        view[:, 0, :] = c * a0 + s * a1
        view[:, 1, :] = s * a0 + c * a1
    return psi


def qaoa_statevector(g: Graph, angles, p: int = 2) -> np.ndarray:
    """Final QAOA_p state; ``angles`` is ``Qaoa2Angles`` or a flat (gamma, beta, ...) sequence."""
    _check_size(g)
    values = angles.as_tuple() if isinstance(angles, Qaoa2Angles) else tuple(angles)
    if p not in (1, 2) or len(values) < 2 * p:
        raise DomainError(f"need p in {{1, 2}} and 2p angles, got p={p}, {len(values)} angles")
    n = g.vertex_count
    dim = 1 << n
    psi = np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)
    cut = _cut_values(g)
    for stage in range(p):
        gamma, beta = values[2 * stage], values[2 * stage + 1]
        psi *= np.exp(-1j * gamma * cut)
        _apply_mixer(psi, beta, n)
        norm = float(np.vdot(psi, psi).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ArithmeticError(f"state norm drifted to {norm!r} after stage {stage + 1}")
    return psi


def qaoa_statevector_cut_fraction(g: Graph, angles, p: int = 2, edges=None) -> float:
    """Exact expected fraction of ``edges`` (default: all) cut by QAOA_p."""
    psi = qaoa_statevector(g, angles, p)
    probs = np.abs(psi) ** 2
    edges = g.edges() if edges is None else list(edges)
    if not edges:
        raise DomainError("graph has no edges")
    idx = np.arange(probs.size, dtype=np.int64)
    total = 0.0
    for u, v in edges:
        total += float(probs[(((idx >> u) ^ (idx >> v)) & 1).astype(bool)].sum())
    return total / len(edges)


def _run_threshold(spins: np.ndarray, nbrs: list[np.ndarray], taus) -> np.ndarray:
    """Synchronous threshold steps on a batch of configurations (rows)."""
    for tau in taus:
        agree = np.stack(
            [(spins[:, nb] == spins[:, [v]]).sum(axis=1) for v, nb in enumerate(nbrs)], axis=1
        )
        spins = np.where(agree >= tau, -spins, spins)
    return spins


def _cut_counts(spins: np.ndarray, edges: np.ndarray) -> np.ndarray:
    return (spins[:, edges[:, 0]] != spins[:, edges[:, 1]]).sum(axis=1)


def enumerate_threshold_exact(g: Graph, params: ThresholdParams) -> float:
    """Expected cut fraction after the threshold steps, averaged over all 2^V initial spins."""
    _check_size(g)
    D = g.regular_degree()
    if D is None:
        raise DomainError("threshold enumeration needs a regular graph")
    params.validate(D)
    n = g.vertex_count
    nbrs = [np.array(a, dtype=np.int64) for a in g.adjacency]
    edges = np.array(g.edges(), dtype=np.int64)
    total = 0
    bits = np.arange(n, dtype=np.int64)
    for start in range(0, 1 << n, _ENUM_CHUNK):
        idx = np.arange(start, min(start + _ENUM_CHUNK, 1 << n), dtype=np.int64)
        spins = np.where((idx[:, None] >> bits) & 1, -1, 1).astype(np.int8)
        total += int(_cut_counts(_run_threshold(spins, nbrs, params.taus()), edges).sum())
    # integer total keeps the average exact up to the final division
    return total / ((1 << n) * len(edges))


def _mc_block(g, nbrs, edges, taus, seed, block, size):
    rng = np.random.default_rng([seed, block])
    spins = rng.choice(np.array([-1, 1], dtype=np.int8), size=(size, g.vertex_count))
    frac = _cut_counts(_run_threshold(spins, nbrs, taus), edges) / len(edges)
    return float(frac.sum()), float((frac * frac).sum())


def mc_threshold(
    g: Graph,
    params: ThresholdParams,
    trials: int,
    seed: int,
    *,
    edges=None,
    jobs: int = 1,
) -> McEstimate:
    """Monte-Carlo estimate of the expected cut fraction of ``edges`` (default: all).

    Trials are split into fixed blocks; block b draws from the stream seeded by
    ``(seed, b)``, so the estimate does not depend on ``jobs``.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    nbrs = [np.array(a, dtype=np.int64) for a in g.adjacency]
    edge_arr = np.array(g.edges() if edges is None else list(edges), dtype=np.int64)
    if edge_arr.size == 0:
        raise DomainError("graph has no edges")
    sizes = [min(MC_BLOCK, trials - start) for start in range(0, trials, MC_BLOCK)]
    args = [(g, nbrs, edge_arr, params.taus(), seed, b, size) for b, size in enumerate(sizes)]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            parts = list(pool.map(lambda a: _mc_block(*a), args))
    else:
        parts = [_mc_block(*a) for a in args]
    s1 = math.fsum(p[0] for p in parts)
    s2 = math.fsum(p[1] for p in parts)
    mean = s1 / trials
    var = max(0.0, (s2 - trials * mean * mean) / (trials - 1)) if trials > 1 else 0.0
    return McEstimate(mean, math.sqrt(var / trials), trials, seed)
