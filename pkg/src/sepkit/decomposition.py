"""Constructive separability certificates for two qubits.

A candidate decomposition is a list of weights and local Bloch vectors; it
certifies separability when the moment equations

    sum_i p_i a_i = r,   sum_i p_i b_i = s,   sum_i p_i a_i b_i^T = tau

hold against the state's Bloch data within tolerance, since the candidate
then re-composes the state exactly as a mixture of the product states
(I + a.sigma)/2 (x) (I + b.sigma)/2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from ._core_py import _ball_clip
from .errors import InvalidCandidateError, OutOfRangeError, UnsupportedDimsError
from .linalg import PAULIS
from .states import DensityMatrix, fano_decompose, mixture

CERT_TOL = 1e-6
WEIGHT_TOL = 1e-9
BLOCH_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class LiQiaoCandidate:
    """Weights and local Bloch vectors proposed as a separable decomposition."""

    weights: np.ndarray   # (L,), positive, summing to 1
    bloch_a: np.ndarray   # (L, 3), each row inside the unit ball
    bloch_b: np.ndarray

    def __len__(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class Residuals:
    """Norms of the three moment-equation defects."""

    dr: float
    ds: float
    dtau: float

    @property
    def max(self) -> float:
        return max(self.dr, self.ds, self.dtau)


def candidate(weights, bloch_a, bloch_b) -> LiQiaoCandidate:
    """Validate and build a candidate; names the violated invariant on failure."""
    w = np.asarray(weights, dtype=float).ravel()
    a = np.asarray(bloch_a, dtype=float)
    b = np.asarray(bloch_b, dtype=float)
    if w.size == 0:
        raise InvalidCandidateError("candidate needs at least one term")
    if a.shape != (w.size, 3) or b.shape != (w.size, 3):
        raise InvalidCandidateError(
            f"Bloch vector arrays must have shape ({w.size}, 3), got {a.shape} and {b.shape}"
        )
    if np.any(w <= 0.0):
        raise InvalidCandidateError(f"weights must be positive, got min {w.min()!r}")
    total = float(w.sum())
    if abs(total - 1.0) > WEIGHT_TOL:
        raise InvalidCandidateError(f"weights sum to {total!r}, expected 1")
    for name, arr in (("a", a), ("b", b)):
        norms = np.linalg.norm(arr, axis=1)
        if np.any(norms > 1.0 + BLOCH_TOL):
            raise InvalidCandidateError(
                f"Bloch vector {name}[{int(norms.argmax())}] has norm {norms.max()!r} > 1"
            )
    return LiQiaoCandidate(w, a, b)


def liqiao_verify(cand: LiQiaoCandidate, rho: DensityMatrix) -> Residuals:
    """Residuals of the candidate's moment equations against the state."""
    if tuple(rho.dims) != (2, 2):
        raise UnsupportedDimsError(f"decompositions are defined for dims (2, 2), got {tuple(rho.dims)}")
    cand = candidate(cand.weights, cand.bloch_a, cand.bloch_b)  # re-check invariants
    f = fano_decompose(rho)
    dr = cand.weights @ cand.bloch_a - f.r
    ds = cand.weights @ cand.bloch_b - f.s
    dtau = (cand.bloch_a * cand.weights[:, None]).T @ cand.bloch_b - f.tau
    return Residuals(
        float(np.linalg.norm(dr)),
        float(np.linalg.norm(ds)),
        float(np.linalg.norm(dtau)),
    )


def recompose(cand: LiQiaoCandidate) -> DensityMatrix:
    """Mixture of the candidate's product states (I + a.sigma)/2 (x) (I + b.sigma)/2."""
    terms = []
    for w, a, b in zip(cand.weights, cand.bloch_a, cand.bloch_b):
        ma = (np.eye(2, dtype=complex) + sum(a[i] * PAULIS[i] for i in range(3))) / 2.0
        mb = (np.eye(2, dtype=complex) + sum(b[i] * PAULIS[i] for i in range(3))) / 2.0
        terms.append((w, ma, mb))
    return mixture(terms)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a decomposition search.

    certificate is None when no candidate reached the tolerance; residuals
    always carry the best point found. A failed search is never evidence of
    entanglement.
    """

    certificate: LiQiaoCandidate | None
    residuals: Residuals
    restarts_used: int
    iterations: int

    @property
    def certified(self) -> bool:
        return self.certificate is not None


def liqiao_search(rho: DensityMatrix, terms: int = 16, seed: int = 0,
                  max_iters: int = 5000, tol: float = CERT_TOL,
                  restarts: int = 8) -> SearchResult:
    """Search for a separable decomposition by projected gradient descent.

    Minimizes the summed squared residuals over simplex-constrained weights
    and ball-constrained Bloch vectors, restarting from `restarts` random
    points (alternating unit-sphere and half-radius initial vectors).
    Deterministic given the seed; stops at the first certifying restart.
    """
    if tuple(rho.dims) != (2, 2):
        raise UnsupportedDimsError(f"decompositions are defined for dims (2, 2), got {tuple(rho.dims)}")
    if terms < 1:
        raise OutOfRangeError(f"terms must be >= 1, got {terms}")
    if max_iters < 1:
        raise OutOfRangeError(f"max_iters must be >= 1, got {max_iters}")
    if restarts < 1:
        raise OutOfRangeError(f"restarts must be >= 1, got {restarts}")
    f = fano_decompose(rho)
    rng = np.random.default_rng(seed)
    best = None
    total_iters = 0
    restarts_used = 0
    for restart in range(restarts):
        restarts_used = restart + 1
        p0 = rng.dirichlet(np.ones(terms))
        a0 = rng.standard_normal((terms, 3))
        b0 = rng.standard_normal((terms, 3))
        if restart % 2 == 0:
            a0 /= np.linalg.norm(a0, axis=1, keepdims=True)
            b0 /= np.linalg.norm(b0, axis=1, keepdims=True)
        else:
            a0 = _ball_clip(0.5 * a0)
            b0 = _ball_clip(0.5 * b0)
        p, a, b, (dr, ds, dtau), iters = kernels.liqiao_descend(
            f.r, f.s, f.tau, p0, a0, b0, max_iters, cert_tol=tol,
            stop_tol=min(1e-9, tol),
        )
        total_iters += iters
        res = Residuals(dr, ds, dtau)
        if best is None or res.max < best[1].max:
            best = ((p, a, b), res)
        if res.max <= tol:
            break
    (p, a, b), res = best
    cert = None
    if res.max <= tol:
        keep = p > 0.0  # simplex projection can zero out weights exactly
        w = p[keep]
        cert = candidate(w / w.sum(), a[keep], b[keep])
    return SearchResult(cert, res, restarts_used, total_iters)
