"""Pure-Python reference implementations of the two iterative kernels.

Selected by sepkit.kernels when the compiled extension is unavailable (or
when SEPKIT_PURE_PYTHON=1). Both lanes run the same algorithm on the same
caller-supplied starting points; results agree up to floating-point
round-off, not bit for bit.
"""
from __future__ import annotations

import numpy as np


def _simplex_project(y: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort-based)."""
    u = np.sort(y)[::-1]
    css = np.cumsum(u)
    j = np.arange(1, y.size + 1)
    rho = np.nonzero(u + (1.0 - css) / j > 0.0)[0][-1]
    theta = (1.0 - css[rho]) / (rho + 1)
    return np.maximum(y + theta, 0.0)


def _ball_clip(v: np.ndarray) -> np.ndarray:
    """Clip each row of v to the unit ball."""
    n = np.sqrt((v * v).sum(axis=1))
    f = np.minimum(1.0, 1.0 / np.maximum(n, 1e-300))
    return v * f[:, None]


def _unit_rows(x: np.ndarray, fallback: np.ndarray) -> np.ndarray:
    n = np.sqrt((x * x).sum(axis=1, keepdims=True))
    return np.where(n > 1e-300, x / np.maximum(n, 1e-300), fallback)


def chsh_ascend(tau: np.ndarray, inits: np.ndarray, max_iter: int = 200,
                ftol: float = 1e-14):
    """Maximize |a.tau(b+b') + a'.tau(b-b')| over unit vectors by block ascent.

    Each block update is the exact maximizer given the other block, so the
    objective is non-decreasing per restart. `inits` has shape
    (restarts, 4, 3) with unit rows ordered (a, a', b, b'). All restarts are
    advanced together (updates are idempotent at a fixed point, so restarts
    that converge early just coast until the slowest one finishes).

    Returns (best absolute value, best (4, 3) observable block).
    """
    tau = np.asarray(tau, dtype=float)
    blocks = np.array(inits, dtype=float)
    a, ap, b, bp = blocks[:, 0], blocks[:, 1], blocks[:, 2], blocks[:, 3]
    val = np.zeros(blocks.shape[0])
    val_prev = np.full(blocks.shape[0], -np.inf)
    for _ in range(max_iter):
        a = _unit_rows((b + bp) @ tau.T, a)
        ap = _unit_rows((b - bp) @ tau.T, ap)
        b = _unit_rows((a + ap) @ tau, b)
        bp = _unit_rows((a - ap) @ tau, bp)
        val = (((b + bp) @ tau.T) * a).sum(axis=1) + (((b - bp) @ tau.T) * ap).sum(axis=1)
        if np.all(val - val_prev < ftol):
            break
        val_prev = val
    best = int(np.argmax(np.abs(val)))
    best_obs = np.stack([a[best], ap[best], b[best], bp[best]])
    return float(abs(val[best])), best_obs


def _residual_parts(p, a, b, r, s, tau):
    dr = p @ a - r
    ds = p @ b - s
    dt = (a * p[:, None]).T @ b - tau
    f = dr @ dr + ds @ ds + (dt * dt).sum()
    return f, dr, ds, dt


def _gradients(p, a, b, dr, ds, dt):
    adt = a @ dt
    bdt = b @ dt.T
    gp = 2.0 * (a @ dr + b @ ds + (adt * b).sum(axis=1))
    ga = 2.0 * p[:, None] * (dr[None, :] + bdt)
    gb = 2.0 * p[:, None] * (ds[None, :] + adt)
    return gp, ga, gb


def liqiao_descend(r, s, tau, p0, a0, b0, max_iter: int,
                   cert_tol: float = 1e-6, stop_tol: float = 1e-9,
                   polish_budget: int = 300):
    """Projected gradient descent on the moment-matching residual.

    Minimizes |sum p_i a_i - r|^2 + |sum p_i b_i - s|^2
    + |sum p_i a_i b_i^T - tau|_F^2 over the weight simplex and unit balls.
    Backtracking line search safeguards a Barzilai-Borwein step guess; a
    stalled descent retries twice from a small step before giving up.
    Polishing continues for `polish_budget` iterations after the residual
    first drops below cert_tol, or until it reaches stop_tol.

    Returns (p, a, b, (dr, ds, dt) norms, iterations used).
    """
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    tau = np.asarray(tau, dtype=float)
    p = np.array(p0, dtype=float)
    a = np.array(a0, dtype=float)
    b = np.array(b0, dtype=float)
    f, dr, ds, dt = _residual_parts(p, a, b, r, s, tau)
    gp, ga, gb = _gradients(p, a, b, dr, ds, dt)
    step = 0.25
    certified_at = -1
    stalls = 0
    it = 0
    for it in range(max_iter):
        res2 = max(dr @ dr, ds @ ds, (dt * dt).sum())
        if res2 <= stop_tol * stop_tol:
            break
        if res2 <= cert_tol * cert_tol:
            if certified_at < 0:
                certified_at = it
            elif it - certified_at >= polish_budget:
                break
        ok = False
        eta = step
        for _ in range(60):
            p2 = _simplex_project(p - eta * gp)
            a2 = _ball_clip(a - eta * ga)
            b2 = _ball_clip(b - eta * gb)
            f2, dr2, ds2, dt2 = _residual_parts(p2, a2, b2, r, s, tau)
            if f2 < f:
                ok = True
                break
            eta *= 0.5
        if not ok:
            stalls += 1
            if stalls >= 3:
                break
            step = 1e-3
            continue
        gp2, ga2, gb2 = _gradients(p2, a2, b2, dr2, ds2, dt2)
        dxdg = ((p2 - p) @ (gp2 - gp) + ((a2 - a) * (ga2 - ga)).sum()
                + ((b2 - b) * (gb2 - gb)).sum())
        dgdg = ((gp2 - gp) @ (gp2 - gp) + ((ga2 - ga) ** 2).sum()
                + ((gb2 - gb) ** 2).sum())
        if dxdg > 0.0 and dgdg > 0.0:
            step = min(max(dxdg / dgdg, 1e-8), 1e3)
        else:
            step = eta * 1.5
        p, a, b = p2, a2, b2
        f, dr, ds, dt = f2, dr2, ds2, dt2
        gp, ga, gb = gp2, ga2, gb2
    res = (float(np.linalg.norm(dr)), float(np.linalg.norm(ds)),
           float(np.linalg.norm(dt)))
    return p, a, b, res, it
