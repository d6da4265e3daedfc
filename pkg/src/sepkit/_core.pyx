# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the two iterative kernels.

Same update rules and stopping logic as sepkit._core_py (the reference
lane); this one runs scalar C loops per restart where the fallback
vectorizes, so results agree to float round-off rather than bit for bit.
See the fallback module for the algorithm notes.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

ctypedef cnp.float64_t f64


cdef inline double _norm3(double* v) nogil:
    return sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


cdef inline void _matvec3(double[:, ::1] m, double* x, double* out, bint transpose) nogil:
    cdef int i, j
    for i in range(3):
        out[i] = 0.0
    if transpose:
        for i in range(3):
            for j in range(3):
                out[i] += m[j, i] * x[j]
    else:
        for i in range(3):
            for j in range(3):
                out[i] += m[i, j] * x[j]


def chsh_ascend(tau, inits, int max_iter=200, double ftol=1e-14):
    """Block coordinate ascent on the four-observable correlation value.

    Same contract as sepkit._core_py.chsh_ascend.
    """
    cdef double[:, ::1] t = np.ascontiguousarray(tau, dtype=np.float64)
    cdef double[:, :, ::1] ini = np.ascontiguousarray(inits, dtype=np.float64)
    cdef int n_restarts = ini.shape[0]
    cdef double best_val = -1.0
    best_obs = np.array(ini[0], dtype=np.float64)
    cdef double[:, ::1] best = best_obs
    cdef double a[3]
    cdef double ap[3]
    cdef double b[3]
    cdef double bp[3]
    cdef double u[3]
    cdef double w[3]
    cdef double val, val_prev, nrm
    cdef int rs, k, i

    for rs in range(n_restarts):
        for i in range(3):
            a[i] = ini[rs, 0, i]
            ap[i] = ini[rs, 1, i]
            b[i] = ini[rs, 2, i]
            bp[i] = ini[rs, 3, i]
        val_prev = -1e300
        val = 0.0
        for k in range(max_iter):
            for i in range(3):
                u[i] = b[i] + bp[i]
            _matvec3(t, u, w, 0)
            nrm = _norm3(w)
            if nrm > 1e-300:
                for i in range(3):
                    a[i] = w[i] / nrm
            for i in range(3):
                u[i] = b[i] - bp[i]
            _matvec3(t, u, w, 0)
            nrm = _norm3(w)
            if nrm > 1e-300:
                for i in range(3):
                    ap[i] = w[i] / nrm
            for i in range(3):
                u[i] = a[i] + ap[i]
            _matvec3(t, u, w, 1)
            nrm = _norm3(w)
            if nrm > 1e-300:
                for i in range(3):
                    b[i] = w[i] / nrm
            for i in range(3):
                u[i] = a[i] - ap[i]
            _matvec3(t, u, w, 1)
            nrm = _norm3(w)
            if nrm > 1e-300:
                for i in range(3):
                    bp[i] = w[i] / nrm
            for i in range(3):
                u[i] = b[i] + bp[i]
            _matvec3(t, u, w, 0)
            val = a[0] * w[0] + a[1] * w[1] + a[2] * w[2]
            for i in range(3):
                u[i] = b[i] - bp[i]
            _matvec3(t, u, w, 0)
            val += ap[0] * w[0] + ap[1] * w[1] + ap[2] * w[2]
            if val - val_prev < ftol:
                break
            val_prev = val
        if fabs(val) > best_val:
            best_val = fabs(val)
            for i in range(3):
                best[0, i] = a[i]
                best[1, i] = ap[i]
                best[2, i] = b[i]
                best[3, i] = bp[i]
    return best_val, best_obs


cdef void _simplex_project(double[::1] y, double[::1] out, double[::1] scratch) nogil:
    cdef int n = y.shape[0]
    cdef int i, j, rho
    cdef double key, css, theta, v
    for i in range(n):
        scratch[i] = y[i]
    # insertion sort, descending (n <= a few dozen)
    for i in range(1, n):
        key = scratch[i]
        j = i - 1
        while j >= 0 and scratch[j] < key:
            scratch[j + 1] = scratch[j]
            j -= 1
        scratch[j + 1] = key
    css = 0.0
    rho = 0
    theta = 0.0
    for i in range(n):
        css += scratch[i]
        if scratch[i] + (1.0 - css) / (i + 1) > 0.0:
            rho = i
            theta = (1.0 - css) / (i + 1)
    for i in range(n):
        v = y[i] + theta
        out[i] = v if v > 0.0 else 0.0


cdef void _ball_clip(double[:, ::1] v, double[:, ::1] out) nogil:
    cdef int n = v.shape[0]
    cdef int i, k
    cdef double nrm, f
    for i in range(n):
        nrm = sqrt(v[i, 0] * v[i, 0] + v[i, 1] * v[i, 1] + v[i, 2] * v[i, 2])
        f = 1.0
        if nrm > 1.0:
            f = 1.0 / nrm
        for k in range(3):
            out[i, k] = v[i, k] * f


cdef double _residual_parts(double[::1] p, double[:, ::1] a, double[:, ::1] b,
                            double[::1] r, double[::1] s, double[:, ::1] tau,
                            double[::1] dr, double[::1] ds, double[:, ::1] dt) nogil:
    cdef int n = p.shape[0]
    cdef int i, x, y
    cdef double f = 0.0
    for x in range(3):
        dr[x] = -r[x]
        ds[x] = -s[x]
        for y in range(3):
            dt[x, y] = -tau[x, y]
    for i in range(n):
        for x in range(3):
            dr[x] += p[i] * a[i, x]
            ds[x] += p[i] * b[i, x]
            for y in range(3):
                dt[x, y] += p[i] * a[i, x] * b[i, y]
    for x in range(3):
        f += dr[x] * dr[x] + ds[x] * ds[x]
        for y in range(3):
            f += dt[x, y] * dt[x, y]
    return f


cdef void _gradients(double[::1] p, double[:, ::1] a, double[:, ::1] b,
                     double[::1] dr, double[::1] ds, double[:, ::1] dt,
                     double[::1] gp, double[:, ::1] ga, double[:, ::1] gb) nogil:
    cdef int n = p.shape[0]
    cdef int i, x, y
    cdef double adt, bdt, cross
    for i in range(n):
        gp[i] = 0.0
        cross = 0.0
        for x in range(3):
            adt = 0.0
            bdt = 0.0
            for y in range(3):
                adt += a[i, y] * dt[y, x]   # (a_i . dt)_x
                bdt += b[i, y] * dt[x, y]   # (dt . b_i)_x
            ga[i, x] = 2.0 * p[i] * (dr[x] + bdt)
            gb[i, x] = 2.0 * p[i] * (ds[x] + adt)
            gp[i] += a[i, x] * dr[x] + b[i, x] * ds[x]
            cross += adt * b[i, x]
        gp[i] = 2.0 * (gp[i] + cross)


def liqiao_descend(r, s, tau, p0, a0, b0, int max_iter,
                   double cert_tol=1e-6, double stop_tol=1e-9,
                   int polish_budget=300):
    """Projected gradient descent on the moment-matching residual.

    Same contract as sepkit._core_py.liqiao_descend.
    """
    cdef double[::1] rv = np.ascontiguousarray(r, dtype=np.float64)
    cdef double[::1] sv = np.ascontiguousarray(s, dtype=np.float64)
    cdef double[:, ::1] tv = np.ascontiguousarray(tau, dtype=np.float64)
    p_arr = np.array(p0, dtype=np.float64)
    a_arr = np.array(a0, dtype=np.float64)
    b_arr = np.array(b0, dtype=np.float64)
    cdef double[::1] p = p_arr
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] b = b_arr
    cdef int L = p.shape[0]

    work = np.zeros((8, L, 3))
    cdef double[:, ::1] ga = work[0]
    cdef double[:, ::1] gb = work[1]
    cdef double[:, ::1] a2 = work[2]
    cdef double[:, ::1] b2 = work[3]
    cdef double[:, ::1] ga2 = work[4]
    cdef double[:, ::1] gb2 = work[5]
    cdef double[:, ::1] atr = work[6]
    cdef double[:, ::1] btr = work[7]
    pwork = np.zeros((5, L))
    cdef double[::1] gp = pwork[0]
    cdef double[::1] p2 = pwork[1]
    cdef double[::1] gp2 = pwork[2]
    cdef double[::1] ptr = pwork[3]
    cdef double[::1] scratch = pwork[4]
    small = np.zeros((8, 3))
    cdef double[::1] dr = small[0]
    cdef double[::1] ds = small[1]
    cdef double[::1] dr2 = small[2]
    cdef double[::1] ds2 = small[3]
    dts = np.zeros((2, 3, 3))
    cdef double[:, ::1] dt = dts[0]
    cdef double[:, ::1] dt2 = dts[1]

    cdef double f, f2, res2, eta, step, dxdg, dgdg, tmp
    cdef int it = 0
    cdef int certified_at = -1
    cdef int stalls = 0
    cdef int i, k, x, bt
    cdef bint ok

    f = _residual_parts(p, a, b, rv, sv, tv, dr, ds, dt)
    _gradients(p, a, b, dr, ds, dt, gp, ga, gb)
    step = 0.25

    for it in range(max_iter):
        res2 = 0.0
        tmp = dr[0] * dr[0] + dr[1] * dr[1] + dr[2] * dr[2]
        if tmp > res2:
            res2 = tmp
        tmp = ds[0] * ds[0] + ds[1] * ds[1] + ds[2] * ds[2]
        if tmp > res2:
            res2 = tmp
        tmp = 0.0
        for x in range(3):
            for k in range(3):
                tmp += dt[x, k] * dt[x, k]
        if tmp > res2:
            res2 = tmp
        if res2 <= stop_tol * stop_tol:
            break
        if res2 <= cert_tol * cert_tol:
            if certified_at < 0:
                certified_at = it
            elif it - certified_at >= polish_budget:
                break
        ok = 0
        eta = step
        for bt in range(60):
            for i in range(L):
                ptr[i] = p[i] - eta * gp[i]
                for x in range(3):
                    atr[i, x] = a[i, x] - eta * ga[i, x]
                    btr[i, x] = b[i, x] - eta * gb[i, x]
            _simplex_project(ptr, p2, scratch)
            _ball_clip(atr, a2)
            _ball_clip(btr, b2)
            f2 = _residual_parts(p2, a2, b2, rv, sv, tv, dr2, ds2, dt2)
            if f2 < f:
                ok = 1
                break
            eta *= 0.5
        if not ok:
            stalls += 1
            if stalls >= 3:
                break
            step = 1e-3
            continue
        _gradients(p2, a2, b2, dr2, ds2, dt2, gp2, ga2, gb2)
        dxdg = 0.0
        dgdg = 0.0
        for i in range(L):
            dxdg += (p2[i] - p[i]) * (gp2[i] - gp[i])
            dgdg += (gp2[i] - gp[i]) * (gp2[i] - gp[i])
            for x in range(3):
                dxdg += (a2[i, x] - a[i, x]) * (ga2[i, x] - ga[i, x])
                dxdg += (b2[i, x] - b[i, x]) * (gb2[i, x] - gb[i, x])
                dgdg += (ga2[i, x] - ga[i, x]) * (ga2[i, x] - ga[i, x])
                dgdg += (gb2[i, x] - gb[i, x]) * (gb2[i, x] - gb[i, x])
        if dxdg > 0.0 and dgdg > 0.0:
            step = dxdg / dgdg
            if step < 1e-8:
                step = 1e-8
            elif step > 1e3:
                step = 1e3
        else:
            step = eta * 1.5
        f = f2
        for i in range(L):
            p[i] = p2[i]
            gp[i] = gp2[i]
            for x in range(3):
                a[i, x] = a2[i, x]
                b[i, x] = b2[i, x]
                ga[i, x] = ga2[i, x]
                gb[i, x] = gb2[i, x]
        for x in range(3):
            dr[x] = dr2[x]
            ds[x] = ds2[x]
            for k in range(3):
                dt[x, k] = dt2[x, k]

    res = (sqrt(dr[0] * dr[0] + dr[1] * dr[1] + dr[2] * dr[2]),
           sqrt(ds[0] * ds[0] + ds[1] * ds[1] + ds[2] * ds[2]),
           sqrt(dt[0, 0] * dt[0, 0] + dt[0, 1] * dt[0, 1] + dt[0, 2] * dt[0, 2]
                + dt[1, 0] * dt[1, 0] + dt[1, 1] * dt[1, 1] + dt[1, 2] * dt[1, 2]
                + dt[2, 0] * dt[2, 0] + dt[2, 1] * dt[2, 1] + dt[2, 2] * dt[2, 2]))
    return p_arr, a_arr, b_arr, res, it
