# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; the hot loops behind zone overlap and reward tables.

Keep in lockstep with `_pure.py`: same operations in the same order, so the
two backends return bit-identical floats (built with -ffp-contract=off).
"""

from libc.math cimport cos, sin, hypot


cdef inline double _clip_area(double ax, double ay, double atheta,
                              double afront, double arear, double awidth,
                              double bx, double by, double btheta,
                              double bfront, double brear, double bwidth) noexcept nogil:
    cdef double dx = bx - ax
    cdef double dy = by - ay
    cdef double ma = afront if afront > arear else arear
    cdef double mb = bfront if bfront > brear else brear
    cdef double ra = hypot(ma, 0.5 * awidth)
    cdef double rb = hypot(mb, 0.5 * bwidth)
    if dx * dx + dy * dy > (ra + rb) * (ra + rb):
        return 0.0

    cdef double clipx[4]
    cdef double clipy[4]
    cdef double polx[16]
    cdef double poly[16]
    cdef double outx[16]
    cdef double outy[16]
    cdef double c, s, hw
    cdef int i, j, n, m
    cdef double px, py, qx, qy, ex, ey
    cdef double prev_x, prev_y, cur_x, cur_y, dprev, dcur, t
    cdef double acc, x0, y0, x1, y1, area

    c = cos(atheta); s = sin(atheta); hw = 0.5 * awidth
    clipx[0] = ax + c * afront - s * hw;   clipy[0] = ay + s * afront + c * hw
    clipx[1] = ax + c * -arear - s * hw;   clipy[1] = ay + s * -arear + c * hw
    clipx[2] = ax + c * -arear - s * -hw;  clipy[2] = ay + s * -arear + c * -hw
    clipx[3] = ax + c * afront - s * -hw;  clipy[3] = ay + s * afront + c * -hw

    c = cos(btheta); s = sin(btheta); hw = 0.5 * bwidth
    polx[0] = bx + c * bfront - s * hw;   poly[0] = by + s * bfront + c * hw
    polx[1] = bx + c * -brear - s * hw;   poly[1] = by + s * -brear + c * hw
    polx[2] = bx + c * -brear - s * -hw;  poly[2] = by + s * -brear + c * -hw
    polx[3] = bx + c * bfront - s * -hw;  poly[3] = by + s * bfront + c * -hw
    n = 4

    for i in range(4):
        px = clipx[i]; py = clipy[i]
        qx = clipx[(i + 1) % 4]; qy = clipy[(i + 1) % 4]
        ex = qx - px; ey = qy - py
        if n == 0:
            return 0.0
        m = 0
        prev_x = polx[n - 1]; prev_y = poly[n - 1]
        dprev = ex * (prev_y - py) - ey * (prev_x - px)
        for j in range(n):
            cur_x = polx[j]; cur_y = poly[j]
            dcur = ex * (cur_y - py) - ey * (cur_x - px)
            if dcur >= 0.0:
                if dprev < 0.0:
                    t = dprev / (dprev - dcur)
                    outx[m] = prev_x + t * (cur_x - prev_x)
                    outy[m] = prev_y + t * (cur_y - prev_y)
                    m += 1
                outx[m] = cur_x; outy[m] = cur_y
                m += 1
            elif dprev >= 0.0:
                t = dprev / (dprev - dcur)
                outx[m] = prev_x + t * (cur_x - prev_x)
                outy[m] = prev_y + t * (cur_y - prev_y)
                m += 1
            prev_x = cur_x; prev_y = cur_y
            dprev = dcur
        for j in range(m):
            polx[j] = outx[j]; poly[j] = outy[j]
        n = m

    if n < 3:
        return 0.0
    acc = 0.0
    x0 = polx[n - 1]; y0 = poly[n - 1]
    for j in range(n):
        x1 = polx[j]; y1 = poly[j]
        acc += x0 * y1 - x1 * y0
        x0 = x1; y0 = y1
    area = 0.5 * acc
    if area > 0.0:
        return area
    elif area < 0.0:
        return -area
    return 0.0


def rect_overlap_area(double ax, double ay, double atheta,
                      double afront, double arear, double awidth,
                      double bx, double by, double btheta,
                      double bfront, double brear, double bwidth):
    """Exact intersection area of two oriented rectangles."""
    return _clip_area(ax, ay, atheta, afront, arear, awidth,
                      bx, by, btheta, bfront, brear, bwidth)


def zone_area_table(double[:, ::1] poses_a, double[:, ::1] poses_b,
                    double front, double rear, double width,
                    Py_ssize_t[::1] offs_a, Py_ssize_t[::1] offs_b,
                    double[:, ::1] out):
    """Fill out[na, nb] with zone overlap areas for all node pairs of
    matching prediction depth; both vehicles carry the same zone dimensions."""
    cdef Py_ssize_t levels = offs_a.shape[0] - 1
    cdef Py_ssize_t lev, na, nb
    with nogil:
        for lev in range(levels):
            for na in range(offs_a[lev], offs_a[lev + 1]):
                for nb in range(offs_b[lev], offs_b[lev + 1]):
                    out[na, nb] = _clip_area(
                        poses_a[na, 0], poses_a[na, 1], poses_a[na, 2],
                        front, rear, width,
                        poses_b[nb, 0], poses_b[nb, 1], poses_b[nb, 2],
                        front, rear, width)
    return out


def reward_table(double[:, :] area_c, double[:, :] area_s,
                 Py_ssize_t[:, ::1] node_a, Py_ssize_t[:, ::1] node_b,
                 double[:, ::1] v_a, double[:, ::1] v_b,
                 double w1, double w2, double w3, double w_hat,
                 double discount, double[:, ::1] out):
    """Discounted cumulative reward of every ego/opponent action pair from
    precomputed per-node overlap areas."""
    cdef Py_ssize_t E = node_a.shape[0]
    cdef Py_ssize_t F = node_b.shape[0]
    cdef Py_ssize_t horizon = node_a.shape[1]
    cdef Py_ssize_t e, f, t
    cdef double acc, lp, sc, ss, vi, vj, cross, chat, shat
    with nogil:
        for e in range(E):
            for f in range(F):
                acc = 0.0
                lp = 1.0
                for t in range(horizon):
                    sc = area_c[node_a[e, t], node_b[f, t]]
                    ss = area_s[node_a[e, t], node_b[f, t]]
                    vi = v_a[e, t]
                    vj = v_b[f, t]
                    cross = vi * vj
                    if cross < 0.0:
                        cross = -cross
                    cross = w_hat * cross
                    chat = -(1.0 + sc + cross) if sc > 0.0 else 0.0
                    shat = -(1.0 + ss + cross) if ss > 0.0 else 0.0
                    acc += lp * (w1 * chat + w2 * shat + w3 * vi)
                    lp *= discount
                out[e, f] = acc
    return out
