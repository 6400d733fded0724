"""Pure-Python reference kernels.

Mirrors `_speedups.pyx` operation for operation so both backends produce
bit-identical results (the compiled module is built with FP contraction off).
"""

import math


def _corners(cx, cy, theta, front, rear, width):
    c = math.cos(theta)
    s = math.sin(theta)
    hw = 0.5 * width
    return [
        (cx + c * front - s * hw, cy + s * front + c * hw),
        (cx + c * -rear - s * hw, cy + s * -rear + c * hw),
        (cx + c * -rear - s * -hw, cy + s * -rear + c * -hw),
        (cx + c * front - s * -hw, cy + s * front + c * -hw),
    ]


def rect_overlap_area(ax, ay, atheta, afront, arear, awidth,
                      bx, by, btheta, bfront, brear, bwidth):
    """Exact intersection area of two oriented rectangles.

    Sutherland-Hodgman clipping of rectangle b against the four half-planes
    of rectangle a, then the shoelace area of the clipped polygon.
    """
    dx = bx - ax
    dy = by - ay
    ra = math.hypot(max(afront, arear), 0.5 * awidth)
    rb = math.hypot(max(bfront, brear), 0.5 * bwidth)
    if dx * dx + dy * dy > (ra + rb) * (ra + rb):
        return 0.0
    clip = _corners(ax, ay, atheta, afront, arear, awidth)
    poly = _corners(bx, by, btheta, bfront, brear, bwidth)
    for i in range(4):
        px, py = clip[i]
        qx, qy = clip[(i + 1) % 4]
        ex = qx - px
        ey = qy - py
        out = []
        n = len(poly)
        if n == 0:
            return 0.0
        prev_x, prev_y = poly[n - 1]
        dprev = ex * (prev_y - py) - ey * (prev_x - px)
        for j in range(n):
            cur_x, cur_y = poly[j]
            dcur = ex * (cur_y - py) - ey * (cur_x - px)
            if dcur >= 0.0:
                if dprev < 0.0:
                    t = dprev / (dprev - dcur)
                    out.append((prev_x + t * (cur_x - prev_x),
                                prev_y + t * (cur_y - prev_y)))
                out.append((cur_x, cur_y))
            elif dprev >= 0.0:
                t = dprev / (dprev - dcur)
                out.append((prev_x + t * (cur_x - prev_x),
                            prev_y + t * (cur_y - prev_y)))
            prev_x, prev_y = cur_x, cur_y
            dprev = dcur
        poly = out
    n = len(poly)
    if n < 3:
        return 0.0
    acc = 0.0
    x0, y0 = poly[n - 1]
    for j in range(n):
        x1, y1 = poly[j]
        acc += x0 * y1 - x1 * y0
        x0, y0 = x1, y1
    area = 0.5 * acc
    return area if area > 0.0 else -area if area < 0.0 else 0.0


def zone_area_table(poses_a, poses_b, front, rear, width, offs_a, offs_b, out):
    """Fill out[na, nb] with zone overlap areas for all node pairs of
    matching prediction depth; both vehicles carry the same zone dimensions."""
    pa = poses_a.tolist()
    pb = poses_b.tolist()
    oa = offs_a.tolist()
    ob = offs_b.tolist()
    levels = len(oa) - 1
    for lev in range(levels):
        for na in range(oa[lev], oa[lev + 1]):
            xa, ya, tha = pa[na]
            for nb in range(ob[lev], ob[lev + 1]):
                xb, yb, thb = pb[nb]
                out[na, nb] = rect_overlap_area(
                    xa, ya, tha, front, rear, width,
                    xb, yb, thb, front, rear, width)
    return out


def reward_table(area_c, area_s, node_a, node_b, v_a, v_b,
                 w1, w2, w3, w_hat, discount, out):
    """Discounted cumulative reward of every ego/opponent action pair from
    precomputed per-node overlap areas."""
    ac = area_c.tolist()
    as_ = area_s.tolist()
    na_ = node_a.tolist()
    nb_ = node_b.tolist()
    va = v_a.tolist()
    vb = v_b.tolist()
    horizon = len(na_[0])
    for e in range(len(na_)):
        nodes_e = na_[e]
        speeds_e = va[e]
        for f in range(len(nb_)):
            nodes_f = nb_[f]
            speeds_f = vb[f]
            acc = 0.0
            lp = 1.0
            for t in range(horizon):
                sc = ac[nodes_e[t]][nodes_f[t]]
                ss = as_[nodes_e[t]][nodes_f[t]]
                vi = speeds_e[t]
                vj = speeds_f[t]
                cross = w_hat * abs(vi * vj)
                chat = -(1.0 + sc + cross) if sc > 0.0 else 0.0
                shat = -(1.0 + ss + cross) if ss > 0.0 else 0.0
                acc += lp * (w1 * chat + w2 * shat + w3 * vi)
                lp *= discount
            out[e, f] = acc
    return out
