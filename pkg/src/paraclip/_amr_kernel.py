"""JIT-compiled core of the face-refinement oracle.

Depth-first refinement with an explicit flat stack and compensated
scalar accumulation; semantically identical to the vectorized fallback
in `oracle`, but far faster.  Import fails cleanly when numba is
absent.
"""

import numpy as np
from numba import njit

# degree-5 symmetric triangle rule (7 points)
_S15 = np.sqrt(15.0)
_QW = np.array([9.0 / 40.0] + [(155.0 + _S15) / 1200.0] * 3 + [(155.0 - _S15) / 1200.0] * 3)
_A1 = (6.0 + _S15) / 21.0
_B1 = (6.0 - _S15) / 21.0
_QL = np.array(
    [[1.0 / 3.0, 1.0 / 3.0],
     [_A1, _A1], [1.0 - 2.0 * _A1, _A1], [_A1, 1.0 - 2.0 * _A1],
     [_B1, _B1], [1.0 - 2.0 * _B1, _B1], [_B1, 1.0 - 2.0 * _B1]]
)


@njit(cache=True, nogil=True, inline="always")
def _kadd(acc, idx, v):
    # acc rows: [total, compensation]
    y = v - acc[1, idx]
    t = acc[0, idx] + y
    acc[1, idx] = (t - acc[0, idx]) - y
    acc[0, idx] = t


@njit(cache=True, nogil=True, inline="always")
def _plane_integral(ax, ay, az, bx, by, bz, cx, cy, cz, acc):
    area = 0.5 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if area == 0.0:
        return
    mx0, my0, mz0 = 0.5 * (ax + bx), 0.5 * (ay + by), 0.5 * (az + bz)
    mx1, my1, mz1 = 0.5 * (bx + cx), 0.5 * (by + cy), 0.5 * (bz + cz)
    mx2, my2, mz2 = 0.5 * (cx + ax), 0.5 * (cy + ay), 0.5 * (cz + az)
    third = area / 3.0
    _kadd(acc, 0, third * (mz0 + mz1 + mz2))
    _kadd(acc, 1, third * (mx0 * mz0 + mx1 * mz1 + mx2 * mz2))
    _kadd(acc, 2, third * (my0 * mz0 + my1 * mz1 + my2 * mz2))
    _kadd(acc, 3, third * 0.5 * (mz0 * mz0 + mz1 * mz1 + mz2 * mz2))


@njit(cache=True, nogil=True, inline="always")
def _surface_integral(ax, ay, bx, by, cx, cy, alpha, beta, want_area, acc):
    area = 0.5 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if area == 0.0:
        return
    s0 = 0.0
    s1 = 0.0
    s2 = 0.0
    s3 = 0.0
    sa = 0.0
    for k in range(7):
        l1 = _QL[k, 0]
        l2 = _QL[k, 1]
        l0 = 1.0 - l1 - l2
        x = ax * l0 + bx * l1 + cx * l2
        y = ay * l0 + by * l1 + cy * l2
        zs = -(alpha * x * x + beta * y * y)
        w = _QW[k]
        s0 += w * zs
        s1 += w * x * zs
        s2 += w * y * zs
        s3 += w * 0.5 * zs * zs
        if want_area:
            sa += w * np.sqrt(1.0 + 4.0 * alpha * alpha * x * x + 4.0 * beta * beta * y * y)
    _kadd(acc, 0, area * s0)
    _kadd(acc, 1, area * s1)
    _kadd(acc, 2, area * s2)
    _kadd(acc, 3, area * s3)
    if want_area:
        _kadd(acc, 4, area * sa)


@njit(cache=True, nogil=True, inline="always")
def _edge_root(px, py, pz, dx, dy, dz, alpha, beta):
    qa = alpha * dx * dx + beta * dy * dy
    qb = 2.0 * (alpha * px * dx + beta * py * dy) + dz
    qc = alpha * px * px + beta * py * py + pz
    if qa == 0.0:
        if qb == 0.0:
            return 0.5
        t = -qc / qb
        if 0.0 <= t <= 1.0:
            return t
        return 0.5
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        disc = 0.0
    sd = np.sqrt(disc)
    if qb >= 0.0:
        qq = -(qb + sd) * 0.5
    else:
        qq = -(qb - sd) * 0.5
    if qq != 0.0:
        r1 = qq / qa
        r2 = qc / qq
    else:
        r1 = 0.0
        r2 = 0.0
    in1 = 0.0 <= r1 <= 1.0
    in2 = 0.0 <= r2 <= 1.0
    if in1 and (not in2 or abs(r1 - 0.5) <= abs(r2 - 0.5)):
        return r1
    if in2:
        return r2
    return 0.5


@njit(cache=True, nogil=True)
def _leaf_split(ax, ay, az, bx, by, bz, cx, cy, cz, p0, p1, p2,
                alpha, beta, want_area, acc):
    n_above = 0
    if p0 > 0.0:
        n_above += 1
    if p1 > 0.0:
        n_above += 1
    if p2 > 0.0:
        n_above += 1
    if n_above == 0 or n_above == 3:
        cenx = (ax + bx + cx) / 3.0
        ceny = (ay + by + cy) / 3.0
        cenz = (az + bz + cz) / 3.0
        if alpha * cenx * cenx + beta * ceny * ceny + cenz <= 0.0:
            _plane_integral(ax, ay, az, bx, by, bz, cx, cy, cz, acc)
        else:
            _surface_integral(ax, ay, bx, by, cx, cy, alpha, beta, want_area, acc)
        return
    lone_above = n_above == 1
    # rotate the lone vertex to the first slot
    if (lone_above and p1 > 0.0) or (not lone_above and p1 <= 0.0):
        ax, ay, az, bx, by, bz, cx, cy, cz = bx, by, bz, cx, cy, cz, ax, ay, az
    elif (lone_above and p2 > 0.0) or (not lone_above and p2 <= 0.0):
        ax, ay, az, bx, by, bz, cx, cy, cz = cx, cy, cz, ax, ay, az, bx, by, bz
    tab = _edge_root(ax, ay, az, bx - ax, by - ay, bz - az, alpha, beta)
    tca = _edge_root(ax, ay, az, cx - ax, cy - ay, cz - az, alpha, beta)
    abx = ax + tab * (bx - ax)
    aby = ay + tab * (by - ay)
    abz = az + tab * (bz - az)
    cax = ax + tca * (cx - ax)
    cay = ay + tca * (cy - ay)
    caz = az + tca * (cz - az)
    if lone_above:
        _surface_integral(ax, ay, abx, aby, cax, cay, alpha, beta, want_area, acc)
        _plane_integral(abx, aby, abz, bx, by, bz, cx, cy, cz, acc)
        _plane_integral(abx, aby, abz, cx, cy, cz, cax, cay, caz, acc)
    else:
        _plane_integral(ax, ay, az, abx, aby, abz, cax, cay, caz, acc)
        _surface_integral(abx, aby, bx, by, cx, cy, alpha, beta, want_area, acc)
        _surface_integral(abx, aby, cx, cy, cax, cay, alpha, beta, want_area, acc)
    if want_area:
        # parabolic-segment correction of the secant sliver, restoring
        # high-order convergence of the metric-area accumulation
        _sliver_area_correction(abx, aby, abz, cax, cay, caz,
                                bx - ax, by - ay, bz - az,
                                cx - ax, cy - ay, cz - az,
                                lone_above, alpha, beta, acc)


@njit(cache=True, nogil=True)
def _sliver_area_correction(p0x, p0y, p0z, p1x, p1y, p1z,
                            ux, uy, uz, vx, vy, vz, lone_above, alpha, beta, acc):
    # in-plane direction perpendicular to the chord p0 -> p1
    nx = uy * vz - uz * vy
    ny = uz * vx - ux * vz
    nz = ux * vy - uy * vx
    chx = p1x - p0x
    chy = p1y - p0y
    chz = p1z - p0z
    dx = ny * chz - nz * chy
    dy = nz * chx - nx * chz
    dz = nx * chy - ny * chx
    dn = np.sqrt(dx * dx + dy * dy + dz * dz)
    if dn == 0.0:
        return
    dx /= dn
    dy /= dn
    dz /= dn
    mx = 0.5 * (p0x + p1x)
    my = 0.5 * (p0y + p1y)
    mz = 0.5 * (p0z + p1z)
    qa = alpha * dx * dx + beta * dy * dy
    qb = 2.0 * (alpha * mx * dx + beta * my * dy) + dz
    qc = alpha * mx * mx + beta * my * my + mz
    if qa == 0.0:
        if qb == 0.0:
            return
        s = -qc / qb
    else:
        disc = qb * qb - 4.0 * qa * qc
        if disc < 0.0:
            return
        sd = np.sqrt(disc)
        if qb >= 0.0:
            qq = -(qb + sd) * 0.5
        else:
            qq = -(qb - sd) * 0.5
        if qq == 0.0:
            s = 0.0
        else:
            r1 = qq / qa
            r2 = qc / qq
            s = r1 if abs(r1) <= abs(r2) else r2
    apex_x = mx + s * dx
    apex_y = my + s * dy
    # signed projected sliver between chord and conic (Archimedes 4/3)
    tri = 0.5 * (p0x * (apex_y - p1y) + apex_x * (p1y - p0y) + p1x * (p0y - apex_y))
    sliver = 4.0 / 3.0 * tri
    if sliver == 0.0:
        return
    # metric at the sliver centroid (3/5 of the way to the apex)
    gx = mx + 0.6 * (apex_x - mx)
    gy = my + 0.6 * (apex_y - my)
    g = np.sqrt(1.0 + 4.0 * alpha * alpha * gx * gx + 4.0 * beta * beta * gy * gy)
    # the bulge belongs to the lone vertex's side; when the lone vertex is
    # below, the surface-side set loses the sliver instead
    corr = g * sliver
    if lone_above:
        _kadd(acc, 4, corr)
    else:
        _kadd(acc, 4, -corr)


@njit(cache=True, nogil=True)
def amr_accumulate(roots, alpha, beta, levels, slack, want_area):
    """Depth-first refinement over all root triangles.

    Returns (moment totals [4], surface area).
    """
    acc = np.zeros((2, 5))
    curv = max(abs(alpha), abs(beta))
    cap = 3 * (levels + 2) + 8
    st = np.empty((cap, 9))
    sl = np.empty(cap, dtype=np.int64)
    for r in range(roots.shape[0]):
        top = 0
        for k in range(3):
            st[0, 3 * k] = roots[r, k, 0]
            st[0, 3 * k + 1] = roots[r, k, 1]
            st[0, 3 * k + 2] = roots[r, k, 2]
        sl[0] = 0
        while top >= 0:
            ax = st[top, 0]
            ay = st[top, 1]
            az = st[top, 2]
            bx = st[top, 3]
            by = st[top, 4]
            bz = st[top, 5]
            cx = st[top, 6]
            cy = st[top, 7]
            cz = st[top, 8]
            lvl = sl[top]
            top -= 1
            p0 = alpha * ax * ax + beta * ay * ay + az
            p1 = alpha * bx * bx + beta * by * by + bz
            p2 = alpha * cx * cx + beta * cy * cy + cz
            e0x = bx - ax
            e0y = by - ay
            e1x = cx - bx
            e1y = cy - by
            e2x = ax - cx
            e2y = ay - cy
            d2 = max(e0x * e0x + e0y * e0y,
                     max(e1x * e1x + e1y * e1y, e2x * e2x + e2y * e2y))
            margin = 0.25 * curv * d2 + slack
            mx = max(p0, max(p1, p2))
            mn = min(p0, min(p1, p2))
            if mx + margin <= 0.0:
                _plane_integral(ax, ay, az, bx, by, bz, cx, cy, cz, acc)
            elif mn - margin >= 0.0:
                _surface_integral(ax, ay, bx, by, cx, cy, alpha, beta, want_area, acc)
            elif lvl >= levels:
                _leaf_split(ax, ay, az, bx, by, bz, cx, cy, cz, p0, p1, p2,
                            alpha, beta, want_area, acc)
            else:
                abx = 0.5 * (ax + bx)
                aby = 0.5 * (ay + by)
                abz = 0.5 * (az + bz)
                bcx = 0.5 * (bx + cx)
                bcy = 0.5 * (by + cy)
                bcz = 0.5 * (bz + cz)
                cax = 0.5 * (cx + ax)
                cay = 0.5 * (cy + ay)
                caz = 0.5 * (cz + az)
                lv1 = lvl + 1
                top += 1
                st[top, 0] = ax
                st[top, 1] = ay
                st[top, 2] = az
                st[top, 3] = abx
                st[top, 4] = aby
                st[top, 5] = abz
                st[top, 6] = cax
                st[top, 7] = cay
                st[top, 8] = caz
                sl[top] = lv1
                top += 1
                st[top, 0] = abx
                st[top, 1] = aby
                st[top, 2] = abz
                st[top, 3] = bx
                st[top, 4] = by
                st[top, 5] = bz
                st[top, 6] = bcx
                st[top, 7] = bcy
                st[top, 8] = bcz
                sl[top] = lv1
                top += 1
                st[top, 0] = cax
                st[top, 1] = cay
                st[top, 2] = caz
                st[top, 3] = bcx
                st[top, 4] = bcy
                st[top, 5] = bcz
                st[top, 6] = cx
                st[top, 7] = cy
                st[top, 8] = cz
                sl[top] = lv1
                top += 1
                st[top, 0] = abx
                st[top, 1] = aby
                st[top, 2] = abz
                st[top, 3] = bcx
                st[top, 4] = bcy
                st[top, 5] = bcz
                st[top, 6] = cax
                st[top, 7] = cay
                st[top, 8] = caz
                sl[top] = lv1
    return acc[0, :4].copy(), acc[0, 4]
