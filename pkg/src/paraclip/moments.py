"""Closed-form moment engine for polyhedra clipped by the surface
alpha x^2 + beta y^2 + z = 0.

The clipped-body moments decompose into per-segment terms:

  * a planar triangle term for every boundary segment (chord against a
    per-face reference point),
  * a surface chord term for segments lying on the clip surface
    (triangle against the origin), and
  * an arc correction carrying the curved part of each conic segment,
    assembled from weight-channel tables with a Taylor branch near
    w = 1 (window [0.35, 1.7], order 40).

Faces whose surface intersection is a whole interior ellipse use the
closed-form ellipse term instead of arcs.  All operators were verified
against adaptive quadrature of their defining path integrals; see the
tests for the oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._arc_tables import K_RATIONAL, POLE_POWER, SERIES_RATIONAL, SERIES_WINDOW
from ._scalars import sqrt, atan, atanh, fabs, is_finite, to_float
from .core import (MomentVector, Tolerances, DEFAULT_TOLERANCES,
                   KahanAccumulator, signed_area_xy)
from .clip import (build_clipped_boundaries, ScalarMesh, as_scalar_mesh,
                   AmbiguousTopologyError)

_ORIGIN = (0.0, 0.0, 0.0)

# float materializations of the exact tables
_K = [[n / d for (n, d) in row] for row in K_RATIONAL]
_SERIES = [[n / d for (n, d) in ser] for ser in SERIES_RATIONAL]
# volume channel: (2/3) g1 + (4/3) g2, combined exactly before rounding
_SERIES_VOL = [
    float(Fraction(2, 3) * Fraction(*SERIES_RATIONAL[0][n])
          + Fraction(4, 3) * Fraction(*SERIES_RATIONAL[1][n]))
    for n in range(len(SERIES_RATIONAL[0]))
]
_WLO, _WHI = SERIES_WINDOW

_K_MPF = None
_SERIES_MPF = None
_SERIES_VOL_MPF = None


def _mpf_tables():
    """Extended-precision materialization of the exact tables (cached)."""
    global _K_MPF, _SERIES_MPF, _SERIES_VOL_MPF
    if _K_MPF is None:
        from ._scalars import extended
        _K_MPF = [[extended(n) / d for (n, d) in row] for row in K_RATIONAL]
        _SERIES_MPF = [[extended(n) / d for (n, d) in ser] for ser in SERIES_RATIONAL]
        f23, f43 = Fraction(2, 3), Fraction(4, 3)
        _SERIES_VOL_MPF = []
        for n in range(len(SERIES_RATIONAL[0])):
            c = f23 * Fraction(*SERIES_RATIONAL[0][n]) + f43 * Fraction(*SERIES_RATIONAL[1][n])
            _SERIES_VOL_MPF.append(extended(c.numerator) / c.denominator)
    return _K_MPF, _SERIES_MPF, _SERIES_VOL_MPF


def theta_weight(w):
    """Scalar weight function: arctan branch below w = 1, arctanh above;
    continuous through the removable point at 1 with value 1/2."""
    if w < 0:
        raise ValueError("theta_weight requires w >= 0")
    if w < 1:
        s = sqrt(1 - w * w)
        return atan((1 - w) / s) / s
    if w == 1:
        return 0.5 * (w * 0 + 1)   # preserve scalar type
    s = sqrt(w * w - 1)
    return atanh((w - 1) / s) / s


def lambda_factor(w):
    """1 / ((w - 1)(w + 1)); singular at |w| = 1."""
    return 1 / ((w - 1) * (w + 1))


def tri_face_moments(xa, xb, xc):
    """Moment 4-vector of the plane primitive over the projected triangle
    (xa, xb, xc); multiply by the signed projected area."""
    za, zb, zc = xa[2], xb[2], xc[2]
    sz = za + zb + zc
    sx = xa[0] + xb[0] + xc[0]
    sy = xa[1] + xb[1] + xc[1]
    return (
        4 * sz / 12,
        (sz * sx + xa[0] * za + xb[0] * zb + xc[0] * zc) / 12,
        (sz * sy + xa[1] * za + xb[1] * zb + xc[1] * zc) / 12,
        (za * za + zb * zb + zc * zc + zb * zc + za * zb + za * zc) / 12,
    )


def tri_surface_moments(xa, xb, alpha, beta):
    """Moment 4-vector of the surface primitive over the projected
    triangle (xa, xb, origin); both points must lie on the surface.
    Multiply by the signed projected area of that triangle."""
    za, zb = xa[2], xb[2]
    xab = alpha * xa[0] * xb[0] + beta * xa[1] * xb[1]
    cross = xb[0] * xa[1] - xa[0] * xb[1]
    zsum = za + zb
    return (
        15 * (xab - za - zb) / 90,
        (6 * beta * (xa[1] - xb[1]) * (xa[0] * xb[1] - xb[0] * xa[1])
         - 9 * (xa[0] + xb[0]) * zsum) / 90,
        (6 * alpha * (xa[0] - xb[0]) * (xb[0] * xa[1] - xa[0] * xb[1])
         - 9 * (xa[1] + xb[1]) * zsum) / 90,
        (2 * alpha * beta * cross * cross + 3 * zsum * (xab - za - zb) + 3 * za * zb) / 90,
    )


def _channel_values_direct(w, K):
    th = theta_weight(w)
    powers = [w]
    for _ in range(9):
        powers.append(powers[-1] * w)
    D = [powers[j] * th if j % 2 == 0 else powers[j] for j in range(10)]
    return [sum(K[k][j] * D[j] for j in range(10) if K[k][j] != 0) for k in range(12)]


def _horner(coeffs, u):
    acc = coeffs[-1] * (u * 0 + 1)
    for c in reversed(coeffs[:-1]):
        acc = acc * u + c
    return acc


def arc_correction_moments(w, xa, xb, xc, alpha, beta, first_moments=True):
    """Moment 4-vector of the curved correction of one conic arc.

    `xa`, `xb` are the on-surface endpoints, `xc` the control point of
    the rational Bezier with weight w >= 0.  Multiply by the signed
    projected area of (xa, xb, xc).  Inside the window around w = 1 the
    weight channels come from their Taylor series; outside, from the
    closed form.
    """
    if not (w >= 0 and is_finite(w)):
        raise ValueError("arc weight must be finite and >= 0")
    use_series = _WLO <= w <= _WHI
    if type(w) is float:
        K, series, series_vol = _K, _SERIES, _SERIES_VOL
    else:
        K, series, series_vol = _mpf_tables()

    dx = xa[0] - xb[0]
    dy = xa[1] - xb[1]
    quad = alpha * dx * dx + beta * dy * dy

    if use_series:
        u = w - 1
        m0 = _horner(series_vol, u) * quad
        if not first_moments:
            return (m0, 0.0, 0.0, 0.0)
        g = [_horner(series[k], u) for k in range(3, 12)]
        # g[0..3] -> channels 4..7 (first-moment rows), g[4..8] -> 8..12
        C = _c_rows(xa, xb, xc, alpha, beta)
        m1x = -(C[0][0] * g[0] + C[0][1] * g[1] + C[0][2] * g[2] + C[0][3] * g[3])
        m1y = -(C[1][0] * g[0] + C[1][1] * g[1] + C[1][2] * g[2] + C[1][3] * g[3])
        m1z = -(C[2][0] * g[4] + C[2][1] * g[5] + C[2][2] * g[6] + C[2][3] * g[7] + C[2][4] * g[8])
        return (m0, m1x, m1y, m1z)

    la = lambda_factor(w)
    f = _channel_values_direct(w, K)
    la3 = la * la * la
    la4 = la3 * la
    la5 = la4 * la
    m0 = la3 * (2 * f[0] + 4 * f[1]) / 3 * quad
    if not first_moments:
        return (m0, 0.0, 0.0, 0.0)
    C = _c_rows(xa, xb, xc, alpha, beta)
    m1x = -la4 * (C[0][0] * f[3] + C[0][1] * f[4] + C[0][2] * f[5] + C[0][3] * f[6])
    m1y = -la4 * (C[1][0] * f[3] + C[1][1] * f[4] + C[1][2] * f[5] + C[1][3] * f[6])
    m1z = -la5 * (C[2][0] * f[7] + C[2][1] * f[8] + C[2][2] * f[9] + C[2][3] * f[10] + C[2][4] * f[11])
    return (m0, m1x, m1y, m1z)


def _c_rows(a, b, c, al, be):
    """Geometry polynomials pairing with the first-moment weight channels."""
    xa, ya, za = a
    xb, yb, zb = b
    xc, yc, zc = c
    row_x = (
        (be * (-12 * xa * ya * yb + 12 * xa * yb * yb + 12 * xb * ya * ya - 12 * xb * ya * yb)
         - 6 * xa * za + 6 * xa * zb + 6 * xb * za - 6 * xb * zb),
        (al * (-12 * xa * xc * xc + 60 * xa * xc * xb - 12 * xc * xc * xb)
         + be * (28 * xa * ya * yc - 8 * xa * ya * yb - 4 * xa * yc * yc + 20 * xa * yc * yb
                 + 8 * xa * yb * yb - 28 * xc * ya * ya - 8 * xc * ya * yc + 20 * xc * ya * yb
                 - 8 * xc * yc * yb - 28 * xc * yb * yb + 8 * xb * ya * ya + 20 * xb * ya * yc
                 - 8 * xb * ya * yb - 4 * xb * yc * yc + 28 * xb * yc * yb)
         + 10 * xa * za + 20 * xa * zc + 14 * xa * zb - 22 * xc * za - 8 * xc * zc
         - 22 * xc * zb + 14 * xb * za + 20 * xb * zc + 10 * xb * zb),
        (al * (-36 * xa * xc * xc + 12 * xa * xc * xb + 12 * xc ** 3 - 36 * xc * xc * xb)
         + be * (-12 * xa * yc * yc + 4 * xa * yc * yb - 24 * xc * ya * yc + 4 * xc * ya * yb
                 + 12 * xc * yc * yc - 24 * xc * yc * yb + 4 * xb * ya * yc - 12 * xb * yc * yc)
         - 10 * xa * zc + 2 * xa * zb - 10 * xc * za - 12 * xc * zc - 10 * xc * zb
         + 2 * xb * za - 10 * xb * zc),
        2 * al * xc ** 3 + 2 * be * xc * yc * yc + 2 * xc * zc,
    )
    row_y = (
        (al * (12 * xa * xa * yb - 12 * xa * xb * ya - 12 * xa * xb * yb + 12 * xb * xb * ya)
         - 6 * ya * za + 6 * ya * zb + 6 * yb * za - 6 * yb * zb),
        (al * (-28 * xa * xa * yc + 8 * xa * xa * yb + 28 * xa * xc * ya - 8 * xa * xc * yc
               + 20 * xa * xc * yb - 8 * xa * xb * ya + 20 * xa * xb * yc - 8 * xa * xb * yb
               - 4 * xc * xc * ya - 4 * xc * xc * yb + 20 * xc * xb * ya - 8 * xc * xb * yc
               + 28 * xc * xb * yb + 8 * xb * xb * ya - 28 * xb * xb * yc)
         + be * (-12 * ya * yc * yc + 60 * ya * yc * yb - 12 * yc * yc * yb)
         + 10 * ya * za + 20 * ya * zc + 14 * ya * zb - 22 * yc * za - 8 * yc * zc
         - 22 * yc * zb + 14 * yb * za + 20 * yb * zc + 10 * yb * zb),
        (al * (-24 * xa * xc * yc + 4 * xa * xc * yb + 4 * xa * xb * yc - 12 * xc * xc * ya
               + 12 * xc * xc * yc - 12 * xc * xc * yb + 4 * xc * xb * ya - 24 * xc * xb * yc)
         + be * (-36 * ya * yc * yc + 12 * ya * yc * yb + 12 * yc ** 3 - 36 * yc * yc * yb)
         - 10 * ya * zc + 2 * ya * zb - 10 * yc * za - 12 * yc * zc - 10 * yc * zb
         + 2 * yb * za - 10 * yb * zc),
        2 * al * xc * xc * yc + 2 * be * yc ** 3 + 2 * yc * zc,
    )
    ab = al * be
    row_z = (
        (ab * (-42 * ya * ya * xa * xa - 10 * yb * yb * xa * xa - 28 * ya * yb * xa * xa
               - 28 * xb * ya * ya * xa - 28 * xb * yb * yb * xa - 40 * xb * ya * yb * xa
               - 10 * xb * xb * ya * ya - 42 * xb * xb * yb * yb - 28 * xb * xb * ya * yb)
         + al * al * (-21 * xa ** 4 - 28 * xb * xa ** 3 - 30 * xb * xb * xa * xa
                      - 28 * xb ** 3 * xa - 21 * xb ** 4)
         + be * be * (-21 * ya ** 4 - 28 * yb * ya ** 3 - 30 * yb * yb * ya * ya
                      - 28 * yb ** 3 * ya - 21 * yb ** 4)
         + 40 * za * za + 40 * zb * zb + 48 * za * zb),
        (ab * (-7 * yc * yc * xa * xa - 10 * yb * yb * xa * xa + 63 * ya * yc * xa * xa
               - 21 * ya * yb * xa * xa + 35 * yc * yb * xa * xa + 63 * xc * ya * ya * xa
               - 21 * xb * ya * ya * xa - 10 * xb * yc * yc * xa + 35 * xc * yb * yb * xa
               - 21 * xb * yb * yb * xa - 28 * xc * ya * yc * xa + 70 * xb * ya * yc * xa
               + 70 * xc * ya * yb * xa - 40 * xb * ya * yb * xa - 20 * xc * yc * yb * xa
               + 70 * xb * yc * yb * xa - 7 * xc * xc * ya * ya - 10 * xb * xb * ya * ya
               + 35 * xc * xb * ya * ya - 7 * xb * xb * yc * yc - 7 * xc * xc * yb * yb
               + 63 * xc * xb * yb * yb + 35 * xb * xb * ya * yc - 20 * xc * xb * ya * yc
               - 10 * xc * xc * ya * yb - 21 * xb * xb * ya * yb + 70 * xc * xb * ya * yb
               + 63 * xb * xb * yc * yb - 28 * xc * xb * yc * yb)
         + al * al * (63 * xc * xa ** 3 - 21 * xb * xa ** 3 - 21 * xc * xc * xa * xa
                      - 30 * xb * xb * xa * xa + 105 * xc * xb * xa * xa - 21 * xb ** 3 * xa
                      + 105 * xc * xb * xb * xa - 30 * xc * xc * xb * xa + 63 * xc * xb ** 3
                      - 21 * xc * xc * xb * xb)
         + be * be * (63 * yc * ya ** 3 - 21 * yb * ya ** 3 - 21 * yc * yc * ya * ya
                      - 30 * yb * yb * ya * ya + 105 * yc * yb * ya * ya - 21 * yb ** 3 * ya
                      + 105 * yc * yb * yb * ya - 30 * yc * yc * yb * ya + 63 * yc * yb ** 3
                      - 21 * yc * yc * yb * yb)
         - 30 * za * za + 12 * zc * zc - 30 * zb * zb - 60 * za * zc - 24 * za * zb
         - 60 * zc * zb),
        (ab * (-56 * yc * yc * xa * xa - 2 * yb * yb * xa * xa + 28 * yc * yb * xa * xa
               + 84 * xc * yc * yc * xa - 92 * xb * yc * yc * xa + 28 * xc * yb * yb * xa
               - 224 * xc * ya * yc * xa + 56 * xb * ya * yc * xa + 56 * xc * ya * yb * xa
               - 8 * xb * ya * yb * xa - 184 * xc * yc * yb * xa + 56 * xb * yc * yb * xa
               - 56 * xc * xc * ya * ya - 2 * xb * xb * ya * ya + 28 * xc * xb * ya * ya
               - 12 * xc * xc * yc * yc - 56 * xb * xb * yc * yc + 84 * xc * xb * yc * yc
               - 56 * xc * xc * yb * yb + 84 * xc * xc * ya * yc + 28 * xb * xb * ya * yc
               - 184 * xc * xb * ya * yc - 92 * xc * xc * ya * yb + 56 * xc * xb * ya * yb
               + 84 * xc * xc * yc * yb - 224 * xc * xb * yc * yb)
         + al * al * (-6 * xc ** 4 + 84 * xa * xc ** 3 + 84 * xb * xc ** 3
                      - 168 * xa * xa * xc * xc - 168 * xb * xb * xc * xc
                      - 276 * xa * xb * xc * xc + 84 * xa * xb * xb * xc
                      + 84 * xa * xa * xb * xc - 6 * xa * xa * xb * xb)
         + be * be * (-6 * yc ** 4 + 84 * ya * yc ** 3 + 84 * yb * yc ** 3
                      - 168 * ya * ya * yc * yc - 168 * yb * yb * yc * yc
                      - 276 * ya * yb * yc * yc + 84 * ya * yb * yb * yc
                      + 84 * ya * ya * yb * yc - 6 * ya * ya * yb * yb)
         + 15 * za * za + 24 * zc * zc + 15 * zb * zb + 120 * za * zc - 6 * za * zb
         + 120 * zc * zb),
        (ab * (-12 * yc * yc * xc * xc + 14 * ya * yc * xc * xc - 2 * ya * yb * xc * xc
               + 14 * yc * yb * xc * xc + 14 * xa * yc * yc * xc + 14 * xb * yc * yc * xc
               - 4 * xb * ya * yc * xc - 4 * xa * yc * yb * xc - 2 * xa * xb * yc * yc)
         + al * al * (-6 * xc ** 4 + 14 * xa * xc ** 3 + 14 * xb * xc ** 3 - 6 * xa * xb * xc * xc)
         + be * be * (-6 * yc ** 4 + 14 * ya * yc ** 3 + 14 * yb * yc ** 3 - 6 * ya * yb * yc * yc)
         - 7 * zc * zc - 5 * za * zc + za * zb - 5 * zc * zb),
        -2 * ab * yc * yc * xc * xc - al * al * xc ** 4 - be * be * yc ** 4 + zc * zc,
    )
    return (row_x, row_y, row_z)


def full_ellipse_moments(delta, lam, tau, sign_nz, alpha, beta):
    """Combined surface term for a face whose surface intersection is a
    whole ellipse interior to the face.

    Closed form; requires alpha*beta > 0 and a face plane that is not
    vertical.  The returned 4-vector already contains the boundary
    orientation through sign_nz.
    """
    ab = alpha * beta
    if not ab > 0:
        raise ValueError("full-ellipse term needs alpha*beta > 0")
    if sign_nz not in (-1, 1):
        raise ValueError("sign_nz must be +-1")
    p = tau * tau * alpha + lam * lam * beta - 4 * ab * delta
    pref = -sign_nz * math.pi * p * p / (32 * ab * ab * sqrt(ab))
    return (
        pref,
        pref * lam / (2 * alpha),
        pref * tau / (2 * beta),
        pref * (2 * delta / 3 - 5 * tau * tau / (12 * beta) - 5 * lam * lam / (12 * alpha)),
    )


def moments_of_boundaries(boundaries, alpha, beta, first_moments=True) -> MomentVector:
    """Assemble the moment vector from prebuilt clipped-face boundaries.

    Deterministic accumulation order (face, loop, segment) with
    compensated sums per component."""
    acc = [KahanAccumulator(alpha * 0.0) for _ in range(4)]
    for b in boundaries:
        xref = None
        for loop in b.loops:
            if xref is None:
                xref = loop[0].p0
            for seg in loop:
                area = signed_area_xy(seg.p0, seg.p1, xref)
                vec = tri_face_moments(seg.p0, seg.p1, xref)
                acc[0].add(area * vec[0])
                if first_moments:
                    acc[1].add(area * vec[1])
                    acc[2].add(area * vec[2])
                    acc[3].add(area * vec[3])
                if seg.on_surface:
                    area_s = signed_area_xy(seg.p0, seg.p1, _ORIGIN)
                    vec_s = tri_surface_moments(seg.p0, seg.p1, alpha, beta)
                    acc[0].add(area_s * vec_s[0])
                    if first_moments:
                        acc[1].add(area_s * vec_s[1])
                        acc[2].add(area_s * vec_s[2])
                        acc[3].add(area_s * vec_s[3])
                    if seg.kind == "conic":
                        a = seg.arc
                        area_c = signed_area_xy(a.x0, a.x1, a.xstar)
                        vec_c = arc_correction_moments(a.w, a.x0, a.x1, a.xstar,
                                                       alpha, beta, first_moments)
                        acc[0].add(area_c * vec_c[0])
                        if first_moments:
                            acc[1].add(area_c * vec_c[1])
                            acc[2].add(area_c * vec_c[2])
                            acc[3].add(area_c * vec_c[3])
        if b.full_ellipse is not None:
            fe = b.full_ellipse
            vec_e = full_ellipse_moments(fe.delta, fe.lam, fe.tau, fe.sign_nz, alpha, beta)
            acc[0].add(vec_e[0])
            if first_moments:
                acc[1].add(vec_e[1])
                acc[2].add(vec_e[2])
                acc[3].add(vec_e[3])
    return MomentVector(to_float(acc[0].total),
                        (to_float(acc[1].total), to_float(acc[2].total), to_float(acc[3].total)))


def clipped_moments(mesh, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES,
                    first_moments=True) -> MomentVector:
    """Moments of mesh ∩ {phi <= 0} for a canonical-frame mesh.

    Raises AmbiguousTopologyError when the intersection topology cannot
    be resolved at working precision; use the robust driver in that
    case.
    """
    boundaries, _report = build_clipped_boundaries(mesh, alpha, beta, tol)
    return moments_of_boundaries(boundaries, alpha, beta, first_moments)
