"""Brute-force reference moments by recursive face refinement.

Every polyhedron face is quadrisected until each triangle lies entirely
on one side of the surface (certified with a curvature margin) or the
level cap is reached; leaf straddlers are split along the secant chord
of their edge/surface crossing points.  Triangles below the surface
accumulate the exact plane-primitive integral, triangles above the
exact surface-primitive integral, both over their signed xy-projection.
This route shares no code with the closed-form engine, so the two are
independent checks of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MomentVector, kahan_sum

try:
    from ._amr_kernel import amr_accumulate as _jit_accumulate
except Exception:          # pragma: no cover - numba unavailable
    _jit_accumulate = None


@dataclass(frozen=True)
class AMRConfig:
    levels: int = 14
    side_tolerance: float = 0.0   # extra slack added to the side-certification margin

    def __post_init__(self):
        if not 1 <= self.levels <= 24:
            raise ValueError("levels must lie in [1, 24]")
        if self.side_tolerance < 0:
            raise ValueError("side_tolerance must be >= 0")


# degree-5 symmetric triangle rule (7 points), exact for the quartic
# surface primitive
_W0 = 9.0 / 40.0
_WA = (155.0 + np.sqrt(15.0)) / 1200.0
_WB = (155.0 - np.sqrt(15.0)) / 1200.0
_A1 = (6.0 + np.sqrt(15.0)) / 21.0
_B1 = (6.0 - np.sqrt(15.0)) / 21.0
_TRI_POINTS = np.array(
    [[1.0 / 3.0, 1.0 / 3.0]]
    + [[_A1, _A1], [1.0 - 2.0 * _A1, _A1], [_A1, 1.0 - 2.0 * _A1]]
    + [[_B1, _B1], [1.0 - 2.0 * _B1, _B1], [_B1, 1.0 - 2.0 * _B1]]
)
_TRI_WEIGHTS = np.array([_W0, _WA, _WA, _WA, _WB, _WB, _WB])


def _triangulate_faces(mesh):
    """Fan triangulation of every face (signed, valid for non-convex
    polygons); returns an (n, 3, 3) vertex array."""
    tris = []
    V = mesh.vertices
    for loop in mesh.face_loops:
        a = loop[0]
        for k in range(1, len(loop) - 1):
            tris.append((V[a], V[loop[k]], V[loop[k + 1]]))
    return np.asarray(tris)


def _phi_values(pts, alpha, beta):
    return alpha * pts[..., 0] ** 2 + beta * pts[..., 1] ** 2 + pts[..., 2]


def _signed_proj_area(tris):
    ax, ay = tris[:, 0, 0], tris[:, 0, 1]
    bx, by = tris[:, 1, 0], tris[:, 1, 1]
    cx, cy = tris[:, 2, 0], tris[:, 2, 1]
    return 0.5 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))


def _plane_side_integrals(tris):
    """Exact integral of (z, xz, yz, z^2/2) over the signed projections,
    z interpolated linearly on each triangle; midpoint rule, degree-2
    exact."""
    mids = 0.5 * (tris + np.roll(tris, -1, axis=1))   # edge midpoints
    area = _signed_proj_area(tris)
    x = mids[:, :, 0]
    y = mids[:, :, 1]
    z = mids[:, :, 2]
    f0 = z.mean(axis=1)
    f1 = (x * z).mean(axis=1)
    f2 = (y * z).mean(axis=1)
    f3 = (0.5 * z * z).mean(axis=1)
    return area[:, None] * np.stack([f0, f1, f2, f3], axis=1)


def _surface_side_integrals(tris, alpha, beta):
    """Exact integral of the surface primitive 4-vector over the signed
    projections (degree-5 rule; integrand is quartic in x, y)."""
    area = _signed_proj_area(tris)
    a, b, c = tris[:, 0, :2], tris[:, 1, :2], tris[:, 2, :2]
    out = np.zeros((len(tris), 4))
    for (l1, l2), w in zip(_TRI_POINTS, _TRI_WEIGHTS):
        p = a * (1.0 - l1 - l2) + b * l1 + c * l2
        x, y = p[:, 0], p[:, 1]
        zs = -(alpha * x * x + beta * y * y)
        out[:, 0] += w * zs
        out[:, 1] += w * x * zs
        out[:, 2] += w * y * zs
        out[:, 3] += w * 0.5 * zs * zs
    return area[:, None] * out


def _side_margins(tris, alpha, beta, slack):
    """Certified bound on |phi - linear interpolant| over each triangle."""
    e0 = tris[:, 1, :2] - tris[:, 0, :2]
    e1 = tris[:, 2, :2] - tris[:, 1, :2]
    e2 = tris[:, 0, :2] - tris[:, 2, :2]
    d2 = np.maximum(np.maximum((e0 * e0).sum(1), (e1 * e1).sum(1)), (e2 * e2).sum(1))
    return 0.25 * max(abs(alpha), abs(beta)) * d2 + slack


def _quadrisect(tris):
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    ab = 0.5 * (a + b)
    bc = 0.5 * (b + c)
    ca = 0.5 * (c + a)
    out = np.empty((4 * len(tris), 3, 3))
    out[0::4] = np.stack([a, ab, ca], axis=1)
    out[1::4] = np.stack([ab, b, bc], axis=1)
    out[2::4] = np.stack([ca, bc, c], axis=1)
    out[3::4] = np.stack([ab, bc, ca], axis=1)
    return out


def _edge_crossing_params(p, q, alpha, beta):
    """Stable smallest-|.| root in [0, 1] of phi along segments p->q."""
    d = q - p
    qa = alpha * d[:, 0] ** 2 + beta * d[:, 1] ** 2
    qb = 2.0 * (alpha * p[:, 0] * d[:, 0] + beta * p[:, 1] * d[:, 1]) + d[:, 2]
    qc = alpha * p[:, 0] ** 2 + beta * p[:, 1] ** 2 + p[:, 2]
    t = np.full(len(p), 0.5)
    lin = np.abs(qa) < 1e-300
    with np.errstate(divide="ignore", invalid="ignore"):
        tl = -qc / qb
        disc = qb * qb - 4.0 * qa * qc
        sd = np.sqrt(np.maximum(disc, 0.0))
        qq = np.where(qb >= 0.0, -(qb + sd), -(qb - sd)) * 0.5
        r1 = qq / qa
        r2 = qc / qq
    t = np.where(lin, np.where(np.isfinite(tl), tl, 0.5), t)
    quad = ~lin
    r1v = np.where(np.isfinite(r1), r1, np.inf)
    r2v = np.where(np.isfinite(r2), r2, np.inf)
    in1 = (r1v >= 0.0) & (r1v <= 1.0)
    in2 = (r2v >= 0.0) & (r2v <= 1.0)
    pick = np.where(in1 & (~in2 | (np.abs(r1v - 0.5) <= np.abs(r2v - 0.5))), r1v,
                    np.where(in2, r2v, 0.5))
    t = np.where(quad, pick, t)
    return np.clip(t, 0.0, 1.0)


def _resolve_leaves(tris, phiv, alpha, beta):
    """Secant split of leaf straddling triangles.

    Triangles with one vertex on one side and two on the other are cut
    along the chord of their two edge crossings; pieces are attributed
    by the lone vertex's side.  Remaining sign patterns (grazing cases)
    are attributed whole by their centroid sign.
    """
    below = np.zeros((0, 3, 3)) if len(tris) == 0 else None
    if len(tris) == 0:
        return np.zeros((0, 3, 3)), np.zeros((0, 3, 3))
    signs = phiv > 0.0
    count_above = signs.sum(axis=1)
    below_parts = []
    above_parts = []

    # rotate so the lone vertex sits first
    lone_above = count_above == 1
    lone_below = count_above == 2
    generic = lone_above | lone_below
    rest = ~generic
    if rest.any():
        cen_phi = _phi_values(tris[rest].mean(axis=1), alpha, beta)
        below_parts.append(tris[rest][cen_phi <= 0.0])
        above_parts.append(tris[rest][cen_phi > 0.0])

    for mask, lone_is_above in ((lone_above, True), (lone_below, False)):
        if not mask.any():
            continue
        sub = tris[mask]
        ssign = signs[mask]
        lone = np.where(ssign if lone_is_above else ~ssign)
        # index of the lone vertex per triangle
        lone_idx = np.empty(len(sub), dtype=np.int64)
        lone_idx[lone[0]] = lone[1]
        rot = (np.arange(3)[None, :] + lone_idx[:, None]) % 3
        sub = np.take_along_axis(sub, rot[:, :, None], axis=1)
        a, b, c = sub[:, 0], sub[:, 1], sub[:, 2]
        tab = _edge_crossing_params(a, b, alpha, beta)
        tca = _edge_crossing_params(a, c, alpha, beta)
        pab = a + tab[:, None] * (b - a)
        pca = a + tca[:, None] * (c - a)
        tri_lone = np.stack([a, pab, pca], axis=1)
        quad1 = np.stack([pab, b, c], axis=1)
        quad2 = np.stack([pab, c, pca], axis=1)
        if lone_is_above:
            above_parts.append(tri_lone)
            below_parts.append(quad1)
            below_parts.append(quad2)
        else:
            below_parts.append(tri_lone)
            above_parts.append(quad1)
            above_parts.append(quad2)
    below = np.concatenate(below_parts) if below_parts else np.zeros((0, 3, 3))
    above = np.concatenate(above_parts) if above_parts else np.zeros((0, 3, 3))
    return below, above


def _amr_accumulate(mesh, alpha, beta, cfg, want_moments=True, want_area=False):
    tris = _triangulate_faces(mesh)
    if _jit_accumulate is not None:
        tot, area = _jit_accumulate(np.ascontiguousarray(tris), float(alpha), float(beta),
                                    cfg.levels, cfg.side_tolerance, want_area)
        moments = MomentVector(tot[0], (tot[1], tot[2], tot[3])) if want_moments else None
        return moments, (float(area) if want_area else None)
    moment_parts = []
    area_parts = []

    def take(below, above):
        if want_moments:
            if len(below):
                moment_parts.append(_plane_side_integrals(below).sum(axis=0))
            if len(above):
                moment_parts.append(_surface_side_integrals(above, alpha, beta).sum(axis=0))
        if want_area and len(above):
            area_parts.append(_metric_area_integrals(above, alpha, beta).sum())

    for level in range(cfg.levels + 1):
        if len(tris) == 0:
            break
        phiv = _phi_values(tris, alpha, beta)
        margin = _side_margins(tris, alpha, beta, cfg.side_tolerance)
        mx = phiv.max(axis=1)
        mn = phiv.min(axis=1)
        is_below = mx + margin <= 0.0
        is_above = mn - margin >= 0.0
        strad = ~(is_below | is_above)
        take(tris[is_below], tris[is_above])
        tris = tris[strad]
        if level == cfg.levels:
            break
        tris = _quadrisect(tris)
    if len(tris):
        phiv = _phi_values(tris, alpha, beta)
        below, above = _resolve_leaves(tris, phiv, alpha, beta)
        take(below, above)

    moments = None
    if want_moments:
        if moment_parts:
            stacked = np.stack(moment_parts)
            moments = MomentVector(
                kahan_sum(stacked[:, 0].tolist()),
                (kahan_sum(stacked[:, 1].tolist()),
                 kahan_sum(stacked[:, 2].tolist()),
                 kahan_sum(stacked[:, 3].tolist())),
            )
        else:
            moments = MomentVector.zero()
    area = kahan_sum(area_parts) if want_area else None
    return moments, area


def _metric_area_integrals(tris, alpha, beta):
    """Integral of the surface metric sqrt(1 + 4 a^2 x^2 + 4 b^2 y^2)
    over the signed projections (degree-5 rule)."""
    area = _signed_proj_area(tris)
    a, b, c = tris[:, 0, :2], tris[:, 1, :2], tris[:, 2, :2]
    out = np.zeros(len(tris))
    for (l1, l2), w in zip(_TRI_POINTS, _TRI_WEIGHTS):
        p = a * (1.0 - l1 - l2) + b * l1 + c * l2
        x, y = p[:, 0], p[:, 1]
        out += w * np.sqrt(1.0 + 4.0 * alpha * alpha * x * x + 4.0 * beta * beta * y * y)
    return area * out


def amr_reference_moments(mesh, alpha, beta, cfg: AMRConfig = AMRConfig()) -> MomentVector:
    """Reference moments of mesh ∩ {phi <= 0} by adaptive refinement."""
    moments, _ = _amr_accumulate(mesh, alpha, beta, cfg, want_moments=True)
    return moments


def amr_surface_area(mesh, alpha, beta, cfg: AMRConfig = AMRConfig()) -> float:
    """Reference area of the surface patch inside the polyhedron."""
    _, area = _amr_accumulate(mesh, alpha, beta, cfg, want_moments=False, want_area=True)
    return float(area)


def triangle_phi_integrals(tri, side, alpha, beta):
    """Exact projected-triangle integral of the plane ('face') or
    surface ('surface') primitive 4-vector; helper for cross-checks."""
    tris = np.asarray(tri, dtype=float)[None, :, :]
    if side == "face":
        return _plane_side_integrals(tris)[0]
    if side == "surface":
        return _surface_side_integrals(tris, alpha, beta)[0]
    raise ValueError("side must be 'face' or 'surface'")
