"""Rational quadratic Bezier representation of conic-section arcs.

An arc of the curve S ∩ (face plane) is stored as endpoints, the
control point at the intersection of the endpoint tangents, and a
weight w >= 0 fixed by requiring the curve midpoint to lie on the
surface.  |w| < 1 traces an ellipse arc, w = 1 a parabola arc, w > 1 a
hyperbola arc.  All kernels run on float or extended scalars.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._scalars import sqrt, fabs, is_finite
from .core import sub3, add3, mul3, dot3, cross3

MAX_SPLIT_DEPTH = 8
TANGENT_ANGLE_FLOOR = 1e-6   # radians; below this the tangent intersection is ill-posed


class ArcConstructionError(ValueError):
    """Raised when a conic arc cannot be represented with w >= 0."""


class ParallelTangentsError(ArcConstructionError):
    """Tangents at the arc ends do not intersect (antipodal arc)."""


@dataclass(frozen=True)
class RationalArc:
    """Conic arc x(t) = (B0 x0 + w B1 x* + B2 x1) / (B0 + w B1 + B2)."""

    x0: tuple
    x1: tuple
    xstar: tuple
    w: float

    def __post_init__(self):
        if not (self.w >= 0 and is_finite(self.w)):
            raise ArcConstructionError(f"arc weight must be finite and >= 0, got {self.w}")

    def reversed(self) -> "RationalArc":
        return RationalArc(self.x1, self.x0, self.xstar, self.w)


def eval_arc(arc: RationalArc, t):
    """Point on the arc at parameter t in [0, 1]."""
    b0 = (1 - t) * (1 - t)
    b1 = 2 * (1 - t) * t
    b2 = t * t
    den = b0 + arc.w * b1 + b2
    wb1 = arc.w * b1
    return (
        (b0 * arc.x0[0] + wb1 * arc.xstar[0] + b2 * arc.x1[0]) / den,
        (b0 * arc.x0[1] + wb1 * arc.xstar[1] + b2 * arc.x1[1]) / den,
        (b0 * arc.x0[2] + wb1 * arc.xstar[2] + b2 * arc.x1[2]) / den,
    )


def eval_arc_derivative(arc: RationalArc, t):
    """d/dt of the arc point at t."""
    b0 = (1 - t) * (1 - t)
    b1 = 2 * (1 - t) * t
    b2 = t * t
    db0 = -2 * (1 - t)
    db1 = 2 - 4 * t
    db2 = 2 * t
    w = arc.w
    den = b0 + w * b1 + b2
    dden = db0 + w * db1 + db2
    out = []
    for k in range(3):
        num = b0 * arc.x0[k] + w * b1 * arc.xstar[k] + b2 * arc.x1[k]
        dnum = db0 * arc.x0[k] + w * db1 * arc.xstar[k] + db2 * arc.x1[k]
        out.append((dnum * den - num * dden) / (den * den))
    return tuple(out)


def surface_gradient(p, alpha, beta):
    """Gradient of phi = alpha x^2 + beta y^2 + z."""
    return (2 * alpha * p[0], 2 * beta * p[1], 1.0)


def control_point(x0, x1, face_normal, alpha, beta):
    """Intersection of the conic tangents at x0 and x1 within the face plane.

    The tangent at an endpoint is the intersection of the surface
    tangent plane there with the face plane, i.e. it points along
    n x grad(phi).  Raises ParallelTangentsError when the two tangent
    directions are (nearly) parallel, in which case the caller must
    split the arc first.
    """
    n = face_normal
    d0 = cross3(n, surface_gradient(x0, alpha, beta))
    d1 = cross3(n, surface_gradient(x1, alpha, beta))
    n0 = sqrt(dot3(d0, d0))
    n1 = sqrt(dot3(d1, d1))
    if n0 == 0 or n1 == 0:
        raise ParallelTangentsError("conic tangent degenerates at an arc endpoint")
    cr = cross3(d0, d1)
    sin_angle = sqrt(dot3(cr, cr)) / (n0 * n1)
    if sin_angle < TANGENT_ANGLE_FLOOR:
        raise ParallelTangentsError("endpoint tangents are (nearly) parallel")
    # Solve x0 + s d0 = x1 + r d1 on the two best-conditioned coordinates.
    rhs = sub3(x1, x0)
    best = None
    for i in range(3):
        j = (i + 1) % 3
        det = d0[i] * (-d1[j]) - (-d1[i]) * d0[j]
        if best is None or fabs(det) > fabs(best[0]):
            best = (det, i, j)
    det, i, j = best
    s = (rhs[i] * (-d1[j]) - (-d1[i]) * rhs[j]) / det
    return add3(x0, mul3(d0, s))


def weight_from_midpoint(x0, x1, xstar, alpha, beta):
    """Weight fixed by placing the curve midpoint on the surface.

    The arc point at t = 1/2 lies on the segment between the chord
    midpoint m and the control point; if the surface crosses that
    segment at parameter s the weight is w = s / (1 - s).  A crossing
    of the supporting line at s < 0 instead marks a major arc and
    yields the (negative) weight that `split_arc` resolves.
    """
    m = ((x0[0] + x1[0]) / 2, (x0[1] + x1[1]) / 2, (x0[2] + x1[2]) / 2)
    d = sub3(xstar, m)
    qa = alpha * d[0] * d[0] + beta * d[1] * d[1]
    qb = 2 * alpha * m[0] * d[0] + 2 * beta * m[1] * d[1] + d[2]
    qc = alpha * m[0] * m[0] + beta * m[1] * m[1] + m[2]
    roots = _stable_quadratic_roots(qa, qb, qc)
    if not roots:
        raise ArcConstructionError("segment from chord midpoint to control point misses the surface")
    inside = [s for s in roots if 0 <= s < 1]
    if inside:
        s = min(inside)
    else:
        behind = [s for s in roots if s < 0]
        if not behind:
            raise ArcConstructionError("no surface crossing on the control-point side")
        s = max(behind)   # closest to the chord midpoint
    return s / (1 - s)


def _stable_quadratic_roots(a, b, c):
    """Real roots of a t^2 + b t + c, cancellation-free."""
    if a == 0:
        if b == 0:
            return []
        return [-c / b]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    sd = sqrt(disc)
    if b >= 0:
        q = -(b + sd) / 2
    else:
        q = -(b - sd) / 2
    roots = []
    if q != 0:
        roots.append(q / a)
        roots.append(c / q)
    else:
        roots.append(0.0 * a)
    return roots


def make_arc(x0, x1, face_normal, alpha, beta):
    """Construct the rational arc from x0 to x1 with w >= 0, splitting
    recursively when the direct construction yields a negative weight.

    Returns a list of arcs whose concatenation traverses the conic from
    x0 to x1.
    """
    return _make_arc_rec(x0, x1, face_normal, alpha, beta, 0)


def _make_arc_rec(x0, x1, face_normal, alpha, beta, depth):
    if depth > MAX_SPLIT_DEPTH:
        raise ArcConstructionError("arc splitting exceeded maximum depth (degenerate conic?)")
    try:
        xs = control_point(x0, x1, face_normal, alpha, beta)
        w = weight_from_midpoint(x0, x1, xs, alpha, beta)
    except ParallelTangentsError:
        mid = _split_point(x0, x1, face_normal, alpha, beta, want_far=False, allow_perp=True)
        return (_make_arc_rec(x0, mid, face_normal, alpha, beta, depth + 1)
                + _make_arc_rec(mid, x1, face_normal, alpha, beta, depth + 1))
    if w >= 0 and is_finite(w):
        return [RationalArc(x0, x1, xs, w)]
    mid = _split_point(x0, x1, face_normal, alpha, beta, want_far=True)
    return (_make_arc_rec(x0, mid, face_normal, alpha, beta, depth + 1)
            + _make_arc_rec(mid, x1, face_normal, alpha, beta, depth + 1))


def split_arc(x0, x1, face_normal, alpha, beta):
    """Split an arc candidate whose direct weight is negative/non-finite.

    Splits at the conic point on the line through the chord midpoint and
    the control point (the arc's parametric midpoint) and rebuilds both
    halves; recursion continues until all weights are nonnegative.
    """
    return make_arc(x0, x1, face_normal, alpha, beta)


def _split_point(x0, x1, face_normal, alpha, beta, want_far, allow_perp=False):
    """Conic point splitting the arc x0 -> x1.

    For a minor arc this is the surface crossing between the chord
    midpoint and the control point; for a major arc (negative weight)
    the crossing on the far side of the chord.  When the tangents are
    parallel (antipodal arc) the search direction falls back to the
    in-plane perpendicular of the chord, oriented by the traversal
    tangent at x0.
    """
    m = ((x0[0] + x1[0]) / 2, (x0[1] + x1[1]) / 2, (x0[2] + x1[2]) / 2)
    if allow_perp:
        chord = sub3(x1, x0)
        d = cross3(face_normal, chord)
        # orient toward the side the arc leaves x0 on
        t0 = cross3(face_normal, surface_gradient(x0, alpha, beta))
        side = dot3(d, t0)
        if side < 0:
            d = mul3(d, -1.0)
    else:
        try:
            xs = control_point(x0, x1, face_normal, alpha, beta)
            d = sub3(xs, m)
        except ParallelTangentsError:
            return _split_point(x0, x1, face_normal, alpha, beta, want_far, allow_perp=True)
    qa = alpha * d[0] * d[0] + beta * d[1] * d[1]
    qb = 2 * alpha * m[0] * d[0] + 2 * beta * m[1] * d[1] + d[2]
    qc = alpha * m[0] * m[0] + beta * m[1] * m[1] + m[2]
    roots = _stable_quadratic_roots(qa, qb, qc)
    if not roots:
        raise ArcConstructionError("cannot locate a split point on the conic")
    if want_far:
        cand = [s for s in roots if s < 0]
        if not cand:
            cand = roots
        s = max(cand)
    else:
        cand = [s for s in roots if s >= 0] or roots
        s = min(cand, key=fabs)
    return add3(m, mul3(d, s))


def curvature_at(x, face_normal, alpha, beta):
    """Curvature measure of the intersection conic at x.

    Evaluates |t . (H t)| / ||t|| with t = n x grad(phi) and H the
    (constant) Hessian of phi.  Note the denominator carries a single
    power of ||t||; the classical plane-curve curvature uses ||t||^3.
    The weight cross-check in the tests accounts for that, and the
    production weight always comes from `weight_from_midpoint`.
    """
    t = cross3(face_normal, surface_gradient(x, alpha, beta))
    nt = sqrt(dot3(t, t))
    if nt == 0:
        raise ArcConstructionError("degenerate tangent: face normal parallel to surface gradient")
    ht = (2 * alpha * t[0], 2 * beta * t[1], 0.0)
    return fabs(dot3(t, ht)) / nt
