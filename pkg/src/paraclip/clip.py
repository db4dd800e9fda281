"""Discrete intersection topology of a polyhedron with the clip surface.

For each face the boundary of (face ∩ {phi <= 0}) is assembled as
closed loops of straight polygon runs and conic-section arcs, with a
separate marker for faces whose intersection with the surface is an
entire interior ellipse.  Degenerate near-tangency configurations are
collected into a report; assembly refuses to emit loops whose topology
is ambiguous and raises instead, so the caller can nudge and retry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._scalars import sqrt, fabs, atan2, to_float
from .core import Tolerances, DEFAULT_TOLERANCES, sub3, add3, mul3, dot3, cross3
from .arcs import RationalArc, make_arc, eval_arc, ArcConstructionError

BELOW, ON, ABOVE = -1, 0, 1

# conic-classification thresholds (relative)
_DEGENERATE_CONIC_REL = 1e3 * 2.0 ** -52
_ELLIPSE_SPLIT_SPAN = 2.0 * math.pi / 3.0


class AmbiguousTopologyError(RuntimeError):
    """The discrete intersection topology is inconsistent at working
    precision; the caller should nudge the polyhedron and retry."""


@dataclass(frozen=True)
class DegeneracyEntry:
    kind: str          # 'tangent_edge' | 'vertex_on_surface'
    element: int       # edge id / vertex id
    measure: float


@dataclass
class DegeneracyReport:
    entries: list = field(default_factory=list)

    def add(self, kind, element, measure):
        self.entries.append(DegeneracyEntry(kind, int(element), to_float(measure)))

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)

    def kinds(self):
        return {e.kind for e in self.entries}


@dataclass(frozen=True)
class BoundarySegment:
    kind: str                      # 'straight' | 'conic'
    p0: tuple
    p1: tuple
    arc: RationalArc = None        # set when kind == 'conic'
    on_surface: bool = False


@dataclass(frozen=True)
class FullEllipseInfo:
    """Face whose surface intersection is a whole interior ellipse."""
    delta: float
    lam: float
    tau: float
    sign_nz: int
    hole: bool                     # True: ellipse bounds a hole in the kept face
    center: tuple                  # 3D ellipse center on the face plane
    axis_u: tuple                  # 3D half-axis vectors; center + cos t * u + sin t * v
    axis_v: tuple                  # traverses the ellipse in boundary orientation


@dataclass
class ClippedFaceBoundary:
    face_index: int
    loops: list                    # list of closed [BoundarySegment, ...] loops
    full_ellipse: FullEllipseInfo = None


@dataclass
class ScalarMesh:
    """Scalar-typed view of a half-edge mesh used by the clip kernels."""
    vertices: list          # list of (x, y, z) scalar tuples
    normals: list           # per-face unit normal tuples
    face_loops: list        # per-face vertex index lists
    face_edges: list        # per-face list of (edge_id, forward)
    edge_vertices: list     # per-edge (va, vb) with va < vb


def as_scalar_mesh(mesh) -> ScalarMesh:
    return ScalarMesh(
        vertices=[tuple(v) for v in mesh.vertices.tolist()],
        normals=[tuple(n) for n in mesh.normals.tolist()],
        face_loops=mesh.face_loops,
        face_edges=mesh.face_edges,
        edge_vertices=[tuple(e) for e in mesh.edge_vertices.tolist()],
    )


def phi(p, alpha, beta):
    return alpha * p[0] * p[0] + beta * p[1] * p[1] + p[2]


def classify_vertex(v, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES):
    """Sign of phi(v), with ON inside a relative corner tolerance."""
    val = phi(v, alpha, beta)
    r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    curv = max(fabs(alpha), fabs(beta), 1.0)
    scale = max(1.0, to_float(r2) * to_float(curv))
    if fabs(val) <= tol.eps_corner * scale:
        return ON
    return BELOW if val < 0 else ABOVE


def edge_surface_intersections(p, q, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES):
    """Parameters t in (0, 1) where the segment p + t(q - p) meets the
    surface, each tagged with a tangency flag.

    The quadratic is solved in the cancellation-free form; a root is
    tangent when the discriminant sits below 1e2 eps64 of the
    coefficient scale or the edge runs tangent to the surface there.
    """
    d = sub3(q, p)
    qa = alpha * d[0] * d[0] + beta * d[1] * d[1]
    qb = 2 * alpha * p[0] * d[0] + 2 * beta * p[1] * d[1] + d[2]
    qc = phi(p, alpha, beta)
    roots, grazing = _edge_roots(qa, qb, qc, tol)
    out = []
    for t in roots:
        if not (0.0 < t < 1.0):
            continue
        x = add3(p, mul3(d, t))
        g = (2 * alpha * x[0], 2 * beta * x[1], 1.0)
        dn = sqrt(dot3(d, d)) * sqrt(dot3(g, g))
        tangent = grazing or (dn > 0 and fabs(dot3(d, g)) <= tol.eps_tangent * dn)
        out.append((t, bool(tangent)))
    out.sort(key=lambda r: r[0])
    return out


def _edge_roots(qa, qb, qc, tol):
    """(roots, grazing) of the edge quadratic; grazing marks a near-double root."""
    if qa == 0:
        if qb == 0:
            return [], False
        return [-qc / qb], False
    disc = qb * qb - 4 * qa * qc
    scale = max(to_float(fabs(qb * qb)), to_float(fabs(4 * qa * qc)))
    grazing = to_float(fabs(disc)) <= tol.eps_corner * scale
    if disc < 0:
        return [], grazing
    sd = sqrt(disc)
    qq = -(qb + sd) / 2 if qb >= 0 else -(qb - sd) / 2
    if qq == 0:
        return [-qb / (2 * qa)], True
    return [qq / qa, qc / qq], grazing


# ---------------------------------------------------------------------------
# per-face conic geometry in plane coordinates
# ---------------------------------------------------------------------------

class _FaceConic:
    """The quadric restricted to a face plane, in 2D plane coordinates.

    Provides classification, a per-branch monotone ordering parameter
    for points on the conic, traversal directions consistent with
    keeping {phi < 0} on the left, and point synthesis for arc splits.
    """

    ELLIPSE, HYPERBOLA, PARABOLA, PARALLEL_LINES, CROSSED_LINES, LINE, EMPTY = range(7)

    def __init__(self, origin, udir, vdir, normal, alpha, beta, dscale, tol):
        self.o = origin
        self.u = udir
        self.v = vdir
        self.n = normal
        self.alpha = alpha
        self.beta = beta
        o, u, v = origin, udir, vdir
        self.ass = alpha * u[0] * u[0] + beta * u[1] * u[1]
        self.arr = alpha * v[0] * v[0] + beta * v[1] * v[1]
        self.asr = 2 * (alpha * u[0] * v[0] + beta * u[1] * v[1])
        self.bs = 2 * alpha * o[0] * u[0] + 2 * beta * o[1] * u[1] + u[2]
        self.br = 2 * alpha * o[0] * v[0] + 2 * beta * o[1] * v[1] + v[2]
        self.c0 = phi(o, alpha, beta)
        self._classify(dscale, tol)

    def to_plane(self, p):
        d = sub3(p, self.o)
        return (dot3(d, self.u), dot3(d, self.v))

    def to_space(self, s, r):
        return (
            self.o[0] + s * self.u[0] + r * self.v[0],
            self.o[1] + s * self.u[1] + r * self.v[1],
            self.o[2] + s * self.u[2] + r * self.v[2],
        )

    def q_value(self, s, r):
        return (self.ass * s * s + self.arr * r * r + self.asr * s * r
                + self.bs * s + self.br * r + self.c0)

    def q_gradient(self, s, r):
        return (2 * self.ass * s + self.asr * r + self.bs,
                2 * self.arr * r + self.asr * s + self.br)

    def _classify(self, dscale, tol):
        # eps_corner is 1e2 x the working-precision epsilon, so this tracks
        # the scalar type in use (float or extended)
        eps_base = tol.eps_corner / 1e2
        qscale = max(to_float(fabs(self.ass)), to_float(fabs(self.arr)),
                     to_float(fabs(self.asr)) / 2)
        lscale = max(to_float(fabs(self.bs)), to_float(fabs(self.br)))
        self.kind = None
        if qscale == 0.0:
            if lscale == 0.0:
                self.kind = self.EMPTY
                return
            self.kind = self.LINE
            length = sqrt(self.bs * self.bs + self.br * self.br)
            self.line_dir = (-self.br / length, self.bs / length)  # rot90(grad)
            return
        det2 = self.ass * self.arr - self.asr * self.asr / 4
        if to_float(fabs(det2)) <= 1e3 * eps_base * qscale * qscale:
            self._classify_parabolic(qscale, dscale, eps_base)
            return
        # central conic
        cs, cr = self._center(det2)
        self.center = (cs, cr)
        h = -self.q_value(cs, cr)
        self.h = h
        e1, e2, w1, w2 = self._eigen()
        self.e1, self.e2, self.w1, self.w2 = e1, e2, w1, w2
        if det2 > 0:
            if to_float(h) * to_float(e1) <= 0:
                self.kind = self.EMPTY        # imaginary ellipse (or a point)
                return
            self.kind = self.ELLIPSE
            self.ccw = 1 if (self.ass + self.arr) > 0 else -1
            self.rad1 = sqrt(h / e1)
            self.rad2 = sqrt(h / e2)
            return
        # hyperbola family; e1 > 0 > e2
        hscale = qscale * dscale * dscale
        if to_float(fabs(h)) <= 1e2 * eps_base * hscale:
            self.kind = self.CROSSED_LINES
            return
        self.kind = self.HYPERBOLA

    def _classify_parabolic(self, qscale, dscale, eps_base):
        e1, e2, w1, w2 = self._eigen()
        if fabs(e1) < fabs(e2):
            e1, w1 = e2, w2
        # (w1, w2) right-handed with w2 = rot90(w1)
        w2 = (-w1[1], w1[0])
        self.e1, self.w1, self.w2 = e1, w1, w2
        b1 = self.bs * w1[0] + self.br * w1[1]
        b2 = self.bs * w2[0] + self.br * w2[1]
        self.b1, self.b2 = b1, b2
        if to_float(fabs(b2)) > 1e2 * eps_base * max(qscale * dscale, to_float(fabs(b1))):
            self.kind = self.PARABOLA
            return
        # parallel (or coincident) lines: e1 xi^2 + b1 xi + c0 = 0
        disc = b1 * b1 - 4 * e1 * self.c0
        if disc < 0:
            self.kind = self.EMPTY
            return
        sd = sqrt(disc)
        self.kind = self.PARALLEL_LINES
        self.line_xi = ((-b1 + sd) / (2 * e1), (-b1 - sd) / (2 * e1))

    def _center(self, det2):
        cs = (-self.bs * self.arr + self.br * self.asr / 2) / (2 * det2)
        cr = (-self.br * self.ass + self.bs * self.asr / 2) / (2 * det2)
        return cs, cr

    def _eigen(self):
        a, b, c = self.ass, self.asr / 2, self.arr
        tr = a + c
        diff = a - c
        rad = sqrt(diff * diff + 4 * b * b)
        e1 = (tr + rad) / 2
        e2 = (tr - rad) / 2
        if fabs(b) > 0:
            w1 = (e1 - c, b)
        else:
            w1 = (1.0, 0.0) if a >= c else (0.0, 1.0)
        ln = sqrt(w1[0] * w1[0] + w1[1] * w1[1])
        if to_float(ln) == 0.0:
            w1 = (1.0, 0.0)
            ln = 1.0
        w1 = (w1[0] / ln, w1[1] / ln)
        w2 = (-w1[1], w1[0])
        return e1, e2, w1, w2

    def _to_eigen(self, s, r):
        ds, dr = s - self.center[0], r - self.center[1]
        return (ds * self.w1[0] + dr * self.w1[1], ds * self.w2[0] + dr * self.w2[1])

    def _from_eigen_dir(self, xi, eta):
        return (xi * self.w1[0] + eta * self.w2[0], xi * self.w1[1] + eta * self.w2[1])

    # ---- ordering interface ------------------------------------------------

    def branch_and_key(self, s, r):
        """(branch id, monotone key, direction sign) of a conic point."""
        k = self.kind
        if k == self.ELLIPSE:
            xi, eta = self._to_eigen(s, r)
            ang = atan2(eta / self.rad2, xi / self.rad1)
            return 0, to_float(ang), self.ccw
        if k == self.HYPERBOLA:
            xi, eta = self._to_eigen(s, r)
            if self.h > 0:   # opens along +-xi
                branch = 1 if xi >= 0 else -1
                return branch, to_float(eta), branch
            branch = 1 if eta >= 0 else -1
            return branch, to_float(xi), branch
        if k == self.CROSSED_LINES:
            xi, eta = self._to_eigen(s, r)
            branch = 1 if xi >= 0 else -1
            return branch, to_float(eta), branch
        if k == self.PARABOLA:
            xi = (s * self.w1[0] + r * self.w1[1])
            direction = 1 if -self.b2 > 0 else -1
            return 0, to_float(xi), direction
        if k == self.PARALLEL_LINES:
            xi = (s * self.w1[0] + r * self.w1[1])
            eta = (s * self.w2[0] + r * self.w2[1])
            which = 0 if fabs(xi - self.line_xi[0]) <= fabs(xi - self.line_xi[1]) else 1
            direction = 1 if (2 * self.e1 * self.line_xi[which] + self.b1) > 0 else -1
            return which, to_float(eta), direction
        if k == self.LINE:
            key = s * self.line_dir[0] + r * self.line_dir[1]
            return 0, to_float(key), 1
        raise AmbiguousTopologyError("no ordering on an empty conic")

    def is_closed(self):
        return self.kind == self.ELLIPSE

    def straight_kinds(self):
        return self.kind in (self.CROSSED_LINES, self.PARALLEL_LINES, self.LINE)

    def ellipse_point(self, ang):
        if type(self.rad1) is float:
            ca, sa = math.cos(ang), math.sin(ang)
        else:
            import mpmath
            ca, sa = mpmath.cos(mpmath.mpf(ang)), mpmath.sin(mpmath.mpf(ang))
        xi = self.rad1 * ca
        eta = self.rad2 * sa
        s = self.center[0] + xi * self.w1[0] + eta * self.w2[0]
        r = self.center[1] + xi * self.w1[1] + eta * self.w2[1]
        return self.to_space(s, r)

    def point_from_key(self, branch, key):
        """Synthesize a conic point at the given branch parameter."""
        k = self.kind
        if k == self.ELLIPSE:
            return self.ellipse_point(key)
        if k == self.HYPERBOLA:
            if self.h > 0:
                eta = key
                xi2 = (self.h - self.e2 * eta * eta) / self.e1
                xi = sqrt(xi2) * branch
            else:
                xi = key
                eta2 = (self.h - self.e1 * xi * xi) / self.e2
                eta = sqrt(eta2) * branch
            s = self.center[0] + xi * self.w1[0] + eta * self.w2[0]
            r = self.center[1] + xi * self.w1[1] + eta * self.w2[1]
            return self.to_space(s, r)
        if k == self.PARABOLA:
            xi = key
            eta = -(self.e1 * xi * xi + self.b1 * xi + self.c0) / self.b2
            s = xi * self.w1[0] + eta * self.w2[0]
            r = xi * self.w1[1] + eta * self.w2[1]
            return self.to_space(s, r)
        raise AmbiguousTopologyError("point synthesis unsupported on degenerate conic")

    def center_space(self):
        return self.to_space(self.center[0], self.center[1])


# ---------------------------------------------------------------------------
# face boundary construction
# ---------------------------------------------------------------------------

@dataclass
class _Crossing:
    point: tuple
    edge_id: int
    slot: int          # index into the face event sequence
    is_entry: bool = False
    branch: int = 0
    key: float = 0.0


def build_clipped_boundaries(mesh, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES):
    """Per-face clipped boundaries plus the degeneracy report.

    `mesh` may be a HalfEdgeMesh or a ScalarMesh.  Raises
    AmbiguousTopologyError when the crossing pattern cannot be assembled
    into consistent loops at the working precision.
    """
    sm = mesh if isinstance(mesh, ScalarMesh) else as_scalar_mesh(mesh)
    report = DegeneracyReport()

    classes = [classify_vertex(v, alpha, beta, tol) for v in sm.vertices]
    for vid, cls in enumerate(classes):
        if cls == ON:
            report.add("vertex_on_surface", vid, to_float(fabs(phi(sm.vertices[vid], alpha, beta))))

    edge_cross = _compute_edge_crossings(sm, alpha, beta, classes, tol, report)

    boundaries = []
    for f in range(len(sm.face_loops)):
        b = _build_face_boundary(sm, f, alpha, beta, classes, edge_cross, tol, report)
        if b is not None:
            boundaries.append(b)
    return boundaries, report


def detect_degeneracies(mesh, alpha, beta, tol: Tolerances = DEFAULT_TOLERANCES) -> DegeneracyReport:
    """Scan for tangent edges and on-surface vertices without building
    the full topology."""
    sm = mesh if isinstance(mesh, ScalarMesh) else as_scalar_mesh(mesh)
    report = DegeneracyReport()
    classes = [classify_vertex(v, alpha, beta, tol) for v in sm.vertices]
    for vid, cls in enumerate(classes):
        if cls == ON:
            report.add("vertex_on_surface", vid, to_float(fabs(phi(sm.vertices[vid], alpha, beta))))
    _compute_edge_crossings(sm, alpha, beta, classes, tol, report)
    return report


def _compute_edge_crossings(sm, alpha, beta, classes, tol, report):
    """Crossing points per undirected edge, shared verbatim by both faces.

    Enforces parity consistency with the endpoint classifications and
    files tangency / near-vertex degeneracies.
    """
    out = []
    for eid, (va, vb) in enumerate(sm.edge_vertices):
        p, q = sm.vertices[va], sm.vertices[vb]
        ca, cb = classes[va], classes[vb]
        hits = edge_surface_intersections(p, q, alpha, beta, tol)
        for (t, tang) in hits:
            if tang:
                report.add("tangent_edge", eid, to_float(t))
            tf = to_float(t)
            if tf <= tol.eps_corner:
                report.add("vertex_on_surface", va, tf)
            elif tf >= 1.0 - tol.eps_corner:
                report.add("vertex_on_surface", vb, 1.0 - tf)
        # parity enforcement
        sign_change = (ca == BELOW and cb == ABOVE) or (ca == ABOVE and cb == BELOW)
        kept = [(t, tang) for (t, tang) in hits
                if tol.eps_corner < to_float(t) < 1.0 - tol.eps_corner]
        if sign_change:
            if len(kept) == 0:
                t = _bisect_edge_root(p, q, alpha, beta)
                kept = [(t, False)]
            elif len(kept) == 2:
                # rounding produced a spurious pair: keep the root whose
                # slope matches the endpoint transition
                d = sub3(q, p)
                qa = alpha * d[0] * d[0] + beta * d[1] * d[1]
                qb = 2 * alpha * p[0] * d[0] + 2 * beta * p[1] * d[1] + d[2]
                want = 1 if cb == ABOVE else -1
                kept = [kt for kt in kept if (2 * qa * kt[0] + qb) * want > 0][:1] or kept[:1]
        else:
            if len(kept) == 1:
                # grazing contact resolved as no crossing
                report.add("tangent_edge", eid, to_float(kept[0][0]))
                kept = []
        pts = []
        d = sub3(q, p)
        for (t, tang) in kept:
            pts.append((to_float(t), add3(p, mul3(d, t))))
        out.append(pts)
    return out


def _bisect_edge_root(p, q, alpha, beta):
    lo, hi = 0.0, 1.0
    flo = phi(p, alpha, beta)
    d = sub3(q, p)
    for _ in range(120):
        mid = (lo + hi) / 2
        fm = phi(add3(p, mul3(d, mid)), alpha, beta)
        if (fm < 0) == (flo < 0):
            lo = mid
        else:
            hi = mid
        if hi - lo <= 0:
            break
    return (lo + hi) / 2


def _face_frame(sm, f):
    loop = sm.face_loops[f]
    verts = [sm.vertices[i] for i in loop]
    m = len(verts)
    inv = 1.0 / m
    o = (sum(v[0] for v in verts) * inv, sum(v[1] for v in verts) * inv,
         sum(v[2] for v in verts) * inv)
    best = None
    for k in range(m):
        e = sub3(verts[(k + 1) % m], verts[k])
        l2 = dot3(e, e)
        if best is None or l2 > best[0]:
            best = (l2, e)
    e = best[1]
    ln = sqrt(dot3(e, e))
    u = (e[0] / ln, e[1] / ln, e[2] / ln)
    n = sm.normals[f]
    v = cross3(n, u)
    return o, u, v


def _build_face_boundary(sm, f, alpha, beta, classes, edge_cross, tol, report):
    loop = sm.face_loops[f]
    fedges = sm.face_edges[f]
    m = len(loop)
    n = sm.normals[f]

    crossings = []
    events = []   # ('v', vid) and ('x', crossing) in traversal order
    for k in range(m):
        vid = loop[k]
        events.append(("v", vid))
        eid, forward = fedges[k]
        pts = edge_cross[eid]
        ordered = pts if forward else [(1.0 - t, pt) for (t, pt) in reversed(pts)]
        for (t, pt) in ordered:
            c = _Crossing(point=pt, edge_id=eid, slot=len(crossings))
            crossings.append(c)
            events.append(("x", c))

    strict = [classes[loop[k]] for k in range(m) if classes[loop[k]] != ON]
    if not crossings:
        if all(c == ON for c in (classes[i] for i in loop)):
            # whole face within tolerance of the surface; contributes nothing
            report_all_on(report, loop)
            return ClippedFaceBoundary(f, [_polygon_loop(sm, loop)])
        if all(c != ABOVE for c in (classes[i] for i in loop)):
            fe = _detect_full_ellipse(sm, f, alpha, beta, expect_hole=True, tol=tol)
            loops = [_polygon_loop(sm, loop)]
            return ClippedFaceBoundary(f, loops, fe)
        if all(c != BELOW for c in (classes[i] for i in loop)):
            fe = _detect_full_ellipse(sm, f, alpha, beta, expect_hole=False, tol=tol)
            if fe is not None:
                return ClippedFaceBoundary(f, [], fe)
            return None
        raise AmbiguousTopologyError(f"face {f}: mixed vertex signs without edge crossings")

    # conic geometry and crossing order
    o, u, v = _face_frame(sm, f)
    dscale = max(max(fabs(c) for c in sub3(sm.vertices[i], o)) for i in loop)
    conic = _FaceConic(o, u, v, n, alpha, beta, to_float(dscale), tol)
    if conic.kind == conic.EMPTY:
        raise AmbiguousTopologyError(f"face {f}: crossings found on an empty conic")
    for c in crossings:
        s, r = conic.to_plane(c.point)
        c.branch, c.key, cdir = conic.branch_and_key(s, r)
        # section 5 test: conic tangent vs edge direction
        va, vb = sm.edge_vertices[c.edge_id]
        ed = sub3(sm.vertices[vb], sm.vertices[va])
        gs, gr = conic.q_gradient(s, r)
        td = (-gr * u[0] + gs * v[0], -gr * u[1] + gs * v[1], -gr * u[2] + gs * v[2])
        nt = sqrt(dot3(td, td))
        ne = sqrt(dot3(ed, ed))
        if nt == 0:
            report.add("tangent_edge", c.edge_id, 0.0)
        else:
            a = fabs(dot3(td, ed)) / (nt * ne)
            if fabs(1.0 - to_float(a)) <= tol.eps_tangent:
                report.add("tangent_edge", c.edge_id, fabs(1.0 - to_float(a)))

    # walk the polygon: entry/exit marks and straight chains
    chains, order_ok = _walk_polygon(sm, f, events, classes, crossings)
    if not order_ok:
        raise AmbiguousTopologyError(f"face {f}: crossing parity disagrees with vertex signs")

    arcs_pairs = _pair_crossings_on_conic(conic, crossings, f)

    segments_by_start = {}
    chain_by_entry = {}
    for ch in chains:
        chain_by_entry[ch[0].slot] = ch
    arc_by_exit = {}
    for (ex, en) in arcs_pairs:
        arc_by_exit[ex.slot] = (ex, en)

    loops_out = []
    used_chains = set()
    used_arcs = set()
    for ch in chains:
        if ch[0].slot in used_chains:
            continue
        segs = []
        cur = ch
        guard = 0
        while True:
            guard += 1
            if guard > 4 * (len(chains) + len(arcs_pairs)) + 8:
                raise AmbiguousTopologyError(f"face {f}: loop walk does not close")
            used_chains.add(cur[0].slot)
            segs.extend(_chain_segments(sm, cur))
            exit_c = cur[-1]
            if exit_c.slot not in arc_by_exit:
                raise AmbiguousTopologyError(f"face {f}: exit crossing lacks a conic continuation")
            ex, en = arc_by_exit[exit_c.slot]
            used_arcs.add(ex.slot)
            segs.extend(_arc_segments(conic, ex, en, n, alpha, beta, tol, f))
            if en.slot == ch[0].slot:
                break
            if en.slot not in chain_by_entry:
                raise AmbiguousTopologyError(f"face {f}: entry crossing lacks a polygon chain")
            cur = chain_by_entry[en.slot]
            if cur[0].slot in used_chains:
                raise AmbiguousTopologyError(f"face {f}: chain reuse during loop walk")
        loops_out.append(segs)
    if len(used_arcs) != len(arcs_pairs):
        raise AmbiguousTopologyError(f"face {f}: unreached conic arcs remain")
    if not loops_out:
        return None
    return ClippedFaceBoundary(f, loops_out)


def report_all_on(report, loop):
    for vid in loop:
        report.add("vertex_on_surface", vid, 0.0)


def _polygon_loop(sm, loop):
    segs = []
    m = len(loop)
    for k in range(m):
        p0 = sm.vertices[loop[k]]
        p1 = sm.vertices[loop[(k + 1) % m]]
        segs.append(BoundarySegment("straight", p0, p1))
    return segs


def _walk_polygon(sm, f, events, classes, crossings):
    """Mark crossings entry/exit and collect straight chains.

    A chain starts at an entry crossing (or wraps) and runs along the
    polygon through kept vertices to the next exit crossing.
    """
    # initial state: classification at the first strictly-signed vertex,
    # rewound to the walk start through the crossing flips before it
    state = None
    flips_before = 0
    for (kind, payload) in events:
        if kind == "x":
            flips_before += 1
        elif classes[payload] != ON:
            below = classes[payload] == BELOW
            state = below if flips_before % 2 == 0 else not below
            break
    if state is None:
        # every vertex within tolerance: ambiguous
        return [], False
    chains = []
    current = None       # [entry crossing, vertices..., exit crossing]
    pending_vertices = []
    order_ok = True
    for (kind, payload) in events:
        if kind == "x":
            if state:
                payload.is_entry = False     # leaving the kept region
                if current is not None:
                    current.append(payload)
                    chains.append(current)
                    current = None
                else:
                    # chain began before the walk start; stash
                    pending_vertices.append(("exit", payload))
            else:
                payload.is_entry = True
                current = [payload]
            state = not state
        else:
            if classes[payload] != ON and (classes[payload] == BELOW) != state:
                order_ok = False
            if state:
                if current is not None:
                    current.append(payload)
                else:
                    pending_vertices.append(("v", payload))
    # close the wrap-around chain
    if current is not None:
        for (kind, payload) in pending_vertices:
            if kind == "v":
                current.append(payload)
            else:
                current.append(payload)
                chains.append(current)
                current = None
                break
        if current is not None:
            order_ok = False
    elif any(kind == "exit" for kind, _ in pending_vertices):
        order_ok = False
    return chains, order_ok


def _chain_segments(sm, chain):
    """Straight boundary segments of one polygon chain."""
    pts = []
    for item in chain:
        if isinstance(item, _Crossing):
            pts.append(item.point)
        else:
            pts.append(sm.vertices[item])
    return [BoundarySegment("straight", pts[k], pts[k + 1]) for k in range(len(pts) - 1)]


def _pair_crossings_on_conic(conic, crossings, f):
    """Pair every exit with the next crossing along the conic;
    alternation there must produce an entry."""
    groups = {}
    for c in crossings:
        groups.setdefault(c.branch, []).append(c)
    pairs = []
    for branch, group in groups.items():
        # direction is a property of the branch; fetch it from any member
        s, r = conic.to_plane(group[0].point)
        _, _, direction = conic.branch_and_key(s, r)
        group.sort(key=lambda c: c.key * direction)
        k = len(group)
        if k % 2 != 0 and not conic.is_closed():
            raise AmbiguousTopologyError(f"face {f}: odd crossing count on an open conic branch")
        for i, c in enumerate(group):
            if c.is_entry:
                continue
            if conic.is_closed():
                nxt = group[(i + 1) % k]
            else:
                if i + 1 >= k:
                    raise AmbiguousTopologyError(f"face {f}: conic leaves the face after an exit")
                nxt = group[i + 1]
            if nxt.is_entry is not True:
                raise AmbiguousTopologyError(f"face {f}: consecutive conic crossings do not alternate")
            pairs.append((c, nxt))
    return pairs


def _arc_segments(conic, ex, en, normal, alpha, beta, tol, f):
    """Boundary segments for the conic run from an exit to an entry."""
    p0, p1 = ex.point, en.point
    if conic.straight_kinds():
        if conic.kind == conic.CROSSED_LINES:
            # same asymptote line: straight; different lines: corner at center
            c = conic.center_space()
            d0 = sub3(p0, c)
            d1 = sub3(p1, c)
            cr = cross3(d0, d1)
            area2 = dot3(cr, cr)
            l0, l1 = dot3(d0, d0), dot3(d1, d1)
            if to_float(area2) > tol.eps_corner ** 2 * to_float(l0 * l1) and to_float(l0 * l1) > 0:
                return [BoundarySegment("straight", p0, c, on_surface=True),
                        BoundarySegment("straight", c, p1, on_surface=True)]
        return [BoundarySegment("straight", p0, p1, on_surface=True)]

    pieces = _presplit_points(conic, ex, en)
    segs = []
    prev = p0
    for nxt in pieces + [p1]:
        try:
            arcs = make_arc(prev, nxt, normal, alpha, beta)
        except ArcConstructionError as e:
            raise AmbiguousTopologyError(f"face {f}: arc construction failed ({e})")
        for a in arcs:
            _validate_arc(a, alpha, beta, tol, f)
            segs.append(BoundarySegment("conic", a.x0, a.x1, arc=a, on_surface=True))
        prev = nxt
    return segs


def _presplit_points(conic, ex, en):
    """Interior split points that keep each piece's tangents well posed."""
    if conic.kind == conic.ELLIPSE:
        span = (en.key - ex.key) * conic.ccw
        tau = 2.0 * math.pi
        span = span % tau
        if span == 0.0:
            span = tau
        npieces = max(1, int(math.ceil(span / _ELLIPSE_SPLIT_SPAN)))
        if npieces == 1:
            return []
        return [conic.ellipse_point(ex.key + conic.ccw * span * k / npieces)
                for k in range(1, npieces)]
    if conic.kind in (conic.HYPERBOLA, conic.PARABOLA):
        # a single midpoint split guards strongly curved runs
        s0, _, d = conic.branch_and_key(*conic.to_plane(ex.point))
        if conic.kind == conic.HYPERBOLA:
            branch = ex.branch
        else:
            branch = 0
        kmid = (ex.key + en.key) / 2.0
        span = abs(en.key - ex.key)
        if span == 0.0:
            return []
        return [conic.point_from_key(branch, kmid)]
    return []


def _validate_arc(arc, alpha, beta, tol, f):
    mid = eval_arc(arc, 0.5)
    val = phi(mid, alpha, beta)
    r2 = mid[0] * mid[0] + mid[1] * mid[1] + mid[2] * mid[2]
    scale = max(1.0, to_float(r2) * max(abs(to_float(alpha)), abs(to_float(beta)), 1.0))
    if to_float(fabs(val)) > 1e2 * tol.eps_corner * scale:
        raise AmbiguousTopologyError(f"face {f}: constructed arc leaves the surface "
                                     f"(residual {to_float(val):.3e})")


# ---------------------------------------------------------------------------
# full-ellipse detection
# ---------------------------------------------------------------------------

def _detect_full_ellipse(sm, f, alpha, beta, expect_hole, tol):
    """Flag a face whose plane-ellipse lies strictly inside the polygon.

    Returns FullEllipseInfo or None.  `expect_hole` states whether the
    kept region is the face minus the ellipse (vertices below) or the
    ellipse disc alone (vertices above).
    """
    ab = to_float(alpha) * to_float(beta)
    if ab <= 0.0:
        return None
    n = sm.normals[f]
    nz = n[2]
    if to_float(fabs(nz)) == 0.0:
        return None
    o, u, v = _face_frame(sm, f)
    loop = sm.face_loops[f]
    dscale = max(max(fabs(c) for c in sub3(sm.vertices[i], o)) for i in loop)
    conic = _FaceConic(o, u, v, n, alpha, beta, to_float(dscale), tol)
    if conic.kind != conic.ELLIPSE:
        return None
    definite_pos = to_float(conic.ass + conic.arr) > 0.0
    if definite_pos == expect_hole:
        # vertices below require a negative-definite section and vice versa
        return None
    poly2d = [conic.to_plane(sm.vertices[i]) for i in loop]
    probes = [conic.center]
    for sgn in (1, -1):
        probes.append((conic.center[0] + sgn * conic.rad1 * conic.w1[0],
                       conic.center[1] + sgn * conic.rad1 * conic.w1[1]))
        probes.append((conic.center[0] + sgn * conic.rad2 * conic.w2[0],
                       conic.center[1] + sgn * conic.rad2 * conic.w2[1]))
    for (ps, pr) in probes:
        if not _point_in_polygon(ps, pr, poly2d):
            return None
    # boundary orientation: +ccw for the disc case, -ccw for the hole case
    ccw = conic.ccw if not expect_hole else -conic.ccw
    center3 = conic.center_space()
    ax_u = sub3(conic.to_space(conic.center[0] + conic.rad1 * conic.w1[0],
                               conic.center[1] + conic.rad1 * conic.w1[1]), center3)
    ax_v = sub3(conic.to_space(conic.center[0] + conic.rad2 * conic.w2[0],
                               conic.center[1] + conic.rad2 * conic.w2[1]), center3)
    if ccw < 0:
        ax_v = mul3(ax_v, -1.0)
    anchor = sm.vertices[loop[0]]
    delta = dot3(n, anchor) / nz
    lam = n[0] / nz
    tau = n[1] / nz
    return FullEllipseInfo(
        delta=to_float(delta), lam=to_float(lam), tau=to_float(tau),
        sign_nz=1 if to_float(nz) > 0 else -1,
        hole=expect_hole, center=center3, axis_u=ax_u, axis_v=ax_v,
    )


def _point_in_polygon(px, py, poly):
    inside = False
    m = len(poly)
    for i in range(m):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % m]
        if (y0 > py) != (y1 > py):
            xc = x0 + (py - y0) / (y1 - y0) * (x1 - x0)
            if px < xc:
                inside = not inside
    return inside


def full_ellipse_arcs(info: FullEllipseInfo, alpha, beta):
    """Expand a full-ellipse marker into four rational arcs traversing
    the ellipse in boundary orientation (quarter turns)."""
    c, au, av = info.center, info.axis_u, info.axis_v
    pts = [add3(c, au), add3(c, av), sub3(c, au), sub3(c, av)]
    gs = cross3(au, av)
    ln = sqrt(dot3(gs, gs))
    n = (gs[0] / ln, gs[1] / ln, gs[2] / ln)
    arcs = []
    for k in range(4):
        pieces = make_arc(pts[k], pts[(k + 1) % 4], n, alpha, beta)
        arcs.extend(pieces)
    return arcs
