"""Half-edge polyhedron representation and plane-geometry utilities.

The mesh is index based: vertices live in an (n, 3) float64 array and
each half edge stores (origin, twin, next, face).  Faces are planar,
possibly non-convex polygons with outward unit normals.  All meshes are
treated as immutable after construction; transforms return new meshes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import MomentVector, kahan_sum
from ._scalars import EPS64


class MeshTopologyError(ValueError):
    """Raised when input connectivity is not a closed orientable 2-manifold."""


class MeshGeometryError(ValueError):
    """Raised when face planarity or orientation invariants fail."""


PLANARITY_TOL = 1e3 * EPS64


@dataclass
class HalfEdgeMesh:
    vertices: np.ndarray                 # (nv, 3) float64
    origin: np.ndarray                   # (nh,) int — origin vertex of each half edge
    twin: np.ndarray                     # (nh,) int
    next: np.ndarray                     # (nh,) int
    face: np.ndarray                     # (nh,) int
    face_first: np.ndarray               # (nf,) int — one half edge per face
    normals: np.ndarray                  # (nf, 3) float64, unit, outward
    face_loops: list = field(default_factory=list)   # per face: vertex index list
    face_edges: list = field(default_factory=list)   # per face: (edge_id, forward) list
    edge_vertices: np.ndarray = None     # (ne, 2) int, canonical vertex order

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_faces(self):
        return len(self.face_first)

    @property
    def n_half_edges(self):
        return len(self.origin)

    def diameter(self):
        lo = self.vertices.min(axis=0)
        hi = self.vertices.max(axis=0)
        return float(np.linalg.norm(hi - lo))

    def bounding_box(self):
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def validate(self):
        """Check the half-edge invariants; raises on violation."""
        nh = self.n_half_edges
        tw = self.twin
        if np.any(tw[tw] != np.arange(nh)) or np.any(tw == np.arange(nh)):
            raise MeshTopologyError("twin map must be a fixed-point-free involution")
        if np.any(self.origin[tw] != self.origin[self.next]):
            raise MeshTopologyError("twin half edges must join the same vertex pair")
        seen = np.zeros(nh, dtype=bool)
        for f, first in enumerate(self.face_first):
            h = first
            count = 0
            while True:
                if self.face[h] != f:
                    raise MeshTopologyError(f"half edge {h} not assigned to face {f}")
                seen[h] = True
                h = self.next[h]
                count += 1
                if h == first:
                    break
                if count > nh:
                    raise MeshTopologyError("next cycle does not close")
            if count < 3:
                raise MeshTopologyError(f"face {f} has fewer than 3 edges")
        if not seen.all():
            raise MeshTopologyError("half edges not covered by face cycles")
        diam = max(self.diameter(), 1.0)
        for f, loop in enumerate(self.face_loops):
            n = self.normals[f]
            if abs(np.linalg.norm(n) - 1.0) > 64 * EPS64:
                raise MeshGeometryError(f"face {f} normal is not unit length")
            pts = self.vertices[loop]
            d = (pts - pts[0]) @ n
            if np.max(np.abs(d)) > PLANARITY_TOL * diam:
                raise MeshGeometryError(f"face {f} is not planar within tolerance")
        if polyhedron_moments(self).m0 <= 0.0:
            raise MeshGeometryError("face orientation is inward (negative volume)")
        return True


def build_mesh(vertices, faces) -> HalfEdgeMesh:
    """Assemble a half-edge mesh from vertex coordinates and face loops.

    `faces` lists each polygon as vertex indices in outward (counter-
    clockwise seen from outside) order.  The surface must be closed and
    manifold: every undirected edge shared by exactly two faces.
    """
    verts = np.asarray(vertices, dtype=float)
    if verts.ndim != 2 or verts.shape[1] != 3:
        raise ValueError("vertices must be an (n, 3) array")
    if not np.isfinite(verts).all():
        raise ValueError("vertex coordinates must be finite")
    faces = [list(loop) for loop in faces]

    origin, nxt, face_of = [], [], []
    face_first = []
    he_index = {}
    for f, loop in enumerate(faces):
        m = len(loop)
        if m < 3:
            raise MeshTopologyError(f"face {f} has fewer than 3 vertices")
        if len(set(loop)) != m:
            raise MeshTopologyError(f"face {f} repeats a vertex")
        base = len(origin)
        face_first.append(base)
        for k in range(m):
            a, b = loop[k], loop[(k + 1) % m]
            if (a, b) in he_index:
                raise MeshTopologyError(f"directed edge {a}->{b} used twice (inconsistent winding?)")
            he_index[(a, b)] = base + k
            origin.append(a)
            nxt.append(base + ((k + 1) % m))
            face_of.append(f)

    nh = len(origin)
    twin = np.full(nh, -1, dtype=np.int64)
    for (a, b), h in he_index.items():
        g = he_index.get((b, a))
        if g is None:
            raise MeshTopologyError(f"edge {a}-{b} is open (surface not watertight)")
        twin[h] = g
    origin = np.asarray(origin, dtype=np.int64)
    nxt = np.asarray(nxt, dtype=np.int64)
    face_of = np.asarray(face_of, dtype=np.int64)
    face_first = np.asarray(face_first, dtype=np.int64)

    normals = np.empty((len(faces), 3))
    for f, loop in enumerate(faces):
        normals[f] = _newell_normal(verts[loop])

    # undirected edges: canonical half edge is the one with origin < destination
    edge_id = np.full(nh, -1, dtype=np.int64)
    edge_pairs = []
    for h in range(nh):
        if edge_id[h] >= 0:
            continue
        g = twin[h]
        eid = len(edge_pairs)
        edge_id[h] = eid
        edge_id[g] = eid
        a, b = origin[h], origin[g]
        edge_pairs.append((a, b) if a < b else (b, a))
    edge_vertices = np.asarray(edge_pairs, dtype=np.int64)

    face_loops = [list(loop) for loop in faces]
    face_edges = []
    for f, loop in enumerate(faces):
        m = len(loop)
        base = face_first[f]
        fe = []
        for k in range(m):
            h = base + k
            eid = edge_id[h]
            forward = (origin[h] == edge_vertices[eid][0])
            fe.append((int(eid), bool(forward)))
        face_edges.append(fe)

    mesh = HalfEdgeMesh(
        vertices=verts, origin=origin, twin=twin, next=nxt, face=face_of,
        face_first=face_first, normals=normals,
        face_loops=face_loops, face_edges=face_edges, edge_vertices=edge_vertices,
    )
    mesh.validate()
    return mesh


def _newell_normal(pts):
    n = np.zeros(3)
    m = len(pts)
    for i in range(m):
        p, q = pts[i], pts[(i + 1) % m]
        n[0] += (p[1] - q[1]) * (p[2] + q[2])
        n[1] += (p[2] - q[2]) * (p[0] + q[0])
        n[2] += (p[0] - q[0]) * (p[1] + q[1])
    length = np.linalg.norm(n)
    if length == 0.0:
        raise MeshGeometryError("degenerate face (zero Newell normal)")
    return n / length


# ---------------------------------------------------------------------------
# canonical test geometries
# ---------------------------------------------------------------------------

def tetrahedron() -> HalfEdgeMesh:
    """Regular tetrahedron, 4 vertices / 4 faces."""
    v = np.array([
        (1.0, 1.0, 1.0),
        (1.0, -1.0, -1.0),
        (-1.0, 1.0, -1.0),
        (-1.0, -1.0, 1.0),
    ])
    f = [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)]
    return build_mesh(v, f)


def cube() -> HalfEdgeMesh:
    """Axis-aligned unit cube on [0, 1]^3, 8 vertices / 6 faces."""
    v = np.array([(x, y, z) for z in (0.0, 1.0) for y in (0.0, 1.0) for x in (0.0, 1.0)])
    f = [
        (0, 2, 3, 1),      # bottom (z = 0), outward -z
        (4, 5, 7, 6),      # top (z = 1), outward +z
        (0, 1, 5, 4),      # y = 0
        (2, 6, 7, 3),      # y = 1
        (0, 4, 6, 2),      # x = 0
        (1, 3, 7, 5),      # x = 1
    ]
    return build_mesh(v, f)


def dodecahedron() -> HalfEdgeMesh:
    """Regular dodecahedron, 20 vertices / 12 pentagonal faces."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    inv = 1.0 / phi
    pts = []
    for sx in (-1, 1):
        for sy in (-1, 1):
            for sz in (-1, 1):
                pts.append((sx, sy, sz))
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            pts.append((0.0, s1 * inv, s2 * phi))
            pts.append((s1 * inv, s2 * phi, 0.0))
            pts.append((s1 * phi, 0.0, s2 * inv))
    v = np.array(pts, dtype=float)
    faces = _convex_hull_faces(v)
    return build_mesh(v, faces)


def _convex_hull_faces(verts):
    """Faces of the convex hull of `verts`, coplanar triangles merged."""
    from scipy.spatial import ConvexHull

    hull = ConvexHull(verts)
    # group coplanar triangles by outward normal
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 9))
        groups.setdefault(key, []).append(list(simplex))
    faces = []
    for key, tris in groups.items():
        ids = sorted({i for t in tris for i in t})
        n = np.array(key[:3])
        c = verts[ids].mean(axis=0)
        u = verts[ids[0]] - c
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        ang = [math.atan2(float((verts[i] - c) @ w), float((verts[i] - c) @ u)) for i in ids]
        faces.append([i for _, i in sorted(zip(ang, ids))])
    return faces


def hollow_cube(tunnel_ratio: float = 0.5) -> HalfEdgeMesh:
    """Cube with a square axial tunnel: 16 vertices / 12 faces, genus 1.

    The top and bottom rings are each split into two C-shaped (non-
    convex) faces, which keeps the face count at 12.
    """
    if not 0.0 < tunnel_ratio < 1.0:
        raise ValueError("tunnel_ratio must lie in (0, 1)")
    h = 0.5
    t = tunnel_ratio * h
    outer_b = [(-h, -h, -h), (h, -h, -h), (h, h, -h), (-h, h, -h)]   # 0..3
    outer_t = [(-h, -h, h), (h, -h, h), (h, h, h), (-h, h, h)]       # 4..7
    inner_b = [(-t, -t, -h), (t, -t, -h), (t, t, -h), (-t, t, -h)]   # 8..11
    inner_t = [(-t, -t, h), (t, -t, h), (t, t, h), (-t, t, h)]       # 12..15
    v = np.array(outer_b + outer_t + inner_b + inner_t)
    faces = [
        # outer walls
        (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
        # tunnel walls (outward normals point into the tunnel)
        (8, 12, 13, 9), (9, 13, 14, 10), (10, 14, 15, 11), (11, 15, 12, 8),
        # top ring (z=+h): two C-shaped hexagons
        (4, 5, 6, 14, 13, 12), (6, 7, 4, 12, 15, 14),
        # bottom ring (z=-h), wound for outward -z
        (8, 9, 10, 2, 1, 0), (10, 11, 8, 0, 3, 2),
    ]
    return build_mesh(v, faces)


GEOMETRY_BUILDERS = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "hollow_cube": hollow_cube,
}


def build_primitive(kind: str) -> HalfEdgeMesh:
    """Construct one of the canonical test polyhedra by name."""
    try:
        builder = GEOMETRY_BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown geometry {kind!r}; choose from {sorted(GEOMETRY_BUILDERS)}")
    return builder()


# ---------------------------------------------------------------------------
# Wavefront OBJ ingestion
# ---------------------------------------------------------------------------

def load_obj(path, warn=None) -> HalfEdgeMesh:
    """Load an ASCII Wavefront OBJ mesh (`v` and polygonal `f` records).

    Indices are 1-based (negative indices count from the end, per the
    format).  Faces keep their polygon structure; normals are recomputed
    from the winding.  Unsupported records are skipped with a warning.
    """
    verts = []
    faces = []
    skipped = set()
    with open(path, "r") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            tag = parts[0]
            if tag == "v":
                if len(parts) < 4:
                    raise ValueError(f"{path}:{lineno}: malformed vertex record")
                try:
                    verts.append(tuple(float(p) for p in parts[1:4]))
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: non-numeric vertex coordinate")
            elif tag == "f":
                if len(parts) < 4:
                    raise ValueError(f"{path}:{lineno}: face needs at least 3 vertices")
                idx = []
                for p in parts[1:]:
                    s = p.split("/")[0]
                    try:
                        i = int(s)
                    except ValueError:
                        raise ValueError(f"{path}:{lineno}: bad face index {p!r}")
                    if i == 0:
                        raise ValueError(f"{path}:{lineno}: OBJ indices are 1-based")
                    idx.append(i - 1 if i > 0 else len(verts) + i)
                faces.append(idx)
            else:
                skipped.add(tag)
    if skipped and warn is not None:
        warn(f"ignored OBJ record types: {', '.join(sorted(skipped))}")
    if not faces:
        raise ValueError(f"{path}: no faces found")
    return build_mesh(np.asarray(verts), faces)


def save_obj(mesh: HalfEdgeMesh, path):
    with open(path, "w") as fh:
        for v in mesh.vertices:
            fh.write(f"v {v[0]!r} {v[1]!r} {v[2]!r}\n")
        for loop in mesh.face_loops:
            fh.write("f " + " ".join(str(i + 1) for i in loop) + "\n")


# ---------------------------------------------------------------------------
# plane-geometry moments and transforms
# ---------------------------------------------------------------------------

def polyhedron_moments(mesh: HalfEdgeMesh) -> MomentVector:
    """Exact volume and first moments of the (unclipped) polyhedron.

    Signed tetrahedra against the origin, fanned from each face's first
    vertex; valid for non-convex faces and bodies.
    """
    m0_parts, mx, my, mz = [], [], [], []
    V = mesh.vertices
    for loop in mesh.face_loops:
        a = V[loop[0]]
        for k in range(1, len(loop) - 1):
            b, c = V[loop[k]], V[loop[k + 1]]
            det = float(np.dot(a, np.cross(b, c)))
            vol = det / 6.0
            m0_parts.append(vol)
            s = (a + b + c) / 4.0
            mx.append(vol * s[0])
            my.append(vol * s[1])
            mz.append(vol * s[2])
    return MomentVector(kahan_sum(m0_parts), (kahan_sum(mx), kahan_sum(my), kahan_sum(mz)))


def normalize_to_unit(mesh: HalfEdgeMesh) -> HalfEdgeMesh:
    """Rescale about the centroid so the body has unit volume and its
    centroid sits at the origin."""
    m = polyhedron_moments(mesh)
    if m.m0 <= 0.0:
        raise MeshGeometryError("cannot normalize a mesh with non-positive volume")
    c = np.array(m.centroid())
    s = m.m0 ** (-1.0 / 3.0)
    verts = (mesh.vertices - c) * s
    return build_mesh(verts, mesh.face_loops)


def rotation_matrix(angles):
    """R = Rz(tz) @ Ry(ty) @ Rx(tx)."""
    tx, ty, tz = angles
    cx, sx = math.cos(tx), math.sin(tx)
    cy, sy = math.cos(ty), math.sin(ty)
    cz, sz = math.cos(tz), math.sin(tz)
    rx = np.array([[1, 0, 0], [0, cx, -sx], [0, sx, cx]])
    ry = np.array([[cy, 0, sy], [0, 1, 0], [-sy, 0, cy]])
    rz = np.array([[cz, -sz, 0], [sz, cz, 0], [0, 0, 1]])
    return rz @ ry @ rx


def rigid_transform(mesh: HalfEdgeMesh, translation=(0.0, 0.0, 0.0), rotation_angles=(0.0, 0.0, 0.0)) -> HalfEdgeMesh:
    """Rotate by Rz(tz)Ry(ty)Rx(tx), then translate."""
    if all(a == 0.0 for a in rotation_angles) and all(t == 0.0 for t in translation):
        return mesh
    R = rotation_matrix(rotation_angles)
    verts = mesh.vertices @ R.T + np.asarray(translation, dtype=float)
    out = build_mesh(verts, mesh.face_loops)
    return out


def translate(mesh: HalfEdgeMesh, translation) -> HalfEdgeMesh:
    verts = mesh.vertices + np.asarray(translation, dtype=float)
    return build_mesh(verts, mesh.face_loops)


def halfspace_clip_moments(mesh: HalfEdgeMesh, normal, offset) -> MomentVector:
    """Moments of mesh ∩ {n·x <= d}, exact for planes.

    Each face polygon is clipped against the half space; signed
    tetrahedra are taken against an apex on the cutting plane so the cap
    face never needs to be built.
    """
    n = np.asarray(normal, dtype=float)
    d = float(offset)
    V = mesh.vertices
    side = V @ n - d           # <= 0 is kept
    if np.all(side <= 0.0):
        return polyhedron_moments(mesh)
    if np.all(side >= 0.0):
        return MomentVector.zero()
    apex = n * d               # a point on the plane (n is unit)

    m0_parts, mx, my, mz = [], [], [], []
    for loop in mesh.face_loops:
        poly = _clip_polygon_halfspace([V[i] for i in loop], [side[i] for i in loop])
        if len(poly) < 3:
            continue
        a = poly[0]
        for k in range(1, len(poly) - 1):
            b, c = poly[k], poly[k + 1]
            det = float(np.dot(a - apex, np.cross(b - apex, c - apex)))
            vol = det / 6.0
            m0_parts.append(vol)
            s = (apex + a + b + c) / 4.0
            mx.append(vol * s[0])
            my.append(vol * s[1])
            mz.append(vol * s[2])
    return MomentVector(kahan_sum(m0_parts), (kahan_sum(mx), kahan_sum(my), kahan_sum(mz)))


def _clip_polygon_halfspace(pts, sides):
    out = []
    m = len(pts)
    for i in range(m):
        p, sp = pts[i], sides[i]
        q, sq = pts[(i + 1) % m], sides[(i + 1) % m]
        if sp <= 0.0:
            out.append(p)
            if sq > 0.0:
                t = sp / (sp - sq)
                out.append(p + t * (q - p))
        elif sq <= 0.0:
            t = sp / (sp - sq)
            out.append(p + t * (q - p))
    return out
