"""World-frame paraboloid description and the canonical-frame mapping.

A clip region is the set {phi <= 0} where, in the paraboloid's own
(canonical) frame, phi(x) = alpha x^2 + beta y^2 + z.  The frame maps
world coordinates into canonical ones via x_c = R (x_w - c).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import MomentVector
from .mesh import HalfEdgeMesh, build_mesh
from ._scalars import EPS64

_IDENTITY = np.eye(3)
_FLIP_X180 = np.diag([1.0, -1.0, -1.0])   # 180-degree rotation about e_x


@dataclass(frozen=True)
class Paraboloid:
    """Canonical surface alpha x^2 + beta y^2 + z = 0 placed by a rigid frame.

    `rotation` (R) and `center` (c) map world to canonical coordinates:
    x_canonical = R @ (x_world - c).  Any sign combination of the
    curvatures is allowed; alpha = beta = 0 degenerates to a plane.
    """

    alpha: float
    beta: float
    rotation: np.ndarray = field(default_factory=lambda: _IDENTITY.copy())
    center: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        R = np.asarray(self.rotation, dtype=float)
        c = np.asarray(self.center, dtype=float)
        if R.shape != (3, 3):
            raise ValueError("rotation must be a 3x3 matrix")
        if np.max(np.abs(R @ R.T - _IDENTITY)) > 8 * EPS64:
            raise ValueError("rotation must be orthonormal")
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ValueError("curvatures must be finite")
        object.__setattr__(self, "rotation", R)
        object.__setattr__(self, "center", c)

    def world_to_canonical(self, points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return (pts - self.center) @ self.rotation.T

    def canonical_to_world(self, points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return pts @ self.rotation + self.center

    def evaluate_world(self, point):
        """phi at a world-space point."""
        x, y, z = self.world_to_canonical(point)[0]
        return self.alpha * x * x + self.beta * y * y + z


@dataclass(frozen=True)
class ClipRegion:
    """The region {phi <= 0} of a paraboloid."""

    paraboloid: Paraboloid

    @staticmethod
    def from_canonical_coefficients(alpha, beta) -> "ClipRegion":
        return ClipRegion(Paraboloid(alpha, beta))

    def flipped(self) -> "ClipRegion":
        """The complementary region {phi >= 0}, expressed again as a
        {phi' <= 0} clip of a reflected paraboloid.

        Negating both curvatures and composing the frame with a half
        turn about e_x maps phi to -phi exactly.
        """
        p = self.paraboloid
        return ClipRegion(Paraboloid(-p.alpha, -p.beta, _FLIP_X180 @ p.rotation, p.center))


def to_canonical(mesh: HalfEdgeMesh, region: ClipRegion) -> HalfEdgeMesh:
    """Re-express the mesh in the clip region's canonical frame."""
    p = region.paraboloid
    if p.rotation is _IDENTITY or (np.array_equal(p.rotation, _IDENTITY) and not p.center.any()):
        return mesh
    verts = p.world_to_canonical(mesh.vertices)
    return build_mesh(verts, mesh.face_loops)


def moments_to_world(m: MomentVector, region: ClipRegion) -> MomentVector:
    """Map canonical-frame moments back to the world frame.

    The volume is frame invariant; the first moments transform as
    R^T m1 + c m0 for the world-to-canonical frame (R, c).
    """
    p = region.paraboloid
    m1 = np.asarray(m.m1, dtype=float)
    world = p.rotation.T @ m1 + p.center * m.m0
    return MomentVector(m.m0, (float(world[0]), float(world[1]), float(world[2])))
