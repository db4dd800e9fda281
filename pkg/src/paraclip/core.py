"""Shared scalar types: tolerances, moment vectors, projected areas,
compensated summation.

Points are plain (x, y, z) tuples so the same kernels run on floats or
on extended-precision scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._scalars import EPS64, EPS128

Point3 = tuple  # (x, y, z); components are float or extended scalars


@dataclass(frozen=True)
class Tolerances:
    """Detection thresholds for ill-posed clip topologies.

    The defaults target the 53-bit mantissa path.  `scaled_to_extended`
    rescales the relative thresholds for the extended pass so that a
    nudge of size `eps_nudge` is no longer itself within tolerance of a
    degenerate configuration.
    """

    eps64: float = EPS64
    eps128: float = EPS128
    eps_tangent: float = 1e6 * EPS64
    eps_corner: float = 1e2 * EPS64
    eps_nudge: float = 1e10 * EPS128

    def __post_init__(self):
        if not (0.0 < self.eps_corner < self.eps_tangent < 1.0):
            raise ValueError("tolerances must satisfy 0 < eps_corner < eps_tangent < 1")
        if self.eps64 <= 0 or self.eps128 <= 0 or self.eps_nudge <= 0:
            raise ValueError("tolerances must be positive")

    def scaled_to_extended(self) -> "Tolerances":
        return Tolerances(
            eps64=self.eps64,
            eps128=self.eps128,
            eps_tangent=1e6 * self.eps128,
            eps_corner=1e2 * self.eps128,
            eps_nudge=self.eps_nudge,
        )


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class MomentVector:
    """Volume and volume-weighted centroid integrals of a clipped body."""

    m0: float
    m1: tuple

    @staticmethod
    def zero() -> "MomentVector":
        return MomentVector(0.0, (0.0, 0.0, 0.0))

    def __add__(self, other: "MomentVector") -> "MomentVector":
        return MomentVector(
            self.m0 + other.m0,
            (self.m1[0] + other.m1[0], self.m1[1] + other.m1[1], self.m1[2] + other.m1[2]),
        )

    def __sub__(self, other: "MomentVector") -> "MomentVector":
        return MomentVector(
            self.m0 - other.m0,
            (self.m1[0] - other.m1[0], self.m1[1] - other.m1[1], self.m1[2] - other.m1[2]),
        )

    def scaled(self, s) -> "MomentVector":
        return MomentVector(self.m0 * s, (self.m1[0] * s, self.m1[1] * s, self.m1[2] * s))

    def centroid(self) -> tuple:
        return (self.m1[0] / self.m0, self.m1[1] / self.m0, self.m1[2] / self.m0)

    def as_tuple(self) -> tuple:
        return (self.m0, self.m1[0], self.m1[1], self.m1[2])

    def max_abs_difference(self, other: "MomentVector") -> float:
        return max(
            abs(self.m0 - other.m0),
            abs(self.m1[0] - other.m1[0]),
            abs(self.m1[1] - other.m1[1]),
            abs(self.m1[2] - other.m1[2]),
        )


def signed_area_xy(a, b, c):
    """Signed area of the triangle (a, b, c) projected on the xy-plane.

    z components are ignored; swapping two corners negates the result.
    """
    return ((a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))) / 2


def kahan_sum(values):
    """Compensated (Kahan) sum of an iterable of scalars.

    The rounding error stays bounded independently of the number of
    terms, which keeps long accumulations (sweeps, oracle triangle
    sums) at working precision.
    """
    total = 0.0
    comp = 0.0
    for v in values:
        y = v - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


class KahanAccumulator:
    """Running compensated sum, usable with float or extended scalars."""

    __slots__ = ("total", "_comp")

    def __init__(self, zero=0.0):
        self.total = zero
        self._comp = zero

    def add(self, v):
        y = v - self._comp
        t = self.total + y
        self._comp = (t - self.total) - y
        self.total = t


def norm3(v):
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def sub3(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add3(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mul3(a, s):
    return (a[0] * s, a[1] * s, a[2] * s)


def dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
