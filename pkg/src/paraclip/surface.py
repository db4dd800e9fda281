"""Area of the clip-surface patch inside the polyhedron.

The area reduces to one-dimensional integrals of a closed-form
antiderivative along the boundary arcs of the patch; these are
evaluated with an adaptive Gauss-Legendre rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import kahan_sum
from .clip import full_ellipse_arcs
from .arcs import eval_arc, eval_arc_derivative


@dataclass(frozen=True)
class QuadratureSpec:
    order: int = 5               # Gauss-Legendre points per panel
    rel_tolerance: float = 1e-13
    max_depth: int = 30

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if not self.rel_tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 1 <= self.max_depth <= 40:
            raise ValueError("depth must lie in [1, 40]")


DEFAULT_QUADRATURE = QuadratureSpec()


class QuadratureError(RuntimeError):
    """Adaptive bisection exhausted its depth before converging."""


def gamma_primitive(x, y, alpha, beta):
    """Antiderivative in x of the surface metric
    sqrt(1 + 4 a^2 x^2 + 4 b^2 y^2); continuous through alpha = 0."""
    a2 = 1.0 + 4.0 * beta * beta * y * y
    c = 2.0 * abs(alpha)
    if c * max(1.0, abs(x)) < 1e-8:
        # series in c about 0; the quartic term is below double rounding
        a = math.sqrt(a2)
        x3 = x * x * x
        return a * x + c * c * x3 / (6.0 * a) - c ** 4 * x3 * x * x / (40.0 * a * a2)
    a = math.sqrt(a2)
    s = math.sqrt(a2 + c * c * x * x)
    return 0.5 * (x * s + a2 / c * math.asinh(c * x / a))


def _gl_nodes(order):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


class _ArcIntegrand:
    """-gamma(x(t), y(t)) y'(t) along one boundary arc of the patch."""

    def __init__(self, seg, alpha, beta):
        self.alpha = alpha
        self.beta = beta
        if seg.kind == "conic":
            self.arc = seg.arc
        else:
            self.arc = None
            self.p0 = seg.p0
            self.p1 = seg.p1

    def __call__(self, t):
        if self.arc is not None:
            p = eval_arc(self.arc, t)
            dp = eval_arc_derivative(self.arc, t)
            return -gamma_primitive(p[0], p[1], self.alpha, self.beta) * dp[1]
        x = self.p0[0] + t * (self.p1[0] - self.p0[0])
        y = self.p0[1] + t * (self.p1[1] - self.p0[1])
        dy = self.p1[1] - self.p0[1]
        return -gamma_primitive(x, y, self.alpha, self.beta) * dy


def adaptive_panel_integral(f, spec: QuadratureSpec = DEFAULT_QUADRATURE, scale=1.0):
    """Adaptive Gauss-Legendre integral of f over [0, 1].

    Bisects until the two-half estimate matches the parent panel within
    the relative tolerance (absolute floor `scale`)."""
    nodes, weights = _gl_nodes(spec.order)

    def panel(a, b):
        h = 0.5 * (b - a)
        m = 0.5 * (a + b)
        return h * sum(w * f(m + h * x) for x, w in zip(nodes, weights))

    def recurse(a, b, whole, depth):
        m = 0.5 * (a + b)
        left = panel(a, m)
        right = panel(m, b)
        if abs(left + right - whole) <= spec.rel_tolerance * max(abs(whole), scale):
            return left + right
        if depth >= spec.max_depth:
            raise QuadratureError("adaptive quadrature did not converge within depth")
        return recurse(a, m, left, depth + 1) + recurse(m, b, right, depth + 1)

    return recurse(0.0, 1.0, panel(0.0, 1.0), 0)


def integrate_patch_boundary(boundaries, alpha, beta, integrand_factory,
                             spec: QuadratureSpec = DEFAULT_QUADRATURE, scale=1.0):
    """Sum of adaptive arc integrals over all on-surface boundary
    segments, full-ellipse faces expanded to four arcs."""
    parts = []
    for b in boundaries:
        for loop in b.loops:
            for seg in loop:
                if not seg.on_surface:
                    continue
                parts.append(adaptive_panel_integral(integrand_factory(seg, alpha, beta),
                                                     spec, scale))
        if b.full_ellipse is not None:
            for arc in full_ellipse_arcs(b.full_ellipse, alpha, beta):
                seg = _conic_stub(arc)
                parts.append(adaptive_panel_integral(integrand_factory(seg, alpha, beta),
                                                     spec, scale))
    return kahan_sum(parts)


class _conic_stub:
    kind = "conic"

    def __init__(self, arc):
        self.arc = arc


def surface_area(boundaries, alpha, beta, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Area of the clip-surface patch bounded by the given clipped-face
    boundaries (canonical frame)."""
    scale = 1.0
    area = integrate_patch_boundary(boundaries, alpha, beta, _ArcIntegrand, spec, scale)
    return area
