"""Ambient fields with exact directional derivatives.

Every geometric quantity downstream (connections, brackets, Nijenhuis
tensors, derivatives of the induced structure) reduces to directional
derivatives of a handful of closed-form ambient fields: surface normals,
constant vectors projected to the tangent bundle, matrix images of those,
and inner products between them.  Rather than hand-deriving each composite,
this module gives each primitive field an exact Jacobian action and builds
composites by the product/chain rule, so the "analytic" derivative path is
exact up to round-off and the finite-difference path stays a genuinely
independent cross-check.

value(x) evaluates the field at an ambient point; deriv(x, v) is the action
of the exact Jacobian at x on an ambient direction v (not restricted to
tangent directions).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "VectorField",
    "ScalarField",
    "Constant",
    "NormalField",
    "MatApplied",
    "Projected",
    "Dot",
    "ScalarScaled",
    "extended",
]


class VectorField:
    """Base class; subclasses implement value(x) and deriv(x, v)."""

    def value(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def deriv(self, x: np.ndarray, v: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __add__(self, other: "VectorField") -> "VectorField":
        return _Sum(self, other, 1.0)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return _Sum(self, other, -1.0)


class ScalarField:
    def value(self, x: np.ndarray) -> float:
        raise NotImplementedError

    def deriv(self, x: np.ndarray, v: np.ndarray) -> float:
        raise NotImplementedError


class Constant(VectorField):
    def __init__(self, w):
        self.w = np.asarray(w, dtype=float)

    def value(self, x):
        return self.w

    def deriv(self, x, v):
        return np.zeros_like(self.w)


class NormalField(VectorField):
    """The alpha-th unit normal of a surface, as a smooth ambient formula."""

    def __init__(self, surface, alpha: int):
        self.surface = surface
        self.alpha = alpha

    def value(self, x):
        return self.surface.normal(x, self.alpha)

    def deriv(self, x, v):
        return self.surface.normal_jacobian(x, self.alpha) @ v


class MatApplied(VectorField):
    """A constant matrix applied pointwise to another field."""

    def __init__(self, mat: np.ndarray, f: VectorField):
        self.mat = np.asarray(mat, dtype=float)
        self.f = f

    def value(self, x):
        return self.mat @ self.f.value(x)

    def deriv(self, x, v):
        return self.mat @ self.f.deriv(x, v)


class _Sum(VectorField):
    def __init__(self, f: VectorField, g: VectorField, sign: float):
        self.f = f
        self.g = g
        self.sign = sign

    def value(self, x):
        return self.f.value(x) + self.sign * self.g.value(x)

    def deriv(self, x, v):
        return self.f.deriv(x, v) + self.sign * self.g.deriv(x, v)


class Projected(VectorField):
    """Pointwise tangential projection of a field along a surface.

    value:  F - sum_a <F, N_a> N_a
    deriv:  product rule through F and each N_a.
    """

    def __init__(self, surface, f: VectorField):
        self.surface = surface
        self.f = f
        self._normals = [NormalField(surface, a) for a in range(surface.codim)]

    def value(self, x):
        out = np.array(self.f.value(x), dtype=float)
        for nf in self._normals:
            n = nf.value(x)
            out -= (out @ n) * n
        return out

    def deriv(self, x, v):
        fval = self.f.value(x)
        fder = self.f.deriv(x, v)
        out = np.array(fder, dtype=float)
        for nf in self._normals:
            n = nf.value(x)
            dn = nf.deriv(x, v)
            coeff = fval @ n
            out -= (fder @ n + fval @ dn) * n + coeff * dn
        return out


class Dot(ScalarField):
    """Inner product of two vector fields."""

    def __init__(self, f: VectorField, g: VectorField):
        self.f = f
        self.g = g

    def value(self, x):
        return float(self.f.value(x) @ self.g.value(x))

    def deriv(self, x, v):
        return float(self.f.deriv(x, v) @ self.g.value(x) + self.f.value(x) @ self.g.deriv(x, v))


class ScalarScaled(VectorField):
    """A vector field scaled pointwise by a scalar field."""

    def __init__(self, s: ScalarField, f: VectorField):
        self.s = s
        self.f = f

    def value(self, x):
        return self.s.value(x) * self.f.value(x)

    def deriv(self, x, v):
        return self.s.deriv(x, v) * self.f.value(x) + self.s.value(x) * self.f.deriv(x, v)


def extended(surface, w) -> Projected:
    """Tangent field obtained by projecting the constant field w.

    At each surface point its value is the tangential part of w; the
    resulting formula is smooth on a neighbourhood of the surface, so its
    Jacobian is available in closed form.
    """
    return Projected(surface, Constant(w))
