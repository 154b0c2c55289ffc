"""Embedded surfaces in Euclidean space and their extrinsic geometry.

Two surfaces are shipped:

* ``Sphere``: the round sphere |x| = R, codimension 1, with outward unit
  normal N = x/R.
* ``HyperplaneSphere``: a sphere of radius r' inside the hyperplane
  {last coordinate = c}, codimension 2, with normals N1 = (in-hyperplane
  radial)/r' and N2 = last basis vector.  It exists to exercise the
  codimension >= 2 code paths (index sums over several normals).

Both admit closed-form normals, projections and derivative formulas, so the
analytic derivative path is exact; the finite-difference path differentiates
field values along an on-surface curve and is used purely as a cross-check.

The Levi-Civita connection of the induced metric is the tangential part of
the flat ambient derivative (Gauss formula); the normal parts give the
second fundamental form, shape operators and normal-connection
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import Projected, ScalarField, VectorField, extended

__all__ = [
    "Sphere",
    "HyperplaneSphere",
    "SurfacePoint",
    "TangentVector",
    "NormalFrame",
    "make_rng",
    "point_rng",
    "sample_point",
    "unit_normal_frame",
    "project_tangent",
    "extend_field",
    "ambient_derivative",
    "scalar_derivative",
    "lie_bracket",
    "gauss_split",
    "shape_operator",
    "normal_connection_coeffs",
]

ON_SURFACE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SurfacePoint:
    surface: "Sphere | HyperplaneSphere"
    coords: np.ndarray


@dataclass(frozen=True, eq=False)
class TangentVector:
    base: SurfacePoint
    components: np.ndarray


@dataclass(frozen=True, eq=False)
class NormalFrame:
    base: SurfacePoint
    normals: list[np.ndarray]


class Sphere:
    """The round sphere of radius R in E^n."""

    codim = 1

    def __init__(self, ambient_dim: int, radius: float = 1.0):
        if ambient_dim < 2:
            raise ValueError(f"sphere needs ambient dimension >= 2, got {ambient_dim}")
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        self.ambient_dim = int(ambient_dim)
        self.radius = float(radius)

    def __repr__(self):
        return f"Sphere(ambient_dim={self.ambient_dim}, radius={self.radius})"

    def contains(self, x: np.ndarray, tol: float = ON_SURFACE_TOL) -> bool:
        return abs(float(np.linalg.norm(x)) - self.radius) <= tol * max(1.0, self.radius)

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        # normalized isotropic Gaussian: uniform on the sphere
        g = rng.standard_normal(self.ambient_dim)
        return self.radius * g / np.linalg.norm(g)

    def normal(self, x: np.ndarray, alpha: int = 0) -> np.ndarray:
        if alpha != 0:
            raise IndexError(f"sphere has a single normal, got alpha={alpha}")
        return x / self.radius

    def normal_jacobian(self, x: np.ndarray, alpha: int = 0) -> np.ndarray:
        if alpha != 0:
            raise IndexError(f"sphere has a single normal, got alpha={alpha}")
        return np.eye(self.ambient_dim) / self.radius

    def curve(self, x: np.ndarray, v: np.ndarray):
        """On-surface curve with gamma(0) = x, gamma'(0) = v (v tangent)."""
        R = self.radius

        def gamma(t: float) -> np.ndarray:
            y = x + t * v
            return R * y / np.linalg.norm(y)

        return gamma


class HyperplaneSphere:
    """A sphere of radius r' inside the hyperplane {x_n = c} of E^n.

    Codimension 2.  N1 is the radial direction inside the hyperplane, N2 the
    constant last basis vector; the normal connection vanishes for both.
    """

    codim = 2

    def __init__(self, ambient_dim: int, sub_radius: float = 1.0, offset: float = 0.5):
        if ambient_dim < 3:
            raise ValueError(
                f"hyperplane-sphere needs ambient dimension >= 3, got {ambient_dim}"
            )
        if sub_radius <= 0:
            raise ValueError(f"sub_radius must be positive, got {sub_radius}")
        self.ambient_dim = int(ambient_dim)
        self.sub_radius = float(sub_radius)
        self.offset = float(offset)

    def __repr__(self):
        return (
            f"HyperplaneSphere(ambient_dim={self.ambient_dim}, "
            f"sub_radius={self.sub_radius}, offset={self.offset})"
        )

    # effective radius used for fd steps and curvature scales
    @property
    def radius(self) -> float:
        return self.sub_radius

    def contains(self, x: np.ndarray, tol: float = ON_SURFACE_TOL) -> bool:
        scale = max(1.0, self.sub_radius)
        in_plane = abs(float(x[-1]) - self.offset) <= tol * scale
        on_sphere = abs(float(np.linalg.norm(x[:-1])) - self.sub_radius) <= tol * scale
        return in_plane and on_sphere

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        g = rng.standard_normal(self.ambient_dim - 1)
        out = np.empty(self.ambient_dim)
        out[:-1] = self.sub_radius * g / np.linalg.norm(g)
        out[-1] = self.offset
        return out

    def _plane_part(self, v: np.ndarray) -> np.ndarray:
        out = np.array(v, dtype=float)
        out[-1] = 0.0
        return out

    def normal(self, x: np.ndarray, alpha: int) -> np.ndarray:
        if alpha == 0:
            return self._plane_part(x) / self.sub_radius
        if alpha == 1:
            out = np.zeros(self.ambient_dim)
            out[-1] = 1.0
            return out
        raise IndexError(f"hyperplane-sphere has two normals, got alpha={alpha}")

    def normal_jacobian(self, x: np.ndarray, alpha: int) -> np.ndarray:
        n = self.ambient_dim
        if alpha == 0:
            jac = np.eye(n) / self.sub_radius
            jac[-1, -1] = 0.0
            return jac
        if alpha == 1:
            return np.zeros((n, n))
        raise IndexError(f"hyperplane-sphere has two normals, got alpha={alpha}")

    def curve(self, x: np.ndarray, v: np.ndarray):
        """On-surface curve: renormalize within the hyperplane."""
        rp = self.sub_radius
        c = self.offset

        def gamma(t: float) -> np.ndarray:
            y = x + t * v
            out = np.array(y, dtype=float)
            out[-1] = 0.0
            out *= rp / np.linalg.norm(out)
            out[-1] = c
            return out

        return gamma


def make_rng(seed) -> np.random.Generator:
    """Accept an int seed, a SeedSequence, or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def point_rng(seed: int, index: int) -> np.random.Generator:
    """Substream for sample index `index`, a pure function of (seed, index).

    Serial and fanned-out evaluation therefore draw identical samples.
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def sample_point(surface, rng) -> SurfacePoint:
    """Draw a point on the surface, uniformly, deterministic in the rng state."""
    coords = surface.sample(make_rng(rng))
    return SurfacePoint(surface=surface, coords=coords)


def unit_normal_frame(point: SurfacePoint) -> NormalFrame:
    surface = point.surface
    normals = [surface.normal(point.coords, a) for a in range(surface.codim)]
    return NormalFrame(base=point, normals=normals)


def project_tangent(point: SurfacePoint, v: np.ndarray) -> TangentVector:
    """Tangential part of an ambient vector at a surface point."""
    surface = point.surface
    out = np.array(v, dtype=float)
    for a in range(surface.codim):
        n = surface.normal(point.coords, a)
        out -= (out @ n) * n
    return TangentVector(base=point, components=out)


def extend_field(surface, w: np.ndarray) -> Projected:
    """The tangent vector field x -> tangential part of the constant vector w."""
    return extended(surface, w)


def ambient_derivative(
    field: VectorField,
    point: SurfacePoint,
    v: np.ndarray,
    mode: str = "analytic",
    step: float | None = None,
) -> np.ndarray:
    """Flat ambient derivative of a field at a surface point along tangent v.

    analytic mode applies the field's exact Jacobian.  fd mode central-
    differences field values along the surface curve through (point, v) with
    step h (default 1e-5 * R); it never touches the Jacobian, so agreement
    between the two modes is a real consistency check.
    """
    x = point.coords
    if mode == "analytic":
        return field.deriv(x, np.asarray(v, dtype=float))
    if mode == "fd":
        h = 1e-5 * point.surface.radius if step is None else float(step)
        if h <= 0:
            raise ValueError(f"fd step must be positive, got {h}")
        gamma = point.surface.curve(x, np.asarray(v, dtype=float))
        return (field.value(gamma(h)) - field.value(gamma(-h))) / (2.0 * h)
    raise ValueError(f"mode must be 'analytic' or 'fd', got {mode!r}")


def scalar_derivative(
    field: ScalarField,
    point: SurfacePoint,
    v: np.ndarray,
    mode: str = "analytic",
    step: float | None = None,
) -> float:
    """Same contract as ambient_derivative, for scalar fields."""
    x = point.coords
    if mode == "analytic":
        return field.deriv(x, np.asarray(v, dtype=float))
    if mode == "fd":
        h = 1e-5 * point.surface.radius if step is None else float(step)
        if h <= 0:
            raise ValueError(f"fd step must be positive, got {h}")
        gamma = point.surface.curve(x, np.asarray(v, dtype=float))
        return (field.value(gamma(h)) - field.value(gamma(-h))) / (2.0 * h)
    raise ValueError(f"mode must be 'analytic' or 'fd', got {mode!r}")


def lie_bracket(x_field: VectorField, y_field: VectorField, point: SurfacePoint) -> TangentVector:
    """[X, Y](x) = D_{X(x)} Y - D_{Y(x)} X for the flat ambient derivative."""
    x = point.coords
    xv = x_field.value(x)
    yv = y_field.value(x)
    bracket = y_field.deriv(x, xv) - x_field.deriv(x, yv)
    return TangentVector(base=point, components=bracket)


def gauss_split(
    xvec: TangentVector, y_field: VectorField, point: SurfacePoint
) -> tuple[TangentVector, list[float]]:
    """Split D_X Y into the induced connection and second fundamental form.

    Returns (nabla_X Y, [h_alpha(X, Y)]):  the tangential part is the
    Levi-Civita connection of the induced metric, h_alpha the coefficient
    along N_alpha.
    """
    surface = point.surface
    d = y_field.deriv(point.coords, xvec.components)
    h = []
    tangential = np.array(d, dtype=float)
    for a in range(surface.codim):
        n = surface.normal(point.coords, a)
        coeff = float(d @ n)
        h.append(coeff)
        tangential -= coeff * n
    return TangentVector(base=point, components=tangential), h


def shape_operator(point: SurfacePoint, alpha: int) -> np.ndarray:
    """Weingarten operator A_alpha as an ambient matrix acting on tangents.

    A_alpha X = -(tangential part of D_X N_alpha).  The returned matrix is
    meaningful on tangent vectors at the base point only.
    """
    surface = point.surface
    x = point.coords
    jac = surface.normal_jacobian(x, alpha)
    proj = np.eye(surface.ambient_dim)
    for a in range(surface.codim):
        n = surface.normal(x, a)
        proj -= np.outer(n, n)
    return -proj @ jac


def normal_connection_coeffs(point: SurfacePoint, xvec: TangentVector) -> np.ndarray:
    """The r x r matrix l_{ab}(X) = <normal part of D_X N_a, N_b>."""
    surface = point.surface
    x = point.coords
    r = surface.codim
    normals = [surface.normal(x, a) for a in range(r)]
    out = np.zeros((r, r))
    for a in range(r):
        d = surface.normal_jacobian(x, a) @ xvec.components
        for b in range(r):
            out[a, b] = d @ normals[b]
    return out


def tangent_projector(point: SurfacePoint) -> np.ndarray:
    """Orthogonal projector onto the tangent space, as an ambient matrix."""
    surface = point.surface
    proj = np.eye(surface.ambient_dim)
    for a in range(surface.codim):
        n = surface.normal(point.coords, a)
        proj -= np.outer(n, n)
    return proj


def tangent_basis(point: SurfacePoint) -> np.ndarray:
    """Orthonormal basis of the tangent space, as columns of an (n, n-r) matrix."""
    surface = point.surface
    proj = tangent_projector(point)
    eigvals, eigvecs = np.linalg.eigh(proj)
    keep = eigvals > 0.5
    basis = eigvecs[:, keep]
    if basis.shape[1] != surface.ambient_dim - surface.codim:
        raise RuntimeError("tangent projector has unexpected rank")
    return basis
