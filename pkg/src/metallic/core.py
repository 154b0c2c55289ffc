"""Metallic means and ambient metallic structures on flat Euclidean space.

A (p, q)-metallic number is the positive root of x^2 = p*x + q.  A metallic
structure is a (1,1)-tensor J with J^2 = p*J + q*I; on Euclidean space with
the flat metric it is represented by a constant symmetric matrix.  This
module builds the standard block-structured ambient matrices

    J(x_i) = p/2 x_i + lam*sqrt(D)/2 y_i
    J(y_i) = p/2 y_i + lam*sqrt(D)/2 x_i
    J(z_j) = (p/2 + lam*eps_j*sqrt(D)/2) z_j,     D = p^2 + 4q,

on coordinates (x^1..x^a, y^1..y^a, z^1..z^b), and the two-way conversion
between metallic structures and almost-product structures (F^2 = I).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MetallicParams",
    "AmbientStructure",
    "ProductStructure",
    "PRESETS",
    "NAMED_STRUCTURE_CONSTANTS",
    "metallic_ratio",
    "preset_params",
    "build_ambient_structure",
    "named_structure_matrix",
    "verify_polynomial",
    "verify_compatibility",
    "bilinear_residual",
    "spectral_residual",
    "structure_from_product",
    "product_from_structure",
]


@dataclass(frozen=True)
class MetallicParams:
    """Carrier for (p, q) and the derived constants sigma, sigma_bar, delta.

    sigma is the positive root of x^2 = p*x + q, sigma_bar = p - sigma the
    conjugate root, delta = p^2 + 4q the discriminant.
    """

    p: int
    q: int
    sigma: float
    sigma_bar: float
    delta: float

    @property
    def sqrt_delta(self) -> float:
        return 2.0 * self.sigma - self.p

    def polynomial_residuals(self) -> tuple[float, float, float]:
        """Residuals of the defining relations, for self-checks.

        Returns (|sigma^2 - p*sigma - q|, |sigma_bar^2 - p*sigma_bar - q|,
        |sigma - (p + sqrt(delta))/2|).
        """
        r1 = abs(self.sigma**2 - self.p * self.sigma - self.q)
        r2 = abs(self.sigma_bar**2 - self.p * self.sigma_bar - self.q)
        r3 = abs(self.sigma - 0.5 * (self.p + math.sqrt(self.delta)))
        return (r1, r2, r3)


def metallic_ratio(p: int, q: int) -> MetallicParams:
    """Return the (p, q)-metallic constants.

    p and q must be positive integers; (1,1) gives the golden mean,
    (2,1) the silver mean, (1,2) the copper mean, and so on.
    """
    if not (isinstance(p, (int, np.integer)) and isinstance(q, (int, np.integer))):
        raise ValueError(f"p and q must be integers, got p={p!r}, q={q!r}")
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got p={p}, q={q}")
    delta = float(p * p + 4 * q)
    sigma = 0.5 * (p + math.sqrt(delta))
    return MetallicParams(p=int(p), q=int(q), sigma=sigma, sigma_bar=p - sigma, delta=delta)


# Named members of the metallic means family.
PRESETS: dict[str, tuple[int, int]] = {
    "golden": (1, 1),
    "silver": (2, 1),
    "bronze": (3, 1),
    "copper": (1, 2),
    "nickel": (1, 3),
    "subtle": (4, 1),
}

# Closed-form entries of the five named ambient structures, written out with
# their literal constants: (xy diagonal, xy off-diagonal magnitude, z entry).
# The z entry assumes lam*eps_j = +1.  The subtle mean has no named matrix.
NAMED_STRUCTURE_CONSTANTS: dict[str, tuple[float, float, float]] = {
    "golden": (0.5, math.sqrt(5.0) / 2.0, (1.0 + math.sqrt(5.0)) / 2.0),
    "silver": (1.0, math.sqrt(2.0), 1.0 + math.sqrt(2.0)),
    "bronze": (1.5, math.sqrt(13.0) / 2.0, (3.0 + math.sqrt(13.0)) / 2.0),
    "copper": (0.5, 1.5, 2.0),
    "nickel": (0.5, math.sqrt(13.0) / 2.0, (1.0 + math.sqrt(13.0)) / 2.0),
}


def preset_params(name: str) -> MetallicParams:
    try:
        p, q = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return metallic_ratio(p, q)


@dataclass(frozen=True, eq=False)
class AmbientStructure:
    """A metallic structure matrix on E^(2a+b) together with its metadata."""

    params: MetallicParams
    a: int
    b: int
    lam: int
    epsilon: tuple[int, ...]
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return 2 * self.a + self.b


@dataclass(frozen=True, eq=False)
class ProductStructure:
    """An almost-product structure: a symmetric matrix F with F^2 = I."""

    matrix: np.ndarray


def _check_signs(values, what: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v not in (-1, 1) for v in out):
        raise ValueError(f"{what} entries must be +1 or -1, got {values!r}")
    return out


def build_ambient_structure(
    params: MetallicParams,
    a: int,
    b: int,
    lam: int,
    epsilon=None,
) -> AmbientStructure:
    """Assemble the block ambient structure on E^(2a+b).

    epsilon defaults to lam in every z slot, i.e. lam*eps_j = +1, so the z
    coordinates carry the eigenvalue sigma.  Pass explicit signs to reach
    the sigma_bar branch (lam*eps_j = -1).
    """
    if a < 1 or b < 0:
        raise ValueError(f"need a >= 1 paired blocks and b >= 0 diagonal blocks, got a={a}, b={b}")
    (lam,) = _check_signs([lam], "lambda")
    if epsilon is None:
        epsilon = (lam,) * b
    epsilon = _check_signs(epsilon, "epsilon")
    if len(epsilon) != b:
        raise ValueError(f"epsilon must have length b={b}, got {len(epsilon)}")

    n = 2 * a + b
    half_p = 0.5 * params.p
    half_root = 0.5 * math.sqrt(params.delta)
    mat = np.zeros((n, n))
    for i in range(a):
        mat[i, i] = half_p
        mat[a + i, a + i] = half_p
        mat[i, a + i] = lam * half_root
        mat[a + i, i] = lam * half_root
    for j in range(b):
        mat[2 * a + j, 2 * a + j] = half_p + lam * epsilon[j] * half_root
    return AmbientStructure(params=params, a=a, b=b, lam=lam, epsilon=epsilon, matrix=mat)


def named_structure_matrix(name: str, a: int, b: int, lam: int) -> np.ndarray:
    """Assemble a named structure matrix from its literal constants.

    Independent of build_ambient_structure's sqrt(delta) arithmetic; used to
    cross-check the general constructor against the tabulated golden, silver,
    bronze, copper and nickel forms (lam*eps_j = +1 throughout).
    """
    diag, off, z_val = NAMED_STRUCTURE_CONSTANTS[name]
    n = 2 * a + b
    mat = np.zeros((n, n))
    for i in range(a):
        mat[i, i] = diag
        mat[a + i, a + i] = diag
        mat[i, a + i] = lam * off
        mat[a + i, i] = lam * off
    for j in range(b):
        mat[2 * a + j, 2 * a + j] = z_val
    return mat


def verify_polynomial(matrix: np.ndarray, params: MetallicParams) -> float:
    """Frobenius norm of J^2 - p*J - q*I."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    n = matrix.shape[0]
    return float(
        np.linalg.norm(matrix @ matrix - params.p * matrix - params.q * np.eye(n))
    )


def verify_compatibility(matrix: np.ndarray, metric: np.ndarray) -> float:
    """Frobenius norm of g*J - J^T*g, the self-adjointness defect of J.

    For the flat metric (g = I) this is the symmetry defect of J.
    """
    matrix = np.asarray(matrix, dtype=float)
    metric = np.asarray(metric, dtype=float)
    if matrix.shape != metric.shape or matrix.ndim != 2:
        raise ValueError(
            f"matrix and metric must be square of equal shape, got {matrix.shape} vs {metric.shape}"
        )
    return float(np.linalg.norm(metric @ matrix - matrix.T @ metric))


def bilinear_residual(matrix: np.ndarray, params: MetallicParams, x: np.ndarray, y: np.ndarray) -> float:
    """|<Jx, Jy> - p <x, Jy> - q <x, y>| for the flat metric."""
    jx = matrix @ x
    jy = matrix @ y
    return float(abs(jx @ jy - params.p * (x @ jy) - params.q * (x @ y)))


def spectral_residual(matrix: np.ndarray, params: MetallicParams) -> float:
    """Max distance of the spectrum of a symmetric J from {sigma, sigma_bar}."""
    eigs = np.linalg.eigvalsh(np.asarray(matrix, dtype=float))
    return float(
        np.max(np.minimum(np.abs(eigs - params.sigma), np.abs(eigs - params.sigma_bar)))
    )


def structure_from_product(F: ProductStructure, params: MetallicParams, branch: int) -> np.ndarray:
    """Metallic structure from an almost-product structure.

    branch +1 gives p/2*I + (2*sigma-p)/2 * F, branch -1 the companion with
    the opposite sign on F; the two sum to p*I.
    """
    (branch,) = _check_signs([branch], "branch")
    mat = np.asarray(F.matrix, dtype=float)
    n = mat.shape[0]
    defect = float(np.linalg.norm(mat @ mat - np.eye(n)))
    if defect > 1e-9:
        raise ValueError(f"F is not an almost-product structure: |F^2 - I| = {defect:.3e}")
    return 0.5 * params.p * np.eye(n) + branch * 0.5 * params.sqrt_delta * mat


def product_from_structure(matrix: np.ndarray, params: MetallicParams, branch: int) -> ProductStructure:
    """Almost-product structure from a metallic structure.

    F = +/- ( 2/(2*sigma-p) * J - p/(2*sigma-p) * I ).
    """
    (branch,) = _check_signs([branch], "branch")
    matrix = np.asarray(matrix, dtype=float)
    defect = verify_polynomial(matrix, params)
    if defect > 1e-9:
        raise ValueError(f"J does not satisfy the metallic law: residual {defect:.3e}")
    n = matrix.shape[0]
    scale = params.sqrt_delta
    F = branch * (2.0 / scale * matrix - params.p / scale * np.eye(n))
    return ProductStructure(matrix=F)
