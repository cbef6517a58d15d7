"""Floating-point boundary and area quadrature oracle.

Everything here is an independent numerical cross-check of the exact
symbolic machinery: trapezoid-rule quadrature on the ellipse boundary
(spectrally accurate for smooth periodic integrands), weighted and
unweighted numerical Szego projections as least-squares fits in the grid
inner product, a Bergman projection via tensor Gauss-Legendre quadrature
in elliptic-polar coordinates, and the disc-characterization experiments
built on them.

The holomorphic basis is the centered, scaled monomial family
phi_k(z) = ((z - center)/s)^k with s = max(a, b); raw monomials on an
eccentric ellipse become catastrophically ill-conditioned past degree ~15,
so the Vandermonde system is solved by SVD-backed least squares and the
condition number is estimated and reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .dirichlet import is_harmonic
from .domains import Ellipse
from .polynomials import PolyRealN, PolyZZbar, xy_to_zzbar
from .rational import GaussianRational
from .szego import szego_project

CONDITION_WARN_THRESHOLD = 1e10


@dataclass
class BoundaryGrid:
    """Trapezoid nodes on the ellipse boundary with weights and tangents."""

    ellipse: Ellipse
    M: int
    weighted: bool
    t: np.ndarray        # parameter values 2*pi*j/M
    z: np.ndarray        # boundary points, complex
    ds: np.ndarray       # arclength quadrature weights
    omega: np.ndarray    # boundary weight values (1/|dbar r|, or 1)
    tangent: np.ndarray  # unit tangents i * dbar_r / |dbar_r|

    def perimeter(self) -> float:
        return float(np.sum(self.ds))


def boundary_grid(e: Ellipse, M: int, weighted: bool = True) -> BoundaryGrid:
    """Build the M-node boundary grid; M must be even and at least 16."""
    if M < 16 or M % 2 != 0:
        raise ValueError(f"node count must be even and >= 16, got {M}")
    a, b = float(e.a), float(e.b)
    h, k = float(e.h), float(e.k)
    t = 2.0 * np.pi * np.arange(M) / M
    x = h + a * np.cos(t)
    y = k + b * np.sin(t)
    z = x + 1j * y
    speed = np.hypot(a * np.sin(t), b * np.cos(t))
    ds = speed * (2.0 * np.pi / M)
    # dbar r = ((x-h)/a^2 + i (y-k)/b^2) for r = (x-h)^2/a^2 + (y-k)^2/b^2 - 1
    dbar_r = (x - h) / a**2 + 1j * (y - k) / b**2
    grad_norm = np.abs(dbar_r)
    omega = 1.0 / grad_norm if weighted else np.ones(M)
    tangent = 1j * dbar_r / grad_norm
    return BoundaryGrid(
        ellipse=e, M=M, weighted=weighted, t=t, z=z, ds=ds, omega=omega,
        tangent=tangent,
    )


def inner_product(fvals: np.ndarray, gvals: np.ndarray, grid: BoundaryGrid) -> complex:
    """Grid approximation of the boundary inner product (f, g) = sum f conj(g) w ds."""
    fvals = np.asarray(fvals)
    gvals = np.asarray(gvals)
    if fvals.shape != (grid.M,) or gvals.shape != (grid.M,):
        raise ValueError(
            f"value arrays must have shape ({grid.M},), got {fvals.shape} and {gvals.shape}"
        )
    return complex(np.sum(fvals * np.conj(gvals) * grid.omega * grid.ds))


def poly_values(f, z: np.ndarray) -> np.ndarray:
    """Evaluate a PolyZZbar, PolyRealN (dim 2) or callable on complex points."""
    z = np.asarray(z, dtype=complex)
    if isinstance(f, PolyRealN):
        if f.dim != 2:
            raise ValueError("only 2-variable real polynomials map to the plane")
        f = xy_to_zzbar(f)
    if isinstance(f, PolyZZbar):
        zb = np.conj(z)
        out = np.zeros_like(z)
        for (p, q), c in f.terms():
            out += complex(c) * z**p * zb**q
        return out
    return np.asarray(f(z), dtype=complex)


@dataclass
class NumericalProjection:
    """Least-squares holomorphic fit in a grid inner product."""

    coefficients: np.ndarray  # for phi_k(z) = ((z - center)/scale)^k
    center: complex
    scale: float
    residual_norm: float
    condition_estimate: float
    warning: str | None = None

    def basis_degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        w = (np.asarray(z, dtype=complex) - self.center) / self.scale
        return np.polynomial.polynomial.polyval(w, self.coefficients)

    def to_json_dict(self) -> dict:
        return {
            "basis": "((z - center)/scale)^k",
            "center": [self.center.real, self.center.imag],
            "scale": self.scale,
            "coefficients": [[c.real, c.imag] for c in self.coefficients],
            "residual_norm": self.residual_norm,
            "condition_estimate": self.condition_estimate,
            "warning": self.warning,
        }


def _basis_matrix(z: np.ndarray, e: Ellipse, degree: int) -> tuple[np.ndarray, complex, float]:
    center = complex(float(e.h), float(e.k))
    scale = float(max(e.a, e.b))
    w = (z - center) / scale
    V = np.vander(w, degree + 1, increasing=True)
    return V, center, scale


def _weighted_lstsq(V, fvals, weights) -> tuple[np.ndarray, float, float, str | None]:
    sqrt_w = np.sqrt(weights)
    A = V * sqrt_w[:, None]
    rhs = fvals * sqrt_w
    coeffs, _, _, _ = np.linalg.lstsq(A, rhs, rcond=None)
    residual = float(np.linalg.norm(A @ coeffs - rhs))
    cond = float(np.linalg.cond(A))
    warning = None
    if cond > CONDITION_WARN_THRESHOLD:
        warning = (
            f"basis condition estimate {cond:.3e} exceeds "
            f"{CONDITION_WARN_THRESHOLD:.0e}; coefficients may be inaccurate"
        )
    return coeffs, residual, cond, warning


def numerical_szego(grid: BoundaryGrid, f, basis_degree: int) -> NumericalProjection:
    """Project f onto span{phi_0..phi_basis_degree} in the grid inner product."""
    if basis_degree < 0:
        raise ValueError("basis degree must be nonnegative")
    if basis_degree + 1 > grid.M // 4:
        raise ValueError(
            f"basis degree {basis_degree} too large for M = {grid.M} "
            "(need basis_degree + 1 <= M/4)"
        )
    fvals = poly_values(f, grid.z)
    V, center, scale = _basis_matrix(grid.z, grid.ellipse, basis_degree)
    coeffs, residual, cond, warning = _weighted_lstsq(
        V, fvals, grid.omega * grid.ds
    )
    return NumericalProjection(
        coefficients=coeffs, center=center, scale=scale,
        residual_norm=residual, condition_estimate=cond, warning=warning,
    )


# -- area (Bergman) quadrature ------------------------------------------------


def area_quadrature(e: Ellipse, quad_order: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss-Legendre nodes and weights for integrals over the ellipse.

    Elliptic-polar coordinates x = h + a*rho*cos(theta), y = k + b*rho*sin(theta)
    with area element a*b*rho drho dtheta; rho on [0, 1], theta on [0, 2*pi].
    """
    nodes, weights = np.polynomial.legendre.leggauss(quad_order)
    rho = 0.5 * (nodes + 1.0)
    w_rho = 0.5 * weights
    theta = np.pi * (nodes + 1.0)
    w_theta = np.pi * weights
    a, b = float(e.a), float(e.b)
    h, k = float(e.h), float(e.k)
    R, T = np.meshgrid(rho, theta, indexing="ij")
    z = (h + a * R * np.cos(T)) + 1j * (k + b * R * np.sin(T))
    W = a * b * R * np.outer(w_rho, w_theta)
    return z.ravel(), W.ravel()


def numerical_bergman(
    e: Ellipse, f, basis_degree: int, quad_order: int = 48
) -> NumericalProjection:
    """Project f onto holomorphic polynomials in the area inner product."""
    if basis_degree < 0:
        raise ValueError("basis degree must be nonnegative")
    f_degree = f.degree() if isinstance(f, (PolyZZbar, PolyRealN)) else 0
    min_order = 2 * (basis_degree + max(f_degree, 0)) + 4
    if quad_order < min_order:
        raise ValueError(
            f"quadrature order {quad_order} too low; need >= {min_order} "
            f"for basis degree {basis_degree} and data degree {f_degree}"
        )
    z, w = area_quadrature(e, quad_order)
    fvals = poly_values(f, z)
    V, center, scale = _basis_matrix(z, e, basis_degree)
    coeffs, residual, cond, warning = _weighted_lstsq(V, fvals, w)
    return NumericalProjection(
        coefficients=coeffs, center=center, scale=scale,
        residual_norm=residual, condition_estimate=cond, warning=warning,
    )


def bergman_residual_orthogonality(
    e: Ellipse, f, proj: NumericalProjection, quad_order: int = 48
) -> float:
    """Max |<f - proj, phi_k>| over the basis, in the area inner product."""
    z, w = area_quadrature(e, quad_order)
    resid = poly_values(f, z) - proj.evaluate(z)
    V, _, _ = _basis_matrix(z, e, proj.basis_degree())
    inner = np.conj(V.T) @ (w * resid)
    return float(np.max(np.abs(inner)))


# -- exact-to-float basis conversion -------------------------------------------


def holomorphic_coeffs_in_scaled_basis(
    p: PolyZZbar, e: Ellipse, degree: int
) -> np.ndarray:
    """Exact coefficients of a holomorphic p in the phi basis, then floats.

    Substitutes z = center + s*w with rational center and scale, expands by
    the binomial theorem exactly, and converts at the end.
    """
    if not p.is_holomorphic():
        raise ValueError("basis conversion requires a holomorphic polynomial")
    if p.degree() > degree:
        raise ValueError(
            f"polynomial degree {p.degree()} exceeds basis degree {degree}"
        )
    center = GaussianRational(e.h, e.k)
    scale = max(e.a, e.b)
    out = [GaussianRational(0) for _ in range(degree + 1)]
    for (n, _), c in p.terms():
        # (center + s*w)^n
        for j in range(n + 1):
            out[j] = out[j] + c * comb(n, j) * center ** (n - j) * GaussianRational(scale**j)
    return np.array([complex(v) for v in out])


# -- experiment reports --------------------------------------------------------


@dataclass
class SzbarReport:
    """Numerical (unweighted) Szego projection of zbar, with disc diagnostics."""

    ellipse: Ellipse
    M: int
    basis_degree: int
    projection: NumericalProjection
    deviation_from_constant: float
    deviation_from_span_1_z: float

    def to_json_dict(self) -> dict:
        return {
            "experiment": "szbar_constancy",
            "ellipse": self.ellipse.to_json_dict(),
            "M": self.M,
            "basis_degree": self.basis_degree,
            "coefficients": [[c.real, c.imag] for c in self.projection.coefficients],
            "deviations": {
                "from_constant": self.deviation_from_constant,
                "from_span_1_z": self.deviation_from_span_1_z,
            },
            "condition_estimate": self.projection.condition_estimate,
        }


def szbar_constancy_experiment(
    e: Ellipse, M: int = 1024, basis_degree: int = 12
) -> SzbarReport:
    """Measure how far the unweighted Szego projection of zbar is from constant.

    On a disc the projection is the conjugate of the center; on any other
    real-analytic domain it cannot be constant, and on an eccentric ellipse
    it cannot even lie in span{1, z}.
    """
    grid = boundary_grid(e, M, weighted=False)
    proj = numerical_szego(grid, lambda z: np.conj(z), basis_degree)
    coeffs = proj.coefficients
    dev_const = float(np.linalg.norm(coeffs[1:]))
    dev_span = float(np.linalg.norm(coeffs[2:]))
    return SzbarReport(
        ellipse=e, M=M, basis_degree=basis_degree, projection=proj,
        deviation_from_constant=dev_const, deviation_from_span_1_z=dev_span,
    )


def matched_disc_floor(e: Ellipse, M: int = 1024, basis_degree: int = 12) -> float:
    """Quadrature floor: the zbar nonconstancy measured on a matched disc.

    The comparison disc has the same perimeter (hence comparable node
    spacing) and the same node count; its true projection is constant, so
    anything nonzero is numerical noise.
    """
    perimeter = boundary_grid(e, M).perimeter()
    radius = Fraction(perimeter / (2.0 * math.pi)).limit_denominator(10**6)
    disc = Ellipse(radius, radius)
    return szbar_constancy_experiment(disc, M, basis_degree).deviation_from_constant


# -- affine normalization of S(zbar) = a*z + b ---------------------------------


@dataclass(frozen=True)
class AffineNormalization:
    rotation: complex
    shift: complex

    def apply(self, z: complex) -> complex:
        return self.rotation * (z - self.shift)


def normalize_affine(a_coeff: complex, b_coeff: complex) -> AffineNormalization:
    """Map normalizing a domain whose zbar-projection is a*z + b.

    Under w = e^{-i arg(a)/2} (z - (conj(a) b + conj(b))/(1 - |a|^2)) the
    projection of wbar becomes |a| w.  Singular when |a| = 1.
    """
    a = complex(a_coeff)
    b = complex(b_coeff)
    if abs(abs(a) - 1.0) < 1e-15:
        raise ValueError("normalization is singular when |a| = 1")
    rotation = np.exp(-0.5j * np.angle(a))
    shift = (np.conj(a) * b + np.conj(b)) / (1.0 - abs(a) ** 2)
    return AffineNormalization(rotation=complex(rotation), shift=complex(shift))


# -- Szego/Bergman agreement on harmonic data (disc case) -----------------------


@dataclass
class HarmonicCompareReport:
    ellipse: Ellipse
    szego: NumericalProjection
    bergman: NumericalProjection
    max_coeff_deviation: float

    def to_json_dict(self) -> dict:
        return {
            "experiment": "harmonic_szego_bergman",
            "ellipse": self.ellipse.to_json_dict(),
            "max_coeff_deviation": self.max_coeff_deviation,
            "szego_coefficients": [[c.real, c.imag] for c in self.szego.coefficients],
            "bergman_coefficients": [
                [c.real, c.imag] for c in self.bergman.coefficients
            ],
        }


def harmonic_szego_bergman_check(
    disc: Ellipse,
    p: PolyRealN,
    basis_degree: int = 12,
    M: int = 1024,
    quad_order: int = 48,
) -> HarmonicCompareReport:
    """On a disc, the (unweighted) Szego and Bergman projections of harmonic
    data agree; measure the numerical deviation."""
    if not disc.is_disc():
        raise ValueError("this comparison is specific to discs (a = b)")
    if not is_harmonic(p):
        raise ValueError("input polynomial is not harmonic")
    grid = boundary_grid(disc, M, weighted=False)
    s_proj = numerical_szego(grid, p, basis_degree)
    b_proj = numerical_bergman(disc, p, basis_degree, quad_order)
    deviation = float(np.max(np.abs(s_proj.coefficients - b_proj.coefficients)))
    return HarmonicCompareReport(
        ellipse=disc, szego=s_proj, bergman=b_proj,
        max_coeff_deviation=deviation,
    )


# -- symbolic versus numeric cross-validation ------------------------------------


@dataclass
class CompareReport:
    ellipse: Ellipse
    M: int
    basis_degree: int
    max_coeff_deviation: float
    symbolic_coefficients: np.ndarray
    numeric: NumericalProjection

    def to_json_dict(self) -> dict:
        return {
            "experiment": "compare_symbolic_numeric",
            "ellipse": self.ellipse.to_json_dict(),
            "M": self.M,
            "basis_degree": self.basis_degree,
            "max_coeff_deviation": self.max_coeff_deviation,
            "symbolic_coefficients": [
                [c.real, c.imag] for c in self.symbolic_coefficients
            ],
            "numeric_coefficients": [
                [c.real, c.imag] for c in self.numeric.coefficients
            ],
            "condition_estimate": self.numeric.condition_estimate,
        }


def compare_symbolic_numeric(
    e: Ellipse, f: PolyZZbar, M: int = 1024, basis_degree: int = 12
) -> CompareReport:
    """Exact weighted projection versus the quadrature least-squares one."""
    decomposition = szego_project(e, f)
    exact = holomorphic_coeffs_in_scaled_basis(
        decomposition.projection, e, basis_degree
    )
    grid = boundary_grid(e, M, weighted=True)
    numeric = numerical_szego(grid, f, basis_degree)
    deviation = float(np.max(np.abs(exact - numeric.coefficients)))
    return CompareReport(
        ellipse=e, M=M, basis_degree=basis_degree,
        max_coeff_deviation=deviation,
        symbolic_coefficients=exact, numeric=numeric,
    )
