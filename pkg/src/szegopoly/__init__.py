"""Weighted Szego projections of polynomials on planar ellipses.

Exact core: sparse polynomials over the Gaussian rationals with Wirtinger
and Laplace operators, polynomial Dirichlet solutions on ellipsoids via an
invertible Fischer-type operator, and the exact decomposition
f = h + (d r) * dbar(E p) + r*q whose holomorphic part h is the Szego
projection of f for the boundary weight 1/|dbar r|.

Numerical side: boundary and area quadrature grids, least-squares Szego
and Bergman projections, and disc-characterization experiments, all used
as independent cross-checks of the exact results.
"""

from .rational import GaussianRational
from .polynomials import (
    PolyRealN,
    PolyZZbar,
    divide_exact,
    monomials_real,
    monomials_zzbar,
    xy_to_zzbar,
    zzbar_to_xy,
)
from .parsing import (
    ParseError,
    format_poly_real,
    format_poly_zzbar,
    parse_polynomial,
    parse_poly_real,
    parse_poly_zzbar,
    poly_real_from_json,
    poly_real_to_json,
    poly_zzbar_from_json,
    poly_zzbar_to_json,
)
from .linalg import InternalCheckError, det_exact, solve_exact
from .domains import Ellipse, Ellipsoid
from .dirichlet import (
    FischerSystem,
    fischer_system,
    harmonic_extension,
    harmonic_extension_zzbar,
    is_harmonic,
)
from .szego import (
    DecompositionCertificate,
    SzegoDecomposition,
    kernel_membership,
    operator_A,
    szego_project,
    verify_decomposition,
)
from .boundary import (
    BoundaryGrid,
    CompareReport,
    HarmonicCompareReport,
    NumericalProjection,
    SzbarReport,
    boundary_grid,
    compare_symbolic_numeric,
    harmonic_szego_bergman_check,
    inner_product,
    matched_disc_floor,
    normalize_affine,
    numerical_bergman,
    numerical_szego,
    poly_values,
    szbar_constancy_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "PolyRealN",
    "PolyZZbar",
    "divide_exact",
    "monomials_real",
    "monomials_zzbar",
    "xy_to_zzbar",
    "zzbar_to_xy",
    "ParseError",
    "format_poly_real",
    "format_poly_zzbar",
    "parse_polynomial",
    "parse_poly_real",
    "parse_poly_zzbar",
    "poly_real_from_json",
    "poly_real_to_json",
    "poly_zzbar_from_json",
    "poly_zzbar_to_json",
    "InternalCheckError",
    "det_exact",
    "solve_exact",
    "Ellipse",
    "Ellipsoid",
    "FischerSystem",
    "fischer_system",
    "harmonic_extension",
    "harmonic_extension_zzbar",
    "is_harmonic",
    "DecompositionCertificate",
    "SzegoDecomposition",
    "kernel_membership",
    "operator_A",
    "szego_project",
    "verify_decomposition",
    "BoundaryGrid",
    "CompareReport",
    "HarmonicCompareReport",
    "NumericalProjection",
    "SzbarReport",
    "boundary_grid",
    "compare_symbolic_numeric",
    "harmonic_szego_bergman_check",
    "inner_product",
    "matched_disc_floor",
    "normalize_affine",
    "numerical_bergman",
    "numerical_szego",
    "poly_values",
    "szbar_constancy_experiment",
    "__version__",
]
