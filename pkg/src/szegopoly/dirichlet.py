"""Exact polynomial solution of the Dirichlet problem on ellipsoids.

Because an ellipsoid's defining polynomial r has degree two and the
Laplacian lowers degree by two, the map q -> Lap(r*q) sends polynomials of
degree <= m to polynomials of degree <= m.  On an ellipsoid that map is
invertible, which turns the Dirichlet problem with polynomial data p into
a single exact linear solve: take q with Lap(r*q) = Lap(p); then
u = p - r*q is harmonic, agrees with p on the boundary (their difference
is a multiple of r), and has degree <= deg p.

In the graded monomial basis the map is block triangular: the degree-d
image of a degree-d monomial comes only from the top homogeneous part of
r.  The determinant is certified exactly as the product of the diagonal
(homogeneous) blocks, and elimination on the assembled matrix stays cheap
because sub-block entries vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import Ellipse, Ellipsoid
from .linalg import InternalCheckError, det_exact, solve_exact
from .polynomials import (
    PolyRealN,
    PolyZZbar,
    monomials_real,
    xy_to_zzbar,
    zzbar_to_xy,
)
from .rational import GaussianRational, ZERO


@dataclass(frozen=True)
class FischerSystem:
    """Exact matrix of q -> Lap(r*q) on the monomial basis of degree <= m."""

    degree_bound: int
    basis_order: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[GaussianRational, ...], ...]
    determinant: GaussianRational

    @property
    def size(self) -> int:
        return len(self.basis_order)


_fischer_cache: dict[tuple[Ellipsoid, int], FischerSystem] = {}


def fischer_system(e: Ellipsoid, m: int) -> FischerSystem:
    """Build (and certify) the Fischer matrix for degree bound m >= 0."""
    if m < 0:
        raise ValueError("degree bound must be nonnegative")
    cached = _fischer_cache.get((e, m))
    if cached is not None:
        return cached

    r = e.defining_poly()
    basis = monomials_real(e.dim, m)
    index = {alpha: i for i, alpha in enumerate(basis)}
    size = len(basis)
    columns = []
    for alpha in basis:
        image = (r * PolyRealN.monomial(alpha)).laplacian()
        col = [ZERO] * size
        for key, c in image.terms():
            if sum(key) > sum(alpha):
                raise InternalCheckError(
                    "Fischer image raised the degree; defining polynomial "
                    "is not degree two"
                )
            col[index[key]] = c
        columns.append(col)
    matrix = tuple(
        tuple(columns[j][i] for j in range(size)) for i in range(size)
    )

    det = _block_determinant(e, m, basis, index, matrix)
    if not det:
        raise InternalCheckError(
            "singular Fischer system on a positive definite ellipsoid"
        )
    system = FischerSystem(
        degree_bound=m, basis_order=tuple(basis), matrix=matrix, determinant=det
    )
    _fischer_cache[(e, m)] = system
    return system


def _block_determinant(e, m, basis, index, matrix) -> GaussianRational:
    # Block triangular in the graded basis: det = product over degrees d of
    # the determinant of the homogeneous block (rows and columns of degree d).
    det = GaussianRational(1)
    for d in range(m + 1):
        block_idx = [index[alpha] for alpha in basis if sum(alpha) == d]
        block = [[matrix[i][j] for j in block_idx] for i in block_idx]
        det = det * det_exact(block)
        if not det:
            break
    return det


def harmonic_extension(e: Ellipsoid, p: PolyRealN) -> PolyRealN:
    """The harmonic polynomial with the same boundary values as p.

    Exact: the result u satisfies Lap(u) = 0, deg(u) <= deg(p), and p - u
    is a polynomial multiple of the defining polynomial of e.
    """
    if p.dim != e.dim:
        raise ValueError(f"polynomial dimension {p.dim} != domain dimension {e.dim}")
    if p.degree() <= 1:
        return p
    m = p.degree() - 2
    system = fischer_system(e, m)
    g = p.laplacian()
    rhs = [g.coefficient(alpha) for alpha in system.basis_order]
    solution = solve_exact(system.matrix, rhs)
    if solution is None:
        raise InternalCheckError("certified-invertible Fischer system failed to solve")
    q = PolyRealN(
        e.dim,
        {alpha: c for alpha, c in zip(system.basis_order, solution) if c},
    )
    return p - e.defining_poly() * q


def harmonic_extension_zzbar(e: Ellipse, p: PolyZZbar) -> PolyZZbar:
    """Planar harmonic extension for z/zbar polynomials on an ellipse."""
    u = harmonic_extension(e.to_ellipsoid(), zzbar_to_xy(p))
    return xy_to_zzbar(u)


def is_harmonic(p: PolyRealN | PolyZZbar) -> bool:
    """Exact test: the Laplacian vanishes identically."""
    return p.laplacian().is_zero()
