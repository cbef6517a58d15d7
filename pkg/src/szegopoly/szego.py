"""Exact weighted Szego projection of polynomials on a planar ellipse.

The weight is 1/|dbar r| on the boundary, with r the degree-two defining
polynomial of the ellipse.  For that weight, the composite operator

    A(p) = (d r) * dbar(E p)

(E = harmonic extension, d/dbar = Wirtinger derivatives) maps polynomials
of degree <= N to polynomials of degree <= N whose boundary values lie in
the orthogonal complement of the weighted Hardy space.  Every polynomial f
therefore splits exactly as

    f = h + A(p) + r*q

with h holomorphic of degree <= deg f; h is the weighted Szego projection
of f.  The solver assembles the finite linear system over the unknown
coefficient blocks (h, p, q) and solves it exactly; h is unique even
though (p, q) are not, and verify_decomposition re-checks every claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dirichlet import harmonic_extension_zzbar
from .domains import Ellipse
from .linalg import InternalCheckError, solve_exact
from .polynomials import PolyZZbar, monomials_zzbar
from .rational import GaussianRational, ZERO


def operator_A(e: Ellipse, p: PolyZZbar) -> PolyZZbar:
    """(d r) * dbar(E p): degree non-increasing, kills holomorphic inputs."""
    return e.d_r() * harmonic_extension_zzbar(e, p).d_dzbar()


@dataclass(frozen=True)
class SzegoDecomposition:
    """Certified output of szego_project: input = projection + A(preimage) + r*cofactor."""

    input: PolyZZbar
    projection: PolyZZbar
    preimage: PolyZZbar
    cofactor: PolyZZbar
    N: int

    def to_json_dict(self) -> dict:
        from .parsing import format_poly_zzbar, poly_zzbar_to_json

        return {
            "N": self.N,
            "input": format_poly_zzbar(self.input),
            "projection": format_poly_zzbar(self.projection),
            "preimage": format_poly_zzbar(self.preimage),
            "cofactor": format_poly_zzbar(self.cofactor),
            "projection_terms": poly_zzbar_to_json(self.projection),
        }


# Columns of the decomposition system depend only on (ellipse, N); they are
# cached so batches of projections on one ellipse assemble quickly.
_column_cache: dict[tuple[Ellipse, int], list[list[GaussianRational]]] = {}


def _system_columns(e: Ellipse, N: int, rows: list[tuple[int, int]], row_index):
    cached = _column_cache.get((e, N))
    if cached is not None:
        return cached

    r = e.defining_poly_zzbar()
    columns: list[list[GaussianRational]] = []

    def column_of(poly: PolyZZbar) -> list[GaussianRational]:
        col = [ZERO] * len(rows)
        for key, c in poly.terms():
            col[row_index[key]] = c
        return col

    # h block: holomorphic monomials z^k, k <= N.
    for k in range(N + 1):
        columns.append(column_of(PolyZZbar.monomial(k, 0)))
    # p block: A applied to every monomial of degree <= N.
    for a, b in monomials_zzbar(N):
        columns.append(column_of(operator_A(e, PolyZZbar.monomial(a, b))))
    # q block: r times every monomial of degree <= N - 2.
    if N >= 2:
        for a, b in monomials_zzbar(N - 2):
            columns.append(column_of(r * PolyZZbar.monomial(a, b)))

    _column_cache[(e, N)] = columns
    return columns


def szego_project(
    e: Ellipse,
    f: PolyZZbar,
    *,
    ambient_degree: int | None = None,
    pivot: str = "small",
) -> SzegoDecomposition:
    """Split f = h + A(p) + r*q exactly and return the decomposition.

    h is the weighted Szego projection of f for the weight 1/|dbar r|.
    ambient_degree widens the polynomial space beyond deg f; uniqueness of
    the orthogonal projection forces h to be independent of that widening,
    and the tests check it rather than assume it.  pivot selects the exact
    solver's pivoting order, for cross-checking uniqueness of h.
    """
    N = max(f.degree(), 0)
    if ambient_degree is not None:
        if ambient_degree < N:
            raise ValueError(
                f"ambient degree {ambient_degree} is below deg f = {N}"
            )
        N = ambient_degree

    rows = monomials_zzbar(N)
    row_index = {key: i for i, key in enumerate(rows)}
    columns = _system_columns(e, N, rows, row_index)
    matrix = [
        [columns[j][i] for j in range(len(columns))] for i in range(len(rows))
    ]
    rhs = [f.coefficient(a, b) for a, b in rows]

    solution = solve_exact(matrix, rhs, pivot=pivot)
    if solution is None:
        raise InternalCheckError(
            "Szego decomposition system is inconsistent; the operator "
            "A should reach every residue class"
        )

    n_h = N + 1
    p_monos = monomials_zzbar(N)
    n_p = len(p_monos)
    q_monos = monomials_zzbar(N - 2) if N >= 2 else []

    h = PolyZZbar({(k, 0): solution[k] for k in range(n_h)})
    p = PolyZZbar(
        {key: c for key, c in zip(p_monos, solution[n_h : n_h + n_p]) if c}
    )
    q = PolyZZbar(
        {key: c for key, c in zip(q_monos, solution[n_h + n_p :]) if c}
    )
    return SzegoDecomposition(input=f, projection=h, preimage=p, cofactor=q, N=N)


def kernel_membership(e: Ellipse, p: PolyZZbar) -> bool:
    """Whether p = g + r*q for some holomorphic g and polynomial q.

    Those p are exactly the ones the operator A annihilates; decided by one
    exact linear solve.
    """
    N = max(p.degree(), 0)
    rows = monomials_zzbar(N)
    row_index = {key: i for i, key in enumerate(rows)}
    r = e.defining_poly_zzbar()

    columns: list[list[GaussianRational]] = []

    def column_of(poly: PolyZZbar):
        col = [ZERO] * len(rows)
        for key, c in poly.terms():
            col[row_index[key]] = c
        return col

    for k in range(N + 1):
        columns.append(column_of(PolyZZbar.monomial(k, 0)))
    if N >= 2:
        for a, b in monomials_zzbar(N - 2):
            columns.append(column_of(r * PolyZZbar.monomial(a, b)))

    matrix = [
        [columns[j][i] for j in range(len(columns))] for i in range(len(rows))
    ]
    rhs = [p.coefficient(a, b) for a, b in rows]
    return solve_exact(matrix, rhs) is not None


@dataclass(frozen=True)
class DecompositionCertificate:
    """Per-invariant exact re-check of a SzegoDecomposition."""

    checks: dict = field(default_factory=dict)
    residual: PolyZZbar = field(default_factory=PolyZZbar.zero)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        from .parsing import format_poly_zzbar

        return {
            "passed": self.passed,
            "checks": dict(self.checks),
            "residual": format_poly_zzbar(self.residual),
        }


def verify_decomposition(d: SzegoDecomposition, e: Ellipse) -> DecompositionCertificate:
    """Exactly re-check every invariant the decomposition claims."""
    r = e.defining_poly_zzbar()
    residual = d.input - d.projection - operator_A(e, d.preimage) - r * d.cofactor
    checks = {
        "residual_zero": residual.is_zero(),
        "projection_holomorphic": d.projection.is_holomorphic(),
        "projection_degree": d.projection.degree() <= d.N,
        "input_degree": d.input.degree() <= d.N,
        "preimage_degree": d.preimage.degree() <= d.N,
        "cofactor_degree": (
            d.cofactor.is_zero() if d.N < 2 else d.cofactor.degree() <= d.N - 2
        ),
    }
    return DecompositionCertificate(checks=checks, residual=residual)
