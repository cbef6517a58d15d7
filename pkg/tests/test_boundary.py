"""Numerical harness: grids, inner products, projections, experiments."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from szegopoly.boundary import (
    bergman_residual_orthogonality,
    boundary_grid,
    compare_symbolic_numeric,
    harmonic_szego_bergman_check,
    holomorphic_coeffs_in_scaled_basis,
    inner_product,
    matched_disc_floor,
    normalize_affine,
    numerical_bergman,
    numerical_szego,
    poly_values,
    szbar_constancy_experiment,
)
from szegopoly.domains import Ellipse
from szegopoly.polynomials import PolyRealN, PolyZZbar
from szegopoly.sampling import random_poly_zzbar, unit_box_coefficient

Z = PolyZZbar.var_z()
ZB = PolyZZbar.var_zbar()
E21 = Ellipse(2, 1)
DISC = Ellipse(1, 1)

# Perimeter of the 2x1 ellipse, 8*E(3/4); pinned from a high-M trapezoid run
# that agrees with the complete-elliptic-integral value.
PERIMETER_21 = 9.688448220547675


# -- grids ------------------------------------------------------------------------

def test_grid_nodes_on_unit_circle():
    g = boundary_grid(DISC, 16, weighted=False)
    # first node at angle 0, quarter turn at index 4
    assert g.z[0] == pytest.approx(1.0)
    assert g.z[4] == pytest.approx(1j)
    assert g.z[8] == pytest.approx(-1.0)
    assert np.allclose(g.ds, 2 * np.pi / 16)
    assert np.allclose(g.omega, 1.0)
    # unit tangent is i*z on the unit circle
    assert np.allclose(g.tangent, 1j * g.z)


def test_grid_tangent_is_unit():
    g = boundary_grid(E21, 64)
    assert np.allclose(np.abs(g.tangent), 1.0)


def test_grid_weight_positive_and_matches_gradient():
    g = boundary_grid(E21, 64, weighted=True)
    assert np.all(g.omega > 0)
    # at t=0: z = 2, dbar r = (x/a^2) = 1/2, so omega = 2
    assert g.omega[0] == pytest.approx(2.0)


def test_grid_rejects_bad_node_counts():
    with pytest.raises(ValueError):
        boundary_grid(DISC, 8)
    with pytest.raises(ValueError):
        boundary_grid(DISC, 17)


def test_perimeter_value_and_convergence():
    values = {M: boundary_grid(E21, M).perimeter() for M in (64, 128, 256, 1024, 8192)}
    assert values[1024] == pytest.approx(PERIMETER_21, abs=1e-12)
    assert abs(values[1024] - values[8192]) < 1e-12
    # spectral convergence: each doubling gains >1e2 until the float floor
    e64 = abs(values[64] - values[8192])
    e128 = abs(values[128] - values[8192])
    assert e64 < 1e-10  # already at/near the floor for this smooth integrand


def test_quadrature_spectral_convergence_nontrivial_integrand():
    # <f, 1> for f = z zbar on the 2x1 boundary; errors vs M=2048 shrink by
    # factors > 1e2 per doubling until the float floor.
    f = PolyZZbar.monomial(1, 1)
    reference = None
    errors = {}
    for M in (64, 128, 256, 2048):
        g = boundary_grid(E21, M, weighted=False)
        val = inner_product(poly_values(f, g.z), np.ones(M), g)
        if M == 2048:
            reference = val
        else:
            errors[M] = val
    floor = 1e-13 * abs(reference)
    prev = None
    for M in (64, 128, 256):
        err = abs(errors[M] - reference)
        if prev is not None and prev > floor:
            assert err < prev / 1e2 or err < floor
        prev = err


# -- inner products ------------------------------------------------------------------

def test_inner_product_examples_unit_circle():
    g = boundary_grid(DISC, 256, weighted=False)
    one = np.ones(256)
    assert inner_product(one, one, g) == pytest.approx(2 * np.pi, rel=1e-12)
    assert abs(inner_product(g.z, np.conj(g.z), g)) < 1e-12
    assert inner_product(g.z, g.z, g) == pytest.approx(2 * np.pi, rel=1e-12)


def test_inner_product_length_mismatch():
    g = boundary_grid(DISC, 16)
    with pytest.raises(ValueError):
        inner_product(np.ones(8), np.ones(16), g)


# -- numerical Szego projection -------------------------------------------------------

def test_szego_zbar_on_unit_circle_vanishes():
    g = boundary_grid(DISC, 256, weighted=False)
    proj = numerical_szego(g, lambda z: np.conj(z), 8)
    assert np.max(np.abs(proj.coefficients)) < 1e-12


def test_szego_zbar_on_shifted_disc_is_center_conjugate():
    g = boundary_grid(Ellipse(1, 1, 1, 0), 256, weighted=False)
    proj = numerical_szego(g, lambda z: np.conj(z), 8)
    assert proj.coefficients[0] == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(proj.coefficients[1:])) < 1e-12


def test_szego_weighted_zbar_matches_exact():
    g = boundary_grid(E21, 1024, weighted=True)
    proj = numerical_szego(g, ZB, 12)
    # exact projection is (3/5) z = (6/5) phi_1 in the scale-2 basis
    expected = np.zeros(13, dtype=complex)
    expected[1] = 1.2
    assert np.max(np.abs(proj.coefficients - expected)) < 1e-10


def test_szego_recovers_member_of_span():
    g = boundary_grid(E21, 256, weighted=True)
    f = Z**3 - Z * 2 + PolyZZbar.constant(1)
    proj = numerical_szego(g, f, 8)
    exact = holomorphic_coeffs_in_scaled_basis(f, E21, 8)
    assert np.max(np.abs(proj.coefficients - exact)) < 1e-12


def test_szego_projection_idempotent():
    g = boundary_grid(E21, 512, weighted=True)
    proj = numerical_szego(g, ZB * Z, 10)
    again = numerical_szego(g, lambda z: proj.evaluate(z), 10)
    assert np.max(np.abs(proj.coefficients - again.coefficients)) < 1e-12


def test_szego_residual_orthogonal_to_basis():
    g = boundary_grid(E21, 512, weighted=True)
    rng = random.Random(61)
    f = random_poly_zzbar(rng, 5, coefficient=unit_box_coefficient)
    proj = numerical_szego(g, f, 10)
    resid = poly_values(f, g.z) - proj.evaluate(g.z)
    fnorm = math.sqrt(abs(inner_product(poly_values(f, g.z), poly_values(f, g.z), g)))
    scale_w = (g.z - proj.center) / proj.scale
    for k in range(11):
        ip = inner_product(resid, scale_w**k, g)
        assert abs(ip) < 1e-10 * max(fnorm, 1.0)


def test_szego_symmetry_even_coefficients_vanish():
    # z -> -z preserves a centered ellipse; only odd modes survive for zbar
    for weighted in (False, True):
        g = boundary_grid(E21, 512, weighted=weighted)
        proj = numerical_szego(g, lambda z: np.conj(z), 10)
        even = proj.coefficients[0::2]
        assert np.max(np.abs(even)) < 1e-12


def test_weighted_and_unweighted_differ_on_eccentric():
    gw = boundary_grid(E21, 512, weighted=True)
    gu = boundary_grid(E21, 512, weighted=False)
    pw = numerical_szego(gw, ZB, 10).coefficients
    pu = numerical_szego(gu, ZB, 10).coefficients
    assert np.max(np.abs(pw - pu)) > 1e3 * 1e-13


def test_szego_oversampling_guard():
    g = boundary_grid(DISC, 16)
    with pytest.raises(ValueError):
        numerical_szego(g, ZB, 12)


def test_condition_warning_attached_when_ill_conditioned():
    g = boundary_grid(Ellipse(8, Fraction(1, 8)), 512, weighted=False)
    proj = numerical_szego(g, ZB, 60)
    assert proj.condition_estimate > 1e10
    assert proj.warning is not None


# -- Bergman projection ------------------------------------------------------------------

def test_bergman_disc_values():
    proj = numerical_bergman(DISC, PolyZZbar.monomial(1, 1), 6)
    assert proj.coefficients[0] == pytest.approx(0.5, abs=1e-12)
    assert np.max(np.abs(proj.coefficients[1:])) < 1e-12
    proj2 = numerical_bergman(DISC, ZB, 6)
    assert np.max(np.abs(proj2.coefficients)) < 1e-12


def test_bergman_zbar_squared_on_eccentric():
    # derived exactly from the area moments: B(zbar^2) = 48/91 + (27/91) z^2
    proj = numerical_bergman(E21, ZB**2, 6)
    expected = np.zeros(7, dtype=complex)
    expected[0] = 48 / 91
    expected[2] = 4 * 27 / 91  # z^2 = 4 phi_2 at scale 2
    assert np.max(np.abs(proj.coefficients - expected)) < 1e-12
    assert bergman_residual_orthogonality(E21, ZB**2, proj) < 1e-10


def test_bergman_quadrature_order_guard():
    with pytest.raises(ValueError):
        numerical_bergman(E21, ZB, basis_degree=12, quad_order=16)


def test_bergman_random_residual_orthogonality():
    rng = random.Random(62)
    for _ in range(3):
        p = random_poly_zzbar(rng, 4)
        proj = numerical_bergman(E21, p, 8)
        assert bergman_residual_orthogonality(E21, p, proj) < 1e-6


# -- experiments ------------------------------------------------------------------------

def test_szbar_experiment_disc_below_floor():
    rep = szbar_constancy_experiment(DISC)
    assert rep.deviation_from_constant < 1e-13
    assert rep.deviation_from_span_1_z <= rep.deviation_from_constant + 1e-16


def test_szbar_experiment_eccentric_far_from_constant():
    rep = szbar_constancy_experiment(E21)
    floor = matched_disc_floor(E21)
    assert floor < 1e-13
    # magnitudes pinned from the first oracle run: ~0.9605 and ~0.0253
    assert rep.deviation_from_constant > max(1e3 * floor, 0.5)
    assert rep.deviation_from_span_1_z > max(1e3 * floor, 0.01)


def test_normalize_affine_examples():
    m = normalize_affine(0.5, 0.0)
    assert m.rotation == pytest.approx(1.0)
    assert m.shift == pytest.approx(0.0)
    m2 = normalize_affine(0.0, 1 + 2j)
    assert m2.rotation == pytest.approx(1.0)
    assert m2.shift == pytest.approx(1 - 2j)
    m3 = normalize_affine(0.5j, 0.0)
    assert m3.rotation == pytest.approx(np.exp(-1j * np.pi / 4))
    assert m3.shift == pytest.approx(0.0)
    with pytest.raises(ValueError):
        normalize_affine(1.0, 2.0)


def test_harmonic_compare_examples():
    x = PolyRealN.variable(2, 0)
    y = PolyRealN.variable(2, 1)
    rep = harmonic_szego_bergman_check(DISC, x)
    assert rep.max_coeff_deviation < 1e-12
    assert rep.szego.coefficients[1] == pytest.approx(0.5, abs=1e-12)
    # x^2 - y^2 = Re z^2 projects to z^2/2 on both sides
    rep2 = harmonic_szego_bergman_check(DISC, x * x - y * y)
    assert rep2.max_coeff_deviation < 1e-12
    assert rep2.szego.coefficients[2] == pytest.approx(0.5, abs=1e-12)
    rep3 = harmonic_szego_bergman_check(DISC, PolyRealN.constant(2, 1))
    assert rep3.szego.coefficients[0] == pytest.approx(1.0, abs=1e-12)


def test_harmonic_compare_input_validation():
    x = PolyRealN.variable(2, 0)
    with pytest.raises(ValueError):
        harmonic_szego_bergman_check(E21, x)
    with pytest.raises(ValueError):
        harmonic_szego_bergman_check(DISC, x * x)


def test_vanishing_ideal_elements_vanish_on_boundary():
    # The r*q part of random decompositions must evaluate to ~0 on the
    # boundary: 64 sample points, 1e-12 relative to the coefficient scale.
    from szegopoly.szego import szego_project

    rng = random.Random(63)
    grid = boundary_grid(E21, 64)
    r = E21.defining_poly_zzbar()
    checked = 0
    while checked < 10:
        f = random_poly_zzbar(rng, rng.randint(2, 6))
        v = r * szego_project(E21, f).cofactor
        if v.is_zero():
            continue
        checked += 1
        values = poly_values(v, grid.z)
        # relative to the term-magnitude bound sum |c| |z|^(a+b) per node
        magnitude = sum(
            abs(complex(c)) * np.abs(grid.z) ** (a + b) for (a, b), c in v.terms()
        )
        assert np.max(np.abs(values) / np.maximum(magnitude, 1.0)) <= 1e-12


# -- symbolic/numeric cross-validation -------------------------------------------------

def test_compare_symbolic_numeric_fixed_point():
    rep = compare_symbolic_numeric(E21, Z**3)
    assert rep.max_coeff_deviation < 1e-12


def test_compare_symbolic_numeric_zbar():
    rep = compare_symbolic_numeric(E21, ZB, M=1024, basis_degree=12)
    assert rep.max_coeff_deviation < 1e-8


def test_compare_symbolic_numeric_shifted_ellipse():
    e = Ellipse(2, 1, Fraction(1, 2), Fraction(-1, 3))
    rng = random.Random(77)
    for _ in range(5):
        f = random_poly_zzbar(rng, 5, coefficient=unit_box_coefficient)
        rep = compare_symbolic_numeric(e, f)
        assert rep.max_coeff_deviation < 1e-8


def test_scaled_basis_conversion_round_trip():
    e = Ellipse(2, 1, Fraction(1, 2), Fraction(-1, 3))
    h = Z**3 * Fraction(2, 7) - Z * 5 + PolyZZbar.constant(1)
    coeffs = holomorphic_coeffs_in_scaled_basis(h, e, 6)
    zs = np.array([0.3 + 0.1j, -0.5 - 0.2j, 1.0 + 0.0j])
    direct = poly_values(h, zs)
    center = complex(0.5, -1 / 3)
    via_basis = np.polynomial.polynomial.polyval((zs - center) / 2.0, coeffs)
    assert np.max(np.abs(direct - via_basis)) < 1e-12
