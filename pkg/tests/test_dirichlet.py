"""Ellipsoid domains, Fischer systems, exact Dirichlet solutions."""

import random
from fractions import Fraction

import pytest

from szegopoly.dirichlet import (
    fischer_system,
    harmonic_extension,
    harmonic_extension_zzbar,
    is_harmonic,
)
from szegopoly.domains import Ellipse, Ellipsoid
from szegopoly.polynomials import PolyRealN, PolyZZbar, divide_exact, xy_to_zzbar
from szegopoly.rational import GaussianRational
from szegopoly.sampling import random_ellipsoid, random_poly_real

X = PolyRealN.variable(2, 0)
Y = PolyRealN.variable(2, 1)


def unit_disc():
    return Ellipse(1, 1).to_ellipsoid()


def unit_ball(n):
    eye = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )
    return Ellipsoid(dim=n, Q=eye, center=(Fraction(0),) * n)


# -- domain validation ----------------------------------------------------------

def test_defining_poly_of_disc():
    r = unit_disc().defining_poly()
    assert r == X * X + Y * Y - PolyRealN.constant(2, 1)
    assert r.degree() == 2


def test_center_value_is_minus_one():
    e = Ellipsoid(
        dim=2,
        Q=((Fraction(1, 4), Fraction(0)), (Fraction(0), Fraction(1))),
        center=(Fraction(3), Fraction(-2)),
    )
    assert e.defining_poly().evaluate((Fraction(3), Fraction(-2))) == GaussianRational(-1)


def test_rejects_non_positive_definite():
    with pytest.raises(ValueError):
        Ellipsoid(dim=2, Q=((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1))),
                  center=(Fraction(0), Fraction(0)))
    with pytest.raises(ValueError):
        Ellipsoid(dim=2, Q=((Fraction(0), Fraction(0)), (Fraction(0), Fraction(1))),
                  center=(Fraction(0), Fraction(0)))


def test_rejects_asymmetric():
    with pytest.raises(ValueError):
        Ellipsoid(dim=2, Q=((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))),
                  center=(Fraction(0), Fraction(0)))


def test_rejects_float_parameters():
    with pytest.raises(TypeError):
        Ellipse(2.0, 1)


def test_ellipse_from_string():
    e = Ellipse.from_string("3/2,1,0,-1/2")
    assert e.a == Fraction(3, 2) and e.k == Fraction(-1, 2)
    assert Ellipse.from_string("2,1") == Ellipse(2, 1)
    with pytest.raises(ValueError):
        Ellipse.from_string("2,1,0")
    with pytest.raises(ValueError):
        Ellipse.from_string("2,oops")


def test_ellipsoid_json_round_trip():
    e = random_ellipsoid(random.Random(3), 3)
    again = Ellipsoid.from_json_dict(e.to_json_dict())
    assert again == e


def test_planar_convenience_json():
    e = Ellipsoid.from_json_dict({"a": "2", "b": "1", "h": "0", "k": "0"})
    assert e == Ellipse(2, 1).to_ellipsoid()


def test_ellipse_defining_poly_zzbar_matches_real_form():
    e = Ellipse(2, 1, Fraction(1, 2), Fraction(-1, 3))
    assert e.defining_poly_zzbar() == xy_to_zzbar(e.defining_poly_xy())
    # dbar r and d r are conjugate, both degree 1
    assert e.d_r() == e.dbar_r().conjugate()
    assert e.d_r().degree() == 1


def test_centered_ellipse_zzbar_coefficients():
    # r = beta z^2 + gamma z zbar + beta zbar^2 - 1 with
    # beta = (b^2-a^2)/(4a^2b^2), gamma = (a^2+b^2)/(2a^2b^2)
    e = Ellipse(2, 1)
    r = e.defining_poly_zzbar()
    assert r.coefficient(2, 0) == GaussianRational(Fraction(-3, 16))
    assert r.coefficient(1, 1) == GaussianRational(Fraction(5, 8))
    assert r.coefficient(0, 2) == GaussianRational(Fraction(-3, 16))
    assert r.coefficient(0, 0) == GaussianRational(-1)


# -- Fischer systems --------------------------------------------------------------

def test_fischer_unit_disc_degree_zero():
    fs = fischer_system(unit_disc(), 0)
    assert fs.size == 1
    assert fs.matrix[0][0] == GaussianRational(4)
    assert fs.determinant == GaussianRational(4)


def test_fischer_unit_disc_degree_one():
    fs = fischer_system(unit_disc(), 1)
    assert fs.size == 3
    assert fs.basis_order == ((0, 0), (0, 1), (1, 0))
    # Lap(r*x) = 8x and Lap(r*y) = 8y on the unit disc
    for j, alpha in enumerate(fs.basis_order):
        col = [fs.matrix[i][j] for i in range(3)]
        image = (unit_disc().defining_poly() * PolyRealN.monomial(alpha)).laplacian()
        assert col == [image.coefficient(beta) for beta in fs.basis_order]
    assert fs.matrix[1][1] == GaussianRational(8)
    assert fs.matrix[2][2] == GaussianRational(8)


def test_fischer_unit_ball_3d():
    fs = fischer_system(unit_ball(3), 0)
    assert fs.matrix[0][0] == GaussianRational(6)  # Lap(|x|^2 - 1) = 2n


def test_fischer_determinant_nonzero_up_to_degree_ten():
    rng = random.Random(31)
    for dim in (2, 3):
        e = random_ellipsoid(rng, dim)
        fs = fischer_system(e, 10)
        assert fs.determinant
        assert fs.size == len(fs.basis_order)


# -- harmonic extension -------------------------------------------------------------

def test_harmonic_input_is_fixed():
    for e in (unit_disc(), random_ellipsoid(random.Random(1), 2)):
        assert harmonic_extension(e, X) == X


def test_unit_disc_modulus_squared():
    u = harmonic_extension(unit_disc(), X * X + Y * Y)
    assert u == PolyRealN.constant(2, 1)


def test_ellipse_x_squared():
    # On x^2/4 + y^2 = 1 the data x^2 extends to (4x^2 - 4y^2 + 4)/5.
    e = Ellipse(2, 1).to_ellipsoid()
    u = harmonic_extension(e, X * X)
    expected = (X * X - Y * Y + PolyRealN.constant(2, 1)) * Fraction(4, 5)
    assert u == expected


def test_extension_exactness_random():
    rng = random.Random(32)
    for _ in range(10):
        dim = rng.choice([2, 3])
        e = random_ellipsoid(rng, dim)
        p = random_poly_real(rng, dim, rng.randint(0, 8))
        u = harmonic_extension(e, p)
        assert u.laplacian().is_zero()
        assert u.degree() <= p.degree()
        assert divide_exact(p - u, e.defining_poly()) is not None


def test_extension_is_linear():
    rng = random.Random(33)
    e = random_ellipsoid(rng, 2)
    for _ in range(10):
        p = random_poly_real(rng, 2, 6)
        q = random_poly_real(rng, 2, 6)
        alpha = GaussianRational(Fraction(2, 3), Fraction(-1, 2))
        beta = GaussianRational(Fraction(1, 5))
        lhs = harmonic_extension(e, p * alpha + q * beta)
        rhs = harmonic_extension(e, p) * alpha + harmonic_extension(e, q) * beta
        assert lhs == rhs


def test_extension_idempotent():
    rng = random.Random(34)
    e = random_ellipsoid(rng, 3)
    for _ in range(5):
        p = random_poly_real(rng, 3, 6)
        u = harmonic_extension(e, p)
        assert harmonic_extension(e, u) == u


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        harmonic_extension(unit_ball(3), X)


def test_complex_data_by_linearity():
    e = unit_disc()
    p = (X * X) * GaussianRational(0, 1) + Y  # i x^2 + y
    u = harmonic_extension(e, p)
    assert u.laplacian().is_zero()
    re_part = harmonic_extension(e, Y)
    im_part = harmonic_extension(e, X * X)
    assert u == re_part + im_part * GaussianRational(0, 1)


def test_zzbar_extension_on_ellipse():
    e = Ellipse(2, 1)
    zb = PolyZZbar.var_zbar()
    assert harmonic_extension_zzbar(e, zb) == zb  # already harmonic
    u = harmonic_extension_zzbar(e, PolyZZbar.monomial(1, 1))
    assert u.laplacian().is_zero()
    assert u.degree() <= 2


# -- harmonicity test ------------------------------------------------------------

def test_is_harmonic_examples():
    assert is_harmonic(X * X - Y * Y)
    assert not is_harmonic(PolyZZbar.monomial(1, 1))
    assert is_harmonic(X**3 - X * Y * Y * 3)  # Re z^3
    assert is_harmonic(PolyZZbar.var_z() ** 5)
    assert is_harmonic(PolyRealN.zero(3))
