"""Exact solver: correctness, consistency detection, determinants."""

import random
from fractions import Fraction

import pytest

from szegopoly.linalg import det_exact, solve_exact
from szegopoly.rational import GaussianRational, ZERO


def gr(re, im=0):
    return GaussianRational(re, im)


def rand_gr(rng):
    return GaussianRational(
        Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
        Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
    )


def matvec(A, x):
    return [sum((a * v for a, v in zip(row, x)), start=ZERO) for row in A]


def test_unique_solution():
    A = [[gr(2), gr(1)], [gr(1), gr(3)]]
    b = [gr(5), gr(10)]
    x = solve_exact(A, b)
    assert matvec(A, x) == b
    assert x == [gr(1), gr(3)]


def test_complex_entries():
    A = [[gr(0, 1), gr(1)], [gr(1), gr(0, 1)]]  # det = -2
    b = [gr(1, 1), gr(0)]
    x = solve_exact(A, b)
    assert matvec(A, x) == b


def test_underdetermined_particular_solution():
    A = [[gr(1), gr(1), gr(1)]]
    b = [gr(6)]
    x = solve_exact(A, b)
    assert matvec(A, x) == b


def test_inconsistent_returns_none():
    A = [[gr(1), gr(2)], [gr(2), gr(4)]]
    b = [gr(1), gr(3)]
    assert solve_exact(A, b) is None


def test_overdetermined_consistent():
    A = [[gr(1), gr(0)], [gr(0), gr(1)], [gr(1), gr(1)]]
    b = [gr(2), gr(3), gr(5)]
    x = solve_exact(A, b)
    assert x == [gr(2), gr(3)]


def test_zero_rows_ignored():
    A = [[ZERO, ZERO], [gr(1), gr(1)]]
    assert solve_exact(A, [ZERO, gr(2)]) is not None
    assert solve_exact(A, [gr(1), gr(2)]) is None


def test_random_systems_solve_exactly():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(1, 6)
        m = rng.randint(1, 6)
        A = [[rand_gr(rng) for _ in range(n)] for _ in range(m)]
        x_true = [rand_gr(rng) for _ in range(n)]
        b = matvec(A, x_true)
        x = solve_exact(A, b)
        assert x is not None
        assert matvec(A, x) == b


def test_pivot_strategies_agree_on_invertible_systems():
    rng = random.Random(100)
    for _ in range(30):
        n = rng.randint(1, 5)
        while True:
            A = [[rand_gr(rng) for _ in range(n)] for _ in range(n)]
            if det_exact(A):
                break
        b = [rand_gr(rng) for _ in range(n)]
        assert solve_exact(A, b, pivot="small") == solve_exact(A, b, pivot="large")


def test_unknown_pivot_strategy():
    with pytest.raises(ValueError):
        solve_exact([[gr(1)]], [gr(1)], pivot="median")


def test_det_examples():
    assert det_exact([[gr(2)]]) == gr(2)
    assert det_exact([[gr(1), gr(2)], [gr(3), gr(4)]]) == gr(-2)
    assert det_exact([[gr(1), gr(2)], [gr(2), gr(4)]]) == ZERO
    assert det_exact([]) == gr(1)


def test_det_multiplicative():
    rng = random.Random(101)
    for _ in range(20):
        n = rng.randint(1, 4)
        A = [[rand_gr(rng) for _ in range(n)] for _ in range(n)]
        B = [[rand_gr(rng) for _ in range(n)] for _ in range(n)]
        AB = [
            [sum((A[i][k] * B[k][j] for k in range(n)), start=ZERO) for j in range(n)]
            for i in range(n)
        ]
        assert det_exact(AB) == det_exact(A) * det_exact(B)


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        solve_exact([[gr(1), gr(2)], [gr(1)]], [gr(1), gr(1)])
    with pytest.raises(ValueError):
        solve_exact([[gr(1)]], [gr(1), gr(2)])
