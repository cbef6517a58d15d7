"""Acceptance suite: one test per criterion, each printing its pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete, or `szegopoly suite` for the standalone runner.
"""

from szegopoly import acceptance


def _check(result):
    print(result.line())
    assert result.passed, result.details
    assert result.runtime_s < result.time_limit_s, (
        f"criterion {result.cid} took {result.runtime_s:.2f}s "
        f"(limit {result.time_limit_s}s)"
    )


def test_criterion_1_closed_form_projection_of_zbar():
    _check(acceptance.criterion_1())


def test_criterion_2_degree_holomorphy_and_exact_decomposition():
    _check(acceptance.criterion_2())


def test_criterion_3_weighted_orthogonality_of_residual():
    _check(acceptance.criterion_3())


def test_criterion_4_symbolic_numeric_agreement():
    _check(acceptance.criterion_4())


def test_criterion_5_exact_dirichlet_solutions():
    _check(acceptance.criterion_5())


def test_criterion_6_operator_kernel():
    _check(acceptance.criterion_6())


def test_criterion_7_disc_characterization_experiments():
    _check(acceptance.criterion_7())


def test_criterion_8_bergman_projection():
    _check(acceptance.criterion_8())


def test_criterion_9_szego_bergman_agreement_on_disc():
    _check(acceptance.criterion_9())


def test_criterion_10_perimeter_convergence():
    _check(acceptance.criterion_10())
