"""Tests for linearization coefficients and the block-matching comparison."""

from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from assoc_hermite.linearization import (
    ConjectureReport,
    conjecture_check,
    conjecture_sweep,
    inhomogeneous_gf,
    linearization_coefficient,
    linearization_coefficient_hypergeometric,
    mixed_coefficient,
    mixed_residual,
    product_functional,
    verify_linearization,
    verify_mixed,
)
from assoc_hermite.matchings import WeightScheme
from assoc_hermite.models import associated_hermite, usual_hermite
from assoc_hermite.polynomials import C, Poly, rising_factorial_value


def poly_from_descending(coeffs: list[int]) -> Poly:
    """Build sum(coeffs[i] * c^(len-1-i)) for compact frozen tables."""
    total = Poly.zero()
    top = len(coeffs) - 1
    for i, a in enumerate(coeffs):
        if a:
            total = total + a * Poly.monomial(0, top - i)
    return total


def test_expansion_holds_exactly():
    for N in range(9):
        for M in range(9):
            assert verify_linearization(N, M)


def test_coefficients_trivial_cases():
    assert linearization_coefficient(5, 7, 0) == Poly.one()
    assert linearization_coefficient(1, 1, 1) == C


def test_coefficients_have_nonnegative_integer_terms():
    for N in range(9):
        for M in range(9):
            for j in range(min(N, M) + 1):
                for _, coeff in linearization_coefficient(N, M, j).sorted_terms():
                    assert coeff.denominator == 1
                    assert coeff >= 0


def test_coefficient_rejects_bad_index():
    with pytest.raises(ValueError):
        linearization_coefficient(3, 5, 4)
    with pytest.raises(ValueError):
        linearization_coefficient(3, 5, -1)


def test_hypergeometric_form_agrees():
    for N in range(7):
        for M in range(7):
            for j in range(min(N, M) + 1):
                poly = linearization_coefficient(N, M, j)
                for c in range(1, 11):
                    assert poly.evaluate(0, c) == linearization_coefficient_hypergeometric(
                        N, M, j, c
                    )
    assert linearization_coefficient_hypergeometric(2, 2, 1, 1) == 4


def test_hypergeometric_rejects_vanishing_denominator():
    with pytest.raises(ValueError, match="denominator"):
        linearization_coefficient_hypergeometric(3, 3, 2, -3)


def test_collapse_at_unit_c():
    # At c = 1 the coefficient factors as (N+1-j)_j (M+1-j)_j / j!.
    for N in range(9):
        for M in range(9):
            for j in range(min(N, M) + 1):
                closed = Fraction(
                    rising_factorial_value(N + 1 - j, j)
                    * rising_factorial_value(M + 1 - j, j),
                    factorial(j),
                )
                assert linearization_coefficient(N, M, j).evaluate(0, 1) == closed


def test_mixed_coefficient_instance():
    assert mixed_coefficient(2, 1, 1) == C + 1


def test_mixed_expansion_small_instance():
    # H_2(x;c) x = H_3(x;c) + (c+1) H_1(x;c)
    lhs = associated_hermite(2) * usual_hermite(1)
    rhs = associated_hermite(3) + (C + 1) * associated_hermite(1)
    assert lhs == rhs
    assert verify_mixed(2, 1)


def test_mixed_expansion_validity_range():
    for n in range(9):
        for m in range(9):
            if n >= m - 1:
                assert verify_mixed(n, m)
    # Outside the range the expansion genuinely misses.
    assert mixed_residual(0, 2) == 1 - C
    assert mixed_residual(1, 3) == C - C**2
    # Both residuals vanish where the two families coincide.
    assert mixed_residual(0, 2).evaluate(0, 1) == 0
    assert mixed_residual(1, 3).evaluate(0, 1) == 0


def test_published_product_values():
    cube = C**3 + 4 * C**2 + 3 * C
    assert product_functional((2, 2, 2)) == cube
    assert inhomogeneous_gf((2, 2, 2), WeightScheme.MOMENT_NO_RIGHT_CROSSING) == cube
    assert (
        inhomogeneous_gf((2, 2, 2), WeightScheme.MOMENT_NONNESTED)
        == 2 * C**3 + 4 * C**2 + 2 * C
    )


def test_published_334_values():
    value = C * (C + 1) * (C + 2) * (C + 3) * (C + 8)
    assert product_functional((3, 3, 4)) == value
    assert inhomogeneous_gf((3, 3, 4), WeightScheme.MOMENT_NO_RIGHT_CROSSING) == value
    assert inhomogeneous_gf(
        (3, 4, 3), WeightScheme.MOMENT_NO_RIGHT_CROSSING
    ) == C * (C + 1) * (C + 2) * (C**2 + 7 * C + 28)
    assert inhomogeneous_gf(
        (4, 3, 3), WeightScheme.MOMENT_NO_RIGHT_CROSSING
    ) == C * (C + 1) * (C + 2) * (C**2 + 8 * C + 27)
    assert (
        inhomogeneous_gf((3, 4, 3), WeightScheme.MOMENT_NONNESTED)
        == 6 * C * (C + 1) ** 2 * (C + 2) ** 2
    )
    for sizes in ((3, 3, 4), (4, 3, 3)):
        assert (
            inhomogeneous_gf(sizes, WeightScheme.MOMENT_NONNESTED)
            == 3 * C * (C + 1) * (C + 2) ** 2 * (C + 3)
        )


def test_conjecture_check_rejects_bad_sizes():
    with pytest.raises(ValueError):
        conjecture_check((0, 2))


def test_conjecture_control_cases_match():
    report = conjecture_check((1, 1, 3, 3))
    assert report.match
    assert report.lhs == poly_from_descending([2, 11, 19, 10, 0])
    assert conjecture_check((3, 3, 4)).match


# The weakly increasing block comparison fails at exactly these multisets
# among all with sum at most 10; both sides are frozen, highest power first.
SEPARATED = {
    (1, 1, 1, 1, 3, 3): ([6, 48, 141, 177, 78, 0], [6, 45, 135, 180, 84, 0]),
    (1, 1, 2, 3, 3): ([4, 37, 122, 167, 78, 0], [4, 34, 116, 170, 84, 0]),
    (1, 3, 3, 3): ([2, 24, 92, 138, 68, 0], [2, 21, 86, 141, 74, 0]),
    (2, 2, 3, 3): ([3, 29, 105, 157, 78, 0], [3, 26, 99, 160, 84, 0]),
}

GAP = 3 * C * (C + 1) * (C - 1) * (C + 2)


@pytest.mark.parametrize("sizes", sorted(SEPARATED))
def test_conjecture_counterexamples(sizes):
    report = conjecture_check(sizes)
    lhs, rhs = (poly_from_descending(side) for side in SEPARATED[sizes])
    assert not report.match
    assert report.lhs == lhs
    assert report.rhs == rhs
    # Every failure misses by the same amount, which vanishes at c = 1;
    # that is why raw counts never betrayed the discrepancy.
    assert report.lhs - report.rhs == GAP
    assert GAP.evaluate(0, 1) == 0


def test_arrangement_rescues_2233():
    # Keeping the given order, (3,2,2,3) does satisfy the identity even
    # though the sorted arrangement (2,2,3,3) does not.
    report = conjecture_check((3, 2, 2, 3), arrange=False)
    assert report.sizes == (3, 2, 2, 3)
    assert report.match


def test_no_arrangement_rescues_1333():
    seen = set(permutations((1, 3, 3, 3)))
    assert len(seen) == 4
    for sizes in sorted(seen):
        assert not conjecture_check(sizes, arrange=False).match


def test_sweep_covers_small_multisets():
    reports = {r.sizes: r for r in conjecture_sweep(6)}
    assert (1, 1) in reports
    assert (2, 2, 2) in reports
    assert all(r.match for r in reports.values())
    assert all(isinstance(r, ConjectureReport) for r in reports.values())
