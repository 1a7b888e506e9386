"""Polynomial matrices, factored determinants, and row-combination identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcount.factorcheck import (
    DEFAULT_POINTS,
    SINGULAR_MSG,
    CheckRecord,
    MatrixVariant,
    RowIdentity,
    admissible_k,
    build_poly_matrix,
    check_factorization,
    check_identity,
    check_row_combination,
    degree_bound,
    det_rational,
    expected_residual,
    factored_det_almost_central,
    factored_det_central,
    grid_values,
    h_poly,
    p_poly,
    run_factor_suite,
)


class TestHPoly:
    def test_all_zero_parameters(self):
        assert h_poly(0, 0, 0, 0, 2, 2) == 1

    def test_reduction_to_quarter_product(self):
        # at a=2 center values the quartic collapses to b(c+1)(1+b+c)/4
        assert h_poly(2, 1, 2, 1, 2, 2) == 4
        b, c = Fraction(7, 2), Fraction(3)
        x, y = (2 + b) / 2, (2 + c - 1) / 2
        assert h_poly(b, c, x, y, 2, 2) == b * (c + 1) * (1 + b + c) / 4

    def test_forced_zero_pattern(self):
        # (b+i-j+1) = 0, (c-i+j) = 0, (y-i+2) = 0 kills every term
        assert h_poly(-1, 0, 5, 0, 2, 2) == 0

    def test_rational_arguments(self):
        value = h_poly(Fraction(1, 2), Fraction(1, 3), 1, 1, 2, 3)
        assert isinstance(value, Fraction)


class TestBuildPolyMatrix:
    def test_one_by_one_center(self):
        assert build_poly_matrix(2, MatrixVariant.CENTRAL, 2, 1) == [[Fraction(4)]]

    def test_factor_b_vanishes(self):
        assert build_poly_matrix(2, MatrixVariant.CENTRAL, 0, 1) == [[Fraction(0)]]

    def test_order_is_a_minus_one(self):
        matrix = build_poly_matrix(5, MatrixVariant.ALMOST_CENTRAL, 2, 3)
        assert len(matrix) == 4
        assert all(len(row) == 4 for row in matrix)

    def test_a_below_two_rejected(self):
        with pytest.raises(ValueError):
            build_poly_matrix(1, MatrixVariant.CENTRAL, 1, 1)

    def test_hat_variant_det_matches_factored_form(self):
        matrix = build_poly_matrix(3, MatrixVariant.ALMOST_CENTRAL, 1, 1)
        assert det_rational(matrix) == factored_det_almost_central(3, 1, 1)


class TestDetRational:
    def test_known_values(self):
        assert det_rational([[Fraction(3)]]) == 3
        assert det_rational([[1, 2], [3, 4]]) == -2
        assert det_rational([]) == 1

    def test_pivot_swap(self):
        assert det_rational([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        assert det_rational([[1, 2], [2, 4]]) == 0

    def test_rational_entries(self):
        m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
        assert det_rational(m) == Fraction(1, 2) * Fraction(1, 5) - Fraction(1, 3) * Fraction(1, 4)


class TestFactoredDeterminants:
    def test_even_small_values(self):
        assert factored_det_central(2, 2, 1) == 4
        assert factored_det_central(2, 0, 5) == 0

    def test_hat_vanishes_at_b_zero(self):
        # the (b/2)_{a/2} factor vanishes at b = 0
        assert factored_det_almost_central(2, 0, 2) == 0

    @pytest.mark.parametrize("a", [2, 3, 4])
    def test_matches_determinant_on_spots(self, a):
        for b, c in [(1, 2), (2, 2), (-3, 4), (Fraction(5, 2), 1)]:
            central = build_poly_matrix(a, MatrixVariant.CENTRAL, b, c)
            assert factored_det_central(a, b, c) == det_rational(central)
            hat = build_poly_matrix(a, MatrixVariant.ALMOST_CENTRAL, b, c)
            assert factored_det_almost_central(a, b, c) == det_rational(hat)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 4), st.integers(-6, 6), st.integers(-6, 6))
    def test_matches_determinant_on_random_grid_points(self, a, b, c):
        matrix = build_poly_matrix(a, MatrixVariant.CENTRAL, b, c)
        assert factored_det_central(a, b, c) == det_rational(matrix)


class TestPPoly:
    def test_base_case_is_one(self):
        assert p_poly(1, 0) == 1
        assert p_poly(1, Fraction(99, 7)) == 1

    def test_degree_one_values(self):
        assert p_poly(2, 3) == 3
        assert p_poly(2, 0) == 0

    def test_below_one_rejected(self):
        with pytest.raises(ValueError):
            p_poly(0, 1)

    @given(st.integers(1, 6), st.fractions(max_denominator=8))
    def test_always_defined(self, n, c):
        p_poly(n, c)  # total on its domain: no exceptions


class TestRowCombinations:
    def test_c_factor_zero_vector(self):
        assert check_row_combination(RowIdentity.C_FACTOR, 3, 2, 5) == [Fraction(0)] * 2

    def test_b_factor_1_zero_vector(self):
        assert check_row_combination(RowIdentity.B_FACTOR_1, 4, 2, 3) == [Fraction(0)] * 3

    def test_b_factor_2_negated_row(self):
        residual = check_row_combination(RowIdentity.B_FACTOR_2, 5, 1, 4)
        expected = expected_residual(RowIdentity.B_FACTOR_2, 5, 1, 4)
        assert residual == expected
        matrix = build_poly_matrix(5, MatrixVariant.CENTRAL, b=-1, c=4)
        assert expected == [-entry for entry in matrix[0]]  # row k+1 = 2 is index 0

    def test_parity_violation_rejected(self):
        with pytest.raises(ValueError, match="C_FACTOR needs"):
            check_row_combination(RowIdentity.C_FACTOR, 3, 1, 5)
        with pytest.raises(ValueError, match="B_FACTOR_2 needs"):
            check_row_combination(RowIdentity.B_FACTOR_2, 4, 1, 3)

    def test_singular_point_reported(self):
        # B-type coefficient denominators vanish at special integer c
        with pytest.raises(ValueError, match="singular coefficient"):
            for c in range(-12, 0):
                check_row_combination(RowIdentity.B_FACTOR_1, 4, 0, c)

    def test_all_identities_at_all_admissible_k(self):
        free = Fraction(13, 2)
        for a in range(2, 7):
            for identity in RowIdentity:
                for k in admissible_k(identity, a):
                    assert check_row_combination(identity, a, k, free) == expected_residual(
                        identity, a, k, free
                    ), (identity, a, k)


class TestAdmissibleK:
    def test_windows(self):
        assert admissible_k(RowIdentity.C_FACTOR, 4) == [1, 3]
        assert admissible_k(RowIdentity.C_FACTOR_HAT, 4) == [2]
        assert admissible_k(RowIdentity.B_FACTOR_1, 4) == [0, 2]
        assert admissible_k(RowIdentity.B_FACTOR_2, 5) == [1]
        assert admissible_k(RowIdentity.B_FACTOR_2, 4) == []

    def test_every_listed_k_is_accepted(self):
        for identity in RowIdentity:
            for a in range(2, 9):
                for k in admissible_k(identity, a):
                    check_row_combination(identity, a, k, Fraction(23, 3))


class TestSuite:
    def test_grid_exceeds_degree_bound(self):
        assert degree_bound(2) == 2
        assert degree_bound(6) == 20
        for a in range(2, 9):
            assert len(grid_values(a)) > degree_bound(a)

    def test_factorization_records_pass(self):
        for variant in MatrixVariant:
            record = check_factorization(3, variant)
            assert record.passed
            assert record.params["a"] == "3"

    def test_identity_check_uses_enough_points(self):
        record = check_identity(RowIdentity.C_FACTOR, 3, 2, points=DEFAULT_POINTS)
        assert record.passed
        assert len(record.params["point"].strip("()").split(",")) >= 3

    def test_identity_check_insufficient_points(self):
        record = check_identity(
            RowIdentity.C_FACTOR, 3, 2, points=(Fraction(5), Fraction(9))
        )
        assert not record.passed
        assert record.residual == "insufficient evaluation points"

    def test_identity_check_skips_singular_points(self):
        # a singular leading point must be skipped, not crash the check
        singular_first = (Fraction(-1),) + DEFAULT_POINTS
        record = check_identity(RowIdentity.B_FACTOR_1, 4, 0, points=singular_first)
        assert record.passed
        assert "-1" not in record.params["point"]

    def test_run_factor_suite_all_pass(self):
        records = run_factor_suite(max_a=4)
        assert records
        assert all(r.passed for r in records)
        names = {r.identity for r in records}
        assert "DET_FACTOR_CENTRAL" in names
        assert "C_FACTOR" in names

    def test_parallel_equals_sequential(self):
        sequential = check_factorization(4, MatrixVariant.CENTRAL, workers=1)
        parallel = check_factorization(4, MatrixVariant.CENTRAL, workers=4)
        assert sequential == parallel


class TestCheckRecord:
    def test_line_format(self):
        record = CheckRecord("C_FACTOR", {"a": "3", "k": "2"}, True, "0")
        assert record.line() == "C_FACTOR a=3 k=2 PASS residual=0"
        failing = CheckRecord("X", {"a": "2"}, False, "1/2")
        assert failing.line() == "X a=2 FAIL residual=1/2"

    def test_json_shape(self):
        record = CheckRecord("C_FACTOR", {"a": "3"}, True, "0")
        assert record.to_json() == {
            "identity": "C_FACTOR",
            "params": {"a": "3"},
            "pass": True,
            "residual": "0",
        }
