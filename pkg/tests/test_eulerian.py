import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from descentcert.errors import CutoffExceeded, InvalidN
from descentcert.eulerian import (
    KFamily,
    boundary_identities_check,
    eulerian,
    eulerian_by_enumeration,
    how_coefficient_vectors,
    k_family,
    k_polynomial,
    matrix_recurrence_check,
    refined_by_enumeration,
    refined_eulerian,
    weighted_sum_identity_check,
)
from descentcert.polynomial import Poly

from conftest import P

k_values = st.fractions(min_value=-30, max_value=30, max_denominator=8)


class TestEulerian:
    def test_small_values(self):
        assert eulerian(1) == P(1)
        assert eulerian(2) == P(1, 1)
        assert eulerian(3) == P(1, 4, 1)
        assert eulerian(4) == P(1, 11, 11, 1)

    def test_invalid_n(self):
        with pytest.raises(InvalidN):
            eulerian(0)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_enumeration(self, n):
        assert eulerian(n) == eulerian_by_enumeration(n)

    def test_enumeration_values(self):
        assert eulerian_by_enumeration(2) == P(1, 1)
        assert eulerian_by_enumeration(3) == P(1, 4, 1)
        assert eulerian_by_enumeration(5) == P(1, 26, 66, 26, 1)

    def test_enumeration_cutoff(self):
        with pytest.raises(CutoffExceeded):
            eulerian_by_enumeration(11)
        with pytest.raises(CutoffExceeded):
            refined_by_enumeration(8, cutoff=7)

    @pytest.mark.parametrize("n", range(1, 26))
    def test_normalization_and_symmetry(self, n):
        poly = eulerian(n)
        assert poly(1) == math.factorial(n)
        coeffs = poly.coeffs
        assert coeffs == tuple(reversed(coeffs))


class TestRefined:
    def test_n2(self):
        assert refined_eulerian(2).polys == (P(1), P(0, 1))

    def test_n3(self):
        assert refined_eulerian(3).polys == (P(1, 1), P(0, 2), P(0, 1, 1))

    def test_family_sums_to_eulerian(self):
        for n in range(1, 15):
            assert refined_eulerian(n).total == eulerian(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_enumeration(self, n):
        assert refined_eulerian(n).polys == refined_by_enumeration(n).polys

    def test_enumeration_values(self):
        assert refined_by_enumeration(2).polys == (P(1), P(0, 1))
        assert refined_by_enumeration(3).polys == (P(1, 1), P(0, 2), P(0, 1, 1))
        assert refined_by_enumeration(4).polys[0] == P(1, 4, 1)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_members_normalize_to_factorial(self, n):
        fam = refined_eulerian(n)
        for poly in fam.polys:
            assert poly(1) == math.factorial(n - 1)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_structural_invariants(self, n):
        fam = refined_eulerian(n)
        assert fam.polys[0].degree <= n - 2
        assert fam.polys[n - 1].coeffs[0] == 0
        for poly in fam.polys:
            for c in poly.coeffs:
                assert c.denominator == 1 and c >= 0


class TestIdentities:
    @pytest.mark.parametrize("n", [2, 3, 7, 12])
    def test_weighted_sum(self, n):
        assert weighted_sum_identity_check(n)

    @pytest.mark.parametrize("n", [2, 3, 10])
    def test_matrix_form(self, n):
        assert matrix_recurrence_check(n)

    @pytest.mark.parametrize("n", [3, 4, 12])
    def test_boundaries(self, n):
        assert boundary_identities_check(n)


class TestKFamily:
    def test_examples(self):
        fam = k_family(4)
        assert k_polynomial(fam, 0) == P(1, 11, 11, 1)
        assert k_polynomial(fam, -4) == P(1, 7, 7, 1)
        assert k_polynomial(k_family(5), -2) == P(1, 24, 58, 24, 1)

    def test_needs_n_above_3(self):
        with pytest.raises(InvalidN):
            k_family(3)

    def test_shape(self):
        fam = k_family(7)
        assert fam.base.degree == 6
        assert fam.bump.degree == 5

    @given(st.integers(min_value=4, max_value=10), k_values)
    def test_value_at_one(self, n, k):
        poly = k_polynomial(k_family(n), k)
        assert poly(1) == math.factorial(n) + k * math.factorial(n - 2)
        assert poly.degree == n - 1 and poly.leading == 1


class TestHowVectors:
    def test_examples(self):
        a, b = how_coefficient_vectors(4, -4)
        assert a == (1, 2, 1) and b == (1, 2, 1)
        a, b = how_coefficient_vectors(5, 0)
        assert a == (4, 3, 2, 1) and b == (1, 2, 3, 4)

    def test_rejects_small_n(self):
        with pytest.raises(InvalidN):
            how_coefficient_vectors(3, 0)

    @given(st.integers(min_value=4, max_value=9), k_values)
    def test_reconstruction(self, n, k):
        a, b = how_coefficient_vectors(n, k)
        prev = refined_eulerian(n - 1).polys
        acc = Poly(())
        for i in range(n - 1):
            acc = acc + Poly.of(b[i], a[i]) * prev[i]
        assert acc == k_polynomial(k_family(n), k)

    @given(st.integers(min_value=4, max_value=12), k_values)
    def test_determinant_closed_forms(self, n, k):
        a, b = how_coefficient_vectors(n, k)
        m = n - 1
        assert a[0] * b[1] - b[0] * a[1] == n + Fraction(k)
        assert a[m - 2] * b[m - 1] - b[m - 2] * a[m - 1] == n + Fraction(k)
        for i in range(1, m - 2):
            assert a[i] * b[i + 1] - b[i] * a[i + 1] == n
