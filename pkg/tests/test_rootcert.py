from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from descentcert.errors import (
    ConstantPolynomial,
    DegreeGapTooLarge,
    HypothesisViolated,
    NonPositiveLeading,
    NotRealRooted,
    NotSquarefree,
    ZeroPolynomial,
)
from descentcert.eulerian import (
    eulerian,
    how_coefficient_vectors,
    k_family,
    k_polynomial,
    refined_eulerian,
)
from descentcert.polynomial import ONE, Poly, ZERO
from descentcert.rootcert import (
    count_distinct_real_roots,
    how_combination_check,
    interlaces,
    is_real_rooted,
    isolate_roots,
    pairwise_interlacing,
    poly_gcd,
    sturm_chain,
)

from conftest import P

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)


def poly_with_roots(roots, quads=(), lead=1):
    """lead * prod (x - r) * prod (x^2 + bx + c); the c's keep quads rootless."""
    p = Poly.of(lead)
    for r in roots:
        p = p * Poly.of(-Fraction(r), 1)
    for b, c in quads:
        p = p * Poly.of(Fraction(c), Fraction(b), 1)
    return p


class TestSturmChain:
    def test_textbook_example(self):
        chain = sturm_chain(P(-1, 0, 1)).members
        assert chain == (P(-1, 0, 1), P(0, 2), P(1))

    def test_repeated_root_terminates_at_gcd(self):
        chain = sturm_chain(P(0, 0, 1)).members
        assert chain == (P(0, 0, 1), P(0, 2))
        g = poly_gcd(P(0, 0, 1), P(0, 2))
        q, r = divmod(chain[-1], g)
        assert r == ZERO

    def test_squarefree_ends_in_constant(self):
        chain = sturm_chain(P(1, 4, 1)).members
        assert chain[-1].degree == 0

    def test_errors(self):
        with pytest.raises(ZeroPolynomial):
            sturm_chain(ZERO)
        with pytest.raises(ConstantPolynomial):
            sturm_chain(P(3))

    def test_last_member_divides_all(self):
        poly = P(0, 0, 1) * P(1, 1)
        chain = sturm_chain(poly).members
        last = chain[-1]
        for member in chain:
            assert member % last == ZERO


class TestRootCounts:
    def test_examples(self):
        assert count_distinct_real_roots(P(-1, 0, 1)) == 2
        assert count_distinct_real_roots(P(1, 0, 1)) == 0
        assert count_distinct_real_roots(P(1, 11, 11, 1)) == 3

    def test_multiplicities_do_not_inflate(self):
        assert count_distinct_real_roots(P(1, 2, 1)) == 1
        assert count_distinct_real_roots(P(0, 0, 0, 1)) == 1

    @settings(max_examples=60)
    @given(
        st.lists(small_rationals, min_size=0, max_size=4),
        st.lists(st.tuples(small_rationals, st.fractions(min_value=1, max_value=4, max_denominator=4)), min_size=0, max_size=2),
    )
    def test_count_matches_construction(self, roots, quad_seeds):
        quads = [(b, b * b / 4 + pos) for b, pos in quad_seeds]
        poly = poly_with_roots(roots, quads)
        if poly.degree == 0:
            return
        assert count_distinct_real_roots(poly) == len(set(roots))


class TestRealRootedCertificates:
    def test_double_root(self):
        cert = is_real_rooted(P(1, 2, 1))
        assert cert.real_rooted and not cert.distinct_real_rooted
        assert cert.distinct_real_count == 1 and cert.degree == 2

    def test_family_members(self):
        assert is_real_rooted(P(1, 7, 7, 1)).real_rooted
        bumped = eulerian(4) + 3 * eulerian(2).shift_up(1)
        assert is_real_rooted(bumped).real_rooted

    def test_complex_roots(self):
        cert = is_real_rooted(P(1, 0, 1))
        assert not cert.real_rooted and not cert.distinct_real_rooted

    def test_distinct_implies_real(self):
        for poly in [P(-1, 0, 1), P(1, 2, 1), P(1, 0, 1), P(2, 3, 1)]:
            cert = is_real_rooted(poly)
            assert not cert.distinct_real_rooted or cert.real_rooted
            assert cert.distinct_real_count <= cert.degree

    def test_json_shape(self):
        data = is_real_rooted(P(1, 7, 7, 1)).to_json_dict()
        assert data == {
            "degree": 3,
            "distinct_real_count": 3,
            "real_rooted": True,
            "distinct_real_rooted": True,
        }


class TestIsolation:
    def test_rational_roots_exact(self):
        iso = isolate_roots(P(-1, 0, 1))
        assert iso.exact_roots == (-1, 1) and iso.intervals == ()

    def test_linear(self):
        assert isolate_roots(P(1, 1)).exact_roots == (Fraction(-1),)

    def test_irrational_roots_isolated(self):
        width = Fraction(1, 1024)
        iso = isolate_roots(P(1, 4, 1), width)
        assert iso.exact_roots == () and len(iso.intervals) == 2
        poly = P(1, 4, 1)
        for lo, hi in iso.intervals:
            assert lo < hi and hi - lo <= width
            assert poly(lo) * poly(hi) < 0

    def test_intervals_disjoint_from_exact(self):
        poly = poly_with_roots([0, 1, Fraction(1, 2), 3], [(0, 2)])
        iso = isolate_roots(poly)
        assert iso.exact_roots == (0, Fraction(1, 2), 1, 3)
        assert iso.intervals == ()

    def test_mixed_rational_irrational(self):
        poly = P(-2, 0, 1) * P(-1, 1)  # roots: +-sqrt2 and 1
        iso = isolate_roots(poly)
        assert iso.exact_roots == (1,)
        assert len(iso.intervals) == 2
        spans = sorted(iso.intervals)
        assert spans[0][1] < 0 < spans[1][0]

    def test_count_matches_sturm(self):
        for poly in [P(-1, 0, 1), P(1, 4, 1), eulerian(6), P(1, 0, 0, 1)]:
            assert isolate_roots(poly).count == count_distinct_real_roots(poly)

    def test_not_squarefree_rejected(self):
        with pytest.raises(NotSquarefree):
            isolate_roots(P(1, 2, 1))

    def test_dyadic_roots_found_exactly(self):
        poly = poly_with_roots([Fraction(1, 2), Fraction(-3, 4), 2])
        iso = isolate_roots(poly)
        assert iso.exact_roots == (Fraction(-3, 4), Fraction(1, 2), 2)


class TestInterlaces:
    def test_linear_into_quadratic(self):
        assert interlaces(P(1, 1), P(1, 4, 1))

    def test_self_interlacing(self):
        assert interlaces(P(1, 4, 1), P(1, 4, 1))

    def test_degree_order_matters(self):
        low, high = P(1, 1), P(0, 1, 1)
        assert not interlaces(high, low)
        assert interlaces(low, high)

    def test_refined_family_n3(self):
        fam = refined_eulerian(3).polys
        assert pairwise_interlacing(fam)

    def test_positive_constant_conventions(self):
        assert interlaces(ONE, P(1, 1))
        assert interlaces(ONE, P(2))
        assert not interlaces(P(1, 1), P(2))

    def test_shared_irrational_roots(self):
        sqrt2 = P(-2, 0, 1)
        assert interlaces(sqrt2, sqrt2 * P(5, 1) * Fraction(1, 3))

    def test_multiplicities(self):
        assert interlaces(P(2, 3, 1), P(1, 2, 1))  # (x+1)(x+2) vs (x+1)^2
        assert not interlaces(P(4, 4, 1), P(1, 2, 1))  # (x+2)^2 vs (x+1)^2

    def test_errors(self):
        with pytest.raises(NotRealRooted):
            interlaces(P(1, 0, 1), P(1, 4, 1))
        with pytest.raises(NonPositiveLeading):
            interlaces(P(-1, -1), P(1, 4, 1))
        with pytest.raises(DegreeGapTooLarge):
            interlaces(P(1, 1), P(1, 11, 11, 1))
        with pytest.raises(ZeroPolynomial):
            interlaces(ZERO, P(1, 1))

    @given(
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=6),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=6),
    )
    def test_invariant_under_positive_scaling(self, s, t):
        g, f = P(1, 1), P(1, 4, 1)
        assert interlaces(s * g, t * f) == interlaces(g, f)


class TestPairwise:
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_refined_families(self, n):
        assert pairwise_interlacing(refined_eulerian(n).polys)

    def test_error_propagates(self):
        with pytest.raises(NotRealRooted):
            pairwise_interlacing([P(1, 1), P(1, 0, 1)])

    def test_detects_failure(self):
        # roots {-1} and {-3, -2}: -1 > -2 breaks the chain
        assert not pairwise_interlacing([P(1, 1), P(6, 5, 1)])


class TestSumsOfInterlacing:
    def test_sum_is_real_rooted(self):
        f = poly_with_roots([-1, -3])
        g = poly_with_roots([-2])
        assert interlaces(g, f)
        assert is_real_rooted(f + g).real_rooted

    @settings(max_examples=40)
    @given(st.lists(st.fractions(min_value=-5, max_value=0, max_denominator=4), min_size=2, max_size=4, unique=True))
    def test_shifted_interlacer(self, roots):
        # With all roots nonpositive, multiplying the interlacer by x keeps
        # the pair interlacing in the opposite direction.
        roots = sorted(roots)
        f = poly_with_roots(roots)
        inner = [Fraction(a + b, 2) for a, b in zip(roots, roots[1:])]
        g = poly_with_roots(inner)
        assert interlaces(g, f)
        assert interlaces(f, g.shift_up(1))


class TestHowCombination:
    def test_reconstruction_instance(self):
        fs = refined_eulerian(4).polys
        a, b = how_coefficient_vectors(5, 0)
        assert how_combination_check(fs, a, b)

    def test_boundary_case(self):
        fs = refined_eulerian(4).polys
        a, b = how_coefficient_vectors(5, -5)
        assert a[0] * b[1] - b[0] * a[1] == 0
        assert how_combination_check(fs, a, b)

    def test_below_boundary_violates(self):
        fs = refined_eulerian(4).polys
        a, b = how_coefficient_vectors(5, -6)
        with pytest.raises(HypothesisViolated) as info:
            how_combination_check(fs, a, b)
        assert info.value.index == 1

    def test_negative_coefficient_violates(self):
        with pytest.raises(HypothesisViolated):
            how_combination_check([P(1, 1)], [-1], [1])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            how_combination_check([P(1, 1)], [1, 2], [1])


class TestTheoremInstances:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_real_rootedness_on_a_grid(self, n):
        fam = k_family(n)
        ks = [Fraction(-n), Fraction(-2 * n + 1, 2), Fraction(0), Fraction(7, 3), Fraction(1000)]
        for k in ks:
            if k < -n:
                continue
            assert is_real_rooted(k_polynomial(fam, k)).real_rooted
