import itertools

import pytest
from hypothesis import given, settings, strategies as st

from descentcert.errors import CutoffExceeded, DuplicateEntry, InvalidN
from descentcert.eulerian import eulerian
from descentcert.stacksort import (
    DescentTable,
    descent_count,
    descent_table,
    is_t_stack_sortable,
    narayana_poly,
    sortable_descent_counts,
    stack_sort_once,
    w2_closed_form,
    wn_n_minus_2_identity_check,
)

from conftest import P

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestSortOnce:
    def test_identity_is_fixed(self):
        assert stack_sort_once((1, 2, 3)) == (1, 2, 3)

    def test_examples(self):
        assert stack_sort_once((2, 3, 1)) == (2, 1, 3)
        assert stack_sort_once((2, 1, 3)) == (1, 2, 3)

    def test_empty_and_single(self):
        assert stack_sort_once(()) == ()
        assert stack_sort_once((4,)) == (4,)

    def test_arbitrary_distinct_entries(self):
        assert stack_sort_once((9, 2, 7)) == (2, 7, 9)

    def test_duplicate_entries_rejected(self):
        with pytest.raises(DuplicateEntry):
            stack_sort_once((1, 2, 1))

    def test_matches_recursive_definition(self):
        def recursive(w):
            if not w:
                return ()
            i = w.index(max(w))
            return recursive(w[:i]) + recursive(w[i + 1 :]) + (w[i],)

        for n in range(1, 7):
            for perm in itertools.permutations(range(1, n + 1)):
                assert stack_sort_once(perm) == recursive(perm)


class TestSortability:
    def test_identity(self):
        assert is_t_stack_sortable((1, 2, 3, 4), 1)

    def test_231(self):
        assert not is_t_stack_sortable((2, 3, 1), 1)
        assert is_t_stack_sortable((2, 3, 1), 2)

    def test_everything_sorts_at_n_minus_1(self):
        for perm in itertools.permutations(range(1, 5)):
            assert is_t_stack_sortable(perm, 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_idempotent_limit(self, n):
        t = max(n - 1, 1)
        for perm in itertools.permutations(range(1, n + 1)):
            assert is_t_stack_sortable(perm, t)

    @given(perms, st.integers(min_value=1, max_value=6))
    def test_monotone_in_t(self, perm, t):
        if is_t_stack_sortable(perm, t):
            assert is_t_stack_sortable(perm, t + 1)


class TestDescents:
    def test_examples(self):
        assert descent_count((1, 2, 3)) == 0
        assert descent_count((3, 2, 1)) == 2
        assert descent_count((2, 1, 3)) == 1


class TestTables:
    def test_full_depth_is_eulerian(self):
        assert descent_table(4, 3).counts == (1, 11, 11, 1)

    def test_two_pass_table(self):
        table = descent_table(4, 2)
        assert table.counts == (1, 10, 10, 1)
        assert sum(table.counts) == 22

    def test_one_pass_is_narayana(self):
        assert descent_table(3, 1).counts == (1, 3, 1)

    def test_cutoff(self):
        with pytest.raises(CutoffExceeded):
            descent_table(8, 2, cutoff=7)

    def test_t_range_validated(self):
        with pytest.raises(ValueError):
            descent_table(4, 4)
        with pytest.raises(ValueError):
            DescentTable(4, 0, (1, 0, 0, 0))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_palindromic_and_unimodal(self, n):
        for t in range(1, n):
            counts = descent_table(n, t).counts
            assert counts == tuple(reversed(counts))
            rising = True
            for prev, cur in zip(counts, counts[1:]):
                if rising and cur < prev:
                    rising = False
                elif not rising and cur > prev:
                    pytest.fail(f"not unimodal: {counts}")

    @pytest.mark.parametrize("n", range(1, 9))
    def test_boundary_tables(self, n):
        assert P(*sortable_descent_counts(n, 1)) == narayana_poly(n)
        assert P(*sortable_descent_counts(n, max(n - 1, 1))) == eulerian(n)


class TestClosedForms:
    def test_w2_examples(self):
        assert w2_closed_form(3, 1) == 4
        assert w2_closed_form(4, 1) == 10
        assert w2_closed_form(4, 0) == 1

    def test_w2_range_check(self):
        with pytest.raises(InvalidN):
            w2_closed_form(4, 4)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_w2_matches_enumeration(self, n):
        counts = sortable_descent_counts(n, 2)
        for k in range(n):
            assert w2_closed_form(n, k) == counts[k]

    def test_narayana_examples(self):
        assert narayana_poly(1) == P(1)
        assert narayana_poly(3) == P(1, 3, 1)
        assert narayana_poly(4) == P(1, 6, 6, 1)

    def test_identity_frozen_example(self):
        assert descent_table(4, 2).to_poly() == eulerian(4) - eulerian(2).shift_up(1)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_n_minus_2_identity(self, n):
        assert wn_n_minus_2_identity_check(n)

    def test_identity_needs_n_at_least_4(self):
        with pytest.raises(InvalidN):
            wn_n_minus_2_identity_check(3)
