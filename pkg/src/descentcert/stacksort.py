"""Stack sorting, t-stack-sortability, and descent tables.

One pass of the sorting operator pushes entries on a stack, popping every
smaller top to the output first; iterating it n-1 times sorts any
permutation of [n].  Exhaustive tables tally descents over the t-sortable
permutations; closed forms (Narayana, the two-pass count) serve as oracles.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CutoffExceeded, DuplicateEntry, InvalidN, NonIntegerResult
from .eulerian import DEFAULT_ENUMERATION_CUTOFF, eulerian
from .polynomial import Poly

# Above this size a single exhaustive sweep takes minutes, not seconds.
WARN_ABOVE = 11


def stack_sort_once(word: Sequence[int]) -> tuple[int, ...]:
    """One application of the sorting operator to a word of distinct entries."""
    if len(set(word)) != len(word):
        raise DuplicateEntry(f"entries must be distinct: {tuple(word)}")
    out = []
    stack = []
    for value in word:
        while stack and stack[-1] < value:
            out.append(stack.pop())
        stack.append(value)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def descent_count(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def _is_sorted(word) -> bool:
    return all(a < b for a, b in zip(word, word[1:]))


def is_t_stack_sortable(word: Sequence[int], t: int) -> bool:
    """True iff t passes of the sorting operator reach the identity."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    w = tuple(word)
    if len(set(w)) != len(w):
        raise DuplicateEntry(f"entries must be distinct: {w}")
    for _ in range(t):
        if _is_sorted(w):
            return True
        w = stack_sort_once(w)
    return _is_sorted(w)


@lru_cache(maxsize=8)
def _min_depth_tally(n: int) -> tuple[tuple[int, ...], ...]:
    """tally[d][k]: permutations of [n] with k descents needing exactly d passes.

    One sweep over S_n in lexicographic order; every table for this n is a
    prefix sum of these rows.
    """
    if n > WARN_ABOVE:
        warnings.warn(
            f"exhaustive sweep over {n}! permutations; this will take a while",
            RuntimeWarning,
            stacklevel=3,
        )
    tally = [[0] * n for _ in range(n)]
    for perm in itertools.permutations(range(1, n + 1)):
        k = descent_count(perm)
        w = perm
        d = 0
        while not _is_sorted(w):
            w = stack_sort_once(w)
            d += 1
        tally[d][k] += 1
    return tuple(tuple(row) for row in tally)


def sortable_descent_counts(
    n: int, t: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> tuple[int, ...]:
    """Descent tally over the t-stack-sortable permutations of [n], any t >= 1."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if n > cutoff:
        raise CutoffExceeded(f"n={n} exceeds the enumeration cutoff {cutoff}")
    tally = _min_depth_tally(n)
    counts = [0] * n
    for d in range(min(t, n - 1) + 1):
        for k in range(n):
            counts[k] += tally[d][k]
    return tuple(counts)


@dataclass(frozen=True)
class DescentTable:
    """W_t(n, k) for k = 0..n-1, from exhaustive enumeration."""

    n: int
    t: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.t <= self.n - 1:
            raise ValueError(f"t must lie in [1, n-1], got t={self.t}, n={self.n}")

    def to_poly(self) -> Poly:
        return Poly.of(*self.counts)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "counts": list(self.counts)}

    def csv_rows(self) -> list[str]:
        return [f"{self.n},{self.t},{k},{c}" for k, c in enumerate(self.counts)]


def descent_table(n: int, t: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> DescentTable:
    if n < 2:
        raise InvalidN(f"a descent table needs n >= 2, got {n}")
    if not 1 <= t <= n - 1:
        raise ValueError(f"t must lie in [1, n-1], got t={t}")
    return DescentTable(n, t, sortable_descent_counts(n, t, cutoff))


def w2_closed_form(n: int, k: int) -> int:
    """Number of two-pass-sortable permutations of [n] with k descents.

    (n+k)! (2n-k-1)! / ((k+1)! (n-k)! (2k+1)! (2n-2k-1)!), evaluated as exact
    integers with a single division that must leave no remainder.
    """
    if not 0 <= k <= n - 1:
        raise InvalidN(f"k must lie in [0, n-1], got k={k}, n={n}")
    num = math.factorial(n + k) * math.factorial(2 * n - k - 1)
    den = (
        math.factorial(k + 1)
        * math.factorial(n - k)
        * math.factorial(2 * k + 1)
        * math.factorial(2 * n - 2 * k - 1)
    )
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(f"closed form not integral at n={n}, k={k}")
    return q


def narayana_poly(n: int) -> Poly:
    """sum_k C(n,k) C(n,k+1)/n x^k; the t=1 descent polynomial."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    coeffs = []
    for k in range(n):
        q, r = divmod(math.comb(n, k) * math.comb(n, k + 1), n)
        if r:
            raise NonIntegerResult(f"Narayana number not integral at n={n}, k={k}")
        coeffs.append(q)
    return Poly.of(*coeffs)


def wn_n_minus_2_identity_check(n: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> bool:
    """Does the (n-2)-pass table equal A_n(x) - x A_{n-2}(x)?"""
    if n < 4:
        raise InvalidN(f"the identity needs n >= 4, got {n}")
    if n > cutoff:
        raise CutoffExceeded(f"n={n} exceeds the enumeration cutoff {cutoff}")
    lhs = descent_table(n, n - 2, cutoff).to_poly()
    rhs = eulerian(n) - eulerian(n - 2).shift_up(1)
    return lhs == rhs
