"""Eulerian polynomials, their last-letter refinement, and the bump family.

The refinement splits the descent generating polynomial of S_n by the last
letter of the permutation: entry i collects the permutations ending in n-i.
Everything is built from the triangular recurrence with A_{1,0} = 1, and the
exhaustive enumeration oracles recompute the same data straight from the
definition for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CutoffExceeded, InvalidN
from .polynomial import ONE, Poly, Rat, RatLike, ZERO

DEFAULT_ENUMERATION_CUTOFF = 10


@dataclass(frozen=True)
class RefinedFamily:
    """The n last-letter classes of S_n; ``polys[i]`` tallies descents over
    permutations with last letter n - i."""

    n: int
    polys: tuple[Poly, ...]

    @property
    def total(self) -> Poly:
        acc = ZERO
        for p in self.polys:
            acc = acc + p
        return acc

    def to_json_dict(self) -> dict:
        return {"n": self.n, "polys": [p.to_json_dict() for p in self.polys]}


@dataclass(frozen=True)
class KFamily:
    """Monic family base + k * bump with base = A_n and bump = x * A_{n-2}."""

    n: int
    base: Poly
    bump: Poly


@lru_cache(maxsize=None)
def refined_eulerian(n: int) -> RefinedFamily:
    """Refined family for S_n via the triangular recurrence.

    Entry i of row n is x times the sum of the previous row below i plus the
    sum of the previous row from i up.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if n == 1:
        return RefinedFamily(1, (ONE,))
    prev = refined_eulerian(n - 1).polys
    # prefix[i] = sum of prev[:i]; suffix[i] = sum of prev[i:]
    prefix = [ZERO]
    for p in prev:
        prefix.append(prefix[-1] + p)
    total = prefix[-1]
    polys = []
    for i in range(n):
        below = prefix[min(i, n - 1)]
        at_or_above = total - below
        polys.append(below.shift_up(1) + at_or_above)
    return RefinedFamily(n, tuple(polys))


@lru_cache(maxsize=None)
def eulerian(n: int) -> Poly:
    """Descent generating polynomial of S_n (sum of the refined family)."""
    return refined_eulerian(n).total


def _descents(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def eulerian_by_enumeration(n: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> Poly:
    """Independent oracle: tally x^des over all n! permutations."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if n > cutoff:
        raise CutoffExceeded(f"n={n} exceeds the enumeration cutoff {cutoff}")
    counts = [0] * n
    for perm in itertools.permutations(range(1, n + 1)):
        counts[_descents(perm)] += 1
    return Poly.of(*counts)


def refined_by_enumeration(n: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> RefinedFamily:
    """Independent oracle: tally x^des over permutations grouped by last letter."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if n > cutoff:
        raise CutoffExceeded(f"n={n} exceeds the enumeration cutoff {cutoff}")
    counts = [[0] * n for _ in range(n)]
    for perm in itertools.permutations(range(1, n + 1)):
        counts[n - perm[-1]][_descents(perm)] += 1
    return RefinedFamily(n, tuple(Poly.of(*row) for row in counts))


def weighted_sum_identity_check(n: int) -> bool:
    """Does sum_j ((n-j-1)x + j+1) * A_{n-1,j} reproduce A_n exactly?"""
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    prev = refined_eulerian(n - 1).polys
    acc = ZERO
    for j in range(n - 1):
        acc = acc + Poly.of(j + 1, n - j - 1) * prev[j]
    return acc == eulerian(n)


def matrix_recurrence_check(n: int) -> bool:
    """Does the lower-triangular-in-x matrix map row n-1 onto row n?

    Row i of the n x (n-1) matrix has x strictly below the diagonal and 1 on
    and above it.
    """
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    prev = refined_eulerian(n - 1).polys
    family = refined_eulerian(n).polys
    x = Poly.of(0, 1)
    for i in range(n):
        acc = ZERO
        for j in range(n - 1):
            acc = acc + (x * prev[j] if j < i else prev[j])
        if acc != family[i]:
            return False
    return True


def boundary_identities_check(n: int) -> bool:
    """A_{n-1,0} = A_{n-2} and A_{n-1,n-2} = x * A_{n-2}."""
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    prev = refined_eulerian(n - 1).polys
    low = eulerian(n - 2)
    return prev[0] == low and prev[n - 2] == low.shift_up(1)


def k_family(n: int) -> KFamily:
    if n <= 3:
        raise InvalidN(f"the bump family needs n > 3, got {n}")
    return KFamily(n, eulerian(n), eulerian(n - 2).shift_up(1))


def k_polynomial(family: KFamily, k: RatLike) -> Poly:
    """base + k * bump; monic of degree n - 1 for every rational k."""
    return family.base + Fraction(k) * family.bump


def how_coefficient_vectors(n: int, k: RatLike) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
    """Coefficient vectors splitting base + k*bump over the refined row n-1.

    With m = n - 1: a = (n + k/2 - 1, n-2, ..., 2, 1) and
    b = (1, 2, ..., n-2, n + k/2 - 1).  They satisfy
    sum_i (a_i x + b_i) A_{n-1,i-1}(x) = base + k x A_{n-2}(x).
    """
    if n <= 3:
        raise InvalidN(f"the coefficient split needs n > 3, got {n}")
    k = Fraction(k)
    edge = n + k / 2 - 1
    m = n - 1
    a = [edge] + [Fraction(n - i) for i in range(2, m)] + [Fraction(1)]
    b = [Fraction(1)] + [Fraction(i) for i in range(2, m)] + [edge]
    return tuple(a), tuple(b)
