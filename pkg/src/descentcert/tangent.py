"""Tangent numbers and the threshold-ratio conjecture checks.

The tangent numbers 1, 2, 16, 272, 7936, ... count up-down permutations of
odd-length sets and are computed exactly by the boustrophedon (Entringer)
triangle.  The checks compare them against the computed threshold table:
the lower boundary follows -n(n-1), the upper one the ratio of consecutive
tangent numbers at index floor(n/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidN, NonIntegerProduct
from .polynomial import Rat, RatLike


@dataclass(frozen=True)
class TangentSeq:
    """values[m] is the (m+1)-th tangent number: 1, 2, 16, 272, 7936, ..."""

    values: tuple[int, ...]


def tangent_numbers(count: int) -> TangentSeq:
    """First ``count`` tangent numbers via the boustrophedon triangle.

    Row r of the triangle starts at 0 and accumulates the previous row read
    backwards; its last entry is the zigzag number Z_r, and the tangent
    numbers are the odd-indexed zigzags.
    """
    if count < 1:
        raise InvalidN(f"count must be >= 1, got {count}")
    values = []
    row = [1]  # Z_0
    r = 0
    while len(values) < count:
        r += 1
        new = [0]
        for x in reversed(row):
            new.append(new[-1] + x)
        row = new
        if r % 2 == 1:
            values.append(row[-1])
    return TangentSeq(tuple(values))


def omega_formula(n: int) -> Rat:
    """-n(n-1), the observed lower threshold."""
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    return Fraction(-n * (n - 1))


def conjectured_Omega(n: int) -> Rat:
    """-T_{m+1}/T_m with m = floor(n/2), the conjectured upper threshold."""
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    m = n // 2
    seq = tangent_numbers(m + 1).values
    return Fraction(-seq[m], seq[m - 1])


def tangent_product_check(n: int, omegas: Sequence[RatLike]) -> bool:
    """Is |Omega_3 * Omega_5 * ... * Omega_{2n+1}| the (n+1)-th tangent number?

    ``omegas`` supplies the n upper thresholds at odd indices 3, 5, ...,
    2n+1.  The product alternates in sign; the comparison is on absolute
    values and a non-integer product raises.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    vals = [Fraction(w) for w in omegas]
    if len(vals) != n:
        raise ValueError(f"expected {n} upper thresholds, got {len(vals)}")
    prod = Fraction(1)
    for w in vals:
        prod *= w
    if prod.denominator != 1:
        raise NonIntegerProduct(f"product is not an integer: {prod}")
    target = tangent_numbers(n + 1).values[n]
    return abs(prod.numerator) == target
