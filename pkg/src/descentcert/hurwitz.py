"""Hurwitz determinants and exact distinct-real-rootedness thresholds.

For f of degree n with positive leading coefficient, positivity of the 2k x
2k Hurwitz determinants of (f, f') for k = 1..n characterizes n distinct
real zeros.  Applied to the family A_n(x) + k x A_{n-2}(x) the determinants
become polynomials in the parameter of degree at most 2j (each matrix row is
affine in k), so they are reconstructed exactly by evaluation at integer
nodes and Lagrange interpolation; their real roots carve the parameter line
into sign-constant intervals, from which the two threshold values are read
off and identified as exact rationals whenever possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd
from typing import Optional, Sequence

from . import _intpoly as ip
from .errors import IndexOutOfRange, InvalidN, NonPositiveLeading, StructureUnexpected
from .eulerian import eulerian
from .polynomial import Poly, Rat, RatLike, format_rat, interpolate
from .rootcert import to_int_poly


@dataclass(frozen=True)
class HurwitzInput:
    """Descending coefficient rows a (of f) and b (of g), both length n+1.

    a[0] is the leading coefficient of f and must be nonzero; g is laid out
    in the same degree-n window, zero-padded at the front if shorter.
    """

    a: tuple[Rat, ...]
    b: tuple[Rat, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(c) for c in self.a))
        object.__setattr__(self, "b", tuple(Fraction(c) for c in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have equal length")
        if len(self.a) < 2:
            raise ValueError("need at least a degree-1 layout")
        if self.a[0] == 0:
            raise ValueError("a[0] (the leading coefficient) must be nonzero")


def hurwitz_input_for(f: Poly) -> HurwitzInput:
    """Rows (f, f') in the degree-n window: b[0] = 0, b[m] = (n-m+1) a[m-1]."""
    if f.is_zero or f.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    a = tuple(reversed(f.coeffs))
    d = tuple(reversed(f.derivative().coeffs))
    return HurwitzInput(a, (Fraction(0),) + d)


def _matrix_rows(a: Sequence, b: Sequence, k: int, zero) -> list[list]:
    """The 2k x 2k interleaved-shift matrix; indices beyond the rows are zero."""
    size = 2 * k
    rows = []
    for shift in range(k):
        for coeffs in (a, b):
            row = [zero] * size
            for col in range(shift, size):
                idx = col - shift
                if idx < len(coeffs):
                    row[col] = coeffs[idx]
            rows.append(row)
    return rows


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant with row swaps."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[c][c]
        for r in range(c + 1, n):
            mrc = m[r][c]
            row_r = m[r]
            row_c = m[c]
            for cc in range(c + 1, n):
                row_r[cc] = (row_r[cc] * pivot - mrc * row_c[cc]) // prev
            row_r[c] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _leading_principal_minors(rows: list[list[int]]) -> Optional[list[int]]:
    """All leading principal minors in one elimination; None on a zero pivot."""
    m = [row[:] for row in rows]
    n = len(m)
    prev = 1
    minors = []
    for c in range(n):
        pivot = m[c][c]
        minors.append(pivot)
        if c == n - 1:
            break
        if pivot == 0:
            return None
        for r in range(c + 1, n):
            mrc = m[r][c]
            row_r = m[r]
            row_c = m[c]
            for cc in range(c + 1, n):
                row_r[cc] = (row_r[cc] * pivot - mrc * row_c[cc]) // prev
            row_r[c] = 0
        prev = pivot
    return minors


def hurwitz_det(inp: HurwitzInput, k: int) -> Rat:
    """Exact 2k x 2k determinant of the interleaved coefficient matrix."""
    n = len(inp.a) - 1
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k must lie in [1, {n}], got {k}")
    rows = _matrix_rows(inp.a, inp.b, k, Fraction(0))
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // _int_gcd(lcm, x.denominator)
        scale *= lcm
        int_rows.append([int(x * lcm) for x in row])
    return Fraction(_bareiss_det(int_rows)) / scale


def distinct_real_by_hurwitz(f: Poly) -> bool:
    """True iff deg(f) distinct real zeros: all determinants strictly positive."""
    if f.is_zero or f.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if f.leading <= 0:
        raise NonPositiveLeading("the criterion requires a positive leading coefficient")
    inp = hurwitz_input_for(f)
    n = f.degree
    return all(hurwitz_det(inp, k) > 0 for k in range(1, n + 1))


# -- the parameterized family ------------------------------------------------


def _family_pair(n: int) -> tuple[Poly, Poly]:
    """(A_n, x A_{n-2}); valid for every n >= 3."""
    return eulerian(n), eulerian(n - 2).shift_up(1)


def family_poly_at(n: int, k: RatLike) -> Poly:
    """A_n(x) + k x A_{n-2}(x) for any rational k, n >= 3."""
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    base, bump = _family_pair(n)
    return base + Fraction(k) * bump


@lru_cache(maxsize=None)
def det_polys_in_k(n: int) -> tuple[Poly, ...]:
    """D_j(k) for j = 1..n-1: the 2j x 2j determinants as polynomials in k.

    Every matrix entry is affine in k, so deg D_j <= 2j; evaluating at the
    integer nodes 0, 1, -1, 2, -2, ... and interpolating is exact.  One
    fraction-free elimination per node yields all orders at once via nested
    leading principal minors, with a per-order fallback when a pivot
    vanishes.
    """
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    base, bump = _family_pair(n)
    base_i = [int(c) for c in base.coeffs]
    bump_i = [int(c) for c in bump.coeffs]
    deg_f = n - 1
    nodes: list[int] = [0]
    step = 1
    while len(nodes) < 2 * deg_f + 1:
        nodes.extend((step, -step))
        step += 1
    nodes = nodes[: 2 * deg_f + 1]

    values: dict[int, list[tuple[int, int]]] = {j: [] for j in range(1, deg_f + 1)}
    for k0 in nodes:
        asc = [bc + k0 * (bump_i[i] if i < len(bump_i) else 0) for i, bc in enumerate(base_i)]
        a_row = asc[::-1]
        b_row = [0] + [i * asc[i] for i in range(len(asc) - 1, 0, -1)]
        rows = _matrix_rows(a_row, b_row, deg_f, 0)
        minors = _leading_principal_minors(rows)
        for j in range(1, deg_f + 1):
            if minors is not None:
                det = minors[2 * j - 1]
            else:
                det = _bareiss_det(_matrix_rows(a_row, b_row, j, 0))
            values[j].append((k0, det))
    return tuple(
        interpolate(values[j][: 2 * j + 1]) for j in range(1, deg_f + 1)
    )


@dataclass(frozen=True)
class Boundary:
    """A threshold value: exact rational, or an isolating interval fallback."""

    value: Optional[Rat]
    interval: Optional[tuple[Rat, Rat]]

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        if self.is_exact:
            return format_rat(self.value)
        lo, hi = self.interval
        return f"({format_rat(lo)},{format_rat(hi)})"


@dataclass(frozen=True)
class ThresholdResult:
    n: int
    omega: Boundary
    Omega: Boundary
    det_polys_in_k: tuple[Poly, ...]


def _boundary_of(rt: ip.RealRoot) -> Boundary:
    if ip.identify_rational(rt) is not None:
        return Boundary(rt.exact, None)
    rt.refine_below(Fraction(1, 2**20))
    return Boundary(None, (rt.lo, rt.hi))


def _region_repr(samples, truth, roots) -> list:
    ends = [None] + [Boundary(r.exact, None if r.exact is not None else (r.lo, r.hi)) for r in roots] + [None]
    regions = []
    for i, holds in enumerate(truth):
        lo = str(ends[i]) if ends[i] is not None else None
        hi = str(ends[i + 1]) if ends[i + 1] is not None else None
        regions.append((lo, hi, holds))
    return regions


@lru_cache(maxsize=None)
def thresholds(n: int) -> ThresholdResult:
    """Exact threshold pair for the family A_n + k x A_{n-2}.

    Collects the real roots of every determinant polynomial, samples the
    criterion once in each open interval between consecutive roots (sign
    constancy there is guaranteed by exact root isolation), and demands the
    two-ray shape: criterion true below the smallest root and above the
    largest, false everywhere between.  Any other shape raises
    StructureUnexpected carrying the full decomposition.
    """
    if n < 3:
        raise InvalidN(f"n must be >= 3, got {n}")
    dps = det_polys_in_k(n)
    if any(dp.is_zero for dp in dps):
        raise StructureUnexpected(
            f"n={n}: a determinant polynomial vanishes identically; "
            "the criterion fails everywhere"
        )
    roots: list[ip.RealRoot] = []
    for dp in dps:
        if dp.degree < 1:
            continue
        p = to_int_poly(dp)
        sf = p if ip.is_squarefree_hint(p) else ip.squarefree_part(p)
        roots.extend(ip.isolate(sf))
    merged = ip.sort_and_merge(roots)
    if not merged:
        raise StructureUnexpected(
            f"n={n}: no determinant polynomial has a real root; "
            "the criterion is constant on the whole line"
        )
    samples = [ip.rational_below(merged[0])]
    for left, right in zip(merged, merged[1:]):
        samples.append(ip.rational_between(left, right))
    samples.append(ip.rational_above(merged[-1]))
    truth = [all(dp(s) > 0 for dp in dps) for s in samples]
    two_ray = (
        len(merged) >= 2
        and truth[0]
        and truth[-1]
        and not any(truth[1:-1])
    )
    if not two_ray:
        raise StructureUnexpected(
            f"n={n}: admissible set is not two open rays",
            regions=_region_repr(samples, truth, merged),
        )
    return ThresholdResult(n, _boundary_of(merged[0]), _boundary_of(merged[-1]), dps)
