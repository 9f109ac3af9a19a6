"""Exact certificates: real-rootedness, root isolation, and interlacing.

Sturm chains over exact rationals count distinct real roots; Descartes
bisection isolates them into disjoint sign-change intervals with rational
roots reported exactly.  Interlacing of two real-rooted polynomials is
decided on the multiplicity-expanded root multisets by exact comparison of
real algebraic numbers, with shared roots across polynomials detected
through gcds rather than by interval refinement (which could not separate
equal roots).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from . import _intpoly as ip
from .errors import (
    ConstantPolynomial,
    DegreeGapTooLarge,
    HypothesisViolated,
    NonPositiveLeading,
    NotRealRooted,
    NotSquarefree,
    ZeroPolynomial,
)
from .polynomial import Poly, Rat, RatLike, ZERO

DEFAULT_ISOLATION_WIDTH = Fraction(1, 2**20)


@dataclass(frozen=True)
class SturmChain:
    """f, f', then successive negated remainders until a zero remainder."""

    members: tuple[Poly, ...]


@dataclass(frozen=True)
class RootIsolation:
    """Rational roots exactly; every interval holds exactly one irrational root."""

    exact_roots: tuple[Rat, ...]
    intervals: tuple[tuple[Rat, Rat], ...]

    @property
    def count(self) -> int:
        return len(self.exact_roots) + len(self.intervals)


@dataclass(frozen=True)
class RootCertificate:
    degree: int
    distinct_real_count: int
    real_rooted: bool
    distinct_real_rooted: bool

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "distinct_real_count": self.distinct_real_count,
            "real_rooted": self.real_rooted,
            "distinct_real_rooted": self.distinct_real_rooted,
        }


def to_int_poly(f: Poly) -> ip.IntPoly:
    """Primitive integer polynomial with the same roots and sign pattern."""
    if f.is_zero:
        return ()
    scale = 1
    for c in f.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return ip.primitive(tuple(int(c * scale) for c in f.coeffs))


def sturm_chain(f: Poly) -> SturmChain:
    """Textbook Sturm sequence of f: exact rational coefficients, no rescaling."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no Sturm chain")
    if f.degree == 0:
        raise ConstantPolynomial("a constant polynomial has no Sturm chain")
    members = [f, f.derivative()]
    while not members[-1].is_zero:
        r = members[-2] % members[-1]
        if r.is_zero:
            break
        members.append(-r)
    return SturmChain(tuple(members))


def _variations(signs) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def count_distinct_real_roots(f: Poly) -> int:
    """Sign-variation difference of the Sturm chain between -inf and +inf."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root count")
    if f.degree == 0:
        return 0
    chain = sturm_chain(f).members
    at_minus = [_sign(p.leading) * (-1) ** p.degree for p in chain]
    at_plus = [_sign(p.leading) for p in chain]
    return _variations(at_minus) - _variations(at_plus)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Primitive integer gcd with positive leading coefficient, as a Poly."""
    return Poly.of(*ip.gcd(to_int_poly(f), to_int_poly(g)))


def is_real_rooted(f: Poly) -> RootCertificate:
    """Certificate that every zero of f is real (and whether all are simple).

    The squarefree part f / gcd(f, f') is real-rooted iff its distinct real
    root count equals its degree; distinctness additionally needs the gcd to
    be constant.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no certificate")
    n = f.degree
    if n == 0:
        return RootCertificate(0, 0, True, True)
    F = to_int_poly(f)
    g = ip.gcd(F, ip.deriv(F))
    sf = F if ip.deg(g) == 0 else ip.exact_div(F, g)
    count = count_distinct_real_roots(Poly.of(*sf))
    real = count == ip.deg(sf)
    return RootCertificate(n, count, real, real and ip.deg(g) == 0)


def isolate_roots(f: Poly, max_width: Fraction = DEFAULT_ISOLATION_WIDTH) -> RootIsolation:
    """Exact rational roots plus disjoint isolating intervals for the rest.

    Requires a squarefree input; every returned interval is narrower than
    ``max_width``, has non-root endpoints of opposite sign, and contains
    exactly one (provably irrational) root.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if f.degree == 0:
        return RootIsolation((), ())
    F = to_int_poly(f)
    if ip.deg(ip.gcd(F, ip.deriv(F))) >= 1:
        raise NotSquarefree("input has repeated roots; pass the squarefree part")
    exact = []
    intervals = []
    for rt in ip.isolate(F):
        if ip.identify_rational(rt) is not None:
            exact.append(rt.exact)
            continue
        rt.refine_below(max_width)
        intervals.append((rt.lo, rt.hi))
    return RootIsolation(tuple(sorted(exact)), tuple(sorted(intervals)))


# -- interlacing -------------------------------------------------------------


def _root_multiset(f: Poly) -> list[ip.RealRoot]:
    """Roots of f in descending order, repeated by multiplicity.

    Raises NotRealRooted when the real roots (with multiplicity) fall short
    of the degree.
    """
    F = to_int_poly(f)
    items: list[tuple[ip.RealRoot, int]] = []
    found = 0
    for q, m in ip.squarefree_decomposition(F):
        for rt in ip.isolate(q):
            items.append((rt, m))
            found += m
    if found != ip.deg(F):
        raise NotRealRooted(f"{f!r} has non-real zeros")
    items.sort(key=cmp_to_key(lambda a, b: ip.compare_roots(a[0], b[0])), reverse=True)
    expanded: list[ip.RealRoot] = []
    for rt, m in items:
        expanded.extend([rt] * m)
    return expanded


def _validate_interlace_arg(p: Poly) -> None:
    if p.is_zero:
        raise ZeroPolynomial("interlacing is undefined for the zero polynomial")
    if p.leading <= 0:
        raise NonPositiveLeading(f"{p!r} must have a positive leading coefficient")


def _chain_condition(roots_g: list, roots_f: list) -> bool:
    # Descending chain r1 >= s1 >= r2 >= s2 >= ... (weak inequalities).
    for i, s in enumerate(roots_g):
        if ip.compare_roots(s, roots_f[i]) > 0:
            return False
        if i + 1 < len(roots_f) and ip.compare_roots(s, roots_f[i + 1]) < 0:
            return False
    return True


def interlaces(g: Poly, f: Poly) -> bool:
    """Weak interlacing: do the roots of g separate those of f from below?

    Both arguments must be real-rooted with positive leading coefficients
    and degrees differing by at most one.  Equal roots are allowed; shared
    irrational roots are recognized exactly via gcds.  A g of degree
    deg(f) + 1 has too many roots to interlace and yields False.
    """
    _validate_interlace_arg(g)
    _validate_interlace_arg(f)
    dg, df = g.degree, f.degree
    if abs(df - dg) > 1:
        raise DegreeGapTooLarge(f"degrees {dg} and {df} differ by more than one")
    roots_g = _root_multiset(g)
    roots_f = _root_multiset(f)
    if dg == df + 1:
        return False
    return _chain_condition(roots_g, roots_f)


def pairwise_interlacing(seq: Sequence[Poly]) -> bool:
    """Does every earlier member interlace every later one?"""
    polys = list(seq)
    for p in polys:
        _validate_interlace_arg(p)
    multisets = [_root_multiset(p) for p in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            dg, df = polys[i].degree, polys[j].degree
            if abs(df - dg) > 1:
                raise DegreeGapTooLarge(f"degrees {dg} and {df} differ by more than one")
            if dg == df + 1:
                return False
            if not _chain_condition(multisets[i], multisets[j]):
                return False
    return True


def how_combination_check(
    fs: Sequence[Poly], a: Sequence[RatLike], b: Sequence[RatLike]
) -> bool:
    """Nonnegative-combination criterion for a pairwise interlacing sequence.

    Verifies a_i >= 0, b_i >= 0 and a_i b_{i+1} >= b_i a_{i+1} (raising
    HypothesisViolated with the failing 1-based index otherwise), then
    certifies by explicit root comparison that sum a_i f_i interlaces
    sum b_i f_i.
    """
    fs = list(fs)
    av = [Fraction(x) for x in a]
    bv = [Fraction(x) for x in b]
    if not (len(fs) == len(av) == len(bv)):
        raise ValueError("fs, a, b must have equal lengths")
    for i, x in enumerate(av):
        if x < 0:
            raise HypothesisViolated(i + 1, f"a[{i + 1}] = {x} is negative")
    for i, x in enumerate(bv):
        if x < 0:
            raise HypothesisViolated(i + 1, f"b[{i + 1}] = {x} is negative")
    for i in range(len(fs) - 1):
        if av[i] * bv[i + 1] < bv[i] * av[i + 1]:
            raise HypothesisViolated(
                i + 1,
                f"a[{i + 1}] b[{i + 2}] < b[{i + 1}] a[{i + 2}] "
                f"({av[i] * bv[i + 1]} < {bv[i] * av[i + 1]})",
            )
    lhs = ZERO
    rhs = ZERO
    for coeff_a, coeff_b, p in zip(av, bv, fs):
        lhs = lhs + coeff_a * p
        rhs = rhs + coeff_b * p
    return interlaces(lhs, rhs)
