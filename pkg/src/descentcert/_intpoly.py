"""Integer-coefficient polynomial engine backing the certification layers.

Polynomials are tuples of ints in ascending power order with a nonzero last
entry (the zero polynomial is the empty tuple).  Provides primitive
pseudo-remainder gcds, squarefree decomposition, Descartes-bisection real
root isolation, exact rational-root identification, and ordered comparison
of real algebraic numbers given by sign-change intervals.  All decisions are
exact; modular gcds are used only as sound one-sided shortcuts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import floor, gcd as _int_gcd

IntPoly = tuple[int, ...]

# Large primes for one-sided gcd certificates: a degree-0 gcd mod p (with the
# leading coefficients surviving reduction) proves coprimality over Q.
_PRIMES = (2147483647, 4294967291, 2305843009213693951, 1000000007)

_MAX_ISOLATION_STEPS = 2_000_000


def trim(cs) -> IntPoly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(p: IntPoly) -> int:
    # -1 for the zero polynomial; internal convention only.
    return len(p) - 1


def neg(p: IntPoly) -> IntPoly:
    return tuple(-c for c in p)


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    out = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


def deriv(p: IntPoly) -> IntPoly:
    return trim(i * p[i] for i in range(1, len(p)))


def content(p: IntPoly) -> int:
    g = 0
    for c in p:
        g = _int_gcd(g, c)
    return g


def primitive(p: IntPoly) -> IntPoly:
    if not p:
        return p
    g = content(p)
    if g > 1:
        return tuple(c // g for c in p)
    return tuple(p)


def pos_lead(p: IntPoly) -> IntPoly:
    return neg(p) if p and p[-1] < 0 else tuple(p)


def eval_sign(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x), computed in integer arithmetic."""
    if not p:
        return 0
    num, den = x.numerator, x.denominator
    if den == 1:
        v = 0
        for c in reversed(p):
            v = v * num + c
    else:
        v = p[-1]
        dp = 1
        for c in reversed(p[:-1]):
            dp *= den
            v = v * num + c * dp
    return (v > 0) - (v < 0)


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """lc(g)^m * f reduced mod g for some 0 <= m <= deg f - deg g + 1.

    The scalar factor is whatever pseudo-division accumulates; callers only
    use the result up to content, so it is irrelevant.
    """
    df, dg = deg(f), deg(g)
    if df < dg:
        return tuple(f)
    lg = g[-1]
    r = list(f)
    for k in range(df - dg, -1, -1):
        c = r[dg + k]
        if not c:
            continue
        for i in range(len(r)):
            r[i] *= lg
        for i in range(dg + 1):
            r[i + k] -= c * g[i]
    return trim(r)


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    f, g = primitive(trim(f)), primitive(trim(g))
    if not f:
        return pos_lead(g)
    if not g:
        return pos_lead(f)
    if deg(f) < deg(g):
        f, g = g, f
    while g:
        r = primitive(pseudo_rem(f, g))
        f, g = g, r
    return pos_lead(f)


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f/g when g divides f exactly; raises ArithmeticError otherwise."""
    if not f:
        return ()
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    df, dg = deg(f), deg(g)
    if df < dg:
        raise ArithmeticError("inexact polynomial division")
    r = [Fraction(c) for c in f]
    q = [Fraction(0)] * (df - dg + 1)
    lead = Fraction(g[-1])
    for k in range(df - dg, -1, -1):
        c = r[dg + k] / lead
        q[k] = c
        if c:
            for i in range(dg + 1):
                r[i + k] -= c * g[i]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError("non-integer quotient")
    return trim(int(c) for c in q)


def squarefree_part(p: IntPoly) -> IntPoly:
    p = primitive(trim(p))
    if deg(p) < 1:
        return pos_lead(p)
    g = gcd(p, deriv(p))
    if deg(g) == 0:
        return pos_lead(p)
    return pos_lead(exact_div(p, g))


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition: [(q, m)] with q squarefree, pairwise coprime.

    Up to a positive constant, p is the product of q**m over the list.
    """
    p = primitive(trim(p))
    if deg(p) < 1:
        return []
    if p[-1] < 0:
        p = neg(p)
    dp = deriv(p)
    g = gcd(p, dp)
    if deg(g) == 0:
        return [(pos_lead(p), 1)]
    c = exact_div(p, g)
    d = sub(exact_div(dp, g), deriv(c))
    out = []
    m = 1
    while deg(c) > 0:
        a = gcd(c, d)
        if deg(a) > 0:
            out.append((pos_lead(a), m))
        c = exact_div(c, a)
        d = sub(exact_div(d, a) if d else (), deriv(c))
        m += 1
        if m > len(p) + 1:
            raise AssertionError("squarefree decomposition failed to terminate")
    return out


# -- modular shortcuts -----------------------------------------------------


def _mod_rem(a: list[int], b: list[int], q: int) -> list[int]:
    inv = pow(b[-1], q - 2, q)
    r = list(a)
    for k in range(len(r) - len(b), -1, -1):
        c = r[len(b) - 1 + k] * inv % q
        if c:
            for i in range(len(b)):
                r[i + k] = (r[i + k] - c * b[i]) % q
    while r and r[-1] == 0:
        r.pop()
    return r


def gcd_degree_mod(f: IntPoly, g: IntPoly, q: int):
    """Degree of gcd(f, g) mod q, or None when q is unusable for f, g."""
    if not f or not g:
        return None
    if f[-1] % q == 0 or g[-1] % q == 0:
        return None
    a = [c % q for c in f]
    b = [c % q for c in g]
    while b and b[-1] == 0:
        b.pop()
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _mod_rem(a, b, q)
    return len(a) - 1


def is_coprime_hint(f: IntPoly, g: IntPoly) -> bool:
    """True proves gcd(f, g) is constant; False is inconclusive."""
    for q in _PRIMES:
        if gcd_degree_mod(f, g, q) == 0:
            return True
    return False


def is_squarefree_hint(p: IntPoly) -> bool:
    return is_coprime_hint(p, deriv(p))


@lru_cache(maxsize=8192)
def _shared_factor(pa: IntPoly, pb: IntPoly):
    """A squarefree poly whose roots are the common roots of pa, pb, or None."""
    if pa == pb:
        return pa
    if is_coprime_hint(pa, pb):
        return None
    g = gcd(pa, pb)
    return g if deg(g) >= 1 else None


# -- root isolation ---------------------------------------------------------


def cauchy_pow2_exponent(p: IntPoly) -> int:
    """Smallest e with every root of p strictly inside (-2**e, 2**e)."""
    lead = abs(p[-1])
    mx = max((abs(c) for c in p[:-1]), default=0)
    e = 0
    while (lead << e) < lead + mx:
        e += 1
    return e


def taylor_shift1(p: IntPoly) -> IntPoly:
    """p(x + 1) by Pascal accumulation."""
    c = list(p)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return tuple(c)


def _sign_variations(cs) -> int:
    v = 0
    prev = 0
    for c in cs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _var_count_01(w: IntPoly) -> int:
    # Sign variations of (1+x)^d * w(1/(1+x)): bounds the roots of w in (0, 1).
    return _sign_variations(taylor_shift1(tuple(reversed(w))))


class RealRoot:
    """One real root of a squarefree integer polynomial.

    Either an exact rational (``exact is not None``) or the unique root of
    ``poly`` inside the open interval (lo, hi), whose endpoints are not roots
    and where the polynomial changes sign.  Refinement mutates the interval
    in place; it only ever shrinks.
    """

    __slots__ = ("poly", "lo", "hi", "slo", "exact")

    def __init__(self, poly: IntPoly, lo=None, hi=None, exact=None):
        self.poly = poly
        self.exact = exact
        self.lo = lo
        self.hi = hi
        self.slo = eval_sign(poly, lo) if exact is None else 0

    def __repr__(self):
        if self.exact is not None:
            return f"RealRoot(exact={self.exact})"
        return f"RealRoot(({self.lo}, {self.hi}))"

    @property
    def lower(self) -> Fraction:
        return self.exact if self.exact is not None else self.lo

    @property
    def upper(self) -> Fraction:
        return self.exact if self.exact is not None else self.hi

    def refine(self) -> None:
        if self.exact is not None:
            return
        m = (self.lo + self.hi) / 2
        s = eval_sign(self.poly, m)
        if s == 0:
            self.exact = m
            return
        if s == self.slo:
            self.lo = m
        else:
            self.hi = m

    def refine_below(self, width: Fraction) -> None:
        while self.exact is None and self.hi - self.lo >= width:
            self.refine()


def _deflate(p: IntPoly, r: Fraction) -> IntPoly:
    """Primitive integer scaling of p(x)/(x - r) for a rational root r."""
    num, den = r.numerator, r.denominator
    h = [Fraction(0)] * (len(p) - 1)
    acc = Fraction(p[-1])
    for i in range(len(p) - 2, -1, -1):
        h[i] = acc
        acc = acc * Fraction(num, den) + p[i]
    if acc != 0:
        raise AssertionError("deflation by a non-root")
    scale = 1
    for c in h:
        scale = scale * c.denominator // _int_gcd(scale, c.denominator)
    return trim(int(c * scale) for c in h)


def _repair_endpoints(rt: RealRoot) -> None:
    """Shrink an isolating interval so neither endpoint is a root of poly."""
    if rt.exact is not None:
        return
    p = rt.poly
    for side in ("lo", "hi"):
        endpoint = getattr(rt, side)
        if eval_sign(p, endpoint) != 0:
            continue
        h = _deflate(p, endpoint)
        s_ref = eval_sign(h, rt.lo)
        lo, hi = rt.lo, rt.hi
        while True:
            m = (lo + hi) / 2
            sh = eval_sign(h, m)
            if sh == 0:
                rt.exact = m
                return
            root_above_m = sh == s_ref
            if side == "lo":
                if root_above_m:
                    rt.lo = m
                    break
                hi = m
            else:
                if not root_above_m:
                    rt.hi = m
                    break
                lo = m
    rt.slo = eval_sign(p, rt.lo)
    if rt.slo == 0 or eval_sign(p, rt.hi) == 0:
        raise AssertionError("endpoint repair failed")


def _isolate_positive(q: IntPoly, full: IntPoly) -> list[RealRoot]:
    """Roots of q in (0, +inf); q(0) != 0, q squarefree.

    Emitted RealRoots reference ``full`` (q times a possible x factor): for
    positive arguments the two have identical signs and identical roots.
    """
    if deg(q) < 1 or _sign_variations(q) == 0:
        return []
    e = cauchy_pow2_exponent(q)
    scaled = tuple(c << (e * i) for i, c in enumerate(q))
    out: list[RealRoot] = []
    stack = [(scaled, Fraction(0), Fraction(1 << e))]
    steps = 0
    while stack:
        steps += 1
        if steps > _MAX_ISOLATION_STEPS:
            raise RuntimeError("root isolation exceeded its step budget")
        w, glo, ghi = stack.pop()
        v = _var_count_01(w)
        if v == 0:
            continue
        if v == 1:
            out.append(RealRoot(full, glo, ghi))
            continue
        d = len(w) - 1
        wl = tuple(c << (d - i) for i, c in enumerate(w))
        gmid = (glo + ghi) / 2
        if sum(wl) == 0:  # w(1/2) == 0: exact dyadic root
            out.append(RealRoot(full, exact=gmid))
        wr = list(taylor_shift1(wl))
        while wr and wr[0] == 0:
            wr.pop(0)
        stack.append((wl, glo, gmid))
        stack.append((tuple(wr), gmid, ghi))
    return out


def isolate(p: IntPoly) -> list[RealRoot]:
    """All real roots of a squarefree integer polynomial, in ascending order."""
    p = trim(p)
    if deg(p) < 1:
        return []
    roots: list[RealRoot] = []
    q = p
    if q[0] == 0:
        roots.append(RealRoot(p, exact=Fraction(0)))
        q = trim(q[1:])  # squarefree: x divides exactly once
        while q and q[0] == 0:
            raise AssertionError("repeated zero root in squarefree input")
    roots.extend(_isolate_positive(q, p))
    mirrored = tuple(c if i % 2 == 0 else -c for i, c in enumerate(q))
    for rt in _isolate_positive(mirrored, mirrored):
        if rt.exact is not None:
            roots.append(RealRoot(p, exact=-rt.exact))
        else:
            roots.append(RealRoot(p, -rt.hi, -rt.lo))
    for rt in roots:
        _repair_endpoints(rt)
    roots.sort(key=lambda r: r.lower)
    return roots


# -- exact rational identification ------------------------------------------


def _floor(x: Fraction) -> int:
    return floor(x)


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """A rational with minimal denominator in the closed interval [a, b]."""
    if a > b:
        a, b = b, a
    if a == b:
        return a
    if a <= 0 <= b:
        return Fraction(0)
    if b < 0:
        return -simplest_between(-b, -a)
    ia, ib = _floor(a), _floor(b)
    if a == ia:
        return a
    if ia < ib:
        return Fraction(ia + 1)
    return ia + 1 / simplest_between(1 / (b - ia), 1 / (a - ia))


def identify_rational(rt: RealRoot):
    """Decide exactly whether the root is rational; upgrade in place if so.

    Relies on the denominator of any rational root dividing the leading
    coefficient: once the interval is narrower than 1/lead**2 it contains at
    most one candidate, the simplest rational, which a sign evaluation then
    accepts or rejects.
    """
    if rt.exact is not None:
        return rt.exact
    lead = abs(rt.poly[-1])
    threshold = Fraction(1, lead * lead)
    while True:
        cand = simplest_between(rt.lo, rt.hi)
        if eval_sign(rt.poly, cand) == 0:
            rt.exact = cand
            return cand
        if rt.hi - rt.lo < threshold:
            return None
        rt.refine()
        if rt.exact is not None:
            return rt.exact


# -- ordered comparison of roots ---------------------------------------------


def _cmp_frac(a: Fraction, b: Fraction) -> int:
    return (a > b) - (a < b)


def _cmp_root_vs_rational(rt: RealRoot, r: Fraction) -> int:
    """-1, 0, 1 as the root is below, equal to, or above r."""
    if rt.exact is not None:
        return _cmp_frac(rt.exact, r)
    if r <= rt.lo:
        return 1
    if r >= rt.hi:
        return -1
    s = eval_sign(rt.poly, r)
    if s == 0:
        rt.exact = r
        return 0
    return -1 if s != rt.slo else 1


def compare_roots(x: RealRoot, y: RealRoot) -> int:
    """Exact three-way comparison of two real algebraic numbers."""
    if x is y:
        return 0
    checked_shared = False
    while True:
        if x.exact is not None and y.exact is not None:
            return _cmp_frac(x.exact, y.exact)
        if x.exact is not None:
            return -_cmp_root_vs_rational(y, x.exact)
        if y.exact is not None:
            return _cmp_root_vs_rational(x, y.exact)
        if x.hi <= y.lo:
            return -1
        if y.hi <= x.lo:
            return 1
        if not checked_shared:
            checked_shared = True
            shared = _shared_factor(x.poly, y.poly)
            if shared is not None:
                a, b = max(x.lo, y.lo), min(x.hi, y.hi)
                if eval_sign(shared, a) != eval_sign(shared, b):
                    return 0
        x.refine()
        y.refine()


def sort_and_merge(roots) -> list[RealRoot]:
    """Distinct roots in ascending order, merging duplicates across inputs."""
    from functools import cmp_to_key

    rs = sorted(roots, key=cmp_to_key(compare_roots))
    out: list[RealRoot] = []
    for r in rs:
        if out and compare_roots(out[-1], r) == 0:
            if out[-1].exact is None and r.exact is not None:
                out[-1] = r
            continue
        out.append(r)
    return out


def rational_between(x: RealRoot, y: RealRoot) -> Fraction:
    """A rational strictly between two ordered, distinct roots."""
    while True:
        if x.exact is not None and y.exact is not None:
            return (x.exact + y.exact) / 2
        if x.exact is not None:
            if y.lo > x.exact:
                return (x.exact + y.lo) / 2
        elif y.exact is not None:
            if x.hi < y.exact:
                return (x.hi + y.exact) / 2
        else:
            if x.hi < y.lo:
                return (x.hi + y.lo) / 2
            if x.hi == y.lo:
                return x.hi
        x.refine()
        y.refine()


def rational_below(rt: RealRoot) -> Fraction:
    return rt.lower - 1


def rational_above(rt: RealRoot) -> Fraction:
    return rt.upper + 1
