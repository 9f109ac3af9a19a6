"""Dense univariate polynomials over arbitrary-precision rationals.

Coefficients are :class:`fractions.Fraction` values stored in ascending
order of power.  The zero polynomial is the empty coefficient tuple and its
degree is ``None`` rather than a numeric sentinel.  Every value is immutable
and every operation is exact; no floating point enters anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DuplicateAbscissa

Rat = Fraction
RatLike = Union[Fraction, int, str]

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rat(text: str) -> Rat:
    """Parse an exact rational from an integer literal or a ``p/q`` string."""
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rat(x: RatLike) -> str:
    """Canonical string form: integer literal, or ``p/q`` with q > 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Poly:
    """A dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[Rat, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: RatLike) -> "Poly":
        return cls(tuple(Fraction(c) for c in coeffs))

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree as an int, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self):
        """Leading coefficient, or ``None`` for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else None

    def __repr__(self) -> str:
        return "Poly.of(%s)" % ", ".join(format_rat(c) for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return ZERO
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        scalar = Fraction(other)
        return Poly(tuple(scalar * c for c in self.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return ZERO, self
        q = [Fraction(0)] * (dq + 1)
        oc = other.coeffs
        lead = oc[-1]
        for k in range(dq, -1, -1):
            c = r[len(oc) - 1 + k] / lead
            q[k] = c
            if c:
                for i, g in enumerate(oc):
                    r[i + k] -= c * g
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, t: RatLike) -> Rat:
        """Exact Horner evaluation."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift_up(self, m: int) -> "Poly":
        """Multiply by ``x**m``."""
        if self.is_zero:
            return ZERO
        return Poly((Fraction(0),) * m + self.coeffs)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Repo-wide polynomial schema; coefficients as exact strings."""
        return {"var": "x", "coeffs": [format_rat(c) for c in self.coeffs]}

    @staticmethod
    def from_json_dict(data: dict) -> "Poly":
        if not isinstance(data, dict) or "coeffs" not in data:
            raise ValueError("polynomial JSON must be an object with a 'coeffs' list")
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list):
            raise ValueError("'coeffs' must be a list of strings")
        return Poly(tuple(parse_rat(c) for c in coeffs))


ZERO = Poly(())
ONE = Poly.of(1)
X = Poly.of(0, 1)


def interpolate(points: Iterable[Sequence[RatLike]]) -> Poly:
    """Unique polynomial of degree < len(points) through all points.

    Newton divided differences with exact rationals.  Raises
    :class:`DuplicateAbscissa` if two abscissae coincide.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("two interpolation points share an abscissa")
    coef = [y for _, y in pts]
    for level in range(1, len(pts)):
        for i in range(len(pts) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    result = Poly((coef[-1],))
    for i in range(len(pts) - 2, -1, -1):
        result = result * Poly((-xs[i], Fraction(1))) + Poly((coef[i],))
    return result
