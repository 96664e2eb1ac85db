"""Dense univariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` values stored in ascending degree
order; the zero polynomial has an empty coefficient tuple.  Resultants
are computed by fraction-free subresultant elimination on
denominator-cleared integer polynomials (degree-24 Sylvester
determinants are tractable but slow without fraction-free pivoting);
the cleared denominator powers are reinstated symbolically at the end.

Sign convention, fixed here and pinned by tests:

    resultant(f, g) = lc(g)^deg(f) * prod_j f(beta_j)

over the roots beta_j of g, which is (-1)^(deg f * deg g) times the
Sylvester-matrix determinant of (f, g).  The discriminant

    disc(f) = (-1)^(n(n-1)/2) * resultant(f, f') / lc(f)

is independent of that choice because n(n-1) is even.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


@dataclass(frozen=True)
class PolyQ:
    """A polynomial over Q; `coeffs[k]` is the coefficient of X^k."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [_coerce(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs) -> "PolyQ":
        """Ascending coefficients; ints, "num/den" strings and Fractions mix freely."""
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyQ":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "PolyQ":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyQ":
        return cls((Fraction(0),) * degree + (_coerce(coeff),))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(tuple(out))

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyQ(tuple(out))

    __rmul__ = __mul__

    def scale(self, k) -> "PolyQ":
        k = _coerce(k)
        return PolyQ(tuple(c * k for c in self.coeffs))

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def eval(self, x) -> Fraction:
        """Exact Horner evaluation."""
        x = _coerce(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x) -> Fraction:
        return self.eval(x)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            terms.append(f"{c}*X^{i}" if i else f"{c}")
        return " + ".join(terms)


# -- integer-level fraction-free machinery ---------------------------------


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g or 1


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        for i in range(len(r)):
            r[i] *= lb
        if top:
            for i in range(db + 1):
                r[i + k] -= top * b[i]
    while r and r[-1] == 0:
        r.pop()
    return r[:db] if len(r) > db else r


def _int_resultant(a: list[int], b: list[int]) -> int:
    """Sylvester-determinant resultant of two nonzero integer polynomials,
    by the subresultant polynomial remainder sequence."""
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da & db & 1:
            sign = -sign
    if db == 0:
        return sign * b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    scale = ca ** db * cb ** da
    g = h = 1
    while True:
        delta = da - db
        if da & db & 1:
            sign = -sign
        rem = _prem(a, b)
        if not rem:
            return 0
        a, da = b, db
        divisor = g * h ** delta
        b = [c // divisor for c in rem]
        db = len(b) - 1
        g = a[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if db == 0:
            return sign * scale * (b[0] ** da // h ** (da - 1))


def _clear_denominators(f: PolyQ) -> tuple[list[int], int]:
    """(integer coefficient list, d) with f = (integer poly)/d."""
    d = 1
    for c in f.coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return [int(c * d) for c in f.coeffs], d


def resultant(f: PolyQ, g: PolyQ) -> Fraction:
    """Exact resultant under the convention in the module docstring.

    Zero exactly when f and g share a root.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial")
    n, m = f.degree, g.degree
    if n == 0:
        return f.lc ** m  # constant f evaluated at each root of g
    if m == 0:
        return g.lc ** n  # lc(g)^deg(f) times an empty product
    fi, df = _clear_denominators(f)
    gi, dg = _clear_denominators(g)
    base = Fraction(_int_resultant(fi, gi), df ** m * dg ** n)
    if n & m & 1:
        base = -base
    return base


def discriminant(f: PolyQ) -> Fraction:
    """disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f), exact."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res / f.lc


def trinomial_poly(u) -> PolyQ:
    """X^24 - u*(X + 1) for a nonzero rational u."""
    u = _coerce(u)
    if u == 0:
        raise ValueError("u = 0 degenerates the family")
    coeffs = [-u, -u] + [Fraction(0)] * 22 + [Fraction(1)]
    return PolyQ(tuple(coeffs))


def trinomial_disc(u) -> Fraction:
    """Closed form for disc(X^24 - u*(X+1)):  -(23^23 u + 24^24) u^23."""
    u = _coerce(u)
    if u == 0:
        raise ValueError("u = 0 degenerates the family")
    return -(Fraction(23) ** 23 * u + Fraction(24) ** 24) * u ** 23


# -- polynomial file format -------------------------------------------------


def poly_to_json(f: PolyQ) -> dict:
    """{"degree": n, "coefficients": [...]} with exact decimal strings."""
    return {
        "degree": f.degree,
        "coefficients": [
            str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in f.coeffs
        ],
    }


def poly_from_json(doc: dict) -> PolyQ:
    coeffs = [Fraction(s) for s in doc["coefficients"]]
    f = PolyQ(tuple(coeffs))
    if f.degree != doc["degree"]:
        raise ValueError("degree field disagrees with the coefficient list")
    return f


def save_poly(f: PolyQ, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(poly_to_json(f), fh, indent=1)
        fh.write("\n")


def load_poly(path) -> PolyQ:
    with open(path, encoding="utf-8") as fh:
        return poly_from_json(json.load(fh))
