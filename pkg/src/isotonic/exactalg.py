"""
Exact rational scalars, dense univariate polynomials, reduced rational
functions, and Sturm-sequence root counting.

Scalars are `fractions.Fraction`\\s.  `Poly` and `RatFunc` are hashable and
immutable, and every operation returns a value in canonical form, so two
rational functions are equal as functions iff they compare equal.
"""

from __future__ import annotations
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import reduce
from math import gcd
import re
from typing import Any, Optional, Union
import numpy as np

__all__ = [
    "Poly",
    "PoleError",
    "Rat",
    "RatFunc",
    "eval_rat",
    "format_rat",
    "parse_rat",
    "poly_arith",
    "poly_gcd",
    "ratfunc_make",
    "sturm_count",
]

Rat = Fraction

#: Anything that can be turned into an exact coefficient
Scalar = Union[int, Fraction]

RAT_RGX = re.compile(r"\s*([-+]?\d+)(?:\s*/\s*(\d+))?\s*")


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator"""


def parse_rat(s: str) -> Fraction:
    """
    Parse a rational number written as an integer or as ``"p/q"``.  Decimal
    notation is deliberately not accepted.

    >>> parse_rat("-3/2")
    Fraction(-3, 2)
    >>> parse_rat("4")
    Fraction(4, 1)

    :raises ValueError: if ``s`` is not of the form ``p`` or ``p/q``, or if
        ``q`` is zero
    """
    m = RAT_RGX.fullmatch(s)
    if not m:
        raise ValueError(f"not a rational number: {s!r}")
    num = int(m[1])
    den = int(m[2]) if m[2] is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {s!r}")
    return Fraction(num, den)


def format_rat(q: Scalar) -> str:
    """
    Inverse of `parse_rat`: ``"p/q"``, or ``"p"`` when the denominator is 1
    """
    return str(Fraction(q))


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _sign_changes(values: Iterable[Fraction]) -> int:
    changes = 0
    last = 0
    for v in values:
        if v != 0:
            s = 1 if v > 0 else -1
            if last and s != last:
                changes += 1
            last = s
    return changes


def _primitive(ints: list[int]) -> list[int]:
    g = reduce(gcd, ints, 0)
    if g == 0:
        return ints
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _to_ints(p: Poly) -> list[int]:
    den = reduce(lambda d, c: d * c.denominator // gcd(d, c.denominator), p.coeffs, 1)
    return _primitive([int(c * den) for c in p.coeffs])


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials ``a`` by ``b``"""
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


class Poly:
    """
    A dense univariate polynomial with `~fractions.Fraction` coefficients,
    stored in ascending powers of the variable (written ξ throughout this
    package) with no trailing zero coefficients.  The zero polynomial has no
    coefficients and degree -1.

    `Poly`\\s are hashable and immutable.  They support ``+``, ``-``, ``*``,
    ``**`` (nonnegative exponents), `divmod`, and may be mixed freely with
    `int`\\s and `~fractions.Fraction`\\s in arithmetic.
    """

    def __init__(self, *coeffs: Scalar) -> None:
        """
        Construct a polynomial from its coefficients in ascending order of
        power.  ``Poly(1, -3, 1)`` is :math:`1 - 3ξ + ξ^2`; ``Poly()`` is the
        zero polynomial.

        :meta autosection: construction
        """
        self.__coeffs = _strip(coeffs)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        """
        Construct :math:`cξ^k`

        :raises ValueError: if ``k`` is negative
        :meta autosection: construction
        """
        if k < 0:
            raise ValueError(k)
        return cls(*([0] * k), c)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """
        The coefficients in ascending order of power

        :meta autosection: properties
        """
        return self.__coeffs

    @property
    def degree(self) -> int:
        """
        The degree of the polynomial, or -1 for the zero polynomial

        :meta autosection: properties
        """
        return len(self.__coeffs) - 1

    @property
    def lead(self) -> Fraction:
        """
        The leading coefficient (0 for the zero polynomial)

        :meta autosection: properties
        """
        return self.__coeffs[-1] if self.__coeffs else Fraction(0)

    def __bool__(self) -> bool:
        """
        A `Poly` is true iff it is not the zero polynomial.

        :meta autosection: properties
        """
        return self.__coeffs != ()

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.__coeffs == other.__coeffs
        elif isinstance(other, (int, Fraction)):
            return self.__coeffs == _strip([other])
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.__coeffs)

    def __repr__(self) -> str:
        return "{0.__module__}.{0.__name__}({1})".format(
            type(self), ", ".join(map(format_rat, self.__coeffs))
        )

    def __str__(self) -> str:
        """
        Render the polynomial in descending powers of ``xi``

        >>> str(Poly(Fraction(15, 8), Fraction(-5, 2), Fraction(1, 2)))
        '1/2*xi^2 - 5/2*xi + 15/8'

        :meta autosection: properties
        """
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.__coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rat(mag)
            else:
                var = "xi" if k == 1 else f"xi^{k}"
                body = var if mag == 1 else f"{format_rat(mag)}*{var}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) or "0"

    def __call__(self, x: Scalar) -> Fraction:
        """
        Evaluate the polynomial exactly at ``x`` (Horner's scheme)

        :meta autosection: operations
        """
        acc = Fraction(0)
        for c in reversed(self.__coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> Poly:
        return type(self)(*(-c for c in self.__coeffs))

    def __add__(self, other: Union[Poly, Scalar]) -> Poly:
        """
        Sum of polynomials (or of a polynomial and a scalar)

        :meta autosection: operations
        """
        if isinstance(other, (int, Fraction)):
            other = type(self)(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.__coeffs, other.__coeffs
        if len(a) < len(b):
            a, b = b, a
        return type(self)(*(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __sub__(self, other: Union[Poly, Scalar]) -> Poly:
        """
        Difference of polynomials

        :meta autosection: operations
        """
        if isinstance(other, (int, Fraction)):
            other = type(self)(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return type(self)(other) - self

    def __mul__(self, other: Union[Poly, Scalar]) -> Poly:
        """
        Product of polynomials; multiplying by a scalar scales every
        coefficient (so ``p * 0`` is the zero polynomial)

        :meta autosection: operations
        """
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.__coeffs, other.__coeffs
        if not a or not b:
            return type(self)()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return type(self)(*out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        """
        Repeated multiplication.  ``p ** 0 == Poly(1)``.

        :raises ValueError: if ``n`` is negative
        :meta autosection: operations
        """
        if n < 0:
            raise ValueError(n)
        agg = type(self)(1)
        p = self
        while n > 0:
            if n & 1:
                agg *= p
            p *= p
            n >>= 1
        return agg

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """
        Euclidean division: ``divmod(p, q) == (s, r)`` with ``p == s*q + r``
        and ``r.degree < q.degree``

        :raises ZeroDivisionError: if ``other`` is the zero polynomial
        :meta autosection: operations
        """
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.__coeffs)
        dq = other.degree
        lq = other.lead
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lq
            quo[k] = c
            if c:
                for j, y in enumerate(other.__coeffs):
                    rem[k + j] -= c * y
        return type(self)(*quo), type(self)(*rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def scale(self, c: Scalar) -> Poly:
        """
        Multiply every coefficient by ``c``

        :meta autosection: operations
        """
        return type(self)(*(x * c for x in self.__coeffs))

    def deriv(self) -> Poly:
        """
        The derivative :math:`d/dξ`

        >>> Poly(0, -3, 1).deriv()
        isotonic.exactalg.Poly(-3, 2)

        :meta autosection: operations
        """
        return type(self)(*(k * c for k, c in enumerate(self.__coeffs) if k))

    def reflect(self) -> Poly:
        """
        The polynomial :math:`p(-ξ)`

        :meta autosection: operations
        """
        return type(self)(*(-c if k & 1 else c for k, c in enumerate(self.__coeffs)))

    def monic(self) -> Poly:
        """
        The polynomial divided by its leading coefficient

        :raises ZeroDivisionError: for the zero polynomial
        :meta autosection: operations
        """
        if not self:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self.scale(1 / self.lead)

    def gcd(self, other: Poly) -> Poly:
        """
        The monic greatest common divisor of ``self`` and ``other``.  The
        Euclidean algorithm runs on primitive integer remainder sequences so
        that coefficient growth stays in Python's integers.

        :raises ValueError: if both polynomials are zero
        :meta autosection: operations
        """
        if not self and not other:
            raise ValueError("gcd of two zero polynomials")
        if not other:
            return self.monic()
        if not self:
            return other.monic()
        a, b = _to_ints(self), _to_ints(other)
        if len(a) < len(b):
            a, b = b, a
        while b:
            a, b = b, _prem(a, b)
            if b:
                b = _primitive(b)
        return type(self)(*a).monic()

    def squarefree_part(self) -> Poly:
        """
        ``p / gcd(p, p′)``, normalized to be monic

        :meta autosection: operations
        """
        if self.degree < 1:
            return self.monic()
        return (self // self.gcd(self.deriv())).monic()

    def sturm_sequence(self) -> list[Poly]:
        """
        The Sturm sequence of the square-free part of the polynomial:
        :math:`p_0 = p`, :math:`p_1 = p′`, :math:`p_{k+1} = -(p_{k-1} \\bmod
        p_k)`

        :raises ValueError: for the zero polynomial
        :meta autosection: properties
        """
        if not self:
            raise ValueError("Sturm sequence of the zero polynomial")
        p = self.squarefree_part()
        seq = [p, p.deriv()]
        while seq[-1]:
            seq.append(-(seq[-2] % seq[-1]))
        seq.pop()
        return seq

    def sturm_count(
        self, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None
    ) -> int:
        """
        Count the distinct real roots of the polynomial in the open interval
        ``(lo, hi)``.  `None` stands for :math:`-\\infty` as ``lo`` and
        :math:`+\\infty` as ``hi``.

        >>> Poly(2, -3, 1).sturm_count(0)
        2

        :raises ValueError: for the zero polynomial
        :meta autosection: operations
        """
        if lo is not None and hi is not None and lo >= hi:
            return 0
        seq = self.sturm_sequence()
        vlo = _variations(seq, lo, -1)
        vhi = _variations(seq, hi, 1)
        # V(lo) - V(hi) counts the roots in (lo, hi]
        n = vlo - vhi
        if hi is not None and seq[0](hi) == 0:
            n -= 1
        return n

    def cauchy_bound(self) -> Fraction:
        """
        A rational bound :math:`B` such that every real root lies in
        :math:`(-B, B)`

        :meta autosection: properties
        """
        if self.degree < 1:
            return Fraction(1)
        return 1 + max(abs(c / self.lead) for c in self.__coeffs[:-1])

    def isolate_roots(
        self, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None
    ) -> list[tuple[Fraction, Fraction]]:
        """
        Isolate the distinct real roots in the open interval ``(lo, hi)``.
        Returns a sorted list of rational intervals ``(l, h)``, each
        containing exactly one root in its interior; a root that is hit
        exactly by a bisection point is returned as ``(r, r)``.

        :meta autosection: operations
        """
        if not self:
            raise ValueError("cannot isolate the roots of the zero polynomial")
        bound = self.cauchy_bound()
        left = Fraction(-bound) if lo is None else Fraction(lo)
        right = Fraction(bound) if hi is None else Fraction(hi)
        out: list[tuple[Fraction, Fraction]] = []
        todo = [(left, right)]
        p = self.squarefree_part()
        while todo:
            a, b = todo.pop()
            n = p.sturm_count(a, b)
            if n == 0:
                continue
            if n == 1:
                out.append((a, b))
                continue
            mid = (a + b) / 2
            if p(mid) == 0:
                out.append((mid, mid))
            todo.append((a, mid))
            todo.append((mid, b))
        out.sort()
        return out

    def to_json(self) -> list[str]:
        """
        Serialize as a list of rational strings in ascending powers

        :meta autosection: properties
        """
        return [format_rat(c) for c in self.__coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        """
        Inverse of `to_json`

        :meta autosection: construction
        """
        return cls(*map(parse_rat, data))


def _variations(seq: list[Poly], x: Optional[Scalar], side: int) -> int:
    if x is None:
        # Sign at +/-infinity is the sign of the leading term
        return _sign_changes(
            p.lead * (side if p.degree & 1 else 1) for p in seq
        )
    return _sign_changes(p(x) for p in seq)


def poly_arith(p: Poly, q: Union[Poly, Scalar, None], kind: str) -> Poly:
    """
    Combine ``p`` with ``q``.  ``kind`` is one of ``"add"``, ``"sub"``,
    ``"mul"``, ``"quo"`` and ``"rem"`` (``q`` a polynomial), ``"scale"``
    (``q`` a scalar) or ``"derive"`` (``q`` ignored; the derivative of ``p``
    in ξ).

    >>> poly_arith(Poly(-1, 0, 1), Poly(1, 1), "quo")
    isotonic.exactalg.Poly(-1, 1)
    >>> poly_arith(Poly(0, -3, 1), None, "derive")
    isotonic.exactalg.Poly(-3, 2)

    :raises ZeroDivisionError: on division by the zero polynomial
    :raises ValueError: on an unknown ``kind``
    """
    if kind == "derive":
        return p.deriv()
    if q is None:
        raise TypeError(f"{kind!r} needs a second operand")
    if kind == "scale":
        if isinstance(q, Poly):
            raise TypeError("scale takes a scalar")
        return p.scale(q)
    if not isinstance(q, Poly):
        q = Poly(q)
    if kind == "add":
        return p + q
    elif kind == "sub":
        return p - q
    elif kind == "mul":
        return p * q
    elif kind == "quo":
        return p // q
    elif kind == "rem":
        return p % q
    else:
        raise ValueError(f"unknown operation: {kind!r}")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor of ``p`` and ``q``"""
    return p.gcd(q)


def sturm_count(p: Poly, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi)``"""
    return p.sturm_count(lo, hi)


class RatFunc:
    """
    A rational function :math:`N(ξ)/D(ξ)` kept in canonical form: the
    numerator and denominator are coprime, the denominator is monic, and
    zero is represented as ``0/1``.  Equality is therefore equality of
    functions.

    `RatFunc`\\s are hashable and immutable and can be mixed with `Poly`\\s
    and scalars in arithmetic.
    """

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1) -> None:
        """
        Construct the reduced form of ``num / den``

        :raises ZeroDivisionError: if ``den`` is zero
        :meta autosection: construction
        """
        if not isinstance(num, Poly):
            num = Poly(num)
        if not isinstance(den, Poly):
            den = Poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.__num, self.__den = Poly(), Poly(1)
            return
        if den.degree > 0 and num.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.lead
        self.__num = num.scale(1 / lead)
        self.__den = den.scale(1 / lead)

    @property
    def num(self) -> Poly:
        """
        The numerator

        :meta autosection: properties
        """
        return self.__num

    @property
    def den(self) -> Poly:
        """
        The (monic) denominator

        :meta autosection: properties
        """
        return self.__den

    def __bool__(self) -> bool:
        return bool(self.__num)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RatFunc):
            return self.__num == other.__num and self.__den == other.__den
        elif isinstance(other, (Poly, int, Fraction)):
            return self == RatFunc(other)
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.__num, self.__den))

    def __repr__(self) -> str:
        return "{0.__module__}.{0.__name__}({1!r}, {2!r})".format(
            type(self), self.__num, self.__den
        )

    def __str__(self) -> str:
        if self.__den == 1:
            return str(self.__num)
        return f"({self.__num}) / ({self.__den})"

    def __call__(self, x: Scalar) -> Fraction:
        """
        Evaluate exactly at ``x``

        :raises PoleError: if the denominator vanishes at ``x``
        :meta autosection: operations
        """
        d = self.__den(x)
        if d == 0:
            raise PoleError(f"pole at {format_rat(x)}")
        return self.__num(x) / d

    def __neg__(self) -> RatFunc:
        return type(self)(-self.__num, self.__den)

    def __add__(self, other: Union[RatFunc, Poly, Scalar]) -> RatFunc:
        other = _coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.__den == other.__den:
            return type(self)(self.__num + other.__num, self.__den)
        return type(self)(
            self.__num * other.__den + other.__num * self.__den,
            self.__den * other.__den,
        )

    __radd__ = __add__

    def __sub__(self, other: Union[RatFunc, Poly, Scalar]) -> RatFunc:
        other = _coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[Poly, Scalar]) -> RatFunc:
        return _coerce(other) - self

    def __mul__(self, other: Union[RatFunc, Poly, Scalar]) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            return type(self)(self.__num.scale(other), self.__den)
        other = _coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return type(self)(self.__num * other.__num, self.__den * other.__den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union[RatFunc, Poly, Scalar]) -> RatFunc:
        other = _coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other: Union[Poly, Scalar]) -> RatFunc:
        return _coerce(other) * self.reciprocal()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.reciprocal() ** -n
        return type(self)(self.__num**n, self.__den**n)

    def reciprocal(self) -> RatFunc:
        """
        :raises ZeroDivisionError: for the zero function
        :meta autosection: operations
        """
        return type(self)(self.__den, self.__num)

    def deriv(self) -> RatFunc:
        """
        The derivative :math:`d/dξ`

        :meta autosection: operations
        """
        n, d = self.__num, self.__den
        return type(self)(n.deriv() * d - n * d.deriv(), d * d)

    def reflect(self) -> RatFunc:
        """
        The function :math:`f(-ξ)`

        :meta autosection: operations
        """
        return type(self)(self.__num.reflect(), self.__den.reflect())

    def valuation(self) -> int:
        """
        The order of the function at :math:`ξ = 0`: positive for a zero,
        negative for a pole

        :raises ValueError: for the zero function
        :meta autosection: properties
        """
        if not self:
            raise ValueError("valuation of the zero function")
        return _low_order(self.__num) - _low_order(self.__den)

    def shift_out(self, k: int) -> RatFunc:
        """
        Multiply by :math:`ξ^{-k}` (``k`` may be negative)

        :meta autosection: operations
        """
        if k >= 0:
            return type(self)(self.__num, self.__den * Poly.monomial(k))
        return type(self)(self.__num * Poly.monomial(-k), self.__den)

    def evaluate_array(self, xi: np.ndarray) -> np.ndarray:
        """
        Evaluate in floating point on an array of points.  Used only by the
        numeric layer.

        :meta autosection: operations
        """
        num = np.polynomial.polynomial.polyval(xi, [float(c) for c in self.__num.coeffs or (0,)])
        den = np.polynomial.polynomial.polyval(xi, [float(c) for c in self.__den.coeffs])
        return np.asarray(num / den, dtype=float)

    def to_json(self) -> dict[str, list[str]]:
        return {"num": self.__num.to_json(), "den": self.__den.to_json()}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> RatFunc:
        """
        Inverse of `to_json`

        :meta autosection: construction
        """
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def _low_order(p: Poly) -> int:
    for k, c in enumerate(p.coeffs):
        if c != 0:
            return k
    raise ValueError("zero polynomial")  # pragma: no cover


def _coerce(x: Any) -> Any:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RatFunc(x)
    return x


def ratfunc_make(n: Poly, d: Poly) -> RatFunc:
    """Canonical reduced form of ``n / d``"""
    return RatFunc(n, d)


def eval_rat(f: RatFunc, x0: Scalar) -> Fraction:
    """
    Evaluate ``f`` exactly at ``x0``

    :raises PoleError: if ``x0`` is a pole of ``f``
    """
    return f(x0)
