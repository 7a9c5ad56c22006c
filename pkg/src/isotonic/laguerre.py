"""
Generalized Laguerre polynomials :math:`L_n^{(α)}(z)` for arbitrary rational
α, the recurrences relating them, and the Kienast-Lawton-Hahn count of their
real zeros.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Any
from .exactalg import Poly, Scalar, format_rat, parse_rat

__all__ = [
    "Glp",
    "IDENTITIES",
    "KlhPrediction",
    "glp",
    "glp_build",
    "glp_recurrence",
    "klh_counts",
    "klh_predict",
    "klh_verify",
    "verify_identity",
]

IDENTITIES = ("sum", "three-term", "contiguous")


@dataclass(frozen=True)
class Glp:
    """:math:`L_n^{(α)}` as a polynomial in its argument"""

    n: int
    alpha: Fraction
    poly: Poly

    def reflected(self) -> Poly:
        """:math:`L_n^{(α)}(-ξ)` as a polynomial in ξ"""
        return self.poly.reflect()

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "alpha": format_rat(self.alpha),
            "coeffs": self.poly.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Glp:
        return cls(
            n=int(data["n"]),
            alpha=parse_rat(data["alpha"]),
            poly=Poly.from_json(data["coeffs"]),
        )


@dataclass(frozen=True)
class KlhPrediction:
    """Numbers of positive and negative real zeros of a Laguerre polynomial"""

    pos_zeros: int
    neg_zeros: int


@lru_cache(maxsize=None)
def _series(n: int, alpha: Fraction) -> Poly:
    coeffs = []
    for k in range(n + 1):
        # C(n+α, n-k) = (α+k+1)(α+k+2)...(α+n) / (n-k)!
        binom = Fraction(1)
        for j in range(1, n - k + 1):
            binom = binom * (alpha + k + j) / j
        fact = 1
        for j in range(2, k + 1):
            fact *= j
        coeffs.append((-1) ** k * binom / fact)
    return Poly(*coeffs)


def glp_build(n: int, alpha: Scalar) -> Glp:
    """
    Build :math:`L_n^{(α)}` from the terminating series

    .. math::

        L_n^{(α)}(z) = \\sum_{k=0}^n (-1)^k \\binom{n+α}{n-k} \\frac{z^k}{k!}

    with the generalized binomial coefficient, valid for every rational α.

    >>> glp_build(2, Fraction(1, 2)).poly
    isotonic.exactalg.Poly(15/8, -5/2, 1/2)

    :raises ValueError: if ``n`` is negative
    """
    if n < 0:
        raise ValueError(n)
    alpha = Fraction(alpha)
    return Glp(n, alpha, _series(n, alpha))


def glp(n: int, alpha: Scalar) -> Poly:
    """Shorthand for ``glp_build(n, alpha).poly``; ``L_{-1}`` is zero"""
    if n < 0:
        return Poly()
    return glp_build(n, alpha).poly


def glp_recurrence(n: int, alpha: Scalar) -> Poly:
    """
    Build :math:`L_n^{(α)}` from the three-term recurrence
    :math:`(k+1)L_{k+1} = (2k+1+α-z)L_k - (k+α)L_{k-1}`.  This is an
    independent construction used to cross-check `glp_build`.
    """
    if n < 0:
        raise ValueError(n)
    alpha = Fraction(alpha)
    prev, cur = Poly(), Poly(1)
    z = Poly(0, 1)
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev).scale(
            Fraction(1, k + 1)
        )
    return cur


def verify_identity(ident: str, n: int, alpha: Scalar) -> Poly:
    """
    Compute the residual of one of the Laguerre identities; the identity
    holds iff the residual is the zero polynomial.

    ``"sum"``
        :math:`L_n^{(α)} + L_{n-1}^{(α+1)} - L_n^{(α+1)}`

    ``"three-term"``
        :math:`(n+α)L_{n-1}^{(α)} - zL_n^{(α+1)} - (n-z)L_n^{(α)}`

    ``"contiguous"``
        :math:`zL_{n-1}^{(α+1)} - (n+α)L_{n-1}^{(α)} + nL_n^{(α)}`

    :raises ValueError: if ``n < 1`` or the identity name is unknown
    """
    if n < 1:
        raise ValueError(n)
    alpha = Fraction(alpha)
    z = Poly(0, 1)
    if ident == "sum":
        return glp(n, alpha) + glp(n - 1, alpha + 1) - glp(n, alpha + 1)
    elif ident == "three-term":
        return (
            (n + alpha) * glp(n - 1, alpha)
            - z * glp(n, alpha + 1)
            - (n - z) * glp(n, alpha)
        )
    elif ident == "contiguous":
        return z * glp(n - 1, alpha + 1) - (n + alpha) * glp(n - 1, alpha) + n * glp(n, alpha)
    else:
        raise ValueError(f"unknown Laguerre identity: {ident!r}")


def klh_predict(n: int, alpha: Scalar) -> KlhPrediction:
    """
    Predict the numbers of positive and negative zeros of
    :math:`L_n^{(α)}` by the Kienast-Lawton-Hahn theorem.  In the middle
    range :math:`-n < α < -1`, the integer part of α is taken as its floor.

    >>> klh_predict(3, Fraction(-3, 2))
    KlhPrediction(pos_zeros=2, neg_zeros=1)

    :raises ValueError: if α is a negative integer
    """
    alpha = Fraction(alpha)
    if alpha.denominator == 1 and alpha < 0:
        raise ValueError(f"alpha must not be a negative integer: {alpha}")
    if n < 0:
        raise ValueError(n)
    if alpha > -1:
        return KlhPrediction(n, 0)
    elif alpha > -n:
        fl = floor(alpha)
        # -2k < α < -2k+1 iff floor(α) is even
        return KlhPrediction(n + fl + 1, 1 if fl % 2 == 0 else 0)
    else:
        return KlhPrediction(0, n % 2)


def klh_counts(n: int, alpha: Scalar) -> KlhPrediction:
    """Count the positive and negative zeros of :math:`L_n^{(α)}` with Sturm sequences"""
    p = glp(n, alpha)
    return KlhPrediction(p.sturm_count(0, None), p.sturm_count(None, 0))


def klh_verify(n: int, alpha: Scalar) -> bool:
    """
    Test the Kienast-Lawton-Hahn prediction for :math:`L_n^{(α)}` against
    exact Sturm counts

    :raises ValueError: if α is a negative integer
    """
    return klh_predict(n, alpha) == klh_counts(n, alpha)
