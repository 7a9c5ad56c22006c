"""
Shape invariance of the regular extensions

For the L1 and L2 series the superpartner of :math:`V^{(n)}(x;ω,a)` is
:math:`V^{(n)}(x;ω,a+1) + 2ω`, which reduces to the identity
:math:`Δ_n = -ωx` for

.. math::

    Δ_n = \\frac{E_φ}{φ_n - w_0} + v_0(x;ω,a) + φ_n(x;ω,a+1)

with :math:`φ_n = v_n` (:math:`Δ^1_n`) or :math:`φ_n = u_n`
(:math:`Δ^2_n`).  For the even members of L3 the superpartner is the
isotonic potential itself.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Any, Optional
from .dbt import ExtendedPotential, Series, extend, ground_rs
from .exactalg import Poly, RatFunc, format_rat
from .laguerre import glp, verify_identity
from .rsfields import EvenField, Family, OddField, Params, isotonic_potential, rs_function

__all__ = [
    "DegenerateParametersError",
    "L3PartnerReport",
    "LemmaStep",
    "ShapeReport",
    "delta1",
    "delta1_laguerre",
    "delta2",
    "delta2_laguerre",
    "l3_partner_check",
    "lemma_chain",
    "shape_check",
    "susy_partner",
]

log = logging.getLogger(__name__)

XI = Poly(0, 1)


class DegenerateParametersError(ValueError):
    """
    Raised when a denominator of a Δ computation vanishes identically at the
    given parameters
    """

    def __init__(self, what: str, n: int, p: Params) -> None:
        super().__init__(what, n, p)
        self.what = what
        self.n = n
        self.params = p

    def __str__(self) -> str:
        return (
            f"{self.what} degenerates at n={self.n},"
            f" omega={format_rat(self.params.omega)}, a={format_rat(self.params.a)}"
        )


@dataclass(frozen=True)
class ShapeReport:
    series: Series
    n: int
    params: Params
    delta_field: OddField
    delta_is_minus_omega_x: bool
    partner_identity_holds: bool
    #: `None` for n = 0, which has no Laguerre form
    laguerre_delta_is_minus_omega_x: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return (
            self.delta_is_minus_omega_x
            and self.partner_identity_holds
            and self.laguerre_delta_is_minus_omega_x is not False
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "series": self.series.value,
            "n": self.n,
            "params": self.params.to_json(),
            "delta_field": self.delta_field.to_json(),
            "delta_is_minus_omega_x": self.delta_is_minus_omega_x,
            "partner_identity_holds": self.partner_identity_holds,
            "laguerre_delta_is_minus_omega_x": self.laguerre_delta_is_minus_omega_x,
        }


@dataclass(frozen=True)
class L3PartnerReport:
    n: int
    params: Params
    residual: EvenField

    @property
    def holds(self) -> bool:
        return not self.residual

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "params": self.params.to_json(),
            "residual": self.residual.to_json(),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class LemmaStep:
    """One Laguerre identity instance used to fold a Δ to :math:`-ωx`"""

    ident: str
    n: int
    alpha: Fraction
    residual: Poly

    @property
    def holds(self) -> bool:
        return not self.residual


def susy_partner(ep: ExtendedPotential) -> EvenField:
    """The superpartner :math:`V^{(n)} + 2f_0′` built on the ground-level RS function"""
    f0, _ = ground_rs(ep)
    return ep.field + f0.derive() * 2


def _delta(family: Family, n: int, p: Params) -> OddField:
    if n < 0:
        raise ValueError(n)
    phi = rs_function(family, n, p)
    w0 = rs_function(Family.W, 0, p).field
    if phi.energy == 0:
        raise DegenerateParametersError(f"Delta of the {family.value} seed", n, p)
    try:
        ratio = phi.energy / (phi.field - w0)
    except ZeroDivisionError:
        raise DegenerateParametersError(
            f"Delta of the {family.value} seed", n, p
        ) from None
    return (
        ratio
        + rs_function(Family.V, 0, p).field
        + rs_function(family, n, p.shifted()).field
    )


def delta1(n: int, p: Params) -> OddField:
    """
    :math:`Δ^1_n = E_{-(n+a+1/2)}/(v_n - w_0) + v_0(x;ω,a) + v_n(x;ω,a+1)`

    >>> delta1(3, Params(2, 2)) == OddField(-2, 2)
    True

    :raises DegenerateParametersError: if :math:`v_n = w_0` or the seed
        energy vanishes
    """
    return _delta(Family.V, n, p)


def delta2(n: int, p: Params) -> OddField:
    """
    :math:`Δ^2_n = E_{n+1/2-a}/(u_n - w_0) + v_0(x;ω,a) + u_n(x;ω,a+1)`.
    Degenerate at :math:`a = n + 1/2`, where :math:`u_n = w_0`.

    :raises DegenerateParametersError: if :math:`u_n = w_0`
    """
    return _delta(Family.U, n, p)


def _frac(num: Poly, den: Poly, what: str, n: int, p: Params) -> RatFunc:
    if not den:
        raise DegenerateParametersError(what, n, p)
    return RatFunc(num, den)


def delta1_laguerre(n: int, p: Params) -> OddField:
    """
    The Laguerre form of :math:`Δ^1_n` in :math:`z = -ξ`, :math:`α = a + 1/2`:

    .. math::

        \\frac{2α+2}{x} \\frac{L_n^{(α-1)}}{L_{n-1}^{(α)} + L_n^{(α-1)}}
        - ωx \\frac{L_{n-1}^{(α+1)} + L_n^{(α)}}{L_n^{(α)}} - \\frac{2α}{x}

    :raises ValueError: if ``n < 1``
    """
    if n < 1:
        raise ValueError(n)
    w = p.omega
    alpha = p.a + Fraction(1, 2)

    def L(m: int, al: Fraction) -> Poly:
        return glp(m, al).reflect()

    inv_x = RatFunc(w / 2, XI)
    R = (
        inv_x
        * (2 * alpha + 2)
        * _frac(L(n, alpha - 1), L(n - 1, alpha) + L(n, alpha - 1), "Delta1", n, p)
        - _frac(L(n - 1, alpha + 1) + L(n, alpha), L(n, alpha), "Delta1", n, p) * w
        - inv_x * (2 * alpha)
    )
    return OddField(R, w)


def delta2_laguerre(n: int, p: Params) -> OddField:
    """
    The Laguerre form of :math:`Δ^2_n` in :math:`z = ξ`, :math:`α = 1/2 - a`:

    .. math::

        ωx \\left( \\frac{L_{n-1}^{(α)}}{L_n^{(α-1)}}
        + \\frac{(n+α) L_n^{(α)}}{z L_{n-1}^{(α+1)} - α L_n^{(α)}} \\right)

    :raises ValueError: if ``n < 1``
    """
    if n < 1:
        raise ValueError(n)
    w = p.omega
    alpha = Fraction(1, 2) - p.a
    R = _frac(glp(n - 1, alpha), glp(n, alpha - 1), "Delta2", n, p) + _frac(
        glp(n, alpha) * (n + alpha),
        XI * glp(n - 1, alpha + 1) - glp(n, alpha) * alpha,
        "Delta2",
        n,
        p,
    )
    return OddField(R * w, w)


def lemma_chain(series: Series, n: int, p: Params) -> list[LemmaStep]:
    """
    The Laguerre identity instances that fold the Laguerre form of Δ to
    :math:`-ωx`: two sum rules and the three-term recurrence for L1, the
    contiguous relation and a sum rule for L2.  Empty for ``n == 0``.
    """
    if n == 0:
        return []
    if series is Series.L1:
        alpha = p.a + Fraction(1, 2)
        steps = [("sum", alpha - 1), ("sum", alpha), ("three-term", alpha)]
    elif series is Series.L2:
        alpha = Fraction(1, 2) - p.a
        steps = [("contiguous", alpha), ("sum", alpha - 1)]
    else:
        raise ValueError(f"no shape invariance for {series.value}")
    return [LemmaStep(ident, n, al, verify_identity(ident, n, al)) for ident, al in steps]


def shape_check(series: Series, n: int, p: Params) -> ShapeReport:
    """
    Check the shape invariance of the ``n``-th L1 or L2 potential through
    Δ in rational form, through its Laguerre form (for ``n >= 1``), and
    directly as :math:`\\tilde V^{(n)}(x;ω,a) - V^{(n)}(x;ω,a+1) - 2ω = 0`

    :raises DegenerateParametersError: if a Δ denominator vanishes
        identically
    """
    if series is Series.L1:
        delta, laguerre_form = delta1, delta1_laguerre
    elif series is Series.L2:
        delta, laguerre_form = delta2, delta2_laguerre
    else:
        raise ValueError(f"no shape invariance for {series.value}")
    minus_omega_x = OddField(-p.omega, p.omega)
    delta_field = delta(n, p)
    laguerre_ok = None if n == 0 else laguerre_form(n, p) == minus_omega_x
    partner = susy_partner(extend(series, n, p))
    shifted = extend(series, n, p.shifted()).field
    residual = partner - shifted - 2 * p.omega
    report = ShapeReport(
        series=series,
        n=n,
        params=p,
        delta_field=delta_field,
        delta_is_minus_omega_x=delta_field == minus_omega_x,
        partner_identity_holds=not residual,
        laguerre_delta_is_minus_omega_x=laguerre_ok,
    )
    if not report.ok:
        log.debug("Shape invariance fails for %s n=%d: residual %r", series.value, n, residual)
    return report


def l3_partner_check(n: int, p: Params) -> L3PartnerReport:
    """
    The superpartner of an L3 potential, built on its extra ground level,
    compared with the isotonic potential
    """
    ep = extend(Series.L3, n, p)
    return L3PartnerReport(n, p, susy_partner(ep) - isotonic_potential(p))
