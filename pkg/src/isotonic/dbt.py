"""
Darboux-Bäcklund transformations (DBT) of the isotonic oscillator and the
four series of rationally extended potentials they generate

Given a seed RS function :math:`φ` with energy :math:`E_φ`, the DBT sends
every RS function :math:`w_k` of :math:`V` to

.. math::

    w_k^{(φ)} = -φ + \\frac{E_k - E_φ}{φ - w_k}

which is an RS function of :math:`V^{(φ)} = V + 2φ′` at the same energy.
The series are named after the seed family: L0 uses :math:`w_n`, L1
:math:`v_n`, L2 :math:`u_n` and L3 :math:`r_n`.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import json
import logging
from typing import IO, Any
from .exactalg import Poly, RatFunc, Scalar, format_rat, parse_rat
from .laguerre import klh_counts, klh_predict
from .rsfields import (
    EvenField,
    Family,
    OddField,
    Params,
    QuasiRationalWave,
    RSFunction,
    isotonic_potential,
    rs_deformation,
    rs_function,
    rs_w,
    sector_wave,
)

__all__ = [
    "DegenerateTransformError",
    "ExtendedPotential",
    "RegularityReport",
    "Series",
    "coincidence_check",
    "dbt_apply",
    "dump",
    "extend",
    "extra_state",
    "ground_rs",
    "load",
    "predicted_pole_count",
    "regularity",
    "riccati_residual",
    "seed",
    "transformed_rs",
    "transformed_wave",
]

log = logging.getLogger(__name__)

COINCIDENCES = ("P1Q1", "T1R1")


class DegenerateTransformError(ValueError):
    """Raised when a DBT is applied with a seed at the target's own energy"""


class Series(Enum):
    """The four series of rational extensions"""

    L0 = "L0"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"

    @property
    def seed_family(self) -> Family:
        return {
            Series.L0: Family.W,
            Series.L1: Family.V,
            Series.L2: Family.U,
            Series.L3: Family.R,
        }[self]


@dataclass(frozen=True)
class ExtendedPotential:
    """:math:`V + 2φ′` for the seed :math:`φ` of ``series`` at index ``n``"""

    series: Series
    n: int
    params: Params
    field: EvenField
    seed_energy: Fraction

    def to_json(self) -> dict[str, Any]:
        return {
            "series": self.series.value,
            "n": self.n,
            "omega": format_rat(self.params.omega),
            "a": format_rat(self.params.a),
            "field": self.field.to_json(),
            "seed_energy": format_rat(self.seed_energy),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ExtendedPotential:
        return cls(
            series=Series(data["series"]),
            n=int(data["n"]),
            params=Params(parse_rat(data["omega"]), parse_rat(data["a"])),
            field=EvenField.from_json(data["field"]),
            seed_energy=parse_rat(data["seed_energy"]),
        )


@dataclass(frozen=True)
class RegularityReport:
    """Poles of an extended potential on the open half line :math:`ξ > 0`"""

    pole_count_positive_axis: int
    pole_locations: list[tuple[Fraction, Fraction]]

    @property
    def regular(self) -> bool:
        return self.pole_count_positive_axis == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "pole_count_positive_axis": self.pole_count_positive_axis,
            "regular": self.regular,
            "pole_locations": [
                [format_rat(lo), format_rat(hi)] for lo, hi in self.pole_locations
            ],
        }


def dbt_apply(
    seed: OddField, seed_energy: Scalar, target: OddField, target_energy: Scalar
) -> OddField:
    """
    Transform the RS function ``target`` (energy ``target_energy``) by the
    DBT built on ``seed``: :math:`-φ + (E_k - E_φ)/(φ - w_k)`.  The result
    has energy ``target_energy``.

    :raises DegenerateTransformError: if the energies are equal or the two
        fields coincide
    """
    if Fraction(seed_energy) == Fraction(target_energy):
        raise DegenerateTransformError(
            f"seed and target share the energy {format_rat(seed_energy)}"
        )
    diff = seed - target
    if not diff:
        raise DegenerateTransformError("seed and target are the same field")
    return -seed + (Fraction(target_energy) - Fraction(seed_energy)) / diff


def seed(series: Series, n: int, p: Params) -> RSFunction:
    """The RS function whose DBT generates the ``n``-th potential of ``series``"""
    return rs_function(series.seed_family, n, p)


def extend(series: Series, n: int, p: Params) -> ExtendedPotential:
    """
    Build the ``n``-th extended potential :math:`V + 2φ_n′` of ``series``.
    Singular potentials (all of L0, odd n in L3) are built all the same; see
    `regularity`.

    >>> ep = extend(Series.L1, 0, Params(2, 2))
    >>> ep.field == isotonic_potential(Params(2, 3))
    True
    """
    if n < 0:
        raise ValueError(n)
    phi = seed(series, n, p)
    field = isotonic_potential(p) + phi.field.derive() * 2
    log.debug("Built %s potential n=%d at omega=%s a=%s", series.value, n, p.omega, p.a)
    return ExtendedPotential(series, n, p, field, phi.energy)


def riccati_residual(f: OddField, V: EvenField, E: Scalar) -> RatFunc:
    """
    The canonical form of :math:`-f′ + f^2 - V + E`.  The RS equation holds
    iff the result is zero.

    The unreduced numerator over :math:`D^2B` (``f = xN/D``, ``V = A/B``) is
    formed first so that a vanishing residual never goes through a gcd.
    """
    if not isinstance(f, OddField):
        raise TypeError("RS functions are odd fields")
    if not isinstance(V, EvenField):
        raise TypeError("potentials are even fields")
    if f.omega != V.omega:
        raise ValueError("fields over different frequencies")
    E = Fraction(E)
    N, D = f.R.num, f.R.den
    A, B = V.S.num, V.S.den
    xi2 = Poly(0, 2)
    num = (
        -(N * D) - xi2 * (N.deriv() * D - N * D.deriv()) + (xi2 * N * N).scale(1 / f.omega)
    ) * B - (A - B.scale(E)) * D * D
    if not num:
        return RatFunc(0)
    return RatFunc(num, D * D * B)


def transformed_rs(series: Series, n: int, k: int, p: Params) -> OddField:
    """
    The RS function of the ``k``-th level :math:`E_k = 2kω` of the extended
    potential, :math:`w_k^{(n)}`

    :raises DegenerateTransformError: if the seed sits at :math:`E_k`
    """
    if k < 0:
        raise ValueError(k)
    phi = seed(series, n, p)
    wk = rs_w(k, p)
    return dbt_apply(phi.field, phi.energy, wk.field, wk.energy)


def transformed_wave(series: Series, n: int, k: int, p: Params) -> QuasiRationalWave:
    """
    The ``k``-th physical eigenfunction of the extended potential,
    :math:`(φ - w_k)ψ_k`, with the squared normalization factor
    :math:`E_k - E_φ` recorded in ``norm_sq``

    :raises DegenerateTransformError: if the seed sits at :math:`E_k`
    """
    if k < 0:
        raise ValueError(k)
    phi = seed(series, n, p)
    wk = rs_w(k, p)
    if phi.energy == wk.energy:
        raise DegenerateTransformError(
            f"seed and level {k} share the energy {format_rat(wk.energy)}"
        )
    psi = sector_wave(1, k, p)
    # φ - w_k = x·D(ξ)
    D = (phi.field - wk.field).R
    wave = QuasiRationalWave(
        xpow=psi.xpow + 1,
        gauss_sign=psi.gauss_sign,
        rat=psi.rat * D,
        energy=wk.energy,
        omega=p.omega,
        norm_sq=wk.energy - phi.energy,
    )
    return wave.normalized()


def extra_state(series: Series, n: int, p: Params) -> QuasiRationalWave:
    """
    The candidate extra level :math:`1/ψ_φ = \\exp(\\int φ)` at the seed
    energy.  Its RS function is :math:`-φ`.  It is square integrable, and so
    a bound state below the isotonic ladder, only for the regular members of
    L3.
    """
    phi = seed(series, n, p)
    wave = sector_wave(series.seed_family.sector, n, p).reciprocal(phi.energy)
    return wave.normalized()


def ground_rs(ep: ExtendedPotential) -> tuple[OddField, Fraction]:
    """
    The RS function and energy of the lowest level of an extended potential:
    :math:`-r_n` at :math:`-2(n+1)ω` for L3, otherwise the transformed
    :math:`w_k^{(n)}` of the lowest :math:`k` not shared with the seed
    """
    phi = seed(ep.series, ep.n, ep.params)
    if ep.series is Series.L3:
        return (-phi.field, phi.energy)
    k = 0
    while rs_w(k, ep.params).energy == phi.energy:
        log.debug("Level %d of %s n=%d coincides with the seed", k, ep.series.value, ep.n)
        k += 1
    return (transformed_rs(ep.series, ep.n, k, ep.params), rs_w(k, ep.params).energy)


def regularity(ep: ExtendedPotential) -> RegularityReport:
    """
    Count and isolate the distinct poles of the potential on :math:`ξ > 0`.
    The centrifugal pole at the origin is not counted.

    >>> regularity(extend(Series.L0, 3, Params(1, 2))).pole_count_positive_axis
    3
    """
    den = ep.field.S.den
    count = den.sturm_count(0, None)
    locations = den.isolate_roots(0, None) if count else []
    return RegularityReport(count, locations)


def predicted_pole_count(series: Series, n: int, p: Params) -> int:
    """
    The number of poles on :math:`ξ > 0` predicted from the zeros of the
    seed's Laguerre polynomial: positive zeros for L0 and L2 and negative
    zeros for L1 and L3.  When α is a negative integer the zeros are counted
    directly by Sturm sequences instead.
    """
    family = series.seed_family
    alpha = family.glp_alpha(p)
    try:
        pred = klh_predict(n, alpha)
    except ValueError:
        pred = klh_counts(n, alpha)
    return pred.neg_zeros if family.flips_omega else pred.pos_zeros


def coincidence_check(which: str, p: Params) -> bool:
    """
    Test the coincidences between first deformations,
    :math:`P_1(x;ω,a) = Q_1(x;ω,a-2)` (``"P1Q1"``) and
    :math:`T_1(x;ω,a) = R_1(x;ω,a-2)` (``"T1R1"``)
    """
    q = Params(p.omega, p.a - 2)
    if which == "P1Q1":
        return rs_deformation(Family.U, 1, p) == rs_deformation(Family.V, 1, q)
    elif which == "T1R1":
        return rs_deformation(Family.R, 1, p) == rs_deformation(Family.W, 1, q)
    else:
        raise ValueError(f"unknown coincidence: {which!r}")


def dump(ep: ExtendedPotential, fp: IO[str]) -> None:
    """Write an extended potential as JSON"""
    json.dump(ep.to_json(), fp, indent=2)
    fp.write("\n")


def load(fp: IO[str]) -> ExtendedPotential:
    """Read an extended potential written by `dump`"""
    return ExtendedPotential.from_json(json.load(fp))
