"""
Parity-typed fields on :math:`(0, \\infty)` and the Riccati-Schrödinger (RS)
functions of the isotonic oscillator

.. math::

    V(x; ω, a) = \\frac{ω^2 x^2}{4} + \\frac{a(a-1)}{x^2} - ω(a + 1/2)

Every function handled here is a rational function of :math:`x`, and each is
either odd, :math:`x ↦ x R(ξ)`, or even, :math:`x ↦ S(ξ)`, in the single
variable :math:`ξ = ωx^2/2`.  Working with the pair (parity, `RatFunc` in ξ)
keeps every derivative, product and reciprocal exact and free of square
roots.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
import random
from typing import Any, Union
import numpy as np
from .exactalg import Poly, RatFunc, Scalar, format_rat, parse_rat
from .laguerre import glp

__all__ = [
    "EvenField",
    "FIELD_OPS",
    "Family",
    "OddField",
    "Params",
    "Prepotential",
    "QuasiRationalWave",
    "RSFunction",
    "field_calculus",
    "isotonic_potential",
    "isotonic_shape_partner",
    "prepotential",
    "prepotential_target",
    "regularizing_symmetry_shift",
    "rs_deformation",
    "rs_function",
    "rs_r",
    "rs_u",
    "rs_v",
    "rs_w",
    "sector_wave",
    "wick_check",
]

XI = Poly(0, 1)


@dataclass(frozen=True)
class Params:
    """The isotonic parameters: frequency ω > 0 and :math:`a = l + 1`"""

    omega: Fraction
    a: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega", Fraction(self.omega))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.omega <= 0:
            raise ValueError(f"omega must be positive: {self.omega}")

    def shifted(self, k: int = 1) -> Params:
        """The parameters with :math:`a → a + k` (:math:`a_k` in the usual notation)"""
        return Params(self.omega, self.a + k)

    @classmethod
    def random(cls, rng: random.Random) -> Params:
        """
        Random parameters with small numerators and denominators coprime to
        2, keeping clear of the half-integer values of :math:`a` at which
        seeds coincide with physical states
        """
        omega = Fraction(rng.randint(1, 9), rng.choice([1, 3, 5, 7]))
        den = rng.choice([3, 5, 7])
        a = Fraction(rng.randint(den, 6 * den), den)
        return cls(omega, a)

    def to_json(self) -> dict[str, str]:
        return {"omega": format_rat(self.omega), "a": format_rat(self.a)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Params:
        return cls(parse_rat(data["omega"]), parse_rat(data["a"]))


class OddField:
    """
    An odd function :math:`x ↦ x R(ξ)` with :math:`ξ = ωx^2/2`

    Odd fields form a vector space; their derivatives and pairwise products
    are `EvenField`\\s, and products with even fields are odd.  Mixing odd
    and even fields in a sum is a `TypeError`.
    """

    def __init__(self, R: Union[RatFunc, Poly, Scalar], omega: Scalar) -> None:
        """
        :meta autosection: construction
        """
        self.__R = R if isinstance(R, RatFunc) else RatFunc(R)
        self.__omega = Fraction(omega)

    @classmethod
    def linear(cls, omega: Scalar, c: Scalar, d: Scalar = 0) -> OddField:
        """
        The field :math:`cx + d/x`, using :math:`1/x = x \\cdot ω/(2ξ)`

        :meta autosection: construction
        """
        omega = Fraction(omega)
        return cls(RatFunc(c) + RatFunc(d * omega / 2, XI), omega)

    @property
    def R(self) -> RatFunc:
        """:meta autosection: properties"""
        return self.__R

    @property
    def omega(self) -> Fraction:
        """:meta autosection: properties"""
        return self.__omega

    def __check(self, other: OddField) -> None:
        if self.__omega != other.__omega:
            raise ValueError("fields over different frequencies")

    def __bool__(self) -> bool:
        return bool(self.__R)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, OddField):
            return self.__omega == other.__omega and self.__R == other.__R
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((OddField, self.__omega, self.__R))

    def __repr__(self) -> str:
        return f"OddField(x * [{self.__R}], omega={format_rat(self.__omega)})"

    def __neg__(self) -> OddField:
        return type(self)(-self.__R, self.__omega)

    def __add__(self, other: OddField) -> OddField:
        """:meta autosection: operations"""
        if not isinstance(other, OddField):
            return NotImplemented
        self.__check(other)
        return type(self)(self.__R + other.__R, self.__omega)

    def __sub__(self, other: OddField) -> OddField:
        """:meta autosection: operations"""
        if not isinstance(other, OddField):
            return NotImplemented
        self.__check(other)
        return type(self)(self.__R - other.__R, self.__omega)

    def __mul__(self, other: Union[OddField, EvenField, Scalar]) -> Any:
        """
        ``odd * scalar`` and ``odd * even`` are odd; ``odd * odd`` is even,
        :math:`xR_1 \\cdot xR_2 = (2ξ/ω) R_1 R_2`

        :meta autosection: operations
        """
        if isinstance(other, (int, Fraction)):
            return type(self)(self.__R * other, self.__omega)
        elif isinstance(other, OddField):
            self.__check(other)
            return EvenField(
                self.__R * other.__R * RatFunc(XI.scale(2 / self.__omega)),
                self.__omega,
            )
        elif isinstance(other, EvenField):
            if other.omega != self.__omega:
                raise ValueError("fields over different frequencies")
            return type(self)(self.__R * other.S, self.__omega)
        else:
            return NotImplemented

    __rmul__ = __mul__

    def derive(self) -> EvenField:
        """
        :math:`(xR)′ = R + 2ξR′(ξ)`

        :meta autosection: operations
        """
        return EvenField(self.__R + self.__R.deriv() * XI.scale(2), self.__omega)

    def reciprocal(self) -> OddField:
        """
        :math:`1/(xR) = x \\cdot ω/(2ξR)`

        :raises ZeroDivisionError: for the zero field
        :meta autosection: operations
        """
        if not self.__R:
            raise ZeroDivisionError("reciprocal of the zero field")
        return type(self)(
            RatFunc(self.__omega / 2) / (self.__R * RatFunc(XI)), self.__omega
        )

    def __rtruediv__(self, c: Scalar) -> OddField:
        return self.reciprocal() * Fraction(c)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate in floating point on an array of positions"""
        x = np.asarray(x, dtype=float)
        return np.asarray(x * self.__R.evaluate_array(float(self.__omega) * x * x / 2))

    def to_json(self) -> dict[str, Any]:
        return {
            "parity": "odd",
            "ratfunc": self.__R.to_json(),
            "omega": format_rat(self.__omega),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> OddField:
        if data.get("parity") != "odd":
            raise ValueError("expected an odd field")
        return cls(RatFunc.from_json(data["ratfunc"]), parse_rat(data["omega"]))


class EvenField:
    """An even function :math:`x ↦ S(ξ)` with :math:`ξ = ωx^2/2`"""

    def __init__(self, S: Union[RatFunc, Poly, Scalar], omega: Scalar) -> None:
        """
        :meta autosection: construction
        """
        self.__S = S if isinstance(S, RatFunc) else RatFunc(S)
        self.__omega = Fraction(omega)

    @property
    def S(self) -> RatFunc:
        """:meta autosection: properties"""
        return self.__S

    @property
    def omega(self) -> Fraction:
        """:meta autosection: properties"""
        return self.__omega

    def __check(self, other: EvenField) -> None:
        if self.__omega != other.__omega:
            raise ValueError("fields over different frequencies")

    def __bool__(self) -> bool:
        return bool(self.__S)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, EvenField):
            return self.__omega == other.__omega and self.__S == other.__S
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((EvenField, self.__omega, self.__S))

    def __repr__(self) -> str:
        return f"EvenField({self.__S}, omega={format_rat(self.__omega)})"

    def __neg__(self) -> EvenField:
        return type(self)(-self.__S, self.__omega)

    def __add__(self, other: Union[EvenField, Scalar]) -> EvenField:
        """
        Constants are even fields, so scalars may be added directly.

        :meta autosection: operations
        """
        if isinstance(other, (int, Fraction)):
            return type(self)(self.__S + other, self.__omega)
        if not isinstance(other, EvenField):
            return NotImplemented
        self.__check(other)
        return type(self)(self.__S + other.__S, self.__omega)

    __radd__ = __add__

    def __sub__(self, other: Union[EvenField, Scalar]) -> EvenField:
        """:meta autosection: operations"""
        if isinstance(other, (int, Fraction)):
            return type(self)(self.__S - other, self.__omega)
        if not isinstance(other, EvenField):
            return NotImplemented
        self.__check(other)
        return type(self)(self.__S - other.__S, self.__omega)

    def __mul__(self, other: Union[EvenField, Scalar]) -> EvenField:
        """:meta autosection: operations"""
        if isinstance(other, (int, Fraction)):
            return type(self)(self.__S * other, self.__omega)
        if not isinstance(other, EvenField):
            return NotImplemented
        self.__check(other)
        return type(self)(self.__S * other.__S, self.__omega)

    __rmul__ = __mul__

    def derive(self) -> OddField:
        """
        :math:`S(ξ)′ = x \\cdot ωS′(ξ)`

        :meta autosection: operations
        """
        return OddField(self.__S.deriv() * self.__omega, self.__omega)

    def is_constant(self) -> bool:
        """:meta autosection: properties"""
        return self.__S.num.degree < 1 and self.__S.den.degree == 0

    def __call__(self, x: Scalar) -> Fraction:
        """Exact value at position ``x``"""
        return self.__S(self.__omega * Fraction(x) ** 2 / 2)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate in floating point on an array of positions"""
        x = np.asarray(x, dtype=float)
        return self.__S.evaluate_array(float(self.__omega) * x * x / 2)

    def to_json(self) -> dict[str, Any]:
        return {
            "parity": "even",
            "ratfunc": self.__S.to_json(),
            "omega": format_rat(self.__omega),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> EvenField:
        if data.get("parity") != "even":
            raise ValueError("expected an even field")
        return cls(RatFunc.from_json(data["ratfunc"]), parse_rat(data["omega"]))


FIELD_OPS = (
    "odd_add",
    "odd_sub",
    "odd_derive",
    "even_derive",
    "odd_mul_to_even",
    "odd_invert_scaled",
)


def _odd_args(op: str, args: tuple[Any, ...], count: int) -> list[OddField]:
    if len(args) != count or not all(isinstance(f, OddField) for f in args):
        raise TypeError(f"{op} takes {count} odd field(s)")
    return list(args)


def field_calculus(op: str, *args: Union[OddField, EvenField]) -> Union[OddField, EvenField]:
    """
    Apply one of the closure rules of the ξ parametrization by name (see
    `FIELD_OPS`)

    >>> w0 = OddField.linear(2, 1, -2)
    >>> field_calculus("odd_derive", w0) == EvenField(RatFunc(1) + RatFunc(2, XI), 2)
    True

    :raises ZeroDivisionError: when inverting the zero field
    :raises ValueError: on an unknown ``op``
    """
    if op == "odd_add":
        f, g = _odd_args(op, args, 2)
        return f + g
    elif op == "odd_sub":
        f, g = _odd_args(op, args, 2)
        return f - g
    elif op == "odd_derive":
        (f,) = _odd_args(op, args, 1)
        return f.derive()
    elif op == "even_derive":
        if len(args) != 1 or not isinstance(args[0], EvenField):
            raise TypeError("even_derive takes one even field")
        return args[0].derive()
    elif op == "odd_mul_to_even":
        f, g = _odd_args(op, args, 2)
        prod: EvenField = f * g
        return prod
    elif op == "odd_invert_scaled":
        (f,) = _odd_args(op, args, 1)
        return f.reciprocal()
    else:
        raise ValueError(f"unknown field operation: {op!r}")



class Family(Enum):
    """
    The four families of RS functions and the parameter inversion producing
    each: the physical :math:`w_n`, and the images of :math:`w_n` under
    :math:`Γ_ω` (:math:`v_n`), :math:`Γ_a` (:math:`u_n`) and
    :math:`Γ_a∘Γ_ω` (:math:`r_n`)
    """

    W = "w"
    V = "v"
    U = "u"
    R = "r"

    @property
    def flips_omega(self) -> bool:
        return self in (Family.V, Family.R)

    @property
    def flips_a(self) -> bool:
        return self in (Family.U, Family.R)

    @property
    def sector(self) -> int:
        """The quasi-rational sector whose eigenfunctions the family describes"""
        return {Family.W: 1, Family.V: 2, Family.U: 3, Family.R: 4}[self]

    def frame(self, p: Params) -> tuple[int, Fraction]:
        """The sign of ω′/ω and the parameter a′ of the transformed frame"""
        return (-1 if self.flips_omega else 1, 1 - p.a if self.flips_a else p.a)

    def energy(self, n: int, p: Params) -> Fraction:
        """
        Energy of the n-th function of the family relative to
        :math:`V(x;ω,a)`: :math:`2nω′ + ω′(a′+1/2) - ω(a+1/2)`, which is
        :math:`2nω`, :math:`-2(n+a+1/2)ω`, :math:`2(n+1/2-a)ω` and
        :math:`-2(n+1)ω` for w, v, u, r
        """
        s, ap = self.frame(p)
        w = s * p.omega
        return 2 * n * w + w * (ap + Fraction(1, 2)) - p.omega * (p.a + Fraction(1, 2))

    def glp_alpha(self, p: Params) -> Fraction:
        return self.frame(p)[1] - Fraction(1, 2)


@dataclass(frozen=True)
class RSFunction:
    """An odd RS field together with its family, index and energy label"""

    family: Family
    n: int
    params: Params
    field: OddField
    energy: Fraction

    def to_json(self) -> dict[str, Any]:
        data = self.field.to_json()
        data["a"] = format_rat(self.params.a)
        data["energy"] = format_rat(self.energy)
        return data


def isotonic_potential(p: Params) -> EvenField:
    """
    The isotonic potential normalized so that :math:`E_0 = 0`:
    :math:`S(ξ) = ωξ/2 + a(a-1)ω/(2ξ) - ω(a+1/2)`

    >>> isotonic_potential(Params(2, 2))(1)
    Fraction(-2, 1)
    """
    w, a = p.omega, p.a
    S = RatFunc(Poly(0, w / 2)) + RatFunc(a * (a - 1) * w / 2, XI) - w * (a + Fraction(1, 2))
    return EvenField(S, w)


def regularizing_symmetry_shift(family: Family, p: Params) -> Fraction:
    """
    The constant by which the parameter inversion of ``family`` shifts the
    potential: :math:`V(x;ω′,a′) = V(x;ω,a) + c`
    """
    s, ap = family.frame(p)
    return -s * p.omega * (ap + Fraction(1, 2)) + p.omega * (p.a + Fraction(1, 2))


def isotonic_shape_partner(p: Params, family: Family = Family.W) -> EvenField:
    """
    :math:`V + 2f_0′` for the ground function :math:`f_0` of ``family``.
    These are :math:`V(a_1) + 2ω`, :math:`V(a_1)`, :math:`V(a_{-1})` and
    :math:`V(a_{-1}) - 2ω` for w, v, u, r.
    """
    return isotonic_potential(p) + _rs(family, 0, p, "cf").field.derive() * 2


def _w0(s: int, ap: Fraction, omega: Fraction) -> OddField:
    # w0(x; s*omega, a') = (s*omega/2) x - a'/x
    return OddField(
        RatFunc(s * omega / 2) - RatFunc(ap * omega / 2, XI), omega
    )


@lru_cache(maxsize=None)
def _cf(n: int, s: int, ap: Fraction, omega: Fraction) -> OddField:
    w0 = _w0(s, ap, omega)
    if n == 0:
        return w0
    # w_n(a') = w0(a') - E_n(ω')/(w0(a') + w_{n-1}(a'+1))
    return w0 - (2 * n * s * omega) / (w0 + _cf(n - 1, s, ap + 1, omega))


@lru_cache(maxsize=None)
def _log_form(n: int, s: int, ap: Fraction, omega: Fraction) -> OddField:
    w0 = _w0(s, ap, omega)
    if n == 0:
        return w0
    top = glp(n - 1, ap + Fraction(1, 2))
    bottom = glp(n, ap - Fraction(1, 2))
    if s < 0:
        top, bottom = top.reflect(), bottom.reflect()
    return w0 + OddField(RatFunc(top.scale(s * omega), bottom), omega)


@lru_cache(maxsize=None)
def _rs(family: Family, n: int, p: Params, method: str) -> RSFunction:
    if n < 0:
        raise ValueError(n)
    s, ap = family.frame(p)
    if method == "cf":
        field = _cf(n, s, ap, p.omega)
    elif method == "log":
        field = _log_form(n, s, ap, p.omega)
    else:
        raise ValueError(f"unknown method: {method!r}")
    return RSFunction(family, n, p, field, family.energy(n, p))


def rs_w(n: int, p: Params, method: str = "log") -> RSFunction:
    """
    The excited-state RS function :math:`w_n = w_0 + R_n` with
    :math:`w_0 = ωx/2 - a/x`, either by the terminating continued fraction
    (``"cf"``, evaluated bottom-up) or from
    :math:`R_n = ωx L_{n-1}^{(a+1/2)}(ξ)/L_n^{(a-1/2)}(ξ)` (``"log"``).
    Energy :math:`2nω`.
    """
    return _rs(Family.W, n, p, method)


def rs_v(n: int, p: Params, method: str = "log") -> RSFunction:
    """
    :math:`v_n(x;ω,a) = w_n(x;-ω,a) = v_0 + Q_n`, with
    :math:`v_0 = -ωx/2 - a/x` and
    :math:`Q_n = -(\\log L_n^{(a-1/2)}(-ξ))′`.  Energy
    :math:`-2(n+a+1/2)ω`.
    """
    return _rs(Family.V, n, p, method)


def rs_u(n: int, p: Params, method: str = "log") -> RSFunction:
    """
    :math:`u_n(x;ω,a) = w_n(x;ω,1-a) = u_0 + P_n`, with
    :math:`u_0 = ωx/2 + (a-1)/x` and
    :math:`P_n = -(\\log L_n^{(1/2-a)}(ξ))′`.  Energy
    :math:`2(n+1/2-a)ω`.
    """
    return _rs(Family.U, n, p, method)


def rs_r(n: int, p: Params, method: str = "log") -> RSFunction:
    """
    :math:`r_n(x;ω,a) = w_n(x;-ω,1-a) = r_0 + T_n`, with
    :math:`r_0 = -ωx/2 + (a-1)/x` and
    :math:`T_n = -(\\log L_n^{(1/2-a)}(-ξ))′`.  Energy :math:`-2(n+1)ω`.
    """
    return _rs(Family.R, n, p, method)


def rs_function(family: Family, n: int, p: Params, method: str = "log") -> RSFunction:
    return _rs(family, n, p, method)


def rs_deformation(family: Family, n: int, p: Params) -> OddField:
    """
    The rational part :math:`f_n - f_0` of an RS function: :math:`R_n`,
    :math:`Q_n`, :math:`P_n` or :math:`T_n`
    """
    return _rs(family, n, p, "log").field - _rs(family, 0, p, "log").field


def wick_check(n: int, p: Params) -> bool:
    """
    Test the spatial Wick rotation :math:`v_n(x) = i w_n(ix)`, i.e.
    :math:`R_v(ξ) = -R_w(-ξ)` for :math:`v_n = xR_v` and :math:`w_n = xR_w`
    """
    return rs_v(n, p).field.R == -rs_w(n, p).field.R.reflect()


@dataclass(frozen=True)
class QuasiRationalWave:
    """
    The quasi-rational function
    :math:`x^p \\exp(sωx^2/4)\\, \\mathrm{rat}(ξ)`, optionally scaled by
    :math:`1/\\sqrt{\\mathrm{norm\\_sq}}`
    """

    xpow: Fraction
    gauss_sign: int
    rat: RatFunc
    energy: Fraction
    omega: Fraction
    norm_sq: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.gauss_sign not in (-1, 1):
            raise ValueError(f"gauss_sign must be -1 or 1: {self.gauss_sign}")
        if not self.rat:
            raise ValueError("quasi-rational wave with zero rational part")

    def normalized(self) -> QuasiRationalWave:
        """
        Move every power of ξ out of ``rat`` and into ``xpow`` so that
        ``rat`` is finite and nonzero at the origin
        """
        k = self.rat.valuation()
        if k == 0:
            return self
        # ξ^k = (ω/2)^k x^(2k)
        return QuasiRationalWave(
            self.xpow + 2 * k,
            self.gauss_sign,
            self.rat.shift_out(k) * (self.omega / 2) ** k,
            self.energy,
            self.omega,
            self.norm_sq,
        )

    def rs_function(self) -> OddField:
        """
        The RS function :math:`-ψ′/ψ` as an odd field:
        :math:`-(p/x + sωx/2 + ωx\\, \\mathrm{rat}′/\\mathrm{rat})`
        """
        w = self.omega
        R = (
            RatFunc(-self.xpow * w / 2, XI)
            - RatFunc(self.gauss_sign * w / 2)
            - self.rat.deriv() / self.rat * w
        )
        return OddField(R, w)

    def reciprocal(self, energy: Fraction) -> QuasiRationalWave:
        """:math:`1/ψ`, which solves the Schrödinger equation for the partner potential"""
        return QuasiRationalWave(
            -self.xpow, -self.gauss_sign, self.rat.reciprocal(), energy, self.omega
        )

    def is_square_integrable(self) -> bool:
        """
        Square integrability on :math:`(0, \\infty)`: Gaussian decay, a
        power above :math:`-1/2` at the origin, and no poles on the positive
        half line
        """
        nw = self.normalized()
        return (
            nw.gauss_sign == -1
            and nw.xpow > Fraction(-1, 2)
            and (nw.rat.den.degree < 1 or nw.rat.den.sturm_count(0, None) == 0)
        )

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate in floating point on an array of positive positions"""
        x = np.asarray(x, dtype=float)
        w = float(self.omega)
        vals = (
            x ** float(self.xpow)
            * np.exp(self.gauss_sign * w * x * x / 4)
            * self.rat.evaluate_array(w * x * x / 2)
        )
        return np.asarray(vals / np.sqrt(abs(float(self.norm_sq))))

    def to_json(self) -> dict[str, Any]:
        return {
            "xpow": format_rat(self.xpow),
            "gauss_sign": self.gauss_sign,
            "rat": self.rat.to_json(),
            "energy": format_rat(self.energy),
            "omega": format_rat(self.omega),
            "norm_sq": format_rat(self.norm_sq),
        }


def sector_wave(sector: int, n: int, p: Params) -> QuasiRationalWave:
    """
    The quasi-rational solutions of the isotonic Schrödinger equation in the
    four parameter sectors:

    1. :math:`x^a e^{-ωx^2/4} L_n^{(a-1/2)}(ξ)`, :math:`E = 2nω`
    2. :math:`x^a e^{ωx^2/4} L_n^{(a-1/2)}(-ξ)`, :math:`E = -2(n+a+1/2)ω`
    3. :math:`x^{1-a} e^{-ωx^2/4} L_n^{(1/2-a)}(ξ)`, :math:`E = 2(n-a+1/2)ω`
    4. :math:`x^{1-a} e^{ωx^2/4} L_n^{(1/2-a)}(-ξ)`, :math:`E = -2(n+1)ω`

    Only the first sector holds physical states.
    """
    if n < 0:
        raise ValueError(n)
    try:
        family = {1: Family.W, 2: Family.V, 3: Family.U, 4: Family.R}[sector]
    except KeyError:
        raise ValueError(f"no such sector: {sector}") from None
    s, ap = family.frame(p)
    poly = glp(n, ap - Fraction(1, 2))
    if s < 0:
        poly = poly.reflect()
    return QuasiRationalWave(
        xpow=ap,
        gauss_sign=-s,
        rat=RatFunc(poly),
        energy=family.energy(n, p),
        omega=p.omega,
    )


@dataclass(frozen=True)
class Prepotential:
    """:math:`W(x) = gx^2 + c\\log x + \\log P(ξ)`"""

    gauss: Fraction
    xlog: Fraction
    logpoly: Poly

    def gradient(self, omega: Scalar) -> OddField:
        """The negative gradient :math:`-W′` as an odd field"""
        omega = Fraction(omega)
        R = (
            RatFunc(-2 * self.gauss)
            - RatFunc(self.xlog * omega / 2, XI)
            - RatFunc(self.logpoly.deriv(), self.logpoly) * omega
        )
        return OddField(R, omega)

    def to_json(self) -> dict[str, Any]:
        return {
            "gauss": format_rat(self.gauss),
            "xlog": format_rat(self.xlog),
            "logpoly": self.logpoly.to_json(),
        }


def prepotential(family: Family, n: int, p: Params) -> Prepotential:
    """
    The Odake-Sasaki prepotentials of the regular L1 and L2 extensions:

    - v-family: :math:`-ωx^2/4 + a\\log x + \\log L_n^{(a-1/2)}(-ξ)`
    - u-family, relabelled :math:`a → a+n`:
      :math:`-ωx^2/4 - (a+n-1)\\log x + \\log L_n^{(1/2-a-n)}(ξ)`

    :raises ValueError: for the w and r families
    """
    if n < 0:
        raise ValueError(n)
    if family is Family.V:
        return Prepotential(-p.omega / 4, p.a, glp(n, p.a - Fraction(1, 2)).reflect())
    elif family is Family.U:
        return Prepotential(
            -p.omega / 4, -(p.a + n - 1), glp(n, -(p.a + n - Fraction(1, 2)))
        )
    else:
        raise ValueError(f"no prepotential for the {family.value} family")


def prepotential_target(family: Family, n: int, p: Params) -> OddField:
    """
    The RS function reproduced by the negative gradient of `prepotential`:
    :math:`w_0 + Q_n` for the v-family and :math:`u_n(x;ω,a+n)` for the
    u-family
    """
    if family is Family.V:
        return rs_w(0, p).field + rs_deformation(Family.V, n, p)
    elif family is Family.U:
        return rs_u(n, p.shifted(n)).field
    else:
        raise ValueError(f"no prepotential for the {family.value} family")
