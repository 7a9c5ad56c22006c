"""
Rational extensions of the isotonic oscillator

``isotonic`` builds the rationally extended isotonic (radial) oscillator
potentials of the L0, L1, L2 and L3 series by Darboux-Bäcklund
transformations of the Riccati-Schrödinger functions of the isotonic
oscillator.  Every potential, superpotential and eigenfunction is an exact
rational expression, so that the Riccati equations, shape invariance and
the pole counts of the potentials can be verified identically.  A
finite-difference eigensolver compares the predicted spectra with numerics.
"""

from __future__ import annotations
from .dbt import (
    DegenerateTransformError,
    ExtendedPotential,
    RegularityReport,
    Series,
    coincidence_check,
    dbt_apply,
    extend,
    extra_state,
    regularity,
    riccati_residual,
    transformed_rs,
    transformed_wave,
)
from .exactalg import PoleError, Poly, RatFunc, format_rat, parse_rat
from .laguerre import glp, glp_build, klh_predict, klh_verify
from .rsfields import (
    EvenField,
    Family,
    OddField,
    Params,
    QuasiRationalWave,
    RSFunction,
    isotonic_potential,
    rs_function,
    rs_r,
    rs_u,
    rs_v,
    rs_w,
)
from .shape import DegenerateParametersError, delta1, delta2, shape_check
from .spectral import BoundaryError, Grid, PoleInWindowError, spectrum_check

__version__ = "0.1.0"
__license__ = "MIT"

__all__ = [
    "BoundaryError",
    "DegenerateParametersError",
    "DegenerateTransformError",
    "EvenField",
    "ExtendedPotential",
    "Family",
    "Grid",
    "OddField",
    "Params",
    "PoleError",
    "PoleInWindowError",
    "Poly",
    "QuasiRationalWave",
    "RSFunction",
    "RatFunc",
    "RegularityReport",
    "Series",
    "coincidence_check",
    "dbt_apply",
    "delta1",
    "delta2",
    "extend",
    "extra_state",
    "format_rat",
    "glp",
    "glp_build",
    "isotonic_potential",
    "klh_predict",
    "klh_verify",
    "parse_rat",
    "regularity",
    "riccati_residual",
    "rs_function",
    "rs_r",
    "rs_u",
    "rs_v",
    "rs_w",
    "shape_check",
    "spectrum_check",
    "transformed_rs",
    "transformed_wave",
]
