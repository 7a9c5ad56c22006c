"""
Finite-difference check of the spectra of the extended potentials

The operator :math:`-d^2/dx^2 + V(x)` is discretized by central second
differences on a uniform grid of :math:`(x_{min}, x_{max})` with Dirichlet
boundaries, giving a symmetric tridiagonal matrix.  Its lowest eigenvalues
are found by bisection on the Sturm count (the number of negative pivots of
:math:`T - λ`), and the corresponding eigenvectors by inverse iteration.
Exact rationals are converted to floats here and nowhere else.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from math import sqrt
from typing import Any, Optional, Union
import numpy as np
from scipy.integrate import trapezoid
from scipy.linalg import solve_banded
from .dbt import DegenerateTransformError, Series, extend, extra_state, transformed_wave
from .exactalg import format_rat
from .rsfields import EvenField, Params, QuasiRationalWave, isotonic_potential, sector_wave

__all__ = [
    "BARRIER_MARGIN",
    "BoundaryError",
    "DEFAULT_POINTS",
    "DEFAULT_TOL_FACTOR",
    "Grid",
    "PoleInWindowError",
    "SpectrumReport",
    "TridiagonalOperator",
    "WaveEntry",
    "WaveReport",
    "X_MIN_FACTOR",
    "convergence_ratio",
    "default_grid",
    "discretize",
    "eigen_lowest",
    "exact_waves",
    "node_count",
    "potential_of",
    "predicted_levels",
    "sample_table",
    "spectrum_check",
    "wave_checks",
]

log = logging.getLogger(__name__)

DEFAULT_POINTS = 4000

#: x_min in units of the oscillator length sqrt(2/ω)
X_MIN_FACTOR = 1e-3

#: Margin above the highest wanted level, in units of ω, for placing x_max
BARRIER_MARGIN = 20

#: Default acceptance tolerance in units of ω
DEFAULT_TOL_FACTOR = 1e-3

#: Relative amplitude below which sign changes are not counted as nodes
NODE_THRESHOLD = 1e-8

BISECTION_RTOL = 1e-10


class PoleInWindowError(ValueError):
    """Raised when a potential has a pole inside the grid window"""


class BoundaryError(ValueError):
    """
    Raised for :math:`a < 1`, where a Dirichlet condition at :math:`x_{min}`
    no longer approximates the behaviour of the states at the origin
    """


@dataclass(frozen=True)
class Grid:
    """A uniform grid of ``npoints`` points on ``[x_min, x_max]``"""

    x_min: float
    x_max: float
    npoints: int

    def __post_init__(self) -> None:
        if not 0 < self.x_min < self.x_max:
            raise ValueError(f"need 0 < x_min < x_max: {self.x_min}, {self.x_max}")
        if self.npoints < 3:
            raise ValueError(f"need at least 3 grid points: {self.npoints}")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.npoints - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.npoints)

    def interior(self) -> np.ndarray:
        return self.points()[1:-1]

    def refined(self) -> Grid:
        """The same window with the spacing halved"""
        return Grid(self.x_min, self.x_max, 2 * self.npoints - 1)


def default_grid(
    p: Params, e_max: Union[float, Fraction], npoints: int = DEFAULT_POINTS
) -> Grid:
    """
    ``x_min = X_MIN_FACTOR·sqrt(2/ω)``; ``x_max`` is the classical turning
    point of the unshifted oscillator at ``e_max + BARRIER_MARGIN·ω``,
    i.e. :math:`2\\sqrt{E_{max} + ω(a+1/2) + 20ω}/ω`.

    .. note::

        ``x_max`` follows the turning point rather than being a fixed
        multiple of the oscillator length :math:`\\sqrt{2/ω}`, so the window
        widens with ``e_max`` and ``a``.  See "Grid window" in DESIGN.md.
    """
    w = float(p.omega)
    x_min = X_MIN_FACTOR * sqrt(2 / w)
    x_max = 2 * sqrt(float(e_max) + w * (float(p.a) + 0.5) + BARRIER_MARGIN * w) / w
    return Grid(x_min, x_max, npoints)


@dataclass(frozen=True)
class TridiagonalOperator:
    """A real symmetric tridiagonal matrix given by its two diagonals"""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self) -> None:
        if len(self.off) != len(self.diag) - 1:
            raise ValueError("off-diagonal must be one shorter than the diagonal")

    @property
    def size(self) -> int:
        return len(self.diag)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.off * v[1:]
        out[1:] += self.off * v[:-1]
        return np.asarray(out)

    def sturm_count(self, lam: Union[float, np.ndarray]) -> np.ndarray:
        """
        Number of eigenvalues strictly below each ``lam``, from the signs of
        the pivots of the :math:`LDL^T` factorization of :math:`T - λ`
        """
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        off2 = self.off**2
        tiny = np.finfo(float).tiny
        d = self.diag[0] - lam
        count = (d < 0).astype(int)
        for i in range(1, self.size):
            d = np.where(d == 0, -tiny, d)
            d = self.diag[i] - lam - off2[i - 1] / d
            count += d < 0
        return count

    def gershgorin(self) -> tuple[float, float]:
        radius = np.zeros(self.size)
        radius[:-1] += np.abs(self.off)
        radius[1:] += np.abs(self.off)
        return (float(np.min(self.diag - radius)), float(np.max(self.diag + radius)))

    def eigenvectors(self, values: np.ndarray, iterations: int = 3) -> np.ndarray:
        """
        Unit eigenvectors for the given eigenvalues by inverse iteration, one
        per column
        """
        n = self.size
        rng = np.random.default_rng(0)
        vecs = np.empty((n, len(values)))
        for j, lam in enumerate(values):
            shift = lam + 1e-10 * max(1.0, abs(lam))
            ab = np.zeros((3, n))
            ab[0, 1:] = self.off
            ab[1, :] = self.diag - shift
            ab[2, :-1] = self.off
            v = rng.standard_normal(n)
            for _ in range(iterations):
                v = solve_banded((1, 1), ab, v)
                v /= np.linalg.norm(v)
            vecs[:, j] = v
        return vecs


def node_count(v: np.ndarray, threshold: float = NODE_THRESHOLD) -> int:
    """Sign changes of ``v``, ignoring entries below ``threshold`` relative to its peak"""
    v = np.asarray(v, dtype=float)
    big = v[np.abs(v) > threshold * np.max(np.abs(v))]
    return int(np.count_nonzero(np.signbit(big[1:]) != np.signbit(big[:-1])))


def _check_window(pot: EvenField, g: Grid) -> None:
    den = pot.S.den
    if den.degree < 1:
        return
    w = pot.omega
    lo = w * Fraction(g.x_min) ** 2 / 2
    hi = w * Fraction(g.x_max) ** 2 / 2
    if den(lo) == 0 or den(hi) == 0 or den.sturm_count(lo, hi) > 0:
        raise PoleInWindowError(
            f"potential has a pole in [{g.x_min:g}, {g.x_max:g}]"
        )


def discretize(pot: EvenField, g: Grid) -> TridiagonalOperator:
    """
    The finite-difference Hamiltonian on the interior points of ``g``:
    diagonal :math:`2/h^2 + V(x_i)`, off-diagonal :math:`-1/h^2`

    :raises PoleInWindowError: if ``pot`` has a pole in the window
    """
    _check_window(pot, g)
    h2 = g.h**2
    x = g.interior()
    diag = 2 / h2 + pot.evaluate(x)
    off = np.full(len(x) - 1, -1 / h2)
    return TridiagonalOperator(diag, off)


def eigen_lowest(T: TridiagonalOperator, count: int) -> np.ndarray:
    """
    The ``count`` lowest eigenvalues of ``T`` in ascending order, bisected
    simultaneously on the Sturm count
    """
    if count < 1:
        raise ValueError(count)
    if count > T.size:
        raise ValueError(f"only {T.size} eigenvalues exist")
    lo, _ = T.gershgorin()
    hi = max(1.0, abs(lo))
    while T.sturm_count(hi)[0] < count:
        hi *= 2
    k = np.arange(count)
    left = np.full(count, lo)
    right = np.full(count, hi)
    scale = max(1.0, abs(lo), abs(hi))
    steps = 0
    while np.max(right - left) > BISECTION_RTOL * scale:
        mid = (left + right) / 2
        below = T.sturm_count(mid) > k
        right = np.where(below, mid, right)
        left = np.where(below, left, mid)
        steps += 1
    log.debug("Bisection of %d eigenvalues took %d steps", count, steps)
    return np.asarray((left + right) / 2)


def potential_of(series: Optional[Series], n: int, p: Params) -> EvenField:
    """The extended potential, or the isotonic one when ``series`` is `None`"""
    return isotonic_potential(p) if series is None else extend(series, n, p).field


def _ladder(series: Optional[Series], n: int, p: Params, levels: int) -> list[int]:
    # Isotonic levels k that survive the transformation
    ks: list[int] = []
    k = 0
    seed_energy = None if series is None else extend(series, n, p).seed_energy
    while len(ks) < levels:
        if seed_energy is None or 2 * k * p.omega != seed_energy:
            ks.append(k)
        k += 1
    return ks


def _has_extra_level(series: Optional[Series], n: int, p: Params) -> bool:
    return series is not None and extra_state(series, n, p).is_square_integrable()


def predicted_levels(
    series: Optional[Series], n: int, p: Params, levels: int
) -> list[Fraction]:
    """
    The exact bound spectrum: the isotonic ladder :math:`2kω` without any
    level shared with the seed, preceded by the seed energy when the extra
    state is normalizable (the regular L3 potentials)
    """
    out = [2 * k * p.omega for k in _ladder(series, n, p, levels)]
    if _has_extra_level(series, n, p):
        assert series is not None
        out.insert(0, extend(series, n, p).seed_energy)
    return out


@dataclass
class SpectrumReport:
    series: Optional[Series]
    n: int
    params: Params
    energies: list[float]
    predicted: list[Fraction]
    node_counts: list[int]
    grid: Grid

    @property
    def errors(self) -> list[float]:
        return [e - float(q) for e, q in zip(self.energies, self.predicted)]

    @property
    def max_abs_error(self) -> float:
        return max(abs(e) for e in self.errors)

    def nodes_ok(self) -> bool:
        return self.node_counts == list(range(len(self.node_counts)))

    def ok(self, tol: float) -> bool:
        return self.max_abs_error <= tol and self.nodes_ok()

    def csv_rows(self) -> list[tuple[int, str, float, float, int]]:
        """Rows ``(k, predicted, computed, abs_error, nodes)``"""
        return [
            (k, format_rat(q), e, abs(e - float(q)), nodes)
            for k, (q, e, nodes) in enumerate(
                zip(self.predicted, self.energies, self.node_counts)
            )
        ]

    def to_json(self) -> dict[str, Any]:
        return {
            "series": "base" if self.series is None else self.series.value,
            "n": self.n,
            "params": self.params.to_json(),
            "grid": {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "npoints": self.grid.npoints,
            },
            "levels": [
                {
                    "k": k,
                    "predicted": q,
                    "computed": e,
                    "abs_error": err,
                    "nodes": nodes,
                }
                for k, q, e, err, nodes in self.csv_rows()
            ],
            "max_abs_error": self.max_abs_error,
        }


def _require_boundary(p: Params) -> None:
    if p.a < 1:
        raise BoundaryError(f"Dirichlet boundary needs a >= 1: a = {format_rat(p.a)}")


def spectrum_check(
    series: Optional[Series],
    n: int,
    p: Params,
    levels: int,
    g: Optional[Grid] = None,
) -> SpectrumReport:
    """
    Compute the lowest eigenvalues of the extended potential (the isotonic
    potential when ``series`` is `None`) and compare them with
    `predicted_levels`

    :raises BoundaryError: if :math:`a < 1`
    :raises PoleInWindowError: if the potential is singular in the window
    """
    _require_boundary(p)
    predicted = predicted_levels(series, n, p, levels)
    if g is None:
        g = default_grid(p, max(predicted))
    T = discretize(potential_of(series, n, p), g)
    energies = eigen_lowest(T, len(predicted))
    vecs = T.eigenvectors(energies)
    nodes = [node_count(vecs[:, j]) for j in range(vecs.shape[1])]
    report = SpectrumReport(
        series=series,
        n=n,
        params=p,
        energies=[float(e) for e in energies],
        predicted=predicted,
        node_counts=nodes,
        grid=g,
    )
    log.debug("Spectrum max abs error %.3e", report.max_abs_error)
    return report


def convergence_ratio(
    series: Optional[Series], n: int, p: Params, levels: int, g: Grid
) -> np.ndarray:
    """
    Per-level ratios of the eigenvalue errors on ``g`` and on ``g`` with the
    spacing halved; close to 4 for a second-order scheme
    """
    coarse = spectrum_check(series, n, p, levels, g)
    fine = spectrum_check(series, n, p, levels, g.refined())
    return np.abs(np.array(coarse.errors)) / np.abs(np.array(fine.errors))


@dataclass(frozen=True)
class WaveEntry:
    label: str
    energy: Fraction
    rayleigh: float
    nodes: int
    expected_nodes: int

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "energy": format_rat(self.energy),
            "rayleigh": self.rayleigh,
            "nodes": self.nodes,
            "expected_nodes": self.expected_nodes,
        }


@dataclass
class WaveReport:
    entries: list[WaveEntry] = field(default_factory=list)
    max_overlap: float = 0.0

    def ok(self, tol: float) -> bool:
        return self.max_overlap <= tol and all(
            abs(e.rayleigh - float(e.energy)) <= tol and e.nodes == e.expected_nodes
            for e in self.entries
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "entries": [e.to_json() for e in self.entries],
            "max_overlap": self.max_overlap,
        }


def exact_waves(
    series: Optional[Series], n: int, p: Params, k_max: int
) -> list[tuple[str, QuasiRationalWave]]:
    """
    The closed-form bound states for levels ``0..k_max`` in ascending order
    of energy, the normalizable extra state first
    """
    waves: list[tuple[str, QuasiRationalWave]] = []
    if series is not None and _has_extra_level(series, n, p):
        waves.append(("extra", extra_state(series, n, p)))
    for k in range(k_max + 1):
        if series is None:
            waves.append((f"k={k}", sector_wave(1, k, p)))
        else:
            try:
                waves.append((f"k={k}", transformed_wave(series, n, k, p)))
            except DegenerateTransformError:
                log.debug("Level %d is removed by the seed", k)
    return waves


def wave_checks(
    series: Optional[Series], n: int, p: Params, k_max: int, g: Optional[Grid] = None
) -> WaveReport:
    """
    Evaluate the closed-form eigenfunctions on the grid and check their
    Rayleigh quotients against the exact energies, their mutual overlaps and
    their node counts
    """
    _require_boundary(p)
    waves = exact_waves(series, n, p, k_max)
    if g is None:
        g = default_grid(p, max(w.energy for _, w in waves))
    T = discretize(potential_of(series, n, p), g)
    x = g.interior()
    values = [w.evaluate(x) for _, w in waves]
    report = WaveReport()
    entries = []
    for idx, ((label, wave), psi) in enumerate(zip(waves, values)):
        rq = float(psi @ T.matvec(psi) / (psi @ psi))
        entries.append(WaveEntry(label, wave.energy, rq, node_count(psi), idx))
    report.entries.extend(entries)
    norms = [sqrt(trapezoid(psi * psi, x)) for psi in values]
    for i in range(len(values)):
        for j in range(i):
            ov = abs(trapezoid(values[i] * values[j], x)) / (norms[i] * norms[j])
            report.max_overlap = max(report.max_overlap, float(ov))
    return report


def sample_table(
    series: Optional[Series],
    n: int,
    p: Params,
    g: Grid,
    ks: tuple[int, ...] = (),
    include_extra: bool = False,
) -> tuple[list[str], np.ndarray]:
    """
    Columns ``x``, ``V`` and optionally normalized-shape samples of
    :math:`ψ_k` and of the extra state, for plotting

    :raises PoleInWindowError: if the potential is singular in the window
    :raises DegenerateTransformError: if a requested level is removed by the seed
    """
    pot = potential_of(series, n, p)
    _check_window(pot, g)
    x = g.points()
    header = ["x", "V"]
    cols = [x, pot.evaluate(x)]
    for k in ks:
        wave = sector_wave(1, k, p) if series is None else transformed_wave(series, n, k, p)
        header.append(f"psi_{k}")
        cols.append(wave.evaluate(x))
    if include_extra:
        if series is None:
            raise ValueError("the isotonic potential has no extra state")
        header.append("psi_extra")
        cols.append(extra_state(series, n, p).evaluate(x))
    return header, np.column_stack(cols)
