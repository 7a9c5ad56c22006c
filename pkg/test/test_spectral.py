from __future__ import annotations
from fractions import Fraction
from math import pi, sqrt
import numpy as np
import pytest
from scipy.linalg import eigh_tridiagonal
from isotonic.dbt import Series
from isotonic.rsfields import EvenField, Params
from isotonic.spectral import (
    BoundaryError,
    Grid,
    PoleInWindowError,
    TridiagonalOperator,
    convergence_ratio,
    default_grid,
    discretize,
    eigen_lowest,
    node_count,
    predicted_levels,
    sample_table,
    spectrum_check,
    wave_checks,
)

TOL = 4e-3


def random_operator(size: int, seed: int) -> TridiagonalOperator:
    rng = np.random.default_rng(seed)
    return TridiagonalOperator(rng.normal(size=size) * 5, rng.normal(size=size - 1))


@pytest.mark.parametrize(
    "x_min,x_max,npoints",
    [(0, 1, 10), (-1, 1, 10), (2, 1, 10), (1, 1, 10), (1, 2, 2)],
)
def test_grid_invalid(x_min: float, x_max: float, npoints: int) -> None:
    with pytest.raises(ValueError):
        Grid(x_min, x_max, npoints)


def test_grid() -> None:
    g = Grid(1, 2, 11)
    assert g.h == pytest.approx(0.1)
    assert len(g.points()) == 11
    assert len(g.interior()) == 9
    assert g.interior()[0] == pytest.approx(1.1)
    fine = g.refined()
    assert fine.npoints == 21
    assert fine.h == pytest.approx(g.h / 2)


def test_default_grid() -> None:
    g = default_grid(Params(2, Fraction(5, 2)), 16)
    assert g.x_min == pytest.approx(1e-3)
    # turning point of ω²x²/4 at 16 + ω(a + 1/2) + 20ω
    assert g.x_max == pytest.approx(sqrt(62))
    assert g.npoints == 4000


def test_default_grid_follows_turning_point() -> None:
    p = Params(1, Fraction(7, 2))
    assert default_grid(p, 0).x_max == pytest.approx(2 * sqrt(24))
    assert default_grid(p, 12).x_max == pytest.approx(2 * sqrt(36))
    assert default_grid(p.shifted(2), 0).x_max == pytest.approx(2 * sqrt(26))


def test_operator_shape() -> None:
    with pytest.raises(ValueError):
        TridiagonalOperator(np.zeros(4), np.zeros(4))


def test_matvec() -> None:
    T = random_operator(7, 1)
    dense = np.diag(T.diag) + np.diag(T.off, 1) + np.diag(T.off, -1)
    v = np.arange(7, dtype=float)
    assert T.matvec(v) == pytest.approx(dense @ v)


@pytest.mark.parametrize("seed", [2, 3, 4])
def test_sturm_count(seed: int) -> None:
    T = random_operator(40, seed)
    values = eigh_tridiagonal(T.diag, T.off, eigvals_only=True)
    mids = (values[1:] + values[:-1]) / 2
    assert list(T.sturm_count(mids)) == list(range(1, 40))
    assert T.sturm_count(values[0] - 1)[0] == 0
    assert T.sturm_count(values[-1] + 1)[0] == 40
    lo, hi = T.gershgorin()
    assert lo <= values[0] and values[-1] <= hi


@pytest.mark.parametrize("seed", [5, 6])
def test_eigen_lowest(seed: int) -> None:
    T = random_operator(60, seed)
    values = eigh_tridiagonal(T.diag, T.off, eigvals_only=True)
    lowest = eigen_lowest(T, 6)
    assert lowest == pytest.approx(values[:6], abs=1e-7)
    vecs = T.eigenvectors(lowest)
    for j, lam in enumerate(lowest):
        v = vecs[:, j]
        assert np.linalg.norm(v) == pytest.approx(1)
        assert np.linalg.norm(T.matvec(v) - lam * v) < 1e-6


def test_eigen_lowest_count() -> None:
    T = random_operator(5, 7)
    with pytest.raises(ValueError):
        eigen_lowest(T, 0)
    with pytest.raises(ValueError):
        eigen_lowest(T, 6)


def test_particle_in_a_box() -> None:
    g = Grid(1, 2, 201)
    T = discretize(EvenField(0, 1), g)
    assert T.size == 199
    values = eigen_lowest(T, 5)
    k = np.arange(1, 6)
    exact = 4 / g.h**2 * np.sin(k * pi / 400) ** 2
    assert values == pytest.approx(exact, rel=1e-7)
    assert values == pytest.approx((k * pi) ** 2, rel=1e-3)


@pytest.mark.parametrize(
    "v,nodes",
    [
        (np.sin(np.linspace(0.01, 3 * pi - 0.01, 500)), 2),
        (np.ones(10), 0),
        (np.array([1.0, -1.0, 1e-12, 1.0]), 2),
        (np.array([1.0, 1e-12, -1e-12, 1.0]), 0),
    ],
)
def test_node_count(v: np.ndarray, nodes: int) -> None:
    assert node_count(v) == nodes


def test_predicted_levels() -> None:
    assert predicted_levels(None, 0, Params(2, 2), 3) == [0, 4, 8]
    assert predicted_levels(Series.L1, 2, Params(2, 2), 3) == [0, 4, 8]
    # u_2 sits at E_0 when a = 5/2
    assert predicted_levels(Series.L2, 2, Params(2, Fraction(5, 2)), 3) == [4, 8, 12]
    assert predicted_levels(Series.L3, 2, Params(2, Fraction(7, 2)), 2) == [-12, 0, 4]
    assert predicted_levels(Series.L3, 1, Params(2, 4), 2) == [0, 4]


def test_spectrum_isotonic() -> None:
    report = spectrum_check(None, 0, Params(2, Fraction(5, 2)), 5)
    assert report.energies == pytest.approx([0, 4, 8, 12, 16], abs=TOL)
    assert report.nodes_ok()
    assert report.ok(TOL)
    rows = report.csv_rows()
    assert [r[0] for r in rows] == [0, 1, 2, 3, 4]
    assert rows[2][1] == "8"
    data = report.to_json()
    assert data["series"] == "base"
    assert len(data["levels"]) == 5


@pytest.mark.parametrize(
    "series,n,p,levels,first",
    [
        (Series.L1, 1, Params(2, Fraction(5, 2)), 4, 0),
        (Series.L1, 2, Params(1, 2), 3, 0),
        (Series.L2, 2, Params(2, Fraction(9, 2)), 3, 0),
        (Series.L2, 2, Params(2, Fraction(5, 2)), 3, 4),
        (Series.L3, 2, Params(2, Fraction(7, 2)), 3, -12),
    ],
)
def test_spectrum_extended(
    series: Series, n: int, p: Params, levels: int, first: int
) -> None:
    report = spectrum_check(series, n, p, levels)
    assert report.predicted[0] == first
    assert report.energies[0] == pytest.approx(first, abs=TOL)
    assert report.ok(TOL)


def test_spectrum_pole_in_window() -> None:
    # w_1 at ω=2, a=5/2 vanishes at x = sqrt(3)
    with pytest.raises(PoleInWindowError):
        spectrum_check(Series.L0, 1, Params(2, Fraction(5, 2)), 3)


def test_spectrum_boundary() -> None:
    with pytest.raises(BoundaryError):
        spectrum_check(None, 0, Params(2, Fraction(1, 2)), 3)
    with pytest.raises(BoundaryError):
        wave_checks(None, 0, Params(2, Fraction(1, 2)), 3)


@pytest.mark.slow
def test_convergence_ratio() -> None:
    p = Params(2, Fraction(5, 2))
    ratios = convergence_ratio(None, 0, p, 3, default_grid(p, 12, npoints=1001))
    assert len(ratios) == 3
    assert np.all((ratios > 3.2) & (ratios < 4.8))


@pytest.mark.parametrize(
    "series,n,p",
    [
        (None, 0, Params(2, Fraction(5, 2))),
        (Series.L1, 1, Params(2, Fraction(5, 2))),
        (Series.L3, 2, Params(2, Fraction(7, 2))),
    ],
)
def test_wave_checks(series: Series | None, n: int, p: Params) -> None:
    report = wave_checks(series, n, p, 3)
    assert report.ok(TOL)
    labels = [e.label for e in report.entries]
    if series is Series.L3:
        assert labels[0] == "extra"
    assert labels[-1] == "k=3"
    assert [e.nodes for e in report.entries] == list(range(len(labels)))


def test_wave_checks_skip_removed_level() -> None:
    report = wave_checks(Series.L2, 2, Params(2, Fraction(5, 2)), 3)
    assert [e.label for e in report.entries] == ["k=1", "k=2", "k=3"]
    assert report.ok(TOL)


def test_sample_table() -> None:
    g = Grid(0.1, 5, 50)
    header, data = sample_table(None, 0, Params(2, Fraction(5, 2)), g, (0, 1))
    assert header == ["x", "V", "psi_0", "psi_1"]
    assert data.shape == (50, 4)
    assert data[:, 0] == pytest.approx(g.points())
    header, data = sample_table(Series.L3, 2, Params(2, Fraction(7, 2)), g, include_extra=True)
    assert header == ["x", "V", "psi_extra"]
    assert data.shape == (50, 3)
    with pytest.raises(ValueError):
        sample_table(None, 0, Params(2, 2), g, include_extra=True)


def test_sample_table_pole() -> None:
    with pytest.raises(PoleInWindowError):
        sample_table(Series.L0, 1, Params(2, Fraction(5, 2)), Grid(0.1, 5, 50))
