from __future__ import annotations
from fractions import Fraction
import random
import pytest
from isotonic.exactalg import Poly, format_rat, parse_rat, poly_arith, poly_gcd


def random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(degree + 1)))


@pytest.mark.parametrize(
    "p,degree,lead",
    [
        (Poly(), -1, 0),
        (Poly(0, 0, 0), -1, 0),
        (Poly(5), 0, 5),
        (Poly(1, -3, 1), 2, 1),
        (Poly(1, 2, 0, 0), 1, 2),
        (Poly.monomial(3, Fraction(1, 2)), 3, Fraction(1, 2)),
    ],
)
def test_degree_lead(p: Poly, degree: int, lead: Fraction) -> None:
    assert p.degree == degree
    assert p.lead == lead


def test_zero_is_false() -> None:
    assert not Poly()
    assert Poly(0, 1)


def test_monomial_negative() -> None:
    with pytest.raises(ValueError):
        Poly.monomial(-1)


@pytest.mark.parametrize(
    "p,q,kind,r",
    [
        (Poly(0, -3, 1), None, "derive", Poly(-3, 2)),
        (Poly(1, 1), Poly(-1, 1), "mul", Poly(-1, 0, 1)),
        (Poly(0, 1), 0, "scale", Poly()),
        (Poly(0, 1), Fraction(3, 2), "scale", Poly(0, Fraction(3, 2))),
        (Poly(1, 2, 3), Poly(-1, -2, -3), "add", Poly()),
        (Poly(1, 2, 3), Poly(0, 2), "sub", Poly(1, 0, 3)),
        (Poly(-1, 0, 1), Poly(1, 1), "quo", Poly(-1, 1)),
        (Poly(2, 0, 1), Poly(0, 1), "rem", Poly(2)),
        (Poly(1, 1), 4, "add", Poly(5, 1)),
    ],
)
def test_poly_arith(p: Poly, q: Poly | int | Fraction | None, kind: str, r: Poly) -> None:
    assert poly_arith(p, q, kind) == r


def test_poly_arith_bad_kind() -> None:
    with pytest.raises(ValueError):
        poly_arith(Poly(1), Poly(1), "pow")


def test_poly_arith_missing_operand() -> None:
    with pytest.raises(TypeError):
        poly_arith(Poly(1), None, "add")


def test_scalar_mixing() -> None:
    p = Poly(1, 2)
    assert p + 1 == Poly(2, 2)
    assert 1 - p == Poly(0, -2)
    assert 3 * p == Poly(3, 6)
    assert Poly(7) == 7
    assert p**0 == Poly(1)
    assert p**3 == p * p * p


def test_pow_negative() -> None:
    with pytest.raises(ValueError):
        Poly(1, 1) ** -1


def test_divmod() -> None:
    rng = random.Random(1)
    for _ in range(20):
        a = random_poly(rng, rng.randint(0, 8))
        b = random_poly(rng, rng.randint(0, 5))
        if not b:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_divide_by_zero() -> None:
    with pytest.raises(ZeroDivisionError):
        divmod(Poly(1, 1), Poly())


def test_call() -> None:
    assert Poly(1, -3, 1)(2) == -1
    assert Poly(Fraction(15, 8), Fraction(-5, 2), Fraction(1, 2))(Fraction(1, 2)) == Fraction(3, 4)
    assert Poly()(5) == 0


def test_reflect() -> None:
    assert Poly(1, 2, 3, 4).reflect() == Poly(1, -2, 3, -4)


def test_derive_is_linear_and_leibniz() -> None:
    rng = random.Random(2)
    for _ in range(20):
        p = random_poly(rng, rng.randint(0, 8))
        q = random_poly(rng, rng.randint(0, 8))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        assert (p + q.scale(c)).deriv() == p.deriv() + q.deriv().scale(c)
        assert (p * q).deriv() == p.deriv() * q + p * q.deriv()


@pytest.mark.parametrize(
    "p,q,g",
    [
        (Poly(-1, 0, 1), Poly(-1, 1), Poly(-1, 1)),
        (Poly(0, 1), Poly(1, 1), Poly(1)),
        (Poly(2, 4), Poly(), Poly(Fraction(1, 2), 1)),
        (Poly(), Poly(0, 3), Poly(0, 1)),
        (Poly(6, 5, 1), Poly(-4, 0, 1), Poly(2, 1)),
    ],
)
def test_gcd(p: Poly, q: Poly, g: Poly) -> None:
    assert poly_gcd(p, q) == g
    assert poly_gcd(q, p) == g


def test_gcd_divides() -> None:
    rng = random.Random(3)
    for _ in range(25):
        common = random_poly(rng, rng.randint(0, 3))
        p = random_poly(rng, rng.randint(0, 5)) * common
        q = random_poly(rng, rng.randint(0, 5)) * common
        if not p and not q:
            continue
        g = poly_gcd(p, q)
        assert g.lead == 1
        assert p % g == Poly()
        assert q % g == Poly()
        if common and p and q:
            assert g % common.monic() == Poly()


def test_gcd_both_zero() -> None:
    with pytest.raises(ValueError):
        poly_gcd(Poly(), Poly())


def test_squarefree_part() -> None:
    p = Poly(-1, 1) ** 3 * Poly(2, 1)
    assert p.squarefree_part() == Poly(-1, 1) * Poly(2, 1)


@pytest.mark.parametrize(
    "p,s",
    [
        (Poly(), "0"),
        (Poly(3), "3"),
        (Poly(0, -1), "-xi"),
        (Poly(1, -3, 1), "xi^2 - 3*xi + 1"),
        (Poly(Fraction(15, 8), Fraction(-5, 2), Fraction(1, 2)), "1/2*xi^2 - 5/2*xi + 15/8"),
    ],
)
def test_str(p: Poly, s: str) -> None:
    assert str(p) == s


def test_repr() -> None:
    assert repr(Poly(Fraction(-1, 2), 0, 3)) == "isotonic.exactalg.Poly(-1/2, 0, 3)"


def test_hashable() -> None:
    assert len({Poly(1, 2), Poly(1, 2, 0), Poly(2, 1)}) == 2


def test_json() -> None:
    p = Poly(Fraction(-3, 2), 0, 4)
    assert p.to_json() == ["-3/2", "0", "4"]
    assert Poly.from_json(p.to_json()) == p


@pytest.mark.parametrize(
    "s,q",
    [
        ("4", Fraction(4)),
        ("-3/2", Fraction(-3, 2)),
        ("6/4", Fraction(3, 2)),
        (" +7/3 ", Fraction(7, 3)),
    ],
)
def test_parse_rat(s: str, q: Fraction) -> None:
    assert parse_rat(s) == q


@pytest.mark.parametrize("s", ["2.5", "1/0", "", "a/b", "1/-2", "1e3"])
def test_parse_rat_bad(s: str) -> None:
    with pytest.raises(ValueError):
        parse_rat(s)


@pytest.mark.parametrize(
    "q,s",
    [(Fraction(4), "4"), (Fraction(-3, 2), "-3/2"), (0, "0")],
)
def test_format_rat(q: Fraction, s: str) -> None:
    assert format_rat(q) == s
