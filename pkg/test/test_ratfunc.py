from __future__ import annotations
from fractions import Fraction
import random
import numpy as np
import pytest
from isotonic.exactalg import PoleError, Poly, RatFunc, eval_rat, ratfunc_make

XI = Poly(0, 1)


def random_ratfunc(rng: random.Random) -> RatFunc:
    while True:
        num = Poly(*(rng.randint(-6, 6) for _ in range(rng.randint(1, 4))))
        den = Poly(*(rng.randint(-6, 6) for _ in range(rng.randint(1, 4))))
        if den:
            return RatFunc(num, den)


@pytest.mark.parametrize(
    "n,d,num,den",
    [
        (Poly(-1, 0, 1), Poly(-1, 1), Poly(1, 1), Poly(1)),
        (Poly(), Poly(3, 1), Poly(), Poly(1)),
        (Poly(0, 2), Poly(4), Poly(0, Fraction(1, 2)), Poly(1)),
        (Poly(1), Poly(0, -2), Poly(Fraction(-1, 2)), Poly(0, 1)),
        (Poly(2, 2), Poly(4, 4), Poly(Fraction(1, 2)), Poly(1)),
    ],
)
def test_ratfunc_make(n: Poly, d: Poly, num: Poly, den: Poly) -> None:
    f = ratfunc_make(n, d)
    assert f.num == num
    assert f.den == den


def test_zero_denominator() -> None:
    with pytest.raises(ZeroDivisionError):
        ratfunc_make(Poly(1), Poly())


@pytest.mark.parametrize(
    "f,x0,value",
    [
        (RatFunc(Poly(1, 1)), 1, Fraction(2)),
        (RatFunc(Poly(1), Poly(1, 1)), Fraction(1, 2), Fraction(2, 3)),
        # ωξ/2 + a(a-1)ω/(2ξ) - ω(a+1/2) with ω=2, a=2 at ξ=1
        (RatFunc(Poly(0, 1)) + RatFunc(2, XI) - 5, 1, Fraction(-2)),
    ],
)
def test_eval_rat(f: RatFunc, x0: Fraction, value: Fraction) -> None:
    assert eval_rat(f, x0) == value


def test_eval_rat_pole() -> None:
    with pytest.raises(PoleError):
        eval_rat(RatFunc(1, XI), 0)
    with pytest.raises(ZeroDivisionError):
        eval_rat(RatFunc(1, XI), 0)


def test_equality_is_cross_multiplication() -> None:
    rng = random.Random(10)
    for _ in range(30):
        f = random_ratfunc(rng)
        g = random_ratfunc(rng)
        same = f.num * g.den - g.num * f.den == Poly()
        assert (f == g) is same
    f = RatFunc(Poly(-1, 0, 1), Poly(-1, 1))
    assert f == RatFunc(Poly(1, 1))
    assert f == Poly(1, 1)
    assert hash(f) == hash(RatFunc(Poly(1, 1)))


def test_field_axioms() -> None:
    rng = random.Random(11)
    for _ in range(20):
        f, g, h = random_ratfunc(rng), random_ratfunc(rng), random_ratfunc(rng)
        assert f * (g + h) == f * g + f * h
        assert (f - g) + g == f
        if g:
            assert (f / g) * g == f
            assert g * g.reciprocal() == 1


def test_scalar_mixing() -> None:
    f = RatFunc(1, XI)
    assert f * 0 == 0
    assert not f * 0
    assert 2 - f == RatFunc(Poly(-1, 2), XI)
    assert 1 / f == RatFunc(XI)
    assert f**-2 == RatFunc(XI * XI)
    assert f**2 == RatFunc(1, XI * XI)


def test_reciprocal_of_zero() -> None:
    with pytest.raises(ZeroDivisionError):
        RatFunc(0).reciprocal()


def test_deriv_product_rule() -> None:
    rng = random.Random(12)
    for _ in range(20):
        f, g = random_ratfunc(rng), random_ratfunc(rng)
        assert (f * g).deriv() == f.deriv() * g + f * g.deriv()


def test_deriv() -> None:
    # d/dξ (ξ - a)/ξ = a/ξ^2
    assert RatFunc(Poly(-3, 1), XI).deriv() == RatFunc(3, XI * XI)


def test_reflect() -> None:
    assert RatFunc(Poly(1, 1), Poly(2, 1)).reflect() == RatFunc(Poly(1, -1), Poly(2, -1))


@pytest.mark.parametrize(
    "f,v",
    [
        (RatFunc(Poly(0, 0, 3), Poly(1, 1)), 2),
        (RatFunc(Poly(1, 1), Poly(0, 0, 0, 1)), -3),
        (RatFunc(7), 0),
    ],
)
def test_valuation(f: RatFunc, v: int) -> None:
    assert f.valuation() == v


def test_valuation_of_zero() -> None:
    with pytest.raises(ValueError):
        RatFunc(0).valuation()


def test_shift_out() -> None:
    f = RatFunc(Poly(0, 0, 3, 1))
    assert f.shift_out(2) == RatFunc(Poly(3, 1))
    assert f.shift_out(-1) == RatFunc(Poly(0, 0, 0, 3, 1))


def test_evaluate_array() -> None:
    f = RatFunc(Poly(1, 1), Poly(2, 0, 1))
    xi = np.array([0.0, 0.5, 3.0])
    assert f.evaluate_array(xi) == pytest.approx([0.5, 1.5 / 2.25, 4 / 11])
    assert RatFunc(0).evaluate_array(xi) == pytest.approx([0.0, 0.0, 0.0])


def test_str() -> None:
    assert str(RatFunc(Poly(1, 1))) == "xi + 1"
    assert str(RatFunc(Poly(1, 1), XI)) == "(xi + 1) / (xi)"


def test_json() -> None:
    f = RatFunc(Poly(Fraction(1, 2), 1), Poly(-3, 0, 1))
    assert f.to_json() == {"num": ["1/2", "1"], "den": ["-3", "0", "1"]}
    assert RatFunc.from_json(f.to_json()) == f
