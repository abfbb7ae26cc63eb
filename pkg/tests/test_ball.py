"""Soundness and tightness of the ball arithmetic layer."""

import random
from fractions import Fraction

import gmpy2
import mpmath
import pytest
from gmpy2 import mpq

from maass_zeta.ball import (
    Ball,
    CBall,
    ball_atan,
    ball_cos,
    ball_cosh,
    ball_exp,
    ball_log,
    ball_powr,
    ball_sin,
    ball_sinh,
    ball_sqrt,
    cball_exp,
    cball_log,
    cball_sqrt,
    exact_decimal_to_mpq,
    get_precision,
    local_precision,
    pi_ball,
    set_precision,
)

mpmath.mp.dps = 70


def mp_ref(x, fn):
    """Reference value as exact rational of an over-precise decimal."""
    v = fn(mpmath.mpf(x))
    return exact_decimal_to_mpq(mpmath.nstr(v, 55, strip_zeros=False))


def test_decimal_parse_exact():
    q = exact_decimal_to_mpq("9.533695261")
    assert q == mpq(9533695261, 10**9)
    assert exact_decimal_to_mpq("-2.5e-3") == mpq(-25, 10**4)
    assert exact_decimal_to_mpq("1e10") == mpq(10**10)


def test_ball_construction_contains_value():
    b = Ball("9.533695261", "5e-10")
    assert b.contains(mpq(9533695261, 10**9))
    assert b.contains(Fraction(9533695261, 10**9))
    assert not b.contains(mpq(96, 10))
    assert Ball(10**80).contains(10**80)


def test_arithmetic_soundness_random():
    random.seed(11)
    for _ in range(400):
        a = random.uniform(-50, 50)
        b = random.uniform(-50, 50)
        ba, bb = Ball(a), Ball(b)
        qa, qb = mpq(a), mpq(b)
        assert (ba + bb).contains(qa + qb)
        assert (ba - bb).contains(qa - qb)
        assert (ba * bb).contains(qa * qb)
        if abs(b) > 1e-6:
            assert (ba / bb).contains(qa / qb)


def test_division_by_zero_ball_raises():
    with pytest.raises(ZeroDivisionError):
        Ball(1) / Ball(0, "0.5")


def test_pow_and_scaling():
    assert (Ball(3) ** 7).contains(3**7)
    assert (Ball(2) ** -2).contains(mpq(1, 4))
    assert Ball(5).mul_2exp(-3).contains(mpq(5, 8))
    assert Ball(5).mul_2exp(4).contains(80)


def test_elementary_functions_contain_truth():
    random.seed(5)
    cases = [
        (ball_exp, mpmath.exp, None),
        (ball_sin, mpmath.sin, None),
        (ball_cos, mpmath.cos, None),
        (ball_atan, mpmath.atan, None),
        (ball_sinh, mpmath.sinh, None),
        (ball_cosh, mpmath.cosh, None),
        (ball_log, mpmath.log, "pos"),
        (ball_sqrt, mpmath.sqrt, "pos"),
    ]
    for _ in range(150):
        x = random.uniform(-30, 30)
        for bf, mf, dom in cases:
            if dom == "pos" and x <= 0:
                continue
            res = bf(Ball(x))
            ref = mp_ref(x, mf)
            slack = max(1.0, abs(float(res.mid))) * 1e-45
            assert res.widened(slack).contains(ref), (bf.__name__, x)


def test_sin_cos_extrema_handling():
    p = pi_ball()
    assert ball_sin(p).contains_zero()
    assert ball_sin(p.mul_2exp(-1)).contains(1)
    assert ball_cos(p).contains(-1)
    # wide input saturates
    wide = Ball(0, 10)
    s = ball_sin(wide)
    assert s.contains(1) and s.contains(-1)


def test_powr():
    b = ball_powr(Ball(2), Ball("0.5"))
    assert (b * b).widened(1e-50).contains(2)


def test_interval_semantics_widening_only():
    # composing many operations never shrinks below true image
    acc = Ball(1)
    for _ in range(2000):
        acc = acc * Ball("1.000001")
    ref = mpq(1000001, 1000000) ** 2000
    assert acc.contains(ref)
    assert float(acc.rad) < 1e-50


def test_precision_controls_tightness_and_nesting():
    random.seed(42)
    for _ in range(50):
        x = random.uniform(0.1, 20)
        with local_precision(96):
            lo_prec = ball_exp(ball_log(Ball(x)) * Ball("0.3"))
        with local_precision(224):
            hi_prec = ball_exp(ball_log(Ball(x)) * Ball("0.3"))
        # higher precision result is contained in the (slightly inflated)
        # lower precision one: both contain the truth, radii shrink
        assert float(hi_prec.rad) < float(lo_prec.rad)
        assert lo_prec.widened(float(lo_prec.rad)).contains(hi_prec)


def test_cball_mul_div_roundtrip():
    z = CBall(Ball("1.25"), Ball("-0.75"))
    w = CBall(Ball("0.3"), Ball("2.0"))
    prod = z * w
    back = prod / w
    assert back.contains(CBall(Ball(float(z.re.mid)), Ball(float(z.im.mid)))) or back.overlaps(z)


def test_cball_exp_log_sqrt():
    z = CBall(Ball(1), Ball(1))
    w = cball_sqrt(z)
    assert (w * w).overlaps(z)
    lz = cball_log(z)
    assert cball_exp(lz).overlaps(z)
    ref = mpmath.log(mpmath.mpc(1, 1))
    assert lz.re.widened(1e-50).contains(exact_decimal_to_mpq(mpmath.nstr(ref.real, 50)))
    assert lz.im.widened(1e-50).contains(exact_decimal_to_mpq(mpmath.nstr(ref.imag, 50)))


def test_cball_log_branch_cut_rejected():
    with pytest.raises(ValueError):
        cball_log(CBall(Ball(-1), Ball(0)))
    with pytest.raises(ValueError):
        cball_log(CBall(Ball(0, 1), Ball(0, 1)))


def test_midpoint_precision_reround_adds_slack():
    with local_precision(300):
        fine = ball_sqrt(Ball(2))
    # constructing at lower precision must keep containment
    set_precision(128)
    try:
        coarse = Ball(fine.mid, fine.rad)
        assert coarse.contains(fine)
    finally:
        set_precision(192)
