"""Special function enclosures against independent oracles."""

import random

import mpmath
import pytest
from gmpy2 import mpq

from maass_zeta.ball import Ball, CBall, exact_decimal_to_mpq, pi_ball
from maass_zeta.functions import (
    DomainError,
    PoleError,
    bessel_k_ir,
    bessel_k_ir_bound,
    digamma,
    erfc_ball,
    gamma_r,
    hyp2f1,
    hyp2f1_series,
    log_gamma,
    log_gamma_r_principal,
    real_zeta_ball,
    real_zeta_deriv_ball,
    sinc_ball,
    upper_incomplete_gamma,
)
from maass_zeta.ball import cball_exp

mpmath.mp.dps = 80


def ref(v, digits=60):
    return exact_decimal_to_mpq(mpmath.nstr(v, digits, strip_zeros=False))


def assert_close(ball, value, tol=1e-40):
    slack = max(1.0, abs(float(ball.mid))) * tol
    assert ball.widened(slack).contains(ref(value)), (str(ball), mpmath.nstr(value, 30))


# -- K-Bessel ---------------------------------------------------------------


def test_bessel_k0_value():
    # series oracle value for K_0(1)
    b = bessel_k_ir(Ball(0), Ball(1))
    assert_close(b, mpmath.besselk(0, 1))
    assert str(float(b.mid)).startswith("0.42102443824070")


def test_bessel_large_argument_bound_predicate():
    b = bessel_k_ir(Ball(0), Ball(20))
    cap = mpmath.sqrt(mpmath.pi / 40) * mpmath.exp(-20)
    assert float(b.upper()) < float(cap)


def test_bessel_imaginary_order_vs_quadrature():
    # adaptive quadrature of the cosh-transform integral representation
    r = exact_decimal_to_mpq("9.533695261")
    rm = mpmath.mpf(r.numerator) / mpmath.mpf(r.denominator)
    for y in ("0.05", "0.7", "3.0", "10", "33"):
        ym = mpmath.mpf(y)
        oracle = mpmath.quad(
            lambda t: mpmath.exp(-ym * mpmath.cosh(t)) * mpmath.cos(rm * t),
            [0, 1, 2, 3, 5, 8, 12, 18, 25],
        )
        b = bessel_k_ir(Ball("9.533695261"), Ball(y))
        assert_close(b, oracle, 1e-35)


def test_bessel_bound_predicates_randomized():
    random.seed(9)
    for _ in range(40):
        r = random.uniform(0.2, 17)
        y = random.uniform(0.01, 60)
        b = bessel_k_ir(Ball(r), Ball(y))
        mag = float(abs(b).upper())
        assert mag <= float((mpmath.sqrt(mpmath.pi / (2 * y)) * mpmath.exp(-y)) * (1 + 1e-12))
        assert mag * float(mpmath.cosh(mpmath.pi * r / 2)) <= 4.0 * y ** (-1 / 3.0) * (1 + 1e-12)
        if y <= 2:
            assert mag <= float(mpmath.log(2 / mpmath.mpf(y)) + mpmath.exp(-1)) * (1 + 1e-12)


def test_bessel_wide_inputs_stay_tight():
    b_wide = bessel_k_ir(Ball("9.533695261", "5e-10"), Ball(10))
    b_thin = bessel_k_ir(Ball("9.533695261"), Ball(10))
    assert b_wide.contains(Ball(float(b_thin.mid)))
    # derivative-bound widening keeps the radius near rad_r * e^-y / y
    assert float(b_wide.rad) < 1e-13


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        bessel_k_ir(Ball(1), Ball(-1))
    with pytest.raises(DomainError):
        bessel_k_ir(Ball(1), Ball(0, 1))


# -- gamma family -------------------------------------------------------------


def test_gamma_r_trivial_values():
    assert gamma_r(CBall(1)).re.widened(1e-50).contains(1)
    assert gamma_r(CBall(1)).im.contains_zero()
    assert_close(gamma_r(CBall(2)).re, 1 / mpmath.pi)
    # recurrence-derived: Gamma_R(4) = 1/pi^2
    assert_close(gamma_r(CBall(4)).re, 1 / mpmath.pi**2)


def test_gamma_r_recurrence_random():
    # s Gamma_R(s) = 2 pi Gamma_R(2+s)
    random.seed(2)
    for _ in range(25):
        s = CBall(Ball(random.uniform(0.2, 2.5)), Ball(random.uniform(-40, 40)))
        lhs = s * gamma_r(s)
        rhs = gamma_r(s + CBall(2)) * CBall(pi_ball().mul_2exp(1))
        assert lhs.overlaps(rhs)


def test_gamma_r_pole_rejected():
    with pytest.raises(PoleError):
        gamma_r(CBall(0))
    with pytest.raises(PoleError):
        gamma_r(CBall(-2))


def test_log_gamma_r_principal_examples():
    assert log_gamma_r_principal(CBall(1)).re.widened(1e-50).contains_zero()
    assert_close(log_gamma_r_principal(CBall(2)).re, -mpmath.log(mpmath.pi))
    z = CBall(Ball(1), Ball(10))
    lg = log_gamma_r_principal(z)
    refv = -mpmath.mpc(1, 10) / 2 * mpmath.log(mpmath.pi) + mpmath.loggamma(mpmath.mpc(0.5, 5))
    assert_close(lg.re, refv.real)
    assert_close(lg.im, refv.imag)


def test_exp_log_gamma_contains_gamma_r():
    random.seed(8)
    for _ in range(25):
        s = CBall(Ball(random.uniform(0.05, 3.0)), Ball(random.uniform(-60, 60)))
        a = cball_exp(log_gamma_r_principal(s))
        b = gamma_r(s)
        assert a.overlaps(b)


def test_log_gamma_against_mpmath_principal():
    random.seed(4)
    for _ in range(30):
        x, y = random.uniform(0.05, 4), random.uniform(-90, 90)
        lg = log_gamma(CBall(Ball(x), Ball(y)))
        t = mpmath.loggamma(mpmath.mpc(x, y))
        assert_close(lg.re, t.real)
        assert_close(lg.im, t.imag)
    # negative real part off the cut (principal continuation)
    lg = log_gamma(CBall(Ball(-1.5), Ball(2.5)))
    t = mpmath.loggamma(mpmath.mpc(-1.5, 2.5))
    assert_close(lg.re, t.real)
    assert_close(lg.im, t.imag)


def test_log_gamma_branch_cut_rejected():
    with pytest.raises(DomainError):
        log_gamma(CBall(Ball(-2), Ball(0)))


def test_digamma_vs_mpmath():
    random.seed(6)
    for _ in range(12):
        x, y = random.uniform(0.1, 3), random.uniform(-70, 70)
        d = digamma(CBall(Ball(x), Ball(y)))
        t = mpmath.digamma(mpmath.mpc(x, y))
        assert_close(d.re, t.real, 1e-28)
        assert_close(d.im, t.imag, 1e-28)


# -- 2F1 ----------------------------------------------------------------------


def test_hyp2f1_trivial_and_log2():
    assert hyp2f1(CBall(1), CBall(2), CBall(3), Ball(0)).re.contains(1)
    h = hyp2f1(CBall(1), CBall(1), CBall(2), Ball(-1))
    assert_close(h.re, mpmath.log(2))


def test_hyp2f1_against_mpmath_various_x():
    a = CBall(Ball("0.25"), Ball(6))
    b = CBall(Ball("0.25"), Ball(-6))
    c = CBall(Ball("1.5"))
    for x in ("-0.4", "-1.0", "-2.2", "-8", "-250", "-16000"):
        h = hyp2f1(a, b, c, Ball(x))
        t = mpmath.hyp2f1(mpmath.mpc(0.25, 6), mpmath.mpc(0.25, -6), 1.5, mpmath.mpf(x))
        assert_close(h.re, t.real, 1e-25)
        assert_close(h.im, t.imag, 1e-25)


def test_hyp2f1_series_positive_x_for_decomposition():
    # the two-term Gamma-factor decomposition needs 2F1 at cos^2(theta)
    a = CBall(Ball(0.3), Ball(5))
    b = CBall(Ball(0.4), Ball(5))
    c = CBall(Ball(1), Ball(10))
    h = hyp2f1_series(a, b, c, Ball("0.004"))
    t = mpmath.hyp2f1(
        mpmath.mpc(0.3, 5), mpmath.mpc(0.4, 5), mpmath.mpc(1, 10), mpmath.mpf("0.004")
    )
    assert_close(h.re, t.real)
    assert_close(h.im, t.imag)


def test_hyp2f1_domain_error():
    with pytest.raises(DomainError):
        hyp2f1(CBall(1), CBall(1), CBall(2), Ball("0.9"))


# -- incomplete gamma / erfc / sinc / zeta ------------------------------------


def test_upper_incomplete_gamma_cases():
    assert_close(upper_incomplete_gamma(Ball(1), Ball(1)), mpmath.exp(-1))
    assert_close(
        upper_incomplete_gamma(Ball("0.5"), Ball(1)),
        mpmath.sqrt(mpmath.pi) * mpmath.erfc(1),
    )
    assert_close(
        upper_incomplete_gamma(Ball("0.75"), Ball("2.5")),
        mpmath.gammainc(mpmath.mpf("0.75"), mpmath.mpf("2.5"), mpmath.inf),
    )
    assert_close(
        upper_incomplete_gamma(Ball("0.75"), Ball("0.25")),
        mpmath.gammainc(mpmath.mpf("0.75"), mpmath.mpf("0.25"), mpmath.inf),
    )
    assert_close(upper_incomplete_gamma(Ball(0), Ball("2.5")), mpmath.e1(mpmath.mpf("2.5")))
    with pytest.raises(DomainError):
        upper_incomplete_gamma(Ball(1), Ball(-2))


def test_erfc_values_and_predicates():
    assert erfc_ball(Ball(0)).contains(1)
    assert_close(erfc_ball(Ball(1)), mpmath.erfc(1))
    random.seed(3)
    for _ in range(30):
        x = random.uniform(0, 12)
        e = erfc_ball(Ball(x))
        assert float(e.upper()) <= float(mpmath.exp(-mpq(x) * mpq(x))) * (1 + 1e-12)
        assert float(e.upper()) < 2


def test_sinc():
    assert sinc_ball(Ball(0)).contains(1)
    assert sinc_ball(pi_ball()).contains_zero()
    assert_close(sinc_ball(Ball("2.5")), mpmath.sin(mpmath.mpf("2.5")) / mpmath.mpf("2.5"))


def test_zeta_and_derivative():
    assert_close(real_zeta_ball(Ball("1.390625")), mpmath.zeta(mpmath.mpf("1.390625")))
    zd = real_zeta_deriv_ball(Ball("2.78125"))
    assert_close(zd, mpmath.zeta(mpmath.mpf("2.78125"), derivative=1), 1e-25)
    zd2 = real_zeta_deriv_ball(Ball("1.609375"))
    assert_close(zd2, mpmath.zeta(mpmath.mpf("1.609375"), derivative=1), 1e-20)
