"""Special functions with certified enclosures.

Everything here returns balls whose radius accounts for series truncation,
asymptotic remainders and rounding.  Key remainder sources:

- complex log-gamma: Stirling series with the classical remainder bound
  |R_n(z)| <= |B_{2n}| / ((2n-1)(2n)|z|^{2n-1}) * sec(arg(z)/2)^{2n},
  valid for |arg z| < pi, combined with downward recurrence shifts;
- K_{ir}(y): the imaginary-order power series
  K_{ir}(y) = -pi/sinh(pi r) * Im[(y/2)^{ir} S / Gamma(1+ir)],
  S = sum_k (y^2/4)^k / (k! (1+ir)_k), with a geometric tail bound and a
  cancellation-aware precision boost of about 2y/log 2 + pi r/log 2 bits;
- 2F1: direct series with an explicit majorant tail for |x| < 3/4 and the
  1/x connection formula for x <= -1;
- digamma: central difference of log-gamma with an explicit bound
  |psi''(z)| <= 2/|z|^3 + 1/Re(z)^2 on Re z > 0 for the step error.
"""

from __future__ import annotations

import gmpy2
from gmpy2 import mpfr, mpq

from .ball import (
    Ball,
    CBall,
    _abs_exact,
    _neg_exact,
    ball_atan,
    ball_cos,
    ball_cosh,
    ball_exp,
    ball_hull,
    ball_log,
    ball_max,
    ball_min,
    ball_powr,
    ball_sin,
    ball_sin_cos,
    ball_sinh,
    ball_sqrt,
    cball_arg,
    cball_exp,
    cball_log,
    cball_sqrt,
    euler_ball,
    get_precision,
    local_precision,
    pi_ball,
    _st,
)

__all__ = [
    "bessel_k_ir",
    "bessel_k_ir_bound",
    "gamma_r",
    "log_gamma_r_principal",
    "log_gamma",
    "digamma",
    "psi_r",
    "hyp2f1",
    "hyp2f1_series",
    "upper_incomplete_gamma",
    "erfc_ball",
    "sinc_ball",
    "real_gamma_ball",
    "real_zeta_ball",
    "real_zeta_deriv_ball",
    "PoleError",
    "DomainError",
]


class DomainError(ValueError):
    """Input outside the supported/provable domain."""


class PoleError(DomainError):
    """Enclosure contains (or touches) a pole."""


# -- Bernoulli numbers -------------------------------------------------------

_BERNOULLI: list[mpq] = []


def _bernoulli(n: int) -> mpq:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        if m == 0:
            _BERNOULLI.append(mpq(1))
            continue
        acc = mpq(0)
        binom = mpq(1)  # C(m+1, j) built incrementally
        for j in range(m):
            acc += binom * _BERNOULLI[j]
            binom = binom * (m + 1 - j) / (j + 1)
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


# -- complex log-gamma and friends ------------------------------------------


def _stirling_log_gamma(z: CBall, n_terms: int) -> CBall:
    """Stirling sum plus certified remainder; needs Re z > 0 and |z| large."""
    log_z = cball_log(z)
    two_pi = pi_ball().mul_2exp(1)
    acc = (z - CBall(Ball(mpq(1, 2)))) * log_z - z + CBall(ball_log(two_pi).mul_2exp(-1))
    w = CBall(1) / (z * z)
    zpow = CBall(1) / z  # z^(1-2j) running power
    for j in range(1, n_terms):
        coeff = Ball(_bernoulli(2 * j) / ((2 * j - 1) * (2 * j)))
        acc = acc + CBall(coeff) * zpow
        zpow = zpow * w
    # remainder bound: |B_2n|/((2n-1)2n |z|^{2n-1}) * sec(arg(z)/2)^{2n}
    n = n_terms
    absz = abs(z)
    theta = cball_arg(z)
    cos_half = ball_cos(theta.mul_2exp(-1))
    if cos_half.lower() <= 0:
        raise DomainError("argument too close to the branch cut for Stirling")
    sec_pow = ball_powr(Ball(1) / cos_half, Ball(2 * n))
    b2n = Ball(abs(_bernoulli(2 * n)) / ((2 * n - 1) * (2 * n)))
    rem = (b2n / ball_powr(absz, Ball(2 * n - 1))) * sec_pow
    return acc.widened(rem.magnitude())


def log_gamma(z: CBall, n_terms: int | None = None) -> CBall:
    """Principal-branch log Gamma enclosure (continuous on C minus (-inf,0])."""
    if not isinstance(z, CBall):
        z = CBall(z)
    prec = get_precision()
    if n_terms is None:
        n_terms = max(12, prec // 5)
    z0 = max(10.0, 0.42 * n_terms)
    # shift until Re z >= 1 and |z| >= z0; each step divides by z+k
    log_corr = CBall(0)
    zz = z
    guard = 0
    while float(zz.re.lower()) < 1 or float(abs(zz).lower()) < z0:
        if zz.re.contains_zero() and zz.im.contains_zero():
            raise PoleError(f"log_gamma at enclosure containing 0: {zz}")
        if not zz.re.is_positive() and zz.im.contains_zero():
            raise DomainError(f"log_gamma enclosure touches the branch cut: {zz}")
        log_corr = log_corr + cball_log(zz)
        zz = zz + CBall(1)
        guard += 1
        if guard > 10000:
            raise DomainError("log_gamma shift did not terminate")
    return _stirling_log_gamma(zz, n_terms) - log_corr


def cball_gamma(z: CBall) -> CBall:
    return cball_exp(log_gamma(z))


def log_gamma_r_principal(s: CBall) -> CBall:
    """log of pi^(-s/2) Gamma(s/2) with the principal branch of log Gamma."""
    if not isinstance(s, CBall):
        s = CBall(s)
    half_s = CBall(s.re.mul_2exp(-1), s.im.mul_2exp(-1))
    return log_gamma(half_s) - half_s * CBall(ball_log(pi_ball()))


def gamma_r(s: CBall) -> CBall:
    """pi^(-s/2) Gamma(s/2); rejects enclosures touching a pole."""
    if not isinstance(s, CBall):
        s = CBall(s)
    if s.im.contains_zero():
        # poles of Gamma(s/2) at s = 0, -2, -4, ...
        hi = s.re.upper()
        if hi >= s.re.lower() and s.re.lower() <= 0.5:
            import math

            k0 = int(math.floor(float(s.re.lower()) / 2.0)) - 1
            k1 = int(math.ceil(float(s.re.upper()) / 2.0)) + 1
            for k in range(k0, k1 + 1):
                if k <= 0 and s.re.contains(2 * k):
                    raise PoleError(f"gamma_r pole at s = {2 * k} inside {s}")
    if s.re.is_positive() or not s.im.contains_zero():
        return cball_exp(log_gamma_r_principal(s))
    # real non-positive, off-pole: use the recurrence towards Re > 0
    # s Gamma_R(s) = 2 pi Gamma_R(s + 2)
    shifted = gamma_r(s + CBall(2))
    return shifted * CBall(pi_ball().mul_2exp(1)) / s


def digamma(z: CBall) -> CBall:
    """Digamma via central differences of log_gamma at boosted precision.

    Step error uses |psi''(w)| <= 2/|w|^3 + 1/Re(w)^2 for Re w >= 1,
    after shifting with psi(z) = psi(z+m) - sum 1/(z+k).
    """
    if not isinstance(z, CBall):
        z = CBall(z)
    corr = CBall(0)
    zz = z
    guard = 0
    while float(zz.re.lower()) < 2:
        if zz.contains_zero():
            raise PoleError(f"digamma at enclosure containing 0: {zz}")
        if not zz.re.is_positive() and zz.im.contains_zero():
            raise DomainError(f"digamma enclosure touches the branch cut: {zz}")
        corr = corr + CBall(1) / zz
        zz = zz + CBall(1)
        guard += 1
        if guard > 10000:
            raise DomainError("digamma shift did not terminate")
    prec = get_precision()
    hbits = max(24, prec // 4)
    with local_precision(prec + 2 * hbits + 16):
        zb = CBall(Ball.raw(zz.re.mid, zz.re.rad), Ball.raw(zz.im.mid, zz.im.rad))
        h = Ball(1).mul_2exp(-hbits)
        f_plus = log_gamma(zb + CBall(h))
        f_minus = log_gamma(zb - CBall(h))
        diff = f_plus - f_minus
        deriv = CBall(
            diff.re.mul_2exp(hbits - 1),
            diff.im.mul_2exp(hbits - 1),
        )
        # |psi''| bound on the segment [z-h, z+h]
        absz = abs(zb)
        lo_abs = ball_max(absz - h.mul_2exp(1), Ball(1))
        re_lo = ball_max(zb.re - h.mul_2exp(1), Ball(1))
        psi2 = Ball(2) / (lo_abs * lo_abs * lo_abs) + Ball(1) / (re_lo * re_lo)
        err = (h * h * psi2) / Ball(6)
        deriv = deriv.widened(err.magnitude())
    out = CBall(
        Ball(deriv.re.mid, deriv.re.rad), Ball(deriv.im.mid, deriv.im.rad)
    )  # re-round to working precision
    return out - corr


def psi_r(s: CBall) -> CBall:
    """Logarithmic derivative of pi^(-s/2) Gamma(s/2)."""
    if not isinstance(s, CBall):
        s = CBall(s)
    half = CBall(s.re.mul_2exp(-1), s.im.mul_2exp(-1))
    out = digamma(half) - CBall(ball_log(pi_ball()))
    return CBall(out.re.mul_2exp(-1), out.im.mul_2exp(-1))


# -- K-Bessel with imaginary order -------------------------------------------


def bessel_k_ir_bound(r: Ball, y: Ball) -> Ball:
    """A-priori bound for |K_{ir}(y)|: min of the three standard estimates."""
    st = _st()
    y_lo = y.lower()
    if y_lo <= 0:
        raise DomainError("bessel bound needs y > 0")
    cands = []
    # sqrt(pi/(2y)) e^{-y}, valid for all y > 0
    cands.append(ball_sqrt(pi_ball() / y.mul_2exp(1)) * ball_exp(-y))
    # 4 y^(-1/3) / cosh(pi r / 2)
    sech = Ball(1) / ball_cosh(pi_ball() * r.mul_2exp(-1))
    cands.append(Ball(4) * ball_powr(y, Ball(mpq(-1, 3))) * sech)
    # log(2/y) + 1/e for y <= 2
    if y.upper() <= 2:
        cands.append(ball_log(Ball(2) / y) + ball_exp(Ball(-1)))
    out = cands[0]
    for c in cands[1:]:
        out = ball_min(out, c)
    return Ball.from_endpoints(mpfr(0), out.upper())


def _bessel_k0_series(y: Ball, tail_tol_log2: int) -> Ball:
    """K_0(y) by the classical log series; y modest."""
    # K_0 = -(log(y/2)+gamma) I_0(y) + sum_{k>=1} (y^2/4)^k / (k!)^2 H_k
    q = (y * y).mul_2exp(-2)
    i0 = Ball(1)
    term = Ball(1)
    s2 = Ball(0)
    h = Ball(0)
    k = 0
    qmag = float(q.magnitude())
    while True:
        k += 1
        term = term * q / Ball(k * k)
        h = h + Ball(mpq(1, k))
        i0 = i0 + term
        s2 = s2 + term * h
        ratio = qmag / ((k + 1) * (k + 1))
        if ratio < 0.5 and float(term.magnitude()) * (1 + float(h.upper())) < 2.0 ** (
            -tail_tol_log2
        ):
            break
        if k > 100000:
            raise DomainError("K_0 series did not converge")
    # positive-term tails; term ratios are below rb < 1 from here on, and the
    # harmonic factor grows slower than the terms decay
    rb = Ball(q.magnitude()) / Ball((k + 1) * (k + 1))
    tail = abs(term) * (Ball(1) + h + Ball(1)) * rb / (Ball(1) - rb) * Ball(2)
    i0 = i0.widened(tail.magnitude())
    s2 = s2.widened(tail.magnitude())
    return -(ball_log(y.mul_2exp(-1)) + euler_ball()) * i0 + s2


def bessel_k_dr_bound(y: Ball) -> Ball:
    """sup_r |d/dr K_{ir}(y)| as a computable bound.

    From cosh t >= 1 + t^2/2 the integral int t e^{-y cosh t} dt is at
    most e^{-y}/y; for small y, splitting at T = log(2/y) and using
    cosh t >= e^t/2 gives the alternative T^2/2 + T/e + 2/e.
    """
    y_lo = Ball.raw(y.lower(), _st().rad_zero)
    b1 = ball_exp(-y_lo) / y_lo
    if y_lo.upper() < 2:
        t_split = ball_log(Ball(2) / y_lo)
        inv_e = ball_exp(Ball(-1))
        b2 = (t_split * t_split).mul_2exp(-1) + t_split * inv_e + inv_e.mul_2exp(1)
        return ball_min(b1, b2)
    return b1


def bessel_k_dy_bound(y: Ball) -> Ball:
    """sup_r |d/dy K_{ir}(y)| via int cosh(t) e^{-y cosh t} dt.

    With x e^{-x d} <= 1/(e d), splitting off e^{-(y-d) cosh t} gives
    |dK/dy| <= (1/(e d)) * K_0(y - d) for any 0 < d < y.
    """
    y_lo = Ball.raw(y.lower(), _st().rad_zero)
    d = ball_min(y_lo.mul_2exp(-1), Ball(mpq(1, 2)))
    rest = y_lo - d
    k0_bound = ball_sqrt(pi_ball() / rest.mul_2exp(1)) * ball_exp(-rest)
    if rest.upper() <= 2:
        k0_bound = ball_min(k0_bound, ball_log(Ball(2) / rest) + ball_exp(Ball(-1)))
    return k0_bound / (d * ball_exp(Ball(1)))


def bessel_k_ir(r: Ball, y: Ball) -> Ball:
    """Enclosure of K_{ir}(y) for real r and y > 0 (real-valued).

    The imaginary-order power series is evaluated at the exact midpoints
    with a precision boost covering the exp(2y)/sinh(pi r) cancellation;
    input widths are folded back in through the certified derivative
    bounds above (naive interval propagation through the series would
    amplify them by exp(y)).  Falls back to the a-priori bound ball when
    the series would need an unreasonable working precision.
    """
    if not isinstance(r, Ball):
        r = Ball(r)
    if not isinstance(y, Ball):
        y = Ball(y)
    if y.lower() <= 0:
        raise DomainError(f"bessel_k_ir needs y > 0, got {y}")
    bound = bessel_k_ir_bound(r, y)
    prec = get_precision()
    y_hi = float(y.upper())
    r_hi = float(abs(r).upper())
    boost = int(2.9 * y_hi + 4.6 * r_hi) + 48
    if boost > 40000:
        return Ball.from_endpoints(_neg_exact(bound.upper()), bound.upper())
    if r.is_exact() and r.mid == 0:
        with local_precision(prec + boost):
            yb = Ball.raw(y.mid, _st().rad_zero)
            out = _bessel_k0_series(yb, prec + 16)
        out = Ball(out.mid, out.rad)
    elif abs(r).lower() > 0.05:
        with local_precision(prec + boost):
            rb = Ball.raw(r.mid, _st().rad_zero)
            yb = Ball.raw(y.mid, _st().rad_zero)
            out = _bessel_k_ir_series(rb, yb, prec + 16)
        out = Ball(out.mid, out.rad)
    else:
        # narrow band around r = 0 not supported by either series
        return Ball.from_endpoints(_neg_exact(bound.upper()), bound.upper())
    # fold the input widths back in via derivative bounds
    if r.rad != 0 or y.rad != 0:
        widen = Ball(0)
        if r.rad != 0:
            widen = widen + Ball.raw(r.rad, _st().rad_zero) * bessel_k_dr_bound(y)
        if y.rad != 0:
            widen = widen + Ball.raw(y.rad, _st().rad_zero) * bessel_k_dy_bound(y)
        out = out.widened(widen.magnitude())
    # clip with the a-priori bound (also certifies the bound predicates)
    bound_hi = bound.upper()
    lo = max(out.lower(), _neg_exact(bound_hi))
    hi = min(out.upper(), bound_hi)
    if lo > hi:
        raise AssertionError("bessel enclosure inconsistent with a-priori bound")
    return Ball.from_endpoints(lo, hi)


def _bessel_k_ir_series(r: Ball, y: Ball, tail_tol_log2: int) -> Ball:
    """Power-series evaluation at boosted working precision."""
    # prefactor (y/2)^{ir} / Gamma(1+ir)
    one_plus_ir = CBall(Ball(1), r)
    pref = cball_exp(CBall(Ball(0), r * ball_log(y.mul_2exp(-1)))) * cball_exp(
        -log_gamma(one_plus_ir)
    )
    q = (y * y).mul_2exp(-2)
    qmag = float(q.magnitude())
    r2 = r * r
    term = CBall(1)
    acc = CBall(1)
    k = 0
    while True:
        k += 1
        # term *= q / (k (k + ir)) = q (k - ir) / (k ((k)^2 + r^2))
        denom = Ball(k) * (Ball(k * k) + r2)
        term = term * CBall(q / denom) * CBall(Ball(k), -r)
        acc = acc + term
        ratio = qmag / (k + 1) ** 2
        if ratio < 0.5 and float(abs(term).upper()) < 2.0 ** (-tail_tol_log2):
            break
        if k > 200000:
            raise DomainError("K_{ir} series did not converge")
    rb = Ball(q.magnitude()) / Ball((k + 1) * (k + 1))
    tail = abs(term) * rb / (Ball(1) - rb)
    acc = acc.widened(tail.magnitude())
    total = pref * acc
    # K = -pi/sinh(pi r) * Im(total); the symmetric formula keeps r-sign out
    val = -(pi_ball() / ball_sinh(pi_ball() * r)) * total.im
    return val


# -- Gauss hypergeometric ----------------------------------------------------


def hyp2f1_series(a: CBall, b: CBall, c: CBall, x: Ball) -> CBall:
    """Direct series for |x| < 3/4 with an explicit majorant tail."""
    if float(abs(x).upper()) >= 0.75:
        raise DomainError("series restricted to |x| < 3/4")
    term = CBall(1)
    acc = CBall(1)
    amag = float(abs(a).upper())
    bmag = float(abs(b).upper())
    cmag = float(abs(c).upper())
    xmag = float(abs(x).upper())
    prec = get_precision()
    tol = 2.0 ** (-prec - 16)
    k = 0
    while True:
        ck = c + CBall(k)
        if ck.contains_zero():
            raise PoleError("2F1 parameter c hits a non-positive integer")
        term = term * (a + CBall(k)) * (b + CBall(k)) * CBall(x / Ball(k + 1)) / ck
        acc = acc + term
        k += 1
        j = float(k + 1)
        if j > cmag + 1:
            rho_b = (
                Ball(abs(x).magnitude())
                * (Ball(1) + Ball(amag + 1.0) / Ball(float(j)))
                * (Ball(1) + Ball(bmag + 1.0) / Ball(float(j)))
                / (Ball(1) - Ball(cmag) / Ball(float(j)))
            )
            rho = float(rho_b.upper())
            if rho < 0.9 and float(abs(term).upper()) * rho / (1 - rho) < tol * max(
                1.0, float(abs(acc).upper())
            ):
                tail = abs(term) * rho_b / (Ball(1) - rho_b)
                return acc.widened(tail.magnitude())
        if k > 100000:
            raise DomainError("2F1 series did not converge")


def hyp2f1(a: CBall, b: CBall, c: CBall, x: Ball) -> CBall:
    """2F1(a,b;c;x) for real x < 3/4.

    |x| < 3/4: direct series.  -2.9 <= x: the x/(x-1) transformation
    (works for any a, b).  Further left: the 1/x connection formula,
    which needs a - b off the integers (true in every production use:
    a - b = i r with r > 5) and c - a, c - b, a, b off the poles.
    """
    if not isinstance(x, Ball):
        x = Ball(x)
    xmag_hi = x.upper()
    if float(abs(x).upper()) < 0.75:
        return hyp2f1_series(a, b, c, x)
    if xmag_hi > -1:
        raise DomainError("hyp2f1 supports |x| < 3/4 or x <= -1")
    if x.lower() >= -2.9:
        # 2F1(a,b;c;x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1))
        u = x / (x - Ball(1))
        pref = cball_exp(-a * CBall(ball_log(Ball(1) - x)))
        return pref * hyp2f1_series(a, c - b, c, u)
    # 1/x connection:
    # 2F1(a,b;c;x) = G(c)G(b-a)/(G(b)G(c-a)) (-x)^{-a} 2F1(a,a-c+1;a-b+1;1/x)
    #             + G(c)G(a-b)/(G(a)G(c-b)) (-x)^{-b} 2F1(b,b-c+1;b-a+1;1/x)
    inv = Ball(1) / x
    neg_x = -x
    log_negx = ball_log(neg_x)
    lg_c = log_gamma(c)
    term1 = (
        cball_exp(lg_c + log_gamma(b - a) - log_gamma(b) - log_gamma(c - a) - a * CBall(log_negx))
        * hyp2f1_series(a, a - c + CBall(1), a - b + CBall(1), inv)
    )
    term2 = (
        cball_exp(lg_c + log_gamma(a - b) - log_gamma(a) - log_gamma(c - b) - b * CBall(log_negx))
        * hyp2f1_series(b, b - c + CBall(1), b - a + CBall(1), inv)
    )
    return term1 + term2


# -- incomplete gamma, erfc, sinc, zeta --------------------------------------


def _mpfr_pair(fn_dn, fn_up, *args_pairs):
    lo = fn_dn(*[p[0] for p in args_pairs])
    hi = fn_up(*[p[1] for p in args_pairs])
    return Ball.from_endpoints(lo, hi)


def upper_incomplete_gamma(s: Ball, x: Ball) -> Ball:
    """Gamma(s, x) = int_x^inf u^{s-1} e^{-u} du for x > 0."""
    if not isinstance(s, Ball):
        s = Ball(s)
    if not isinstance(x, Ball):
        x = Ball(x)
    st = _st()
    if x.lower() <= 0:
        raise DomainError(f"upper_incomplete_gamma needs x > 0, got {x}")
    if s.is_exact() and s.mid == 0:
        # E_1; decreasing in x
        return Ball.from_endpoints(
            st.dn.gamma_inc(mpfr(0), x.upper()), st.up.gamma_inc(mpfr(0), x.lower())
        )
    if x.lower() >= 1:
        # increasing in s (log u >= 0 on the tail), decreasing in x
        return Ball.from_endpoints(
            st.dn.gamma_inc(s.lower(), x.upper()), st.up.gamma_inc(s.upper(), x.lower())
        )
    if s.lower() > 0.05:
        # Gamma(s,x) = Gamma(s) - x^s sum_k (-x)^k / (k! (s+k))
        acc = Ball(0)
        term = Ball(1)  # (-x)^k / k!
        k = 0
        prec = get_precision()
        tol = 2.0 ** (-prec - 8)
        while True:
            acc = acc + term / (s + Ball(k))
            term = term * (-x) / Ball(k + 1)
            k += 1
            ratio = float(abs(x).upper()) / (k + 1)
            if ratio < 0.5 and float(abs(term).upper()) < tol * float(s.lower()):
                rb = Ball(abs(x).magnitude()) / Ball(k + 1)
                tail = abs(term) / (Ball(1) - rb) / s
                acc = acc.widened(tail.magnitude())
                break
            if k > 10000:
                raise DomainError("incomplete gamma series did not converge")
        return real_gamma_ball(s) - ball_powr(x, s) * acc
    raise DomainError("upper_incomplete_gamma: unsupported (s, x) region")


def erfc_ball(x: Ball) -> Ball:
    if not isinstance(x, Ball):
        x = Ball(x)
    st = _st()
    return Ball.from_endpoints(st.dn.erfc(x.upper()), st.up.erfc(x.lower()))


def sinc_ball(x: Ball) -> Ball:
    """sin(x)/x with sinc(0) = 1."""
    if not isinstance(x, Ball):
        x = Ball(x)
    if not x.contains_zero():
        return ball_sin(x) / x
    # alternating series sum (-1)^k x^{2k} / (2k+1)!
    x2 = x * x
    term = Ball(1)
    acc = Ball(1)
    k = 0
    prec = get_precision()
    while True:
        k += 1
        term = term * x2 / Ball((2 * k) * (2 * k + 1))
        acc = acc + (term if k % 2 == 0 else -term)
        if float(abs(term).upper()) < 2.0 ** (-prec - 8) and float(x2.magnitude()) < (
            (2 * k + 2) * (2 * k + 3)
        ):
            return acc.widened(abs(term).magnitude())
        if k > 10000:
            raise DomainError("sinc series did not converge")


_GAMMA_MIN_LO = "1.4616321449683623"
_GAMMA_MIN_HI = "1.4616321449683624"


def real_gamma_ball(x: Ball) -> Ball:
    """Gamma(x) for x > 0, handling the interior minimum rigorously."""
    if not isinstance(x, Ball):
        x = Ball(x)
    st = _st()
    if x.lower() <= 0:
        raise DomainError("real_gamma_ball needs x > 0")
    lo, hi = x.lower(), x.upper()
    xm_lo = mpfr(_GAMMA_MIN_LO, 64)
    xm_hi = mpfr(_GAMMA_MIN_HI, 64)
    top = max(st.up.gamma(lo), st.up.gamma(hi))
    if hi <= xm_lo:  # decreasing region
        bot = st.dn.gamma(hi)
    elif lo >= xm_hi:  # increasing region
        bot = st.dn.gamma(lo)
    else:
        bot = st.dn.gamma(xm_lo)
        bot = min(bot, st.dn.gamma(xm_hi))
    return Ball.from_endpoints(bot, top)


def real_zeta_ball(s: Ball) -> Ball:
    """zeta(s) for real s > 1 (monotone decreasing there)."""
    if not isinstance(s, Ball):
        s = Ball(s)
    st = _st()
    if s.lower() <= 1:
        raise DomainError("real_zeta_ball needs s > 1")
    return Ball.from_endpoints(st.dn.zeta(s.upper()), st.up.zeta(s.lower()))


def real_zeta_deriv_ball(s: Ball, rho: float = 0.125) -> Ball:
    """zeta'(s) for real s > 1 + 2*rho via a certified central difference.

    |zeta'''| on the radius-rho disk is bounded through Cauchy's estimate
    with M = zeta(s_lo - rho) (the maximum of |zeta| on the disk).
    """
    if not isinstance(s, Ball):
        s = Ball(s)
    if float(s.lower()) - 2 * rho <= 1:
        raise DomainError("need s > 1 + 2 rho")
    prec = get_precision()
    hbits = max(24, prec // 4)
    with local_precision(prec + 2 * hbits + 16):
        sb = Ball.raw(s.mid, s.rad)
        h = Ball(1).mul_2exp(-hbits)
        f_plus = real_zeta_ball(sb + h)
        f_minus = real_zeta_ball(sb - h)
        deriv = (f_plus - f_minus).mul_2exp(hbits - 1)
        m_ball = real_zeta_ball(Ball(float(s.lower()) - rho))
        err = (
            h * h * m_ball / (Ball(rho) - h.mul_2exp(1)) ** 3
        )
        deriv = deriv.widened(err.magnitude())
    return Ball(deriv.mid, deriv.rad)
