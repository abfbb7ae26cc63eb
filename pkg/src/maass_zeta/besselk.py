"""Fast certified evaluation of K_{ir}(y) over a y-range.

In the variable v = log y the function K(v) := K_{ir}(e^v) satisfies

    K''(v) = (e^{2v} - r^2) K(v),

so from a certified anchor pair (K, dK/dv) at a panel center all Taylor
coefficients follow by the recurrence

    c_{k+2} = ( sum_j q_j c_{k-j} ) / ((k+1)(k+2)),
    q_0 = e^{2 v_c} - r^2,   q_j = e^{2 v_c} 2^j / j!.

Tail bound on |h| <= Hh: let m_k >= |c_k|, A >= sum_j |q_j| Hh^j, and
suppose a window m_k Hh^k <= beta holds for k in [n-J-1, n+1] with
A Hh^2 <= (k+1)(k+2)/2 there, and that the neglected convolution tail
R_J = e^{2 v_c} (2 Hh)^{J+1} e^{2 Hh} / (J+1)! satisfies
R_J Hh^2 G / ((n+1)(n+2)) <= beta/2 with G a global coefficient bound.
Then every later m_k Hh^k stays below beta and

    sum_{k > n+1} m_k Hh^k  <=  (beta A + R_J G) Hh^2 / (n+1).

Panels are uniform width 2^-6 in v; evaluation is an integer Horner with
a per-panel precomputed error constant, so the per-call cost is a few
microseconds while remaining a certified enclosure.
"""

from __future__ import annotations

import math

import gmpy2
from gmpy2 import mpfr, mpq

from .ball import (
    Ball,
    CBall,
    ball_cos,
    ball_exp,
    ball_log,
    ball_sin,
    ball_sinh,
    ball_sqrt,
    cball_exp,
    get_precision,
    local_precision,
    pi_ball,
    _st,
)
from .functions import (
    DomainError,
    bessel_k_dr_bound,
    bessel_k_ir_bound,
    log_gamma,
)
from .fx import ball_to_fx, fx_to_ball, mpfr_to_fx_up

__all__ = ["BesselKTable"]

_LOG2_H = 6  # panels of width 2^-6 in v = log y
_WINDOW_J = 10


def _series_pair(r: Ball, y: Ball, tail_tol_log2: int) -> tuple[Ball, Ball]:
    """(K_{ir}(y), dK/dv at v = log y) by the power series; exact-mid inputs."""
    one_plus_ir = CBall(Ball(1), r)
    pref = cball_exp(CBall(Ball(0), r * ball_log(y.mul_2exp(-1)))) * cball_exp(
        -log_gamma(one_plus_ir)
    )
    q = (y * y).mul_2exp(-2)
    qmag = float(q.magnitude())
    r2 = r * r
    term = CBall(1)
    s = CBall(1)
    s2 = CBall(0)  # sum of 2k * t_k
    k = 0
    while True:
        k += 1
        denom = Ball(k) * (Ball(k * k) + r2)
        term = term * CBall(q / denom) * CBall(Ball(k), -r)
        s = s + term
        s2 = s2 + term * CBall(Ball(2 * k))
        ratio = qmag / (k + 1) ** 2
        if ratio < 0.5 and float(abs(term).upper()) * (2 * k + 4) < 2.0 ** (-tail_tol_log2):
            break
        if k > 200000:
            raise DomainError("K_{ir} series did not converge")
    rb = Ball(q.magnitude()) / Ball((k + 1) * (k + 1))
    geom = rb / (Ball(1) - rb)
    tail = abs(term) * geom
    tail2 = abs(term) * Ball(2 * k + 4) * geom  # covers the extra 2k weight
    s = s.widened(tail.magnitude())
    s2 = s2.widened(tail2.magnitude())
    factor = -(pi_ball() / ball_sinh(pi_ball() * r))
    kval = factor * (pref * s).im
    kdv = factor * (pref * (s.mul_i() * r + s2)).im
    return kval, kdv


class _SmallY:
    """Closed 3-term small-y form K_{ir}(y) = -C Im[e^{i r log(y/2)} W S3]."""

    def __init__(self, r: Ball, y_cap: float):
        self.r = r
        self.y_cap = y_cap
        self.w = cball_exp(-log_gamma(CBall(Ball(1), r)))
        self.w_mag = Ball.raw(abs(self.w).upper(), _st().rad_zero)
        self.factor = -(pi_ball() / ball_sinh(pi_ball() * r))
        self.one_plus_ir = CBall(Ball(1), r)
        self.two_plus_ir = CBall(Ball(2), r)
        self.three_plus_ir = CBall(Ball(3), r)

    def eval(self, y: Ball) -> Ball:
        q = (y * y).mul_2exp(-2)
        d2 = self.one_plus_ir * self.two_plus_ir
        s3 = (
            CBall(1)
            + CBall(q) / self.one_plus_ir
            + CBall(q * q) / (d2 * CBall(2))
            + CBall(q * q * q) / (d2 * self.three_plus_ir * CBall(6))
        )
        # |t_k| <= q^k / (k!)^2 for the omitted k >= 4 terms; the
        # 1/Gamma(1+ir) prefactor amplifies the dropped tail
        qm = Ball(q.magnitude())
        tail = (qm ** 4 / Ball(576)) / (Ball(1) - qm.mul_2exp(-4)) * self.w_mag
        ang = self.r * ball_log(y.mul_2exp(-1))
        phase = CBall(ball_cos(ang), ball_sin(ang))
        out = self.factor * (phase * self.w * s3).im
        out = out.widened((abs(self.factor) * tail).magnitude())
        if self.r.rad != 0:
            out = out.widened((Ball.raw(self.r.rad, _st().rad_zero) * bessel_k_dr_bound(y)).magnitude())
        return out


class _Panel:
    __slots__ = ("coeffs", "err", "pbound", "kbound")

    def __init__(self, coeffs: list[int], err: int, pbound: int, kbound: int):
        self.coeffs = coeffs
        self.err = err
        self.pbound = pbound
        self.kbound = kbound


class BesselKTable:
    """Certified K_{ir}(y) evaluations for y in [y_lo, y_hi].

    abs_tol_log2 sets the absolute enclosure target 2^-abs_tol_log2 for
    the integer fast path; the ball path reports its actual error.
    """

    def __init__(self, r: Ball, y_lo: float, y_hi: float, abs_tol_log2: int, fbits: int | None = None):
        if y_lo <= 0 or y_hi <= y_lo:
            raise ValueError("need 0 < y_lo < y_hi")
        if abs(r).lower() <= 5:
            raise DomainError("panel table supports |r| > 5")
        prec = get_precision()
        self.prec = prec
        self.r = r
        self.fbits = fbits if fbits is not None else prec + 40
        self.abs_tol_log2 = abs_tol_log2
        self.h_log2 = _LOG2_H
        self.i_lo = int(math.floor(math.log(y_lo) * (1 << _LOG2_H))) - 1
        self.i_hi = int(math.ceil(math.log(y_hi) * (1 << _LOG2_H))) + 1
        self.small = _SmallY(r, y_lo)
        self.v_lo_fx = self.i_lo << (self.fbits - _LOG2_H)
        self.v_hi_fx = self.i_hi << (self.fbits - _LOG2_H)
        self._build_panels()

    # -- construction -------------------------------------------------------

    def _build_panels(self):
        r_mid = Ball.raw(self.r.mid, _st().rad_zero)
        rad_r = Ball.raw(self.r.rad, _st().rad_zero)
        F = self.fbits
        half = mpq(1, 2)
        hh = mpq(1, 1 << (_LOG2_H + 1))  # panel half-width
        hh_eff = hh * mpq(1048577, 1048576)  # tiny slack for v rounding
        panels = []
        prec = self.prec
        for i in range(self.i_lo, self.i_hi):
            vc_q = (mpq(i) + half) / (1 << _LOG2_H)
            with local_precision(prec + 64):
                vc = Ball(vc_q)
                y_c = ball_exp(vc)
                boost = int(2.9 * float(y_c.upper()) + 4.6 * float(abs(r_mid).upper())) + 48
                with local_precision(prec + boost):
                    k0, k1 = _series_pair(
                        Ball.raw(r_mid.mid, _st().rad_zero),
                        ball_exp(Ball(vc_q)),
                        self.abs_tol_log2 + 40,
                    )
                coeffs = self._taylor_coeffs(
                    Ball(k0.mid, k0.rad), Ball(k1.mid, k1.rad), vc, r_mid, hh_eff
                )
                panels.append(self._pack_panel(coeffs, vc, rad_r, hh_eff, F))
        self.panels = panels

    def _taylor_coeffs(self, c0: Ball, c1: Ball, vc: Ball, r_mid: Ball, hh: mpq):
        """Interval Taylor coefficients plus the certified tail constant."""
        e2v = ball_exp(vc.mul_2exp(1))
        r2 = r_mid * r_mid
        hh_b = Ball(hh)
        J = _WINDOW_J
        two_hh = hh_b.mul_2exp(1)
        a_bound = e2v * ball_exp(two_hh) + r2
        q_plain = [e2v - r2]
        fct = Ball(1)
        two_b = Ball(2)
        pw2 = Ball(1)
        for j in range(1, J + 1):
            pw2 = pw2 * two_b
            fct = fct * Ball(j)
            q_plain.append(e2v * pw2 / fct)
        beta_target = mpfr(2) ** (-self.abs_tol_log2 - 6)
        coeffs = [c0, c1]
        scaled = [abs(c0).magnitude(), (abs(c1) * hh_b).magnitude()]
        hh_pow = [Ball(1), hh_b]
        n_max = 8 * (self.abs_tol_log2 + 64)
        window_ok_from = None
        k = 0
        while True:
            # c_{k+2} = sum_j q_j c_{k-j} / ((k+1)(k+2)) , j <= min(k, J)
            acc = Ball(0)
            for j in range(0, min(k, J) + 1):
                acc = acc + q_plain[j] * coeffs[k - j]
            c_next = acc / Ball((k + 1) * (k + 2))
            coeffs.append(c_next)
            hh_pow.append(hh_pow[-1] * hh_b)
            scaled.append((abs(c_next) * hh_pow[k + 2]).magnitude())
            k += 1
            n = k  # last filled index is n+1 = k+1
            if k >= J + 2:
                window = scaled[-(J + 3) :]
                if all(w <= beta_target for w in window):
                    window_ok_from = len(coeffs) - 1
                    break
            if len(coeffs) > n_max:
                raise DomainError("panel Taylor series did not settle")
        n_top = len(coeffs) - 2  # == n with window over [n-J-1, n+1]
        # validity conditions of the tail lemma
        a_hh2 = float((a_bound * hh_b * hh_b).upper())
        k_chk = n_top - J - 1
        if 2 * a_hh2 > (k_chk + 1) * (k_chk + 2):
            raise DomainError("panel width too large for the tail bound")
        g_bound = max(float(x) for x in scaled)
        r_j = float(
            (
                e2v
                * (two_hh ** (J + 1))
                / Ball(math.factorial(J + 1))
                * ball_exp(two_hh)
            ).upper()
        )
        hh2 = float((hh_b * hh_b).upper())
        eps_glob = r_j * hh2 * g_bound / ((n_top + 1) * (n_top + 2))
        if eps_glob > 0.5 * float(beta_target):
            raise DomainError("panel tail lemma: global term too large")
        tail = (float(beta_target) * float(a_bound.upper()) + r_j * g_bound) * hh2 / (
            n_top + 1
        )
        return coeffs, tail * 1.0000001

    def _pack_panel(self, coeffs_tail, vc: Ball, rad_r: Ball, hh: mpq, F: int) -> _Panel:
        coeffs, tail = coeffs_tail
        ints = []
        err_q = mpq(int(math.ceil(tail * 2.0**F * 1.0000001)), 1)  # tail, scaled
        hh_pow = mpq(1)
        pbound = mpq(0)
        kbound = mpq(0)
        for k, c in enumerate(coeffs):
            ci, cerr = ball_to_fx(c, F)
            ints.append(ci)
            err_q += mpq(cerr) * hh_pow
            mag = mpq(abs(c).magnitude()) if c.mid != 0 or c.rad != 0 else mpq(0)
            kbound += mag * hh_pow
            if k >= 1:
                pbound += mpq(k) * mag * (hh_pow / hh)
            hh_pow *= hh
        # trim trailing zero-ish coefficients
        while len(ints) > 2 and ints[-1] == 0:
            ints.pop()
        d = len(ints)
        # integer Horner truncation: one floor-shift per level
        err_q += mpq(d + 2)
        # derivative of the dropped tail, dominated by err_q/(2^F) * (d+4)/hh
        pbound += mpq(2 * (d + 4)) * (err_q / (mpq(2) ** F)) / hh
        # derivative-bound widening for the r-width, at the panel's smallest y
        y_lo_panel = math.exp(float(vc.lower()) - float(hh))
        dr = float(rad_r.magnitude()) * math.exp(-y_lo_panel) / y_lo_panel
        err_q += mpq(int(math.ceil(dr * 2.0**F * 1.000001)), 1) + 1
        kb = kbound + err_q / (mpq(2) ** F)
        return _Panel(
            ints,
            int(err_q) + 1,
            mpfr_to_fx_up(gmpy2.mpfr(pbound, 64), F),
            mpfr_to_fx_up(gmpy2.mpfr(kb, 64), F),
        )

    # -- evaluation ---------------------------------------------------------

    def eval_fx(self, v_fx: int, v_err: int) -> tuple[int, int]:
        """(value, error) scaled by 2^fbits for v = log y given in the same scale."""
        F = self.fbits
        i = v_fx >> (F - _LOG2_H)
        if i < self.i_lo or i >= self.i_hi:
            raise DomainError("v outside panel table")
        p = self.panels[i - self.i_lo]
        vc = ((i << 1) + 1) << (F - _LOG2_H - 1)
        h = v_fx - vc
        cs = p.coeffs
        acc = cs[-1]
        for k in range(len(cs) - 2, -1, -1):
            acc = ((acc * h) >> F) + cs[k]
        err = p.err + ((v_err * p.pbound) >> F) + 1
        return acc, err

    def eval_ball(self, y: Ball) -> Ball:
        """General certified evaluation (panel range or the small-y form)."""
        if y.lower() <= 0:
            raise DomainError("need y > 0")
        v = ball_log(y)
        F = self.fbits
        v_fx, v_err = ball_to_fx(v, F)
        if not (self.v_lo_fx <= v_fx < self.v_hi_fx):
            if float(y.upper()) <= math.exp(float(self.i_lo + 1) / (1 << _LOG2_H)):
                return self.small.eval(y)
            raise DomainError(f"y = {y} outside table range")
        val, err = self.eval_fx(v_fx, v_err)
        return fx_to_ball(val, err, F)

    def kbound_fx(self, v_fx: int) -> int:
        i = v_fx >> (self.fbits - _LOG2_H)
        if i < self.i_lo or i >= self.i_hi:
            raise DomainError("v outside panel table")
        return self.panels[i - self.i_lo].kbound
