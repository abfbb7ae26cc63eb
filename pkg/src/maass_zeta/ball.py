"""Ball arithmetic over MPFR with outward-rounded radii.

A ``Ball`` is a pair (mid, rad) of MPFR numbers certifying that the exact
quantity lies in [mid - rad, mid + rad].  Midpoints are computed at the
current working precision with round-to-nearest; every inexact operation
adds |mid| * 2^(1-prec) to the radius, which dominates the rounding error
of a correctly rounded MPFR operation.  Radii are kept at a fixed low
precision and always rounded upward, so composed operations only widen.

``CBall`` is a rectangular complex enclosure (one Ball per component).

Precision is thread-local (see ``set_precision``); changing it between
operations affects tightness of future results, never their validity.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Union

import gmpy2
from gmpy2 import mpfr, mpq

__all__ = [
    "Ball",
    "CBall",
    "set_precision",
    "get_precision",
    "local_precision",
    "pi_ball",
    "log2_ball",
    "euler_ball",
    "ball_from_decimal",
    "exact_decimal_to_mpq",
]

_RAD_PREC = 32

BallLike = Union["Ball", int, float, str, Fraction, mpfr, mpq]


def _const_dir(ctx, name: str):
    fn = getattr(ctx, name, None)
    if fn is not None:
        return fn()
    with gmpy2.local_context(ctx):
        return getattr(gmpy2, name)()


class _PrecState:
    """Cached gmpy2 contexts for one working precision."""

    __slots__ = ("prec", "near", "up", "dn", "rup", "rdn", "eps1", "rad_zero")

    def __init__(self, prec: int):
        if prec < 16 or prec > 100000:
            raise ValueError(f"unreasonable precision {prec}")
        self.prec = prec
        self.near = gmpy2.context(precision=prec, round=gmpy2.RoundToNearest)
        self.up = gmpy2.context(precision=prec, round=gmpy2.RoundUp)
        self.dn = gmpy2.context(precision=prec, round=gmpy2.RoundDown)
        self.rup = gmpy2.context(precision=_RAD_PREC, round=gmpy2.RoundUp)
        self.rdn = gmpy2.context(precision=_RAD_PREC, round=gmpy2.RoundDown)
        # relative slack dominating one round-to-nearest error at this precision
        self.eps1 = mpfr(2, _RAD_PREC) ** (1 - prec)
        self.rad_zero = mpfr(0, _RAD_PREC)


class _Local(threading.local):
    def __init__(self):
        self.state = _PrecState(192)


_LOCAL = _Local()


def _st() -> _PrecState:
    return _LOCAL.state


def set_precision(prec: int) -> None:
    """Set the working precision (bits) for subsequently created balls."""
    if _LOCAL.state.prec != prec:
        _LOCAL.state = _PrecState(prec)


def get_precision() -> int:
    return _LOCAL.state.prec


@contextmanager
def local_precision(prec: int):
    """Temporarily switch working precision within a ``with`` block."""
    old = _LOCAL.state
    try:
        set_precision(prec)
        yield
    finally:
        _LOCAL.state = old


def exact_decimal_to_mpq(text: str) -> mpq:
    """Parse a decimal string (optionally signed, with exponent) exactly."""
    s = text.strip().lower()
    if not s:
        raise ValueError("empty number")
    sign = 1
    if s[0] in "+-":
        if s[0] == "-":
            sign = -1
        s = s[1:]
    if "e" in s:
        mant, _, exp_s = s.partition("e")
        exp = int(exp_s)
    else:
        mant, exp = s, 0
    if "." in mant:
        ip, _, fp = mant.partition(".")
        digits = (ip + fp) or "0"
        exp -= len(fp)
    else:
        digits = mant
    if not digits.isdigit():
        raise ValueError(f"bad decimal literal {text!r}")
    q = mpq(int(digits))
    if exp >= 0:
        q = q * (mpq(10) ** exp)
    elif q:
        q = q / (mpq(10) ** (-exp))
    return sign * q


def _to_mpq(x: mpfr) -> mpq:
    if not gmpy2.is_finite(x):
        raise ValueError("non-finite value")
    return mpq(x)


def _as_mpq(x) -> mpq:
    if isinstance(x, mpq):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, mpfr):
        return _to_mpq(x)
    if isinstance(x, float):
        fr = Fraction(x)
        return mpq(fr.numerator, fr.denominator)
    if isinstance(x, str):
        return exact_decimal_to_mpq(x)
    raise TypeError(f"cannot interpret {type(x)} as rational")


def _rad_from_mpq(q: mpq) -> mpfr:
    if q < 0:
        raise ValueError("negative radius")
    st = _st()
    if q == 0:
        return st.rad_zero
    # round-to-nearest conversion, then an upward relative bump covering it
    r0 = gmpy2.mpfr(q, _RAD_PREC)
    return st.rup.fma(r0, _ONE_ULP32, r0)


_ONE_ULP32 = mpfr(2, 8) ** (-30)


def _mpfr_dir(q, ctx) -> mpfr:
    """Convert an exact rational with the directed rounding of ctx."""
    with gmpy2.local_context(ctx):
        return gmpy2.mpfr(q)


def _neg_exact(x: mpfr) -> mpfr:
    st = _st()
    if x.precision <= st.prec:
        return st.near.sub(_MPFR_ZERO, x)
    ctx = gmpy2.context(precision=x.precision)
    return ctx.sub(_MPFR_ZERO, x)


def _abs_exact(x: mpfr) -> mpfr:
    return _neg_exact(x) if x < 0 else x


_MPFR_ZERO = mpfr(0)


def _abs_rad(x) -> mpfr:
    st = _st()
    if isinstance(x, mpfr):
        v = st.rup.add(x, mpfr(0, _RAD_PREC))
    elif isinstance(x, Ball):
        v = x.magnitude()
        v = st.rup.add(v, mpfr(0, _RAD_PREC))
    else:
        v = _rad_from_mpq(_as_mpq(x))
    if v < 0:
        raise ValueError("negative radius")
    return v


class Ball:
    """Interval [mid - rad, mid + rad] with certified containment."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid=0, rad=None, _raw: bool = False):
        st = _st()
        self.prec = st.prec
        if _raw:
            self.mid = mid
            self.rad = rad if rad is not None else st.rad_zero
            return
        if isinstance(mid, Ball):
            m, r = mid.mid, mid.rad
        elif isinstance(mid, mpfr):
            if mid.precision <= st.prec:
                m, r = mid, st.rad_zero
            else:
                m = st.near.add(mid, mpfr(0))
                r = st.rup.mul(st.rup.abs(m), st.eps1)
        elif isinstance(mid, bool):
            raise TypeError("cannot build Ball from bool")
        elif isinstance(mid, int):
            m = gmpy2.mpfr(mid, st.prec)
            r = _rad_from_mpq(abs(mpq(mid) - _to_mpq(m)))
        elif isinstance(mid, float):
            m = gmpy2.mpfr(mid, st.prec)  # exact: prec >= 53
            r = st.rad_zero
        elif isinstance(mid, (str, Fraction, mpq)):
            q = _as_mpq(mid)
            m = gmpy2.mpfr(q, st.prec)
            r = _rad_from_mpq(abs(q - _to_mpq(m)))
        else:
            raise TypeError(f"cannot build Ball from {type(mid)}")
        if rad is not None:
            r = st.rup.add(r, _abs_rad(rad))
        self.mid = m
        self.rad = r

    # -- constructors ------------------------------------------------------

    @staticmethod
    def raw(mid: mpfr, rad: mpfr) -> "Ball":
        return Ball(mid, rad, _raw=True)

    @staticmethod
    def zero() -> "Ball":
        return Ball.raw(mpfr(0), _st().rad_zero)

    @staticmethod
    def from_endpoints(lo, hi) -> "Ball":
        st = _st()
        if not isinstance(lo, mpfr):
            lo = _mpfr_dir(_as_mpq(lo), st.dn)
        if not isinstance(hi, mpfr):
            hi = _mpfr_dir(_as_mpq(hi), st.up)
        if lo > hi:
            raise ValueError(f"from_endpoints: lo {lo} > hi {hi}")
        m = st.near.div(st.near.add(lo, hi), mpfr(2))
        r1 = st.rup.sub(hi, m)
        r2 = st.rup.sub(m, lo)
        return Ball.raw(m, max(r1, r2))

    # -- views -------------------------------------------------------------

    def lower(self) -> mpfr:
        return _st().dn.sub(self.mid, self.rad)

    def upper(self) -> mpfr:
        return _st().up.add(self.mid, self.rad)

    @property
    def midpoint(self) -> mpfr:
        return self.mid

    @property
    def radius(self) -> mpfr:
        return self.rad

    def magnitude(self) -> mpfr:
        """Upper bound for |x| over the ball."""
        return _st().up.add(_abs_exact(self.mid), self.rad)

    def mignitude(self) -> mpfr:
        """Lower bound for |x| over the ball (0 if the ball straddles 0)."""
        lo = _st().dn.sub(_abs_exact(self.mid), self.rad)
        return lo if lo > 0 else mpfr(0)

    def contains_zero(self) -> bool:
        return -self.rad <= self.mid <= self.rad

    def contains(self, x) -> bool:
        """Exact containment test (rational arithmetic, no rounding)."""
        mid_q, rad_q = _to_mpq(self.mid), _to_mpq(self.rad)
        if isinstance(x, Ball):
            xm, xr = _to_mpq(x.mid), _to_mpq(x.rad)
            return mid_q - rad_q <= xm - xr and xm + xr <= mid_q + rad_q
        q = _as_mpq(x)
        return mid_q - rad_q <= q <= mid_q + rad_q

    def overlaps(self, other: "Ball") -> bool:
        m1, r1 = _to_mpq(self.mid), _to_mpq(self.rad)
        m2, r2 = _to_mpq(other.mid), _to_mpq(other.rad)
        return abs(m1 - m2) <= r1 + r2

    def is_positive(self) -> bool:
        return self.lower() > 0

    def is_negative(self) -> bool:
        return self.upper() < 0

    def is_exact(self) -> bool:
        return self.rad == 0

    def is_finite(self) -> bool:
        return bool(gmpy2.is_finite(self.mid)) and bool(gmpy2.is_finite(self.rad))

    def __repr__(self):
        return f"Ball({self.mid!r} +/- {self.rad!r})"

    def __str__(self):
        return f"[{self.mid} +/- {self.rad}]"

    def __float__(self):
        return float(self.mid)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return Ball.raw(_neg_exact(self.mid), self.rad)

    def __abs__(self):
        st = _st()
        if not self.contains_zero():
            return Ball.raw(_abs_exact(self.mid), self.rad)
        hi = st.up.add(_abs_exact(self.mid), self.rad)
        return Ball.from_endpoints(mpfr(0), hi)

    def __add__(self, other):
        st = _st()
        o = other if isinstance(other, Ball) else Ball(other)
        m = st.near.add(self.mid, o.mid)
        r = st.rup.add(st.rup.add(self.rad, o.rad), st.rup.mul(st.rup.abs(m), st.eps1))
        return Ball.raw(m, r)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, Ball) else Ball(other)
        st = _st()
        m = st.near.sub(self.mid, o.mid)
        r = st.rup.add(st.rup.add(self.rad, o.rad), st.rup.mul(st.rup.abs(m), st.eps1))
        return Ball.raw(m, r)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        st = _st()
        o = other if isinstance(other, Ball) else Ball(other)
        m = st.near.mul(self.mid, o.mid)
        r = st.rup.fma(
            st.rup.abs(self.mid),
            o.rad,
            st.rup.fma(st.rup.abs(o.mid), self.rad, st.rup.mul(self.rad, o.rad)),
        )
        r = st.rup.fma(st.rup.abs(m), st.eps1, r)
        return Ball.raw(m, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        st = _st()
        o = other if isinstance(other, Ball) else Ball(other)
        bmag_lo = st.rdn.sub(st.rdn.abs(o.mid), o.rad)
        if bmag_lo <= 0:
            raise ZeroDivisionError(f"division by ball containing zero: {o}")
        m = st.near.div(self.mid, o.mid)
        m_abs = st.rup.abs(m)
        m_up = st.rup.fma(m_abs, st.eps1, m_abs)
        num = st.rup.fma(m_up, o.rad, self.rad)
        r = st.rup.div(num, bmag_lo)
        r = st.rup.fma(m_abs, st.eps1, r)
        return Ball.raw(m, r)

    def __rtruediv__(self, other):
        return Ball(other).__truediv__(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("use ball_powr for non-integer exponents")
        if k < 0:
            return Ball(1) / self.__pow__(-k)
        result = Ball(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_2exp(self, k: int) -> "Ball":
        # scaling by 2^k is exact at unchanged mantissa precision
        st = _st()
        scale = mpfr(2, 8) ** k
        if self.mid.precision <= st.prec:
            m = st.near.mul(self.mid, scale)
        else:
            m = gmpy2.context(precision=self.mid.precision).mul(self.mid, scale)
        r = st.rup.mul(self.rad, scale)
        return Ball.raw(m, r)

    # -- lattice -----------------------------------------------------------

    def union(self, other: "Ball") -> "Ball":
        lo = min(self.lower(), other.lower())
        hi = max(self.upper(), other.upper())
        return Ball.from_endpoints(lo, hi)

    def intersect(self, other: "Ball") -> "Ball":
        lo = max(self.lower(), other.lower())
        hi = min(self.upper(), other.upper())
        if lo > hi:
            raise ValueError(f"empty intersection of {self} and {other}")
        return Ball.from_endpoints(lo, hi)

    def widened(self, extra) -> "Ball":
        return Ball.raw(self.mid, _st().rup.add(self.rad, _abs_rad(extra)))


def ball_from_decimal(mid: str, rad: str | None = None) -> Ball:
    """Exact decimal parsing: result certainly contains the decimal value."""
    st = _st()
    q = exact_decimal_to_mpq(mid)
    m = gmpy2.mpfr(q, st.prec)
    r = _rad_from_mpq(abs(q - _to_mpq(m)))
    if rad is not None:
        rq = exact_decimal_to_mpq(rad)
        r = st.rup.add(r, _rad_from_mpq(rq))
    return Ball.raw(m, r)


# -- elementary functions ---------------------------------------------------


def _endpoint_increasing(fn_dn, fn_up, x: Ball) -> Ball:
    return Ball.from_endpoints(fn_dn(x.lower()), fn_up(x.upper()))


def _endpoint_decreasing(fn_dn, fn_up, x: Ball) -> Ball:
    return Ball.from_endpoints(fn_dn(x.upper()), fn_up(x.lower()))


def ball_exp(x: Ball) -> Ball:
    st = _st()
    return _endpoint_increasing(st.dn.exp, st.up.exp, x)


def ball_expm1(x: Ball) -> Ball:
    st = _st()
    return _endpoint_increasing(st.dn.expm1, st.up.expm1, x)


def ball_log(x: Ball) -> Ball:
    st = _st()
    if x.lower() <= 0:
        raise ValueError(f"log of non-positive ball {x}")
    return _endpoint_increasing(st.dn.log, st.up.log, x)


def ball_log1p(x: Ball) -> Ball:
    st = _st()
    if x.lower() <= -1:
        raise ValueError("log1p domain")
    return _endpoint_increasing(st.dn.log1p, st.up.log1p, x)


def ball_sqrt(x: Ball) -> Ball:
    st = _st()
    lo = x.lower()
    if lo < 0:
        if x.upper() < 0:
            raise ValueError(f"sqrt of negative ball {x}")
        lo = mpfr(0)
    return Ball.from_endpoints(st.dn.sqrt(lo), st.up.sqrt(x.upper()))


def ball_atan(x: Ball) -> Ball:
    st = _st()
    return _endpoint_increasing(st.dn.atan, st.up.atan, x)


def ball_sinh(x: Ball) -> Ball:
    st = _st()
    return _endpoint_increasing(st.dn.sinh, st.up.sinh, x)


def ball_cosh(x: Ball) -> Ball:
    st = _st()
    lo, hi = x.lower(), x.upper()
    top = max(st.up.cosh(lo), st.up.cosh(hi))
    if lo <= 0 <= hi:
        bot = mpfr(1)
    else:
        bot = min(st.dn.cosh(lo), st.dn.cosh(hi))
    return Ball.from_endpoints(bot, top)


def ball_tanh(x: Ball) -> Ball:
    st = _st()
    return _endpoint_increasing(st.dn.tanh, st.up.tanh, x)


def pi_ball() -> Ball:
    st = _st()
    return Ball.from_endpoints(_const_dir(st.dn, "const_pi"), _const_dir(st.up, "const_pi"))


def log2_ball() -> Ball:
    st = _st()
    return Ball.from_endpoints(st.dn.log(mpfr(2)), st.up.log(mpfr(2)))


def euler_ball() -> Ball:
    st = _st()
    return Ball.from_endpoints(_const_dir(st.dn, "const_euler"), _const_dir(st.up, "const_euler"))


def _may_contain_shifted(x: Ball, offset: Ball) -> bool:
    """Whether x may contain offset + 2*pi*k for some integer k (conservative)."""
    two_pi = pi_ball().mul_2exp(1)
    t = (x - offset) / two_pi
    lo, hi = t.lower(), t.upper()
    if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi)):
        return True
    if abs(lo) >= 2**50 or abs(hi) >= 2**50:
        return True  # floor/ceil below exact only in this range
    return gmpy2.floor(hi) >= gmpy2.ceil(lo)


def ball_sin(x: Ball) -> Ball:
    st = _st()
    if x.rad >= st.up.const_pi():
        return Ball.from_endpoints(mpfr(-1), mpfr(1))
    lo, hi = x.lower(), x.upper()
    bot = min(st.dn.sin(lo), st.dn.sin(hi))
    top = max(st.up.sin(lo), st.up.sin(hi))
    half_pi = pi_ball().mul_2exp(-1)
    if _may_contain_shifted(x, half_pi):
        top = mpfr(1)
    if _may_contain_shifted(x, -half_pi):
        bot = mpfr(-1)
    return Ball.from_endpoints(bot, top)


def ball_cos(x: Ball) -> Ball:
    st = _st()
    if x.rad >= st.up.const_pi():
        return Ball.from_endpoints(mpfr(-1), mpfr(1))
    lo, hi = x.lower(), x.upper()
    bot = min(st.dn.cos(lo), st.dn.cos(hi))
    top = max(st.up.cos(lo), st.up.cos(hi))
    if _may_contain_shifted(x, Ball.zero()):
        top = mpfr(1)
    if _may_contain_shifted(x, pi_ball()):
        bot = mpfr(-1)
    return Ball.from_endpoints(bot, top)


def ball_sin_cos(x: Ball) -> tuple[Ball, Ball]:
    return ball_sin(x), ball_cos(x)


def ball_powr(x: Ball, y) -> Ball:
    """x**y for x > 0 via exp(y log x)."""
    y = y if isinstance(y, Ball) else Ball(y)
    return ball_exp(y * ball_log(x))


def ball_min(a: Ball, b: Ball) -> Ball:
    return Ball.from_endpoints(min(a.lower(), b.lower()), min(a.upper(), b.upper()))


def ball_max(a: Ball, b: Ball) -> Ball:
    return Ball.from_endpoints(max(a.lower(), b.lower()), max(a.upper(), b.upper()))


def ball_hull(items: Iterable[Ball]) -> Ball:
    out = None
    for b in items:
        out = b if out is None else out.union(b)
    if out is None:
        raise ValueError("hull of empty iterable")
    return out


# -- complex balls ----------------------------------------------------------


class CBall:
    """Rectangular complex enclosure: independent real/imag balls."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Ball) else Ball(re)
        self.im = im if isinstance(im, Ball) else Ball(im)

    def __repr__(self):
        return f"CBall({self.re!r}, {self.im!r})"

    def __str__(self):
        return f"({self.re} + {self.im}*I)"

    @staticmethod
    def from_ball(b: Ball) -> "CBall":
        return CBall(b, Ball.zero())

    @staticmethod
    def i() -> "CBall":
        return CBall(Ball.zero(), Ball(1))

    def conj(self) -> "CBall":
        return CBall(self.re, -self.im)

    def __neg__(self):
        return CBall(-self.re, -self.im)

    def __add__(self, other):
        o = _as_cball(other)
        return CBall(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_cball(other)
        return CBall(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Ball):
            return CBall(self.re * other, self.im * other)
        o = _as_cball(other)
        return CBall(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def mul_i(self) -> "CBall":
        return CBall(-self.im, self.re)

    def abs2(self) -> Ball:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> Ball:
        return ball_sqrt(self.abs2())

    def __truediv__(self, other):
        if isinstance(other, Ball):
            return CBall(self.re / other, self.im / other)
        o = _as_cball(other)
        d = o.abs2()
        if d.lower() <= 0:
            raise ZeroDivisionError(f"division by complex ball containing zero: {o}")
        num = self * o.conj()
        return CBall(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return _as_cball(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer powers only; use cball_powr")
        if k < 0:
            return CBall(1) / self.__pow__(-k)
        result = CBall(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def contains(self, other) -> bool:
        o = _as_cball(other)
        return self.re.contains(o.re) and self.im.contains(o.im)

    def overlaps(self, other: "CBall") -> bool:
        o = _as_cball(other)
        return self.re.overlaps(o.re) and self.im.overlaps(o.im)

    def union(self, other: "CBall") -> "CBall":
        o = _as_cball(other)
        return CBall(self.re.union(o.re), self.im.union(o.im))

    def widened(self, extra) -> "CBall":
        return CBall(self.re.widened(extra), self.im.widened(extra))

    def is_real_consistent(self) -> bool:
        """True when the enclosure is consistent with a real value."""
        return self.im.contains_zero()

    def magnitude(self) -> mpfr:
        return abs(self).upper()


def _as_cball(x) -> CBall:
    if isinstance(x, CBall):
        return x
    if isinstance(x, complex):
        return CBall(Ball(x.real), Ball(x.imag))
    return CBall(x if isinstance(x, Ball) else Ball(x), Ball.zero())


def cball_exp(z: CBall) -> CBall:
    r = ball_exp(z.re)
    s, c = ball_sin_cos(z.im)
    return CBall(r * c, r * s)


def cball_log(z: CBall) -> CBall:
    """Principal log; the rectangle must avoid (-inf, 0]."""
    mag2 = z.abs2()
    if mag2.lower() <= 0:
        raise ValueError("log of complex ball containing zero")
    if not z.re.is_positive() and z.im.contains_zero():
        raise ValueError("complex ball touches the branch cut of log")
    return CBall(ball_log(mag2).mul_2exp(-1), cball_arg(z))


def cball_arg(z: CBall) -> Ball:
    """Principal argument over the rectangle (must avoid the cut)."""
    re, im = z.re, z.im
    if re.is_positive():
        return ball_atan(im / re)
    if im.is_positive():
        return pi_ball().mul_2exp(-1) - ball_atan(re / im)
    if im.is_negative():
        return -pi_ball().mul_2exp(-1) - ball_atan(re / im)
    raise ValueError("argument of complex ball touching the branch cut")


def cball_sqrt(z: CBall) -> CBall:
    """Principal square root; rectangle must avoid (-inf, 0)."""
    if z.im.is_exact() and z.im.mid == 0 and z.re.lower() >= 0:
        return CBall(ball_sqrt(z.re), Ball.zero())
    half = Ball(mpq(1, 2))
    return cball_exp(cball_log(z) * half)


def cball_powr(z: CBall, w) -> CBall:
    w = _as_cball(w)
    return cball_exp(w * cball_log(z))
