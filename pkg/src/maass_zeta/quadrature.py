"""Certified Gauss-Legendre quadrature.

Nodes are float seeds certified by interval Newton on the Legendre
recurrence; weights are evaluated on the certified node enclosures.  The
quadrature error on a panel uses analyticity: if f extends to the closed
Bernstein ellipse E_rho of the panel with |f| <= M, its Chebyshev
coefficients satisfy |a_k| <= 2 M rho^-k, Gauss-Legendre with n nodes is
exact through degree 2n-1, |int T_k| <= 2/(k^2-1) and |Q_n(T_k)| <= 2
(positive weights summing to 2), hence

    |I - Q_n| <= sum_{k>=2n} 2 M rho^-k (2 + 2/(4n^2-1))
             <= 4.2 M rho^(-2n) rho/(rho - 1).

Callers supply M via a box evaluation: any rectangle containing E_rho
works, and evaluating a ball-extension of f on that rectangle gives a
certified magnitude bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from gmpy2 import mpfr

from .ball import Ball, CBall, ball_hull, ball_powr, get_precision, local_precision

__all__ = ["gl_rule", "integrate", "integrate_complex", "panel_points"]

_RULE_CACHE: dict[tuple[int, int], tuple[list[Ball], list[Ball]]] = {}


def _legendre_pair(n: int, x: Ball) -> tuple[Ball, Ball]:
    """(P_n(x), P_n'(x)) by the three-term recurrence."""
    p_prev, p = Ball(1), x
    for k in range(1, n):
        p_next = (Ball(2 * k + 1) * x * p - Ball(k) * p_prev) / Ball(k + 1)
        p_prev, p = p, p_next
    # P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    dp = Ball(n) * (x * p - p_prev) / (x * x - Ball(1))
    return p, dp


def _certify_node(n: int, x0: float) -> Ball:
    """Interval Newton certification of the Legendre root near x0."""
    # polish the float seed with point Newton (quadratic convergence), then
    # certify uniqueness/containment on a tiny box around the polished value
    prec = get_precision()
    with local_precision(prec + 2 * n + 32):
        x = Ball(x0)
        for _ in range(7):
            mid = Ball.raw(x.mid, mpfr(0))
            p_mid, dp_mid = _legendre_pair(n, mid)
            x = Ball.raw((mid - p_mid / dp_mid).mid, mpfr(0))
        box = Ball(x.mid, mpfr(2) ** (-prec + 24))
        mid = Ball.raw(box.mid, mpfr(0))
        p_mid, _ = _legendre_pair(n, mid)
        _, dp_box = _legendre_pair(n, box)
        newton = mid - p_mid / dp_box
        if not box.contains(newton):
            raise ArithmeticError(f"node certification failed for degree {n} near {x0}")
    return Ball(newton.mid, newton.rad)


def gl_rule(n: int) -> tuple[list[Ball], list[Ball]]:
    """Certified nodes and weights on [-1, 1]."""
    prec = get_precision()
    key = (n, prec)
    if key in _RULE_CACHE:
        return _RULE_CACHE[key]
    seeds, _ = np.polynomial.legendre.leggauss(n)
    nodes: list[Ball] = []
    weights: list[Ball] = []
    for x0 in seeds:
        x = _certify_node(n, float(x0))
        _, dp = _legendre_pair(n, x)
        w = Ball(2) / ((Ball(1) - x * x) * dp * dp)
        nodes.append(x)
        weights.append(w)
    _RULE_CACHE[key] = (nodes, weights)
    return nodes, weights


def _ellipse_error(m_bound: Ball, rho: float, n: int) -> Ball:
    """4.2 M rho^(-2n) rho/(rho-1), computed outward."""
    if rho <= 1.02:
        raise ValueError("need rho > 1.02 for a useful ellipse bound")
    rb = Ball(rho)
    decay = ball_powr(rb, Ball(-2 * n))
    return Ball("4.2") * m_bound * decay * rb / (rb - Ball(1))


def _ellipse_box(a: Ball, b: Ball, rho: float) -> CBall:
    """Rectangle (in t-space of the panel) containing the Bernstein ellipse."""
    c = (a + b).mul_2exp(-1)
    hw = (b - a).mul_2exp(-1)
    rb = Ball(rho)
    semi_x = (rb + Ball(1) / rb).mul_2exp(-1)
    semi_y = (rb - Ball(1) / rb).mul_2exp(-1)
    re = c + Ball(0, (hw * semi_x).magnitude())
    im = Ball(0, (hw * semi_y).magnitude())
    return CBall(re, im)


def integrate(
    f: Callable[[Ball], Ball],
    a,
    b,
    *,
    n: int = 24,
    rho: float = 2.0,
    bound: Callable[[CBall], Ball] | None = None,
    m_bound: Ball | None = None,
) -> Ball:
    """Certified integral of a real-valued analytic f over [a, b].

    One of ``bound`` (ball extension of |f| evaluated on a complex box) or
    ``m_bound`` (precomputed magnitude bound on the Bernstein ellipse of
    parameter rho) must be given.
    """
    a = a if isinstance(a, Ball) else Ball(a)
    b = b if isinstance(b, Ball) else Ball(b)
    nodes, weights = gl_rule(n)
    c = (a + b).mul_2exp(-1)
    hw = (b - a).mul_2exp(-1)
    acc = Ball(0)
    for x, w in zip(nodes, weights):
        acc = acc + w * f(c + hw * x)
    if m_bound is None:
        box = _ellipse_box(a, b, rho)
        m_bound = abs(bound(box)) if isinstance(bound(box), Ball) else bound(box)
    err = _ellipse_error(m_bound, rho, n) * abs(hw)
    return (hw * acc).widened(err.magnitude())


def integrate_complex(
    f: Callable[[Ball], CBall],
    a,
    b,
    *,
    n: int = 24,
    rho: float = 2.0,
    bound: Callable[[CBall], Ball] | None = None,
    m_bound: Ball | None = None,
) -> CBall:
    """Certified integral of a complex-valued analytic f over real [a, b]."""
    a = a if isinstance(a, Ball) else Ball(a)
    b = b if isinstance(b, Ball) else Ball(b)
    nodes, weights = gl_rule(n)
    c = (a + b).mul_2exp(-1)
    hw = (b - a).mul_2exp(-1)
    acc = CBall(0)
    for x, w in zip(nodes, weights):
        acc = acc + f(c + hw * x) * w
    if m_bound is None:
        box = _ellipse_box(a, b, rho)
        m_bound = bound(box)
    err = (_ellipse_error(m_bound, rho, n) * abs(hw)).magnitude()
    return (acc * hw).widened(err)


def panel_points(a: float, b: float, count: int, *, geometric: bool = False) -> list[float]:
    """Panel endpoints for piecewise integration."""
    if geometric:
        if a <= 0 or b <= a:
            raise ValueError("geometric panels need 0 < a < b")
        ratio = (b / a) ** (1.0 / count)
        return [a * ratio**i for i in range(count + 1)]
    step = (b - a) / count
    return [a + step * i for i in range(count + 1)]
