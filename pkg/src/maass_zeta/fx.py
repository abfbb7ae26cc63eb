"""Fixed-point helpers for the rigorous integer kernels.

Quantities are scaled Python integers x ~ X * 2^F.  All conversions round
outward where it matters; each kernel carries an explicit error budget in
the same scale, so the integer fast paths remain certified.
"""

from __future__ import annotations

import gmpy2
from gmpy2 import mpfr, mpq

from .ball import Ball


def ball_to_fx(b: Ball, F: int) -> tuple[int, int]:
    """(midpoint, error) as scaled ints; error covers rad + quantization."""
    m = mpq(b.mid) * (mpq(2) ** F)
    mi = int(m)  # truncation toward zero
    err_q = abs(m - mi) + mpq(b.rad) * (mpq(2) ** F)
    return mi, int(err_q) + 1


def mpfr_to_fx_up(x: mpfr, F: int) -> int:
    """Upper bound of x as a scaled int (x may be any sign)."""
    q = mpq(x) * (mpq(2) ** F)
    n = int(q)
    return n if n == q else n + 1


def fx_to_ball(v: int, err: int, F: int) -> Ball:
    """Back to a ball; exact dyadic conversion."""
    scale = mpq(2) ** F
    return Ball(mpq(v) / scale, mpq(err if err >= 0 else 0) / scale)
