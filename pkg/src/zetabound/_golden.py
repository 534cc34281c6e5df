"""Golden-section maximisation with a non-unimodal fallback."""

from __future__ import annotations

import math
from typing import Callable

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> tuple[float, float]:
    """Maximise f on [a, b] down to bracket width tol.

    Assumes f is unimodal on the bracket; if the two initial interior probes
    both fall below both endpoints (so unimodality is visibly violated),
    falls back to recursive grid halving.  Returns the best point seen,
    endpoints included, so boundary maxima are handled.
    """
    if not b > a:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    fa, fb = f(a), f(b)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best = max(((fa, a), (fb, b), (fc, c), (fd, d)))
    if max(fc, fd) + 1e-12 < max(fa, fb) and min(fa, fb) > max(fc, fd):
        return _grid_halve_max(f, a, b, tol, best)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
            best = max(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
            best = max(best, (fd, d))
    fbest, xbest = best
    return xbest, fbest


def _grid_halve_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    best: tuple[float, float],
) -> tuple[float, float]:
    while b - a > tol:
        xs = [a + (b - a) * k / 8.0 for k in range(9)]
        vals = [(f(x), x) for x in xs]
        best = max(best, max(vals))
        k = max(range(9), key=lambda i: vals[i][0])
        a = xs[max(k - 1, 0)]
        b = xs[min(k + 1, 8)]
    fbest, xbest = best
    return xbest, fbest
