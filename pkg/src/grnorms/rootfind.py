"""Bracketed scalar root finding and unimodal maximization.

``brent`` follows the classical zeroin scheme: it keeps a sign-changing
bracket at all times and switches between inverse quadratic interpolation,
secant steps and bisection.  Unlike ``scipy.optimize.brentq`` it returns the
final bracket together with the root, which callers use as an enclosure
certificate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError

_EPS = 2.220446049250313e-16
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float]

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def brent(
    f: Callable[[float], float],
    a: float,
    b: float,
    rtol: float = 5e-14,
    maxiter: int = 200,
) -> RootResult:
    """Find a root of ``f`` in ``[a, b]``; ``f(a)`` and ``f(b)`` must differ in sign.

    Iteration stops once the enclosing bracket is narrower than
    ``rtol * max(1, |root|)`` (plus a few ulps) or ``f`` vanishes exactly.
    """
    fa, fb = f(a), f(b)
    if math.isnan(fa) or math.isnan(fb):
        raise ConvergenceError(f"f is NaN at a bracket endpoint ({a!r}, {b!r})")
    if fa == 0.0:
        return RootResult(a, fa, 0, (a, a))
    if fb == 0.0:
        return RootResult(b, fb, 0, (b, b))
    if (fa > 0) == (fb > 0):
        raise ConvergenceError(
            f"no sign change on [{a!r}, {b!r}]: f(a)={fa!r}, f(b)={fb!r}"
        )

    c, fc = a, fa
    d = e = b - a
    for it in range(1, maxiter + 1):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * _EPS * abs(b) + 0.5 * rtol * max(1.0, abs(b))
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            lo, hi = (b, c) if b <= c else (c, b)
            if fb == 0.0:
                lo = hi = b
            return RootResult(b, fb, it, (lo, hi))

        if abs(e) >= tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m

        a, fa = b, fb
        if abs(d) > tol:
            b += d
        else:
            b += math.copysign(tol, m)
        fb = f(b)
        if math.isnan(fb):
            raise ConvergenceError(f"f returned NaN at {b!r}")

    raise ConvergenceError(f"brent: no convergence after {maxiter} iterations")


def golden_max(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-12
) -> tuple[float, float]:
    """Golden-section search for the maximum of a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))`` for the best point seen, endpoints included.
    """
    if b < a:
        a, b = b, a
    fa, fb = f(a), f(b)
    best = (a, fa) if fa >= fb else (b, fb)
    h = b - a
    if h <= tol:
        return best
    c = b - INV_PHI * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx > best[1]:
            best = (x, fx)
    return best
