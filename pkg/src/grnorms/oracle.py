"""Brute-force quadrature oracle for means and mean oscillations.

Works for any non-negative integrable function on a bounded interval and
shares no code with the closed forms in ``analytics``.  Integrals are
computed with QUADPACK's adaptive Gauss-Kronrod routine (``scipy.integrate.quad``),
panel by panel between declared singularities and numerically located level
crossings, so every panel has a smooth, sign-definite integrand.

Singularities must be declared by the caller; they are never sampled.  The
real-line norm reduction to intervals (-eta, 1) assumes f is even and
monotone on the half-line, which is not checked.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .errors import BudgetExceededError, DomainError, LevelCrossingError
from .rootfind import golden_max

EVAL_BUDGET = 10_000_000
QUAD_LIMIT = 2000
CROSSING_SAMPLES = 64
CROSSING_XTOL = 1e-13
MAX_CROSSINGS = 32


@dataclass(frozen=True)
class IntegrableFunction:
    evaluator: Callable[[float], float]
    singularities: Sequence[float] = field(default_factory=tuple)

    def __call__(self, x: float) -> float:
        return self.evaluator(x)


@dataclass(frozen=True)
class OracleEstimate:
    value: float
    abs_error_bound: float
    evaluations: int
    argmax: float | None = None


def power_function(alpha: float) -> IntegrableFunction:
    """|x|**alpha with the origin declared as a breakpoint."""
    return IntegrableFunction(lambda x: abs(x) ** alpha, (0.0,))


def constant_function(c: float = 1.0) -> IntegrableFunction:
    return IntegrableFunction(lambda x: c)


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.used = 0

    def charge(self, n: int) -> None:
        self.used += n
        if self.used > self.budget:
            raise BudgetExceededError(
                f"quadrature used {self.used} evaluations, budget is {self.budget}"
            )


def _breakpoints(f: IntegrableFunction, a: float, b: float) -> list[float]:
    inner = sorted({float(s) for s in f.singularities if a < s < b})
    return [a, *inner, b]


def _quad(g, lo, hi, tol, counter) -> tuple[float, float]:
    if hi <= lo:
        return 0.0, 0.0
    remaining = counter.budget - counter.used
    limit = max(1, min(QUAD_LIMIT, remaining // 21))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, info = integrate.quad(
            g, lo, hi, epsabs=tol, epsrel=0.0, limit=limit, full_output=1
        )[:3]
    counter.charge(info["neval"])
    if not math.isfinite(val) or not (err <= tol):
        raise BudgetExceededError(
            f"quadrature on [{lo!r}, {hi!r}] reached error {err!r} > tolerance {tol!r}"
        )
    return val, err


def _check_interval(a: float, b: float, tol: float) -> None:
    if not a < b:
        raise DomainError(f"need a < b; got a={a!r}, b={b!r}")
    if not tol > 0:
        raise DomainError(f"tol must be positive; got {tol!r}")


def _integral(f, a, b, tol, counter) -> tuple[float, float]:
    pts = _breakpoints(f, a, b)
    share = tol / (len(pts) - 1)
    total = err = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        v, e = _quad(f.evaluator, lo, hi, share, counter)
        total += v
        err += e
    return total, err


def oracle_mean(
    f: IntegrableFunction, a: float, b: float, tol: float = 1e-10, budget: int = EVAL_BUDGET
) -> OracleEstimate:
    """Mean value of f over (a, b) to absolute accuracy ``tol``."""
    _check_interval(a, b, tol)
    counter = _Counter(budget)
    val, err = _integral(f, a, b, tol * (b - a), counter)
    return OracleEstimate(val / (b - a), err / (b - a), counter.used)


def _bisect_crossing(h, lo: float, hi: float, hlo: float) -> float:
    while hi - lo > CROSSING_XTOL:
        mid = 0.5 * (lo + hi)
        hm = h(mid)
        if hm == 0.0:
            return mid
        if (hm > 0.0) == (hlo > 0.0):
            lo, hlo = mid, hm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def level_crossings(f: IntegrableFunction, a: float, b: float, level: float) -> list[float]:
    """Points in (a, b) where f crosses ``level``, located panel by panel.

    Each panel between declared singularities is sampled at interior points
    only; sign changes are refined by bisection to ``CROSSING_XTOL``.
    """
    def h(x: float) -> float:
        return f.evaluator(x) - level

    out: list[float] = []
    pts = _breakpoints(f, a, b)
    for lo, hi in zip(pts[:-1], pts[1:]):
        # interior samples, with the ends pulled in so singular ends are never hit
        xs = lo + (hi - lo) * (np.arange(CROSSING_SAMPLES + 1) + 0.5) / (CROSSING_SAMPLES + 1)
        xs = np.concatenate(([lo + (hi - lo) * 1e-12], xs, [hi - (hi - lo) * 1e-12]))
        prev = None
        for x in xs:
            x = float(x)
            hx = h(x)
            if math.isnan(hx):
                raise LevelCrossingError(f"f is NaN at x={x!r}")
            if hx == 0.0:
                # exact hits are not sign changes; a flat f - f_I contributes nothing
                continue
            if prev is not None and (prev[1] > 0.0) != (hx > 0.0):
                out.append(_bisect_crossing(h, prev[0], x, prev[1]))
            prev = (x, hx)
        if len(out) > MAX_CROSSINGS:
            raise LevelCrossingError(
                f"more than {MAX_CROSSINGS} level crossings on [{a!r}, {b!r}]; "
                "input is too oscillatory for the panel scheme"
            )
    return sorted(set(out))


def oracle_oscillation(
    f: IntegrableFunction, a: float, b: float, tol: float = 1e-10, budget: int = EVAL_BUDGET
) -> OracleEstimate:
    """Mean oscillation (1/|I|) * integral of |f - f_I| over (a, b).

    The error bound adds the mean's error (|d Omega / d level| <= 1) to the
    quadrature error of the sign-definite panels.
    """
    _check_interval(a, b, tol)
    counter = _Counter(budget)
    length = b - a
    mval, merr = _integral(f, a, b, 0.5 * tol * length, counter)
    mean = mval / length
    merr /= length

    cuts = level_crossings(f, a, b, mean)
    pts = sorted(set(_breakpoints(f, a, b)) | set(cuts))
    share = 0.5 * tol * length / (len(pts) - 1)
    total = err = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        v, e = _quad(lambda x: f.evaluator(x) - mean, lo, hi, share, counter)
        # a missed crossing leaves a sign change inside the panel
        try:
            va, ea = _quad(lambda x: abs(f.evaluator(x) - mean), lo, hi, share, counter)
        except BudgetExceededError as exc:
            if counter.used > counter.budget:
                raise
            raise LevelCrossingError(
                f"|f - f_I| on [{lo!r}, {hi!r}] is not smooth enough to integrate; "
                "level crossings were probably missed"
            ) from exc
        if va - abs(v) > 2.0 * (e + ea) + 1e-12 * (hi - lo) * max(1.0, abs(mean)):
            raise LevelCrossingError(
                f"integrand changes sign inside panel [{lo!r}, {hi!r}] "
                f"(|int| = {abs(v)!r}, int|.| = {va!r}); crossings were missed"
            )
        total += abs(v)
        err += e
    return OracleEstimate(total / length, err / length + merr, counter.used)


def oracle_relative(
    f: IntegrableFunction, a: float, b: float, tol: float = 1e-10, budget: int = EVAL_BUDGET
) -> OracleEstimate:
    """Relative oscillation Omega/f_I; zero when the mean vanishes."""
    m = oracle_mean(f, a, b, tol, budget)
    om = oracle_oscillation(f, a, b, tol, budget)
    if m.value <= m.abs_error_bound:
        return OracleEstimate(0.0, 2.0, m.evaluations + om.evaluations)
    rel = om.value / m.value
    bound = (om.abs_error_bound + rel * m.abs_error_bound) / (m.value - m.abs_error_bound)
    return OracleEstimate(rel, bound, m.evaluations + om.evaluations)


def oracle_norm_realline(
    f: IntegrableFunction, grid_size: int = 10_000, tol: float = 1e-10
) -> OracleEstimate:
    """Grid supremum over eta in [0, 1] of the relative oscillation on (-eta, 1).

    The grid argmax is refined by golden-section search between its
    neighbours.  The error bound is the quadrature bound plus the local slope
    around the argmax times the grid step.
    """
    if grid_size < 100:
        raise DomainError(f"grid_size must be at least 100; got {grid_size!r}")
    evals = 0
    bound = 0.0

    def rel(eta: float) -> float:
        nonlocal evals, bound
        est = oracle_relative(f, -eta, 1.0, tol)
        evals += est.evaluations
        bound = max(bound, est.abs_error_bound)
        return est.value

    etas = np.linspace(0.0, 1.0, grid_size)
    vals = np.array([rel(float(e)) for e in etas])
    k = int(np.argmax(vals))
    step = float(etas[1] - etas[0])
    lo, hi = max(k - 1, 0), min(k + 1, grid_size - 1)
    slope = max(abs(vals[k] - vals[lo]), abs(vals[hi] - vals[k])) / step
    x, fx = golden_max(rel, float(etas[lo]), float(etas[hi]), tol=1e-9)
    if fx < vals[k]:
        x, fx = float(etas[k]), float(vals[k])
    return OracleEstimate(float(fx), float(bound + slope * step), evals, argmax=float(x))


def check_reflection_inequality(
    f: IntegrableFunction, b: float, delta_grid: int = 50, tol: float = 1e-10
) -> tuple[bool, float]:
    """Check Omega(f; (-delta*b, b)) <= 2/(1+delta) * Omega(f; (0, b)) on a delta grid.

    Returns (passed, worst margin RHS - LHS).  A margin above minus the
    combined quadrature error counts as a pass.
    """
    if not b > 0:
        raise DomainError(f"b must be positive; got {b!r}")
    base = oracle_oscillation(f, 0.0, b, tol)
    worst = math.inf
    ok = True
    for delta in np.linspace(0.0, 1.0, delta_grid):
        delta = float(delta)
        a = -delta * b
        if a == 0.0:
            lhs = base
        else:
            lhs = oracle_oscillation(f, a, b, tol)
        rhs = 2.0 / (1.0 + delta) * base.value
        margin = rhs - lhs.value
        slack = lhs.abs_error_bound + 2.0 / (1.0 + delta) * base.abs_error_bound
        worst = min(worst, margin)
        if margin < -slack:
            ok = False
    return ok, worst
