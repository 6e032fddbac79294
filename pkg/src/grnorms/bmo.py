"""BMO norms of f0(x) = log(1/|x|) on the half-line and the real line.

The real-line norm is expressed through the root t > 1 of

    exp(t log t / (t+1)) = e * (t - 1 - (t+1)/log t),

and the ratio of the two norms gives the companion constant C0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError
from .rootfind import RootResult, brent

SCAN_START = 1.000001
SCAN_STOP = 100.0
SCAN_STEP = 0.01


@dataclass(frozen=True)
class BmoReport:
    t_root: float
    norm_halfline: float
    norm_realline: float
    c0: float


def t_equation_sides(t: float) -> tuple[float, float]:
    """(LHS, RHS) of the equation defining t."""
    lt = math.log(t)
    return math.exp(t * lt / (t + 1.0)), math.e * (t - 1.0 - (t + 1.0) / lt)


def _log_residual(t: float) -> float:
    lt = math.log(t)
    rhs_core = t - 1.0 - (t + 1.0) / lt
    return t * lt / (t + 1.0) - 1.0 - math.log(rhs_core)


def solve_bmo_t() -> RootResult:
    """Root t > 1, bracketed by a uniform scan and refined in log form.

    The right-hand side is negative just above t = 1, so the log form is only
    used on the part of the scan where it is positive.
    """
    prev_t = prev_d = None
    n = int(round((SCAN_STOP - SCAN_START) / SCAN_STEP))
    for k in range(n + 1):
        t = SCAN_START + k * SCAN_STEP
        lhs, rhs = t_equation_sides(t)
        if rhs <= 0.0:
            prev_t = prev_d = None
            continue
        d = _log_residual(t)
        if prev_d is not None and (prev_d > 0.0) != (d > 0.0):
            res = brent(_log_residual, prev_t, t)
            if abs(res.residual) > 1e-12:
                raise ConvergenceError(f"t root residual {res.residual!r} exceeds 1e-12")
            return res
        prev_t, prev_d = t, d
    raise ConvergenceError(
        f"no sign change of the t equation on [{SCAN_START}, {SCAN_STOP}]"
    )


def bmo_norm_f0() -> BmoReport:
    t = solve_bmo_t().root
    s = t * math.log(t) / (t + 1.0)
    half = 2.0 / math.e
    real = half / (t + 1.0) * (math.exp(s) + math.e * s)
    return BmoReport(t_root=t, norm_halfline=half, norm_realline=real, c0=real / half)
