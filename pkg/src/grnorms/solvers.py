"""Root finding and maximization built on the closed forms.

Solves for the branch point eta1(alpha), the maximizer eta_max(alpha) of
psi0, the real-line norm of |x|**alpha, the limiting summability exponent
p(eps) and the even-extension factor C_eps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import analytics as an
from .errors import ConvergenceError, DomainError
from .rootfind import RootResult, brent

ETA1_EDGE = 1e-12
ETA_MAX_DELTA = 1e-10
VERIFY_GRID = 10_000
DEFAULT_SMALLEST_EPS = 1e-6


@dataclass(frozen=True)
class SummabilityExponent:
    p: float
    residual: float

    @property
    def p_minus(self) -> float:
        return 1.0 - self.p

    @property
    def alpha_plus(self) -> float:
        return an.alpha_plus(self.p)

    @property
    def alpha_minus(self) -> float:
        return an.alpha_minus(self.p)


@dataclass(frozen=True)
class NormReport:
    alpha: float
    eps_halfline: float
    eps_realline: float
    ratio: float
    eta1: float
    eta_max: float


@dataclass(frozen=True)
class SweepPoint:
    eps: float
    p: float
    alpha: float
    c_eps: float
    running_sup: float


def solve_eta1(alpha: float) -> RootResult:
    """Unique root in (0, 1) of eta**alpha * (1 + alpha*(eta+1)) - 1."""
    alpha = an.check_alpha(alpha)

    def g(eta: float) -> float:
        return float(an._g(alpha, eta))

    res = brent(g, ETA1_EDGE, 1.0 - ETA1_EDGE)
    # at the root g' = alpha/eta + alpha*eta**alpha; the attainable residual scales with it
    eta = res.root
    slope = abs(alpha / eta + alpha * eta**alpha)
    bound = 1e-13 * max(1.0, slope)
    if abs(res.residual) > bound:
        raise ConvergenceError(
            f"eta1({alpha!r}): residual {res.residual!r} exceeds {bound!r}"
        )
    return res


def _stationarity(alpha: float):
    def h(eta: float) -> float:
        return float(an.stationarity_bracket(alpha, eta))

    return h


def solve_eta_max(alpha: float, eta1: float | None = None) -> RootResult:
    """Interior maximizer of psi0(alpha, .) on [0, eta1].

    The stationary point is checked against a uniform grid; if the grid finds
    a higher value the root is re-solved next to the grid winner.
    """
    alpha = an.check_alpha(alpha)
    if eta1 is None:
        eta1 = solve_eta1(alpha).root
    h = _stationarity(alpha)
    lo, hi = ETA_MAX_DELTA, eta1 - ETA_MAX_DELTA
    if not (h(lo) > 0.0 and h(hi) < 0.0):
        raise ConvergenceError(
            f"eta_max({alpha!r}): derivative signs at the bracket ends are "
            f"{h(lo)!r}, {h(hi)!r}; expected +, -"
        )
    res = brent(h, lo, hi)

    grid = np.linspace(0.0, eta1, VERIFY_GRID)
    values = an._psi0(alpha, grid)
    k = int(np.argmax(values))
    at_root = float(an._psi0(alpha, res.root))
    if values[k] > at_root + 1e-9:
        a = max(float(grid[max(k - 1, 0)]), ETA_MAX_DELTA)
        b = min(float(grid[min(k + 1, len(grid) - 1)]), hi)
        if not (h(a) > 0.0 > h(b)):
            raise ConvergenceError(
                f"eta_max({alpha!r}): grid maximum {values[k]!r} at eta={grid[k]!r} beats "
                f"stationary point {res.root!r} (psi0={at_root!r}) and cannot be bracketed"
            )
        res = brent(h, a, b)
        at_root = float(an._psi0(alpha, res.root))
        if values[k] > at_root + 1e-9:
            raise ConvergenceError(
                f"eta_max({alpha!r}): re-solved stationary point still below grid maximum"
            )
    return res


def norm_realline(alpha: float) -> NormReport:
    alpha = an.check_alpha(alpha)
    eta1 = solve_eta1(alpha).root
    eta_max = solve_eta_max(alpha, eta1).root
    half = an.norm_halfline(alpha)
    ratio = float(an._psi0(alpha, eta_max))
    return NormReport(
        alpha=alpha,
        eps_halfline=half,
        eps_realline=half * ratio,
        ratio=ratio,
        eta1=eta1,
        eta_max=eta_max,
    )


def _exponent_lhs(p: float) -> float:
    # p ln p - (p-1) ln(p-1), rearranged to avoid cancellation at large p
    return math.log(p) - (p - 1.0) * math.log1p(-1.0 / p)


def limiting_exponent(eps: float) -> SummabilityExponent:
    """p > 1 solving p**p / (p-1)**(p-1) = 2/eps, found in logarithmic form."""
    eps = float(eps)
    if not (0.0 < eps < 2.0):
        raise DomainError(f"eps must lie in (0, 2); got {eps!r}")
    target = math.log(2.0 / eps)

    def f(p: float) -> float:
        return _exponent_lhs(p) - target

    lo, hi = 1.0 + 1e-9, 1e6
    while f(lo) > 0.0 and lo - 1.0 > 1e-300:
        lo = 1.0 + (lo - 1.0) * 1e-3
    while f(hi) < 0.0:
        hi *= 10.0
    res = brent(f, lo, hi)
    return SummabilityExponent(p=res.root, residual=res.residual)


def extension_factor_sweep(eps_list: Iterable[float]) -> list[SweepPoint]:
    """C_eps = max psi0 at alpha = 1/(p(eps)-1), in input order, with running supremum."""
    out: list[SweepPoint] = []
    sup = -math.inf
    for eps in eps_list:
        p = limiting_exponent(eps).p
        alpha = an.alpha_plus(p)
        c = norm_realline(alpha).ratio
        sup = max(sup, c)
        out.append(SweepPoint(eps=float(eps), p=p, alpha=alpha, c_eps=c, running_sup=sup))
    return out


def limit_constant(eps: float = DEFAULT_SMALLEST_EPS) -> float:
    """C estimated as C_eps at a small eps; a lower bound for the extension norm."""
    return extension_factor_sweep([eps])[0].c_eps


def quintic_check(eta: float) -> float:
    """3 eta^5 - 3 eta^4 - 6 eta^3 - 10 eta^2 - eta + 1 (the alpha=1 stationarity polynomial)."""
    return ((((3.0 * eta - 3.0) * eta - 6.0) * eta - 10.0) * eta - 1.0) * eta + 1.0
