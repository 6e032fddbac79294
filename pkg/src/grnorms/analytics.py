"""Closed-form oscillation quantities for the power functions |x|**alpha.

Every quantity here is evaluated on the normalized interval I = (-eta, 1),
0 <= eta <= 1.  Nothing in this module performs root finding; the branch
point eta1(alpha) is either supplied by the caller (``psi``) or located by
the sign of its defining function (``mean_oscillation_power``).

Powers are written through ``u = eta**alpha - 1 = expm1(alpha*log(eta))``,
which is O(alpha) when alpha is small.  Differences such as
``1/(1+eta**(alpha+1)) - 1/(1+eta)`` and the stationarity bracket then
reduce to sums of O(alpha) terms, so dividing by alpha loses no digits
even for alpha around 1e-6.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError


class Branch(enum.Enum):
    A = "A"  # 0 <= eta <= eta1, psi0
    B = "B"  # eta1 <= eta <= 1, psi1


@dataclass(frozen=True)
class OscillationStats:
    mean: float
    oscillation: float
    relative: float


@dataclass(frozen=True)
class PsiValue:
    value: float
    branch: Branch


def alpha_plus(p: float) -> float:
    return 1.0 / (p - 1.0)


def alpha_minus(p: float) -> float:
    return -1.0 / p


def dual_alpha(alpha: float) -> float:
    """The exponent -alpha/(alpha+1) sharing the same psi profile."""
    return -alpha / (alpha + 1.0)


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha <= -1.0 or alpha == 0.0:
        raise DomainError(f"alpha must satisfy alpha > -1, alpha != 0; got {alpha!r}")
    return alpha


def check_eta(eta):
    arr = np.asarray(eta, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"eta must lie in [0, 1]; got {eta!r}")
    return arr


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


# ---------------------------------------------------------------------------
# building blocks (vectorized, no validation)


def _u(alpha, eta):
    """eta**alpha - 1; -1 at eta=0 for alpha>0, +inf for alpha<0."""
    with np.errstate(divide="ignore", over="ignore"):
        return np.expm1(alpha * np.log(eta))


def _q(alpha, eta):
    """eta**(alpha+1)."""
    with np.errstate(divide="ignore"):
        return np.exp((alpha + 1.0) * np.log(eta))


def _log_mean_ratio(alpha, eta):
    """log((1 + eta**(alpha+1)) / (1 + eta)), the O(alpha) part of log(mean)."""
    eta = np.asarray(eta, dtype=float)
    u = _u(alpha, eta)
    with np.errstate(invalid="ignore"):
        t = np.where(eta == 0.0, 0.0, eta * u / (1.0 + eta))
    return np.log1p(t)


def _mean(alpha, eta):
    return np.exp(_log_mean_ratio(alpha, eta) - math.log1p(alpha))


def _g(alpha, eta):
    """eta**alpha * (1 + alpha*(eta+1)) - 1, written as u + alpha*(1+eta)*(1+u)."""
    u = _u(alpha, eta)
    with np.errstate(invalid="ignore"):
        return u + alpha * (1.0 + eta) * (1.0 + u)


def _first_term(alpha, eta):
    """(1 + eta**(alpha+1))**(1/alpha) / (1 + eta)**((alpha+1)/alpha)."""
    return np.exp(_log_mean_ratio(alpha, eta) / alpha - np.log1p(eta))


def _psi0(alpha, eta):
    eta = np.asarray(eta, dtype=float)
    u = _u(alpha, eta)
    q = _q(alpha, eta)
    big = math.exp((alpha + 1.0) / alpha * math.log1p(alpha))
    with np.errstate(invalid="ignore"):
        # eta*u -> 0 at eta=0 for either sign of alpha
        eu = np.where(eta == 0.0, 0.0, eta * u)
    bracket = -eu / ((1.0 + q) * (1.0 + eta))
    return _first_term(alpha, eta) + big / alpha * bracket


def _psi1(alpha, eta):
    return 2.0 * _first_term(alpha, eta)


def stationarity_bracket(alpha, eta):
    """Scaled left-hand side of the eta_max equation.

    Equals the stationarity bracket divided by alpha * (1+eta)**(1/alpha), a
    positive factor for alpha>0, so its roots are those of d psi0 / d eta and
    its sign is the sign of the derivative.
    """
    eta = np.asarray(eta, dtype=float)
    u = _u(alpha, eta)
    q = _q(alpha, eta)
    r = np.exp(_log_mean_ratio(alpha, eta) / alpha)
    k = math.exp(math.log1p(alpha) / alpha)
    with np.errstate(invalid="ignore"):
        poly = 2.0 * (1.0 + eta) * eta * u + (eta * u) ** 2 - (1.0 + eta) ** 2 * (
            alpha + u + alpha * u
        )
        return (r * (1.0 + q) * u + k * poly) / alpha


def _dpsi0(alpha, eta):
    eta = np.asarray(eta, dtype=float)
    q = _q(alpha, eta)
    scale = (alpha + 1.0) / ((1.0 + eta) ** 2 * (1.0 + q) ** 2)
    return scale * stationarity_bracket(alpha, eta)


# ---------------------------------------------------------------------------
# public operations


def mean_value_power(alpha: float, eta):
    """Mean of |x|**alpha over (-eta, 1): (1 + eta**(alpha+1)) / ((alpha+1)(1+eta))."""
    alpha = check_alpha(alpha)
    eta = check_eta(eta)
    return _out(_mean(alpha, eta))


def branch_of(alpha: float, eta: float) -> Branch:
    """Which oscillation formula applies at eta, decided without solving for eta1.

    eta <= eta1 exactly when sign(alpha) * g(eta) <= 0, g being the defining
    function of eta1.
    """
    alpha = check_alpha(alpha)
    eta = float(check_eta(eta))
    if eta == 0.0:
        return Branch.A
    return Branch.A if math.copysign(1.0, alpha) * _g(alpha, eta) <= 0.0 else Branch.B


def _oscillation_a(alpha, eta, m):
    sgn = math.copysign(1.0, alpha)
    mpow = np.exp((alpha + 1.0) / alpha * np.log(m))
    return 2.0 * sgn / (1.0 + eta) * (alpha / (alpha + 1.0) * mpow - m + 1.0 / (alpha + 1.0))


def _oscillation_b(alpha, eta, m):
    mpow = np.exp((alpha + 1.0) / alpha * np.log(m))
    return 4.0 * abs(alpha) / ((1.0 + eta) * (alpha + 1.0)) * mpow


def mean_oscillation_power(alpha: float, eta: float, branch: Branch | None = None) -> float:
    """Mean oscillation of |x|**alpha over (-eta, 1).

    ``branch`` forces one of the two closed forms; by default the branch is
    chosen from the position of eta relative to eta1.
    """
    alpha = check_alpha(alpha)
    eta = float(check_eta(eta))
    if branch is None:
        branch = branch_of(alpha, eta)
    m = float(_mean(alpha, eta))
    if branch is Branch.A:
        return float(_oscillation_a(alpha, eta, m))
    return float(_oscillation_b(alpha, eta, m))


def relative_oscillation_power(alpha: float, eta: float) -> OscillationStats:
    m = mean_value_power(alpha, eta)
    om = mean_oscillation_power(alpha, eta)
    return OscillationStats(mean=m, oscillation=om, relative=om / m)


def norm_halfline(alpha: float) -> float:
    """GR "norm" of |x|**alpha on the half-line: 2|alpha| / (alpha+1)**((alpha+1)/alpha)."""
    alpha = check_alpha(alpha)
    return 2.0 * abs(alpha) * math.exp(-(alpha + 1.0) / alpha * math.log1p(alpha))


def norm_halfline_p(p: float) -> float:
    """2 (p-1)**(p-1) / p**p, the half-line norm indexed by the summability exponent."""
    if not p > 1.0:
        raise DomainError(f"p must exceed 1; got {p!r}")
    # log form; p**p overflows well before p = 1e4
    return 2.0 * math.exp((p - 1.0) * math.log(p - 1.0) - p * math.log(p))


def psi0(alpha: float, eta) -> PsiValue:
    alpha = check_alpha(alpha)
    eta = check_eta(eta)
    return PsiValue(_out(_psi0(alpha, eta)), Branch.A)


def psi1(alpha: float, eta) -> PsiValue:
    alpha = check_alpha(alpha)
    eta = check_eta(eta)
    return PsiValue(_out(_psi1(alpha, eta)), Branch.B)


def psi(alpha: float, eta: float, eta1: float) -> PsiValue:
    """Piecewise psi with the branch point eta1 supplied by the caller."""
    alpha = check_alpha(alpha)
    eta = float(check_eta(eta))
    eta1 = float(check_eta(eta1))
    a, b = float(_psi0(alpha, eta1)), float(_psi1(alpha, eta1))
    if abs(a - b) > 1e-8 * abs(a):
        raise ConsistencyError(
            f"psi0 and psi1 disagree at eta1={eta1!r} (alpha={alpha!r}): {a!r} vs {b!r}; "
            "eta1 is not the branch point for this alpha"
        )
    if eta <= eta1:
        return PsiValue(float(_psi0(alpha, eta)), Branch.A)
    return PsiValue(float(_psi1(alpha, eta)), Branch.B)


def dpsi0_deta(alpha: float, eta):
    """Partial derivative of psi0 in eta; +inf at eta=0 for alpha<0 and so rejected."""
    alpha = check_alpha(alpha)
    eta = check_eta(eta)
    if alpha < 0 and np.any(eta == 0.0):
        raise DomainError("d psi0/d eta diverges at eta=0 when alpha<0")
    return _out(_dpsi0(alpha, eta))
