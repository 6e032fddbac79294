"""Table, figure-series and verification reports behind the command line."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import analytics as an
from . import bmo, oracle, solvers
from .errors import DomainError, GRError

TABLE_P = (1.15, 1.20, 1.33, 1.50, 1.67, 2.00, 3.00, 6.00, 11.00, 21.00, 101.00, 1001.00, 9999.00)
# printed alpha column; at p=1.67 it reads 1.4993 although 1/(p-1) = 1.4925
TABLE_ALPHA = (6.6667, 5.0, 3.0303, 2.0, 1.4993, 1.0, 0.5, 0.2, 0.1, 0.05, 0.01, 0.001, 0.0001)
FIGURE_P = TABLE_P[:10]
PSI_ALPHAS = (1.0, -0.5, 0.5)
PSI_POINTS = 1000

TABLE_COLUMNS = (
    "p", "eps_halfline", "eps_realline", "c_eps",
    "alpha_plus", "eta_max_plus", "alpha_minus", "eta_max_minus",
)
_DECIMALS = {
    "p": 2, "eps_halfline": 4, "eps_realline": 4, "c_eps": 6,
    "alpha_plus": 4, "eta_max_plus": 4, "alpha_minus": 4, "eta_max_minus": 4,
}


@dataclass(frozen=True)
class TableRow:
    p: float
    eps_halfline: float
    eps_realline: float
    c_eps: float
    alpha_plus: float
    eta_max_plus: float
    alpha_minus: float
    eta_max_minus: float


@dataclass(frozen=True)
class SeriesPoint:
    x: float
    y: float
    series_id: str


def table_row(p: float | None = None, alpha: float | None = None) -> TableRow:
    """One table line, driven either by p or by the positive exponent alpha."""
    if (p is None) == (alpha is None):
        raise ValueError("give exactly one of p, alpha")
    if alpha is None:
        if not p > 1.0:
            raise DomainError(f"p must exceed 1; got {p!r}")
        alpha = an.alpha_plus(p)
    else:
        alpha = an.check_alpha(alpha)
        if alpha <= 0:
            raise DomainError(f"row-driving alpha must be positive; got {alpha!r}")
        p = 1.0 + 1.0 / alpha
    plus = solvers.norm_realline(alpha)
    minus = solvers.norm_realline(an.alpha_minus(p))
    return TableRow(
        p=p,
        eps_halfline=plus.eps_halfline,
        eps_realline=plus.eps_realline,
        c_eps=plus.ratio,
        alpha_plus=alpha,
        eta_max_plus=plus.eta_max,
        alpha_minus=an.alpha_minus(p),
        eta_max_minus=minus.eta_max,
    )


def compute_table(
    p_list: Sequence[float] | None = None,
    alpha_list: Sequence[float] | None = None,
) -> list[TableRow | GRError]:
    """Rows in input order; a failing row is returned as its exception."""
    if alpha_list is not None:
        drivers = [dict(alpha=a) for a in alpha_list]
    else:
        drivers = [dict(p=p) for p in (TABLE_P if p_list is None else p_list)]
    rows: list[TableRow | GRError] = []
    for kw in drivers:
        try:
            rows.append(table_row(**kw))
        except GRError as exc:
            rows.append(exc)
    return rows


def _fmt(name: str, value: float, raw: bool) -> str:
    return repr(float(value)) if raw else f"{value:.{_DECIMALS[name]}f}"


def render_table(rows: Sequence[TableRow | GRError], fmt: str = "csv", raw: bool = False,
                 meta: dict | None = None) -> str:
    if fmt == "json":
        out = []
        for r in rows:
            if isinstance(r, GRError):
                out.append({"error": str(r)})
            elif raw:
                out.append(asdict(r))
            else:
                out.append({k: round(v, _DECIMALS[k]) for k, v in asdict(r).items()})
        return json.dumps({"meta": meta or {}, "rows": out}, indent=2) + "\n"
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        if isinstance(r, GRError):
            w.writerow([f"error: {r}"] + [""] * (len(TABLE_COLUMNS) - 1))
        else:
            w.writerow([_fmt(k, v, raw) for k, v in asdict(r).items()])
    return buf.getvalue()


def parse_table_csv(text: str) -> list[dict[str, float]]:
    return [{k: float(v) for k, v in rec.items()} for rec in csv.DictReader(io.StringIO(text))]


# ---------------------------------------------------------------------------
# figure series


def figure_series(p_list: Sequence[float] = FIGURE_P) -> dict[str, list[SeriesPoint]]:
    """The four plot-data files keyed by file stem."""
    norms, inverse, growth, psi_curves = [], [], [], []
    for p in p_list:
        r = solvers.norm_realline(an.alpha_plus(p))
        norms += [SeriesPoint(p, r.eps_halfline, "eps_halfline_vs_p"),
                  SeriesPoint(p, r.eps_realline, "eps_realline_vs_p")]
        inverse += [SeriesPoint(r.eps_halfline, p, "p_vs_eps_halfline"),
                    SeriesPoint(r.eps_realline, p, "p_vs_eps_realline")]
    for p in TABLE_P:
        r = solvers.norm_realline(an.alpha_plus(p))
        growth.append(SeriesPoint(p, r.ratio, "ratio_vs_p"))
    for p in TABLE_P:
        eps = an.norm_halfline_p(p)
        sweep = solvers.extension_factor_sweep([eps])[0]
        growth.append(SeriesPoint(eps, sweep.c_eps, "c_eps_vs_eps"))
    etas = np.linspace(0.0, 1.0, PSI_POINTS)
    for alpha in PSI_ALPHAS:
        eta1 = solvers.solve_eta1(alpha).root
        sid = f"psi_alpha_{alpha:g}"
        for eta in etas:
            psi_curves.append(SeriesPoint(float(eta), an.psi(alpha, float(eta), eta1).value, sid))
    return {
        "figure1_norms": norms,
        "figure1_inverse": inverse,
        "figure2_growth": growth,
        "figure3_psi": psi_curves,
    }


def render_series(points: Iterable[SeriesPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("series_id", "x", "y"))
    for pt in points:
        if not (math.isfinite(pt.x) and math.isfinite(pt.y)):
            raise ValueError(f"non-finite point in series {pt.series_id}: {pt}")
        w.writerow((pt.series_id, repr(float(pt.x)), repr(float(pt.y))))
    return buf.getvalue()


def write_figures(out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc}") from exc
    written = []
    for stem, points in figure_series().items():
        path = out / f"{stem}.csv"
        try:
            with open(path, "w", newline="\n", encoding="utf-8") as fh:
                fh.write(render_series(points))
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc}") from exc
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# verification suite

ORACLE_ALPHAS = (-0.8696, -0.5, -0.1667, 0.2, 0.5, 1.0, 2.0, 5.0)
SYMMETRY_P = (1.5, 2.0, 3.0, 6.0)
DERIVATIVE_ALPHAS = (-0.5, 0.5, 1.0, 2.0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    margin: float
    detail: str = ""


def _oracle_eta_grid(alpha: float) -> list[float]:
    return [0.0, 0.1, solvers.solve_eta1(alpha).root, 0.7, 1.0]


def check_oracle_agreement(tol: float) -> CheckResult:
    worst = 0.0
    for alpha in ORACLE_ALPHAS:
        f = oracle.power_function(alpha)
        for eta in _oracle_eta_grid(alpha):
            m = oracle.oracle_mean(f, -eta, 1.0, tol)
            o = oracle.oracle_oscillation(f, -eta, 1.0, tol)
            worst = max(worst,
                        abs(m.value - an.mean_value_power(alpha, eta)),
                        abs(o.value - an.mean_oscillation_power(alpha, eta)))
    return CheckResult("oracle_vs_closed_form", worst <= 1e-7, 1e-7 - worst,
                       f"max abs deviation {worst:.3e}")


def symmetry_pairs(n: int = 20):
    """(alpha, eta) grid for the alpha -> -alpha/(alpha+1) symmetry."""
    alphas = np.concatenate((np.linspace(-0.9, -0.05, n // 2), np.linspace(0.05, 5.0, n - n // 2)))
    etas = np.linspace(0.0, 1.0, n)
    return [(float(a), float(e)) for a in alphas for e in etas]


def check_symmetry() -> CheckResult:
    worst = 0.0
    cache: dict[float, float] = {}

    def eta1(a):
        if a not in cache:
            cache[a] = solvers.solve_eta1(a).root
        return cache[a]

    for alpha, eta in symmetry_pairs():
        beta = an.dual_alpha(alpha)
        lhs = an.psi(beta, eta ** (alpha + 1.0), eta1(beta)).value
        rhs = an.psi(alpha, eta, eta1(alpha)).value
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return CheckResult("psi_symmetry", worst <= 1e-10, 1e-10 - worst, f"max rel deviation {worst:.3e}")


def check_maxima_equality() -> CheckResult:
    worst = 0.0
    for p in SYMMETRY_P:
        a = solvers.norm_realline(an.alpha_plus(p)).ratio
        b = solvers.norm_realline(an.alpha_minus(p)).ratio
        worst = max(worst, abs(a - b) / a)
    return CheckResult("max_psi0_equality", worst <= 1e-9, 1e-9 - worst, f"max rel deviation {worst:.3e}")


def check_derivative(h: float = 1e-6) -> CheckResult:
    worst = 0.0
    for alpha in DERIVATIVE_ALPHAS:
        eta1 = solvers.solve_eta1(alpha).root
        for eta in np.linspace(0.0, eta1, 52)[1:-1]:
            eta = float(eta)
            fd = (an.psi0(alpha, eta + h).value - an.psi0(alpha, eta - h).value) / (2 * h)
            worst = max(worst, abs(fd - an.dpsi0_deta(alpha, eta)))
    return CheckResult("dpsi0_finite_difference", worst <= 1e-5, 1e-5 - worst, f"max abs deviation {worst:.3e}")


def check_reflection(tol: float) -> CheckResult:
    cases = [
        ("|x|", oracle.power_function(1.0), 1.0),
        ("|x|^-1/2", oracle.power_function(-0.5), 2.0),
        ("const", oracle.constant_function(1.0), 1.0),
    ]
    worst = math.inf
    failed = []
    for label, f, b in cases:
        ok, margin = oracle.check_reflection_inequality(f, b, 50, tol)
        worst = min(worst, margin)
        if not ok:
            failed.append(label)
    return CheckResult("reflection_inequality", not failed, worst,
                       "failed: " + ", ".join(failed) if failed else "all functions")


def check_oracle_norm(tol: float, grid_size: int) -> CheckResult:
    est = oracle.oracle_norm_realline(oracle.power_function(1.0), grid_size, tol)
    exact = solvers.norm_realline(1.0).eps_realline
    dev = abs(est.value - exact)
    return CheckResult("oracle_norm_realline", dev <= 1e-4, 1e-4 - dev,
                       f"grid sup {est.value:.8f} vs closed form {exact:.8f}, bound {est.abs_error_bound:.2e}")


def check_bounds() -> CheckResult:
    worst_rel = 0.0
    for alpha, eta in symmetry_pairs():
        worst_rel = max(worst_rel, an.relative_oscillation_power(alpha, eta).relative)
    cs = [r.c_eps for r in solvers.extension_factor_sweep([an.norm_halfline_p(p) for p in TABLE_P])]
    ok = worst_rel <= 2.0 and all(1.0 <= c <= 2.0 for c in cs)
    return CheckResult("bounds", ok, min(2.0 - worst_rel, min(cs) - 1.0, 2.0 - max(cs)),
                       f"max relative oscillation {worst_rel:.4f}, C_eps in [{min(cs):.6f}, {max(cs):.6f}]")


def run_verification(tol: float = 1e-10, grid_size: int = 10_000) -> list[CheckResult]:
    checks: list[tuple[str, Callable[[], CheckResult]]] = [
        ("oracle_vs_closed_form", lambda: check_oracle_agreement(tol)),
        ("oracle_norm_realline", lambda: check_oracle_norm(tol, grid_size)),
        ("psi_symmetry", check_symmetry),
        ("max_psi0_equality", check_maxima_equality),
        ("dpsi0_finite_difference", check_derivative),
        ("reflection_inequality", lambda: check_reflection(tol)),
        ("bounds", check_bounds),
    ]
    results = []
    for name, fn in checks:
        try:
            results.append(fn())
        except GRError as exc:
            results.append(CheckResult(name, False, -math.inf, f"{type(exc).__name__}: {exc}"))
    return results


def bmo_summary(smallest_eps: float = solvers.DEFAULT_SMALLEST_EPS) -> dict[str, float]:
    rep = bmo.bmo_norm_f0()
    c = solvers.limit_constant(smallest_eps)
    return {
        "t_root": rep.t_root,
        "norm_halfline": rep.norm_halfline,
        "norm_realline": rep.norm_realline,
        "c0": rep.c0,
        "c": c,
        "abs_diff": abs(c - rep.c0),
    }
