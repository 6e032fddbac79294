"""Gurov-Reshetnyak norms of power functions and the even-extension constant."""
from .analytics import (
    Branch,
    OscillationStats,
    PsiValue,
    dpsi0_deta,
    mean_oscillation_power,
    mean_value_power,
    norm_halfline,
    psi,
    psi0,
    psi1,
    relative_oscillation_power,
)
from .bmo import BmoReport, bmo_norm_f0, solve_bmo_t
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    GRError,
    LevelCrossingError,
)
from .rootfind import RootResult
from .solvers import (
    NormReport,
    extension_factor_sweep,
    limiting_exponent,
    norm_realline,
    quintic_check,
    solve_eta1,
    solve_eta_max,
)

__version__ = "0.1.0"
