"""cointkit: cointegration analysis for short annual macro panels.

Unit-root classification, VAR lag selection, Johansen rank tests, VECM
estimation, residual diagnostics, and a seeded Monte Carlo harness, wired
together by a CSV-to-report pipeline.
"""

from .adf import (
    AdfResult,
    IntegrationDecision,
    adf_test,
    auto_lag,
    classify_integration,
    mackinnon_crit,
    mackinnon_pvalue,
)
from .diagnostics import (
    HeteroskedasticityResult,
    NormalityResult,
    multivariate_jb,
    white_system_test,
)
from .errors import CointkitError
from .johansen import (
    JohansenResult,
    LongRunEquation,
    RankDecision,
    johansen_critical_value,
    johansen_pvalue,
    max_eigen_statistic,
    normalize_long_run,
    rank_decision,
    reduced_rank_regression,
    trace_statistic,
)
from .linreg import RegressionFit, gaussian_loglik, ols_fit, residual_covariance
from .pipeline import PipelineReport, RunConfig, load_config, load_csv, run_pipeline
from .plot import render_plot
from .series import Dataset, LagDesign, Series, align, difference, lag_design, log_transform
from .simulate import DgpSpec, RejectionSummary, generate, rejection_rate
from .varsel import LagSelectionTable, VarFit, information_criteria, select_lag, var_fit
from .vecm import VecmModel, disequilibrium_correction, ec_series, vecm_fit

__version__ = "0.1.0"

__all__ = [
    "AdfResult",
    "CointkitError",
    "Dataset",
    "DgpSpec",
    "HeteroskedasticityResult",
    "IntegrationDecision",
    "JohansenResult",
    "LagDesign",
    "LagSelectionTable",
    "LongRunEquation",
    "NormalityResult",
    "PipelineReport",
    "RankDecision",
    "RegressionFit",
    "RejectionSummary",
    "RunConfig",
    "Series",
    "VarFit",
    "VecmModel",
    "adf_test",
    "align",
    "auto_lag",
    "classify_integration",
    "difference",
    "disequilibrium_correction",
    "ec_series",
    "gaussian_loglik",
    "generate",
    "information_criteria",
    "johansen_critical_value",
    "johansen_pvalue",
    "lag_design",
    "load_config",
    "load_csv",
    "log_transform",
    "mackinnon_crit",
    "mackinnon_pvalue",
    "max_eigen_statistic",
    "multivariate_jb",
    "normalize_long_run",
    "ols_fit",
    "rank_decision",
    "reduced_rank_regression",
    "rejection_rate",
    "render_plot",
    "residual_covariance",
    "run_pipeline",
    "select_lag",
    "trace_statistic",
    "var_fit",
    "vecm_fit",
    "white_system_test",
]
