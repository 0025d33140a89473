"""Gamma and log-gamma from Stirling's series with exact Bernoulli coefficients."""
from .bernoulli import BernoulliTable, bernoulli_number, bernoulli_oracle, build_table
from .errors import DomainError, PoleError, PreconditionError, RangeError
from .gamma import EvalConfig, EvalResult, gamma, log_gamma, log_gamma_many, recursion_residual
from .kernels import BACKEND
from .stirling import (
    StirlingSeries,
    TruncationPolicy,
    build_series,
    default_series,
    error_estimate,
    eval_log_gamma_raw,
    smallest_term_index,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BernoulliTable",
    "DomainError",
    "EvalConfig",
    "EvalResult",
    "PoleError",
    "PreconditionError",
    "RangeError",
    "StirlingSeries",
    "TruncationPolicy",
    "bernoulli_number",
    "bernoulli_oracle",
    "build_series",
    "build_table",
    "default_series",
    "error_estimate",
    "eval_log_gamma_raw",
    "gamma",
    "log_gamma",
    "log_gamma_many",
    "recursion_residual",
    "smallest_term_index",
]
