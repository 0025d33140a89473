"""log Gamma and Gamma on the right half-plane.

Arguments with small real part are first pushed right with
``log Gamma(z) = log Gamma(z + m) - sum_{k<m} log(z + k)``, after which the
Stirling series is summed at ``z + m``. Each subtracted logarithm has
``Re(z + k) > 0`` so principal branches add up to the continuous log Gamma.
"""
from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, field
from numbers import Real

import numpy as np

from . import kernels
from .errors import DomainError, PoleError, PreconditionError, RangeError
from .stirling import StirlingSeries, TruncationPolicy, default_series

__all__ = [
    "EvalConfig",
    "EvalResult",
    "gamma",
    "log_gamma",
    "log_gamma_many",
    "recursion_residual",
]

_LOG_MAX = math.log(sys.float_info.max)


@dataclass(frozen=True)
class EvalConfig:
    shift_threshold: float = 8.0
    policy: TruncationPolicy = field(default_factory=TruncationPolicy)
    series: StirlingSeries = field(default_factory=default_series)

    def __post_init__(self):
        if not self.shift_threshold >= 1:
            raise ValueError("shift_threshold must be at least 1")
        if self.policy.cap > self.series.max_terms:
            raise PreconditionError(
                f"policy cap {self.policy.cap} exceeds series length {self.series.max_terms}"
            )

    @property
    def fixed_terms(self) -> int:
        """Fixed term count for the kernels, -1 for smallest-term truncation."""
        return self.policy.terms if self.policy.mode == "fixed" else -1


@dataclass(frozen=True)
class EvalResult:
    value: complex | float
    error_estimate: float
    terms_used: int
    shift_applied: int


_DEFAULT_CONFIG = None


def _config(cfg):
    global _DEFAULT_CONFIG
    if cfg is not None:
        return cfg
    if _DEFAULT_CONFIG is None:
        _DEFAULT_CONFIG = EvalConfig()
    return _DEFAULT_CONFIG


def _check_domain(z: complex) -> None:
    if z == 0:
        raise PoleError("Gamma has a pole at z=0")
    if not z.real > 0 or cmath.isinf(z) or cmath.isnan(z):
        raise DomainError(f"z={z!r} is outside supported sector (need finite z with Re z > 0)")


def log_gamma(z, cfg: EvalConfig | None = None) -> EvalResult:
    """log Gamma(z) for Re z > 0.

    Real input yields a real ``value``; complex input a complex one on the
    branch continuous from the positive real axis.

    >>> round(log_gamma(10).value, 9)
    12.801827480
    """
    cfg = _config(cfg)
    real = isinstance(z, Real)
    zc = complex(z)
    _check_domain(zc)
    s = cfg.series
    value, err, n, m = kernels.log_gamma_reduced(
        zc, cfg.shift_threshold, s.floats, s.log_abs, s.log_C, cfg.policy.cap, cfg.fixed_terms
    )
    return EvalResult(value.real if real else value, err, n, m)


def gamma(z, cfg: EvalConfig | None = None) -> EvalResult:
    """Gamma(z) = exp(log Gamma(z)) for Re z > 0.

    Raises :class:`RangeError` carrying the log-domain value when the
    result overflows a double.
    """
    lg = log_gamma(z, cfg)
    v = lg.value
    re = v.real if isinstance(v, complex) else v
    if re > _LOG_MAX:
        raise RangeError(f"Gamma({z!r}) overflows; log Gamma = {v!r}", log_value=v)
    value = cmath.exp(v) if isinstance(v, complex) else math.exp(v)
    return EvalResult(value, abs(value) * lg.error_estimate, lg.terms_used, lg.shift_applied)


def recursion_residual(z, cfg: EvalConfig | None = None) -> float:
    """``|Gamma(z+1) - z Gamma(z)| / |Gamma(z+1)|`` from this module's own gamma."""
    g1 = gamma(z + 1, cfg).value
    g0 = gamma(z, cfg).value
    return abs(g1 - z * g0) / abs(g1)


def log_gamma_many(zs, cfg: EvalConfig | None = None):
    """Vectorised :func:`log_gamma` over an array of arguments.

    Returns ``(values, error_estimates, terms_used, shifts)`` as arrays of
    the input's shape; values are complex128.
    """
    cfg = _config(cfg)
    arr = np.asarray(zs, dtype=np.complex128)
    bad_mask = ~(arr.real > 0) | ~np.isfinite(arr)
    if bad_mask.any():
        bad = arr[bad_mask].flat[0]
        if bad == 0:
            raise PoleError("Gamma has a pole at z=0")
        raise DomainError(f"z={complex(bad)!r} is outside supported sector")
    s = cfg.series
    return kernels.log_gamma_many(
        arr, cfg.shift_threshold, s.floats, s.log_abs, s.log_C, cfg.policy.cap, cfg.fixed_terms
    )
