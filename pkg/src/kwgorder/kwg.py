"""Single-variable Kw-G distribution functions.

A Kw-G(alpha, beta, F) random variable has cdf G(x) = 1 - (1 - F(x)^alpha)^beta
over a parent cdf F.  All powers run through the parent's log forms, so the
functions stay accurate for shape values as extreme as 1e-3 .. 1e3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError, SurvivalUnderflowError
from .numerics import log1mexp, log_one_minus_pow
from .parents import ParentDistribution


@dataclass(frozen=True)
class KwGShape:
    """Shape-parameter pair (alpha, beta), both strictly positive."""

    alpha: float
    beta: float

    def __post_init__(self):
        for label, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not (v > 0.0) or not math.isfinite(v):
                raise ParameterDomainError(f"{label} must be a positive real, got {v!r}")


def kwg_log_sf(shape: KwGShape, parent: ParentDistribution, x):
    """log of the survival factor (1 - F(x)^alpha)^beta."""
    lF = parent.log_cdf(x)
    return shape.beta * log_one_minus_pow(lF, shape.alpha, log_sf=parent.log_sf(x))


def kwg_sf(shape: KwGShape, parent: ParentDistribution, x):
    """Survival function (1 - F(x)^alpha)^beta."""
    return np.exp(kwg_log_sf(shape, parent, x))


def kwg_cdf(shape: KwGShape, parent: ParentDistribution, x):
    """Distribution function 1 - (1 - F(x)^alpha)^beta."""
    return -np.expm1(kwg_log_sf(shape, parent, x))


def kwg_log_pdf(shape: KwGShape, parent: ParentDistribution, x):
    """log density: log(alpha*beta) + (alpha-1)log F + log f + (beta-1)log(1-F^alpha)."""
    a, b = shape.alpha, shape.beta
    lF = parent.log_cdf(x)
    l1mFa = log_one_minus_pow(lF, a, log_sf=parent.log_sf(x))
    with np.errstate(invalid="ignore"):
        out = math.log(a * b) + (a - 1.0) * lF + parent.log_pdf(x) + (b - 1.0) * l1mFa
    return out


def kwg_pdf(shape: KwGShape, parent: ParentDistribution, x):
    """Density of the Kw-G law; nonnegative, integrates to one over the support."""
    return np.exp(kwg_log_pdf(shape, parent, x))


def kwg_hazard(shape: KwGShape, parent: ParentDistribution, x):
    """Hazard rate alpha*beta*F^(alpha-1)*f / (1 - F^alpha).

    Raises SurvivalUnderflowError where the survival factor is not
    representable, rather than returning inf.
    """
    a, b = shape.alpha, shape.beta
    lF = parent.log_cdf(x)
    l1mFa = log_one_minus_pow(lF, a, log_sf=parent.log_sf(x))
    if np.any(np.isneginf(l1mFa)):
        bad = np.argmax(np.isneginf(np.atleast_1d(l1mFa)))
        raise SurvivalUnderflowError(np.atleast_1d(np.asarray(x, dtype=float))[bad])
    log_h = math.log(a * b) + (a - 1.0) * lF + parent.log_pdf(x) - l1mFa
    return np.exp(log_h)


def kwg_quantile(shape: KwGShape, parent: ParentDistribution, p):
    """Closed-form inverse of the cdf: parent.quantile((1-(1-p)^(1/beta))^(1/alpha))."""
    p = np.asarray(p, dtype=float)
    if np.any(p <= 0.0) or np.any(p >= 1.0):
        raise ParameterDomainError("quantile argument must lie strictly inside (0, 1)")
    # (1 - (1-p)^(1/beta))^(1/alpha) via logs: exp(log1mexp(log1p(-p)/beta)/alpha)
    from .numerics import log1mexp

    inner = np.exp(log1mexp(np.log1p(-p) / shape.beta) / shape.alpha)
    out = parent.quantile(inner)
    return float(out) if np.ndim(out) == 0 and np.ndim(p) == 0 else out
