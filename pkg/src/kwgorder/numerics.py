"""Numerically stable log/exp primitives used throughout the package.

Survival factors of the form (1 - F^s)^b are evaluated with these helpers;
naive powers lose all precision once F^s is within ~1e-12 of 0 or 1,
which happens routinely for the shape values this package deals with
(s down to 1e-3 and up to 1e3).
"""

from __future__ import annotations

import math

import numpy as np

_LN2 = float(np.log(2.0))

# below this, log F has degraded to subnormal granularity and the
# complementary (log-sf based) branch must take over
LOG_CDF_SATURATION = -1e-290


def _maybe_float(out):
    return float(out) if np.ndim(out) == 0 else out


def log1mexp(t):
    """log(1 - exp(t)) for t <= 0, accurate over the whole range.

    Splits at -ln 2: log1p(-exp(t)) for very negative t, log(-expm1(t))
    near zero.  t == 0 gives -inf, t == -inf gives 0.
    """
    t = np.asarray(t, dtype=float)
    small = t < -_LN2
    with np.errstate(divide="ignore", invalid="ignore"):
        lo = np.log1p(-np.exp(np.where(small, t, -1.0)))
        hi = np.log(-np.expm1(np.where(small, -1.0, t)))
    return _maybe_float(np.where(small, lo, hi))


def log_one_minus_pow(log_cdf, s, log_sf=None):
    """log(1 - F^s) from log F, switching to log(1-F) when F saturates.

    Once log F rounds to -0.0 (or into subnormal territory) the direct
    form log1mexp(s * log F) is garbage; with q = 1 - F available through
    ``log_sf`` the limit 1 - F^s ~ s*q gives log(1 - F^s) ~ log s + log q,
    accurate down to q = exp(-1e308).  Without ``log_sf`` the saturated
    region evaluates to -inf.
    """
    log_cdf = np.asarray(log_cdf, dtype=float)
    s = np.asarray(s, dtype=float)
    saturated = log_cdf >= LOG_CDF_SATURATION
    direct = log1mexp(np.where(saturated, -1.0, log_cdf) * s)
    if log_sf is None:
        limiting = np.full(np.broadcast_shapes(log_cdf.shape, s.shape), -np.inf)
    else:
        with np.errstate(invalid="ignore"):
            limiting = np.log(s) + np.asarray(log_sf, dtype=float)
    return _maybe_float(np.where(saturated, limiting, direct))


def _taylor_tail(t, coeff):
    """sum_k coeff(k) * t^k for k = 2..10 (Horner from the high end)."""
    acc = np.zeros_like(t)
    for k in range(10, 1, -1):
        acc = (acc + coeff(k)) * t
    return acc * t


def expm1_minus_t(t):
    """exp(t) - 1 - t, with a series branch to dodge the t^2/2 cancellation."""
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-2
    direct = np.expm1(np.where(small, 1.0, t)) - np.where(small, 1.0, t)
    series = _taylor_tail(np.where(small, t, 0.0), lambda k: 1.0 / math.factorial(k))
    return _maybe_float(np.where(small, series, direct))


def one_minus_w_plus_tw(t):
    """1 - e^t + t*e^t, the numerator kernel of phi3, stable near t = 0.

    Equals sum_{k>=2} (k-1)/k! * t^k; the direct form cancels to O(t^2).
    """
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-2
    td = np.where(small, 1.0, t)
    direct = -np.expm1(td) + td * np.exp(td)
    series = _taylor_tail(np.where(small, t, 0.0), lambda k: (k - 1) / math.factorial(k))
    return _maybe_float(np.where(small, series, direct))


def logsumexp(a, axis=None):
    """Stable log(sum(exp(a))); -inf entries contribute nothing."""
    a = np.asarray(a, dtype=float)
    amax = np.max(a, axis=axis, keepdims=True)
    amax = np.where(np.isfinite(amax), amax, 0.0)
    with np.errstate(divide="ignore"):
        out = np.log(np.sum(np.exp(a - amax), axis=axis, keepdims=True)) + amax
    if axis is None:
        return float(out)
    return np.squeeze(out, axis=axis)
