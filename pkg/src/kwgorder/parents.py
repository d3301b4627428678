"""Parent distributions: the base cdf F from which a Kw-G law is generated.

Built-ins cover the uniform parent (so same-parent checks can run in the
variable u = F(x)), the exponential, and the Weibull family written as
F(x) = 1 - exp(-rate_coeff * x^shape).  Anything absolutely continuous can
be plugged in by constructing a ParentDistribution directly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ParameterDomainError
from .numerics import log1mexp


@dataclass(frozen=True)
class ParentDistribution:
    """An absolutely continuous distribution on an open interval.

    ``log_cdf`` and ``log_sf`` are required to be stable forms: they carry
    the information that plain ``cdf`` loses when F(x) is within an ulp of
    0 or 1, and every survival-power downstream is computed from them.
    Instances are immutable and safe to share across workers.
    """

    name: str
    support: tuple[float, float]
    cdf: Callable[[np.ndarray], np.ndarray]
    pdf: Callable[[np.ndarray], np.ndarray]
    log_cdf: Callable[[np.ndarray], np.ndarray]
    log_pdf: Callable[[np.ndarray], np.ndarray]
    log_sf: Callable[[np.ndarray], np.ndarray]
    quantile: Callable[[np.ndarray], np.ndarray]
    params: tuple = field(default_factory=tuple)

    def __repr__(self):
        return self.name


def make_uniform01() -> ParentDistribution:
    """Uniform parent on (0,1): F(x) = x, so Kw-G reduces to the plain Kw law."""

    def cdf(x):
        return np.clip(np.asarray(x, dtype=float), 0.0, 1.0)

    def pdf(x):
        x = np.asarray(x, dtype=float)
        return np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0)

    def log_cdf(x):
        with np.errstate(divide="ignore"):
            return np.log(cdf(x))

    def log_pdf(x):
        with np.errstate(divide="ignore"):
            return np.log(pdf(x))

    def log_sf(x):
        return np.log1p(-cdf(x))

    def quantile(p):
        return np.asarray(p, dtype=float)

    return ParentDistribution(
        name="uniform01",
        support=(0.0, 1.0),
        cdf=cdf,
        pdf=pdf,
        log_cdf=log_cdf,
        log_pdf=log_pdf,
        log_sf=log_sf,
        quantile=quantile,
    )


def make_exponential(rate: float) -> ParentDistribution:
    """Exponential parent: F(x) = 1 - exp(-rate*x) on (0, inf)."""
    if not (rate > 0.0) or not math.isfinite(rate):
        raise ParameterDomainError(f"exponential rate must be positive, got {rate!r}")
    return make_weibull(1.0, rate, name=f"exponential({rate:g})")


def make_weibull(shape: float, rate_coeff: float, name: str | None = None) -> ParentDistribution:
    """Weibull parent: F(x) = 1 - exp(-rate_coeff * x^shape) on (0, inf)."""
    if not (shape > 0.0) or not math.isfinite(shape):
        raise ParameterDomainError(f"weibull shape must be positive, got {shape!r}")
    if not (rate_coeff > 0.0) or not math.isfinite(rate_coeff):
        raise ParameterDomainError(f"weibull rate_coeff must be positive, got {rate_coeff!r}")
    k, c = float(shape), float(rate_coeff)

    def cum_hazard(x):
        x = np.maximum(np.asarray(x, dtype=float), 0.0)
        return c * x**k

    def cdf(x):
        return -np.expm1(-cum_hazard(x))

    def log_sf(x):
        return -cum_hazard(x)

    def log_cdf(x):
        return log1mexp(-cum_hazard(x))

    def pdf(x):
        x = np.asarray(x, dtype=float)
        xm = np.where(x < 0.0, 1.0, x)
        with np.errstate(divide="ignore"):
            out = c * k * xm ** (k - 1.0) * np.exp(-cum_hazard(xm))
        return np.where(x < 0.0, 0.0, out)

    def log_pdf(x):
        x = np.asarray(x, dtype=float)
        xm = np.where(x <= 0.0, 1.0, x)
        out = math.log(c * k) + (k - 1.0) * np.log(xm) - cum_hazard(xm)
        if k == 1.0:
            return np.where(x < 0.0, -np.inf, out)
        edge = np.inf if k < 1.0 else -np.inf
        return np.where(x < 0.0, -np.inf, np.where(x == 0.0, edge, out))

    def quantile(p):
        p = np.asarray(p, dtype=float)
        return (-np.log1p(-p) / c) ** (1.0 / k)

    return ParentDistribution(
        name=name or f"weibull({shape:g}, {rate_coeff:g})",
        support=(0.0, math.inf),
        cdf=cdf,
        pdf=pdf,
        log_cdf=log_cdf,
        log_pdf=log_pdf,
        log_sf=log_sf,
        quantile=quantile,
        params=(k, c),
    )


_PARENT_RE = re.compile(r"^\s*([a-zA-Z_][a-zA-Z0-9_]*)\s*(?:\(([^)]*)\))?\s*$")

_FACTORIES: dict[str, tuple[Callable[..., ParentDistribution], int]] = {
    "uniform01": (make_uniform01, 0),
    "exponential": (make_exponential, 1),
    "weibull": (make_weibull, 2),
}


def register_parent(name: str, factory: Callable[..., ParentDistribution], n_args: int) -> None:
    """Register an additional parent family for scenario files."""
    _FACTORIES[name] = (factory, n_args)


def parse_parent(spec: str) -> ParentDistribution:
    """Build a parent from its scenario-file identifier.

    Accepted forms: ``uniform01``, ``exponential(rate)``,
    ``weibull(shape, rate_coeff)`` plus anything registered.
    """
    m = _PARENT_RE.match(spec)
    if not m:
        raise ParameterDomainError(f"cannot parse parent spec {spec!r}")
    name, argstr = m.group(1), m.group(2)
    if name not in _FACTORIES:
        known = ", ".join(sorted(_FACTORIES))
        raise ParameterDomainError(f"unknown parent {name!r} (known: {known})")
    factory, n_args = _FACTORIES[name]
    args = []
    if argstr and argstr.strip():
        try:
            args = [float(v) for v in argstr.split(",")]
        except ValueError as exc:
            raise ParameterDomainError(f"bad parent arguments in {spec!r}: {exc}") from exc
    if len(args) != n_args:
        raise ParameterDomainError(
            f"parent {name!r} takes {n_args} argument(s), got {len(args)} in {spec!r}"
        )
    return factory(*args)
