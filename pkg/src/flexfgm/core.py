"""Evaluation of the modified FGM copula

    C(u, v; a, b) = uv {1 + a (1-u)(1-v)(1+bu)(1+bv)}

and of its limit as ``b -> +-inf`` with ``a = alpha / (1+b)^2``.

Both variants are written as ``C = uv + w g(u) g(v)`` with density
``c = 1 + w f(u) f(v)``, where ``f = -g'``.  For the finite family
``w = a``, ``g(u) = u(1-u)(1+bu)``; for the limit ``w = alpha``,
``g(u) = u^2 (1-u)``.

All evaluation functions broadcast over numpy arrays.  None of them check
that the parameters give a valid copula; use :mod:`flexfgm.region` or
:func:`flexfgm.certifier.certify` for that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ConvergenceError, DomainError, InvalidParametersError
from .region import RegionLabel, density_admissible_interval, in_omega

__all__ = [
    "CopulaParams",
    "IFGMLimit",
    "UnitPoint",
    "kernel_f",
    "kernel_g",
    "cdf",
    "pdf",
    "conditional_cdf",
    "conditional_quantile",
    "check_density_admissible",
]

QUANTILE_TOL = 1e-12
QUANTILE_MAXITER = 200
# relative slack when comparing a against a computed boundary of the density
# interval, so that exact boundary points are not rejected by rounding
_BOUNDARY_SLACK = 1e-12


def _unit(x, name="u"):
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0.0) & (x <= 1.0))):
        raise DomainError(f"{name} must lie in [0, 1]")
    return x


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class CopulaParams:
    """Shape pair ``(a, b)``.

    Construction only requires finite values; membership in the admissible
    region is a separate question (see :meth:`validated`).
    """

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidParametersError(f"a and b must be finite, got ({self.a}, {self.b})")

    @classmethod
    def validated(cls, a: float, b: float) -> "CopulaParams":
        """Build parameters, rejecting points outside Omega."""
        if in_omega(a, b) is RegionLabel.Outside:
            raise InvalidParametersError(f"(a, b) = ({a}, {b}) is outside Omega")
        return cls(float(a), float(b))

    @property
    def weight(self) -> float:
        return self.a

    def f(self, u):
        b = self.b
        return 3.0 * b * u * u + 2.0 * u * (1.0 - b) - 1.0

    def g(self, u):
        return u * (1.0 - u) * (1.0 + self.b * u)


@dataclass(frozen=True)
class IFGMLimit:
    """Limit ``b -> +-inf`` of ``C(u, v; alpha/(1+b)^2, b)``.

    Equals the iterated FGM copula ``uv {1 + alpha uv (1-u)(1-v)}``.
    """

    alpha: float

    def __post_init__(self):
        if not -1.0 <= self.alpha <= 1.0:
            raise InvalidParametersError(f"alpha must lie in [-1, 1], got {self.alpha}")

    @property
    def weight(self) -> float:
        return self.alpha

    def f(self, u):
        return 3.0 * u * u - 2.0 * u

    def g(self, u):
        return u * u * (1.0 - u)


Params = Union[CopulaParams, IFGMLimit]


@dataclass(frozen=True)
class UnitPoint:
    u: float
    v: float

    def __post_init__(self):
        if not (0.0 <= self.u <= 1.0 and 0.0 <= self.v <= 1.0):
            raise DomainError(f"({self.u}, {self.v}) is not in the unit square")

    def __iter__(self):
        yield self.u
        yield self.v


def kernel_f(u, b: float):
    """``f(u, b) = 3bu^2 + 2u(1-b) - 1``, the factor of the copula density."""
    u = _unit(u)
    return _out(3.0 * b * u * u + 2.0 * u * (1.0 - b) - 1.0)


def kernel_g(u, b: float):
    """``g(u, b) = u(1-u)(1+bu)``; ``dg/du = -f(u, b)``."""
    u = _unit(u)
    return _out(u * (1.0 - u) * (1.0 + b * u))


def cdf(params: Params, u, v):
    """Copula distribution function ``C(u, v)``."""
    u, v = _unit(u, "u"), _unit(v, "v")
    return _out(u * v + params.weight * params.g(u) * params.g(v))


def pdf(params: Params, u, v):
    """Copula density ``1 + a f(u) f(v)``.

    Negative values are returned as-is for inadmissible parameters.
    """
    u, v = _unit(u, "u"), _unit(v, "v")
    return _out(1.0 + params.weight * params.f(u) * params.f(v))


def conditional_cdf(params: Params, u, v):
    """``dC/du``, the distribution function of V given U = u."""
    u, v = _unit(u, "u"), _unit(v, "v")
    return _out(v - params.weight * params.f(u) * params.g(v))


def check_density_admissible(params: Params) -> None:
    """Raise :class:`InvalidParametersError` unless the density is nonnegative."""
    if isinstance(params, IFGMLimit):
        # f = 3u^2 - 2u spans [-1/3, 1]: admissible for alpha in [-1, 3]
        return
    lo, hi = density_admissible_interval(params.b)
    slack = _BOUNDARY_SLACK * max(1.0, abs(params.a))
    if not lo - slack <= params.a <= hi + slack:
        raise InvalidParametersError(
            f"density of (a, b) = ({params.a}, {params.b}) is negative somewhere; "
            f"a must lie in [{lo}, {hi}]"
        )


def conditional_quantile(params: Params, u, prob, *, tol=QUANTILE_TOL, maxiter=QUANTILE_MAXITER):
    """Invert :func:`conditional_cdf` in ``v``.

    Safeguarded Newton iteration on ``F(v | u) - prob`` inside a shrinking
    bracket ``[lo, hi]``; whenever the Newton step leaves the bracket or the
    density vanishes the step is replaced by bisection.

    Parameters
    ----------
    params : CopulaParams or IFGMLimit
        Must have a nonnegative density.
    u, prob : float or array_like
        Conditioning value and target probability, both in [0, 1].
        Broadcast against each other.

    Returns
    -------
    float or ndarray
        ``v`` with ``|F(v | u) - prob| <= tol``.

    Raises
    ------
    InvalidParametersError
        If the density is negative somewhere.
    ConvergenceError
        If ``tol`` is not met in ``maxiter`` iterations.
    """
    check_density_admissible(params)
    u, p = np.broadcast_arrays(_unit(u, "u"), _unit(prob, "prob"))
    shape = u.shape
    u, p = u.reshape(-1), p.reshape(-1)
    w = params.weight
    fu = params.f(u)

    v = p.copy()  # exact for w == 0 and at both endpoints
    lo = np.zeros_like(v)
    hi = np.ones_like(v)
    last_step = np.full_like(v, np.inf)
    xtol = 4.0 * np.finfo(float).eps
    active = np.ones(v.shape, dtype=bool)

    for _ in range(maxiter):
        idx = np.nonzero(active)
        vi, pi, fi = v[idx], p[idx], fu[idx]
        resid = vi - w * fi * params.g(vi) - pi
        small = np.abs(resid) <= tol
        done = (resid == 0.0) | (small & ((last_step[idx] <= xtol) | (hi[idx] - lo[idx] <= xtol)))
        lo_i = np.where(resid < 0.0, vi, lo[idx])
        hi_i = np.where(resid > 0.0, vi, hi[idx])
        dens = 1.0 + w * fi * params.f(vi)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = vi - resid / dens
        ok = (dens > 0.0) & (newton > lo_i) & (newton < hi_i)
        new_v = np.where(ok, newton, 0.5 * (lo_i + hi_i))
        new_v = np.where(done, vi, new_v)
        last_step[idx] = np.abs(new_v - vi)
        v[idx], lo[idx], hi[idx] = new_v, lo_i, hi_i
        active[idx] = ~done
        if not active.any():
            break

    resid = np.abs(v - w * fu * params.g(v) - p)
    if np.any(resid > tol):
        raise ConvergenceError(
            f"conditional quantile did not converge: max residual {resid.max():.3e}"
        )
    return _out(v.reshape(shape))
