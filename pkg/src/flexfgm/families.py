"""Related FGM-type copulas and their links to the modified family.

Each family is a small frozen dataclass that checks its own parameter range
and exposes a vectorized ``cdf(u, v)``.  The module-level ``*_cdf`` functions
are thin conveniences around them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import ClassVar, Union

import numpy as np

from .core import CopulaParams, _out, _unit, cdf
from .errors import InvalidParametersError

__all__ = [
    "FGM",
    "HK1",
    "HK2",
    "Ebaid",
    "IFGMParams",
    "FamilyParams",
    "fgm_cdf",
    "hk1_cdf",
    "hk2_cdf",
    "ebaid_cdf",
    "ifgm_cdf",
    "limit_identity_gap",
]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParametersError(msg)


def _grid(u, v):
    return _unit(u, "u"), _unit(v, "v")


@dataclass(frozen=True)
class FGM:
    a: float

    def __post_init__(self):
        _require(-1.0 <= self.a <= 1.0, f"FGM requires a in [-1, 1], got {self.a}")

    def cdf(self, u, v):
        u, v = _grid(u, v)
        return _out(u * v * (1.0 + self.a * (1.0 - u) * (1.0 - v)))


@dataclass(frozen=True)
class HK1:
    """Huang-Kotz type 1: ``uv[1 + a(1-u^b)(1-v^b)]``."""

    a: float
    b: float

    def __post_init__(self):
        _require(self.b > 0.0, f"HK1 requires b > 0, got {self.b}")
        _require(
            -1.0 / self.b**2 <= self.a <= 1.0 / self.b,
            f"HK1 requires a in [-1/b^2, 1/b], got a={self.a}, b={self.b}",
        )

    def cdf(self, u, v):
        u, v = _grid(u, v)
        return _out(u * v * (1.0 + self.a * (1.0 - u**self.b) * (1.0 - v**self.b)))


@dataclass(frozen=True)
class HK2:
    """Huang-Kotz type 2: ``uv[1 + a(1-u)^b (1-v)^b]``."""

    a: float
    b: float

    def __post_init__(self):
        _require(self.b > 1.0, f"HK2 requires b > 1, got {self.b}")
        upper = ((self.b + 1.0) / (self.b - 1.0)) ** (self.b - 1.0)
        _require(
            -1.0 <= self.a <= upper,
            f"HK2 requires a in [-1, {upper}], got a={self.a}, b={self.b}",
        )

    def cdf(self, u, v):
        u, v = _grid(u, v)
        return _out(u * v * (1.0 + self.a * (1.0 - u) ** self.b * (1.0 - v) ** self.b))


@dataclass(frozen=True)
class Ebaid:
    """``uv[1 + a(1-u)(1-v)(1-bu)(1-bv)]`` for ``b`` in [0, 1).

    The range of ``a`` originally published for this family is known to be
    wrong and no corrected one is available, so any ``a`` is accepted and
    ``certified`` is always False.  Check validity with
    :func:`flexfgm.certifier.certify`.
    """

    a: float
    b: float
    certified: ClassVar[bool] = False

    def __post_init__(self):
        _require(0.0 <= self.b < 1.0, f"Ebaid requires b in [0, 1), got {self.b}")
        _require(math.isfinite(self.a), f"a must be finite, got {self.a}")

    def cdf(self, u, v):
        u, v = _grid(u, v)
        a, b = self.a, self.b
        return _out(u * v * (1.0 + a * (1.0 - u) * (1.0 - v) * (1.0 - b * u) * (1.0 - b * v)))


@dataclass(frozen=True)
class IFGMParams:
    """Single iterated FGM: ``uv{1 + a(1-u)(1-v) + b uv(1-u)(1-v)}``.

    Valid for ``-1 <= a <= 1``, ``a + b >= -1`` and
    ``b <= (3 - a + sqrt(9 - 6a - 3a^2)) / 2``.
    """

    a: float
    b: float
    upper_b: float = field(init=False, repr=False)

    def __post_init__(self):
        a, b = self.a, self.b
        _require(-1.0 <= a <= 1.0, f"IFGM requires a in [-1, 1], got {a}")
        # 9 - 6a - 3a^2 = 3(1-a)(3+a) >= 0 on [-1, 1]; clip rounding at a = 1
        upper = (3.0 - a + math.sqrt(max(0.0, 9.0 - 6.0 * a - 3.0 * a * a))) / 2.0
        object.__setattr__(self, "upper_b", upper)
        _require(a + b >= -1.0, f"IFGM requires a + b >= -1, got a={a}, b={b}")
        _require(b <= upper, f"IFGM requires b <= {upper}, got b={b}")

    def cdf(self, u, v):
        u, v = _grid(u, v)
        t = (1.0 - u) * (1.0 - v)
        return _out(u * v * (1.0 + self.a * t + self.b * u * v * t))


FamilyParams = Union[FGM, HK1, HK2, Ebaid, IFGMParams]


def fgm_cdf(a, u, v):
    return FGM(a).cdf(u, v)


def hk1_cdf(a, b, u, v):
    return HK1(a, b).cdf(u, v)


def hk2_cdf(a, b, u, v):
    return HK2(a, b).cdf(u, v)


def ebaid_cdf(a, b, u, v):
    """Ebaid's extension; identical to the modified copula at ``(a, -b)``."""
    return Ebaid(a, b).cdf(u, v)


def ifgm_cdf(params: IFGMParams, u, v):
    return params.cdf(u, v)


def limit_identity_gap(alpha: float, b: float, grid_n: int = 100) -> float:
    """Sup-distance between ``C(.; alpha/(1+b)^2, b)`` and ``C_IFGM(.; 0, alpha)``.

    The supremum is taken over the ``(grid_n+1)^2`` equispaced lattice on the
    unit square.  The gap shrinks like ``1/|b|``.
    """
    if not -1.0 <= alpha <= 1.0:
        raise InvalidParametersError(f"alpha must lie in [-1, 1], got {alpha}")
    _require(b != -1.0, "b = -1 makes alpha/(1+b)^2 undefined")
    t = np.linspace(0.0, 1.0, grid_n + 1)
    u, v = np.meshgrid(t, t, indexing="ij")
    scaled = cdf(CopulaParams(alpha / (1.0 + b) ** 2, b), u, v)
    limit = IFGMParams(0.0, alpha).cdf(u, v)
    return float(np.max(np.abs(scaled - limit)))
