"""Spearman's rho and Kendall's tau: closed forms, quadrature, estimators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np
from scipy import stats

from .errors import DegenerateSampleError

__all__ = [
    "DependenceMeasures",
    "PairSample",
    "rho_closed",
    "tau_closed",
    "closed_measures",
    "rho_quadrature",
    "tau_quadrature",
    "sample_spearman",
    "sample_kendall",
]

QUAD_NODES = 32

Surface = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class DependenceMeasures:
    rho: float
    tau: float

    def __post_init__(self):
        for name in ("rho", "tau"):
            val = getattr(self, name)
            if not -1.0 <= val <= 1.0:
                raise ValueError(f"{name}={val} is outside [-1, 1]")


class PairSample:
    """Immutable sample of points in the unit square, stored as two arrays."""

    __slots__ = ("_u", "_v")

    def __init__(self, u, v):
        u = np.array(u, dtype=float).reshape(-1)
        v = np.array(v, dtype=float).reshape(-1)
        if u.shape != v.shape:
            raise ValueError("u and v must have the same length")
        if np.any(~((u >= 0) & (u <= 1))) or np.any(~((v >= 0) & (v <= 1))):
            raise ValueError("all observations must lie in the unit square")
        u.flags.writeable = False
        v.flags.writeable = False
        self._u, self._v = u, v

    @classmethod
    def from_points(cls, points: Iterable) -> "PairSample":
        pts = [tuple(p) for p in points]
        if not pts:
            return cls([], [])
        u, v = zip(*pts)
        return cls(u, v)

    @property
    def u(self) -> np.ndarray:
        return self._u

    @property
    def v(self) -> np.ndarray:
        return self._v

    def __len__(self) -> int:
        return self._u.size

    def __iter__(self):
        return zip(self._u.tolist(), self._v.tolist())

    def to_csv(self) -> str:
        """CSV text with header ``u,v`` and 17 significant digits."""
        lines = ["u,v"]
        lines.extend(f"{x:.17g},{y:.17g}" for x, y in self)
        return "\n".join(lines) + "\n"


def rho_closed(a: float, b: float) -> float:
    """Spearman's rho, ``a (2+b)^2 / 12``."""
    return a * (2.0 + b) ** 2 / 12.0


def tau_closed(a: float, b: float) -> float:
    """Kendall's tau, ``a (2+b)^2 / 18``."""
    return a * (2.0 + b) ** 2 / 18.0


def closed_measures(a: float, b: float) -> DependenceMeasures:
    return DependenceMeasures(rho_closed(a, b), tau_closed(a, b))


@lru_cache(maxsize=None)
def _unit_square_rule(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    u, v = np.meshgrid(x, x, indexing="ij")
    return u, v, np.outer(w, w)


def _integrate(fn: Surface, n: int) -> float:
    u, v, w = _unit_square_rule(n)
    return float(np.sum(w * fn(u, v)))


def rho_quadrature(cdf_surface: Surface, nodes: int = QUAD_NODES) -> float:
    """``12 * int C - 3`` by tensor Gauss-Legendre quadrature."""
    return 12.0 * _integrate(cdf_surface, nodes) - 3.0


def tau_quadrature(cdf_surface: Surface, pdf_surface: Surface, nodes: int = QUAD_NODES) -> float:
    """``4 * int C c - 1`` by tensor Gauss-Legendre quadrature."""
    return 4.0 * _integrate(lambda u, v: cdf_surface(u, v) * pdf_surface(u, v), nodes) - 1.0


def _coords(s):
    if isinstance(s, PairSample):
        x, y = s.u, s.v
    else:
        x, y = (np.asarray(c, dtype=float) for c in s)
    if x.size < 2:
        raise DegenerateSampleError("need at least two observations")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateSampleError("a coordinate is constant")
    return x, y


def sample_spearman(s) -> float:
    """Pearson correlation of midranks.

    ``s`` is a :class:`PairSample` or a pair of equal-length arrays.
    """
    x, y = _coords(s)
    rx = stats.rankdata(x)
    ry = stats.rankdata(y)
    return float(np.corrcoef(rx, ry)[0, 1])


def _tied_pairs(x: np.ndarray) -> int:
    _, counts = np.unique(x, return_counts=True)
    return int(np.sum(counts * (counts - 1) // 2))


def _kendall_brute(x: np.ndarray, y: np.ndarray) -> float:
    n = x.size
    total = 0
    for i in range(n - 1):
        total += int(np.sum(np.sign(x[i + 1 :] - x[i]) * np.sign(y[i + 1 :] - y[i])))
    return total / (n * (n - 1) / 2)


def sample_kendall(s, method: str = "merge") -> float:
    """``(concordant - discordant) / (n choose 2)``; tied pairs count as neither.

    ``method="merge"`` is O(n log n); ``method="brute"`` enumerates all pairs.
    """
    x, y = _coords(s)
    if method == "brute":
        return _kendall_brute(x, y)
    if method != "merge":
        raise ValueError(f"unknown method {method!r}")
    n0 = x.size * (x.size - 1) / 2
    tx, ty = _tied_pairs(x), _tied_pairs(y)
    # scipy's merge-count gives tau-b = (C - D) / sqrt((n0 - tx)(n0 - ty))
    tau_b = stats.kendalltau(x, y, variant="b").statistic
    return float(tau_b * np.sqrt((n0 - tx) * (n0 - ty)) / n0)
