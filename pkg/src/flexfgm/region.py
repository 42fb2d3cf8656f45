"""Admissible parameter regions for the modified FGM copula.

Two regions are exposed:

* ``Omega`` -- the conservative set ``Omega+ U Omega-`` (see :func:`in_omega`),
  on which the formula is known to be a copula;
* the exact density interval (:func:`density_admissible_interval`), i.e. all
  ``a`` for which ``1 + a f(u, b) f(v, b) >= 0`` on the whole unit square.

For ``b > 1`` and for most ``b < 0`` the second is strictly larger than the
first.  Points between them can be checked with :mod:`flexfgm.certifier`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "RegionLabel",
    "AInterval",
    "in_omega",
    "omega_a_interval",
    "f_extremes",
    "density_admissible_interval",
]


class RegionLabel(enum.Enum):
    OmegaPlus = "OmegaPlus"
    OmegaMinus = "OmegaMinus"
    Outside = "Outside"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AInterval:
    """Closed interval ``[a_min, a_max]`` of the dependence parameter ``a``."""

    a_min: float
    a_max: float

    def __post_init__(self):
        if not self.a_min <= self.a_max:
            raise ValueError(f"empty interval [{self.a_min}, {self.a_max}]")

    def __contains__(self, a: float) -> bool:
        return self.a_min <= a <= self.a_max

    def __iter__(self):
        yield self.a_min
        yield self.a_max

    def __str__(self) -> str:
        return f"[{self.a_min!r}, {self.a_max!r}]"


def _check_finite(b: float, name: str = "b") -> float:
    b = float(b)
    if not math.isfinite(b):
        raise ValueError(f"{name} must be finite, got {b}")
    return b


def _omega_branch(b: float) -> tuple[RegionLabel, AInterval]:
    """Return the branch of Omega containing ``b`` and its a-interval.

    ``b = 0`` belongs to both halves; it is reported as ``OmegaPlus``.
    """
    b = _check_finite(b)
    if 0.0 <= b <= 1.0:
        return RegionLabel.OmegaPlus, AInterval(-1.0 / (1.0 + b) ** 2, 1.0 / (1.0 + b))
    if b > 1.0:
        cap = 1.0 / (1.0 + b) ** 2
        return RegionLabel.OmegaPlus, AInterval(-cap, cap)
    if b >= -2.0:
        return RegionLabel.OmegaMinus, AInterval(-1.0, 0.0)
    cap = 1.0 / (1.0 + b) ** 2
    return RegionLabel.OmegaMinus, AInterval(-cap, cap)


def omega_a_interval(b: float) -> tuple[RegionLabel, AInterval]:
    """Range of ``a`` allowed by Omega at a given ``b``.

    Returns
    -------
    label : RegionLabel
        ``OmegaPlus`` for ``b >= 0``, ``OmegaMinus`` for ``b < 0``.
    interval : AInterval
        Closed bounds on ``a``.
    """
    return _omega_branch(b)


def in_omega(a: float, b: float) -> RegionLabel:
    """Classify ``(a, b)`` as a member of Omega+, Omega- or neither.

    All bounds are closed.

    >>> in_omega(0.5, 1.0)
    <RegionLabel.OmegaPlus: 'OmegaPlus'>
    >>> in_omega(0.6, 1.0)
    <RegionLabel.Outside: 'Outside'>
    """
    a = _check_finite(a, "a")
    label, interval = _omega_branch(b)
    # b == 0 with a in (0, 1] is only reachable through the Omega+ branch,
    # and a in [-1, 0] is in both; either way Omega+ is the reported label.
    return label if a in interval else RegionLabel.Outside


def f_extremes(b: float) -> tuple[float, float]:
    """Exact minimum and maximum of ``f(u, b) = 3bu^2 + 2u(1-b) - 1`` on [0, 1].

    The candidates are the endpoint values ``f(0) = -1``, ``f(1) = 1 + b`` and,
    when the vertex ``u_c = (b-1)/(3b)`` lies strictly inside (0, 1), the
    vertex value ``-1 - (1-b)^2/(3b)``.
    """
    b = _check_finite(b)
    candidates = [-1.0, 1.0 + b]
    if b != 0.0:
        u_c = (b - 1.0) / (3.0 * b)
        if 0.0 < u_c < 1.0:
            # = -1 - (1-b)^2/(3b), rearranged to avoid cancellation
            candidates.append(-(b * b + b + 1.0) / (3.0 * b))
    # b == 0: f is linear, 2u - 1, and the endpoints suffice
    return min(candidates), max(candidates)


def density_admissible_interval(b: float) -> AInterval:
    """Largest interval of ``a`` with ``1 + a f(u,b) f(v,b) >= 0`` on [0,1]^2.

    With ``m, M`` the extremes of ``f``, the product ``f(u) f(v)`` ranges over
    ``[min(mM, m^2, M^2), max(m^2, M^2)]``.  Positive ``a`` is limited by the
    most negative product, negative ``a`` by the largest one.
    """
    m, M = f_extremes(b)
    lowest = min(m * M, m * m, M * M)
    highest = max(m * m, M * M)
    a_max = math.inf if lowest >= 0.0 else -1.0 / lowest
    a_min = -math.inf if highest <= 0.0 else -1.0 / highest
    return AInterval(a_min, a_max)
