"""Grid-based checking of the copula axioms.

This is a falsifier, not a prover: a passing report means no violation above
``tol`` was seen on the lattice, nothing more.  For the polynomial densities
in this package the exact extremes in :mod:`flexfgm.region` complement it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import CopulaParams, IFGMLimit, cdf, pdf

__all__ = ["ViolationKind", "Violation", "CertificateReport", "certify", "certify_params"]

DEFAULT_GRID = 200
DEFAULT_TOL = 1e-9

Surface = Callable[[np.ndarray, np.ndarray], np.ndarray]


class ViolationKind(enum.Enum):
    Margin = "Margin"
    Range01 = "Range01"
    Rectangle = "Rectangle"
    DensitySign = "DensitySign"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Violation:
    """Worst offending location of one kind.

    ``location`` is ``(u, v)`` for point checks and ``(u1, v1, u2, v2)`` for
    rectangles.  ``count`` is the number of offending lattice points or cells.
    Rectangle magnitudes are the mass deficit divided by the cell area, so
    they are comparable across grid sizes.
    """

    kind: ViolationKind
    location: tuple
    magnitude: float
    count: int = 1


@dataclass(frozen=True)
class CertificateReport:
    violations: list = field(default_factory=list)
    grid_n: int = DEFAULT_GRID
    tol: float = DEFAULT_TOL

    @property
    def passed(self) -> bool:
        return not self.violations

    def worst(self, kind: ViolationKind) -> Optional[Violation]:
        for v in self.violations:
            if v.kind is kind:
                return v
        return None


def _worst(kind, deficit, locate, tol):
    bad = deficit > tol
    if not bad.any():
        return None
    idx = np.unravel_index(np.argmax(deficit), deficit.shape)
    return Violation(kind, locate(idx), float(deficit[idx]), int(bad.sum()))


def certify(
    surface: Surface,
    density: Optional[Surface] = None,
    grid_n: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> CertificateReport:
    """Check margins, ``0 <= C <= 1``, 2-increasingness and density sign.

    Parameters
    ----------
    surface : callable
        Vectorized ``C(u, v)``.
    density : callable, optional
        Vectorized ``c(u, v)``; the sign check is skipped when omitted.
    grid_n : int
        The lattice is ``{i/grid_n}^2``, ``(grid_n+1)^2`` points.
    tol : float
        Violations of size ``<= tol`` are ignored.

    Returns
    -------
    CertificateReport
        At most one violation per kind, sorted by decreasing magnitude.
    """
    if int(grid_n) != grid_n or grid_n < 3:
        raise ValueError(f"grid_n must be an integer >= 3, got {grid_n}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    grid_n = int(grid_n)
    t = np.linspace(0.0, 1.0, grid_n + 1)
    u, v = np.meshgrid(t, t, indexing="ij")
    C = np.asarray(surface(u, v), dtype=float)

    def at(idx):
        return (float(t[idx[0]]), float(t[idx[1]]))

    found = []

    # margins: rows/cols i=0 (grounded) and i=grid_n (uniform)
    margin = np.zeros_like(C)
    margin[0, :] = np.abs(C[0, :])
    margin[:, 0] = np.maximum(margin[:, 0], np.abs(C[:, 0]))
    margin[-1, :] = np.maximum(margin[-1, :], np.abs(C[-1, :] - t))
    margin[:, -1] = np.maximum(margin[:, -1], np.abs(C[:, -1] - t))
    found.append(_worst(ViolationKind.Margin, margin, at, tol))

    range_dev = np.maximum(-C, C - 1.0)
    found.append(_worst(ViolationKind.Range01, range_dev, at, tol))

    h = 1.0 / grid_n
    mass = C[1:, 1:] - C[1:, :-1] - C[:-1, 1:] + C[:-1, :-1]
    found.append(
        _worst(
            ViolationKind.Rectangle,
            -mass / (h * h),
            lambda idx: (*at(idx), float(t[idx[0] + 1]), float(t[idx[1] + 1])),
            tol,
        )
    )

    if density is not None:
        c = np.asarray(density(u, v), dtype=float)
        found.append(_worst(ViolationKind.DensitySign, -c, at, tol))

    violations = sorted((f for f in found if f is not None), key=lambda f: -f.magnitude)
    return CertificateReport(violations, grid_n, float(tol))


def certify_params(
    params: CopulaParams | IFGMLimit, grid_n: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> CertificateReport:
    """:func:`certify` applied to the modified copula with its density."""
    return certify(
        lambda u, v: cdf(params, u, v),
        lambda u, v: pdf(params, u, v),
        grid_n=grid_n,
        tol=tol,
    )
