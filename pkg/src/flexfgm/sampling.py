"""Reproducible sampling by conditional inversion.

Random numbers come from numpy's Philox4x32-10 counter-based generator.  The
index range ``[0, n)`` is cut into fixed blocks of ``CHUNK`` draws; block
``k`` uses its own stream keyed by ``SeedSequence(seed, spawn_key=(k,))``
and consumes two doubles per pair, ``(u, p)``.
Serial and threaded generation therefore give identical output.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import CopulaParams, IFGMLimit, check_density_admissible, conditional_quantile
from .dependence import PairSample
from .errors import InvalidParametersError

__all__ = ["SamplerConfig", "sample_pairs", "chunk_generator"]

CHUNK = 1 << 16


@dataclass(frozen=True)
class SamplerConfig:
    params: CopulaParams | IFGMLimit
    seed: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        check_density_admissible(self.params)


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    """Generator for block ``chunk`` of the stream identified by ``seed``."""
    ss = np.random.SeedSequence(seed, spawn_key=(chunk,))
    return np.random.Generator(np.random.Philox(ss))


def _draw_chunk(cfg: SamplerConfig, k: int):
    m = min(CHUNK, cfg.n - k * CHUNK)
    rng = chunk_generator(cfg.seed, k)
    # interleaved so that a block's first k pairs do not depend on its length
    draws = rng.random((m, 2))
    u = draws[:, 0].copy()
    return u, conditional_quantile(cfg.params, u, draws[:, 1])


def sample_pairs(cfg: SamplerConfig, workers: int = 1) -> PairSample:
    """Draw ``cfg.n`` pairs: ``U`` uniform, ``V = F^{-1}(P | U)`` with ``P`` uniform.

    ``workers > 1`` spreads blocks over a thread pool; the result does not
    depend on ``workers``.
    """
    if cfg.n == 0:
        return PairSample([], [])
    n_chunks = -(-cfg.n // CHUNK)
    if workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda k: _draw_chunk(cfg, k), range(n_chunks)))
    else:
        parts = [_draw_chunk(cfg, k) for k in range(n_chunks)]
    u = np.concatenate([p[0] for p in parts])
    v = np.concatenate([p[1] for p in parts])
    return PairSample(u, v)
