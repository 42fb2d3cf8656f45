"""Exit criteria for the package, one test (or a few) per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""
import time

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import stats

from flexfgm import (
    CopulaParams,
    SamplerConfig,
    cdf,
    certify_params,
    density_admissible_interval,
    fgm_cdf,
    hk1_cdf,
    hk2_cdf,
    in_omega,
    limit_identity_gap,
    pdf,
    rho_closed,
    rho_quadrature,
    sample_kendall,
    sample_pairs,
    sample_spearman,
    tau_closed,
    tau_quadrature,
)
from flexfgm.region import RegionLabel, omega_a_interval

C1 = "1. rho = 0.375 at (1/2, 1); sampled rho, tau within 0.01 in < 10 s"
C2 = "2. FGM endpoints rho = +-1/3, tau = +-2/9"
C3 = "3. special-case identities and IFGM limit"
C4 = "4. quadrature oracles match closed-form rho, tau to 1e-9"
C5 = "5. Omega lattice certifies; outside points rejected"
C6 = "6. density vanishes at corners on the a = 1/(1+b) boundary"
C7 = "7. exact density intervals"
C8 = "8. rho <= 1/3 on Omega-"
C9 = "9. sampler margins, empirical copula, determinism"

UNIT50 = np.meshgrid(np.linspace(0, 1, 50), np.linspace(0, 1, 50), indexing="ij")


@pytest.mark.criterion(C1)
def test_max_rho_point(criterion):
    assert rho_closed(0.5, 1.0) == 0.375
    start = time.perf_counter()
    s = sample_pairs(SamplerConfig(CopulaParams(0.5, 1.0), 20_240_101, 200_000))
    rho_hat = sample_spearman(s)
    tau_hat = sample_kendall(s)
    elapsed = time.perf_counter() - start
    assert abs(rho_hat - 0.375) <= 0.01
    assert abs(tau_hat - 0.25) <= 0.01
    assert elapsed < 10.0


@pytest.mark.criterion(C2)
def test_fgm_endpoints(criterion):
    for sign in (1.0, -1.0):
        assert rho_closed(sign, 0.0) == pytest.approx(sign / 3, abs=1e-16)
        assert tau_closed(sign, 0.0) == pytest.approx(sign * 2 / 9, abs=1e-16)
        assert round(rho_closed(sign, 0.0), 3) == sign * 0.333
        assert round(tau_closed(sign, 0.0), 3) == sign * 0.222


@pytest.mark.criterion(C3)
def test_identities_items_1_to_3(criterion):
    u, v = UNIT50
    for a in np.linspace(-1, 1, 10):
        assert_allclose(cdf(CopulaParams(a, 0.0), u, v), fgm_cdf(a, u, v), rtol=0, atol=1e-12)
    for a in np.linspace(-0.25, 0.5, 10):
        assert_allclose(cdf(CopulaParams(a, 1.0), u, v), hk1_cdf(a, 2.0, u, v), rtol=0, atol=1e-12)
    for a in np.linspace(-1, 3, 10):
        assert_allclose(cdf(CopulaParams(a, -1.0), u, v), hk2_cdf(a, 2.0, u, v), rtol=0, atol=1e-12)


@pytest.mark.criterion(C3)
@pytest.mark.parametrize("alpha", [-1.0, -0.5, 0.5, 1.0])
@pytest.mark.parametrize("sign", [1.0, -1.0])
def test_limit_item_4(criterion, alpha, sign):
    b = sign * 1e6
    gap = limit_identity_gap(alpha, b)
    assert gap <= 1e-5
    for scale in (1e2, 1e4, 1e6):
        ratio = limit_identity_gap(alpha, sign * scale) / limit_identity_gap(alpha, 2 * sign * scale)
        assert 2 / 1.2 <= ratio <= 2 * 1.2


@pytest.mark.criterion(C4)
def test_oracle_equivalence(criterion):
    rng = np.random.default_rng(4)
    for _ in range(100):
        b = rng.choice([rng.uniform(0, 1), rng.uniform(1, 50), rng.uniform(-2, 0), rng.uniform(-50, -2)])
        _, (lo, hi) = omega_a_interval(b)
        a = rng.uniform(lo, hi)
        p = CopulaParams(a, b)
        C = lambda u, v: cdf(p, u, v)  # noqa: E731
        c = lambda u, v: pdf(p, u, v)  # noqa: E731
        assert in_omega(a, b) is not RegionLabel.Outside
        assert abs(rho_quadrature(C) - rho_closed(a, b)) <= 1e-9
        assert abs(tau_quadrature(C, c) - tau_closed(a, b)) <= 1e-9


@pytest.mark.criterion(C5)
def test_omega_lattice_certifies(criterion):
    bs = np.concatenate([np.linspace(-10, 10, 21), [50.0, -50.0]])
    failures = []
    for b in bs:
        _, interval = omega_a_interval(b)
        for a in np.linspace(interval.a_min, interval.a_max, 21):
            assert in_omega(a, b) is not RegionLabel.Outside
            report = certify_params(CopulaParams(a, b), grid_n=200, tol=1e-9)
            if not report.passed:
                failures.append((a, b, report.violations))
    assert failures == []


@pytest.mark.criterion(C5)
def test_outside_points(criterion):
    assert in_omega(0.6, 1.0) is RegionLabel.Outside
    assert -0.5 < -4 / 9
    assert in_omega(-0.5, 0.5) is RegionLabel.Outside
    assert in_omega(0.1, -1.0) is RegionLabel.Outside


@pytest.mark.criterion(C6)
@pytest.mark.parametrize("b", [0.0, 0.5, 1.0])
def test_sharpness(criterion, b):
    t = np.linspace(0, 1, 401)
    u, v = np.meshgrid(t, t, indexing="ij")
    c = pdf(CopulaParams(1 / (1 + b), b), u, v)
    assert abs(c.min()) <= 1e-9
    where = {(float(u[i, j]), float(v[i, j])) for i, j in zip(*np.nonzero(c <= c.min() + 1e-9))}
    assert where == {(0.0, 1.0), (1.0, 0.0)}


@pytest.mark.criterion(C7)
def test_exact_density_intervals(criterion):
    assert tuple(density_admissible_interval(1.0)) == (-0.25, 0.5)
    assert tuple(density_admissible_interval(-1.0)) == (-1.0, 3.0)
    lo, hi = density_admissible_interval(3.0)
    assert lo == pytest.approx(-1 / 16, abs=1e-15)
    assert hi == pytest.approx(9 / 52, abs=1e-15)
    # brute force: 1 + a f(u) f(v) >= 0 on a 2001^2 grid
    t = np.linspace(0, 1, 2001)
    f = 3 * 3.0 * t**2 + 2 * t * (1 - 3.0) - 1
    prod = np.multiply.outer(f, f)
    assert -1 / prod.min() == pytest.approx(9 / 52, abs=1e-6)
    assert -1 / prod.max() == pytest.approx(-1 / 16, abs=1e-6)


@pytest.mark.criterion(C8)
def test_no_improvement_on_omega_minus(criterion):
    best = -np.inf
    for b in np.linspace(-50, 0, 400):
        _, interval = omega_a_interval(b)
        a = np.linspace(interval.a_min, interval.a_max, 400)
        best = max(best, float(np.max(rho_closed(a, b))))
    assert best <= 1 / 3 + 1e-12


@pytest.mark.criterion(C9)
def test_sampler_margins(criterion):
    s = sample_pairs(SamplerConfig(CopulaParams(0.5, 1.0), 99, 100_000))
    bound = 1.63 / np.sqrt(len(s))
    assert stats.kstest(s.u, "uniform").statistic <= bound
    assert stats.kstest(s.v, "uniform").statistic <= bound


@pytest.mark.criterion(C9)
def test_sampler_empirical_copula(criterion):
    params = CopulaParams(0.5, 1.0)
    s = sample_pairs(SamplerConfig(params, 123, 200_000))
    g = np.arange(1, 10) / 10
    below_u = s.u[:, None] <= g[None, :]
    below_v = s.v[:, None] <= g[None, :]
    emp = below_u.T.astype(float) @ below_v.astype(float) / len(s)
    gu, gv = np.meshgrid(g, g, indexing="ij")
    assert np.max(np.abs(emp - cdf(params, gu, gv))) <= 0.01


@pytest.mark.criterion(C9)
def test_sampler_byte_identical(criterion):
    cfg = SamplerConfig(CopulaParams(0.5, 1.0), 77, 5000)
    assert sample_pairs(cfg).to_csv().encode() == sample_pairs(cfg).to_csv().encode()
