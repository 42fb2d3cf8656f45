"""flexfgm: a two-parameter FGM-type copula with a flexible shape parameter.

    C(u, v; a, b) = uv {1 + a (1-u)(1-v)(1+bu)(1+bv)}

Submodules
----------
core        evaluation, density, conditional CDF and quantile
region      admissible parameter regions
families    FGM, Huang-Kotz types 1/2, Ebaid, iterated FGM
dependence  Spearman's rho and Kendall's tau
sampling    reproducible conditional-inversion sampler
certifier   grid-based axiom checks
cli         command-line interface (``python -m flexfgm``)
"""
from .core import (
    CopulaParams,
    IFGMLimit,
    UnitPoint,
    cdf,
    conditional_cdf,
    conditional_quantile,
    kernel_f,
    kernel_g,
    pdf,
)
from .certifier import CertificateReport, Violation, ViolationKind, certify, certify_params
from .dependence import (
    DependenceMeasures,
    PairSample,
    rho_closed,
    rho_quadrature,
    sample_kendall,
    sample_spearman,
    tau_closed,
    tau_quadrature,
)
from .errors import (
    ConvergenceError,
    CopulaError,
    DegenerateSampleError,
    DomainError,
    InvalidParametersError,
)
from .families import (
    FGM,
    HK1,
    HK2,
    Ebaid,
    IFGMParams,
    ebaid_cdf,
    fgm_cdf,
    hk1_cdf,
    hk2_cdf,
    ifgm_cdf,
    limit_identity_gap,
)
from .region import (
    AInterval,
    RegionLabel,
    density_admissible_interval,
    f_extremes,
    in_omega,
    omega_a_interval,
)
from .sampling import SamplerConfig, sample_pairs

__version__ = "0.1.0"
