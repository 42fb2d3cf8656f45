"""
Evaluating the copula
=====================

The modified FGM copula has two shape parameters.  ``a`` scales the
perturbation of independence, ``b`` bends it.
"""
import numpy as np

import flexfgm as ff

# the point where the correlation reaches its largest value in Omega+
params = ff.CopulaParams(0.5, 1.0)

print("C(0.5, 0.5) =", ff.cdf(params, 0.5, 0.5))
print("c(0, 0)     =", ff.pdf(params, 0.0, 0.0))
print("c(0, 1)     =", ff.pdf(params, 0.0, 1.0), "(density touches zero at the corner)")

# everything broadcasts
t = np.linspace(0, 1, 5)
u, v = np.meshgrid(t, t, indexing="ij")
print(np.round(ff.cdf(params, u, v), 4))

# conditional distribution of V given U = u, and its inverse
F = ff.conditional_cdf(params, 0.0, 0.5)
print("F(0.5 | 0) =", F, "->", ff.conditional_quantile(params, 0.0, F))

# the b -> infinity limit has its own parameter type
limit = ff.IFGMLimit(alpha=1.0)
print("limit C(0.5, 0.5) =", ff.cdf(limit, 0.5, 0.5))
