"""
Special cases
=============

At particular ``b`` the family reproduces other FGM extensions.
"""
import numpy as np

import flexfgm as ff

t = np.linspace(0, 1, 51)
u, v = np.meshgrid(t, t)


def gap(x, y):
    return float(np.max(np.abs(x - y)))


print("b = 0  vs FGM:        ", gap(ff.cdf(ff.CopulaParams(0.7, 0.0), u, v), ff.fgm_cdf(0.7, u, v)))
print("b = 1  vs HK type 1:  ", gap(ff.cdf(ff.CopulaParams(0.5, 1.0), u, v), ff.hk1_cdf(0.5, 2.0, u, v)))
print("b = -1 vs HK type 2:  ", gap(ff.cdf(ff.CopulaParams(3.0, -1.0), u, v), ff.hk2_cdf(3.0, 2.0, u, v)))
print("-b     vs Ebaid:      ", gap(ff.cdf(ff.CopulaParams(0.4, -0.3), u, v), ff.ebaid_cdf(0.4, 0.3, u, v)))

print("\nscaled family -> iterated FGM as |b| grows:")
for b in (1e2, 1e3, 1e4, 1e6):
    print(f"  b={b:8.0e}  gap={ff.limit_identity_gap(1.0, b):.3e}")
