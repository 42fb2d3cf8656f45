"""
Spearman's rho and Kendall's tau
================================

Closed forms, checked against quadrature of the defining integrals.
"""
import numpy as np

import flexfgm as ff

for a, b in [(1.0, 0.0), (0.5, 1.0), (1 / 16, 3.0), (-1.0, -1.0)]:
    p = ff.CopulaParams(a, b)
    rho_q = ff.rho_quadrature(lambda u, v: ff.cdf(p, u, v))
    tau_q = ff.tau_quadrature(lambda u, v: ff.cdf(p, u, v), lambda u, v: ff.pdf(p, u, v))
    print(f"(a, b)=({a:.4g}, {b:g})  rho={ff.rho_closed(a, b):.6f} (quad {rho_q:.6f})"
          f"  tau={ff.tau_closed(a, b):.6f} (quad {tau_q:.6f})")

# largest rho along the upper boundary of Omega+
bs = np.linspace(0, 10, 10001)
rho = [ff.rho_closed(ff.omega_a_interval(b)[1].a_max, b) for b in bs]
i = int(np.argmax(rho))
print(f"max rho on Omega+ boundary: {rho[i]:.4f} at b={bs[i]:.3f}")
