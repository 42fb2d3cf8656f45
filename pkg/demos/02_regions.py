"""
Admissible parameters
=====================

``in_omega`` implements the conservative region.  The exact density
interval is often wider; the certifier can check points in between.
"""
import flexfgm as ff

for b in (-10.0, -1.0, 0.0, 0.5, 1.0, 3.0, 50.0):
    label, omega = ff.omega_a_interval(b)
    exact = ff.density_admissible_interval(b)
    print(f"b={b:6}  {label!s:10}  Omega a in {omega}   density a in {exact}")

print()
print(ff.in_omega(0.5, 1.0), ff.in_omega(0.6, 1.0), ff.in_omega(-1.0, -1.0))

# b = -1, a = 3 lies outside Omega but is a genuine copula
# (it coincides with Huang-Kotz type 2 at exponent 2)
report = ff.certify_params(ff.CopulaParams(3.0, -1.0))
print("(3, -1) certified:", report.passed)

report = ff.certify_params(ff.CopulaParams(0.6, 1.0))
for v in report.violations:
    print(f"  {v.kind}: magnitude {v.magnitude:.4g} at {v.location}")
