"""Cylindrical and spherical inclusions in an isotropic matrix.

Walks the full chain for the two classical inclusion shapes: discrepancy
constants, effective local moduli, the higher-order constants of the
equivalent strain-gradient solid, and the stiffness-ratio threshold beyond
which that equivalent solid stops being positive definite.
"""

import numpy as np

from sgehom import (IsotropicModuli, Regime, assemble_generic, bulk_modulus,
                    cylindrical_inclusion, from_poisson, iso_constants,
                    iso_tensor4, pd_threshold, spectral_pd_tensor6,
                    spherical_inclusion)

f, rho = 0.05, 1.0

print("=== cylindrical elastic inclusions (plane strain) ===")
matrix = from_poisson(nu=0.3, mu=1.0, regime=Regime.PLANE_STRAIN)
for ratio in (0.0, 0.25, 0.5, 1.0, 2.0):
    inclusion = (IsotropicModuli.void(Regime.PLANE_STRAIN) if ratio == 0.0
                 else from_poisson(0.2, ratio, Regime.PLANE_STRAIN))
    d = cylindrical_inclusion(matrix, inclusion)
    c = iso_constants(d.lam_t, d.mu_t, f, rho)
    A = assemble_generic(iso_tensor4(d.lam_t, d.mu_t, 2), f, rho)
    pd = spectral_pd_tensor6(A)
    print(f"mu2/mu1 = {ratio:4.2f}:  K_t = {d.K_t:+8.4f}  mu_t = {d.mu_t:+8.4f}"
          f"  K_eq = {bulk_modulus(matrix) + f * d.K_t:8.4f}"
          f"  a2 = {c.a2:+9.5f}  a4 = {c.a4:+9.5f}  PD: {pd.definite}")

thr = pd_threshold(0.3, 0.2, Regime.PLANE_STRAIN)
print(f"positive definiteness requires mu2/mu1 < {thr:.4f}")

print()
print("=== spherical elastic inclusions (3D) ===")
matrix = from_poisson(nu=0.0, mu=1.0, regime=Regime.THREE_D)
void = IsotropicModuli.void(Regime.THREE_D)
d = spherical_inclusion(matrix, void)
c = iso_constants(d.lam_t, d.mu_t, f, rho)
print(f"voids, nu1 = 0: mu_t = {d.mu_t:.6f} (= -15/7), K_t = {d.K_t:.6f}")
print(f"normalized a2 = {c.a2 / (f * rho**2 * matrix.mu):+.6f} (= -3/14)")
print(f"normalized a4 = {c.a4 / (f * rho**2 * matrix.mu):+.6f} (= 15/14)")

print()
print("the shear constant a4 does not depend on the inclusion Poisson ratio:")
for nu2 in (-0.5, -0.25, 0.0, 0.4):
    inclusion = from_poisson(nu2, 0.5, Regime.THREE_D)
    d = spherical_inclusion(matrix, inclusion)
    print(f"  nu2 = {nu2:+5.2f}: mu_t = {d.mu_t:.15f}")
