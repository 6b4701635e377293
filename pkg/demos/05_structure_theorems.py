"""Structural properties of the sixth-order identification.

Demonstrates, on random inputs, that (i) the equivalent sixth-order tensor
is positive definite exactly when the discrepancy tensor is negative
definite, (ii) material symmetry transfers unchanged between the two, and
(iii) the identification inverts exactly back to the discrepancy tensor.
"""

import numpy as np

from sgehom import (OrthogonalMap, Tensor4, assemble_generic, classify_symmetry,
                    cubic_tensor4, invert_to_discrepancy, is_invariant_under,
                    iso_tensor4, spectral_nd_tensor4, spectral_pd_tensor6,
                    sym_matrix_basis)

rng = np.random.default_rng(0)


def random_tensor4(dim, sign=None):
    B = sym_matrix_basis(dim)
    n = B.shape[0]
    M = rng.standard_normal((n, n))
    M = 0.5 * (M + M.T)
    if sign is not None:
        w, V = np.linalg.eigh(M)
        w = sign * rng.uniform(0.2, 2.0, n)
        M = V @ np.diag(w) @ V.T
    return Tensor4.from_array(np.einsum("ab,aij,bhk->ijhk", M, B, B), dim)


print("=== definiteness equivalence on random draws ===")
for dim in (2, 3):
    hits = 0
    for _ in range(50):
        C = random_tensor4(dim, sign=rng.choice([-1.0, 1.0]))
        nd = spectral_nd_tensor4(C).definite
        pd = spectral_pd_tensor6(assemble_generic(C, 0.1, 1.0)).definite
        hits += nd == pd
    print(f"dim {dim}: ND(discrepancy) == PD(sixth-order) in {hits}/50 draws")

print()
print("=== symmetry transfer ===")
C_iso = iso_tensor4(-1.0, -2.0, 3)
C_cub = cubic_tensor4(-1.0, -2.0, -0.5, 3)
A_iso = assemble_generic(C_iso, 0.1, 1.0)
A_cub = assemble_generic(C_cub, 0.1, 1.0)
Q = OrthogonalMap.random_rotation(3, rng)
print(f"isotropic input:  A invariant under a random rotation: "
      f"{is_invariant_under(A_iso, Q, 1e-10)}")
print(f"cubic input:      A invariant under that rotation:     "
      f"{is_invariant_under(A_cub, Q, 1e-10)}")
print(f"classify(A_iso) = {classify_symmetry(A_iso)}, "
      f"classify(A_cub) = {classify_symmetry(A_cub)}")

print()
print("=== inversion round trip ===")
C = random_tensor4(3)
A = assemble_generic(C, 0.07, 1.4)
back = invert_to_discrepancy(A, 0.07, 1.4)
err = np.abs(back.components - C.components).max()
print(f"max |recovered - original| = {err:.3e}")
