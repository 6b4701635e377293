"""Definiteness verdicts for the discrepancy tensor and the sixth-order tensor.

A positive definite sixth-order equivalent tensor is obtained exactly when
the fourth-order discrepancy tensor is negative definite on symmetric
second-order tensors.  Closed-form inequalities are provided per symmetry
class alongside the spectral checks; strict inequalities are used, and
semi-definite inputs are classified as not definite with a marginal flag.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .moduli import OrthoDiscrepancyConstants, Regime
from .tensors import Tensor4, Tensor6, chi_matrix_of_tensor6, sym_matrix_of_tensor4

__all__ = [
    "SpectralVerdict",
    "iso_nd_check",
    "cubic_nd_check",
    "ortho_nd_check",
    "spectral_nd_tensor4",
    "spectral_pd_tensor6",
    "pd_threshold",
]

_MARGIN = 1e-12


class SpectralVerdict(NamedTuple):
    definite: bool
    min_eig: float
    max_eig: float
    marginal: bool  # an eigenvalue sits inside the +-margin band around zero


def iso_nd_check(K_t: float, mu_t: float) -> bool:
    """Isotropic negative definiteness: K_t < 0 and mu_t < 0."""
    return K_t < 0.0 and mu_t < 0.0


def cubic_nd_check(K_t: float, mu_t: float, xi_t: float) -> bool:
    """Cubic negative definiteness: isotropic conditions plus mu_t + xi_t < 0."""
    return iso_nd_check(K_t, mu_t) and mu_t + xi_t < 0.0


def _ortho_nd_plane(lam, mu, xi3, om1) -> bool:
    # 2x2 normal block ND (leading minors alternate) plus the shear entry
    return (mu + xi3 < 0.0
            and lam + 2.0 * mu + om1 < 0.0
            and 4.0 * mu * (lam + mu) + (lam + 2.0 * mu) * om1 > 0.0)


def _ortho_nd_3d(c: OrthoDiscrepancyConstants) -> bool:
    lam, mu = c.lam, c.mu
    w1, w2, w3, w4 = c.om1, c.om2, c.om3, c.om4
    if not (mu + c.xi3 < 0.0 and mu + c.xi2 < 0.0 and mu + c.xi1 < 0.0):
        return False
    if not lam + 2.0 * mu + w1 < 0.0:
        return False
    if not 4.0 * mu * (lam + mu) + (lam + 2.0 * mu) * w1 > 0.0:
        return False
    # determinant of the 3x3 normal block; negative for a definite block
    det = (8.0 * mu ** 3 - w1 * w3 ** 2 + 4.0 * mu ** 2 * (w1 + w2 + 2.0 * w3)
           + lam * (12.0 * mu ** 2 + w1 * w2 + 4.0 * mu * (w1 + w2 - w4) - w4 ** 2)
           - 2.0 * mu * (2.0 * w3 ** 2 - w1 * (w2 + 2.0 * w3)
                         + 2.0 * w3 * w4 + w4 ** 2))
    return det < 0.0


def ortho_nd_check(disc: OrthoDiscrepancyConstants, regime: Regime) -> bool:
    """Orthotropic negative definiteness via closed-form inequalities.

    Plane strain uses the three x1-x2 conditions; 3D adds the remaining shear
    planes and the full normal-block minors.
    """
    if regime is Regime.PLANE_STRAIN:
        return _ortho_nd_plane(disc.lam, disc.mu, disc.xi3, disc.om1)
    return _ortho_nd_3d(disc)


def _verdict(eigs: np.ndarray, want_negative: bool) -> SpectralVerdict:
    radius = float(np.abs(eigs).max(initial=0.0))
    lo, hi = float(eigs[0]), float(eigs[-1])
    band = _MARGIN * radius
    if want_negative:
        definite = hi < -band and radius > 0.0
        marginal = abs(hi) <= band
    else:
        definite = lo > band and radius > 0.0
        marginal = abs(lo) <= band
    return SpectralVerdict(bool(definite), lo, hi, bool(marginal))


def spectral_nd_tensor4(C: Tensor4) -> SpectralVerdict:
    """Negative definiteness of the quadratic form on symmetric tensors."""
    eigs = np.linalg.eigvalsh(sym_matrix_of_tensor4(C))
    return _verdict(eigs, want_negative=True)


def spectral_pd_tensor6(A: Tensor6) -> SpectralVerdict:
    """Positive definiteness of the quadratic form on the chi space."""
    eigs = np.linalg.eigvalsh(chi_matrix_of_tensor6(A))
    return _verdict(eigs, want_negative=False)


def pd_threshold(nu1: float, nu2: float, regime: Regime) -> float:
    """Stiffness-ratio bound mu2/mu1 below which the sixth-order tensor is PD.

    Plane strain: min(1, (1 - 2 nu2) / (1 - 2 nu1));
    3D: min(1, (1 + nu1)(1 - 2 nu2) / ((1 + nu2)(1 - 2 nu1))).
    """
    for nu in (nu1, nu2):
        if not (-1.0 < nu < 0.5):
            if nu1 == 0.5:
                raise ValueError("incompressible matrix")
            raise ValueError("Poisson ratios must lie in (-1, 1/2)")
    if regime is Regime.PLANE_STRAIN:
        return min(1.0, (1.0 - 2.0 * nu2) / (1.0 - 2.0 * nu1))
    return min(1.0, (1.0 + nu1) * (1.0 - 2.0 * nu2)
               / ((1.0 + nu2) * (1.0 - 2.0 * nu1)))
