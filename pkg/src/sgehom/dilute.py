"""Closed-form dilute (first order in volume fraction) stiffness corrections.

Each case returns the discrepancy constants C_disc such that the equivalent
local stiffness of the two-phase composite is C_eq = C_matrix + f * C_disc.
Sources: Hashin and Rosen (1964) for cylindrical inclusions, Eshelby (1957)
and Hashin (1959) for spherical inclusions, Jasiuk et al. (1994) and Thorpe
et al. (1995) for regular polygonal holes, Misseroni et al. (2013) for
aligned square holes, Tsukrov and Kachanov (2000) for circular holes in an
orthotropic matrix.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .moduli import (IsotropicModuli, OrthotropicModuli2D,
                     OrthoDiscrepancyConstants, Regime, bulk_modulus)
from .tensors import Tensor4

__all__ = [
    "IsoDiscrepancy",
    "CubicDiscrepancy",
    "PolygonConstants",
    "OrthoAux",
    "POLYGON_CONSTANTS",
    "SQUARE_RANDOM_CONSTANTS",
    "cylindrical_inclusion",
    "spherical_inclusion",
    "polygonal_hole",
    "square_hole_aligned",
    "square_hole_random",
    "ortho_circular_hole",
    "effective_local_tensor",
]


@dataclass(frozen=True)
class IsoDiscrepancy:
    """Isotropic discrepancy constants; lam_t is derived from (K_t, mu_t)."""

    K_t: float
    mu_t: float
    regime: Regime

    @property
    def lam_t(self) -> float:
        if self.regime is Regime.PLANE_STRAIN:
            return self.K_t - self.mu_t
        return self.K_t - 2.0 * self.mu_t / 3.0


@dataclass(frozen=True)
class CubicDiscrepancy:
    """Cubic discrepancy constants (plane strain, axes aligned with the holes)."""

    lam_t: float
    mu_t: float
    xi_t: float

    @property
    def K_t(self) -> float:
        return self.lam_t + self.mu_t


@dataclass(frozen=True)
class PolygonConstants:
    """Dimensionless hole-shape constants A(n), B(n) (Thorpe et al., 1995)."""

    n: float
    A: float
    B: float


#: Published shape constants for regular polygonal holes.  n = 4 is reserved
#: for the aligned-square treatment; the randomly oriented square value is
#: kept separately.  math.inf recovers the circular hole.
POLYGON_CONSTANTS: dict[float, PolygonConstants] = {
    3: PolygonConstants(3, 2.1065, 0.2295),
    5: PolygonConstants(5, 1.6198, 0.3233),
    6: PolygonConstants(6, 1.5688, 0.3288),
    math.inf: PolygonConstants(math.inf, 1.5, 1.0 / 3.0),
}

#: Orientation-averaged square holes behave isotropically with these constants.
SQUARE_RANDOM_CONSTANTS = PolygonConstants(4, 1.738, 0.306)


@dataclass(frozen=True)
class OrthoAux:
    """Auxiliary constants of the orthotropic circular-hole solution.

    beta1^2 and beta2^2 = Gamma +/- sqrt(Delta) are the (squared) imaginary
    parts of the Lekhnitskii roots of the in-plane characteristic quartic;
    gamma = beta1 beta2 = sqrt(Gamma^2 - Delta) and
    delta = beta1 + beta2 = sqrt(Gamma + sqrt(Delta)) + sqrt(Gamma - sqrt(Delta)).
    """

    Gamma: float
    Delta: float
    gamma: float
    delta: float


def _require_plane_strain(m: IsotropicModuli, who: str) -> None:
    if m.regime is not Regime.PLANE_STRAIN:
        raise ValueError(f"{who} requires the plane-strain regime")


def cylindrical_inclusion(matrix: IsotropicModuli,
                          inclusion: IsotropicModuli) -> IsoDiscrepancy:
    """Parallel circular cylindrical inclusions in an isotropic matrix.

    Hashin and Rosen (1964), plane strain:
        K_t  = (K2 - K1)(K1 + mu1) / (K2 + mu1)
        mu_t = 2 mu1 (mu2 - mu1)(K1 + mu1) / (2 mu1 mu2 + K1 (mu1 + mu2))
    """
    _require_plane_strain(matrix, "cylindrical_inclusion")
    if matrix.is_void:
        raise ValueError("matrix phase must be physical")
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    K2, mu2 = bulk_modulus(inclusion), inclusion.mu
    den_K = K2 + mu1
    den_mu = 2.0 * mu1 * mu2 + K1 * (mu1 + mu2)
    if den_K <= 0 or den_mu <= 0:
        raise ValueError("nonphysical input: nonpositive denominator")
    K_t = (K2 - K1) * (K1 + mu1) / den_K
    mu_t = 2.0 * mu1 * (mu2 - mu1) * (K1 + mu1) / den_mu
    return IsoDiscrepancy(K_t, mu_t, Regime.PLANE_STRAIN)


def spherical_inclusion(matrix: IsotropicModuli,
                        inclusion: IsotropicModuli) -> IsoDiscrepancy:
    """Spherical inclusions in an isotropic matrix (Eshelby 1957; Hashin 1959).

        K_t  = (3 K1 + 4 mu1)(K2 - K1) / (3 K2 + 4 mu1)
        mu_t = 5 mu1 (mu2 - mu1)(3 K1 + 4 mu1)
               / (mu1 (3 K1 + 4 mu2) + 2 (3 K1 + 4 mu1)(mu2 + mu1))
    """
    if matrix.regime is not Regime.THREE_D or inclusion.regime is not Regime.THREE_D:
        raise ValueError("spherical_inclusion requires the 3D regime")
    if matrix.is_void:
        raise ValueError("matrix phase must be physical")
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    K2, mu2 = bulk_modulus(inclusion), inclusion.mu
    den_K = 3.0 * K2 + 4.0 * mu1
    den_mu = mu1 * (3.0 * K1 + 4.0 * mu2) + 2.0 * (3.0 * K1 + 4.0 * mu1) * (mu2 + mu1)
    if den_K <= 0 or den_mu <= 0:
        raise ValueError("nonphysical input: nonpositive denominator")
    K_t = (3.0 * K1 + 4.0 * mu1) * (K2 - K1) / den_K
    mu_t = 5.0 * mu1 * (mu2 - mu1) * (3.0 * K1 + 4.0 * mu1) / den_mu
    return IsoDiscrepancy(K_t, mu_t, Regime.THREE_D)


def polygonal_hole(matrix: IsotropicModuli, n: float) -> IsoDiscrepancy:
    """Regular n-polygonal cylindrical holes, n in {3, 5, 6, inf}.

        K_t  = -A(n)(1 - B(n)) (K1 + mu1) K1 / mu1
        mu_t = -A(n)(1 + B(n)) (K1 + mu1) mu1 / K1
    """
    _require_plane_strain(matrix, "polygonal_hole")
    if n == 4:
        raise ValueError("n = 4 gives an orthotropic response; use "
                         "square_hole_aligned or square_hole_random")
    try:
        c = POLYGON_CONSTANTS[n]
    except KeyError:
        raise ValueError(f"no shape constants for n = {n}; "
                         f"known: {sorted(POLYGON_CONSTANTS)}") from None
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    K_t = -c.A * (1.0 - c.B) * (K1 + mu1) * K1 / mu1
    mu_t = -c.A * (1.0 + c.B) * (K1 + mu1) * mu1 / K1
    return IsoDiscrepancy(K_t, mu_t, Regime.PLANE_STRAIN)


def square_hole_aligned(matrix: IsotropicModuli) -> CubicDiscrepancy:
    """Square holes with parallel edges: cubic response (Misseroni et al. 2013).

        lam_t = -(1.198 K1^2 - 1.864 mu1^2)(K1 + mu1) / (K1 mu1)
        mu_t  = -1.864 (K1 + mu1) mu1 / K1
        xi_t  = -0.796 (K1 + mu1) mu1 / K1
    """
    _require_plane_strain(matrix, "square_hole_aligned")
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    lam_t = -(1.198 * K1 ** 2 - 1.864 * mu1 ** 2) * (K1 + mu1) / (K1 * mu1)
    mu_t = -1.864 * (K1 + mu1) * mu1 / K1
    xi_t = -0.796 * (K1 + mu1) * mu1 / K1
    return CubicDiscrepancy(lam_t, mu_t, xi_t)


def square_hole_random(matrix: IsotropicModuli) -> IsoDiscrepancy:
    """Randomly oriented square holes: isotropic, A(4) = 1.738, B(4) = 0.306."""
    _require_plane_strain(matrix, "square_hole_random")
    c = SQUARE_RANDOM_CONSTANTS
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    K_t = -c.A * (1.0 - c.B) * (K1 + mu1) * K1 / mu1
    mu_t = -c.A * (1.0 + c.B) * (K1 + mu1) * mu1 / K1
    return IsoDiscrepancy(K_t, mu_t, Regime.PLANE_STRAIN)


def _ortho_aux(lam, mu, xi, om) -> OrthoAux:
    """Gamma, Delta, gamma, delta of the in-plane characteristic quartic.

    With the plane-strain stiffness C1111 = lam + 2 mu + om, C2222 = lam + 2 mu,
    C1122 = lam, C1212 = mu + xi, the Lekhnitskii roots i*beta satisfy
    E beta^4 - B beta^2 + A = 0, A = C1111 C1212, E = C1212 C2222,
    B = C1111 C2222 + C1212^2 - (C1122 + C1212)^2, so that
    2 Gamma = B / E and Gamma^2 - Delta = A / E = C1111 / C2222, giving

        Gamma = [2 mu (lam + 2 mu + om) + lam (om - 2 xi)]
                / (2 (lam + 2 mu)(mu + xi))
        Delta = Gamma^2 - (lam + 2 mu + om) / (lam + 2 mu)
    """
    if mu + xi == 0.0 or lam + 2.0 * mu == 0.0:
        raise ValueError("degenerate orthotropy: vanishing in-plane stiffness")
    Gamma = ((2.0 * mu * (lam + 2.0 * mu + om) + lam * (om - 2.0 * xi))
             / (2.0 * (lam + 2.0 * mu) * (mu + xi)))
    Delta = Gamma * Gamma - (lam + 2.0 * mu + om) / (lam + 2.0 * mu)
    if Delta < 0.0:
        raise ValueError("orthotropy yields complex auxiliary constants")
    sD = math.sqrt(Delta)
    if Gamma - sD <= 0.0:
        raise ValueError("orthotropy yields complex auxiliary constants")
    gamma = math.sqrt(Gamma * Gamma - Delta)
    delta = math.sqrt(Gamma + sD) + math.sqrt(Gamma - sD)
    return OrthoAux(Gamma, Delta, gamma, delta)


def ortho_circular_hole(
    matrix: OrthotropicModuli2D,
) -> tuple[OrthoDiscrepancyConstants, OrthoAux]:
    """Circular cylindrical holes in an orthotropic matrix, centers on the axes.

    Plane strain in the x1-x2 plane (Tsukrov and Kachanov, 2000).  Returns the
    in-plane discrepancy constants (lam, mu, xi3, om1); the out-of-plane
    constants of the 3D representation are not determined by the in-plane
    problem and are returned as zero.

    In the isotropic-matrix limit (xi = om = 0) the auxiliary constants reduce
    to Gamma = 1, Delta = 0, gamma = 1, delta = 2 and the result coincides
    with the void limit of cylindrical_inclusion.
    """
    aux = _ortho_aux(matrix.lam, matrix.mu, matrix.xi, matrix.om)
    # near-cancelling products: evaluate in extended precision where available
    ld = np.longdouble
    lam, mu = ld(matrix.lam), ld(matrix.mu)
    g, d = ld(aux.gamma), ld(aux.delta)

    den = ((-1.0 + g) * lam + 2.0 * g * mu) * (lam + g * lam + 2.0 * g * mu)
    xi_den = ((-2.0 + 2.0 * g - d * d) * lam + 4.0 * g * mu - 2.0 * d * d * mu)
    scale = (lam + 2.0 * mu) ** 2
    for name, val in (("denominator", den), ("shear denominator", xi_den ** 2)):
        if val == 0.0:
            raise ValueError("degenerate orthotropy")
        if abs(val) < 1e-9 * scale:
            warnings.warn(f"ill-conditioned orthotropic {name}; "
                          "results may lose precision", RuntimeWarning)

    lam_t = (g * (lam + 2 * mu)
             * (((-1 + g) ** 2 - (1 + g) * d) * lam ** 2
                + 2 * (2 * (-1 + g) * g - (1 + g) * d) * lam * mu
                + 4 * g ** 2 * mu ** 2)) / den
    mu_t = -(lam + 2 * mu) * (
        (-1 + g ** 2) * (-1 + g - d) * lam ** 2
        + 2 * (-1 + g) * g * (2 + 2 * g - d) * lam * mu
        + 4 * g * (g + g ** 2 + d) * mu ** 2) / (2 * den)
    xi_t = -mu_t - (d * (1 + g + d) * (lam + 2 * mu)
                    * ((-1 + g) * lam + 2 * g * mu)
                    * (lam + g * lam + 2 * g * mu)) / xi_den ** 2
    # the 1111/2222 split: this combination equals (C1111 - C2222)/2 of the
    # dilute correction, hence twice it is the 1111 augmentation om1
    om_half = -mu_t - g * (lam + 2 * mu) * (
        (-1 + g ** 2) * (-1 + g + g * d) * lam ** 2
        + 2 * (-1 + g) * (d + 2 * g * (1 + g) * (1 + d)) * lam * mu
        + 4 * g ** 2 * (1 + g + g * d) * mu ** 2) / (2 * den)

    disc = OrthoDiscrepancyConstants(
        lam=float(lam_t), mu=float(mu_t), xi3=float(xi_t), om1=float(2.0 * om_half))
    return disc, aux


def effective_local_tensor(matrix_C: Tensor4, disc_C: Tensor4, f: float) -> Tensor4:
    """C_eq = C_matrix + f * C_disc for 0 <= f < 1."""
    if not (0.0 <= f < 1.0):
        raise ValueError("volume fraction must satisfy 0 <= f < 1")
    if matrix_C.dim != disc_C.dim:
        raise ValueError("dimension mismatch")
    return Tensor4(matrix_C.dim, matrix_C.components + f * disc_C.components)
