"""Phase moduli and fourth-order stiffness constructors.

Plane-strain quantities are held as d=2 tensors; the out-of-plane response is
never materialized.  Bulk modulus convention: K = lambda + mu in plane strain,
K = lambda + 2 mu / 3 in 3D.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .tensors import Tensor4

__all__ = [
    "Regime",
    "IsotropicModuli",
    "OrthotropicModuli2D",
    "OrthoDiscrepancyConstants",
    "bulk_modulus",
    "poisson_ratio",
    "from_poisson",
    "iso_tensor4",
    "cubic_tensor4",
    "ortho_tensor4",
]


class Regime(str, enum.Enum):
    PLANE_STRAIN = "plane_strain"
    THREE_D = "three_d"

    @property
    def dim(self) -> int:
        return 2 if self is Regime.PLANE_STRAIN else 3


@dataclass(frozen=True)
class IsotropicModuli:
    """Isotropic Lame constants in GPa plus the deformation regime."""

    lam: float
    mu: float
    regime: Regime

    def __post_init__(self):
        if not (np.isfinite(self.lam) and np.isfinite(self.mu)):
            raise ValueError("moduli must be finite")
        if self.is_void:
            return
        if self.mu <= 0 or bulk_modulus(self) <= 0:
            raise ValueError("physical phase requires mu > 0 and K > 0")

    @property
    def is_void(self) -> bool:
        return self.lam == 0.0 and self.mu == 0.0

    @classmethod
    def void(cls, regime: Regime) -> "IsotropicModuli":
        return cls(0.0, 0.0, regime)


@dataclass(frozen=True)
class OrthotropicModuli2D:
    """In-plane orthotropic constants (lam, mu, xi, om) in GPa.

    The associated plane-strain stiffness is
        C1111 = lam + 2 mu + om,   C2222 = lam + 2 mu,
        C1122 = lam,               C1212 = mu + xi.
    Negative xi or om are admissible (real materials listed in the reference
    data have both).
    """

    lam: float
    mu: float
    xi: float
    om: float

    def __post_init__(self):
        vals = (self.lam, self.mu, self.xi, self.om)
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("moduli must be finite")


@dataclass(frozen=True)
class OrthoDiscrepancyConstants:
    """Constants of an orthotropic fourth-order tensor beyond (lam, mu).

    xi1, xi2, xi3 augment the (23), (13), (12) shear responses; om1 and om2
    augment the 1111 and 3333 normal responses; om3 couples the trace with the
    33 direction; om4 couples the 11 and 33 directions.  A plane-strain
    (x1-x2) tensor uses only (lam, mu, xi3, om1).
    """

    lam: float
    mu: float
    xi1: float = 0.0
    xi2: float = 0.0
    xi3: float = 0.0
    om1: float = 0.0
    om2: float = 0.0
    om3: float = 0.0
    om4: float = 0.0


def bulk_modulus(m: IsotropicModuli) -> float:
    """K = lam + mu (plane strain) or lam + 2 mu / 3 (3D)."""
    if m.regime is Regime.PLANE_STRAIN:
        return m.lam + m.mu
    return m.lam + 2.0 * m.mu / 3.0


def poisson_ratio(m: IsotropicModuli) -> float:
    """nu = lam / (2 (lam + mu)); the 3D ratio is used in both regimes."""
    return m.lam / (2.0 * (m.lam + m.mu))


def from_poisson(nu: float, mu: float, regime: Regime) -> IsotropicModuli:
    """Build moduli from (nu, mu); requires -1 < nu < 1/2 and mu > 0."""
    if not (-1.0 < nu < 0.5):
        raise ValueError("nonphysical Poisson ratio")
    if mu <= 0:
        raise ValueError("mu must be positive")
    lam = 2.0 * mu * nu / (1.0 - 2.0 * nu)
    return IsotropicModuli(lam, mu, regime)


def _kronecker_products(dim: int):
    d = np.eye(dim)
    dd = np.einsum("ij,hk->ijhk", d, d)
    sym = 0.5 * (np.einsum("ih,jk->ijhk", d, d) + np.einsum("ik,jh->ijhk", d, d))
    return dd, sym


def iso_tensor4(lam: float, mu: float, dim: int) -> Tensor4:
    """C_ijhk = lam d_ij d_hk + mu (d_ih d_jk + d_ik d_jh)."""
    dd, sym = _kronecker_products(dim)
    return Tensor4.from_array(lam * dd + 2.0 * mu * sym, dim)


def _shear_dyads(dim: int) -> list[np.ndarray]:
    """Unit shear dyads e(pq) (x) e(pq); (12) only for d=2, (23),(13),(12) for d=3."""
    pairs = [(0, 1)] if dim == 2 else [(1, 2), (0, 2), (0, 1)]
    out = []
    for p, q in pairs:
        e = np.zeros((dim, dim))
        e[p, q] = e[q, p] = 1.0
        out.append(np.einsum("ij,hk->ijhk", e, e))
    return out


def cubic_tensor4(lam: float, mu: float, xi: float, dim: int = 3) -> Tensor4:
    """Isotropic part plus xi on every axis-aligned shear dyad."""
    C = iso_tensor4(lam, mu, dim).components.copy()
    for dyad in _shear_dyads(dim):
        C = C + xi * dyad
    return Tensor4.from_array(C, dim)


def ortho_tensor4(c: OrthoDiscrepancyConstants, dim: int = 3) -> Tensor4:
    """Orthotropic tensor aligned with the coordinate axes.

    Reduces to cubic_tensor4 when xi1 = xi2 = xi3 and every om vanishes, and
    to iso_tensor4 when additionally xi = 0.  For dim = 2 the in-plane
    restriction keeps (lam, mu, xi3, om1).
    """
    C = iso_tensor4(c.lam, c.mu, dim).components.copy()
    dyads = _shear_dyads(dim)
    if dim == 2:
        C = C + c.xi3 * dyads[0]
        e1 = np.zeros((2, 2))
        e1[0, 0] = 1.0
        C = C + c.om1 * np.einsum("ij,hk->ijhk", e1, e1)
        return Tensor4.from_array(C, 2)

    for xi, dyad in zip((c.xi1, c.xi2, c.xi3), dyads):
        C = C + xi * dyad
    d3 = np.eye(3)
    e1 = np.zeros((3, 3))
    e1[0, 0] = 1.0
    e3 = np.zeros((3, 3))
    e3[2, 2] = 1.0
    C = C + c.om1 * np.einsum("ij,hk->ijhk", e1, e1)
    C = C + c.om2 * np.einsum("ij,hk->ijhk", e3, e3)
    C = C + c.om3 * (np.einsum("ij,hk->ijhk", d3, e3) + np.einsum("ij,hk->ijhk", e3, d3))
    C = C + c.om4 * (np.einsum("ij,hk->ijhk", e1, e3) + np.einsum("ij,hk->ijhk", e3, e1))
    return Tensor4.from_array(C, 3)
