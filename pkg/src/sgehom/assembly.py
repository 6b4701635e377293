"""Sixth-order equivalent tensor of the dilute composite.

The generic identification maps a fourth-order discrepancy tensor C_disc,
the inclusion volume fraction f and the RVE radius of inertia rho to

    A_ijhlmn = -f rho^2 / 4 (C_ihln d_jm + C_ihmn d_jl + C_jhln d_im + C_jhmn d_il)

The same tensor admits explicit representations per symmetry class with
scalar constants a1..a12; both routes are implemented and agree to machine
precision, and the identification is inverted back to C_disc.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .dilute import CubicDiscrepancy
from .moduli import OrthoDiscrepancyConstants
from .tensors import Tensor4, Tensor6, _canonicalize, _orbit6

__all__ = [
    "HigherOrderConstants",
    "CompositeCase",
    "assemble_generic",
    "iso_constants",
    "cubic_constants",
    "cubic_higher_order_constants",
    "ortho_constants",
    "assemble_from_constants",
    "invert_to_discrepancy",
]

_SHEAR_PAIRS_3D = ((0, 1), (0, 2), (1, 2))  # groups scaled by a6, a7, a8


@dataclass(frozen=True)
class HigherOrderConstants:
    """Scalars of the explicit sixth-order representations (GPa * length^2).

    a1..a5 span the isotropic representation; a6, a7, a8 scale the (12), (13),
    (23) shear-dyad groups; a9..a12 scale the orthotropic normal-response
    groups.  `symmetry` names the class claimed by the constructor and `dim`
    the target dimension (None = either).
    """

    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0
    a4: float = 0.0
    a5: float = 0.0
    a6: float = 0.0
    a7: float = 0.0
    a8: float = 0.0
    a9: float = 0.0
    a10: float = 0.0
    a11: float = 0.0
    a12: float = 0.0
    symmetry: str = "orthotropic"
    dim: int | None = None

    def as_tuple(self) -> tuple[float, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6,
                self.a7, self.a8, self.a9, self.a10, self.a11, self.a12)


@dataclass(frozen=True)
class CompositeCase:
    """A named composite case: phase data plus f and rho.

    The dilute identification is first order in f; a warning is emitted for
    f > 0.1 where the assumption is strained.
    """

    name: str
    f: float
    rho: float

    def __post_init__(self):
        if not (0.0 < self.f < 1.0):
            raise ValueError("volume fraction must satisfy 0 < f < 1")
        if self.rho <= 0.0:
            raise ValueError("RVE radius of inertia must be positive")
        if self.f > 0.1:
            warnings.warn(f"f = {self.f}: dilute assumption strained",
                          RuntimeWarning)


def _assembly_base(C: np.ndarray) -> np.ndarray:
    """Canonical components of the identification at f rho^2 = 1."""
    dim = C.shape[0]
    d = np.eye(dim)
    raw = (np.einsum("ihln,jm->ijhlmn", C, d)
           + np.einsum("ihmn,jl->ijhlmn", C, d)
           + np.einsum("jhln,im->ijhlmn", C, d)
           + np.einsum("jhmn,il->ijhlmn", C, d))
    return -0.25 * _canonicalize(raw, _orbit6)


def assemble_generic(disc: Tensor4, f: float, rho: float) -> Tensor6:
    """Sixth-order equivalent tensor from any minor/major-symmetric C_disc.

    Exactly linear in C_disc and exactly proportional to f rho^2, so
    normalization by f rho^2 mu1 is well defined.
    """
    return Tensor6(disc.dim, (f * rho ** 2) * _assembly_base(disc.components))


def iso_constants(lam_t: float, mu_t: float, f: float, rho: float,
                  dim: int | None = None) -> HigherOrderConstants:
    """Isotropic identification: a1 = a3 = 0, a2 = -f rho^2 lam_t / 2,
    a4 = a5 = -f rho^2 mu_t / 2."""
    s = -0.5 * f * rho ** 2
    return HigherOrderConstants(a2=s * lam_t, a4=s * mu_t, a5=s * mu_t,
                                symmetry="isotropic", dim=dim)


def cubic_constants(xi_t: float, f: float, rho: float) -> float:
    """Cubic identification: a6 = -f rho^2 xi_t / 2."""
    return -0.5 * f * rho ** 2 * xi_t


def cubic_higher_order_constants(disc: CubicDiscrepancy, f: float, rho: float,
                                 dim: int = 2) -> HigherOrderConstants:
    """Full constant set of the cubic case; in 3D a single a6 scales all
    three shear groups."""
    s = -0.5 * f * rho ** 2
    a6 = cubic_constants(disc.xi_t, f, rho)
    a78 = a6 if dim == 3 else 0.0
    return HigherOrderConstants(a2=s * disc.lam_t, a4=s * disc.mu_t,
                                a5=s * disc.mu_t, a6=a6, a7=a78, a8=a78,
                                symmetry="cubic", dim=dim)


def ortho_constants(disc: OrthoDiscrepancyConstants, f: float, rho: float,
                    dim: int = 3) -> HigherOrderConstants:
    """Orthotropic identification.

    a6, a7, a8 = -f rho^2 / 2 * (xi3, xi2, xi1);
    a9..a12    = -f rho^2 / 2 * (om1, om2, om3, om4); iso part from (lam, mu).
    """
    s = -0.5 * f * rho ** 2
    return HigherOrderConstants(
        a2=s * disc.lam, a4=s * disc.mu, a5=s * disc.mu,
        a6=s * disc.xi3, a7=s * disc.xi2, a8=s * disc.xi1,
        a9=s * disc.om1, a10=s * disc.om2, a11=s * disc.om3, a12=s * disc.om4,
        symmetry="orthotropic", dim=dim)


def _validate_constants(c: HigherOrderConstants, dim: int) -> None:
    if c.dim is not None and c.dim != dim:
        raise ValueError(f"constants tagged dim={c.dim}, requested dim={dim}")
    if dim == 2 and any(x != 0.0 for x in (c.a7, c.a8, c.a10, c.a11, c.a12)):
        raise ValueError("constants involve the out-of-plane direction in d=2")
    if c.a1 != 0.0 or c.a3 != 0.0 or c.a4 != c.a5:
        raise ValueError("inconsistent constants: identification requires "
                         "a1 = a3 = 0 and a4 = a5")
    extras = (c.a6, c.a7, c.a8, c.a9, c.a10, c.a11, c.a12)
    if c.symmetry == "isotropic" and any(x != 0.0 for x in extras):
        raise ValueError("inconsistent constants: isotropic class requires "
                         "a6..a12 = 0")
    if c.symmetry == "cubic":
        if dim == 3 and not (c.a6 == c.a7 == c.a8):
            raise ValueError("inconsistent constants: cubic class requires "
                             "a6 = a7 = a8 in d=3")
        if any(x != 0.0 for x in (c.a9, c.a10, c.a11, c.a12)):
            raise ValueError("inconsistent constants: cubic class requires "
                             "a9..a12 = 0")


def assemble_from_constants(c: HigherOrderConstants, dim: int) -> Tensor6:
    """Componentwise assembly of the explicit representation."""
    _validate_constants(c, dim)
    d = np.eye(dim)
    A = np.zeros((dim,) * 6)

    if c.a1 != 0.0:
        A = A + c.a1 / 2 * (np.einsum("ij,hl,mn->ijhlmn", d, d, d)
                            + np.einsum("ij,hm,ln->ijhlmn", d, d, d)
                            + np.einsum("lm,in,jh->ijhlmn", d, d, d)
                            + np.einsum("lm,ih,jn->ijhlmn", d, d, d))
    A = A + c.a2 / 2 * (np.einsum("ih,jl,mn->ijhlmn", d, d, d)
                        + np.einsum("ih,jm,ln->ijhlmn", d, d, d)
                        + np.einsum("jh,il,mn->ijhlmn", d, d, d)
                        + np.einsum("jh,im,ln->ijhlmn", d, d, d))
    if c.a3 != 0.0:
        A = A + 2 * c.a3 * np.einsum("ij,hn,lm->ijhlmn", d, d, d)
    A = A + c.a4 * (np.einsum("il,jm,hn->ijhlmn", d, d, d)
                    + np.einsum("im,jl,hn->ijhlmn", d, d, d))
    A = A + c.a5 / 2 * (np.einsum("in,jl,hm->ijhlmn", d, d, d)
                        + np.einsum("in,jm,hl->ijhlmn", d, d, d)
                        + np.einsum("jn,il,hm->ijhlmn", d, d, d)
                        + np.einsum("jn,im,hl->ijhlmn", d, d, d))

    shear_coeffs = (c.a6,) if dim == 2 else (c.a6, c.a7, c.a8)
    pairs = ((0, 1),) if dim == 2 else _SHEAR_PAIRS_3D
    for coeff, (p, q) in zip(shear_coeffs, pairs):
        if coeff == 0.0:
            continue
        e = np.zeros((dim, dim))
        e[p, q] = e[q, p] = 1.0
        A = A + coeff / 2 * (np.einsum("ih,ln,jm->ijhlmn", e, e, d)
                             + np.einsum("ih,mn,jl->ijhlmn", e, e, d)
                             + np.einsum("jh,ln,im->ijhlmn", e, e, d)
                             + np.einsum("jh,mn,il->ijhlmn", e, e, d))

    def axis_block(u: np.ndarray) -> np.ndarray:
        return (np.einsum("i,l,jm,h,n->ijhlmn", u, u, d, u, u)
                + np.einsum("i,m,jl,h,n->ijhlmn", u, u, d, u, u)
                + np.einsum("j,l,im,h,n->ijhlmn", u, u, d, u, u)
                + np.einsum("j,m,il,h,n->ijhlmn", u, u, d, u, u))

    u1 = np.zeros(dim)
    u1[0] = 1.0
    if c.a9 != 0.0:
        A = A + c.a9 / 2 * axis_block(u1)
    if dim == 3:
        u3 = np.zeros(3)
        u3[2] = 1.0
        if c.a10 != 0.0:
            A = A + c.a10 / 2 * axis_block(u3)
        if c.a11 != 0.0:
            t = (np.einsum("h,ln,jm,i->ijhlmn", u3, d, d, u3)
                 + np.einsum("h,ln,im,j->ijhlmn", u3, d, d, u3)
                 + np.einsum("h,mn,jl,i->ijhlmn", u3, d, d, u3)
                 + np.einsum("h,mn,il,j->ijhlmn", u3, d, d, u3)
                 + np.einsum("n,ih,jm,l->ijhlmn", u3, d, d, u3)
                 + np.einsum("n,ih,jl,m->ijhlmn", u3, d, d, u3)
                 + np.einsum("n,jh,im,l->ijhlmn", u3, d, d, u3)
                 + np.einsum("n,jh,il,m->ijhlmn", u3, d, d, u3))
            A = A + c.a11 / 2 * t
        if c.a12 != 0.0:
            t = (np.einsum("h,n,i,jm,l->ijhlmn", u1, u3, u1, d, u3)
                 + np.einsum("h,n,i,jl,m->ijhlmn", u1, u3, u1, d, u3)
                 + np.einsum("h,n,j,im,l->ijhlmn", u1, u3, u1, d, u3)
                 + np.einsum("h,n,j,il,m->ijhlmn", u1, u3, u1, d, u3)
                 + np.einsum("h,n,i,jm,l->ijhlmn", u3, u1, u3, d, u1)
                 + np.einsum("h,n,i,jl,m->ijhlmn", u3, u1, u3, d, u1)
                 + np.einsum("h,n,j,im,l->ijhlmn", u3, u1, u3, d, u1)
                 + np.einsum("h,n,j,il,m->ijhlmn", u3, u1, u3, d, u1))
            A = A + c.a12 / 2 * t

    return Tensor6(dim, _canonicalize(A, _orbit6))


def invert_to_discrepancy(A: Tensor6, f: float, rho: float) -> Tensor4:
    """Recover C_disc from a tensor in the image of assemble_generic.

    Uses the nine-term permutation combination

        T_ijhlmn = A_ijhlmn + A_jhimnl + A_hijnlm - A_ijhnlm - A_hijlmn
                   + A_ijhmnl + A_jhilmn - A_jhinlm - A_hijmnl

    which collapses to T = -f rho^2 C_ihln d_jm for any dilute image; the
    scalar -1/(f rho^2) is fixed by the round-trip identity against the
    assembly (a regression test pins it).  The result is validated by
    re-assembly; inputs outside the dilute image are rejected.
    """
    if f <= 0.0 or rho <= 0.0:
        raise ValueError("f and rho must be positive")
    a = A.components
    T = (np.einsum("ijhlmn->ijhlmn", a) + np.einsum("jhimnl->ijhlmn", a)
         + np.einsum("hijnlm->ijhlmn", a) - np.einsum("ijhnlm->ijhlmn", a)
         - np.einsum("hijlmn->ijhlmn", a) + np.einsum("ijhmnl->ijhlmn", a)
         + np.einsum("jhilmn->ijhlmn", a) - np.einsum("jhinlm->ijhlmn", a)
         - np.einsum("hijmnl->ijhlmn", a))
    trace = np.einsum("ijhljn->ihln", T)
    C = Tensor4.from_array(-trace / (f * rho ** 2 * A.dim), A.dim)
    back = assemble_generic(C, f, rho)
    resid = np.abs(back.components - a).max()
    if resid > 1e-9 * (1.0 + A.max_abs()):
        raise ValueError("tensor not of dilute-SGE form "
                         f"(re-assembly residual {resid:.3e})")
    return C
