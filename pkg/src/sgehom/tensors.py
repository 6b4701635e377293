"""Dense fourth- and sixth-order tensor values with exact symmetry storage.

Dimension d is 2 or 3 throughout.  Fourth-order tensors carry the minor
symmetries C_ijhk = C_jihk = C_ijkh and the major symmetry C_ijhk = C_hkij.
Sixth-order tensors are symmetric in the first index pair, in the second
index pair, and under exchange of the two index triples:
A_ijhlmn = A_jihlmn = A_ijhmln = A_lmnijh.

Storage is canonical: components are averaged over the full symmetry group
orbit by orbit, so the stored array satisfies every symmetry relation
bit-exactly.  All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

__all__ = [
    "Tensor4",
    "Tensor6",
    "OrthogonalMap",
    "sym_matrix_basis",
    "chi_basis",
    "rotate_tensor4",
    "rotate_tensor6",
    "is_invariant_under",
    "sym_matrix_of_tensor4",
    "chi_matrix_of_tensor6",
    "min_eigenvalue_sym",
]

_SYM_CHECK_TOL = 1e-8


def _orbit4(idx):
    i, j, h, k = idx
    out = set()
    for a, b in ((i, j), (j, i)):
        for c, d in ((h, k), (k, h)):
            out.add((a, b, c, d))
            out.add((c, d, a, b))
    return out


def _orbit6(idx):
    i, j, h, l, m, n = idx
    out = set()
    for a, b in ((i, j), (j, i)):
        for c, d in ((l, m), (m, l)):
            out.add((a, b, h, c, d, n))
            out.add((c, d, n, a, b, h))
    return out


def _canonicalize(arr: np.ndarray, orbit) -> np.ndarray:
    """Average over symmetry orbits; every orbit member receives the same float."""
    out = np.empty_like(arr, dtype=float)
    done = np.zeros(arr.shape, dtype=bool)
    for idx in product(range(arr.shape[0]), repeat=arr.ndim):
        if done[idx]:
            continue
        members = sorted(orbit(idx))
        val = sum(float(arr[m]) for m in members) / len(members)
        for m in members:
            out[m] = val
            done[m] = True
    return out


def _check_close(raw: np.ndarray, canon: np.ndarray, what: str) -> None:
    scale = 1.0 + float(np.abs(raw).max(initial=0.0))
    dev = float(np.abs(raw - canon).max(initial=0.0))
    if dev > _SYM_CHECK_TOL * scale:
        raise ValueError(f"{what}: components violate the required symmetries "
                         f"(max deviation {dev:.3e})")


@dataclass(frozen=True)
class Tensor4:
    """Minor- and major-symmetric fourth-order tensor (units: GPa)."""

    dim: int
    components: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError("dim must be 2 or 3")
        if self.components.shape != (self.dim,) * 4:
            raise ValueError("component array shape does not match dim")
        self.components.setflags(write=False)

    @classmethod
    def from_array(cls, arr, dim: int | None = None) -> "Tensor4":
        arr = np.asarray(arr, dtype=float)
        dim = arr.shape[0] if dim is None else dim
        canon = _canonicalize(arr, _orbit4)
        _check_close(arr, canon, "Tensor4")
        return cls(dim, canon)

    @classmethod
    def zero(cls, dim: int) -> "Tensor4":
        return cls(dim, np.zeros((dim,) * 4))

    def max_abs(self) -> float:
        return float(np.abs(self.components).max())

    def __add__(self, other: "Tensor4") -> "Tensor4":
        _require_same_dim(self, other)
        return Tensor4(self.dim, _canonicalize(self.components + other.components, _orbit4))

    def __sub__(self, other: "Tensor4") -> "Tensor4":
        _require_same_dim(self, other)
        return Tensor4(self.dim, _canonicalize(self.components - other.components, _orbit4))

    def __mul__(self, s: float) -> "Tensor4":
        return Tensor4(self.dim, _canonicalize(self.components * float(s), _orbit4))

    __rmul__ = __mul__


@dataclass(frozen=True)
class Tensor6:
    """Sixth-order tensor with the canonical pair/triple symmetries (GPa*length^2)."""

    dim: int
    components: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError("dim must be 2 or 3")
        if self.components.shape != (self.dim,) * 6:
            raise ValueError("component array shape does not match dim")
        self.components.setflags(write=False)

    @classmethod
    def from_array(cls, arr, dim: int | None = None) -> "Tensor6":
        arr = np.asarray(arr, dtype=float)
        dim = arr.shape[0] if dim is None else dim
        canon = _canonicalize(arr, _orbit6)
        _check_close(arr, canon, "Tensor6")
        return cls(dim, canon)

    @classmethod
    def zero(cls, dim: int) -> "Tensor6":
        return cls(dim, np.zeros((dim,) * 6))

    def max_abs(self) -> float:
        return float(np.abs(self.components).max())

    def __add__(self, other: "Tensor6") -> "Tensor6":
        _require_same_dim(self, other)
        return Tensor6(self.dim, _canonicalize(self.components + other.components, _orbit6))

    def __sub__(self, other: "Tensor6") -> "Tensor6":
        _require_same_dim(self, other)
        return Tensor6(self.dim, _canonicalize(self.components - other.components, _orbit6))

    def __mul__(self, s: float) -> "Tensor6":
        return Tensor6(self.dim, _canonicalize(self.components * float(s), _orbit6))

    __rmul__ = __mul__


@dataclass(frozen=True)
class OrthogonalMap:
    """Orthogonal transformation Q with Q Q^T = I within 1e-12 per entry."""

    dim: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        Q = np.asarray(self.matrix, dtype=float)
        if Q.shape != (self.dim, self.dim):
            raise ValueError("matrix shape does not match dim")
        dev = np.abs(Q @ Q.T - np.eye(self.dim)).max()
        if dev > 1e-12:
            raise ValueError(f"matrix is not orthogonal (max |QQ^T - I| = {dev:.3e})")
        object.__setattr__(self, "matrix", Q)
        self.matrix.setflags(write=False)

    @classmethod
    def identity(cls, dim: int) -> "OrthogonalMap":
        return cls(dim, np.eye(dim))

    @classmethod
    def rotation_2d(cls, angle: float) -> "OrthogonalMap":
        c, s = np.cos(angle), np.sin(angle)
        return cls(2, np.array([[c, -s], [s, c]]))

    @classmethod
    def rotation_about_axis(cls, axis: int, angle: float) -> "OrthogonalMap":
        """3D rotation about coordinate axis 0, 1 or 2."""
        c, s = np.cos(angle), np.sin(angle)
        a, b = [k for k in range(3) if k != axis]
        Q = np.eye(3)
        Q[a, a] = c
        Q[a, b] = -s
        Q[b, a] = s
        Q[b, b] = c
        return cls(3, Q)

    @classmethod
    def reflection(cls, dim: int, axis: int) -> "OrthogonalMap":
        Q = np.eye(dim)
        Q[axis, axis] = -1.0
        return cls(dim, Q)

    @classmethod
    def random_rotation(cls, dim: int, rng: np.random.Generator) -> "OrthogonalMap":
        """Haar-ish random proper rotation via QR of a Gaussian matrix."""
        M = rng.standard_normal((dim, dim))
        Q, R = np.linalg.qr(M)
        Q = Q * np.sign(np.diag(R))
        if np.linalg.det(Q) < 0:
            Q[:, 0] = -Q[:, 0]
        return cls(dim, Q)

    def compose(self, other: "OrthogonalMap") -> "OrthogonalMap":
        """Map applying `other` first, then `self`."""
        _require_same_dim(self, other)
        return OrthogonalMap(self.dim, self.matrix @ other.matrix)


def _require_same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def sym_matrix_basis(dim: int) -> np.ndarray:
    """Orthonormal basis of symmetric second-order tensors, sqrt(2) weight off-diagonal.

    Order: (11), (22)[, (33)], then off-diagonal pairs (12)[, (13), (23)].
    Returned shape (n, dim, dim) with n = dim (dim + 1) / 2.
    """
    mats = []
    for i in range(dim):
        B = np.zeros((dim, dim))
        B[i, i] = 1.0
        mats.append(B)
    r = 1.0 / np.sqrt(2.0)
    for i in range(dim):
        for j in range(i + 1, dim):
            B = np.zeros((dim, dim))
            B[i, j] = B[j, i] = r
            mats.append(B)
    return np.array(mats)


def chi_basis(dim: int) -> np.ndarray:
    """Orthonormal basis of third-order tensors symmetric in the first two indices.

    Elements are S_a (x) e_k with S_a from sym_matrix_basis; shape (n*dim, dim, dim, dim).
    """
    S = sym_matrix_basis(dim)
    mats = []
    for a in range(S.shape[0]):
        for k in range(dim):
            B = np.zeros((dim,) * 3)
            B[:, :, k] = S[a]
            mats.append(B)
    return np.array(mats)


def rotate_tensor4(C: Tensor4, Q: OrthogonalMap) -> Tensor4:
    """Push forward: C'_ijhk = Q_ip Q_jq Q_hr Q_ks C_pqrs."""
    _require_same_dim(C, Q)
    q = Q.matrix
    raw = np.einsum("ip,jq,hr,ks,pqrs->ijhk", q, q, q, q, C.components, optimize=True)
    return Tensor4(C.dim, _canonicalize(raw, _orbit4))


def rotate_tensor6(A: Tensor6, Q: OrthogonalMap) -> Tensor6:
    """Push forward: A'_ijhlmn = Q_ip Q_jq Q_hr Q_ls Q_mt Q_nu A_pqrstu."""
    _require_same_dim(A, Q)
    q = Q.matrix
    raw = np.einsum("ip,jq,hr,ls,mt,nu,pqrstu->ijhlmn", q, q, q, q, q, q,
                    A.components, optimize=True)
    return Tensor6(A.dim, _canonicalize(raw, _orbit6))


def is_invariant_under(T: Tensor4 | Tensor6, Q: OrthogonalMap, tol: float) -> bool:
    """True iff max |T - rot(T)| <= tol * (1 + max |T|)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(T, Tensor4):
        R = rotate_tensor4(T, Q)
    elif isinstance(T, Tensor6):
        R = rotate_tensor6(T, Q)
    else:
        raise TypeError("expected Tensor4 or Tensor6")
    dev = np.abs(T.components - R.components).max()
    return bool(dev <= tol * (1.0 + T.max_abs()))


def sym_matrix_of_tensor4(C: Tensor4) -> np.ndarray:
    """Matrix of the quadratic form E : C : E on the orthonormal symmetric basis."""
    B = sym_matrix_basis(C.dim)
    M = np.einsum("aij,ijhk,bhk->ab", B, C.components, B, optimize=True)
    M = 0.5 * (M + M.T)
    return M


def chi_matrix_of_tensor6(A: Tensor6) -> np.ndarray:
    """Matrix of the quadratic form chi : A : chi on the orthonormal chi basis."""
    B = chi_basis(A.dim)
    M = np.einsum("aijh,ijhlmn,blmn->ab", B, A.components, B, optimize=True)
    M = 0.5 * (M + M.T)
    return M


def min_eigenvalue_sym(M: np.ndarray) -> float:
    """Smallest eigenvalue of a symmetric matrix (LAPACK, ascending order)."""
    M = np.asarray(M, dtype=float)
    scale = 1.0 + float(np.abs(M).max(initial=0.0))
    if np.abs(M - M.T).max(initial=0.0) > 1e-10 * scale:
        raise ValueError("matrix is not symmetric")
    return float(np.linalg.eigvalsh(0.5 * (M + M.T))[0])
