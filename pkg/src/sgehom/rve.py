"""RVE shapes and their radius of inertia.

Convention: rho is the radius of the disk (2D) or ball (3D) with the same
normalized centroidal second moment as the shape, i.e.

    rho^2 = 2 J / A        (2D, J = centroidal polar second moment of area)
    rho^2 = 5 I0 / (3 V)   (3D, I0 = integral of |x - centroid|^2 dV)

so that a disk or ball of radius R has rho = R.  The matching constant is a
convention (pass convention="raw" for the bare J/A or I0/V); ratios between
shapes at equal measure do not depend on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.spatial import ConvexHull

__all__ = [
    "Circle",
    "RegularPolygon",
    "ConvexPolygon",
    "Sphere",
    "Cube",
    "TruncatedOctahedron",
    "RveShape",
    "McMoment",
    "radius_of_inertia",
    "mc_second_moment",
    "rve_ratio",
]


@dataclass(frozen=True)
class Circle:
    radius: float
    dim = 2

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    def measure(self) -> float:
        return math.pi * self.radius ** 2

    def moment_ratio(self) -> float:
        return self.radius ** 2 / 2.0

    def centroid(self) -> np.ndarray:
        return np.zeros(2)

    def bounding_box(self) -> np.ndarray:
        r = self.radius
        return np.array([[-r, -r], [r, r]])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return np.einsum("ij,ij->i", pts, pts) <= self.radius ** 2


@dataclass(frozen=True)
class RegularPolygon:
    """Regular n-gon with given side length, centered at the origin."""

    n: int
    side: float
    dim = 2

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("polygon needs n >= 3")
        if self.side <= 0:
            raise ValueError("side must be positive")

    @property
    def circumradius(self) -> float:
        return self.side / (2.0 * math.sin(math.pi / self.n))

    def vertices(self) -> np.ndarray:
        R = self.circumradius
        ang = 2.0 * math.pi * np.arange(self.n) / self.n
        return np.column_stack([R * np.cos(ang), R * np.sin(ang)])

    def measure(self) -> float:
        return 0.25 * self.n * self.side ** 2 / math.tan(math.pi / self.n)

    def moment_ratio(self) -> float:
        # decompose into n isoceles triangles from the center:
        # J/A = Rc^2 (2 + cos(2 pi / n)) / 6
        return self.circumradius ** 2 * (2.0 + math.cos(2.0 * math.pi / self.n)) / 6.0

    def centroid(self) -> np.ndarray:
        return np.zeros(2)

    def bounding_box(self) -> np.ndarray:
        v = self.vertices()
        return np.array([v.min(axis=0), v.max(axis=0)])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return _convex_contains(self.vertices(), pts)


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon from counterclockwise, non-repeating vertices."""

    verts: tuple[tuple[float, float], ...]
    dim = 2

    def __post_init__(self):
        v = np.asarray(self.verts, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise ValueError("need at least three 2D vertices")
        cross = _edge_cross(v)
        if np.any(cross <= 0):
            raise ValueError("vertices must be convex and counterclockwise")

    def vertices(self) -> np.ndarray:
        return np.asarray(self.verts, dtype=float)

    def _shoelace(self):
        v = self.vertices()
        w = np.roll(v, -1, axis=0)
        cr = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
        A = 0.5 * cr.sum()
        cx = ((v[:, 0] + w[:, 0]) * cr).sum() / (6.0 * A)
        cy = ((v[:, 1] + w[:, 1]) * cr).sum() / (6.0 * A)
        # second moments about the origin
        Ix = ((v[:, 1] ** 2 + v[:, 1] * w[:, 1] + w[:, 1] ** 2) * cr).sum() / 12.0
        Iy = ((v[:, 0] ** 2 + v[:, 0] * w[:, 0] + w[:, 0] ** 2) * cr).sum() / 12.0
        return A, np.array([cx, cy]), Ix + Iy

    def measure(self) -> float:
        return self._shoelace()[0]

    def moment_ratio(self) -> float:
        A, c, J0 = self._shoelace()
        return J0 / A - float(c @ c)

    def centroid(self) -> np.ndarray:
        return self._shoelace()[1]

    def bounding_box(self) -> np.ndarray:
        v = self.vertices()
        return np.array([v.min(axis=0), v.max(axis=0)])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return _convex_contains(self.vertices(), pts)


@dataclass(frozen=True)
class Sphere:
    radius: float
    dim = 3

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    def measure(self) -> float:
        return 4.0 / 3.0 * math.pi * self.radius ** 3

    def moment_ratio(self) -> float:
        return 3.0 * self.radius ** 2 / 5.0

    def centroid(self) -> np.ndarray:
        return np.zeros(3)

    def bounding_box(self) -> np.ndarray:
        r = self.radius
        return np.array([[-r] * 3, [r] * 3])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return np.einsum("ij,ij->i", pts, pts) <= self.radius ** 2


@dataclass(frozen=True)
class Cube:
    side: float
    dim = 3

    def __post_init__(self):
        if self.side <= 0:
            raise ValueError("side must be positive")

    def measure(self) -> float:
        return self.side ** 3

    def moment_ratio(self) -> float:
        return self.side ** 2 / 4.0

    def centroid(self) -> np.ndarray:
        return np.zeros(3)

    def bounding_box(self) -> np.ndarray:
        h = self.side / 2.0
        return np.array([[-h] * 3, [h] * 3])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return np.abs(pts).max(axis=1) <= self.side / 2.0


@dataclass(frozen=True)
class TruncatedOctahedron:
    """Truncated octahedron with given edge length.

    Vertices are the 24 permutations of (0, +-1, +-2) * edge / sqrt(2); the
    second moment is integrated exactly by tetrahedral decomposition of the
    convex hull.
    """

    edge: float
    dim = 3

    def __post_init__(self):
        if self.edge <= 0:
            raise ValueError("edge must be positive")

    @property
    def _s(self) -> float:
        return self.edge / math.sqrt(2.0)

    def vertices(self) -> np.ndarray:
        s = self._s
        out = []
        for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            for s1 in (1.0, -1.0):
                for s2 in (1.0, -1.0):
                    base = [0.0, s1 * s, s2 * 2.0 * s]
                    out.append(tuple(base[p] for p in perm))
        return np.unique(np.array(out), axis=0)

    def measure(self) -> float:
        return 8.0 * math.sqrt(2.0) * self.edge ** 3

    def moment_ratio(self) -> float:
        V, c, I0 = _polyhedron_moment(self.vertices())
        return I0 / V

    def centroid(self) -> np.ndarray:
        return np.zeros(3)

    def bounding_box(self) -> np.ndarray:
        m = 2.0 * self._s
        return np.array([[-m] * 3, [m] * 3])

    def contains(self, pts: np.ndarray) -> np.ndarray:
        s = self._s
        a = np.abs(pts)
        return (a.sum(axis=1) <= 3.0 * s) & (a.max(axis=1) <= 2.0 * s)


RveShape = (Circle | RegularPolygon | ConvexPolygon | Sphere | Cube
            | TruncatedOctahedron)


def _edge_cross(v: np.ndarray) -> np.ndarray:
    a = np.roll(v, -1, axis=0) - v
    b = np.roll(v, -2, axis=0) - np.roll(v, -1, axis=0)
    return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]


def _convex_contains(verts: np.ndarray, pts: np.ndarray) -> np.ndarray:
    inside = np.ones(len(pts), dtype=bool)
    w = np.roll(verts, -1, axis=0)
    for v0, v1 in zip(verts, w):
        e = v1 - v0
        r = pts - v0
        inside &= (e[0] * r[:, 1] - e[1] * r[:, 0]) >= 0.0
    return inside


def _polyhedron_moment(verts: np.ndarray):
    """Exact (V, centroid, I0 about centroid) of a convex polyhedron.

    Tetrahedral fan from the vertex mean over the hull facets; per-tetra
    integrals of |x|^2 use the Gram-matrix closed form.
    """
    ref = verts.mean(axis=0)
    hull = ConvexHull(verts)
    V = 0.0
    first = np.zeros(3)
    second = 0.0  # integral of |x - ref|^2
    for simplex in hull.simplices:
        p = verts[simplex] - ref
        M = p.T  # columns are the edge vectors from ref
        vt = abs(np.linalg.det(M)) / 6.0
        if vt == 0.0:
            continue
        V += vt
        first += vt * p.sum(axis=0) / 4.0
        G = M.T @ M
        second += vt / 20.0 * (G.sum() + np.trace(G))
    centroid = ref + first / V
    I0 = second - V * float((centroid - ref) @ (centroid - ref))
    return V, centroid, I0


_MATCH = {2: 2.0, 3: 5.0 / 3.0}


def radius_of_inertia(shape: RveShape, convention: str = "matched") -> float:
    """rho from the centroidal second moment; see module docstring."""
    ratio = shape.moment_ratio()
    if ratio <= 0.0:
        raise ValueError("degenerate geometry")
    if convention == "matched":
        return math.sqrt(_MATCH[shape.dim] * ratio)
    if convention == "raw":
        return math.sqrt(ratio)
    raise ValueError(f"unknown convention {convention!r}")


class McMoment(NamedTuple):
    value: float
    stderr: float
    n_inside: int


def mc_second_moment(shape: RveShape, samples: int, seed: int) -> McMoment:
    """Monte Carlo estimate of J/A (2D) or I0/V (3D) with standard error.

    Rejection sampling of uniform points in the bounding box; deterministic
    for a fixed seed.
    """
    if samples < 10_000:
        raise ValueError("need at least 1e4 samples")
    rng = np.random.default_rng(seed)
    lo, hi = shape.bounding_box()
    pts = rng.uniform(lo, hi, size=(samples, shape.dim))
    pts = pts[shape.contains(pts)]
    if len(pts) < 2:
        raise ValueError("degenerate geometry: no interior points sampled")
    r2 = np.einsum("ij,ij->i", pts - shape.centroid(), pts - shape.centroid())
    value = float(r2.mean())
    stderr = float(r2.std(ddof=1) / math.sqrt(len(r2)))
    return McMoment(value, stderr, len(pts))


def rve_ratio(shape_m: RveShape, shape_n: RveShape,
              convention: str = "matched") -> float:
    """rho^2(M) / rho^2(N) after rescaling N to the measure of M.

    Equals the componentwise ratio of the sixth-order equivalent tensors of
    two composites differing only in RVE shape (same f and discrepancy).
    """
    if shape_m.dim != shape_n.dim:
        raise ValueError("dimension mismatch")
    rm = radius_of_inertia(shape_m, convention)
    rn = radius_of_inertia(shape_n, convention)
    scale = (shape_n.measure() / shape_m.measure()) ** (2.0 / shape_m.dim)
    return (rm * rm) / (rn * rn) * scale
