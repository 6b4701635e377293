"""Named composite cases, parameter sweeps and golden-table reproduction.

This is the engine behind the command line front end: JSON case configs in,
JSON reports / CSV sweep rows out.  Everything here is deterministic; a
given config always produces byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rve as rve_mod
from .admissibility import (cubic_nd_check, iso_nd_check, ortho_nd_check,
                            pd_threshold, spectral_nd_tensor4,
                            spectral_pd_tensor6)
from .assembly import (CompositeCase, HigherOrderConstants, assemble_generic,
                       cubic_higher_order_constants, iso_constants,
                       ortho_constants)
from .dilute import (IsoDiscrepancy, POLYGON_CONSTANTS, cylindrical_inclusion,
                     ortho_circular_hole, polygonal_hole, spherical_inclusion,
                     square_hole_aligned, square_hole_random)
from .moduli import (IsotropicModuli, OrthotropicModuli2D, Regime,
                     bulk_modulus, cubic_tensor4, from_poisson, iso_tensor4,
                     ortho_tensor4, poisson_ratio)
from .tensors import OrthogonalMap, Tensor4, Tensor6, is_invariant_under

__all__ = [
    "ConfigError",
    "DomainError",
    "CASE_NAMES",
    "ORTHO_REFERENCE",
    "run_case",
    "run_sweep",
    "sweep_csv",
    "reproduce_tables",
    "classify_symmetry",
]

CASE_NAMES = (
    "cylindrical_inclusion",
    "spherical_inclusion",
    "polygonal_hole",
    "square_hole_aligned",
    "square_hole_random",
    "ortho_circular_hole",
)


class ConfigError(ValueError):
    """Malformed or inconsistent configuration."""


class DomainError(ValueError):
    """Valid configuration outside the mathematical domain of a case."""


@dataclass(frozen=True)
class OrthoReferenceRow:
    """One golden row: orthotropic matrix constants and the expected
    normalized higher-order constants of the dilute circular-hole case.

    Expected cells follow the tabulation convention of the reference data:
    (a2, a4, a6, a9)/(f rho^2 mu1) with the a6 cell storing HALF the
    normalized 1111-augmentation constant and the a9 cell the normalized
    shear-augmentation constant.  Input rows and expected rows are paired by
    numerical validation (see tests); with this pairing 14 of the 15 rows
    agree to the 3 printed decimals.  The Pine/Or2 row is internally
    inconsistent in the source data (all four cells off by a uniform ~0.6%,
    consistent with normalization by mu1 = 0.518 rather than the stated
    0.515) and no admissible input reproduces it; it is kept verbatim.
    """

    material: str
    orientation: str
    inputs: tuple[float, float, float, float]  # lam, mu, xi, om (GPa)
    expected: tuple[float, float, float, float]


ORTHO_REFERENCE: tuple[OrthoReferenceRow, ...] = (
    OrthoReferenceRow("olivine", "Or1", (56.0, 52.0, -27.5, 112.0), (2.426, 1.661, 3.077, -1.198)),
    OrthoReferenceRow("olivine", "Or2", (60.0, 106.0, -75.0, -80.0), (1.133, 2.105, -1.014, -1.804)),
    OrthoReferenceRow("olivine", "Or3", (66.0, 47.0, -17.0, 32.0), (3.254, 1.497, 0.858, -0.780)),
    OrthoReferenceRow("pine", "Or1", (0.940, 8.080, -7.625, -15.310), (0.269, 3.789, -3.754, -3.737)),
    OrthoReferenceRow("pine", "Or2", (0.760, 0.515, -0.476, -0.550), (10.297, 3.551, -3.268, -3.497)),
    OrthoReferenceRow("pine", "Or3", (0.740, 8.180, -7.590, -15.860), (0.142, 3.478, -3.455, -3.399)),
    OrthoReferenceRow("olivinite", "Or1", (82.0, 64.0, -29.7, -11.0), (3.119, 1.644, -0.220, -1.045)),
    OrthoReferenceRow("olivinite", "Or2", (92.0, 53.5, -18.05, 33.0), (4.398, 1.414, 0.804, -0.675)),
    OrthoReferenceRow("olivinite", "Or3", (93.0, 58.5, -21.85, 22.0), (4.011, 1.481, 0.487, -0.782)),
    OrthoReferenceRow("marble", "Or1", (47.0, 31.5, -15.2, -6.0), (4.023, 1.629, -0.257, -1.068)),
    OrthoReferenceRow("marble", "Or2", (52.0, 26.0, -10.65, 15.0), (5.866, 1.389, 0.823, -0.768)),
    OrthoReferenceRow("marble", "Or3", (51.0, 29.5, -14.65, 9.0), (5.080, 1.532, 0.440, -1.015)),
    OrthoReferenceRow("canine_femora", "Or1", (11.900, 5.150, -2.815, 7.500), (8.279, 1.219, 2.465, -0.801)),
    OrthoReferenceRow("canine_femora", "Or2", (11.900, 8.900, -6.065, -10.700), (4.401, 2.110, -1.875, -1.788)),
    OrthoReferenceRow("canine_femora", "Or3", (9.730, 6.235, -2.900, -3.200), (4.273, 1.660, -0.690, -1.063)),
)


# ---------------------------------------------------------------- config ---

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigError(msg)


def _parse_iso_moduli(d, regime: Regime, who: str) -> IsotropicModuli:
    _require(isinstance(d, dict), f"{who} must be an object")
    keys = set(d)
    if keys == {"lambda", "mu"}:
        try:
            return IsotropicModuli(float(d["lambda"]), float(d["mu"]), regime)
        except ValueError as e:
            raise DomainError(f"{who}: {e}") from None
    if keys == {"nu", "mu"}:
        try:
            return from_poisson(float(d["nu"]), float(d["mu"]), regime)
        except ValueError as e:
            raise DomainError(f"{who}: {e}") from None
    raise ConfigError(f"{who} must give exactly {{lambda, mu}} or {{nu, mu}}")


def _parse_inclusion(spec, matrix: IsotropicModuli, regime: Regime) -> IsotropicModuli:
    if spec == "void":
        return IsotropicModuli.void(regime)
    _require(isinstance(spec, dict), "inclusion must be 'void' or an object")
    keys = set(spec)
    if keys == {"mu_ratio", "nu"}:
        ratio = float(spec["mu_ratio"])
        _require(ratio >= 0.0, "mu_ratio must be nonnegative")
        if ratio == 0.0:
            return IsotropicModuli.void(regime)
        try:
            return from_poisson(float(spec["nu"]), ratio * matrix.mu, regime)
        except ValueError as e:
            raise DomainError(f"inclusion: {e}") from None
    return _parse_iso_moduli(spec, regime, "inclusion")


def _parse_rve(d) -> float:
    _require(isinstance(d, dict), "rve must be an object")
    if set(d) == {"rho"}:
        rho = float(d["rho"])
        _require(rho > 0.0, "rho must be positive")
        return rho
    _require("shape" in d, "rve must give either {rho} or {shape, ...}")
    shape = _shape_from_config(d)
    return rve_mod.radius_of_inertia(shape)


def _shape_from_config(d) -> rve_mod.RveShape:
    kind = d["shape"]
    try:
        if kind == "circle":
            return rve_mod.Circle(float(d["radius"]))
        if kind == "sphere":
            return rve_mod.Sphere(float(d["radius"]))
        if kind == "square":
            return rve_mod.RegularPolygon(4, float(d["side"]))
        if kind == "hexagon":
            return rve_mod.RegularPolygon(6, float(d["side"]))
        if kind == "regular_polygon":
            return rve_mod.RegularPolygon(int(d["n"]), float(d["side"]))
        if kind == "convex_polygon":
            return rve_mod.ConvexPolygon(tuple(map(tuple, d["vertices"])))
        if kind == "cube":
            return rve_mod.Cube(float(d["side"]))
        if kind == "truncated_octahedron":
            return rve_mod.TruncatedOctahedron(float(d["edge"]))
    except KeyError as e:
        raise ConfigError(f"rve shape {kind!r}: missing parameter {e}") from None
    except ValueError as e:
        raise ConfigError(f"rve shape {kind!r}: {e}") from None
    raise ConfigError(f"unknown rve shape {kind!r}")


_CASE_REGIME = {
    "cylindrical_inclusion": Regime.PLANE_STRAIN,
    "spherical_inclusion": Regime.THREE_D,
    "polygonal_hole": Regime.PLANE_STRAIN,
    "square_hole_aligned": Regime.PLANE_STRAIN,
    "square_hole_random": Regime.PLANE_STRAIN,
    "ortho_circular_hole": Regime.PLANE_STRAIN,
}


def _parse_common(config) -> tuple[str, Regime, float, float]:
    _require(isinstance(config, dict), "config must be a JSON object")
    case = config.get("case")
    _require(case in CASE_NAMES, f"case must be one of {CASE_NAMES}")
    regime = _CASE_REGIME[case]
    if "regime" in config:
        _require(config["regime"] == regime.value,
                 f"case {case} implies regime {regime.value}")
    _require("f" in config, "missing volume fraction f")
    f = float(config["f"])
    _require(0.0 < f < 1.0, "f must lie in (0, 1)")
    _require("rve" in config, "missing rve spec")
    rho = _parse_rve(config["rve"])
    CompositeCase(case, f, rho)  # range check plus the dilute-strain warning
    return case, regime, f, rho


# -------------------------------------------------------------- symmetry ---

def classify_symmetry(A: Tensor6, tol: float = 1e-10) -> str:
    """Symmetry class of a sixth-order tensor among the classes produced
    by the dilute identification: isotropic, cubic, orthotropic, general."""
    dim = A.dim
    rng = np.random.default_rng(1234)  # fixed probes: classification is deterministic
    probes_iso = [OrthogonalMap.random_rotation(dim, rng) for _ in range(3)]
    if all(is_invariant_under(A, Q, tol) for Q in probes_iso):
        return "isotropic"
    if dim == 2:
        quarter = OrthogonalMap.rotation_2d(math.pi / 2.0)
        refl = [OrthogonalMap.reflection(2, k) for k in range(2)]
        if is_invariant_under(A, quarter, tol) and all(
                is_invariant_under(A, Q, tol) for Q in refl):
            return "cubic"
        if all(is_invariant_under(A, Q, tol) for Q in refl):
            return "orthotropic"
        return "general"
    quarters = [OrthogonalMap.rotation_about_axis(k, math.pi / 2.0) for k in range(3)]
    if all(is_invariant_under(A, Q, tol) for Q in quarters):
        return "cubic"
    refl = [OrthogonalMap.reflection(3, k) for k in range(3)]
    if all(is_invariant_under(A, Q, tol) for Q in refl):
        return "orthotropic"
    return "general"


# -------------------------------------------------------------- run_case ---

def _spectral_dict(v) -> dict:
    return {"definite": v.definite, "min_eig": v.min_eig,
            "max_eig": v.max_eig, "marginal": v.marginal}


def _norm(x: float, f: float, rho: float, mu1: float) -> float:
    return x / (f * rho ** 2 * mu1)


def _iso_case_report(case, matrix, inclusion, f, rho, disc: IsoDiscrepancy,
                     dim: int, classify_tol: float = 1e-10) -> dict:
    K1, mu1 = bulk_modulus(matrix), matrix.mu
    consts = iso_constants(disc.lam_t, disc.mu_t, f, rho, dim=dim)
    C_t = iso_tensor4(disc.lam_t, disc.mu_t, dim)
    return _finish_report(case, matrix, inclusion, f, rho, dim,
                          disc_dict={"K_t": disc.K_t, "mu_t": disc.mu_t,
                                     "lam_t": disc.lam_t},
                          eff={"lam_eq": matrix.lam + f * disc.lam_t,
                               "mu_eq": mu1 + f * disc.mu_t,
                               "K_eq": K1 + f * disc.K_t},
                          consts=consts, C_t=C_t,
                          closed_form=iso_nd_check(disc.K_t, disc.mu_t),
                          classify_tol=classify_tol)


def _finish_report(case, matrix, inclusion, f, rho, dim, disc_dict, eff,
                   consts: HigherOrderConstants, C_t: Tensor4,
                   closed_form: bool, classify_tol: float = 1e-10) -> dict:
    mu1 = matrix.mu
    A = assemble_generic(C_t, f, rho)
    nd = spectral_nd_tensor4(C_t)
    pd = spectral_pd_tensor6(A)
    named = {k: v for k, v in zip(
        ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8",
         "a9", "a10", "a11", "a12"), consts.as_tuple()) if v != 0.0 or k in
        ("a2", "a4", "a5")}
    report = {
        "case": case,
        "regime": _CASE_REGIME[case].value,
        "f": f,
        "rho": rho,
        "matrix": _moduli_dict(matrix),
        "inclusion": "void" if getattr(inclusion, "is_void", False) else
                     (_moduli_dict(inclusion) if inclusion is not None else None),
        "discrepancy": disc_dict,
        "effective_moduli": eff,
        "higher_order": {**named,
                         "normalized": {k: _norm(v, f, rho, mu1)
                                        for k, v in named.items()}},
        "definiteness": {
            "closed_form_negative_definite": closed_form,
            "spectral_negative_definite": _spectral_dict(nd),
            "sixth_order_positive_definite": _spectral_dict(pd),
        },
        "symmetry_class": classify_symmetry(A, classify_tol),
    }
    if (isinstance(inclusion, IsotropicModuli) and not inclusion.is_void
            and isinstance(matrix, IsotropicModuli)):
        report["definiteness"]["pd_threshold_mu_ratio"] = pd_threshold(
            poisson_ratio(matrix), poisson_ratio(inclusion),
            matrix.regime)
        report["definiteness"]["mu_ratio"] = inclusion.mu / matrix.mu
    return report


def _moduli_dict(m) -> dict:
    if isinstance(m, IsotropicModuli):
        return {"lambda": m.lam, "mu": m.mu, "K": bulk_modulus(m),
                "nu": poisson_ratio(m) if not m.is_void else None}
    if isinstance(m, OrthotropicModuli2D):
        return {"lambda": m.lam, "mu": m.mu, "xi": m.xi, "omega": m.om}
    raise TypeError(type(m))


def _cylindrical_figure_constants(disc: IsoDiscrepancy, f, rho) -> dict:
    """Reported constants for the cylindrical case in the convention of the
    published reference curves, where the shear discrepancy enters at half
    weight: a4 = -f rho^2 mu_t / 4, a2 = -f rho^2 (K_t - mu_t / 2) / 2.
    The generic identification is reported alongside."""
    a4 = -f * rho ** 2 * disc.mu_t / 4.0
    a2 = -f * rho ** 2 * (disc.K_t - disc.mu_t / 2.0) / 2.0
    return {"a2": a2, "a4": a4, "a5": a4}


def run_case(config: dict, classify_tol: float = 1e-10) -> dict:
    """Evaluate one composite case; returns the JSON-ready report.

    classify_tol is the relative tolerance of the symmetry classification.
    """
    case, regime, f, rho = _parse_common(config)
    dim = regime.dim

    if case in ("cylindrical_inclusion", "spherical_inclusion"):
        _require("matrix" in config and "inclusion" in config,
                 f"{case} needs matrix and inclusion")
        matrix = _parse_iso_moduli(config["matrix"], regime, "matrix")
        inclusion = _parse_inclusion(config["inclusion"], matrix, regime)
        fn = (cylindrical_inclusion if case == "cylindrical_inclusion"
              else spherical_inclusion)
        try:
            disc = fn(matrix, inclusion)
        except ValueError as e:
            raise DomainError(f"{case}: {e}") from None
        report = _iso_case_report(case, matrix, inclusion, f, rho, disc, dim,
                                  classify_tol)
        if case == "cylindrical_inclusion":
            fig = _cylindrical_figure_constants(disc, f, rho)
            gen = report["higher_order"]
            report["higher_order"] = {**fig,
                                      "normalized": {k: _norm(v, f, rho, matrix.mu)
                                                     for k, v in fig.items()}}
            report["higher_order_generic"] = gen
        return report

    if case == "polygonal_hole":
        matrix = _parse_iso_moduli(config.get("matrix"), regime, "matrix")
        _require("n" in config, "polygonal_hole needs n")
        try:
            n = float(config["n"])
        except (TypeError, ValueError):
            raise ConfigError("n must be an integer >= 3 or 'inf'") from None
        if n != math.inf:
            _require(n == int(n) and n >= 3, "n must be an integer >= 3 or 'inf'")
            n = int(n)
        try:
            disc = polygonal_hole(matrix, n)
        except ValueError as e:
            raise DomainError(f"polygonal_hole: {e}") from None
        return _iso_case_report(case, matrix, IsotropicModuli.void(regime),
                                f, rho, disc, dim, classify_tol)

    if case == "square_hole_random":
        matrix = _parse_iso_moduli(config.get("matrix"), regime, "matrix")
        disc = square_hole_random(matrix)
        return _iso_case_report(case, matrix, IsotropicModuli.void(regime),
                                f, rho, disc, dim, classify_tol)

    if case == "square_hole_aligned":
        matrix = _parse_iso_moduli(config.get("matrix"), regime, "matrix")
        disc = square_hole_aligned(matrix)
        consts = cubic_higher_order_constants(disc, f, rho, dim=2)
        C_t = cubic_tensor4(disc.lam_t, disc.mu_t, disc.xi_t, dim=2)
        return _finish_report(case, matrix, IsotropicModuli.void(regime),
                              f, rho, 2,
                              disc_dict={"lam_t": disc.lam_t, "mu_t": disc.mu_t,
                                         "xi_t": disc.xi_t, "K_t": disc.K_t},
                              eff={"lam_eq": matrix.lam + f * disc.lam_t,
                                   "mu_eq": matrix.mu + f * disc.mu_t,
                                   "xi_eq": f * disc.xi_t},
                              consts=consts, C_t=C_t,
                              closed_form=cubic_nd_check(disc.K_t, disc.mu_t,
                                                         disc.xi_t),
                              classify_tol=classify_tol)

    # ortho_circular_hole
    m = config.get("matrix")
    _require(isinstance(m, dict) and set(m) == {"lambda", "mu", "xi", "omega"},
             "ortho_circular_hole matrix needs {lambda, mu, xi, omega}")
    _require(config.get("inclusion", "void") == "void",
             "ortho_circular_hole supports void inclusions only")
    matrix = OrthotropicModuli2D(float(m["lambda"]), float(m["mu"]),
                                 float(m["xi"]), float(m["omega"]))
    try:
        disc, aux = ortho_circular_hole(matrix)
    except ValueError as e:
        raise DomainError(f"ortho_circular_hole: {e}") from None
    consts = ortho_constants(disc, f, rho, dim=2)
    C_t = ortho_tensor4(disc, dim=2)
    report = _finish_report(
        case, matrix, IsotropicModuli.void(regime), f, rho, 2,
        disc_dict={"lam_t": disc.lam, "mu_t": disc.mu,
                   "xi_t": disc.xi3, "om_t": disc.om1},
        eff={"lam_eq": matrix.lam + f * disc.lam,
             "mu_eq": matrix.mu + f * disc.mu,
             "xi_eq": matrix.xi + f * disc.xi3,
             "omega_eq": matrix.om + f * disc.om1},
        consts=consts, C_t=C_t,
        closed_form=ortho_nd_check(disc, Regime.PLANE_STRAIN),
        classify_tol=classify_tol)
    report["auxiliary"] = {"Gamma": aux.Gamma, "Delta": aux.Delta,
                           "gamma": aux.gamma, "delta": aux.delta}
    return report


# ------------------------------------------------------------- run_sweep ---

_SWEEP_A_COLUMNS = {
    "cylindrical_inclusion": ("a2", "a4"),
    "spherical_inclusion": ("a2", "a4"),
    "polygonal_hole": ("a2", "a4"),
    "square_hole_random": ("a2", "a4"),
    "square_hole_aligned": ("a2", "a4", "a6"),
}


def run_sweep(config: dict) -> tuple[list[str], list[list]]:
    """Evaluate a sweep; returns (header, rows).

    Rows hold floats plus a 0/1 pd flag; the threshold cell is None where a
    positive-definiteness threshold is not defined (void cases).  Domain
    errors raise DomainError carrying the first failing grid point; rows
    computed before the failure are attached to the exception.
    """
    case, regime, f, rho = _parse_common(config)
    _require(case in _SWEEP_A_COLUMNS, f"sweep not supported for case {case}")
    sw = config.get("sweep")
    _require(isinstance(sw, dict) and {"variable", "lo", "hi", "points"} <= set(sw),
             "sweep needs {variable, lo, hi, points}")
    var = sw["variable"]
    _require(var in ("mu2_over_mu1", "nu1"), "variable must be mu2_over_mu1 or nu1")
    lo, hi, points = float(sw["lo"]), float(sw["hi"]), int(sw["points"])
    _require(lo < hi and points >= 2, "need lo < hi and points >= 2")
    fixed = dict(config.get("fixed", {}))
    mu1 = float(fixed.pop("mu1", 1.0))

    inclusion_cases = ("cylindrical_inclusion", "spherical_inclusion")
    if var == "mu2_over_mu1":
        _require(case in inclusion_cases,
                 "mu2_over_mu1 sweeps need an elastic-inclusion case")
        _require({"nu1", "nu2"} <= set(fixed), "fixed needs nu1 and nu2")
    else:
        _require("nu1" not in fixed, "nu1 is the swept variable")

    acols = _SWEEP_A_COLUMNS[case]
    header = [var] + [f"{a}_norm" for a in acols] + ["pd", "threshold"]
    grid = np.linspace(lo, hi, points)
    rows: list[list] = []
    for k, x in enumerate(grid):
        try:
            rows.append(_sweep_point(case, regime, float(x), var, fixed, mu1,
                                     f, rho, acols))
        except (ValueError, DomainError) as e:
            err = DomainError(f"grid point {k} ({var} = {float(x)!r}): {e}")
            err.partial_rows = rows
            err.header = header
            raise err from None
    return header, rows


def _sweep_point(case, regime, x, var, fixed, mu1, f, rho, acols):
    threshold = None
    if var == "mu2_over_mu1":
        nu1, nu2 = float(fixed["nu1"]), float(fixed["nu2"])
        matrix = from_poisson(nu1, mu1, regime)
        inclusion = (IsotropicModuli.void(regime) if x == 0.0
                     else from_poisson(nu2, x * mu1, regime))
        threshold = pd_threshold(nu1, nu2, regime)
    else:
        matrix = from_poisson(x, mu1, regime)
        if case in ("cylindrical_inclusion", "spherical_inclusion"):
            ratio = float(fixed.get("mu2_over_mu1", 0.0))
            if ratio == 0.0:
                inclusion = IsotropicModuli.void(regime)
            else:
                nu2 = float(fixed["nu2"])
                inclusion = from_poisson(nu2, ratio * mu1, regime)
                threshold = pd_threshold(x, nu2, regime)
        else:
            inclusion = IsotropicModuli.void(regime)

    if case == "cylindrical_inclusion":
        disc = cylindrical_inclusion(matrix, inclusion)
        fig = _cylindrical_figure_constants(disc, f, rho)
        vals = [fig[a] for a in acols]
        nd = iso_nd_check(disc.K_t, disc.mu_t)
    elif case == "spherical_inclusion":
        disc = spherical_inclusion(matrix, inclusion)
        consts = iso_constants(disc.lam_t, disc.mu_t, f, rho)
        vals = [getattr(consts, a) for a in acols]
        nd = iso_nd_check(disc.K_t, disc.mu_t)
    elif case == "polygonal_hole":
        disc = polygonal_hole(matrix, fixed.get("n", math.inf))
        consts = iso_constants(disc.lam_t, disc.mu_t, f, rho)
        vals = [getattr(consts, a) for a in acols]
        nd = iso_nd_check(disc.K_t, disc.mu_t)
    elif case == "square_hole_random":
        disc = square_hole_random(matrix)
        consts = iso_constants(disc.lam_t, disc.mu_t, f, rho)
        vals = [getattr(consts, a) for a in acols]
        nd = iso_nd_check(disc.K_t, disc.mu_t)
    else:  # square_hole_aligned
        disc = square_hole_aligned(matrix)
        consts = cubic_higher_order_constants(disc, f, rho, dim=2)
        vals = [getattr(consts, a) for a in acols]
        nd = cubic_nd_check(disc.K_t, disc.mu_t, disc.xi_t)

    row = [x] + [_norm(v, f, rho, mu1) for v in vals] + [int(nd), threshold]
    return row


def sweep_csv(header: list[str], rows: list[list]) -> str:
    """CSV text: comma separator, 12 significant digits, LF endings."""
    def fmt(v):
        if v is None:
            return ""
        if isinstance(v, (bool, int, np.integer)):
            return str(int(v))
        return f"{float(v) + 0.0:.12g}"  # + 0.0 normalizes negative zero

    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------- reproduce_tables ---

def reproduce_tables(tolerance: float = 5e-3) -> dict:
    """Recompute the golden normalized-constant rows from the matrix data.

    Also re-derives the circular limit of the polygonal-hole constants from
    the cylindrical void case.  Passes iff every reference cell deviation is
    within `tolerance` (absolute); the known-bad Pine/Or2 source row fails.
    """
    rows = []
    ok_all = True
    for ref in ORTHO_REFERENCE:
        matrix = OrthotropicModuli2D(*ref.inputs)
        disc, _aux = ortho_circular_hole(matrix)
        mu1 = matrix.mu
        computed = (-disc.lam / (2.0 * mu1), -disc.mu / (2.0 * mu1),
                    -disc.om1 / (4.0 * mu1), -disc.xi3 / (2.0 * mu1))
        dev = tuple(abs(c - e) for c, e in zip(computed, ref.expected))
        ok = max(dev) <= tolerance
        ok_all = ok_all and ok
        rows.append({"material": ref.material, "orientation": ref.orientation,
                     "inputs": dict(zip(("lambda", "mu", "xi", "omega"), ref.inputs)),
                     "expected": dict(zip(("a2", "a4", "a6", "a9"), ref.expected)),
                     "computed": dict(zip(("a2", "a4", "a6", "a9"), computed)),
                     "max_abs_deviation": max(dev),
                     "pass": ok})

    matrix = IsotropicModuli(1.0, 1.0, Regime.PLANE_STRAIN)
    circle = polygonal_hole(matrix, math.inf)
    cyl = cylindrical_inclusion(matrix, IsotropicModuli.void(Regime.PLANE_STRAIN))
    poly_dev = max(abs(circle.K_t - cyl.K_t), abs(circle.mu_t - cyl.mu_t))
    poly_ok = poly_dev <= 1e-12 * max(abs(cyl.K_t), abs(cyl.mu_t))
    ok_all = ok_all and poly_ok

    return {
        "polygon_constants": {str(k): {"A": v.A, "B": v.B}
                              for k, v in sorted(POLYGON_CONSTANTS.items())},
        "polygon_circle_limit_consistent": poly_ok,
        "ortho_rows": rows,
        "tolerance": tolerance,
        "pass": ok_all,
    }
