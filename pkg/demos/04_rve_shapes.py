"""RVE shape effects.

The first-order homogenized stiffness does not feel the RVE shape, but the
sixth-order tensor scales with the squared radius of inertia rho^2, so two
composites differing only in RVE shape differ in their nonlocal response by
the equal-measure rho^2 ratio.
"""

from sgehom import (Circle, Cube, RegularPolygon, Sphere, TruncatedOctahedron,
                    mc_second_moment, radius_of_inertia, rve_ratio)

print("=== radii of inertia (disk/ball matched convention) ===")
shapes = [("circle R=1", Circle(1.0)),
          ("square L=1", RegularPolygon(4, 1.0)),
          ("hexagon a=1", RegularPolygon(6, 1.0)),
          ("sphere R=1", Sphere(1.0)),
          ("cube L=1", Cube(1.0)),
          ("trunc. oct. a=1", TruncatedOctahedron(1.0))]
for name, s in shapes:
    print(f"{name:16s} dim={s.dim}  measure={s.measure():9.5f} "
          f" J/A or I0/V = {s.moment_ratio():.6f}  rho = {radius_of_inertia(s):.6f}")

print()
print("=== equal-measure ratios entering the sixth-order tensor ===")
r2 = rve_ratio(RegularPolygon(4, 1.0), RegularPolygon(6, 1.0))
r3 = rve_ratio(Cube(1.0), TruncatedOctahedron(1.0))
print(f"square  vs hexagon            rho^2 ratio = {r2:.6f}  (3 sqrt(3)/5 = 1.039230)")
print(f"cube    vs truncated octahedron rho^2 ratio = {r3:.6f}  (16 2^(1/3)/19 = 1.060986)")

print()
print("=== Monte Carlo cross-check of the exact second moments ===")
for name, s, truth in [("square", RegularPolygon(4, 1.0), 1.0 / 6.0),
                       ("cube", Cube(1.0), 0.25),
                       ("trunc. oct.", TruncatedOctahedron(1.0), 19.0 / 16.0)]:
    est = mc_second_moment(s, 1_000_000, seed=42)
    sig = abs(est.value - truth) / est.stderr
    print(f"{name:12s} exact = {truth:.6f}  MC = {est.value:.6f} "
          f"+- {est.stderr:.6f}  ({sig:.2f} sigma)")
