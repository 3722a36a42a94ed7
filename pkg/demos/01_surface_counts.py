"""Walk through the basic objects: the surface, its points, lines, and the
orbit of degree-(q+1) rational curves.

The surface X over F_{q^2} is cut out by x0^(q+1) + x1^(q+1) + x2^(q+1) +
x3^(q+1) = 0, the isotropic locus of the Hermitian form b(u,v) = sum u_i
v_i^q.  Its projective unitary symmetry group acts transitively on rational
points, on the lines contained in X, and (for the standard orbit) on the
rational curves of degree q+1 lying on X.
"""

from hermlab import HermitianSurface, hermitian as hm

for q in (2, 3):
    surface = HermitianSurface(q)
    points = surface.points()
    lines = surface.lines()
    print(f"q = {q}")
    print(f"  rational points: {len(points)}  "
          f"(formula (q^3+1)(q^2+1) = {hm.point_count(q)})")
    print(f"  lines on the surface: {len(lines)}  "
          f"(formula (q^3+1)(q+1) = {hm.line_count(q)})")

    orbit = surface.curve_orbit()
    print(f"  curve orbit: {len(orbit)}  "
          f"(formula q^4(q^3+1)(q^2-1) = {hm.curve_count(q)})")

    # every curve meets the surface equation identically
    F = surface.standard_curve()
    pts = hm.curve_rational_points(F)
    print(f"  standard curve has {len(pts)} rational points; "
          f"all on the surface: "
          f"{all(hm.hermitian_form(surface.field, p.coords, p.coords) == 0 for p in pts)}")

    # orbit-stabilizer bookkeeping
    print(f"  |PGU_4| = {hm.group_order(q)} = "
          f"{len(orbit)} x {hm.group_order(q) // hm.curve_count(q)} "
          f"(orbit x curve stabilizer)")
    print()
