"""Two strongly regular graphs on the 45 points of the q=2 surface.

Joining two points when some curve of the orbit passes through both gives
an SRG(45, 32, 22, 24).  Joining them when a line of the surface does gives
the generalized-quadrangle point graph SRG(45, 12, 3, 3).  The first is
exactly the complement of the second, edge for edge, and the parameters
follow the closed forms ((q^3+1)(q^2+1), q^5, q(q-1)(q^3+q^2-1), q^3(q^2-1)).
"""

from hermlab import HermitianSurface, graphs, hermitian as hm, projgeo

surface = HermitianSurface(2)
orbit = surface.curve_orbit()

curve_points = [hm.curve_rational_points(c) for c in orbit.items]
line_points = [projgeo.line_points(l) for l in surface.lines()]

curve_graph = graphs.build_point_curve_graph(surface.points(), curve_points)
line_graph = graphs.collinearity_graph(surface.points(), line_points)

print("point-curve graph:", graphs.srg_params(curve_graph).as_tuple())
print("collinearity graph:", graphs.srg_params(line_graph).as_tuple())
print("complement identity:", curve_graph.same_edges(line_graph.complement()))
print("closed-form parameters for q = 2,3,4,5:")
for q in (2, 3, 4, 5):
    print(f"  q={q}: {graphs.srg_formula(q).as_tuple()}")
