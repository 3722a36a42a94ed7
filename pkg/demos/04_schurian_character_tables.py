"""Schurian schemes: orbitals of the unitary group on points, lines, curves.

The diagonal action on V x V partitions pairs into relations; the point and
line actions at q=2 give 2-class (strongly-regular) schemes, while the
action on the 432 curves gives a 19-class noncommutative scheme.  Its exact
character table lives in Q(sqrt(-3)): 12 linear characters and two
2-dimensional ones, with PQ = |V| D certified in exact cyclotomic
arithmetic.
"""

from hermlab import HermitianSurface, emit, schemes

surface = HermitianSurface(2)

for kind in ("points", "lines"):
    scheme = surface.schurian_scheme(kind)
    table = schemes.character_table(scheme)
    print(f"--- {kind}: order {scheme.n}, d = {scheme.d} ---")
    print("P:")
    print(emit.text_matrix(table.P))
    print("Q:")
    print(emit.text_matrix(table.Q))
    print()

scheme = surface.schurian_scheme("curves")
table = schemes.character_table(scheme)
print(f"--- curves: order {scheme.n}, d = {scheme.d}, "
      f"commutative: {scheme.is_commutative()} ---")
print("valencies:", scheme.valencies)
print("idempotent ranks:", table.ranks)
print("representation degrees:", table.rep_ranks)
print("multiplicities:", table.multiplicities)
col = next(j for j in range(scheme.d + 1)
           if any(not table.P[i][j].is_rational() for i in range(len(table.P))))
print(f"sample column of P (class {col}, entries in Q(sqrt(-3))):")
for i in range(len(table.P)):
    print(f"  phi_{i}(A_{col}) = {table.P[i][col].render()}")
print("needed cyclotomic order:", table.field.N)
