"""Counting morphisms separates classes; knots count colorings.

Morphism counts from connected sources are additive over decompositions
and multiplicative over products, and jointly they distinguish all small
classes.  A presented quandle (here the trefoil's) counts its colorings
into any target without ever materializing the presented object.
"""

from rackring import (
    BurnsideRing,
    EnumerationFilter,
    census,
    colorings,
    dihedral,
    enumerate_racks,
    is_connected,
    mark,
    mark_matrix,
    trefoil_presentation,
    trivial,
)

print("== censuses ==")
cen = census(dihedral(3), dihedral(3))
print(f"dihedral(3) -> dihedral(3): mor={cen.mor} inj={cen.inj} sur={cen.sur}")
print("images by class key:", cen.by_image)

print()
print("== the mark matrix over connected classes of order <= 4 ==")
classes = [
    t
    for n in range(1, 5)
    for t in enumerate_racks(EnumerationFilter(n, connected_only=True))
]
labels = [f"n={t.n}{'q' if t.is_quandle() else 'r'}" for t in classes]
matrix = mark_matrix(classes, classes)
print("      " + " ".join(f"{l:>5s}" for l in labels))
for label, row in zip(labels, matrix):
    print(f"{label:>5s} " + " ".join(f"{v:5d}" for v in row))
columns = {tuple(row[j] for row in matrix) for j in range(len(classes))}
print("columns pairwise distinct:", len(columns) == len(classes))

print()
print("== marks are ring maps ==")
ring = BurnsideRing()
dih3 = ring.class_of(dihedral(3))
print("mark of dihedral(3) on [dihedral(3)]^2:",
      mark(dihedral(3), ring.mul(dih3, dih3), ring), "= 9^2")

print()
print("== trefoil colorings ==")
trefoil = trefoil_presentation()
for target in (dihedral(3), dihedral(5), trivial(4)):
    kind = "dihedral" if target.is_quandle() and is_connected(target) else "trivial"
    print(f"colorings into order-{target.n} {kind} quandle: {colorings(trefoil, target)}")
print("(9 > 3 colorings into dihedral(3) is the classic knottedness certificate)")
