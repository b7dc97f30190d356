"""Connected, homogeneous, irreducible, indecomposable: four different things.

Small permutation racks and trivial quandles already separate all four
adjectives; dihedral quandles of 2-power order show that orbit splitting
can recurse to any depth.
"""

from rackring import (
    Perm,
    decomposition_tree,
    depth,
    dihedral,
    disjoint_union,
    cycle_rack,
    enumerate_decompositions,
    enumerate_ideals,
    inn_orbits,
    is_connected,
    is_homogeneous,
    is_irreducible,
    permutation_rack,
    profile,
    trivial,
)


def describe(name, rack):
    indecomposable = rack.n >= 1 and len(enumerate_ideals(rack)) == 2
    print(f"{name:28s} connected={is_connected(rack)!s:5s} homogeneous={is_homogeneous(rack)!s:5s} "
          f"irreducible={is_irreducible(rack)!s:5s} indecomposable={indecomposable}")


print("== the adjective zoo ==")
describe("dihedral(3)", dihedral(3))
describe("(01)(23) permutation rack", permutation_rack(Perm.from_cycles(4, [0, 1], [2, 3])))
describe("(01) on three points", permutation_rack(Perm.from_cycles(3, [0, 1])))
describe("trivial(2)", trivial(2))
describe("C2 + singleton", disjoint_union(cycle_rack(2), trivial(1)))

print()
print("== orbits can split again ==")
for k in (1, 2, 3):
    d = dihedral(2**k)
    print(f"dihedral({2**k}): orbits {[len(o) for o in inn_orbits(d)]}, depth {depth(d)}")


def show(tree, indent=0):
    print("  " * indent + f"{{{', '.join(map(str, tree.node))}}}")
    for child in tree.children:
        show(child, indent + 1)


print()
print("refinement tree of dihedral(8):")
show(decomposition_tree(dihedral(8)))

print()
print("== decompositions are complementary ideal pairs ==")
d4 = dihedral(4)
print("ideals of dihedral(4):", enumerate_ideals(d4))
print("its one decomposition:", enumerate_decompositions(d4))

print()
print("== profiles of homogeneous racks ==")
for name, rack in [
    ("dihedral(3)", dihedral(3)),
    ("dihedral(5)", dihedral(5)),
    ("C4 cycle rack", cycle_rack(4)),
    ("trivial(4)", trivial(4)),
]:
    print(f"{name:14s} profile {profile(rack)}")
