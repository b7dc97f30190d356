"""Racks as crossed actions and back.

A crossed G-set carries a rack via a |> b = delta(a).b; conversely a rack
crosses over its automorphism group by rows.  The round trip reproduces
the table exactly, sums and products of crossed sets match disjoint unions
and products of racks, and identity crossings see only trivial quandles.
"""

from rackring import (
    BurnsideRing,
    crossed_product,
    crossed_sum,
    crossed_to_rack,
    cycle_rack,
    dihedral,
    disjoint_union,
    is_equivalence,
    product,
    rack_to_crossed,
    render_element,
    symmetric_group,
    transitive_crossed,
    are_isomorphic,
)

print("== a rack is its own crossed action ==")
dih3 = dihedral(3)
crossed = rack_to_crossed(dih3)
print("dihedral(3) crosses over a group of order", crossed.group.n)
print("crossing (row indices):", crossed.delta)
print("round trip returns the table:", crossed_to_rack(crossed) == dih3)
again = rack_to_crossed(crossed_to_rack(crossed))
print("and the two crossed actions are equivalent:",
      is_equivalence(list(range(crossed.group.n)), list(range(dih3.n)), crossed, again))

print()
print("== transitive crossed sets over Sym(3) ==")
sym3 = symmetric_group(3)
transposition = next(g for g in range(6) if g != 0 and sym3.mul(g, g) == 0)
x = transitive_crossed(sym3, sym3.centralizer(transposition), transposition)
print("cosets of the centralizer with conjugation crossing give a rack of order",
      crossed_to_rack(x).n, "- the dihedral quandle:",
      are_isomorphic(crossed_to_rack(x), dih3))

for gens in ([], [transposition]):
    h = sym3.subgroup_from(gens)
    rack = crossed_to_rack(transitive_crossed(sym3, h, 0))
    print(f"identity crossing over a subgroup of order {len(h)}:",
          f"trivial quandle of order {rack.n}")

print()
print("== sums and products ==")
ring = BurnsideRing()
a, b = rack_to_crossed(cycle_rack(2)), rack_to_crossed(dihedral(3))
total = crossed_sum(a, b)
print("sum of crossings realizes the disjoint union:",
      are_isomorphic(crossed_to_rack(total), disjoint_union(cycle_rack(2), dihedral(3))))
print("its class:", render_element(ring.of_rack(crossed_to_rack(total)), ring.registry))
prod = crossed_product(a, b)
print("product of crossings realizes the product rack:",
      crossed_to_rack(prod) == product(cycle_rack(2), dihedral(3)))
