"""An order-8 connected rack that is not a cycle times a quandle.

SL2(F3) acts on the eight nonzero vectors of F3^2; cosets of the
unitriangular subgroup carry a rack structure twisted by a central-enough
matrix.  The twist is a fixed-point-free involution whose quotient is the
tetrahedral quandle, yet the rack refuses to split as a product: its inner
group is all of SL2(F3), while the candidate product only has A4 x C2.
"""

from rackring import (
    EnumerationFilter,
    associated_quandle,
    are_isomorphic,
    automorphism_group,
    canonical_key,
    check_coset_pair,
    coset_rack,
    cycle_rack,
    enumerate_racks,
    inner_group,
    is_connected,
    product,
    special_linear_2,
)

group, matrices = special_linear_2(3)
print("built SL2(F3): order", group.n)

index = {m: i for i, m in enumerate(matrices)}
unitriangular = tuple(sorted(index[(1, b, 0, 1)] for b in range(3)))
mu = index[(2, 2, 0, 2)]  # [[-1, -1], [0, -1]] mod 3
print("subgroup H (upper unitriangular):", unitriangular)
print("twisting element mu:", matrices[mu])

valid, centralizing = check_coset_pair(group, unitriangular, mu)
print("pair admissible:", valid, "| mu centralizes H:", centralizing)

rack = coset_rack(group, unitriangular, mu)
print()
print("the coset rack, order", rack.n)
for row in rack.table:
    print("  ", " ".join(map(str, row)))

print()
print("connected:", is_connected(rack))
print("inner group order:", inner_group(rack).order(), "(all of SL2(F3))")
print("full automorphism group order:", automorphism_group(rack).order())

sigma = rack.canonical_automorphism()
print("canonical automorphism:", sigma, "- a fixed-point-free involution")

quotient, projection = associated_quandle(rack)
(tetra,) = enumerate_racks(EnumerationFilter(4, quandle_only=True, connected_only=True))
print()
print("orbit quotient has order", quotient.n,
      "and is the tetrahedral quandle:", are_isomorphic(quotient, tetra))

candidate = product(cycle_rack(2), tetra)
print("2-cycle x tetrahedral quandle is connected too:", is_connected(candidate))
print("same canonical key?", canonical_key(rack) == canonical_key(candidate))
print("inner group of the product:", inner_group(candidate).order(),
      "(A4 x C2: same order, different group, different rack)")
