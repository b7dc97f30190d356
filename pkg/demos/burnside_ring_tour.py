"""A tour of the ring of rack classes.

Every finite rack splits into maximal connected parts; its class is the sum
of the parts' classes, products of racks multiply classes, and the
connected classes form an integral basis.  This script walks the standard
small examples.
"""

from rackring import (
    BurnsideRing,
    CycleVector,
    conjugation_quandle,
    cycle_rack,
    dihedral,
    disjoint_union,
    permutation_rack,
    render_element,
    symmetric_group,
    Perm,
)

ring = BurnsideRing()

print("== the conjugation quandle of Sym(3) ==")
sym3_conj = conjugation_quandle(symmetric_group(3))
x = ring.of_rack(sym3_conj)
print("class:", render_element(x, ring.registry))
print("it splits as 3 singletons plus one dihedral(3):",
      [(ring.registry.entry(i).order, c) for i, c in sorted(x.items())])
print("cardinality mark:", ring.cardinality(x))

print()
print("== additivity versus isomorphism ==")
four = permutation_rack(Perm.from_cycles(4, [0, 1], [2, 3]))
split = disjoint_union(cycle_rack(2), cycle_rack(2))
print("the (01)(23) permutation rack and C2 + C2 share the class",
      render_element(ring.of_rack(four), ring.registry))
from rackring import are_isomorphic

print("yet they are isomorphic:", are_isomorphic(four, split))

print()
print("== multiplication ==")
c2 = ring.class_of(cycle_rack(2))
print("[C2]^2 =", render_element(ring.mul(c2, c2), ring.registry), "(the square decomposes)")
dih3 = ring.class_of(dihedral(3))
square = ring.mul(dih3, dih3)
print("[dihedral(3)]^2 =", render_element(square, ring.registry), "(one connected class of order 9)")

print()
print("== power operations and the missing lambda-structure ==")
print("second power of [dihedral(3)]:", render_element(ring.power(dih3, 2), ring.registry))
difference = ring.power(dih3, 2) - square
print("coefficient of the singleton class in (power - square):",
      ring.singleton_coefficient(difference), "(odd, so no Frobenius congruence)")

print()
print("== the cycle-vector retraction ==")
print("canonical automorphism classes of C2 + C2:", ring.to_cycles(ring.of_rack(split)))
print("section then retraction on c_4:",
      ring.to_cycles(ring.from_cycles(CycleVector({4: 1}))))
print("every quandle retracts onto trivial cycles:", ring.to_cycles(ring.of_rack(sym3_conj)))

print()
print("== untwisting down to quandles ==")
c3 = ring.class_of(cycle_rack(3))
print("[C3] untwists to", render_element(ring.untwist(c3), ring.registry))
print("quandle classes are fixed:", ring.untwist(dih3) == dih3)

print()
print("== prime quandles ==")
print("dihedral(3) is prime:", ring.is_prime_quandle(dihedral(3)))
nine = ring.registry.entry(next(iter(square))).table
factors = ring.factor_quandle(nine)
print("the order-9 square factors into class ids", factors,
      "=", [ring.registry.entry(i).order for i in factors], "element orders")
