"""Surveys for the questions the library can probe but not settle.

Each report records what it checked and what it found; none of the
outcomes below is asserted anywhere in the library.
"""

from rackring import key_table
from rackring.reports import (
    decomposition_cancellation_search,
    diagonal_product_experiment,
    inner_crossed_variant_check,
    prime_factorization_ambiguity_scan,
    trivially_acting_part_ideal_survey,
)

print("== is the trivially-acting part always an ideal? ==")
survey = trivially_acting_part_ideal_survey(5)
print(f"checked {survey.checked} racks of order <= 5;",
      f"non-ideal cases found: {len(survey.findings)}")
for key_hex, subset in survey.findings[:3]:
    table = key_table(bytes.fromhex(key_hex))
    print("  e.g. subset", subset, "in", [list(r) for r in table.table])

print()
print("== do isomorphic complements force isomorphic parts? ==")
search = decomposition_cancellation_search(6)
print(f"checked {search.checked} racks of order <= 6;",
      f"witnesses against the unrestricted statement: {len(search.findings)}")
if search.findings:
    key_hex, s1, s2 = search.findings[0]
    table = key_table(bytes.fromhex(key_hex))
    print("  smallest witness:", [list(r) for r in table.table])
    print("  parts", s1, "and", s2, "have isomorphic complements but differ")
    print("  (so connectivity of the parts is genuinely needed)")

print()
print("== are prime factorizations unique at small orders? ==")
scan = prime_factorization_ambiguity_scan(8)
print(f"checked {scan.checked} connected quandles of order <= 8;",
      f"ambiguous factorizations: {len(scan.findings)}")

print()
print("== does the fixed-group diagonal product match the ring product? ==")
experiment = diagonal_product_experiment()
agreements = sum(1 for f in experiment.findings if f["agree"])
print(f"compared {experiment.checked} diagonal products over small groups:",
      f"{agreements} agree, {experiment.checked - agreements} disagree")
for f in experiment.findings:
    if not f["agree"]:
        print("  first disagreement: group order", f["group_order"], "sizes", f["sizes"])
        break

print()
print("== inner group versus full automorphism group as crossing target ==")
check = inner_crossed_variant_check(4)
print(f"checked {check.checked} racks of order <= 4;",
      f"inequivalent variants found: {len(check.findings)}")
