from itertools import permutations, product as iproduct

import pytest

from rackring import (
    InvalidRackError,
    Perm,
    RackTable,
    associated_quandle,
    are_isomorphic,
    cycle_rack,
    dihedral,
    disjoint_union,
    format_rack,
    inner_fixed_points,
    is_ideal,
    is_subrack,
    parse_rack,
    permutation_rack,
    product,
    trivial,
    trivially_acting_part,
    validate_table,
)
from rackring.racks import FormatError


DIH3_ROWS = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def test_validate_accepts_dihedral_rows():
    report = validate_table(DIH3_ROWS)
    assert report.ok
    assert RackTable(DIH3_ROWS) == dihedral(3)


def test_validate_rejects_broken_distributivity():
    # row 0 swaps while row 1 is the identity: 0|>0 = 1 forces row 1 to be
    # the conjugate of row 0 by itself, i.e. row 0 again, so (0, 0, .) fails.
    rows = [[1, 0], [0, 1]]
    report = validate_table(rows)
    assert not report.ok
    assert report.error == "not-self-distributive"
    violations = {
        (a, b, c)
        for a in range(2)
        for b in range(2)
        for c in range(2)
        if rows[a][rows[b][c]] != rows[rows[a][b]][rows[a][c]]
    }
    assert report.where in violations
    assert report.where == min(violations)


def test_validate_empty_rack():
    assert validate_table([]).ok
    assert RackTable([]).n == 0


def test_validate_distinct_error_kinds():
    assert validate_table([[0, 1]]).error == "not-square"
    assert validate_table([[0, 2], [0, 1]]).error == "entry-out-of-range"
    assert validate_table([[0, 0], [0, 1]]).error == "row-not-bijective"


def _conjugation_identity_holds(rows):
    """row(a |> b) == row_a . row_b . row_a^(-1) for all a, b."""
    n = len(rows)
    for a in range(n):
        inv_a = [0] * n
        for i, v in enumerate(rows[a]):
            inv_a[v] = i
        for b in range(n):
            conjugated = tuple(rows[a][rows[b][inv_a[x]]] for x in range(n))
            if tuple(rows[rows[a][b]]) != conjugated:
                return False
    return True


def test_validation_equals_conjugation_formulation_order3():
    perms3 = list(permutations(range(3)))
    for rows in iproduct(perms3, repeat=3):
        assert validate_table(rows).ok == _conjugation_identity_holds(rows)


def test_quandle_and_canonical_automorphism():
    assert dihedral(3).is_quandle()
    assert dihedral(3).canonical_automorphism().is_identity()
    swap_rack = permutation_rack(Perm.from_cycles(2, [0, 1]))
    assert not swap_rack.is_quandle()
    assert swap_rack.canonical_automorphism() == Perm.from_cycles(2, [0, 1])
    assert trivial(5).canonical_automorphism().is_identity()


def test_untwist():
    assert cycle_rack(3).untwist() == trivial(3)
    assert dihedral(3).untwist() == dihedral(3)
    for k in range(2, 5):
        u = cycle_rack(k).untwist()
        assert u.is_quandle()
        assert u == trivial(k)


def test_power():
    assert dihedral(3).power(2) == trivial(3)
    for r in (dihedral(4), cycle_rack(3), trivial(2)):
        assert r.power(1) == r
    assert permutation_rack(Perm.from_cycles(4, [0, 1, 2, 3])).power(-1) == permutation_rack(
        Perm.from_cycles(4, [0, 3, 2, 1])
    )


def test_power_canonical_automorphism_is_iterated(racks_by_order):
    for n in range(5):
        for r in racks_by_order[n]:
            sigma = r.canonical_automorphism()
            for k in range(-3, 4):
                assert r.power(k).canonical_automorphism() == sigma**k


def test_product_examples():
    assert are_isomorphic(product(trivial(1), dihedral(3)), dihedral(3))
    nine = product(dihedral(3), dihedral(3))
    assert nine.n == 9
    assert nine.is_quandle()
    c2 = cycle_rack(2)
    four = product(c2, c2)
    from rackring import connected_parts

    parts = connected_parts(four)
    assert len(parts) == 2
    assert all(are_isomorphic(four.restrict(p), c2) for p in parts)


def test_product_associative_commutative_up_to_iso(racks_by_order):
    small = racks_by_order[2] + racks_by_order[3][:3]
    for a in small:
        for b in small:
            assert are_isomorphic(product(a, b), product(b, a))
    a, b, c = small[0], small[1], small[-1]
    assert are_isomorphic(product(product(a, b), c), product(a, product(b, c)))


def test_disjoint_union():
    r = dihedral(3)
    assert disjoint_union(RackTable([]), r) == r
    du = disjoint_union(cycle_rack(2), cycle_rack(2))
    assert du.table == ((1, 0, 2, 3), (1, 0, 2, 3), (0, 1, 3, 2), (0, 1, 3, 2))
    assert are_isomorphic(
        disjoint_union(disjoint_union(trivial(1), cycle_rack(2)), trivial(2)),
        disjoint_union(trivial(1), disjoint_union(cycle_rack(2), trivial(2))),
    )
    assert are_isomorphic(disjoint_union(r, trivial(2)), disjoint_union(trivial(2), r))


def test_subrack_and_ideal():
    # transpositions in Sym(3) under conjugation: singletons are subracks,
    # never ideals
    from rackring import conjugation_class_quandle, symmetric_group

    sym3 = symmetric_group(3)
    transpositions = [g for g in range(6) if sym3.mul(g, g) == 0 and g != 0]
    q = conjugation_class_quandle(sym3, transpositions)
    assert is_subrack(q, (0,))
    assert not is_ideal(q, (0,))

    d4 = dihedral(4)
    from rackring import inn_orbits

    for orbit in inn_orbits(d4):
        assert is_ideal(d4, orbit)

    for r in (d4, trivial(3), cycle_rack(4)):
        assert is_ideal(r, ())
        assert is_ideal(r, tuple(range(r.n)))


def test_ideal_iff_subrack_with_subrack_complement(racks_by_order):
    for n in range(5):
        for r in racks_by_order[n]:
            full = set(range(n))
            for mask in range(1 << n):
                subset = tuple(i for i in range(n) if mask >> i & 1)
                complement = tuple(sorted(full - set(subset)))
                expected = is_subrack(r, subset) and is_subrack(r, complement)
                assert is_ideal(r, subset) == expected


def test_fixed_points_and_trivially_acting():
    d4 = dihedral(4)
    assert inner_fixed_points(d4) == ()
    assert inner_fixed_points(trivial(3)) == (0, 1, 2)
    assert trivially_acting_part(d4) == ()
    for half in ((0, 2), (1, 3)):
        sub = d4.restrict(half)
        assert trivially_acting_part(sub) == (0, 1)
    for n in range(5):
        r = trivial(n) if n else RackTable([])
        assert is_ideal(r, inner_fixed_points(r))


def test_restrict_requires_subrack():
    with pytest.raises(ValueError):
        dihedral(3).restrict((0, 1))


def test_self_fixed_part_is_an_ideal(racks_by_order):
    # elements with a |> a = a form the maximal sub-quandle, and the image
    # of such an element under any left multiplication is again self-fixed
    for n in range(5):
        for r in racks_by_order[n]:
            fixed = tuple(q for q in range(n) if r.apply(q, q) == q)
            assert is_ideal(r, fixed)
            if fixed:
                assert r.restrict(fixed).is_quandle()


def test_associated_quandle():
    q, proj = associated_quandle(cycle_rack(4))
    assert q == trivial(1)
    assert proj == (0, 0, 0, 0)
    q, proj = associated_quandle(dihedral(3))
    assert q == dihedral(3)
    assert proj == (0, 1, 2)


def test_sigma_commutes_with_left_multiplications(racks_by_order):
    for n in range(5):
        for r in racks_by_order[n]:
            sigma = r.canonical_automorphism()
            for a in range(n):
                assert sigma * r.row_perm(a) == r.row_perm(a) * sigma


def test_constructors():
    assert dihedral(2) == trivial(2)
    p = Perm.from_cycles(4, [0, 1], [2, 3])
    assert permutation_rack(p).table == ((1, 0, 3, 2),) * 4
    from rackring import conjugation_class_quandle, symmetric_group

    sym3 = symmetric_group(3)
    transpositions = [g for g in range(6) if sym3.mul(g, g) == 0 and g != 0]
    assert are_isomorphic(conjugation_class_quandle(sym3, transpositions), dihedral(3))


def test_conjugation_class_must_be_closed():
    from rackring import conjugation_class_quandle, symmetric_group

    sym3 = symmetric_group(3)
    transposition = next(g for g in range(6) if sym3.mul(g, g) == 0 and g != 0)
    with pytest.raises(ValueError):
        conjugation_class_quandle(sym3, (transposition,))


def test_rack_file_round_trip():
    for r in (dihedral(3), trivial(4), RackTable([]), cycle_rack(5)):
        assert parse_rack(format_rack(r)) == r


def test_rack_file_comments_and_errors():
    text = "# a comment\nrack 2   \n0 1  # trailing\n0 1\n"
    assert parse_rack(text) == trivial(2)
    with pytest.raises(FormatError) as exc:
        parse_rack("rack 2\n0 1\n0 x\n")
    assert exc.value.line == 3
    with pytest.raises(FormatError):
        parse_rack("quandle 2\n0 1\n0 1\n")
    with pytest.raises(InvalidRackError):
        parse_rack("rack 2\n1 0\n0 1\n")
