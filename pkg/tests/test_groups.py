import pytest

from rackring import (
    CrossedGSet,
    FinGroup,
    Perm,
    RackTable,
    are_isomorphic,
    check_coset_pair,
    conjugation_quandle,
    coset_rack,
    crossed_product,
    crossed_sum,
    crossed_to_rack,
    cycle_rack,
    cyclic_group,
    diagonal_product_fixed_group,
    dihedral,
    disjoint_union,
    format_group,
    is_connected,
    is_equivalence,
    parse_group,
    parse_sl2,
    permutation_rack,
    product,
    rack_to_crossed,
    special_linear_2,
    symmetric_group,
    transitive_crossed,
    transitive_crossed_iso,
    trivial,
)
from rackring import inner_group
from rackring.racks import FormatError


def sym3():
    return symmetric_group(3)


def transpositions(group):
    return [g for g in range(group.n) if g != 0 and group.mul(g, g) == 0]


def test_group_validation():
    assert cyclic_group(4).n == 4
    with pytest.raises(ValueError):
        FinGroup([[1, 0], [0, 1]])  # identity not at index 0
    with pytest.raises(ValueError):
        FinGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])  # not associative / not a group


def test_subgroup_and_centralizer():
    g = sym3()
    t = transpositions(g)[0]
    assert len(g.centralizer(t)) == 2
    assert len(g.subgroup_from([t])) == 2
    assert g.subgroup_from(range(g.n)) == tuple(range(6))
    assert g.is_subgroup(g.subgroup_from([t]))
    assert not g.is_subgroup((0, t, transpositions(g)[1]))


def test_conjugacy_classes():
    sizes = sorted(len(c) for c in sym3().conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_normal_core():
    g = sym3()
    assert g.normal_core(tuple(range(6))) == tuple(range(6))
    t = g.subgroup_from([transpositions(g)[0]])
    assert g.normal_core(t) == (0,)
    rotations = g.subgroup_from([next(x for x in range(6) if x not in (0, *transpositions(g)))])
    assert g.normal_core(rotations) == rotations


def test_conjugation_quandle_decomposes():
    q = conjugation_quandle(sym3())
    assert q.is_quandle()
    assert q.n == 6


def test_coset_rack_validity_conditions():
    g = sym3()
    t = transpositions(g)[0]
    h = g.subgroup_from([t])
    # mu = identity always passes and yields the trivial quandle
    valid, strict = check_coset_pair(g, h, 0)
    assert valid and strict
    assert coset_rack(g, h, 0) == trivial(3)
    # mu in the centralizer passes the strict condition
    valid, strict = check_coset_pair(g, h, t)
    assert valid and strict
    rack = coset_rack(g, h, t)
    assert rack.is_quandle()  # mu lies in H
    with pytest.raises(ValueError):
        coset_rack(g, (0, t, transpositions(g)[1]), 0)  # not a subgroup


def test_coset_rack_quandle_iff_mu_in_subgroup():
    g = cyclic_group(6)
    h = g.subgroup_from([2])  # {0, 2, 4}
    rack = coset_rack(g, h, 1)  # mu = 1 not in H: cosets get shifted
    assert not rack.is_quandle()
    assert rack == permutation_rack(Perm.from_cycles(2, [0, 1]))
    rack2 = coset_rack(g, h, 2)
    assert rack2.is_quandle()


def test_sl2_f3_construction():
    group, matrices = special_linear_2(3)
    assert group.n == 24
    assert matrices[0] == (1, 0, 0, 1)
    index = {m: i for i, m in enumerate(matrices)}
    h = tuple(sorted(index[(1, b, 0, 1)] for b in range(3)))
    mu = index[(2, 2, 0, 2)]
    valid, strict = check_coset_pair(group, h, mu)
    assert valid and strict
    rack = coset_rack(group, h, mu)
    assert rack.n == 8
    assert is_connected(rack)
    assert inner_group(rack).order() == 24
    sigma = rack.canonical_automorphism()
    assert all(sigma(i) != i for i in range(8))
    assert (sigma * sigma).is_identity()


def test_sl2_file_format():
    text = "sl2 3\n1 1 0 1\n1 0 1 1\n"
    group, matrices = parse_sl2(text)
    assert group.n == 24
    with pytest.raises(FormatError):
        parse_sl2("sl2 3\n1 1 0 2\n")  # determinant 2


def test_group_file_round_trip():
    g = sym3()
    assert parse_group(format_group(g)).cayley == g.cayley
    with pytest.raises(FormatError) as exc:
        parse_group("group 2\n0 1\n1 x\n")
    assert exc.value.line == 3


def test_transitive_crossed():
    g = sym3()
    t = transpositions(g)[0]
    x = transitive_crossed(g, (0,), t)
    assert x.size == 6
    assert x.delta == tuple(g.conj(a, t) for a in range(6))
    one_point = transitive_crossed(g, tuple(range(6)), 0)
    assert one_point.size == 1
    with pytest.raises(ValueError):
        transitive_crossed(g, g.subgroup_from([transpositions(g)[1]]), t)


def test_transitive_crossed_iso():
    g = sym3()
    t1, t2 = transpositions(g)[:2]
    assert transitive_crossed_iso(g, ((0,), t1), ((0,), t2))
    assert not transitive_crossed_iso(g, ((0,), 0), ((0,), t1))
    h = g.subgroup_from([t1])
    conj_h = tuple(sorted(g.conj(t2, x) for x in h))
    assert transitive_crossed_iso(g, (h, t1), (conj_h, g.conj(t2, t1)))


def test_crossed_to_rack():
    g = sym3()
    t = transpositions(g)[0]
    # the transposition class as a crossed set: cosets of the centralizer
    # with crossing g -> g t g^(-1)
    x = transitive_crossed(g, g.centralizer(t), t)
    assert sorted(set(x.delta)) == sorted(transpositions(g))
    assert are_isomorphic(crossed_to_rack(x), dihedral(3))

    # over the trivial subgroup the same crossing gives a connected order-6
    # rack, the coset rack of (trivial, t)
    free = transitive_crossed(g, (0,), t)
    rack = crossed_to_rack(free)
    assert rack.n == 6
    assert is_connected(rack)
    assert rack == coset_rack(g, (0,), t)

    identity_crossing = transitive_crossed(g, (0,), 0)
    assert crossed_to_rack(identity_crossing) == trivial(6)


def test_crossed_to_rack_matches_coset_rack():
    group, matrices = special_linear_2(3)
    index = {m: i for i, m in enumerate(matrices)}
    h = tuple(sorted(index[(1, b, 0, 1)] for b in range(3)))
    mu = index[(2, 2, 0, 2)]
    assert crossed_to_rack(transitive_crossed(group, h, mu)) == coset_rack(group, h, mu)


def test_rack_to_crossed_round_trip(racks_by_order):
    for n in range(1, 5):
        for r in racks_by_order[n]:
            x = rack_to_crossed(r)
            assert crossed_to_rack(x) == r


def test_rack_to_crossed_details():
    x = rack_to_crossed(trivial(2))
    assert x.group.n == 2  # the symmetric group on two points
    assert x.delta == (0, 0)
    y = rack_to_crossed(dihedral(3))
    assert y.group.n == 6
    with pytest.raises(ValueError):
        rack_to_crossed(RackTable([]))


def test_reverse_round_trip_equivalence(racks_by_order):
    for n in range(1, 4):
        for r in racks_by_order[n]:
            x = rack_to_crossed(r)
            back = crossed_to_rack(x)
            again = rack_to_crossed(back)
            f = list(range(x.group.n))
            w = list(range(x.size))
            assert is_equivalence(f, w, x, again)


def test_reverse_round_trip_from_foreign_group():
    # start from crossed sets over groups other than the automorphism
    # group; the action homomorphism into it gives the equivalence
    g = sym3()
    t = transpositions(g)[0]
    for subgroup, a in (((0,), t), (g.centralizer(t), t), (g.subgroup_from([t]), 0)):
        x = transitive_crossed(g, subgroup, a)
        y = rack_to_crossed(crossed_to_rack(x))
        index = {p: i for i, p in enumerate(y.action)}
        f = [index[x.action[gg]] for gg in range(g.n)]
        assert is_equivalence(f, list(range(x.size)), x, y)


def test_crossed_sum_and_product(racks_by_order):
    small = [(rack_to_crossed(r), r) for r in racks_by_order[2] + racks_by_order[3][:2]]
    for x, rx in small:
        for y, ry in small:
            assert are_isomorphic(crossed_to_rack(crossed_sum(x, y)), disjoint_union(rx, ry))
            assert crossed_to_rack(crossed_product(x, y)) == product(rx, ry)


def test_crossed_sum_with_empty():
    x = rack_to_crossed(cycle_rack(2))
    empty = CrossedGSet(cyclic_group(1), 0, (Perm.identity(0),), ())
    total = crossed_sum(x, empty)
    assert total.size == x.size
    f = [x.group.mul(a, 0) for a in range(x.group.n)]  # G -> G x 1 is the identity here
    assert is_equivalence(list(range(x.group.n)), list(range(x.size)), x, x)
    assert crossed_to_rack(total) == crossed_to_rack(x)


def test_diagonal_product():
    g = sym3()
    t = transpositions(g)[0]
    x = transitive_crossed(g, (0,), t)
    one = transitive_crossed(g, tuple(range(6)), 0)
    diag = diagonal_product_fixed_group(x, one)
    assert diag.size == x.size
    assert crossed_to_rack(diag) == crossed_to_rack(x)
    with pytest.raises(ValueError):
        diagonal_product_fixed_group(x, transitive_crossed(cyclic_group(2), (0,), 0))


def test_same_group_sum_versus_product_group_sum():
    # Two models of the sum of crossed sets over one group G: the combined
    # crossing over G itself, and the disjoint crossing over G x G.  The
    # diagonal G -> G x G with the identity carrier map is NOT a morphism
    # between them (its square needs (d(y), d(y)) = (d(y), e)), so the two
    # models are linked by a zigzag through the free-product sum rather than
    # a single equivalence; what is directly checkable is that both induce
    # the same element over the class registry.
    from rackring import BurnsideRing

    g = sym3()
    t1, t2 = transpositions(g)[:2]
    y = transitive_crossed(g, (0,), t1)
    z = transitive_crossed(g, (0,), t2)
    over_g = crossed_sum_same_group(y, z)
    over_gg = crossed_sum(y, z)
    diag = [a * g.n + a for a in range(g.n)]
    assert not is_equivalence(diag, list(range(over_g.size)), over_g, over_gg)
    ring = BurnsideRing()
    assert ring.of_rack(crossed_to_rack(over_g)) == ring.of_rack(crossed_to_rack(over_gg))


def crossed_sum_same_group(x, y):
    """Disjoint union of two crossed sets over one shared group."""
    g = x.group
    action = tuple(
        Perm(list(x.action[a].images) + [x.size + v for v in y.action[a].images])
        for a in range(g.n)
    )
    return CrossedGSet(g, x.size + y.size, action, x.delta + y.delta)


def test_is_equivalence_rejects_non_bijections():
    x = rack_to_crossed(trivial(2))
    assert not is_equivalence([0, 1], [0, 0], x, x)


def test_crossed_validation_rejects_bad_data():
    g = cyclic_group(2)
    three_cycle = Perm.from_cycles(3, [0, 1, 2])
    with pytest.raises(ValueError):
        # action[1]^2 should equal action[0] = id but a 3-cycle squares to
        # its inverse: not a homomorphism
        CrossedGSet(g, 3, (Perm.identity(3), three_cycle), (0, 0, 0))
    swap = Perm.from_cycles(2, [0, 1])
    with pytest.raises(ValueError):
        CrossedGSet(g, 2, (swap, Perm.identity(2)), (0, 0))  # identity must act trivially
    s3 = sym3()
    t = transpositions(s3)[0]
    x = transitive_crossed(s3, s3.centralizer(t), t)
    with pytest.raises(ValueError):
        # constant crossing over a nonabelian orbit breaks equivariance
        CrossedGSet(s3, x.size, x.action, (t,) * x.size)


def test_crossed_actions_give_valid_racks_over_small_groups():
    for group in (cyclic_group(4), sym3(), special_linear_2(3)[0]):
        seen = set()
        for gen in range(group.n):
            h = group.subgroup_from([gen])
            if h in seen:
                continue
            seen.add(h)
            centralizing = [
                a
                for a in range(group.n)
                if all(group.mul(a, x) == group.mul(x, a) for x in h)
            ]
            for a in centralizing[:2]:
                x = transitive_crossed(group, h, a)
                crossed_to_rack(x)  # RackTable construction validates


def test_identity_crossing_gives_trivial_quandles():
    g = sym3()
    seen = set()
    for gens in ([0], *[[t] for t in range(1, 6)], [1, 3]):
        h = g.subgroup_from(gens)
        if h in seen:
            continue
        seen.add(h)
        rack = crossed_to_rack(transitive_crossed(g, h, 0))
        assert rack == trivial(6 // len(h))


def test_sum_additivity_of_classes(ring, racks_by_order):
    for rx in racks_by_order[2]:
        for ry in racks_by_order[3][:3]:
            x, y = rack_to_crossed(rx), rack_to_crossed(ry)
            total = ring.of_rack(crossed_to_rack(crossed_sum(x, y)))
            assert total == ring.of_rack(rx) + ring.of_rack(ry)
