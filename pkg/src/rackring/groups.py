"""Finite groups as Cayley tables, coset racks, and crossed G-sets.

A crossed G-set is a G-set X with an equivariant crossing map from X to the
group acting on itself by conjugation; it yields a rack via
a |> b = delta(a) . b, and conversely every rack arises this way from its
automorphism group.  Groups stay Cayley tables throughout so that matrix
groups over small prime fields can be ingested from generator files.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .canonical import automorphisms
from .perms import Perm
from .racks import FormatError, RackTable


class FinGroup:
    """A finite group given by its Cayley table; the identity is index 0."""

    __slots__ = ("cayley",)

    def __init__(self, cayley, _checked=False):
        cayley = tuple(tuple(row) for row in cayley)
        object.__setattr__(self, "cayley", cayley)
        if not _checked:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("FinGroup is immutable")

    def _validate(self):
        n = len(self.cayley)
        for a, row in enumerate(self.cayley):
            if len(row) != n:
                raise ValueError(f"row {a} has length {len(row)}, expected {n}")
            for b, entry in enumerate(row):
                if not isinstance(entry, int) or not 0 <= entry < n:
                    raise ValueError(f"entry [{a}][{b}] = {entry!r} out of range")
        for a in range(n):
            if self.cayley[0][a] != a or self.cayley[a][0] != a:
                raise ValueError("index 0 is not a two-sided identity")
        for a in range(n):
            if all(self.cayley[a][b] != 0 for b in range(n)):
                raise ValueError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.cayley[a][b]
                for c in range(n):
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]]:
                        raise ValueError(f"associativity fails at ({a}, {b}, {c})")

    @property
    def n(self):
        return len(self.cayley)

    def __len__(self):
        return len(self.cayley)

    def mul(self, a, b):
        return self.cayley[a][b]

    def inv(self, a):
        row = self.cayley[a]
        for b in range(self.n):
            if row[b] == 0:
                return b
        raise ValueError(f"element {a} has no inverse")

    def conj(self, g, x):
        """g x g^(-1)."""
        return self.mul(self.mul(g, x), self.inv(g))

    def commutator(self, a, b):
        """a b a^(-1) b^(-1)."""
        return self.mul(self.mul(a, b), self.inv(self.mul(b, a)))

    def subgroup_from(self, gens) -> tuple:
        """Closure of the generators, as a sorted element tuple."""
        closure = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return tuple(sorted(closure))

    def is_subgroup(self, elements) -> bool:
        elements = set(elements)
        if 0 not in elements:
            return False
        return all(self.mul(a, b) in elements for a in elements for b in elements)

    def centralizer(self, g) -> tuple:
        return tuple(x for x in range(self.n) if self.mul(x, g) == self.mul(g, x))

    def conjugacy_classes(self) -> tuple:
        seen = set()
        classes = []
        for x in range(self.n):
            if x in seen:
                continue
            cls = {self.conj(g, x) for g in range(self.n)}
            seen |= cls
            classes.append(tuple(sorted(cls)))
        return tuple(sorted(classes))

    def normal_core(self, subgroup) -> tuple:
        """Intersection of all conjugates of the subgroup."""
        core = set(subgroup)
        for g in range(self.n):
            core &= {self.conj(g, h) for h in subgroup}
        return tuple(sorted(core))

    def left_cosets(self, subgroup) -> list:
        """Left cosets as sorted tuples, ordered by least element."""
        subgroup = set(subgroup)
        seen = set()
        cosets = []
        for a in range(self.n):
            if a in seen:
                continue
            coset = tuple(sorted(self.mul(a, h) for h in subgroup))
            seen |= set(coset)
            cosets.append(coset)
        return sorted(cosets)

    def __repr__(self):
        return f"FinGroup(order={self.n})"


# -- constructions ----------------------------------------------------------------


def cyclic_group(n: int) -> FinGroup:
    return FinGroup(
        (tuple((a + b) % n for b in range(n)) for a in range(n)), _checked=True
    )


def symmetric_group(m: int) -> FinGroup:
    """Cayley table of all permutations of m letters, identity first."""
    elements = [tuple(range(m))] + sorted(
        p for p in permutations(range(m)) if p != tuple(range(m))
    )
    index = {p: i for i, p in enumerate(elements)}
    cayley = [
        [index[tuple(p[q[i]] for i in range(m))] for q in elements] for p in elements
    ]
    return FinGroup(cayley, _checked=True)


def group_from_permutations(degree: int, gens) -> tuple:
    """Closure of permutation generators: (FinGroup, element Perm list)."""
    identity = Perm.identity(degree)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        x = frontier.pop(0)
        for g in gens:
            y = g * x
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                frontier.append(y)
    cayley = [[index[a * b] for b in elements] for a in elements]
    return FinGroup(cayley, _checked=True), elements


def dihedral_group(order: int) -> FinGroup:
    """Dihedral group of the given (even, >= 2) order."""
    if order % 2 or order < 2:
        raise ValueError("dihedral groups here have even order >= 2")
    m = order // 2
    if m == 1:
        return cyclic_group(2)
    if m == 2:
        return direct_product_group(cyclic_group(2), cyclic_group(2))
    rotation = Perm.from_cycles(m, list(range(m)))
    reflection = Perm(tuple((-i) % m for i in range(m)))
    group, _ = group_from_permutations(m, [rotation, reflection])
    return group


def special_linear_2(p: int, generators=None):
    """SL2 over the prime field F_p, built by closure from generator matrices.

    Returns (group, matrices) where matrices[i] is the (a, b, c, d) of
    element i; the identity matrix has index 0.  With no generators given,
    the full group is generated from the two standard transvections.
    """
    if generators is None:
        generators = [(1, 1, 0, 1), (1, 0, 1, 1)]
    for a, b, c, d in generators:
        if (a * d - b * c) % p != 1:
            raise ValueError(f"matrix {(a, b, c, d)} does not have determinant 1")

    def mat_mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    identity = (1, 0, 0, 1)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    gens = [tuple(x % p for x in m) for m in generators]
    while frontier:
        x = frontier.pop(0)
        for g in gens:
            y = mat_mul(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                frontier.append(y)
    cayley = [[index[mat_mul(x, y)] for y in elements] for x in elements]
    return FinGroup(cayley, _checked=True), elements


def conjugation_quandle(group: FinGroup) -> RackTable:
    """The whole group with g |> h = g h g^(-1)."""
    return RackTable(
        tuple(group.conj(g, h) for h in range(group.n)) for g in range(group.n)
    )


def conjugation_class_quandle(group: FinGroup, elements) -> RackTable:
    """A conjugation-closed subset with the conjugation operation."""
    elements = tuple(sorted(set(elements)))
    closed = {group.conj(g, x) for g in range(group.n) for x in elements}
    if closed != set(elements):
        raise ValueError("the subset is not closed under conjugation")
    index = {x: i for i, x in enumerate(elements)}
    return RackTable(
        tuple(index[group.conj(a, b)] for b in elements) for a in elements
    )


# -- coset racks ---------------------------------------------------------------------


def check_coset_pair(group: FinGroup, subgroup, mu) -> tuple:
    """(valid, strict): the commutator condition, and the stronger
    requirement that mu centralizes the subgroup."""
    subgroup = tuple(subgroup)
    if not group.is_subgroup(subgroup):
        raise ValueError("not a subgroup")
    core = set(group.normal_core(subgroup))
    valid = all(group.commutator(h, mu) in core for h in subgroup)
    strict = all(group.mul(h, mu) == group.mul(mu, h) for h in subgroup)
    return valid, strict


def coset_rack(group: FinGroup, subgroup, mu) -> RackTable:
    """Rack on the left cosets of the subgroup: aH |> bH = (a mu a^(-1)) bH."""
    valid, _ = check_coset_pair(group, subgroup, mu)
    if not valid:
        raise ValueError(
            "invalid pair: some commutator [h, mu] leaves the normal core"
        )
    cosets = group.left_cosets(subgroup)
    position = {}
    for i, coset in enumerate(cosets):
        for x in coset:
            position[x] = i
    rows = []
    for coset in cosets:
        a = coset[0]
        t = group.mul(group.mul(a, mu), group.inv(a))
        rows.append(tuple(position[group.mul(t, other[0])] for other in cosets))
    return RackTable(rows)


# -- crossed G-sets ---------------------------------------------------------------


@dataclass(frozen=True)
class CrossedGSet:
    """A G-set with an equivariant crossing into the conjugation action.

    `action[g]` is the permutation of the carrier given by g, and
    `delta[x]` is a group element with delta(g.x) = g delta(x) g^(-1).
    The acting group is part of the data, so this class also serves as the
    objects of the category of crossed actions over varying groups.
    """

    group: FinGroup
    size: int
    action: tuple  # Perm per group element
    delta: tuple  # group element per carrier point

    def __post_init__(self):
        g = self.group
        if len(self.action) != g.n:
            raise ValueError("action must give one permutation per group element")
        if len(self.delta) != self.size:
            raise ValueError("delta must give one group element per point")
        for p in self.action:
            if p.degree != self.size:
                raise ValueError("action degree mismatch")
        if not self.action[0].is_identity():
            raise ValueError("the identity must act trivially")
        for a in range(g.n):
            for b in range(g.n):
                if self.action[g.mul(a, b)] != self.action[a] * self.action[b]:
                    raise ValueError(f"action is not a homomorphism at ({a}, {b})")
        for a in range(g.n):
            pa = self.action[a]
            for x in range(self.size):
                if self.delta[pa(x)] != g.conj(a, self.delta[x]):
                    raise ValueError(f"crossing is not equivariant at ({a}, {x})")


CrossedAction = CrossedGSet


def transitive_crossed(group: FinGroup, subgroup, a) -> CrossedGSet:
    """Cosets of the subgroup with left translation and crossing gH -> g a g^(-1)."""
    subgroup = tuple(subgroup)
    if not group.is_subgroup(subgroup):
        raise ValueError("not a subgroup")
    if any(group.mul(a, h) != group.mul(h, a) for h in subgroup):
        raise ValueError("the crossing element must centralize the subgroup")
    cosets = group.left_cosets(subgroup)
    position = {}
    for i, coset in enumerate(cosets):
        for x in coset:
            position[x] = i
    action = tuple(
        Perm(position[group.mul(g, coset[0])] for coset in cosets)
        for g in range(group.n)
    )
    delta = tuple(group.conj(coset[0], a) for coset in cosets)
    return CrossedGSet(group, len(cosets), action, delta)


def transitive_crossed_iso(group: FinGroup, pair1, pair2) -> bool:
    """Conjugacy of (H, a) pairs: exists g with gHg^(-1) = K and gag^(-1) = b."""
    (h, a), (k, b) = pair1, pair2
    hset, kset = set(h), set(k)
    for g in range(group.n):
        if {group.conj(g, x) for x in hset} == kset and group.conj(g, a) == b:
            return True
    return False


def crossed_to_rack(x: CrossedGSet) -> RackTable:
    """The rack a |> b = delta(a) . b (validity follows from equivariance)."""
    return RackTable(x.action[x.delta[a]].images for a in range(x.size))


def rack_to_crossed(r: RackTable) -> CrossedGSet:
    """The crossed action of the automorphism group, crossing by rows."""
    if r.n == 0:
        raise ValueError("the empty rack admits no crossed action")
    auts = automorphisms(r)
    identity = Perm.identity(r.n)
    elements = [identity] + [p for p in auts if p != identity]
    index = {p: i for i, p in enumerate(elements)}
    cayley = [[index[p * q] for q in elements] for p in elements]
    group = FinGroup(cayley, _checked=True)
    delta = tuple(index[r.row_perm(a)] for a in range(r.n))
    return CrossedGSet(group, r.n, tuple(elements), delta)


def direct_product_group(g: FinGroup, h: FinGroup) -> FinGroup:
    """G x H with (a, b) indexed as a * |H| + b."""
    nh = h.n
    cayley = [
        [g.mul(a, c) * nh + h.mul(b, d) for c in range(g.n) for d in range(nh)]
        for a in range(g.n)
        for b in range(nh)
    ]
    return FinGroup(cayley, _checked=True)


def crossed_sum(x: CrossedGSet, y: CrossedGSet) -> CrossedGSet:
    """Disjoint union over the product group, crossings (delta, e) and (e, epsilon)."""
    g, h = x.group, y.group
    gh = direct_product_group(g, h)
    size = x.size + y.size
    action = []
    for a in range(g.n):
        for b in range(h.n):
            pa, pb = x.action[a], y.action[b]
            action.append(Perm(list(pa.images) + [x.size + v for v in pb.images]))
    delta = tuple(x.delta[p] * h.n for p in range(x.size)) + tuple(
        y.delta[q] for q in range(y.size)
    )
    return CrossedGSet(gh, size, tuple(action), delta)


def crossed_product(x: CrossedGSet, y: CrossedGSet) -> CrossedGSet:
    """Cartesian product over the product group, crossing (delta, epsilon)."""
    g, h = x.group, y.group
    gh = direct_product_group(g, h)
    size = x.size * y.size
    action = []
    for a in range(g.n):
        for b in range(h.n):
            pa, pb = x.action[a], y.action[b]
            action.append(
                Perm(
                    pa(p) * y.size + pb(q)
                    for p in range(x.size)
                    for q in range(y.size)
                )
            )
    delta = tuple(
        x.delta[p] * h.n + y.delta[q] for p in range(x.size) for q in range(y.size)
    )
    return CrossedGSet(gh, size, tuple(action), delta)


def diagonal_product_fixed_group(x: CrossedGSet, y: CrossedGSet) -> CrossedGSet:
    """Product over the same group with diagonal action and multiplied crossings."""
    if x.group.cayley != y.group.cayley:
        raise ValueError("both factors must share the same group")
    g = x.group
    size = x.size * y.size
    action = tuple(
        Perm(
            x.action[a](p) * y.size + y.action[a](q)
            for p in range(x.size)
            for q in range(y.size)
        )
        for a in range(g.n)
    )
    delta = tuple(
        g.mul(x.delta[p], y.delta[q]) for p in range(x.size) for q in range(y.size)
    )
    return CrossedGSet(g, size, action, delta)


def is_equivalence(f, w, x: CrossedGSet, y: CrossedGSet) -> bool:
    """Check a morphism of crossed actions whose carrier map is a bijection.

    `f` maps elements of x.group to elements of y.group; `w` maps carrier
    points of x to carrier points of y.  Required: f is a homomorphism, w is
    bijective and equivariant through f, and f(delta(p)) = epsilon(w(p)).
    """
    f, w = tuple(f), tuple(w)
    if len(f) != x.group.n or len(w) != x.size:
        raise ValueError("image tables have the wrong length")
    g, h = x.group, y.group
    if any(not 0 <= v < h.n for v in f) or f[0] != 0:
        return False
    if sorted(w) != list(range(y.size)):
        return False
    for a in range(g.n):
        for b in range(g.n):
            if f[g.mul(a, b)] != h.mul(f[a], f[b]):
                return False
    for a in range(g.n):
        for p in range(x.size):
            if w[x.action[a](p)] != y.action[f[a]](w[p]):
                return False
    return all(f[x.delta[p]] == y.delta[w[p]] for p in range(x.size))


# -- text formats -----------------------------------------------------------------


def parse_group(text: str) -> FinGroup:
    """Parse `group <n>` followed by n Cayley rows; identity must be index 0."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty input, expected `group <n>` header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "group":
        raise FormatError(f"expected `group <n>`, got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"bad order {parts[1]!r}", lineno) from None
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", lineno)
    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, expected {n}", lineno)
        rows.append(row)
    try:
        return FinGroup(rows)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def parse_sl2(text: str):
    """Parse `sl2 <p>` plus generator matrices, one `a b c d` per line."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty input, expected `sl2 <p>` header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "sl2":
        raise FormatError(f"expected `sl2 <p>`, got {header!r}", lineno)
    try:
        p = int(parts[1])
    except ValueError:
        raise FormatError(f"bad prime {parts[1]!r}", lineno) from None
    matrices = []
    for lineno, line in lines[1:]:
        try:
            entries = tuple(int(tok) % p for tok in line.split())
        except ValueError:
            raise FormatError(f"non-integer entry in {line!r}", lineno) from None
        if len(entries) != 4:
            raise FormatError(f"expected 4 entries, got {len(entries)}", lineno)
        matrices.append(entries)
    try:
        return special_linear_2(p, matrices or None)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def format_group(group: FinGroup) -> str:
    lines = [f"group {group.n}"]
    lines.extend(" ".join(map(str, row)) for row in group.cayley)
    return "\n".join(lines) + "\n"
