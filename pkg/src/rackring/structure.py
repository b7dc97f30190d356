"""Structural analysis of rack tables.

Covers the inner automorphism group and its orbits, the four structural
adjectives (connected, homogeneous, irreducible, indecomposable), the
partition into maximal connected subracks with its refinement tree, ideal
and decomposition listings, and profiles of homogeneous racks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import CycleVector
from .perms import PermGroup
from .racks import RackTable

MAX_ORBITS_FOR_IDEALS = 12


def inner_group(r: RackTable) -> PermGroup:
    """Group generated by the left multiplications (trivial for n = 0)."""
    return PermGroup(r.n, tuple(r.row_perms()))


def _orbit_partition(table, indices=None):
    """Orbits of the rows' action, as sorted tuples ordered by least element."""
    if indices is None:
        indices = range(len(table))
    indices = list(indices)
    pos = {x: i for i, x in enumerate(indices)}
    parent = list(range(len(indices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in indices:
        row = table[a]
        for b in indices:
            i, j = find(pos[b]), find(pos[row[b]])
            if i != j:
                parent[max(i, j)] = min(i, j)
    groups = {}
    for i, x in enumerate(indices):
        groups.setdefault(find(i), []).append(x)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


def inn_orbits(r: RackTable) -> tuple:
    return _orbit_partition(r.table)


def is_connected(r: RackTable) -> bool:
    """Single orbit of the inner group; the empty rack is not connected."""
    return r.n >= 1 and len(inn_orbits(r)) == 1


def is_homogeneous(r: RackTable) -> bool:
    """Single orbit of the full automorphism group; False for the empty rack."""
    if r.n == 0:
        return False
    from . import canonical

    return all(
        canonical.has_automorphism_mapping(r, 0, v) for v in range(1, r.n)
    )


def irreducible_components(r: RackTable) -> tuple:
    """Finest partition with a ~ b whenever a |> b != b or b |> a != a."""
    parent = list(range(r.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(r.n):
        for b in range(r.n):
            if r.table[a][b] != b or r.table[b][a] != a:
                i, j = find(a), find(b)
                if i != j:
                    parent[max(i, j)] = min(i, j)
    groups = {}
    for x in range(r.n):
        groups.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


def is_irreducible(r: RackTable) -> bool:
    return r.n >= 1 and len(irreducible_components(r)) == 1


@dataclass
class DecompositionTree:
    """Node of the orbit-refinement recursion.

    `node` holds original indices; children partition the node into the
    orbits of the restricted rack.  Leaves restrict to connected racks
    (the empty rack yields a childless root by convention).
    """

    node: tuple
    children: list = field(default_factory=list)

    def height(self):
        if not self.children:
            return 0
        return 1 + max(child.height() for child in self.children)

    def leaves(self):
        if not self.children:
            return [self.node]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out


def decomposition_tree(r: RackTable) -> DecompositionTree:
    def rec(indices):
        tree = DecompositionTree(tuple(indices))
        if len(indices) <= 1:
            return tree
        orbits = _orbit_partition(r.table, indices)
        if len(orbits) == 1:
            return tree
        tree.children = [rec(orbit) for orbit in orbits]
        return tree

    return rec(tuple(range(r.n)))


def depth(r: RackTable) -> int:
    """Height of the refinement tree; 0 for connected racks and n <= 1."""
    return decomposition_tree(r).height()


def connected_parts(r: RackTable) -> list:
    """Partition of r into its maximal connected subracks.

    These are the leaves of the refinement recursion, sorted by least
    element; each leaf restricts to a connected rack.  Empty for n = 0.
    """
    if r.n == 0:
        return []
    leaves = decomposition_tree(r).leaves()
    return sorted(leaves, key=lambda leaf: leaf[0])


def enumerate_ideals(r: RackTable, max_orbits: int = MAX_ORBITS_FOR_IDEALS) -> list:
    """All ideals, which are exactly the unions of inner orbits."""
    orbits = inn_orbits(r)
    if len(orbits) > max_orbits:
        raise ValueError(f"{len(orbits)} orbits exceeds the configured bound {max_orbits}")
    out = []
    for mask in range(1 << len(orbits)):
        subset = []
        for i, orbit in enumerate(orbits):
            if mask >> i & 1:
                subset.extend(orbit)
        out.append(tuple(sorted(subset)))
    return sorted(set(out), key=lambda s: (len(s), s))


def enumerate_decompositions(r: RackTable, max_orbits: int = MAX_ORBITS_FOR_IDEALS) -> list:
    """Unordered pairs of complementary nonempty ideals."""
    full = set(range(r.n))
    seen = set()
    out = []
    for ideal in enumerate_ideals(r, max_orbits):
        if not ideal or len(ideal) == r.n:
            continue
        other = tuple(sorted(full - set(ideal)))
        pair = (ideal, other) if ideal < other else (other, ideal)
        if pair not in seen:
            seen.add(pair)
            out.append(pair)
    return sorted(out)


def profile(r: RackTable) -> CycleVector:
    """Cycle type shared by all left multiplications of a homogeneous rack."""
    if not is_homogeneous(r):
        raise ValueError("profile is only defined for homogeneous racks")
    return r.row_perm(0).cycle_type()
