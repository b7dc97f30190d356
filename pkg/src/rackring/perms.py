"""Permutations of {0, ..., n-1} and a small permutation-group kernel.

The group machinery is a deterministic Schreier-Sims stabilizer chain:
enough for orders, membership tests, orbits and element listing of the
inner and automorphism groups that show up for small racks.  It makes no
attempt at large-degree performance.
"""

from __future__ import annotations

import math
from itertools import permutations as _sym

from .cycles import CycleVector


class Perm:
    """An immutable permutation, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        for cycle in cycles:
            for i, j in zip(cycle, cycle[1:]):
                images[i] = j
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        """Composition p * q applies q first: (p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Perm(self.images[i] for i in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Cycles of length >= 2, each starting at its least point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(cycle)
        return out

    def cycle_lengths(self):
        """All cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths.extend([1] * (self.degree - sum(lengths)))
        return tuple(sorted(lengths, reverse=True))

    def cycle_type(self):
        """Mapping {length -> number of cycles of that length}."""
        return CycleVector.of_lengths(self.cycle_lengths())

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Perm({list(self.images)!r})"

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


def centralizer_order_in_sym(p: Perm) -> int:
    """Order of the centralizer of p in the full symmetric group."""
    counts = {}
    for length in p.cycle_lengths():
        counts[length] = counts.get(length, 0) + 1
    out = 1
    for length, count in counts.items():
        out *= length**count * math.factorial(count)
    return out


class PermGroup:
    """Permutation group given by generators, with a stabilizer chain.

    The chain is built deterministically: each new base point is the
    least point moved by the residue that forced it, so orders, orbits
    and element listings are reproducible.
    """

    def __init__(self, degree, generators=()):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = generators
        self._base = []
        self._strong = []  # strong generators fixing base[:level]
        self._transversal = []  # dicts point -> coset representative
        gens = [g for g in generators if not g.is_identity()]
        if gens:
            self._base.append(min(i for g in gens for i in range(degree) if g(i) != i))
            self._strong.append(list(gens))
            self._transversal.append({})
            self._schreier_sims(0)

    # -- chain construction -------------------------------------------------

    def _orbit_transversal(self, level):
        b = self._base[level]
        gens = self._strong[level]
        tr = {b: Perm.identity(self.degree)}
        queue = [b]
        while queue:
            p = queue.pop(0)
            for g in gens:
                q = g(p)
                if q not in tr:
                    tr[q] = g * tr[p]
                    queue.append(q)
        self._transversal[level] = tr

    def _strip(self, g, level):
        for i in range(level, len(self._base)):
            p = g(self._base[i])
            tr = self._transversal[i]
            if p not in tr:
                return g, i
            g = tr[p].inverse() * g
        return g, len(self._base)

    def _schreier_sims(self, level):
        self._orbit_transversal(level)
        tr = self._transversal[level]
        for point in sorted(tr):
            rep = tr[point]
            for s in list(self._strong[level]):
                target = s(point)
                schreier = self._transversal[level][target].inverse() * (s * rep)
                if schreier.is_identity():
                    continue
                residue, drop = self._strip(schreier, level + 1)
                if residue.is_identity():
                    continue
                if drop == len(self._base):
                    moved = min(i for i in range(self.degree) if residue(i) != i)
                    self._base.append(moved)
                    self._strong.append([])
                    self._transversal.append({})
                for j in range(level + 1, drop + 1):
                    self._strong[j].append(residue)
                for j in range(drop, level, -1):
                    self._schreier_sims(j)

    # -- queries -------------------------------------------------------------

    def order(self):
        out = 1
        for tr in self._transversal:
            out *= len(tr)
        return out

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, level = self._strip(p, 0)
        return residue.is_identity() and level == len(self._base)

    def __contains__(self, p):
        return self.contains(p)

    def orbits(self):
        """Orbit partition of {0..n-1}: sorted orbits, ordered by least element."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i in range(self.degree):
                a, b = find(i), find(g(i))
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return tuple(tuple(groups[root]) for root in sorted(groups))

    def is_transitive(self):
        return self.degree >= 1 and len(self.orbits()) == 1

    def elements(self):
        """Iterate all group elements in a deterministic order."""

        def rec(level):
            if level == len(self._base):
                yield Perm.identity(self.degree)
                return
            tr = self._transversal[level]
            for point in sorted(tr):
                for rest in rec(level + 1):
                    yield tr[point] * rest

        yield from rec(0)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def group_closure_from(degree, perms):
    """Group generated by perms, adding only generators not already reached."""
    kept = []
    group = PermGroup(degree, ())
    for p in perms:
        if p not in group:
            kept.append(p)
            group = PermGroup(degree, tuple(kept))
    return group


def symmetric_group_elements(degree):
    """All permutations of the given degree, in lexicographic order."""
    return [Perm(images) for images in _sym(range(degree))]
