"""Burnside rings of finite racks and quandles.

Elements are sparse integer vectors over registered connected isomorphism
classes; the class of a rack is the sum of its maximal connected parts, and
multiplication extends cartesian products of representatives bilinearly.
The module also hosts the ring maps to and from cycle vectors, the untwist
retraction onto quandle classes, power operations, and prime-quandle
factorization.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import isqrt

from . import enumeration
from .canonical import canonical_form, canonical_key, key_table, table_bytes
from .cycles import CycleVector
from .racks import RackTable, cycle_rack, product, trivial
from .structure import connected_parts, is_connected, profile


@dataclass
class ClassEntry:
    id: int
    key: bytes
    order: int
    table: RackTable  # canonical representative
    quandle: bool


class ClassRegistry:
    """Registry of connected isomorphism classes with stable integer ids.

    Writes are serialized by a lock; reads are plain dictionary lookups.
    """

    def __init__(self):
        self._by_key = {}
        self._by_id = []
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._by_id)

    def __iter__(self):
        return iter(self._by_id)

    def register(self, table: RackTable) -> int:
        """Return the id of the class of `table`, registering it if new."""
        form, _ = canonical_form(table)
        key = table_bytes(form)
        entry = self._by_key.get(key)
        if entry is not None:
            return entry.id
        if not is_connected(form):
            raise ValueError("only connected classes may be registered")
        with self._lock:
            entry = self._by_key.get(key)
            if entry is None:
                entry = ClassEntry(len(self._by_id), key, form.n, form, form.is_quandle())
                self._by_id.append(entry)
                self._by_key[key] = entry
            return entry.id

    def entry(self, class_id: int) -> ClassEntry:
        return self._by_id[class_id]

    def by_key(self, key: bytes):
        return self._by_key.get(key)

    def entries(self):
        return list(self._by_id)

    def merge_entry(self, class_id: int, key: bytes):
        """Install a loaded entry with a fixed id (registry file loading)."""
        if class_id != len(self._by_id):
            raise ValueError(f"ids must be contiguous; expected {len(self._by_id)}, got {class_id}")
        table = key_table(key)
        if canonical_key(table) != key:
            raise ValueError("stored key does not match its representative")
        if not is_connected(table):
            raise ValueError("registry entries must be connected")
        entry = ClassEntry(class_id, key, table.n, table, table.is_quandle())
        self._by_id.append(entry)
        self._by_key[key] = entry


class BurnsideElement(dict):
    """Sparse integer vector over class ids; missing ids read as 0."""

    def __init__(self, data=()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for class_id, coeff in items:
            self._bump(class_id, coeff)

    def _bump(self, class_id, coeff):
        new = self.get(class_id, 0) + coeff
        if new == 0:
            self.pop(class_id, None)
        else:
            dict.__setitem__(self, class_id, new)

    def __missing__(self, key):
        return 0

    def __add__(self, other):
        out = BurnsideElement(self)
        for class_id, coeff in other.items():
            out._bump(class_id, coeff)
        return out

    def __sub__(self, other):
        out = BurnsideElement(self)
        for class_id, coeff in other.items():
            out._bump(class_id, -coeff)
        return out

    def __neg__(self):
        return BurnsideElement((i, -c) for i, c in self.items())

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        if other == 0:
            return BurnsideElement()
        return BurnsideElement((i, other * c) for i, c in self.items())

    def __rmul__(self, other):
        return self.__mul__(other)

    def __repr__(self):
        return f"BurnsideElement({dict(sorted(self.items()))!r})"


class BurnsideRing:
    """Ring operations over a class registry."""

    def __init__(self, registry: ClassRegistry | None = None):
        self.registry = registry if registry is not None else ClassRegistry()
        self.product_memo = {}
        self._quandle_classes = {}

    # -- basis ------------------------------------------------------------

    def of_rack(self, r: RackTable) -> BurnsideElement:
        """Sum of the classes of the maximal connected parts of r."""
        out = BurnsideElement()
        for part in connected_parts(r):
            out._bump(self.registry.register(r.restrict(part)), 1)
        return out

    def class_of(self, r: RackTable) -> BurnsideElement:
        """Basis element of a connected rack."""
        if not is_connected(r):
            raise ValueError("class_of requires a connected rack")
        return BurnsideElement({self.registry.register(r): 1})

    def singleton_id(self) -> int:
        return self.registry.register(trivial(1))

    def one(self) -> BurnsideElement:
        return BurnsideElement({self.singleton_id(): 1})

    # -- ring structure -----------------------------------------------------

    def mul(self, x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
        out = BurnsideElement()
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self._basis_product(i, j).items():
                    out._bump(k, a * b * c)
        return out

    def _basis_product(self, i, j) -> BurnsideElement:
        pair = (i, j) if i <= j else (j, i)
        memo = self.product_memo.get(pair)
        if memo is None:
            left = self.registry.entry(pair[0]).table
            right = self.registry.entry(pair[1]).table
            memo = self.of_rack(product(left, right))
            self.product_memo[pair] = memo
        return memo

    def power(self, x: BurnsideElement, k: int) -> BurnsideElement:
        """Replace every representative's operation by its k-th iterate."""
        out = BurnsideElement()
        for i, a in x.items():
            for j, c in self.of_rack(self.registry.entry(i).table.power(k)).items():
                out._bump(j, a * c)
        return out

    def untwist(self, x: BurnsideElement) -> BurnsideElement:
        """Retraction onto quandle classes: untwist each representative."""
        out = BurnsideElement()
        for i, a in x.items():
            for j, c in self.of_rack(self.registry.entry(i).table.untwist()).items():
                out._bump(j, a * c)
        return out

    # -- maps to and from cycle vectors ---------------------------------------

    def from_cycles(self, u: CycleVector) -> BurnsideElement:
        """Section sending the n-cycle symbol to the n-cycle permutation rack."""
        out = BurnsideElement()
        for length, coeff in u.items():
            out._bump(self.registry.register(cycle_rack(length)), coeff)
        return out

    def to_cycles(self, x: BurnsideElement) -> CycleVector:
        """Cycle type of the canonical automorphism, extended linearly."""
        out = CycleVector()
        for i, a in x.items():
            table = self.registry.entry(i).table
            out = out + a * table.canonical_automorphism().cycle_type()
        return out

    def profile(self, x: BurnsideElement) -> CycleVector:
        """Cycle type of any left multiplication, extended linearly."""
        out = CycleVector()
        for i, a in x.items():
            out = out + a * profile(self.registry.entry(i).table)
        return out

    # -- integer marks ---------------------------------------------------------

    def singleton_coefficient(self, x: BurnsideElement) -> int:
        """Coefficient of the one-point class."""
        return x.get(self.singleton_id(), 0)

    def cardinality(self, x: BurnsideElement) -> int:
        return sum(coeff * self.registry.entry(i).order for i, coeff in x.items())

    # -- prime quandles ----------------------------------------------------------

    def connected_quandle_classes(self, order: int, *, bound=None) -> list:
        """Ids of all connected quandle classes of the given order."""
        cached = self._quandle_classes.get(order)
        if cached is None:
            filt = enumeration.EnumerationFilter(order, quandle_only=True, connected_only=True)
            cached = [self.registry.register(t) for t in enumeration.enumerate_racks(filt, bound=bound)]
            self._quandle_classes[order] = cached
        return cached

    def _check_connected_quandle(self, q: RackTable):
        if not q.is_quandle() or not is_connected(q):
            raise ValueError("expected a connected quandle")

    def is_prime_quandle(self, q: RackTable, *, bound=None) -> bool:
        """No factorization q = A x B with both factors of order > 1."""
        self._check_connected_quandle(q)
        if q.n < 2:
            raise ValueError("primality is only defined for order >= 2")
        return self._find_split(q, bound=bound) is None

    def _find_split(self, q: RackTable, *, bound=None):
        """Smallest factorization (A_id, B_id) of q, or None if prime."""
        n = q.n
        for d in range(2, isqrt(n) + 1):
            if n % d:
                continue
            for a_id in self.connected_quandle_classes(d, bound=bound):
                left = self.registry.entry(a_id).table
                for b_id in self.connected_quandle_classes(n // d, bound=bound):
                    right = self.registry.entry(b_id).table
                    if canonical_key(product(left, right)) == canonical_key(q):
                        return a_id, b_id
        return None

    def factor_quandle(self, q: RackTable, *, bound=None) -> list:
        """Multiset of prime-class ids whose product is isomorphic to q."""
        self._check_connected_quandle(q)
        if q.n == 1:
            return []
        split = self._find_split(q, bound=bound)
        if split is None:
            return [self.registry.register(q)]
        a_id, b_id = split
        left = self.factor_quandle(self.registry.entry(a_id).table, bound=bound)
        right = self.factor_quandle(self.registry.entry(b_id).table, bound=bound)
        return sorted(left + right)


# -- text formats -------------------------------------------------------------


def render_element(x: BurnsideElement, registry: ClassRegistry) -> str:
    """Display form `3 * [<hex key>] + ...`, terms ordered by class id."""
    if not x:
        return "0"
    terms = []
    for class_id in sorted(x):
        key = registry.entry(class_id).key
        terms.append(f"{x[class_id]} * [{key.hex()}]")
    return " + ".join(terms)


def format_element(x: BurnsideElement, registry: ClassRegistry) -> str:
    """File form: one `<coefficient> <hex key>` line per class."""
    lines = [f"{x[i]} {registry.entry(i).key.hex()}" for i in sorted(x)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_element(text: str, registry: ClassRegistry) -> BurnsideElement:
    """Parse the file form; keys are self-describing and register themselves."""
    out = BurnsideElement()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected `<coefficient> <hex key>`")
        try:
            coeff = int(parts[0])
            key = bytes.fromhex(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: bad coefficient or key") from None
        try:
            table = key_table(key)
        except Exception:
            raise ValueError(f"line {lineno}: malformed key") from None
        out._bump(registry.register(table), coeff)
    return out
