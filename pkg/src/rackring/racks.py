"""Finite racks as left-multiplication tables.

A rack is a set with a binary operation a |> b whose left multiplications
b -> a |> b are bijections satisfying a |> (b |> c) = (a |> b) |> (a |> c).
Tables are stored row-major: entry [a][b] is a |> b, so row a is the left
multiplication by a.  Quandles are the racks with a |> a = a everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Perm


class InvalidRackError(ValueError):
    pass


class FormatError(ValueError):
    """A text input could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass
class ValidationReport:
    ok: bool
    error: str | None = None  # not-square | entry-out-of-range | row-not-bijective | not-self-distributive
    detail: str = ""
    where: tuple | None = None

    def __bool__(self):
        return self.ok


def validate_table(rows) -> ValidationReport:
    """Check that rows form a rack table; report the first violation found."""
    rows = [tuple(r) for r in rows]
    n = len(rows)
    for a, row in enumerate(rows):
        if len(row) != n:
            return ValidationReport(False, "not-square", f"row {a} has length {len(row)}, expected {n}", (a,))
    for a, row in enumerate(rows):
        for b, entry in enumerate(row):
            if not isinstance(entry, int) or not 0 <= entry < n:
                return ValidationReport(False, "entry-out-of-range", f"entry [{a}][{b}] = {entry!r}", (a, b))
    for a, row in enumerate(rows):
        if len(set(row)) != n:
            return ValidationReport(False, "row-not-bijective", f"row {a} = {list(row)} is not a bijection", (a,))
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if ra[rb[c]] != rab[ra[c]]:
                    return ValidationReport(
                        False,
                        "not-self-distributive",
                        f"{a}|>({b}|>{c}) = {ra[rb[c]]} but ({a}|>{b})|>({a}|>{c}) = {rab[ra[c]]}",
                        (a, b, c),
                    )
    return ValidationReport(True)


class RackTable:
    """An immutable, validated rack table."""

    __slots__ = ("table",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        report = validate_table(rows)
        if not report.ok:
            raise InvalidRackError(f"{report.error}: {report.detail}")
        object.__setattr__(self, "table", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RackTable is immutable")

    @classmethod
    def _wrap(cls, rows):
        """Wrap rows known to be valid (already-checked constructions)."""
        self = object.__new__(cls)
        object.__setattr__(self, "table", tuple(tuple(r) for r in rows))
        return self

    @property
    def n(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __getitem__(self, a):
        return self.table[a]

    def apply(self, a, b):
        return self.table[a][b]

    def row_perm(self, a) -> Perm:
        return Perm(self.table[a])

    def row_perms(self):
        return [Perm(row) for row in self.table]

    def canonical_automorphism(self) -> Perm:
        """The permutation a -> a |> a (trivial exactly for quandles)."""
        return Perm(self.table[a][a] for a in range(self.n))

    def is_quandle(self):
        return all(self.table[a][a] == a for a in range(self.n))

    def untwist(self) -> "RackTable":
        """The quandle on the same set with a |>' b = sigma^(-1)(a |> b)."""
        sigma_inv = self.canonical_automorphism().inverse()
        return RackTable(tuple(sigma_inv(x) for x in row) for row in self.table)

    def power(self, k: int) -> "RackTable":
        """The rack with each left multiplication replaced by its k-th power."""
        rows = []
        for a in range(self.n):
            p = self.row_perm(a) ** k
            rows.append(p.images)
        return RackTable(rows)

    def relabel(self, p: Perm) -> "RackTable":
        """Transport the structure along p: new[p(a)][p(b)] = p(old[a][b])."""
        if p.degree != self.n:
            raise ValueError("degree mismatch")
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for a in range(n):
            pa = p(a)
            for b in range(n):
                rows[pa][p(b)] = p(self.table[a][b])
        return RackTable._wrap(rows)

    def restrict(self, subset) -> "RackTable":
        """The rack on a subrack subset, reindexed order-preservingly."""
        subset = tuple(sorted(subset))
        if not is_subrack(self, subset):
            raise ValueError(f"{subset} is not a subrack")
        index = {x: i for i, x in enumerate(subset)}
        return RackTable._wrap(
            tuple(index[self.table[a][b]] for b in subset) for a in subset
        )

    def __eq__(self, other):
        return isinstance(other, RackTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"RackTable({[list(r) for r in self.table]!r})"


# -- constructors -------------------------------------------------------------


def trivial(n: int) -> RackTable:
    """The trivial quandle: a |> b = b."""
    return RackTable._wrap(tuple(range(n)) for _ in range(n))


def permutation_rack(p: Perm) -> RackTable:
    """The rack with a |> b = p(b) for every a."""
    return RackTable._wrap(p.images for _ in range(p.degree))


def cycle_rack(n: int) -> RackTable:
    """The permutation rack of a single n-cycle."""
    return permutation_rack(Perm.from_cycles(n, list(range(n))))


def dihedral(n: int) -> RackTable:
    """The dihedral quandle on Z/n with a |> b = 2a - b."""
    return RackTable._wrap(
        tuple((2 * a - b) % n for b in range(n)) for a in range(n)
    )


def product(r: RackTable, s: RackTable) -> RackTable:
    """Componentwise rack on pairs; (a, b) is indexed as a * |s| + b."""
    ns = s.n
    rows = []
    for a in range(r.n):
        for b in range(ns):
            rows.append(
                tuple(r.table[a][c] * ns + s.table[b][d] for c in range(r.n) for d in range(ns))
            )
    return RackTable._wrap(rows)


def disjoint_union(r: RackTable, s: RackTable) -> RackTable:
    """Blocks act as given internally and trivially on each other."""
    nr = r.n
    rows = []
    for a in range(nr):
        rows.append(tuple(r.table[a]) + tuple(nr + j for j in range(s.n)))
    for b in range(s.n):
        rows.append(tuple(range(nr)) + tuple(nr + x for x in s.table[b]))
    return RackTable._wrap(rows)


# -- subsets ------------------------------------------------------------------


def is_subrack(r: RackTable, subset) -> bool:
    """True when every element of the subset maps the subset onto itself."""
    subset = set(subset)
    if not all(0 <= x < r.n for x in subset):
        raise ValueError("subset index out of range")
    return all({r.table[a][b] for b in subset} == subset for a in subset)


def is_ideal(r: RackTable, subset) -> bool:
    """True when every element of the rack maps the subset onto itself."""
    subset = set(subset)
    if not all(0 <= x < r.n for x in subset):
        raise ValueError("subset index out of range")
    return all({r.table[a][b] for b in subset} == subset for a in range(r.n))


def inner_fixed_points(r: RackTable) -> tuple:
    """Elements fixed by every left multiplication (always an ideal)."""
    return tuple(y for y in range(r.n) if all(r.table[x][y] == y for x in range(r.n)))


def trivially_acting_part(r: RackTable) -> tuple:
    """Self-fixed elements that fix every self-fixed element (a subrack)."""
    fixed = [y for y in range(r.n) if r.table[y][y] == y]
    return tuple(
        x for x in fixed if all(r.table[x][y] == y for y in fixed)
    )


def associated_quandle(r: RackTable):
    """Quotient by the orbits of the canonical automorphism.

    Returns (quandle, projection) where projection[x] is the index of the
    orbit of x.  On quandles this is the identity quotient.
    """
    sigma = r.canonical_automorphism()
    seen = {}
    classes = []
    for x in range(r.n):
        if x in seen:
            continue
        orbit = [x]
        y = sigma(x)
        while y != x:
            orbit.append(y)
            y = sigma(y)
        idx = len(classes)
        classes.append(min(orbit))
        for y in orbit:
            seen[y] = idx
    projection = tuple(seen[x] for x in range(r.n))
    k = len(classes)
    rows = [[None] * k for _ in range(k)]
    for a in range(r.n):
        for b in range(r.n):
            i, j, v = projection[a], projection[b], projection[r.table[a][b]]
            if rows[i][j] is None:
                rows[i][j] = v
            elif rows[i][j] != v:
                raise InvalidRackError("orbit quotient is not well-defined; corrupt table")
    return RackTable(rows), projection


# -- text format ---------------------------------------------------------------


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_rack(text: str) -> RackTable:
    """Parse the rack text format: header `rack <n>`, then n rows of n entries."""
    lines = list(_significant_lines(text))
    if not lines:
        raise FormatError("empty input, expected `rack <n>` header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "rack":
        raise FormatError(f"expected `rack <n>`, got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"bad order {parts[1]!r}", lineno) from None
    if n < 0:
        raise FormatError(f"negative order {n}", lineno)
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
    report = validate_table(rows)
    if not report.ok:
        raise InvalidRackError(f"{report.error}: {report.detail}")
    return RackTable._wrap(rows)


def format_rack(r: RackTable) -> str:
    lines = [f"rack {r.n}"]
    lines.extend(" ".join(map(str, row)) for row in r.table)
    return "\n".join(lines) + "\n"


def load_rack(path) -> RackTable:
    with open(path, encoding="utf-8") as fh:
        return parse_rack(fh.read())


def save_rack(r: RackTable, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_rack(r))
