"""Counting rack morphisms: censuses, marks and coloring counts.

A morphism f between rack tables satisfies f(a |> b) = f(a) |> f(b).  For
a connected source C the count |Mor(C, -)| is additive over decompositions
and multiplicative over products, so it extends to an integer-valued ring
map on elements over the class registry.  Presented quandles count their
colorings into a target without ever building the presented object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .burnside import BurnsideElement, BurnsideRing
from .canonical import automorphisms, canonical_key, key_order, key_table
from .racks import FormatError, RackTable
from .structure import is_connected


def enumerate_morphisms(c: RackTable, r: RackTable) -> list:
    """All maps f with f(a |> b) = f(a) |> f(b), as image tuples, sorted."""
    if c.n == 0:
        raise ValueError("the source must be nonempty")
    if r.n == 0:
        return []
    ct, rt = c.table, r.table
    n = c.n
    image = [None] * n
    assigned = []
    out = []

    def try_assign(v, w):
        trail = []
        queue = [(v, w)]
        while queue:
            x, y = queue.pop()
            if image[x] is not None:
                if image[x] != y:
                    rollback(trail)
                    return None
                continue
            image[x] = y
            assigned.append(x)
            trail.append(x)
            for u in assigned:
                queue.append((ct[x][u], rt[y][image[u]]))
                queue.append((ct[u][x], rt[image[u]][y]))
        return trail

    def rollback(trail):
        for x in reversed(trail):
            image[x] = None
            assigned.pop()

    def rec():
        # Propagation in try_assign forces every derivable image, so the
        # branch order only affects speed, never the result set.
        v = next((x for x in range(n) if image[x] is None), None)
        if v is None:
            out.append(tuple(image))
            return
        for w in range(r.n):
            trail = try_assign(v, w)
            if trail is None:
                continue
            rec()
            rollback(trail)

    rec()
    out.sort()
    return out


@dataclass
class MorphismCensus:
    mor: int
    inj: int
    sur: int
    by_image: dict  # hex canonical key of the image class -> count


def census(c: RackTable, r: RackTable) -> MorphismCensus:
    """Classify every morphism by injectivity, surjectivity and image class."""
    by_image = {}
    inj = sur = 0
    maps = enumerate_morphisms(c, r)
    for f in maps:
        values = set(f)
        if len(values) == c.n:
            inj += 1
        if len(values) == r.n:
            sur += 1
        key = canonical_key(r.restrict(sorted(values))).hex()
        by_image[key] = by_image.get(key, 0) + 1
    return MorphismCensus(len(maps), inj, sur, by_image)


def mark(c: RackTable, x: BurnsideElement, ring: BurnsideRing) -> int:
    """Morphism count from a connected source, extended linearly."""
    if not is_connected(c):
        raise ValueError("marks are only defined for connected sources")
    return sum(
        coeff * len(enumerate_morphisms(c, ring.registry.entry(i).table))
        for i, coeff in x.items()
    )


def mark_matrix(sources, targets) -> list:
    """Matrix of morphism counts; sources must be connected."""
    for c in sources:
        if not is_connected(c):
            raise ValueError("marks are only defined for connected sources")
    return [[len(enumerate_morphisms(c, r)) for r in targets] for c in sources]


def verify_triangular_recursion(c: RackTable, r: RackTable) -> bool:
    """Check the image-splitting count identities for the pair (c, r).

    Morphisms split into injections and maps with a strictly smaller image
    class D, and for each D the factored count satisfies
    |Mor_D(c, r)| * |Aut(D)| = |Inj(D, r)| * |Sur(c, D)|.
    """
    cen = census(c, r)
    smaller = {key: cnt for key, cnt in cen.by_image.items() if key_order(bytes.fromhex(key)) < c.n}
    if cen.mor != cen.inj + sum(smaller.values()):
        return False
    for key, cnt in smaller.items():
        d = key_table(bytes.fromhex(key))
        aut_d = len(automorphisms(d))
        inj_d_r = census(d, r).inj
        sur_c_d = census(c, d).sur
        if cnt * aut_d != inj_d_r * sur_c_d:
            return False
    return True


# -- presented quandles ----------------------------------------------------------


@dataclass(frozen=True)
class PresentedQuandle:
    """Generators and relations g_i |> g_j = g_m (or with the inverse action)."""

    generators: int
    relations: tuple  # of (kind, i, j, m), kind in {"apply", "unapply"}

    def __post_init__(self):
        for kind, i, j, m in self.relations:
            if kind not in ("apply", "unapply"):
                raise ValueError(f"unknown relation kind {kind!r}")
            if not all(0 <= x < self.generators for x in (i, j, m)):
                raise ValueError("relation index out of range")


def trefoil_presentation() -> PresentedQuandle:
    """Three generators a, b, c with a|>b=c, b|>c=a, c|>a=b."""
    return PresentedQuandle(3, (("apply", 0, 1, 2), ("apply", 1, 2, 0), ("apply", 2, 0, 1)))


def colorings(p: PresentedQuandle, r: RackTable) -> int:
    """Number of generator assignments into r satisfying every relation."""
    inv_rows = [row_perm.inverse().images for row_perm in r.row_perms()]

    def satisfied(assign):
        for kind, i, j, m in p.relations:
            gi, gj, gm = assign[i], assign[j], assign[m]
            if gi is None or gj is None or gm is None:
                continue
            value = r.table[gi][gj] if kind == "apply" else inv_rows[gi][gj]
            if value != gm:
                return False
        return True

    count = 0
    assign = [None] * p.generators

    def rec(v):
        nonlocal count
        if v == p.generators:
            count += 1
            return
        for w in range(r.n):
            assign[v] = w
            if satisfied(assign):
                rec(v + 1)
            assign[v] = None

    rec(0)
    return count


def parse_presentation(text: str) -> PresentedQuandle:
    """Parse `qpres <k>` followed by `i rd j = m` / `i rdinv j = m` lines."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty input, expected `qpres <k>` header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "qpres":
        raise FormatError(f"expected `qpres <k>`, got {header!r}", lineno)
    try:
        k = int(parts[1])
    except ValueError:
        raise FormatError(f"bad generator count {parts[1]!r}", lineno) from None
    relations = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 5 or tokens[3] != "=" or tokens[1] not in ("rd", "rdinv"):
            raise FormatError(f"expected `i rd j = m` or `i rdinv j = m`, got {line!r}", lineno)
        try:
            i, j, m = int(tokens[0]), int(tokens[2]), int(tokens[4])
        except ValueError:
            raise FormatError(f"non-integer generator index in {line!r}", lineno) from None
        kind = "apply" if tokens[1] == "rd" else "unapply"
        if not all(0 <= x < k for x in (i, j, m)):
            raise FormatError(f"generator index out of range in {line!r}", lineno)
        relations.append((kind, i, j, m))
    return PresentedQuandle(k, tuple(relations))


def format_presentation(p: PresentedQuandle) -> str:
    lines = [f"qpres {p.generators}"]
    for kind, i, j, m in p.relations:
        op = "rd" if kind == "apply" else "rdinv"
        lines.append(f"{i} {op} {j} = {m}")
    return "\n".join(lines) + "\n"
