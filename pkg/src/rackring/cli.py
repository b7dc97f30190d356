"""Command-line interface and workspace persistence.

Commands are deterministic given the workspace state.  Exit codes: 0 on
success, 1 on domain errors (invalid tables, failed preconditions,
unreadable files), 2 on usage errors.  Every report has a machine-readable
form behind the global --json flag.
"""

from __future__ import annotations

import argparse
import fcntl
import json
import os
import sys
from contextlib import contextmanager
from struct import error as struct_error

from .burnside import BurnsideElement, BurnsideRing, ClassRegistry, format_element, parse_element, render_element
from .canonical import canonical_form, canonical_key, find_isomorphism, key_table
from .enumeration import EnumerationFilter, enumerate_racks
from .groups import (
    check_coset_pair,
    conjugation_class_quandle,
    conjugation_quandle,
    coset_rack,
    crossed_to_rack,
    is_equivalence,
    parse_group,
    parse_sl2,
    rack_to_crossed,
)
from .marks import census, colorings, parse_presentation
from .racks import FormatError, InvalidRackError, RackTable, format_rack, parse_rack
from .structure import connected_parts, depth, inn_orbits, is_connected, is_homogeneous, is_irreducible, profile

DEFAULT_WORKSPACE = "./rackring-data"
WORKSPACE_ENV = "RACKRING_WORKSPACE"


class Workspace:
    """Directory holding the registry, representative tables and product memo."""

    def __init__(self, path):
        self.path = path

    @property
    def registry_file(self):
        return os.path.join(self.path, "registry.txt")

    @property
    def tables_dir(self):
        return os.path.join(self.path, "tables")

    @property
    def products_file(self):
        return os.path.join(self.path, "products.txt")

    @contextmanager
    def lock(self, shared=False):
        os.makedirs(self.path, exist_ok=True)
        lock_path = os.path.join(self.path, ".lock")
        fd = os.open(lock_path, os.O_CREAT | os.O_RDWR)
        try:
            fcntl.flock(fd, fcntl.LOCK_SH if shared else fcntl.LOCK_EX)
            yield
        finally:
            fcntl.flock(fd, fcntl.LOCK_UN)
            os.close(fd)

    def load_ring(self) -> BurnsideRing:
        registry = ClassRegistry()
        ring = BurnsideRing(registry)
        if os.path.exists(self.registry_file):
            with open(self.registry_file, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            for lineno, raw in enumerate(lines, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 4:
                    raise FormatError("expected `<id> <order> <flags> <hex key>`", lineno)
                try:
                    class_id, order = int(parts[0]), int(parts[1])
                    key = bytes.fromhex(parts[3])
                except ValueError:
                    raise FormatError(f"corrupt registry entry {line!r}", lineno) from None
                try:
                    registry.merge_entry(class_id, key)
                except ValueError as exc:
                    raise FormatError(str(exc), lineno) from None
                entry = registry.entry(class_id)
                expected_flags = "cq" if entry.quandle else "c-"
                if entry.order != order or parts[2] != expected_flags:
                    raise FormatError(f"corrupt registry entry {line!r}", lineno)
        if os.path.exists(self.products_file):
            with open(self.products_file, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            for lineno, raw in enumerate(lines, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                tokens = line.split()
                if len(tokens) < 3 or tokens[2] != "=" or len(tokens) % 2 == 0:
                    raise FormatError("expected `<hex> <hex> = [<coeff> <hex> ...]`", lineno)
                try:
                    left = registry.register(key_table(bytes.fromhex(tokens[0])))
                    right = registry.register(key_table(bytes.fromhex(tokens[1])))
                    element = BurnsideElement()
                    for i in range(3, len(tokens), 2):
                        coeff = int(tokens[i])
                        table = key_table(bytes.fromhex(tokens[i + 1]))
                        element._bump(registry.register(table), coeff)
                except (ValueError, struct_error) as exc:
                    raise FormatError(f"corrupt product entry: {exc}", lineno) from None
                pair = (left, right) if left <= right else (right, left)
                ring.product_memo[pair] = element
        return ring

    def save_ring(self, ring: BurnsideRing):
        os.makedirs(self.tables_dir, exist_ok=True)
        registry = ring.registry
        lines = []
        for entry in registry.entries():
            flags = "cq" if entry.quandle else "c-"
            lines.append(f"{entry.id} {entry.order} {flags} {entry.key.hex()}")
            # sidecars are named by id: full keys outgrow filename limits
            table_path = os.path.join(self.tables_dir, f"{entry.id}.rack")
            if not os.path.exists(table_path):
                with open(table_path, "w", encoding="utf-8") as fh:
                    fh.write(format_rack(entry.table))
        with open(self.registry_file, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        memo_lines = []
        for (i, j), element in sorted(ring.product_memo.items()):
            tokens = [registry.entry(i).key.hex(), registry.entry(j).key.hex(), "="]
            for k in sorted(element):
                tokens.append(str(element[k]))
                tokens.append(registry.entry(k).key.hex())
            memo_lines.append(" ".join(tokens))
        with open(self.products_file, "w", encoding="utf-8") as fh:
            fh.write("\n".join(memo_lines) + ("\n" if memo_lines else ""))


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", 0) from None


def _load_rack_file(path) -> RackTable:
    return parse_rack(_read_text(path))


def _cycle_factors(vector) -> str:
    return " ".join(f"{k}^{vector[k]}" for k in sorted(vector)) if vector else "-"


# -- command handlers -----------------------------------------------------------


def cmd_validate(args):
    table = _load_rack_file(args.file)
    kind = "quandle" if table.is_quandle() else "rack"
    report = {"valid": True, "kind": kind, "order": table.n}
    return report, [f"valid {kind}, order {table.n}"]


def cmd_analyze(args):
    table = _load_rack_file(args.file)
    homogeneous = is_homogeneous(table) if table.n else False
    prof = _cycle_factors(profile(table)) if homogeneous else "-"
    report = {
        "order": table.n,
        "quandle": table.is_quandle(),
        "connected": is_connected(table),
        "homogeneous": homogeneous,
        "irreducible": is_irreducible(table),
        "orbit_sizes": [len(o) for o in inn_orbits(table)],
        "depth": depth(table),
        "profile": prof,
        "sigma": _cycle_factors(table.canonical_automorphism().cycle_type()),
    }
    lines = [
        f"order: {report['order']}",
        f"quandle: {str(report['quandle']).lower()}",
        f"connected: {str(report['connected']).lower()}",
        f"homogeneous: {str(report['homogeneous']).lower()}",
        f"irreducible: {str(report['irreducible']).lower()}",
        "orbit sizes: " + " ".join(map(str, report["orbit_sizes"])),
        f"depth: {report['depth']}",
        f"profile: {report['profile']}",
        f"sigma cycle type: {report['sigma']}",
    ]
    return report, lines


def cmd_canon(args):
    table = _load_rack_file(args.file)
    form, _ = canonical_form(table)
    key = canonical_key(table).hex()
    lines = [f"order={table.n} key={key}"]
    lines.extend(" ".join(map(str, row)) for row in form.table)
    return {"order": table.n, "key": key, "table": [list(r) for r in form.table]}, lines


def cmd_iso(args):
    a = _load_rack_file(args.file_a)
    b = _load_rack_file(args.file_b)
    witness = find_isomorphism(a, b)
    if witness is None:
        return {"isomorphic": False}, ["not isomorphic"]
    return {"isomorphic": True, "witness": list(witness.images)}, [f"isomorphic via {witness}"]


def cmd_decompose(args):
    table = _load_rack_file(args.file)
    parts = connected_parts(table)
    report = {"depth": depth(table), "parts": []}
    lines = []
    for part in parts:
        key = canonical_key(table.restrict(part)).hex()
        report["parts"].append({"indices": list(part), "order": len(part), "key": key})
        lines.append(f"part {{{', '.join(map(str, part))}}} order {len(part)} key {key}")
    lines.append(f"depth: {report['depth']}")
    return report, lines


def cmd_burnside(args):
    table = _load_rack_file(args.file)
    workspace = Workspace(args.workspace)
    with workspace.lock():
        ring = workspace.load_ring()
        element = ring.of_rack(table)
        workspace.save_ring(ring)
    text = render_element(element, ring.registry)
    report = {
        "element": [
            {"coefficient": element[i], "key": ring.registry.entry(i).key.hex()}
            for i in sorted(element)
        ]
    }
    return report, [text]


def cmd_mul(args):
    workspace = Workspace(args.workspace)
    with workspace.lock():
        ring = workspace.load_ring()
        x = parse_element(_read_text(args.file_x), ring.registry)
        y = parse_element(_read_text(args.file_y), ring.registry)
        result = ring.mul(x, y)
        workspace.save_ring(ring)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_element(result, ring.registry))
    text = render_element(result, ring.registry)
    report = {
        "element": [
            {"coefficient": result[i], "key": ring.registry.entry(i).key.hex()}
            for i in sorted(result)
        ]
    }
    return report, [text]


def cmd_marks(args):
    source = _load_rack_file(args.source)
    target = _load_rack_file(args.target)
    cen = census(source, target)
    report = {
        "mor": cen.mor,
        "inj": cen.inj,
        "sur": cen.sur,
        "by_image": dict(sorted(cen.by_image.items())),
    }
    lines = [f"mor={cen.mor} inj={cen.inj} sur={cen.sur}"]
    lines.extend(f"image {key}: {count}" for key, count in sorted(cen.by_image.items()))
    return report, lines


def cmd_color(args):
    presentation = parse_presentation(_read_text(args.presentation))
    table = _load_rack_file(args.rack)
    count = colorings(presentation, table)
    return {"colorings": count}, [str(count)]


def _emit_name(key_hex):
    """Hex key as filename; digest fallback once keys outgrow name limits."""
    if len(key_hex) <= 200:
        return f"{key_hex}.rack"
    import hashlib

    return f"sha256-{hashlib.sha256(bytes.fromhex(key_hex)).hexdigest()}.rack"


def cmd_enumerate(args):
    filt = EnumerationFilter(args.order, quandle_only=args.quandle, connected_only=args.connected)
    tables = enumerate_racks(filt)
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for table in tables:
            key = canonical_key(table).hex()
            with open(os.path.join(args.emit, _emit_name(key)), "w", encoding="utf-8") as fh:
                fh.write(format_rack(table))
    keys = [canonical_key(t).hex() for t in tables]
    return {"count": len(tables), "keys": keys}, [str(len(tables))]


def cmd_coset_rack(args):
    text = _read_text(args.group)
    if text.lstrip().startswith("sl2"):
        group, _ = parse_sl2(text)
    else:
        group = parse_group(text)
    subgroup = tuple(int(tok) for tok in args.subgroup.split(","))
    valid, strict = check_coset_pair(group, subgroup, args.mu)
    if not valid:
        raise ValueError("invalid pair: some commutator [h, mu] leaves the normal core")
    table = coset_rack(group, subgroup, args.mu)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_rack(table))
    lines = [f"order {table.n} quandle {str(table.is_quandle()).lower()} centralizing {str(strict).lower()}"]
    lines.extend(" ".join(map(str, row)) for row in table.table)
    report = {
        "order": table.n,
        "quandle": table.is_quandle(),
        "centralizing": strict,
        "table": [list(r) for r in table.table],
    }
    return report, lines


def cmd_conj_quandle(args):
    group = parse_group(_read_text(args.group))
    if args.cls is None:
        table = conjugation_quandle(group)
    else:
        rep = args.cls
        cls = {group.conj(g, rep) for g in range(group.n)}
        table = conjugation_class_quandle(group, cls)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_rack(table))
    lines = [f"order {table.n}"]
    lines.extend(" ".join(map(str, row)) for row in table.table)
    return {"order": table.n, "table": [list(r) for r in table.table]}, lines


def cmd_crossed(args):
    table = _load_rack_file(args.file)
    crossed = rack_to_crossed(table)
    back = crossed_to_rack(crossed)
    identical = back == table
    again = rack_to_crossed(back)
    equivalent = identical and is_equivalence(
        list(range(crossed.group.n)), list(range(table.n)), crossed, again
    )
    report = {
        "group_order": crossed.group.n,
        "round_trip_identical": identical,
        "round_trip_equivalent": equivalent,
    }
    lines = [
        f"automorphism group order: {crossed.group.n}",
        f"round trip table identical: {str(identical).lower()}",
        f"round trip equivalent: {str(equivalent).lower()}",
    ]
    return report, lines


def cmd_registry(args):
    workspace = Workspace(args.workspace)
    with workspace.lock(shared=True):
        ring = workspace.load_ring()
    entries = ring.registry.entries()
    report = {
        "entries": [
            {
                "id": e.id,
                "order": e.order,
                "quandle": e.quandle,
                "key": e.key.hex(),
            }
            for e in entries
        ]
    }
    lines = [f"{e.id} {e.order} {'cq' if e.quandle else 'c-'} {e.key.hex()}" for e in entries]
    if not lines:
        lines = ["(empty registry)"]
    return report, lines


def build_parser():
    parser = argparse.ArgumentParser(prog="rackring", description=__doc__)
    parser.add_argument(
        "--workspace",
        default=os.environ.get(WORKSPACE_ENV, DEFAULT_WORKSPACE),
        help=f"data directory (default {DEFAULT_WORKSPACE}, env {WORKSPACE_ENV})",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a rack file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="structural report of a rack")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("canon", help="canonical key and table")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="isomorphism test for two racks")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("decompose", help="maximal connected parts")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("burnside", help="class of a rack over the workspace registry")
    p.add_argument("file")
    p.set_defaults(func=cmd_burnside)

    p = sub.add_parser("mul", help="product of two element files")
    p.add_argument("file_x")
    p.add_argument("file_y")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("marks", help="morphism census between two racks")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("color", help="colorings of a presented quandle")
    p.add_argument("presentation")
    p.add_argument("rack")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("enumerate", help="isomorph-free generation")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--quandle", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coset-rack", help="rack on cosets of a subgroup")
    p.add_argument("group")
    p.add_argument("--h", dest="subgroup", required=True, help="comma-separated subgroup elements")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_coset_rack)

    p = sub.add_parser("conj-quandle", help="conjugation quandle of a group")
    p.add_argument("group")
    p.add_argument("--class", dest="cls", type=int, default=None, help="class representative")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_conj_quandle)

    p = sub.add_parser("crossed", help="crossed-action round trip report")
    p.add_argument("file")
    p.set_defaults(func=cmd_crossed)

    p = sub.add_parser("registry", help="list the workspace registry")
    p.set_defaults(func=cmd_registry)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, lines = args.func(args)
    except (FormatError, InvalidRackError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
