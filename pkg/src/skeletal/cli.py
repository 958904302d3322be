"""Command-line front end: ``skeletal {build|verify|op|list}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path

from . import catalog
from .errors import InvalidRadius, NotInG2, NotInvolution, SkeletalError, UnknownId
from .export import summary, write_json, write_obj, write_off
from .rewriting import candidates, g2_closure, lambda0, lambda1, mirror_vector, petrie_system
from .verify import complexes_equal, is_subcomplex, verify_entry
from .wythoff import Box, build

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _box(cid: str, radius: int, margin: int | None) -> Box:
    if radius < 0:
        raise InvalidRadius(f"radius must be non-negative, got {radius}")
    return Box(radius, catalog.margin_for(cid) if margin is None else margin)


def cmd_list(args) -> int:
    for cid in catalog.CATALOG_IDS:
        print(f"{cid:16s} {catalog.DESCRIPTIONS[cid]}")
    return EXIT_OK


def cmd_build(args) -> int:
    cid = catalog.normalize_id(args.id)
    K = catalog.build_entry(cid, args.radius, args.margin)
    info = summary(K, args.scale)
    if args.format == "json":
        buf = io.StringIO()
        write_json(info, buf)
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    if args.out:
        writer = write_off if args.format == "off" else write_obj
        with open(args.out, "w") as fh:
            writer(K, fh, args.scale)
        with open(Path(args.out).with_suffix(".json"), "w") as fh:
            write_json(info, fh)
    for key in ("catalog_id", "radius", "margin", "vertices", "edges", "faces", "face_size", "r"):
        print(f"{key}: {info[key]}")
    if args.out:
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = catalog.COMPLEX_IDS if args.id == "all" else (catalog.normalize_id(args.id),)
    reports = [verify_entry(cid, args.radius, args.margin) for cid in ids]
    if args.format == "json":
        import json

        text = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
        _emit(text, args.out)
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.catalog_id}: {'PASS' if r.passed else 'FAIL'}")
            lines.extend(r.lines())
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} catalog complexes pass")
        text = "\n".join(lines) + "\n"
        sys.stdout.write(text)
        if args.out:
            Path(args.out).write_text(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _relations(K, box, ids) -> list[str]:
    out = []
    for other in ids:
        ref = catalog.build_entry(other, box.radius, box.margin)
        if complexes_equal(K, ref):
            out.append(f"  equal to {other}")
        elif is_subcomplex(K, ref):
            out.append(f"  contained in {other}")
        elif is_subcomplex(ref, K):
            out.append(f"  contains {other}")
    return out or ["  no equality or containment with catalog entries"]


def cmd_op(args) -> int:
    cid = catalog.normalize_id(args.id)
    gs = catalog.generator_system(cid)
    box = _box(cid, args.radius, args.margin)
    targets = [catalog.normalize_id(args.target)] if args.target else list(catalog.CATALOG_IDS)
    print(f"{args.op} on {cid}, radius {box.radius}, margin {box.margin}")
    print(f"mirror vector before: {mirror_vector(gs)}")

    if args.op == "petrie":
        new = petrie_system(gs)
        print(f"mirror vector after: {mirror_vector(new)}")
        K = build(new, box)
        print("\n".join(_relations(K, box, targets)))
        return EXIT_OK

    op = lambda0 if args.op == "lambda0" else lambda1
    elements = list(g2_closure(gs))
    if not args.search:
        if args.element is None:
            raise SystemExit("op: give --element INDEX or --search")
        if not 0 <= args.element < len(elements):
            raise NotInG2(f"element index {args.element} out of range; <G2> has {len(elements)} elements")
        R = elements[args.element]
        print(f"R = {R}")
        new = op(gs, R)
        print(f"mirror vector after: {mirror_vector(new)}")
        K = build(new, box)
        print("\n".join(_relations(K, box, targets)))
        return EXIT_OK

    found = 0
    target = catalog.build_entry(targets[0], box.radius, box.margin) if args.target else None
    for c in candidates(gs, args.op):
        head = f"[{c.index}] R = {c.element}"
        if not c.valid:
            print(f"{head}: {c.error}")
            continue
        try:
            K = build(c.system, box)
        except SkeletalError as exc:
            print(f"{head}: mirror vector {mirror_vector(c.system)}; {type(exc).__name__}: {exc}")
            continue
        if target is not None:
            ok = bool(complexes_equal(K, target))
            found += ok
            print(f"{head}: mirror vector {mirror_vector(c.system)}; {'equals' if ok else 'differs from'} {targets[0]}")
        else:
            print(f"{head}: mirror vector {mirror_vector(c.system)}")
            print("\n".join(_relations(K, box, targets)))
    if target is not None:
        print(f"suitable R found: {'yes' if found else 'no'} ({found} of {len(elements)})")
        return EXIT_OK if found else EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skeletal", description="Build and verify regular polygonal complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices, fmt_default):
        sp.add_argument("--radius", type=int, default=4, help="half-width of the box (default 4)")
        sp.add_argument("--margin", type=int, default=None, help="interior margin (default: face spread)")
        sp.add_argument("--scale", type=int, default=1, help="multiply exported coordinates")
        sp.add_argument("--format", choices=fmt_choices, default=fmt_default)
        sp.add_argument("--out", metavar="PATH", default=None)

    sub.add_parser("list", help="list catalog ids")

    sp = sub.add_parser("build", help="build a catalog entry and export it")
    sp.add_argument("id")
    common(sp, ("off", "obj", "json"), "off")

    sp = sub.add_parser("verify", help="verify catalog claims (id or 'all')")
    sp.add_argument("id")
    common(sp, ("text", "json"), "text")

    sp = sub.add_parser("op", help="apply lambda0, lambda1 or petrie")
    sp.add_argument("op", choices=("lambda0", "lambda1", "petrie"))
    sp.add_argument("id")
    sp.add_argument("--element", type=int, default=None, help="index into the enumerated <G2>")
    sp.add_argument("--search", action="store_true", help="try every element of <G2>")
    sp.add_argument("--target", default=None, help="catalog id to compare against")
    common(sp, ("text",), "text")
    return p


COMMANDS = {"list": cmd_list, "build": cmd_build, "verify": cmd_verify, "op": cmd_op}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UnknownId, InvalidRadius, NotInvolution, NotInG2) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SkeletalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
