"""``sdot-lab`` command line.

JSON documents go to stdout; ``--verbose`` adds a human summary on stderr.
Exit codes: 0 success, 2 a property check returned false, 1 malformed input
or any other error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import doublecat, polygon, preaug, segal_check, serialize, simpset, waldhausen

EXIT_OK, EXIT_ERROR, EXIT_FALSE = 0, 1, 2


def _read(path: str):
    if path == "-":
        return serialize.loads(sys.stdin.read())
    return serialize.load(path)


def _emit(doc) -> None:
    if isinstance(doc, list):
        sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(serialize.dumps(doc))


def _say(args, msg: str) -> None:
    if args.verbose:
        print(msg, file=sys.stderr)


def _expect(obj, kinds, what: str):
    if not isinstance(obj, kinds):
        raise serialize.SchemaError(f"expected {what}, got {type(obj).__name__}")
    return obj


# ---------------------------------------------------------------------------
# verbs


def cmd_gen(args) -> int:
    kind, fmt = args.kind, args.format
    depth = args.depth
    if kind in ("W", "H", "V"):
        if fmt in (None, "dcat"):
            obj = doublecat.generate_double(kind, args.n)
        elif fmt == "paug":
            obj = preaug.generate_preaug(kind, args.n, depth)
        else:
            raise ValueError(f"kind {kind} has formats dcat and paug")
    elif kind == "box":
        obj = doublecat.generate_double("box", args.q, args.r)
    elif kind == "sigma":
        obj = preaug.representable((args.q, args.r), depth)
    elif kind == "point":
        obj = preaug.representable(preaug.MINUS_ONE, depth)
    elif kind == "simplex":
        obj = simpset.standard_simplex(args.n, depth)
    elif kind == "spine":
        obj = simpset.spine(args.n, depth)[0]
    elif kind == "boundary":
        obj = simpset.boundary(args.n, depth)[0]
    elif kind == "delta-p":
        P = polygon.PolygonalDecomposition(args.n, tuple(tuple(d) for d in args.diagonal or ()))
        obj = simpset.delta_of_decomposition(P, depth)[0]
    elif kind == "order":
        obj = simpset.nerve_of_category(simpset.FiniteCategory.linear_order(args.n), depth)
    elif kind == "group":
        obj = simpset.nerve_of_category(simpset.FiniteCategory.cyclic_group(args.order), depth)
    elif kind == "square":
        obj = simpset.nerve_of_category(simpset.FiniteCategory.commutative_square(), depth)
    elif kind == "random-poset":
        C = simpset.FiniteCategory.random_poset(random.Random(args.seed), args.size, args.density)
        obj = simpset.nerve_of_category(C, depth)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(kind)
    _say(args, repr(obj))
    _emit(serialize.to_json(obj))
    return EXIT_OK


def _verdict(args, report) -> int:
    _emit(report.to_json())
    _say(args, f"{report.property}: {report.verdict}")
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_check(args) -> int:
    X = _expect(_read(args.file), simpset.SimplicialSet, "a tss/v1 document")
    return _verdict(args, segal_check.check_simplicial(X, args.property, args.up_to))


def cmd_dcheck(args) -> int:
    D = _expect(_read(args.file), (doublecat.DoubleCategory, doublecat.AugmentedDoubleCategory), "a dcat/v1 document")
    if args.property == "valid":
        base = D.base if isinstance(D, doublecat.AugmentedDoubleCategory) else D
        return _verdict(args, doublecat.validate_double_category(base))
    return _verdict(args, doublecat.check_double(D, args.property))


def cmd_pcheck(args) -> int:
    Y = _expect(_read(args.file), preaug.PreaugBisimplicialSet, "a paug/v1 document")
    return _verdict(args, preaug.check_preaug(Y, args.property))


def cmd_path(args) -> int:
    X = _expect(_read(args.file), simpset.SimplicialSet, "a tss/v1 document")
    Y = waldhausen.path_construction(X, args.depth)
    _say(args, repr(Y))
    _emit(serialize.to_json(Y))
    return EXIT_OK


def cmd_sdot(args) -> int:
    obj = _read(args.file)
    if isinstance(obj, doublecat.AugmentedDoubleCategory):
        X = waldhausen.sdot_double(obj, args.up_to, node_limit=args.node_limit)
    elif isinstance(obj, preaug.PreaugBisimplicialSet):
        X = waldhausen.sdot_preaug(obj, args.up_to, node_limit=args.node_limit)
    else:
        raise serialize.SchemaError("sdot takes an augmented dcat/v1 or a paug/v1 document")
    _say(args, f"level sizes {X.sizes()}")
    _emit(serialize.to_json(X))
    return EXIT_OK


def cmd_nerve(args) -> int:
    D = _expect(_read(args.file), doublecat.AugmentedDoubleCategory, "an augmented dcat/v1 document")
    Y = waldhausen.augmented_nerve(D, args.depth, check=not args.no_check)
    _say(args, repr(Y))
    _emit(serialize.to_json(Y))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    obj = _read(args.file)
    rep = waldhausen.roundtrip_report(obj, args.up_to)
    _emit(rep.to_json())
    _say(args, f"{rep.kind} bijective: {rep.all_bijective} (theorem expected: {rep.theorem_expected})")
    return EXIT_OK if rep.all_bijective else EXIT_FALSE


def cmd_triangulations(args) -> int:
    found = polygon.enumerate_triangulations(args.n)
    _say(args, f"{len(found)} triangulations of the {args.n + 1}-gon")
    _emit([T.to_json() for T in found])
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdot-lab", description="Finite S•-construction toolkit.")
    p.add_argument("--verbose", "-v", action="store_true", help="human summary on stderr")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="emit a generated object")
    g.add_argument("--kind", required=True, choices=[
        "W", "H", "V", "box", "sigma", "point", "simplex", "spine", "boundary",
        "delta-p", "order", "group", "square", "random-poset",
    ])
    g.add_argument("--format", choices=["dcat", "paug"], help="for W/H/V: double category or presheaf")
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--q", type=int, default=1)
    g.add_argument("--r", type=int, default=1)
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--order", type=int, default=2, help="group order for --kind group")
    g.add_argument("--diagonal", type=int, nargs=2, action="append", metavar=("A", "B"))
    g.add_argument("--size", type=int, default=4)
    g.add_argument("--density", type=float, default=0.4)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="simplicial property check")
    c.add_argument("--property", required=True, choices=segal_check.SIMPLICIAL_PROPERTIES)
    c.add_argument("--up-to", type=int, default=None)
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("dcheck", help="double category check")
    d.add_argument("--property", required=True, choices=["valid", "stable", "augmented"])
    d.add_argument("file")
    d.set_defaults(func=cmd_dcheck)

    pc = sub.add_parser("pcheck", help="preaugmented bisimplicial set check")
    pc.add_argument("--property", required=True, choices=preaug.PREAUG_PROPERTIES)
    pc.add_argument("file")
    pc.set_defaults(func=cmd_pcheck)

    pa = sub.add_parser("path", help="path construction of a simplicial set")
    pa.add_argument("--depth", type=int, default=None)
    pa.add_argument("file")
    pa.set_defaults(func=cmd_path)

    s = sub.add_parser("sdot", help="S• of an augmented double category or presheaf")
    s.add_argument("--up-to", type=int, required=True)
    s.add_argument("--node-limit", type=int, default=2_000_000)
    s.add_argument("file")
    s.set_defaults(func=cmd_sdot)

    n = sub.add_parser("nerve", help="augmented double nerve")
    n.add_argument("--depth", type=int, default=2)
    n.add_argument("--no-check", action="store_true", help="skip the stable/augmented precondition")
    n.add_argument("file")
    n.set_defaults(func=cmd_nerve)

    r = sub.add_parser("roundtrip", help="unit or counit bijectivity report")
    r.add_argument("--up-to", type=int, default=2)
    r.add_argument("file")
    r.set_defaults(func=cmd_roundtrip)

    t = sub.add_parser("triangulations", help="list triangulations of the (n+1)-gon")
    t.add_argument("--n", type=int, required=True)
    t.set_defaults(func=cmd_triangulations)
    return p


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
