"""Command line front end.

Exit codes: 0 on success (negative answers included), 2 on malformed input or
an invalid path, 1 when an internal check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import a2cb, smt
from .acceptance import CRITERIA, format_line, run_all
from .lspath import (
    NotLSPath, apply_lowering, demazure_subset, enumerate_B, path_character, path_from_dict,
    path_weight, root_op_e, root_op_f, string,
)
from .rootsys import DEFAULT_CAP, RootSystem, format_weight, parse_weight, parse_word


class UsageError(ValueError):
    pass


def _root_system(args) -> RootSystem:
    spec = args.type.strip()
    if spec.startswith("["):
        return RootSystem(json.loads(spec), cap=args.cap)
    return RootSystem.from_name(spec, cap=args.cap)


def _weight(rs, args, required=True):
    if args.weight is None:
        if required:
            raise UsageError("--weight is required")
        return None
    lam = parse_weight(args.weight)
    rs.check_weight(lam)
    return lam


def _path(rs, args, lam=None):
    if not args.path:
        raise UsageError("--path is required")
    data = json.loads(args.path)
    return path_from_dict(rs, data, lam if lam is not None else _weight(rs, args, required=False))


def _tuple(rs, args):
    if not args.tuple:
        raise UsageError("--tuple is required")
    data = json.loads(args.tuple)
    if not isinstance(data, list):
        raise UsageError("--tuple must be a JSON array of path objects")
    return tuple(path_from_dict(rs, item) for item in data)


def _ints(text):
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _emit(args, payload, text=None):
    if args.json or text is None:
        print(json.dumps(payload))
    else:
        print(text)


def _char_table(char):
    return "\n".join("%-14s %d" % (format_weight(mu), n) for mu, n in char.items())


# -- paths ---------------------------------------------------------------------

def cmd_paths(args) -> int:
    rs = _root_system(args)
    if args.action == "enum":
        lam = _weight(rs, args)
        paths = enumerate_B(rs, lam)
        if args.tau is not None:
            paths = demazure_subset(rs, lam, rs.element(parse_word(args.tau)))
        _emit(args, [p.to_dict() for p in paths], "\n".join(str(p) for p in paths))
        return 0
    if args.action == "validate":
        try:
            p = _path(rs, args)
        except NotLSPath as exc:
            print("invalid: segment %d: %s" % (exc.segment, exc), file=sys.stderr)
            return 2
        _emit(args, {"valid": True, "path": p.to_dict()}, "valid %s" % p)
        return 0
    p = _path(rs, args)
    if args.action == "weight":
        wt = path_weight(rs, p)
        _emit(args, list(wt), format_weight(wt))
    elif args.action == "rootop":
        if args.ops is not None:
            out = apply_lowering(rs, p, _ints(args.ops))
        else:
            if args.index is None:
                raise UsageError("rootop needs --index (with --op) or --ops")
            op = root_op_f if args.op == "f" else root_op_e
            out = op(rs, p, args.index)
        _emit(args, None if out is None else out.to_dict(), "none" if out is None else str(out))
    elif args.action == "string":
        if not args.directions:
            raise UsageError("--directions is required")
        ns = string(rs, p, _ints(args.directions))
        _emit(args, ns, ",".join(map(str, ns)))
    return 0


# -- characters ------------------------------------------------------------------

def cmd_char(args) -> int:
    rs = _root_system(args)
    lam = _weight(rs, args)
    if args.action == "compare":
        paths = path_character(rs, enumerate_B(rs, lam))
        oracle = rs.freudenthal_character(lam)
    else:
        tau = rs.element(parse_word(args.tau or ""))
        paths = path_character(rs, demazure_subset(rs, lam, tau))
        oracle = rs.demazure_character(lam, tau)
    match = paths == oracle
    verdict = "MATCH" if match else "MISMATCH"
    payload = {
        "verdict": verdict,
        "dimension": sum(paths.values()),
        "weights": len(paths),
        "paths": [[list(mu), n] for mu, n in paths.items()],
        "oracle": [[list(mu), n] for mu, n in oracle.items()],
    }
    text = "paths:\n%s\noracle:\n%s\n%s, dimension %d, %d weights" % (
        _char_table(paths), _char_table(oracle), verdict, payload["dimension"], len(paths))
    _emit(args, payload, text)
    return 0 if match else 1


# -- standard monomials --------------------------------------------------------

def _shapes(rs, text):
    if not text:
        raise UsageError("--shapes is required")
    shapes = [parse_weight(part) for part in text.split(":")]
    for lam in shapes:
        rs.require_dominant(lam)
    return shapes


def cmd_smt(args) -> int:
    rs = _root_system(args)
    if args.action == "count":
        n = smt.count_standard(rs, _shapes(rs, args.shapes))
        _emit(args, n, str(n))
        return 0
    if args.action in ("standard", "chain"):
        t = _tuple(rs, args)
        chain = smt.find_defining_chain(rs, t)
        if args.action == "standard":
            _emit(args, chain is not None, "true" if chain else "false")
        else:
            words = None if chain is None else chain.words()
            _emit(args, words, "none" if words is None else " ".join(w or "id" for w in words))
        return 0
    # compatible
    obj = _tuple(rs, args) if args.tuple else _path(rs, args)
    if args.word is not None:
        word = smt.check_w0_word(rs, parse_word(args.word))
        if isinstance(obj, tuple):
            ok = smt.compatible_tuple_chain(rs, obj, word) is not None
        else:
            ok = smt.is_compatible_path(rs, obj, word)
        _emit(args, ok, "true" if ok else "false")
        return 0
    cert = smt.compatibility_certificate(rs, obj)
    _emit(args, cert, "none" if cert is None else json.dumps(cert))
    return 0


# -- A2 -----------------------------------------------------------------------

def cmd_a2(args) -> int:
    rs = _root_system(args)
    a2cb.require_a2(rs)
    if args.action == "pathvector":
        lam = (args.m, args.m) if args.m is not None else None
        p = _path(rs, args, lam)
        v = a2cb.path_vector(rs, p)
        _emit(args, v.to_dict(), str(v))
        return 0
    if args.action == "transition":
        if args.m is None or args.m < 1:
            raise UsageError("--m must be a positive integer")
        rows = a2cb.transition_matrix(rs, args.m)
        _emit(args, [r.to_dict() for r in rows], a2cb.format_transition_table(rows, args.m))
        return 0
    # example11
    if None in (args.l, args.m, args.n):
        raise UsageError("example11 needs --l, --m and --n")
    shapes, paths, product = a2cb.example11_standard_monomial(rs, args.l, args.m, args.n)
    payload = {"shapes": [list(s) for s in shapes], "tuple": [p.to_dict() for p in paths],
               "product": str(product)}
    text = "shape %s\ntuple %s\nproduct %s" % (
        " ".join(format_weight(s) for s in shapes), " ".join(str(p) for p in paths), product)
    _emit(args, payload, text)
    return 0


# -- acceptance sweep -----------------------------------------------------------

def _run_one(number):
    return next(run_all({number}))


def cmd_sweep(args) -> int:
    numbers = [n for n, _, _ in CRITERIA]
    if args.parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_one, numbers))
    else:
        results = list(run_all())
    for r in results:
        print(format_line(*r))
    passed = sum(1 for r in results if r[2])
    print("%d/%d criteria passed" % (passed, len(results)))
    return 0 if passed == len(results) else 1


# -- parser ---------------------------------------------------------------------

def _common(p, weight=True):
    p.add_argument("--type", default="A2", help="Cartan type name (A2, B2, G2, ...) or JSON matrix")
    if weight:
        p.add_argument("--weight", help="dominant weight, comma separated")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathsmt", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="Weyl group size limit")
    parser.add_argument("--parallel", action="store_true", help="run independent work concurrently")
    parser.add_argument("--seed-sweep", action="store_true", help="run the acceptance sweep")
    sub = parser.add_subparsers(dest="group")

    paths = sub.add_parser("paths", help="LS paths and root operators")
    paths.add_argument("action", choices=["enum", "weight", "validate", "rootop", "string"])
    _common(paths)
    paths.add_argument("--path", help='JSON path, e.g. {"chain":["21","1"],"a":["1/2"]}')
    paths.add_argument("--tau", help="restrict enum to a Demazure crystal")
    paths.add_argument("--op", choices=["f", "e"], default="f")
    paths.add_argument("--index", type=int)
    paths.add_argument("--ops", help="lowering word, e.g. 1,1,2,2 (rightmost applied first)")
    paths.add_argument("--directions", help="string directions, e.g. 2,1,2")
    paths.set_defaults(func=cmd_paths)

    char = sub.add_parser("char", help="compare path characters with the oracles")
    char.add_argument("action", choices=["compare", "demazure"])
    _common(char)
    char.add_argument("--tau", help="Weyl word for the Demazure module")
    char.set_defaults(func=cmd_char)

    st = sub.add_parser("smt", help="standard tuples and compatibility")
    st.add_argument("action", choices=["count", "standard", "chain", "compatible"])
    _common(st)
    st.add_argument("--shapes", help="shape vector, e.g. 1,0:0,1")
    st.add_argument("--path", help="JSON path object")
    st.add_argument("--tuple", help="JSON array of path objects, each with \"lambda\"")
    st.add_argument("--word", help="test one reduced word of w0 instead of searching")
    st.set_defaults(func=cmd_smt)

    a2 = sub.add_parser("a2", help="A2 dual canonical basis computations")
    a2.add_argument("action", choices=["pathvector", "transition", "example11"])
    _common(a2)
    a2.add_argument("--path", help="JSON path object")
    a2.add_argument("--m", type=int)
    a2.add_argument("--l", type=int)
    a2.add_argument("--n", type=int)
    a2.set_defaults(func=cmd_a2)

    sw = sub.add_parser("sweep", help="run every acceptance check")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.seed_sweep:
        return cmd_sweep(args)
    if not args.group:
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (NotLSPath, ValueError, KeyError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:
        print("internal error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
