"""Command line interface: ``cartanqt <command> --type ...``.

Exit status is 0 on success, 1 when a verification finds a failure and 2
for bad arguments.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import braid, export, invariants as inv, rmatrix as rm, verify, weyl
from .cartan import all_types, build, parse_type
from .deform import build_cqt, default_order, invert


class UsageError(Exception):
    pass


def _cd(args):
    try:
        return build(parse_type(args.type, args.rank))
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _node(cd, i, name):
    if not 1 <= i <= cd.n:
        raise UsageError(f"--{name} {i} is not a node of {cd.type} (1..{cd.n})")
    return i


def _fmt(args) -> str:
    return "json" if getattr(args, "json", False) else args.format


def _order(args, cd) -> int:
    return args.order if args.order is not None else default_order(cd)


def cmd_cartan(args):
    cd = _cd(args)
    nu = weyl.star(cd)
    if _fmt(args) == "json":
        print(export.dumps({
            "type": str(cd.type), "c": cd.c.tolist(), "d": list(cd.d),
            "r": cd.r, "h": cd.h, "hv": cd.hv, "star": {str(k): v for k, v in nu.items()},
        }))
        return 0
    print(f"type {cd.type}")
    for row in cd.c.tolist():
        print(" ".join(f"{x:3d}" for x in row))
    print(f"d = {cd.d}  r = {cd.r}  h = {cd.h}  h_dual = {cd.hv}")
    print("star: " + " ".join(f"{i}->{nu[i]}" for i in cd.nodes))
    return 0


def cmd_ctilde(args):
    cd = _cd(args)
    N = _order(args, cd)
    if N < 0:
        raise UsageError("--order must be nonnegative")
    if args.via == "braid":
        tab = braid.ctilde_table_braid(build_cqt(cd), N)
    else:
        tab = invert(cd, N)
    fmt = _fmt(args)
    if fmt == "json":
        print(export.ctilde_to_json(tab, args.t1))
    elif fmt == "csv":
        sys.stdout.write(export.ctilde_to_csv(tab, args.t1))
    else:
        for i in cd.nodes:
            for j in cd.nodes:
                p = tab.entry_q(i, j) if args.t1 else tab.entry(i, j)
                print(f"C~[{i},{j}] = {p}")
    return 0


def _poly_out(args, payload, poly):
    if _fmt(args) == "json":
        payload["terms"] = export.poly_to_json(poly)
        payload["text"] = str(poly)
        print(export.dumps(payload))
    else:
        print(poly)


def cmd_ibar(args):
    cd = _cd(args)
    i, j = _node(cd, args.i, "i"), _node(cd, args.j, "j")
    p = inv.ibar_dim(invert(cd), i, j).value
    if args.t1:
        p = p.spec_t1()
    return _poly_out(args, {"type": str(cd.type), "i": i, "j": j, "t1": args.t1}, p) or 0


def cmd_kernel(args):
    cd = _cd(args)
    i, j = _node(cd, args.i, "i"), _node(cd, args.j, "j")
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    p = inv.kernel_dim(invert(cd), i, args.k, j).value
    return _poly_out(args, {"type": str(cd.type), "i": i, "k": args.k, "j": j}, p) or 0


def cmd_ext1(args):
    cd = _cd(args)
    i, j = _node(cd, args.i, "i"), _node(cd, args.j, "j")
    if args.k < 1 or args.l < 1:
        raise UsageError("levels must be at least 1")
    p = inv.ext1_dim(invert(cd), i, args.k, j, args.l).value
    payload = {"type": str(cd.type), "i": i, "k": args.k, "j": j, "l": args.l,
               "club": inv.is_clubsuit(cd, i, args.k, j, args.l)}
    return _poly_out(args, payload, p) or 0


def cmd_divisor(args):
    cd = _cd(args)
    i, j = _node(cd, args.i, "i"), _node(cd, args.j, "j")
    if args.k < 1 or args.l < 1:
        raise UsageError("levels must be at least 1")
    a, b = rm.KRLabel(i, args.k, args.p), rm.KRLabel(j, args.l, args.s)
    tab = invert(cd)
    d = rm.divisor_kr(tab, a, b)
    status = rm.divisor_status(cd, a, b)
    order = rm.pole_order(tab, a, b)
    if _fmt(args) == "json":
        print(export.dumps({
            "type": str(cd.type), "a": a._asdict(), "b": b._asdict(),
            "divisor": export.divisor_to_json(d), "status": status, "pole_order": order,
        }))
    else:
        note = "  (conjectural)" if status == "conjectural" else ""
        print(f"{d}{note}")
        print(f"pole order at z=1: {order}")
    return 0


def cmd_weyl(args):
    cd = _cd(args)
    w = weyl.longest_word(cd)
    if _fmt(args) == "json":
        print(export.dumps({"type": str(cd.type), "word": list(w), "length": len(w)}))
    else:
        print(" ".join(map(str, w)))
        print(f"length {len(w)}")
    return 0


def cmd_verify(args):
    if args.type == "all":
        types = all_types(args.max_rank)
    else:
        types = [_cd(args).type]
    sections = None if args.section == "all" else [args.section]
    t0 = time.perf_counter()
    rep = verify.run(types, sections, args.order, args.max_level)
    dt = time.perf_counter() - t0
    print(export.dumps({"checks": rep.checks, "failures": rep.failures}))
    if args.verbose:
        print(f"{len(types)} types, {rep.conjectural} conjectural pairs skipped, {dt:.2f}s", file=sys.stderr)
    if rep.failures:
        print(f"verification failed: {len(rep.failures)} failure(s)", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Cartan type, e.g. C3, G2 or C with --rank")
    common.add_argument("--rank", type=int, default=None)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--order", type=int, default=None,
                        help="q-truncation order (default 2 r h_dual + 2 or $CARTANQT_ORDER)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="cartanqt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cartan", parents=[common], help="Cartan matrix and numerical data")
    s.set_defaults(func=cmd_cartan)

    s = sub.add_parser("ctilde", parents=[common], help="coefficients of the inverse C~(q,t)")
    s.add_argument("--t1", action="store_true", help="specialize t = 1")
    s.add_argument("--via", choices=("series", "braid"), default="series")
    s.set_defaults(func=cmd_ctilde)

    s = sub.add_parser("ibar", parents=[common], help="dim_{q,t} e_i I_j")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--t1", action="store_true")
    s.set_defaults(func=cmd_ibar)

    s = sub.add_parser("kernel-dim", parents=[common], help="dim_q e_j K^(i)_k")
    for name in ("i", "k", "j"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("ext1", parents=[common], help="dim_q ext^1(K^(i)_k, K^(j)_l)")
    for name in ("i", "k", "j", "l"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.set_defaults(func=cmd_ext1)

    s = sub.add_parser("divisor", parents=[common], help="R-matrix denominator divisor")
    for name in ("i", "k", "j", "l"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--p", type=int, default=0, help="spectral shift exponent of the first module")
    s.add_argument("--s", type=int, default=0, help="spectral shift exponent of the second module")
    s.set_defaults(func=cmd_divisor)

    s = sub.add_parser("weyl", parents=[common], help="Weyl group data")
    s.add_argument("what", choices=("w0",))
    s.set_defaults(func=cmd_weyl)

    s = sub.add_parser("verify", parents=[common], help="run the identity sweep")
    s.add_argument("section", nargs="?", default="all", choices=("all", *verify.SECTIONS))
    s.add_argument("--max-rank", type=int, default=8)
    s.add_argument("--max-level", type=int, default=4)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cartanqt: error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
