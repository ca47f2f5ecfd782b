"""Command-line interface: ``acta monoid|act|construct|verify``.

Exit codes: 0 success, 1 a verification counterexample was found, 2 bad
input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .act import cofree_act
from .decomposition import components, shortest_scheme
from .errors import ActaError
from .monoid import enumerate_monoids, left_zero_adjoined, standard_monoid
from .verify import SUITES, Bounds, analyze_monoid, construct_An, verify_theorem

SUITE_CHOICES = ["all", *SUITES]


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    if isinstance(obj, dict):
        return io.format_json(obj) + "\n"
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_monoid_analyze(args):
    m = io.read_monoid(args.file)
    info = analyze_monoid(m)
    if args.json:
        _emit(_json({"monoid": io.monoid_to_json(m), "analysis": info.to_json()}), None)
        return 0
    name = lambda idx: "{" + ", ".join(m.names[i] for i in idx) + "}"
    print(f"order               {m.order}")
    print(f"left reversible     {info.left_reversible}")
    print(f"right reversible    {info.right_reversible}")
    print(f"right collapsible   {info.right_collapsible}")
    print(f"left zeros          {name(info.left_zeros)}")
    print(f"right zeros         {name(info.right_zeros)}")
    print(f"S x S indecomposable        {info.s2_indecomposable}")
    print(f"left S x S indecomposable   {info.left_s2_indecomposable}")
    f = info.flatness
    print(f"Theta finitely product flat {f.finitely_product_flat}")
    print(f"Theta product flat          {f.product_flat}")
    print(f"Theta super flat            {f.super_flat}")
    return 0


def cmd_monoid_enumerate(args):
    monoids = list(enumerate_monoids(args.order, args.up_to_iso, args.allow_order_5))
    if args.format == "text":
        text = "".join(io.monoid_to_text(m) for m in monoids)
    else:
        text = "[\n" + ",\n".join(io.format_json(io.monoid_to_json(m)) for m in monoids) + "\n]\n"
    _emit(text, args.out)
    if args.out:
        print(f"{len(monoids)} monoids written to {args.out}", file=sys.stderr)
    return 0


def _load_act(args):
    m = io.read_monoid(args.monoid)
    return io.read_act(args.act, monoid=m)


def cmd_act_components(args):
    a = _load_act(args)
    dec = components(a)
    if args.json:
        _emit(_json({"count": dec.count, "components": dec.blocks}), None)
    else:
        print(f"{dec.count} component(s)")
        for block in dec.blocks:
            print("  " + " ".join(a.names[x] for x in block))
    return 0


def cmd_act_scheme(args):
    a = _load_act(args)
    sch = shortest_scheme(a, args.source, args.target)
    if sch is None:
        _emit(_json({"from": args.source, "to": args.target, "connected": False}), None)
    else:
        _emit(_json(io.scheme_to_json(sch)), None)
    return 0


def cmd_construct(args):
    kind = args.kind
    if kind in ("tn", "lz1", "rz1"):
        if args.param is None:
            raise ActaError(f"construct {kind} needs a parameter")
        family = {"tn": "full_transformation", "lz1": "left_zero_adjoined", "rz1": "right_zero_adjoined"}[kind]
        _emit(io.dump_monoid(standard_monoid(family, args.param), args.format), args.out)
        return 0
    if kind == "an":
        if args.param is None:
            raise ActaError("construct an needs N")
        m = io.read_monoid(args.monoid) if args.monoid else left_zero_adjoined(2)
        act = construct_An(args.param, m, args.a, args.b)
    else:
        if not args.monoid or args.letters is None:
            raise ActaError("construct cofree needs --monoid and --letters")
        act = cofree_act(io.read_monoid(args.monoid), args.letters)
    _emit(io.dump_act(act), args.out)
    return 0


def cmd_verify(args):
    bounds = Bounds(args.max_order, args.max_act_size, args.samples, args.seed, args.allow_order_5)
    report = verify_theorem(args.suite, bounds)
    if args.json:
        _emit(_json(report.to_json()), args.out)
    else:
        print(f"suite {report.suite}: {report.status}  ({report.checks_run} checks, "
              f"{report.monoids_checked} monoids, {report.elapsed_ms} ms, seed {report.seed})")
        for c in report.counterexamples:
            print(f"  counterexample [{c['check']}] table={c['monoid']['table']} detail={c['detail']}")
        if args.out:
            Path(args.out).write_text(_json(report.to_json()))
    return 1 if report.status == "FAIL" else 0


def build_parser():
    p = argparse.ArgumentParser(prog="acta", description="Finite monoids, acts and their decompositions.")
    sub = p.add_subparsers(dest="command", required=True)

    mon = sub.add_parser("monoid").add_subparsers(dest="action", required=True)
    a = mon.add_parser("analyze", help="monoid-level predicates and flatness verdict")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_monoid_analyze)
    e = mon.add_parser("enumerate", help="all monoids of an order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--allow-order-5", action="store_true")
    e.add_argument("--format", choices=["json", "text"], default="json")
    e.add_argument("--out")
    e.set_defaults(func=cmd_monoid_enumerate)

    act = sub.add_parser("act").add_subparsers(dest="action", required=True)
    c = act.add_parser("components", help="indecomposable components")
    c.add_argument("--monoid", required=True)
    c.add_argument("--act", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_act_components)
    s = act.add_parser("scheme", help="a shortest connecting scheme")
    s.add_argument("--monoid", required=True)
    s.add_argument("--act", required=True)
    s.add_argument("--from", dest="source", type=int, required=True)
    s.add_argument("--to", dest="target", type=int, required=True)
    s.set_defaults(func=cmd_act_scheme)

    k = sub.add_parser("construct", help="standard monoids and acts")
    k.add_argument("kind", choices=["tn", "lz1", "rz1", "an", "cofree"])
    k.add_argument("param", type=int, nargs="?")
    k.add_argument("--monoid")
    k.add_argument("--letters", type=int)
    k.add_argument("--a", type=int, help="first generator for an (default: first disjoint pair)")
    k.add_argument("--b", type=int)
    k.add_argument("--format", choices=["json", "text"], default="json")
    k.add_argument("--out")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a theorem suite over the census")
    v.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    v.add_argument("--max-order", type=int, required=True)
    v.add_argument("--max-act-size", type=int, default=3)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--allow-order-5", action="store_true")
    v.add_argument("--json", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ActaError, OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        print(f"acta: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
