"""Command-line front door.

Subcommands: construct, analyze, autgroup, cosetgraph, verify.  Exit codes:
0 on success, 1 on usage or input errors, 2 on a falsification finding (a
classification contradiction or a failed verification item).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .autgroup import automorphism_group
from .cosets import bipartite_coset, sabidussi
from .errors import FalsificationError, GraphFormatError, StartransError
from .graphs import parse_graph, serialize_graph
from .localsym import analyze
from .perms import Permutation, parse_generators, serialize_generators
from .suites import run_suite

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALSIFICATION = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INPUT)


_FAMILIES = {
    "cycle": (families.cycle, 1),
    "path": (families.path, 1),
    "complete": (families.complete_graph, 1),
    "complete-bipartite": (families.complete_bipartite, 2),
    "spider": (families.spider, 1),
    "odd": (families.odd_graph, 1),
    "johnson": (families.johnson_incidence, 2),
    "hamming": (families.hamming_clique_incidence, 2),
    "pg": (families.pg_incidence, 1),
    "hermitian-gq": (families.hermitian_gq, 0),
    "gf3-translate": (families.gf3_translate_graph, 1),
    "pair-coset": (families.s_squared_example, 1),
}


def _build_parser():
    top = _Parser(prog="startrans", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named family instance")
    c.add_argument("family", choices=sorted(_FAMILIES))
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--group-out", help="also write attached generators here")
    c.add_argument("--max-vertices", type=int, default=5000)

    a = sub.add_parser("analyze", help="symmetry analysis of a graph file")
    a.add_argument("graph")
    a.add_argument("--group", help="generator file; omitted = full automorphism group")
    a.add_argument("--report", choices=["text", "json"], default="text")
    a.add_argument("--max-vertices", type=int, default=5000)
    a.add_argument("--max-s", type=int, default=9)
    a.add_argument("--seed", type=int, default=None, help="reserved; no effect")

    g = sub.add_parser("autgroup", help="full automorphism group of a graph file")
    g.add_argument("graph")
    g.add_argument("--max-vertices", type=int, default=2000)

    k = sub.add_parser("cosetgraph", help="coset graph constructions")
    ksub = k.add_subparsers(dest="kind", required=True)
    ks = ksub.add_parser("sabidussi")
    ks.add_argument("group_file")
    ks.add_argument("subgroup_file")
    ks.add_argument("--element", required=True, help="flip element as images, e.g. '0 2 1'")
    ks.add_argument("-o", "--output", required=True)
    ks.add_argument("--group-out")
    kb = ksub.add_parser("bipartite")
    kb.add_argument("group_file")
    kb.add_argument("left_file")
    kb.add_argument("right_file")
    kb.add_argument("-o", "--output", required=True)
    kb.add_argument("--group-out")

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument(
        "suite",
        choices=["small-valency", "vertex-transitive", "vertex-intransitive", "coset", "all"],
    )
    v.add_argument("--report", choices=["text", "json"], default="text")
    return top


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_construct(args):
    builder, arity = _FAMILIES[args.family]
    if len(args.params) != arity:
        print(
            f"error: family {args.family} takes {arity} integer parameter(s)",
            file=sys.stderr,
        )
        return EXIT_INPUT
    kwargs = {}
    if args.family not in ("cycle", "path", "complete", "complete-bipartite", "spider", "hermitian-gq", "pg"):
        kwargs["cap"] = args.max_vertices
    inst = builder(*args.params, **kwargs)
    _write(args.output, serialize_graph(inst.graph))
    if args.group_out:
        if inst.group is None:
            print(
                f"error: family {args.family} attaches no group", file=sys.stderr
            )
            return EXIT_INPUT
        _write(args.group_out, serialize_generators(inst.group))
    print(f"wrote {inst.name}: {inst.graph.n} vertices, {inst.graph.m} edges")
    return EXIT_OK


def _render_text(report):
    d = report.to_dict()
    lines = [
        f"vertices {d['n']}, edges {d['m']}, girth "
        + ("infinite" if d["girth"] is None else str(d["girth"])),
        f"valency profile {d['valency_profile']}"
        + (f", regular of valency {d['regular_valency']}" if d["regular_valency"] else "")
        + (f", bivalency {tuple(d['bivalency'])}" if d["bivalency"] else ""),
        f"group: {d['group']['source']}, order {d['group']['order']}, "
        f"{d['vertex_orbits']} vertex orbit(s)",
        f"star-transitive: {d['star_transitive']}   "
        f"st(edge)-transitive: {d['stedge_transitive']}   (checks: {d['checks']})",
        f"max local s: {d['max_local_s']}"
        + (f", s-transitive: {d['s_transitive']}" if d["s_transitive"] is not None else "")
        + (f" [{d['s_annotation']}]" if d["s_annotation"] else ""),
    ]
    for t in d["towers"]:
        lines.append(
            f"tower at ({t['v']},{t['w']}): |G_v|={t['order_v']}, |G_w|={t['order_w']}, "
            f"|G_vw|={t['order_vw']}, balls(v)={t['ball_orders_v']}, "
            f"balls(w)={t['ball_orders_w']}, |G_vw^[1]|={t['order_vw1']}"
        )
    for la in d["local_actions"]:
        lines.append(
            f"local action at {la['vertex']}: degree {la['degree']}, order "
            f"{la['order']}, {la['kind']}, kernel {la['kernel_order']}"
        )
    lines.append(f"classification: {d['theorem_case']}")
    return "\n".join(lines)


def _cmd_analyze(args):
    g = parse_graph(_read(args.graph))
    if g.n > args.max_vertices:
        print(
            f"error: {g.n} vertices exceeds --max-vertices {args.max_vertices}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    group = parse_generators(_read(args.group)) if args.group else None
    report = analyze(g, group, s_cap=args.max_s)
    if args.report == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(_render_text(report))
    return EXIT_OK


def _cmd_autgroup(args):
    g = parse_graph(_read(args.graph))
    group = automorphism_group(g, cap=args.max_vertices)
    print(f"# order {group.order()}")
    sys.stdout.write(serialize_generators(group))
    return EXIT_OK


def _cmd_cosetgraph(args):
    parent = parse_generators(_read(args.group_file))
    if args.kind == "sabidussi":
        sub = parse_generators(_read(args.subgroup_file))
        flip = Permutation([int(x) for x in args.element.split()])
        inst = sabidussi(parent, sub, flip)
    else:
        left = parse_generators(_read(args.left_file))
        right = parse_generators(_read(args.right_file))
        inst = bipartite_coset(parent, left, right)
    _write(args.output, serialize_graph(inst.graph))
    if args.group_out:
        _write(args.group_out, serialize_generators(inst.group))
    print(f"wrote {inst.name}: {inst.graph.n} vertices, {inst.graph.m} edges")
    return EXIT_OK


def _cmd_verify(args):
    results = run_suite(args.suite)
    if args.report == "json":
        print(
            json.dumps(
                [r.__dict__ for r in results],
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.line())
        failed = sum(1 for r in results if not r.passed)
        print(f"{len(results) - failed}/{len(results)} items passed")
    if any(not r.passed for r in results):
        return EXIT_FALSIFICATION
    return EXIT_OK


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "autgroup":
            return _cmd_autgroup(args)
        if args.command == "cosetgraph":
            return _cmd_cosetgraph(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except FalsificationError as exc:
        print(f"falsification finding: {exc}", file=sys.stderr)
        return EXIT_FALSIFICATION
    except (GraphFormatError, StartransError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
