"""Command-line front end: gen, solve, verify, reduce, and params.

Exit codes: 0 = feasible / value computed, 1 = infeasible decision or
failed verification, 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gadgets, graph_classes, reductions, solvers
from .coloring import Coloring, verify_triangle_free
from .graph import read_dimacs_graph, write_dimacs_graph, write_dot

GEN_FAMILIES = ("cycle-clique", "clover", "polar-gadget", "theorem9", "mycielski", "complete", "cycle")


def _read_input(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(doc: dict):
    sys.stdout.write(json.dumps(doc) + "\n")


def _gen_graph(family, k):
    needs_k = {"cycle-clique", "clover", "mycielski", "complete", "cycle"}
    if family in needs_k and k is None:
        raise ValueError(f"family {family!r} requires --k")
    if family not in needs_k and k is not None:
        raise ValueError(f"family {family!r} does not take --k")
    if family == "cycle-clique":
        return gadgets.gen_cycle_clique(k).graph
    if family == "clover":
        return gadgets.gen_clover(k)
    if family == "polar-gadget":
        return gadgets.gen_polar_gadget().graph
    if family == "theorem9":
        return gadgets.gen_gadget_triangle()
    if family == "mycielski":
        return gadgets.gen_mycielski(k)
    if family == "complete":
        return gadgets.gen_complete(k)
    return gadgets.gen_cycle(k)


def _cmd_gen(args) -> int:
    g = _gen_graph(args.family, args.k)
    sys.stdout.write(write_dot(g) if args.dot else write_dimacs_graph(g))
    return 0


def _load_graph_maybe_polar(args):
    """Graph plus polar edge set; --polar names a polar-instance file
    that supplies both."""
    if getattr(args, "polar", None):
        if args.input not in (None, "-") :
            raise ValueError("give either a graph input or --polar FILE, not both")
        with open(args.polar, "r", encoding="utf-8") as fh:
            inst = reductions.parse_polar_instance(fh.read())
        return inst.graph, inst.polar
    return read_dimacs_graph(_read_input(args.input)), None


def _cmd_solve(args) -> int:
    g, polar = _load_graph_maybe_polar(args)
    jobs = args.jobs or 1

    if args.fpt:
        if args.q is None:
            raise ValueError("--fpt requires --q")
        if polar is not None:
            raise ValueError("--fpt does not take polar constraints")
        witness = solvers.fpt_tf_q_coloring(g, args.q)
        if witness is None:
            _emit({"feasible": False})
            return 1
        _emit({"feasible": True, "coloring": list(witness.colors)})
        return 0

    if args.cls and args.cls != "general":
        if polar is not None:
            raise ValueError("class pipelines do not take polar constraints")
        if args.cls == "chordal":
            k, witness = graph_classes.chordal_chi3(g)
        else:
            k, witness = graph_classes.bounded_chi_chi3(g, graph_classes.ClassHint(args.cls))
        if args.q is not None:
            if args.q < k:
                _emit({"feasible": False})
                return 1
            _emit({"feasible": True, "coloring": list(witness.colors)})
            return 0
        _emit({"chi3": k, "coloring": list(witness.colors)})
        return 0

    if args.q is not None:
        if jobs > 1:
            witness = solvers.decide_tf_q_parallel(g, args.q, polar=polar, jobs=jobs)
        else:
            witness = solvers.decide_tf_q(g, args.q, polar=polar)
        if witness is None:
            _emit({"feasible": False})
            return 1
        _emit({"feasible": True, "coloring": list(witness.colors)})
        return 0

    k, witness = solvers.solve_chi3(g, polar=polar, jobs=jobs)
    _emit({"chi3": k, "coloring": list(witness.colors)})
    return 0


def _coloring_from_doc(doc, n) -> Coloring:
    if "colors" in doc:
        colors = doc["colors"]
    elif "coloring" in doc:
        colors = doc["coloring"]
    else:
        raise ValueError("coloring file needs a 'colors' (or 'coloring') array")
    colors = [int(c) for c in colors]
    if len(colors) != n:
        raise ValueError(f"coloring covers {len(colors)} vertices, graph has {n}")
    k = doc.get("k", doc.get("chi3", max(colors, default=0)))
    return Coloring(int(k), tuple(colors))


def _cmd_verify(args) -> int:
    g, polar = _load_graph_maybe_polar(args)
    with open(args.coloring, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    c = _coloring_from_doc(doc, g.n)
    ok = verify_triangle_free(g, c, polar)
    _emit({"valid": ok})
    return 0 if ok else 1


def _cmd_reduce(args) -> int:
    pairs = {("sat4", "nae4"), ("nae", "k4free"), ("nae4", "polar")}
    if args.to == "q+1":
        if args.q is None:
            raise ValueError("--to q+1 requires --q")
        if args.src is not None:
            raise ValueError("--to q+1 reads a graph; leave --from unset")
        g = read_dimacs_graph(_read_input(args.input))
        out = reductions.reduce_q_to_q1(g, args.q)
        sys.stdout.write(write_dimacs_graph(out.instance))
        return 0
    if args.src is None or (args.src, args.to) not in pairs:
        raise ValueError(f"unsupported reduction {args.src!r} -> {args.to!r}")
    phi = reductions.parse_dimacs_cnf(_read_input(args.input))
    if (args.src, args.to) == ("sat4", "nae4"):
        out = reductions.reduce_sat4_to_nae4(phi)
        sys.stdout.write(reductions.write_dimacs_cnf(out.instance))
    elif (args.src, args.to) == ("nae", "k4free"):
        out = reductions.reduce_nae_to_k4free(phi)
        sys.stdout.write(write_dimacs_graph(out.instance))
    else:
        out = reductions.reduce_nae4_to_polar(phi)
        sys.stdout.write(reductions.write_polar_instance(out.instance))
    return 0


def _cmd_params(args) -> int:
    g = read_dimacs_graph(_read_input(args.input))
    if g.n > args.max_n:
        raise ValueError(f"graph has {g.n} vertices, above the --max-n guard of {args.max_n}")
    params = solvers.compute_params(g)
    doc = {"n": g.n, "m": g.m}
    doc.update(params.to_json_dict())
    _emit(doc)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tfcolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as DIMACS (or DOT)")
    p.add_argument("family", choices=GEN_FAMILIES)
    p.add_argument("--k", type=int, default=None, help="family size parameter")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of DIMACS")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="compute chi3 or decide a fixed budget")
    p.add_argument("input", nargs="?", default="-", help="DIMACS graph file (default stdin)")
    p.add_argument("--q", type=int, default=None, help="decide feasibility at this budget")
    p.add_argument("--polar", default=None, help="polar-instance file (graph + s lines)")
    p.add_argument("--class", dest="cls", default=None, choices=graph_classes.CLASS_TAGS)
    p.add_argument("--fpt", action="store_true", help="use the vertex-cover algorithm (needs --q)")
    p.add_argument("--jobs", type=int, default=1, help="parallel root branching workers")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("input", nargs="?", default="-", help="DIMACS graph file (default stdin)")
    p.add_argument("--coloring", required=True, help="JSON coloring file")
    p.add_argument("--polar", default=None, help="polar-instance file (graph + s lines)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="run an instance transformation")
    p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    p.add_argument("--from", dest="src", default=None, choices=("sat4", "nae", "nae4"))
    p.add_argument("--to", required=True, choices=("nae4", "k4free", "polar", "q+1"))
    p.add_argument("--q", type=int, default=None, help="source budget for --to q+1")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("params", help="print exact structural parameters as JSON")
    p.add_argument("input", nargs="?", default="-", help="DIMACS graph file (default stdin)")
    p.add_argument("--max-n", type=int, default=64, help="refuse graphs above this size")
    p.set_defaults(func=_cmd_params)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
