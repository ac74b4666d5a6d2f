"""Command-line interface.

    densesol zm-info M N R [--format text|json]
    densesol lattice SPEC [--format text|json|dot]
    densesol density SPEC [--format text|json]
    densesol verify [--max-order N] [--format text|json]

SPEC is one of ``zm:m,n,r``, ``cyclic:n``, ``dihedral:n`` (order 2n) or
``quaternion:k`` (order 2^k).  Exit codes: 0 success / property true,
1 property false, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import named_examples, verify_theorem
from .density import has_dense_solitary
from .errors import GroupError, InvalidZmTriple
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, Subgroup, center, make_cyclic,
                     make_dihedral, make_generalized_quaternion)
from .lattice import all_subgroups, is_normal
from .solitary import solitary_subgroups
from .zm import validate_zm_triple, zm_group

SCHEMA = 1
EXIT_OK, EXIT_FALSE, EXIT_INVALID = 0, 1, 2


class UsageError(GroupError):
    pass


def parse_group_spec(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    kind, _, args = spec.partition(":")
    try:
        values = [int(v) for v in args.split(",")] if args else []
    except ValueError:
        raise UsageError(f"bad group spec {spec!r}: arguments must be integers") from None
    builders = {
        "zm": (3, lambda m, n, r: zm_group(validate_zm_triple(m, n, r), cap)),
        "cyclic": (1, lambda n: make_cyclic(n, cap)),
        "dihedral": (1, lambda n: make_dihedral(n, cap)),
        "quaternion": (1, lambda k: make_generalized_quaternion(k, cap)),
    }
    if kind not in builders:
        raise UsageError(f"unknown group kind {kind!r}; use zm, cyclic, dihedral or quaternion")
    arity, build = builders[kind]
    if len(values) != arity:
        raise UsageError(f"{kind} takes {arity} integer argument(s)")
    return build(*values)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _sub_json(H: Subgroup) -> dict:
    return {"order": H.order, "members": H.members.tolist()}


# renderers ---------------------------------------------------------------

def zm_info(m: int, n: int, r: int, cap: int) -> dict:
    p = validate_zm_triple(m, n, r)
    G = zm_group(p, cap)
    return {
        "schema": SCHEMA, "valid": True, "m": m, "n": n, "r": r, "d": p.d,
        "order": G.order, "center": center(G).order,
        "subgroups": len(all_subgroups(G)), "solitary": len(solitary_subgroups(G)),
    }


def lattice_json(G: FiniteGroup) -> dict:
    lat = all_subgroups(G)
    sol = {H.mask for H in solitary_subgroups(G)}
    nodes = [{"id": i, **_sub_json(H), "solitary": H.mask in sol, "normal": is_normal(G, H)}
             for i, H in enumerate(lat.nodes)]
    return {"schema": SCHEMA, "group": G.label, "order": G.order, "nodes": nodes,
            "covers": [{"from": i, "to": j} for i, j in lat.covers]}


def lattice_dot(G: FiniteGroup) -> str:
    """Hasse diagram, one rank per subgroup order, solitary nodes filled."""
    data = lattice_json(G)
    lines = [f'digraph "{G.label}" {{', "  rankdir=BT;", "  node [shape=ellipse];"]
    for node in data["nodes"]:
        style = ', style=filled, fillcolor="lightblue", peripheries=2' if node["solitary"] else ""
        lines.append(f'  n{node["id"]} [label="{node["id"]}: |H|={node["order"]}"{style}];')
    for k in sorted({node["order"] for node in data["nodes"]}):
        same = " ".join(f'n{node["id"]};' for node in data["nodes"] if node["order"] == k)
        lines.append(f"  {{ rank=same; {same} }}")
    for edge in data["covers"]:
        lines.append(f'  n{edge["from"]} -> n{edge["to"]};')
    lines.append("}")
    return "\n".join(lines)


def lattice_text(G: FiniteGroup) -> str:
    data = lattice_json(G)
    above = {node["id"]: [] for node in data["nodes"]}
    for edge in data["covers"]:
        above[edge["from"]].append(edge["to"])
    out = [f"{G.label}: order {G.order}, {len(data['nodes'])} subgroups",
           f"{'id':>4} {'order':>6}  sol  nrm  covered by"]
    for node in data["nodes"]:
        out.append(f"{node['id']:>4} {node['order']:>6}  {'yes' if node['solitary'] else ' - '}"
                   f"  {'yes' if node['normal'] else ' - '}  {above[node['id']]}")
    return "\n".join(out)


def density_json(G: FiniteGroup) -> dict:
    rep = has_dense_solitary(G)
    cx = None
    if rep.counterexample is not None:
        H, K = rep.counterexample
        cx = {"H": _sub_json(H), "K": _sub_json(K)}
    return {"schema": SCHEMA, "group": G.label, "order": G.order, "verdict": rep.verdict,
            "checked_pairs": rep.checked_pairs, "subgroups": rep.subgroups,
            "solitary": rep.solitary, "counterexample": cx}


# commands ----------------------------------------------------------------

def cmd_zm_info(args) -> int:
    try:
        info = zm_info(args.m, args.n, args.r, args.cap)
    except InvalidZmTriple as exc:
        _emit(args, {"schema": SCHEMA, "valid": False, "reason": exc.reason, "message": str(exc)},
              f"invalid: {exc}")
        return EXIT_INVALID
    text = (f"ZM({args.m},{args.n},{args.r}): valid, d = {info['d']}, order {info['order']}, "
            f"center order {info['center']}, {info['subgroups']} subgroups, "
            f"{info['solitary']} solitary")
    _emit(args, info, text)
    return EXIT_OK


def cmd_lattice(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    if args.format == "dot":
        print(lattice_dot(G))
    elif args.format == "json":
        print(dumps(lattice_json(G)))
    else:
        print(lattice_text(G))
    return EXIT_OK


def cmd_density(args) -> int:
    G = parse_group_spec(args.spec, args.cap)
    data = density_json(G)
    text = f"{G.label}: dense solitary subgroups: {str(data['verdict']).lower()}"
    if data["counterexample"]:
        H, K = data["counterexample"]["H"], data["counterexample"]["K"]
        text += (f"\n  no solitary subgroup strictly between H = {H['members']} (order {H['order']})"
                 f" and K = {K['members']} (order {K['order']})")
    _emit(args, data, text)
    return EXIT_OK if data["verdict"] else EXIT_FALSE


def cmd_verify(args) -> int:
    report = verify_theorem(args.max_order, cap=args.cap)
    data = {"schema": SCHEMA, **report.to_dict(), "named_examples": named_examples(args.cap)}
    text = [f"max order {report.max_order}: {report.triples} ZM triples, "
            f"{report.cyclic_checked} cyclic groups, {report.corpus_checked} corpus groups",
            f"agreements {report.agreements}, disagreements {len(report.disagreements)}",
            f"beta=0 witnesses {len(report.witnesses['beta0'])}, "
            f"beta=1 witnesses {len(report.witnesses['beta1'])}",
            f"{report.seconds:.1f} s"]
    for d in report.disagreements:
        text.append(f"  DISAGREE {d['group']}: predicted {d['predicted']}, "
                    f"brute force {d['brute_force']}")
    for row in data["named_examples"]:
        if row["valid"]:
            text.append(f"  ZM{tuple(row['triple'])} ({row['note']}): predicted "
                        f"{row['predicted']}, brute force {row['brute_force']}")
        else:
            text.append(f"  ZM{tuple(row['triple'])} ({row['note']}): invalid, {row['message']}")
    _emit(args, data, "\n".join(text))
    return EXIT_OK if report.ok else EXIT_FALSE


def _emit(args, data: dict, text: str):
    print(dumps(data) if args.format == "json" else text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                        help="largest group order to build (default %(default)s)")
    parser = argparse.ArgumentParser(prog="densesol",
                                     description="Subgroup lattices, solitary subgroups and "
                                                 "the dense solitary subgroups property.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zm-info", parents=[common], help="validate a ZM triple and summarize it")
    for name in ("m", "n", "r"):
        p.add_argument(name, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_zm_info)

    p = sub.add_parser("lattice", parents=[common], help="print a subgroup lattice")
    p.add_argument("spec")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("density", parents=[common], help="decide dense solitary subgroups")
    p.add_argument("spec")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", parents=[common],
                       help="compare the classification with brute force")
    p.add_argument("--max-order", type=int, default=100)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GroupError as exc:
        if getattr(args, "format", "text") == "json":
            print(dumps({"schema": SCHEMA, "error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
