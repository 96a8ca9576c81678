"""Command line: ``pytharr build|semilattice|genericity|flats|transport|plot FILE``.

Exit status is 0 on success, 1 on a domain error and 2 on a parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import instance as io
from .arrangement import intersection_semilattice
from .errors import ParseError, PytharrError
from .export import (
    circuit_set_label,
    edge_set_label,
    flat_reports,
    flats_dot,
    hyperplane_lines,
    semilattice_dot,
    svg_plot,
)
from .exactla import format_rational
from .gaingraph import GainGraph
from .genericity import bias_restricted_flats, derived_arrangement, flat_of_gain, flats_lattice
from .transport import (
    Triple,
    are_equivalent,
    parallelism_canonicalization,
    realize_circuit_as_circle,
    transport_to,
)


def _write(path, text: str) -> None:
    Path(path).write_text(text)


def _emit_json(args, payload) -> None:
    if args.json:
        _write(args.json, json.dumps(payload, indent=2) + "\n")


def parse_circles(text: str, g: GainGraph) -> list[list[str]]:
    """``"abs,b+c+t"``: circles separated by commas, edges by ``+``.

    A token without ``+`` that is not itself an edge id is read one
    character per edge, so ``abs`` means the edges ``a``, ``b``, ``s``.
    """
    out = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        if "+" in token:
            out.append([x.strip() for x in token.split("+") if x.strip()])
        elif token in g.edge_ids:
            out.append([token])
        else:
            out.append(list(token))
    return out


def cmd_build(args) -> int:
    inst = io.load(args.file)
    lines = hyperplane_lines(inst.triple)
    print(f"{len(lines)} hyperplanes in dimension {inst.triple.dim}")
    for line in lines:
        print(line)
    _emit_json(args, {"hyperplanes": lines})
    return 0


def cmd_semilattice(args) -> int:
    inst = io.load(args.file)
    g = inst.triple.graph
    semi = intersection_semilattice(inst.triple.arrangement())
    records = []
    for k in range(semi.ambient + 1):
        flats = semi.by_codim(k)
        if not flats:
            continue
        print(f"codimension {k}: " + "  ".join(edge_set_label(g, f.labels) for f in flats))
        for f in flats:
            records.append({"codimension": k, "labels": g.ordered(f.labels)})
    if args.dot:
        _write(args.dot, semilattice_dot(semi, g))
    _emit_json(args, {"flats": records})
    return 0


def cmd_genericity(args) -> int:
    inst = io.load(args.file)
    c, g = inst.triple.configuration, inst.triple.graph
    arr = derived_arrangement(c, g)
    satisfied = [(X, F) for X, F in arr if F.contains(g.gains)]
    if not satisfied:
        print("generic")
    else:
        print("non-generic")
        for X, F in satisfied:
            print(f"  {g.label(X, sep=',')}: {F.format()}")
        flat = flat_of_gain(c, g)
        print(f"flat dimension {flat.dim}, circuits: {circuit_set_label(g, flat.circuits)}")
    _emit_json(
        args,
        {
            "generic": not satisfied,
            "circuits": [g.ordered(X) for X, _ in satisfied],
            "equations": [F.format() for _, F in satisfied],
        },
    )
    return 0


def cmd_flats(args) -> int:
    inst = io.load(args.file)
    c, g = inst.triple.configuration, inst.triple.graph
    lattice = flats_lattice(c, g)
    bias = parse_circles(args.bias, g) if args.bias else inst.bias
    print(f"{len(lattice)} flats")
    for flat in lattice.flats:
        print(f"rank {flat.rank}: {circuit_set_label(g, flat.circuits)}")
    payload = {"flats": flat_reports(lattice, g)}
    if bias:
        restricted = bias_restricted_flats(c, g, bias)
        print(f"bias {', '.join(''.join(b) for b in bias)}: {len(restricted)} flats")
        for r in restricted:
            mark = "  [over-balanced]" if r.over_balanced else ""
            print(f"rank {r.flat.rank}: {circuit_set_label(g, r.flat.circuits)}{mark}")
        payload["restricted"] = [
            {
                "circuits": [g.ordered(x) for x in sorted(r.flat.circuits, key=g.sort_key)],
                "over_balanced": r.over_balanced,
                "witness": {e: format_rational(v) for e, v in zip(g.edge_ids, r.witness)},
            }
            for r in restricted
        ]
    if args.dot:
        _write(args.dot, flats_dot(lattice, g))
    _emit_json(args, payload)
    return 0


def _parse_map(text: str | None) -> dict[str, str]:
    out = {}
    for item in filter(None, (x.strip() for x in (text or "").split(","))):
        if "=" not in item:
            raise ParseError(f"--map entry {item!r} is not of the form source=target")
        a, b = item.split("=", 1)
        out[a.strip()] = b.strip()
    return out


def cmd_transport(args) -> int:
    inst = io.load(args.file)
    t = inst.triple
    if args.canonical:
        result = parallelism_canonicalization(t)
    elif args.circle:
        (circle,) = parse_circles(args.circle, t.graph)
        result = realize_circuit_as_circle(t, circle)
    elif args.target:
        shape = io.load(args.target).triple
        mapping = _parse_map(args.map) or {e: e for e in t.graph.edge_ids}
        for src, dst in mapping.items():
            t.graph.edge(src)
            shape.graph.edge(dst)
        endpoints = {src: (shape.graph.edge(dst).tail, shape.graph.edge(dst).head) for src, dst in mapping.items()}
        moved = transport_to(t, shape.configuration, endpoints)
        # Report on the target's edge ids and order.
        back = {dst: src for src, dst in mapping.items()}
        gains = {dst: moved.graph.gains[back[dst]] for dst in shape.graph.edge_ids if dst in back}
        graph = GainGraph(shape.graph.vertices, [e for e in shape.graph.edges if e.id in back], gains)
        result = Triple(shape.configuration, graph)
    else:
        raise ParseError("transport needs one of --target, --canonical or --circle")
    ok = are_equivalent(t, result)
    print(f"equivalent: {'yes' if ok else 'no'}")
    for e in result.graph.edges:
        print(f"{e.id}: {e.tail} -> {e.head} gain {format_rational(result.graph.gains[e.id])}")
    if args.json:
        _write(args.json, io.dumps(result))
    return 0 if ok else 1


def cmd_plot(args) -> int:
    inst = io.load(args.file)
    svg = svg_plot(inst.triple)
    if args.svg:
        _write(args.svg, svg)
    else:
        sys.stdout.write(svg)
    return 0


COMMANDS = {
    "build": cmd_build,
    "semilattice": cmd_semilattice,
    "genericity": cmd_genericity,
    "flats": cmd_flats,
    "transport": cmd_transport,
    "plot": cmd_plot,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pytharr", description="Exact analysis of Pythagorean hyperplane arrangements.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("file", help="instance JSON file")
    parser.add_argument("--dot", help="write the lattice as DOT to this file")
    parser.add_argument("--svg", help="write the plot to this file")
    parser.add_argument("--json", help="write a JSON report (or the transported instance) to this file")
    parser.add_argument("--bias", help="circles declared balanced, e.g. abs,b+c+t")
    parser.add_argument("--target", help="transport: instance file giving the new points and edges")
    parser.add_argument("--map", help="transport: source=target edge pairs, default identical ids")
    parser.add_argument("--canonical", action="store_true", help="transport: canonicalize parallelism")
    parser.add_argument("--circle", help="transport: realize this circuit as a circle")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PytharrError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
