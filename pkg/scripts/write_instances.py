"""Regenerate the JSON files in instances/ from the catalog."""

from __future__ import annotations

from pathlib import Path

from pytharr import catalog
from pytharr import instance as io
from pytharr.errors import PytharrError
from pytharr.gaingraph import GainGraph
from pytharr.pointconfig import Configuration
from pytharr.transport import Triple, transport_to

OUT = Path(__file__).resolve().parent.parent / "instances"


def pappus_edge_map() -> dict[str, str]:
    """Pair every Pappus edge with the reduced-graph edge carrying the same gain."""
    source = catalog.pappus_triple()
    target = catalog.pappus_reduced_triple(shift=("5/2", 1))
    mapping = {}
    free = list(target.graph.edge_ids)
    for e in source.graph.edge_ids:
        for f in free:
            shape = target.graph.edge(f)
            try:
                moved = transport_to(
                    Triple(source.configuration, GainGraph(source.graph.vertices, [source.graph.edge(e)], {e: 0})),
                    target.configuration,
                    {e: (shape.tail, shape.head)},
                )
            except PytharrError:
                continue
            if moved.graph.gains[e] == target.graph.gains[f]:
                mapping[e] = f
                free.remove(f)
                break
    return mapping


def main() -> None:
    OUT.mkdir(exist_ok=True)
    io.save(catalog.theta_triple(catalog.GENERIC_THETA_GAINS), OUT / "theta_generic.json")
    io.save(catalog.theta_triple({"a": -2, "b": 3, "c": 3, "s": 5, "t": 1}), OUT / "theta_tvy.json")
    io.save(catalog.theta_triple({"a": 4, "t": -2, "b": 1, "c": 5, "s": 7}), OUT / "theta_at.json")
    bias = io.Instance(catalog.theta_triple(catalog.GENERIC_THETA_GAINS), [["a", "b", "s"]])
    io.save(bias, OUT / "theta_bias_abs.json")
    io.save(catalog.theta_pair_triple({"12": -6, "13": 0, "14": 2, "23": 2, "34": 6}), OUT / "theta_pairs.json")
    config, endpoints = catalog.theta_rework_target()
    shape = GainGraph.from_edges([(e, a, b) for e, (a, b) in endpoints.items()], vertices=list(config.points))
    io.save(Triple(config, shape), OUT / "theta_rework_shape.json")
    io.save(catalog.triple_point_triple(), OUT / "triple_point.json")
    io.save(catalog.pappus_triple(), OUT / "pappus.json")
    io.save(catalog.pappus_reduced_triple(), OUT / "pappus_reduced_as_drawn.json")
    io.save(catalog.pappus_reduced_triple(shift=("5/2", 1)), OUT / "pappus_reduced.json")
    cube = Triple(
        Configuration(3, {"o": (0, 0, 0), "x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}),
        GainGraph.from_edges([("a", "o", "x", 1), ("b", "o", "y", 2), ("c", "o", "z", 3), ("d", "x", "y", 0)]),
    )
    io.save(cube, OUT / "tetrahedron_3d.json")
    mapping = pappus_edge_map()
    (OUT / "pappus_map.txt").write_text(",".join(f"{a}={b}" for a, b in mapping.items()) + "\n")
    print("wrote", ", ".join(sorted(p.name for p in OUT.iterdir())))


if __name__ == "__main__":
    main()
