"""Print the worked examples: hyperplanes, central circuits, lattices, transports."""

from __future__ import annotations

from pytharr.arrangement import intersection_semilattice
from pytharr.catalog import (
    GENERIC_THETA_GAINS,
    THETA_LETTERS,
    pappus_reduced_triple,
    pappus_triple,
    theta_pair_triple,
    theta_rework_combined,
    theta_rework_target,
    theta_triple,
    triple_point_triple,
)
from pytharr.exactla import format_rational
from pytharr.export import circuit_set_label, hyperplane_lines
from pytharr.genericity import bias_restricted_flats, central_circuits, flats_lattice, forbidden_hyperplane, is_gain_generic
from pytharr.transport import are_equivalent, transport_to


def section(title: str) -> None:
    print(f"\n== {title}")


def main() -> None:
    t = triple_point_triple()
    section("triple-point instance")
    print("\n".join(hyperplane_lines(t)))
    points = intersection_semilattice(t.arrangement()).points()
    print("points:", " ".join("".join(t.graph.ordered(f.labels)) for f in points))

    theta = theta_triple()
    c, g = theta.configuration, theta.graph
    section("theta instance: hyperplanes of nongenericity")
    lattice = flats_lattice(c, g)
    for X, F in lattice.hyperplanes:
        print(f"{THETA_LETTERS[g.label(X)]} = {g.label(X)}: {F.format()}")
    print(f"{len(lattice)} flats")
    for f in lattice.flats:
        print(f"  rank {f.rank}: {circuit_set_label(g, f.circuits, THETA_LETTERS)}")
    for bias in (["abs"], ["bct"], ["astc"], ["abs", "bct", "astc"]):
        flats = bias_restricted_flats(c, g, bias)
        marks = [circuit_set_label(g, r.flat.circuits, THETA_LETTERS) + ("*" if r.over_balanced else "") for r in flats]
        print(f"bias {', '.join(bias)}: {' '.join(marks)}")
    generic = theta.with_gains(GENERIC_THETA_GAINS)
    print("gains (-6, 0, 2, 2, 6) generic:", is_gain_generic(generic.configuration, generic.graph))

    section("theta reworked")
    combined = theta_rework_combined()
    for pair in [("12", "57'"), ("13", "58"), ("14", "56"), ("23", "67"), ("34", "57")]:
        print(forbidden_hyperplane(combined.configuration, combined.graph, pair).format())
    source = theta_pair_triple({"12": -6, "13": 0, "14": 2, "23": 2, "34": 6})
    moved = transport_to(source, *theta_rework_target())
    gains = ", ".join(f"{e}: {format_rational(v)}" for e, v in moved.gains.items())
    print(f"transported gains: {gains}; equivalent: {are_equivalent(source, moved)}")

    section("Pappus")
    p = pappus_triple()
    print("central circuits at zero gain:", len(central_circuits(p.configuration, p.graph)))
    print("equivalent to the reduced triple as drawn:", are_equivalent(p, pappus_reduced_triple()))
    print("equivalent after translating by (5/2, 1):", are_equivalent(p, pappus_reduced_triple(shift=("5/2", 1))))


if __name__ == "__main__":
    main()
