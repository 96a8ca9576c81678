import pytest

from pytharr.arrangement import intersection_semilattice
from pytharr.catalog import GENERIC_THETA_GAINS, THETA_LETTERS, pappus_triple, theta_triple, triple_point_triple
from pytharr.export import (
    circuit_set_label,
    flat_reports,
    flats_dot,
    format_linear,
    hyperplane_lines,
    multiple_points,
    semilattice_dot,
    svg_plot,
)
from pytharr.genericity import flats_lattice


@pytest.mark.parametrize(
    "coefficients, rhs, expected",
    [((4, 6), 13, "4x + 6y = 13"), ((1, -1), 0, "x - y = 0"), ((0, -3), -2, "-3y = -2"), ((2, 0, 1), 5, "2x + z = 5")],
)
def test_format_linear(coefficients, rhs, expected):
    assert format_linear(coefficients, rhs, ["x", "y", "z"]) == expected


def test_hyperplane_lines_triple_point():
    assert hyperplane_lines(triple_point_triple())[0] == "a: 4x + 6y = 13"


def test_semilattice_dot_deterministic():
    t = triple_point_triple()
    one = semilattice_dot(intersection_semilattice(t.arrangement()), t.graph)
    two = semilattice_dot(intersection_semilattice(triple_point_triple().arrangement()), t.graph)
    assert one == two
    assert 'label="b,c,e"' in one and 'label="∅"' in one


def test_flats_dot_with_letters():
    t = theta_triple(GENERIC_THETA_GAINS)
    lattice = flats_lattice(t.configuration, t.graph)
    dot = flats_dot(lattice, t.graph, THETA_LETTERS)
    for name in ["STUW", "TVY", "UVX", "SVZ", "WXYZ", "STUVWXYZ"]:
        assert f'label="{name}"' in dot
    assert dot == flats_dot(flats_lattice(t.configuration, t.graph), t.graph, THETA_LETTERS)


def test_circuit_set_label():
    g = theta_triple().graph
    assert circuit_set_label(g, []) == "∅"
    assert circuit_set_label(g, [frozenset("bst"), frozenset("at")]) == "at bst"


def test_flat_reports_representatives_lie_on_flats():
    t = theta_triple(GENERIC_THETA_GAINS)
    lattice = flats_lattice(t.configuration, t.graph)
    for flat, report in zip(lattice.flats, flat_reports(lattice, t.graph)):
        rep = lattice.representative(flat)
        assert all(lattice.equation(x).contains(rep) for x in flat.circuits)
        assert report["dimension"] == flat.dim


def test_svg_deterministic_and_marks():
    assert svg_plot(pappus_triple()) == svg_plot(pappus_triple())
    assert len(multiple_points(pappus_triple())) == 9
    assert len(multiple_points(triple_point_triple())) == 1
    assert multiple_points(theta_triple(GENERIC_THETA_GAINS)) == []


def test_svg_lines_inside_view_box():
    svg = svg_plot(triple_point_triple(), size=300)
    for line in svg.splitlines():
        if line.startswith("<line "):
            values = [float(v) for k, v in (part.split("=") for part in line[6:-2].replace('"', "").split()) if k[0] in "xy"]
            assert all(-1e-9 <= v <= 300 + 1e-9 for v in values)
