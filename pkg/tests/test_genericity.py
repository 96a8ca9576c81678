import random
from fractions import Fraction as Q
from itertools import combinations

import pytest

from oracles import brute_central, leibniz_det
from theta_data import ALL_MID_FLATS, BIAS, BIAS_FLATS, DRAWN_MID_FLATS, LETTERS, RELATION_TABLE
from pytharr.arrangement import intersection_semilattice, is_central
from pytharr.catalog import (
    GENERIC_THETA_GAINS,
    THETA_LETTERS,
    pappus_triple,
    random_triple,
    theta_triple,
    triple_point_triple,
)
from pytharr.errors import (
    NotABasis,
    NotACircle,
    NotACircuit,
    NotCentral,
    NotGeneric,
    NotLinearClass,
    UnrealizableBias,
    UnsupportedDimension,
)
from pytharr.gaingraph import GainGraph, all_circles, circle_gain
from pytharr.genericity import (
    EdgeSpaceHyperplane,
    balance_hyperplane,
    bias_restricted_flats,
    central_circuits,
    centres_correspondence,
    derived_arrangement,
    flat_of_gain,
    flats_lattice,
    forbidden_hyperplane,
    is_gain_generic,
    perturbation_radius,
    sample_perturbations,
    specialize,
    system_matrix,
)
from pytharr.matroid import bases, circuits, fundamental_circuit, is_linear_class
from pytharr.pointconfig import Configuration, matroid_at_infinity
from pytharr.transport import Triple

EDGES = ("a", "b", "c", "s", "t")


def letters(circuit_set):
    return "".join(sorted(THETA_LETTERS["".join(sorted(x, key=EDGES.index))] for x in circuit_set))


def theta_parts(gains=None):
    t = theta_triple(gains)
    return t.configuration, t.graph


class TestSystemMatrix:
    def test_abc(self):
        rows, column = system_matrix(*theta_parts(), "abc")
        assert rows == ((4, 0), (3, 2), (1, 2))
        assert [(x.constant, x.edge) for x in column] == [(-8, "a"), (Q(-13, 2), "b"), (Q(-5, 2), "c")]

    def test_specialize_gives_augmented_system(self):
        c, g = theta_parts(GENERIC_THETA_GAINS)
        rows, column = system_matrix(c, g, "ac")
        aug = specialize(rows, column, g.gains)
        # 2 x . d = gain + const  <=>  x . d - (gain + const) / 2 = 0
        assert aug == ((4, 0, Q(-5)), (1, 2, Q(-7, 2)))

    def test_dimension_zero(self):
        c = Configuration(0, {1: ()})
        with pytest.raises(UnsupportedDimension):
            system_matrix(c, GainGraph([1], []), [])


def symbolic_determinant_equation(c, g, edge_set):
    """Coefficients of det M[B + x] as an affine function of the gains, by Leibniz expansion."""
    rows, column = system_matrix(c, g, edge_set)
    base = [list(r) + [entry.constant] for r, entry in zip(rows, column)]
    constant = leibniz_det(base)
    coeffs = {}
    for i, entry in enumerate(column):
        bumped = [row[:] for row in base]
        bumped[i][-1] += Q(-1, 2)
        coeffs[entry.edge] = leibniz_det(bumped) - constant
    return coeffs, constant


class TestForbiddenHyperplanes:
    def test_relation_table(self):
        c, g = theta_parts()
        m = matroid_at_infinity(c, g)
        for name, expected in RELATION_TABLE.items():
            edges = set(name)
            for x in edges:
                rest = edges - {x}
                if not m.is_independent(rest) or len(rest) != 2:
                    continue
                circuit = fundamental_circuit(m, rest, x)
                f = forbidden_hyperplane(c, g, circuit, element=x, basis=rest)
                assert f.coefficients == expected and f.constant == 0

    def test_at(self):
        f = forbidden_hyperplane(*theta_parts(), "at")
        assert f.format() == "g_a + 2 g_t = 0"

    def test_cst(self):
        assert forbidden_hyperplane(*theta_parts(), "cst").coefficients == (0, 0, 1, -1, 1)

    def test_not_a_circuit(self):
        with pytest.raises(NotACircuit):
            forbidden_hyperplane(*theta_parts(), "ab")

    def test_bad_basis(self):
        with pytest.raises(NotABasis):
            forbidden_hyperplane(*theta_parts(), "at", element="t", basis="at")

    def test_matches_leibniz_oracle(self):
        rng = random.Random(21)
        for _ in range(40):
            t = random_triple(rng, rng.choice((1, 2, 3)))
            c, g = t.configuration, t.graph
            m = matroid_at_infinity(c, g)
            if m.rank() != c.dim:
                continue
            for X in circuits(m):
                f = forbidden_hyperplane(c, g, X)
                x0 = g.ordered(X)[0]
                basis = next(b for b in bases(m) if x0 not in b and fundamental_circuit(m, b, x0) == X)
                coeffs, constant = symbolic_determinant_equation(c, g, basis | {x0})
                expected = EdgeSpaceHyperplane.from_form(g.edge_ids, [coeffs.get(e, 0) for e in g.edge_ids], constant)
                assert f == expected

    def test_well_defined_and_supported_on_the_circuit(self):
        rng = random.Random(22)
        instances = [theta_triple(), triple_point_triple()] + [random_triple(rng, rng.choice((1, 2, 3)), max_edges=6) for _ in range(25)]
        for t in instances:
            c, g = t.configuration, t.graph
            m = matroid_at_infinity(c, g)
            for X in circuits(m):
                reference = forbidden_hyperplane(c, g, X)
                assert reference.support == X
                for x0 in X:
                    for b in bases(m):
                        if x0 not in b and fundamental_circuit(m, b, x0) == X:
                            assert forbidden_hyperplane(c, g, X, element=x0, basis=b) == reference


class TestDerivedArrangement:
    def test_theta(self):
        c, g = theta_parts()
        arr = derived_arrangement(c, g)
        assert len(arr) == 8
        table = {tuple(v) for v in RELATION_TABLE.values()}
        assert {F.coefficients for _, F in arr} == table

    def test_no_circuits(self):
        c = Configuration(2, {1: (0, 0), 2: (1, 0), 3: (0, 1)})
        g = GainGraph.from_edges([("a", 1, 2), ("b", 1, 3)])
        assert derived_arrangement(c, g) == []
        assert is_gain_generic(c, g)
        assert perturbation_radius(c, g) is None
        assert len(flats_lattice(c, g)) == 1

    def test_dimension_one_differences(self):
        c = Configuration(1, {0: (0,), 1: (1,)})
        g = GainGraph.from_edges([("e", 0, 1), ("f", 0, 1), ("h", 1, 0)])
        eqs = {F.format() for _, F in derived_arrangement(c, g)}
        assert eqs == {"g_e - g_f = 0", "g_e + g_h = 0", "g_f + g_h = 0"}


class TestGenericity:
    def test_generic_theta(self):
        c, g = theta_parts(GENERIC_THETA_GAINS)
        assert is_gain_generic(c, g)
        assert circle_gain(g, next(x for x in all_circles(g) if x.edges == frozenset("astc"))) == 0

    def test_at_relation(self):
        c, g = theta_parts({"a": -2, "b": 1, "c": 5, "s": 2, "t": 1})
        assert not is_gain_generic(c, g)
        assert central_circuits(c, g) == {frozenset("at")}

    def test_flat_of_generic_gain(self):
        c, g = theta_parts(GENERIC_THETA_GAINS)
        flat = flat_of_gain(c, g)
        assert flat.circuits == frozenset() and flat.dim == 5

    def test_flat_tvy(self):
        # a = -2t, b = s - 2t, with c, s, t chosen freely
        c, g = theta_parts({"a": -6, "b": -1, "c": 7, "s": 5, "t": 3})
        assert letters(flat_of_gain(c, g).circuits) == "TVY"

    def test_pappus_zero_gains(self):
        t = pappus_triple()
        cs = central_circuits(t.configuration, t.graph)
        assert len(cs) == 9 and all(len(x) == 3 for x in cs)
        assert all(is_central(t.arrangement(), x) for x in cs)

    def test_triple_point_central_circuit(self):
        t = triple_point_triple()
        assert central_circuits(t.configuration, t.graph) == {frozenset("bce")}

    def test_bias_forced_instance(self):
        # a = b - s and b = c - t
        c, g = theta_parts({"a": 1, "b": 3, "c": 7, "s": 2, "t": 4})
        assert {frozenset("abs"), frozenset("bct")} <= central_circuits(c, g)

    def test_scholium_matches_direct_solving(self):
        rng = random.Random(23)
        for _ in range(60):
            t = random_triple(rng, rng.choice((1, 2, 3)))
            c, g = t.configuration, t.graph
            central = central_circuits(c, g)
            for X in circuits(matroid_at_infinity(c, g)):
                assert (X in central) == brute_central(t, X)

    def test_generic_gains_leave_short_circles_unbalanced(self):
        rng = random.Random(24)
        seen = 0
        for _ in range(150):
            t = random_triple(rng, rng.choice((1, 2, 3)))
            c, g = t.configuration, t.graph
            if not is_gain_generic(c, g):
                continue
            seen += 1
            for circle in all_circles(g):
                if len(circle) <= c.dim + 1:
                    assert circle_gain(g, circle) != 0
        assert seen > 20


class TestFlatsLattice:
    def setup_method(self):
        self.c, self.g = theta_parts()
        self.lattice = flats_lattice(self.c, self.g)

    def test_atoms(self):
        assert {letters(f.circuits) for f in self.lattice.by_rank(1)} == set(LETTERS)

    def test_drawn_mid_flats_are_those_with_three_circuits(self):
        mids = {letters(f.circuits) for f in self.lattice.by_rank(2)}
        assert mids == ALL_MID_FLATS
        assert {x for x in mids if len(x) >= 3} == DRAWN_MID_FLATS

    def test_top_and_bottom(self):
        assert [letters(f.circuits) for f in self.lattice.by_rank(0)] == [""]
        top = self.lattice.by_rank(3)
        assert [letters(f.circuits) for f in top] == ["STUVWXYZ"]
        assert top[0].dim == 2
        assert len(self.lattice) == 22

    def test_labels_are_linear_classes(self):
        m = matroid_at_infinity(self.c, self.g)
        assert all(is_linear_class(m, f.circuits) for f in self.lattice.flats)

    def test_order_reverses_inclusion(self):
        flats = self.lattice.flats
        assert len({f.circuits for f in flats}) == len(flats)
        for f, h in combinations(flats, 2):
            assert f.subspace.contains(h.subspace) == (f.circuits <= h.circuits)
            assert h.subspace.contains(f.subspace) == (h.circuits <= f.circuits)

    def test_representatives(self):
        for f in self.lattice.flats:
            gains = dict(zip(self.g.edge_ids, self.lattice.representative(f)))
            assert flat_of_gain(self.c, self.g.with_gains(gains)).circuits == f.circuits

    def test_random_instances(self):
        rng = random.Random(25)
        for _ in range(15):
            t = random_triple(rng, rng.choice((1, 2)), max_edges=5)
            c, g = t.configuration, t.graph
            lattice = flats_lattice(c, g)
            m = matroid_at_infinity(c, g)
            for f in lattice.flats:
                assert is_linear_class(m, f.circuits)
                gains = dict(zip(g.edge_ids, lattice.representative(f)))
                assert central_circuits(c, g.with_gains(gains)) == f.circuits


class TestBalanceHyperplanes:
    def test_abs_equals_forbidden(self):
        c, g = theta_parts()
        assert balance_hyperplane(g, "abs") == forbidden_hyperplane(c, g, "abs")

    def test_long_circle(self):
        c, g = theta_parts()
        b = balance_hyperplane(g, "astc")
        assert b.format() == "g_a - g_c + g_s + g_t = 0"
        assert all(b != F for _, F in derived_arrangement(c, g))

    def test_digon(self):
        g = GainGraph.from_edges([("e", 1, 2), ("f", 1, 2)])
        assert balance_hyperplane(g, "ef").format() == "g_e - g_f = 0"

    def test_not_a_circle(self):
        with pytest.raises(NotACircle):
            balance_hyperplane(theta_triple().graph, "ab")


class TestBias:
    @pytest.mark.parametrize("name", sorted(BIAS))
    def test_figures(self, name):
        c, g = theta_parts()
        got = {(letters(r.flat.circuits), r.over_balanced) for r in bias_restricted_flats(c, g, BIAS[name])}
        assert got == BIAS_FLATS[name]

    @pytest.mark.parametrize("name", sorted(BIAS))
    def test_witnesses(self, name):
        c, g = theta_parts()
        bias = {frozenset(x) for x in BIAS[name]}
        for r in bias_restricted_flats(c, g, BIAS[name]):
            gains = dict(zip(g.edge_ids, r.witness))
            h = g.with_gains(gains)
            assert central_circuits(c, h) == r.flat.circuits
            balanced = {x.edges for x in all_circles(h) if circle_gain(h, x) == 0}
            assert balanced == {x.edges for x in r.balanced_circles}
            assert bias <= balanced
            assert r.over_balanced == (balanced != bias)

    def test_not_linear_class(self):
        with pytest.raises(NotLinearClass):
            bias_restricted_flats(*theta_parts(), ["abs", "bct"])

    def test_unrealizable(self):
        # The three 4-cycles of K4 form a linear class (no two of them make
        # a theta graph), but their gain sums add up to twice a triangle's.
        g = GainGraph.from_edges([("a", 1, 2), ("b", 1, 3), ("c", 1, 4), ("d", 2, 3), ("e", 2, 4), ("f", 3, 4)])
        c = Configuration(3, {1: (0, 0, 0), 2: (1, 0, 0), 3: (0, 1, 0), 4: (0, 0, 1)})
        with pytest.raises(UnrealizableBias):
            bias_restricted_flats(c, g, ["abfe", "acfd", "bced"])

    def test_all_circles_force_top(self):
        c = Configuration(2, {1: (0, 0), 2: (4, 0), 3: (3, 2)})
        g = GainGraph.from_edges([("a", 1, 2), ("b", 1, 3), ("c", 2, 3)])
        flats = bias_restricted_flats(c, g, ["abc"])
        assert [sorted(map(sorted, r.flat.circuits)) for r in flats] == [[["a", "b", "c"]]]


class TestCentres:
    def setup_method(self):
        self.c, self.g = theta_parts()

    def test_round_trip(self):
        centres = centres_correspondence(self.c, self.g, "ab")
        for p in [(0, 0), (Q(5, 4), Q(9, 8)), (-3, 7)]:
            gains = centres.gains_at(p)
            assert centres.centre(gains) == p
            assert centres.top().contains_point([gains[e] for e in self.g.edge_ids])

    def test_top_dimension(self):
        centres = centres_correspondence(self.c, self.g, "ab")
        top = centres.top()
        assert top.dim == 2
        lattice = flats_lattice(self.c, self.g)
        assert top.same_set(lattice.by_rank(3)[0].subspace)

    def test_basis_determines_rest(self):
        centres = centres_correspondence(self.c, self.g, "ab")
        gains = centres.gains_at((Q(5, 4), Q(9, 8)))
        assert gains["a"] == -6 and gains["c"] == 2

    def test_errors(self):
        with pytest.raises(NotABasis):
            centres_correspondence(self.c, self.g, "at")
        with pytest.raises(NotCentral):
            centres_correspondence(*theta_parts(GENERIC_THETA_GAINS), "ab")


class TestPerturbation:
    def test_not_generic(self):
        with pytest.raises(NotGeneric):
            perturbation_radius(*theta_parts())

    def test_samples_preserve_semilattice(self):
        c, g = theta_parts(GENERIC_THETA_GAINS)
        eps = perturbation_radius(c, g)
        assert eps == Q(2, 3)
        reference = intersection_semilattice(Triple(c, g).arrangement()).signature()
        for gains in sample_perturbations(g, eps, 30, seed=1):
            assert sum((gains[e] - g.gains[e]) ** 2 for e in g.edge_ids) < eps * eps
            moved = Triple(c, g.with_gains(gains))
            assert intersection_semilattice(moved.arrangement()).signature() == reference
