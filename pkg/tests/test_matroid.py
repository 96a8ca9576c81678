from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_circuits
from pytharr.arrangement import build_arrangement, central_sets
from pytharr.catalog import non_pappus_family, rank_two_uniform_vectors, theta_triple
from pytharr.errors import ElementInBasis, InvalidIdeal, NotABasis, NotACircuit, NotLinearClass
from pytharr.gaingraph import cycle_rank, is_balanced
from pytharr.matroid import (
    ModularIdeal,
    VectorMatroid,
    all_linear_classes,
    all_modular_ideals,
    bases,
    circuits,
    fundamental_circuit,
    ideal_circuits,
    is_linear_class,
    is_matroid_rank_function,
    is_modular_ideal,
    is_modular_pair,
    is_semimatroid,
    lift_rank,
    lift_rank_function,
    linear_class_closure,
    modular_ideal_closure,
    modular_ideal_from_linear_class,
    modular_ideal_iff_semimatroid_check,
)
from pytharr.pointconfig import matroid_at_infinity


@st.composite
def matroids(draw, max_size=6):
    d = draw(st.integers(1, 3))
    n = draw(st.integers(1, max_size))
    vectors = draw(st.lists(st.tuples(*[st.integers(-2, 2)] * d), min_size=n, max_size=n))
    return VectorMatroid(list(range(n)), vectors)


def theta_matroid():
    t = theta_triple()
    return matroid_at_infinity(t.configuration, t.graph)


def powerset(ground):
    return [frozenset(s) for k in range(len(ground) + 1) for s in combinations(ground, k)]


class TestCircuits:
    def test_independent(self):
        assert circuits(VectorMatroid("xy", [(1, 0), (0, 1)])) == []

    def test_parallel_pair(self):
        assert circuits(VectorMatroid("xy", [(1, 2), (2, 4)])) == [frozenset("xy")]

    def test_theta(self):
        assert len(circuits(theta_matroid())) == 8

    @given(matroids())
    @settings(max_examples=60)
    def test_matches_oracle(self, m):
        assert set(circuits(m)) == brute_circuits(dict(zip(m.ground, m.vectors)))

    @given(matroids())
    @settings(max_examples=60)
    def test_circuit_elimination(self, m):
        cs = circuits(m)
        for x, y in combinations(cs, 2):
            for e in x & y:
                assert any(z <= (x | y) - {e} for z in cs)
                for f in x - y:
                    assert any(f in z and z <= (x | y) - {e} for z in cs)


class TestFundamentalCircuits:
    def test_theta_examples(self):
        m = theta_matroid()
        assert fundamental_circuit(m, "ac", "t") == frozenset("at")
        assert fundamental_circuit(m, "ct", "a") == frozenset("at")

    def test_parallel_to_basis_element(self):
        m = VectorMatroid("xyz", [(1, 0), (0, 1), (0, 3)])
        assert fundamental_circuit(m, "xy", "z") == frozenset("yz")

    def test_errors(self):
        m = theta_matroid()
        with pytest.raises(NotABasis):
            fundamental_circuit(m, "at", "b")
        with pytest.raises(ElementInBasis):
            fundamental_circuit(m, "ab", "a")

    @given(matroids())
    @settings(max_examples=40)
    def test_unique_circuit_in_basis_plus_element(self, m):
        for b in bases(m):
            for x in set(m.ground) - b:
                if m.rank([x]) == 0:
                    continue
                c = fundamental_circuit(m, b, x)
                assert x in c and c <= b | {x} and c in circuits(m)


def common_basis_representation(m, x, y):
    union = x | y
    cs = circuits(m)
    for b in bases(m, union):
        outside = union - b
        for e, f in combinations(outside, 2):
            ce = next(c for c in cs if e in c and c <= b | {e})
            cf = next(c for c in cs if f in c and c <= b | {f})
            if {ce, cf} == {x, y}:
                return True
    return False


def union_minimal(m, x, y):
    union = x | y
    cs = [c for c in circuits(m) if c <= union]
    return all(u | v == union for u, v in combinations(cs, 2))


class TestModularPairs:
    def test_disjoint_independent_spans(self):
        m = VectorMatroid("abcd", [(1, 0, 0, 0), (2, 0, 0, 0), (0, 0, 1, 0), (0, 0, 3, 0)])
        assert is_modular_pair(m, "ab", "cd")

    def test_theta_abc_abs(self):
        assert is_modular_pair(theta_matroid(), "abc", "abs")

    def test_rank_two_shared_pair(self):
        m = VectorMatroid("wxyz", [(1, 0), (0, 1), (1, 1), (1, 2)])
        assert is_modular_pair(m, "wxy", "wxz")

    def test_not_a_circuit(self):
        with pytest.raises(NotACircuit):
            is_modular_pair(theta_matroid(), "ab", "abs")

    @given(matroids())
    @settings(max_examples=50, deadline=None)
    def test_lemma_equivalences(self, m):
        for x, y in combinations(circuits(m), 2):
            modular = is_modular_pair(m, x, y)
            assert modular == union_minimal(m, x, y)
            assert modular == common_basis_representation(m, x, y)


class TestLinearClasses:
    def test_closure_all(self):
        m = theta_matroid()
        assert linear_class_closure(m, circuits(m)) == frozenset(circuits(m))

    def test_closure_empty(self):
        assert linear_class_closure(theta_matroid(), []) == frozenset()

    def test_closure_stuw(self):
        got = linear_class_closure(theta_matroid(), ["abc", "abs"])
        assert got == {frozenset(x) for x in ("abc", "abs", "acs", "bcs")}

    def test_non_class(self):
        assert not is_linear_class(theta_matroid(), ["abc", "abs"])

    @given(matroids())
    @settings(max_examples=30, deadline=None)
    def test_classes_closed_and_intersection_closed(self, m):
        classes = all_linear_classes(m)
        assert frozenset() in classes and frozenset(circuits(m)) in classes
        assert all(is_linear_class(m, c) for c in classes)
        as_set = set(classes)
        for a, b in combinations(classes, 2):
            assert a & b in as_set


class TestModularIdeals:
    def test_zero_is_independents(self):
        m = theta_matroid()
        ideal = modular_ideal_from_linear_class(m, [])
        assert ideal.members == {s for s in powerset(m.ground) if m.is_independent(s)}

    def test_all_circuits_give_powerset(self):
        m = theta_matroid()
        assert modular_ideal_from_linear_class(m, circuits(m)).members == set(powerset(m.ground))

    def test_at_matches_direct_closure(self):
        m = theta_matroid()
        ideal = modular_ideal_from_linear_class(m, ["at"])
        assert ideal == modular_ideal_closure(m, [frozenset("at")])
        assert is_modular_ideal(m, ideal)
        assert ideal_circuits(m, ideal) == {frozenset("at")}

    def test_rejects_non_class(self):
        with pytest.raises(NotLinearClass):
            modular_ideal_from_linear_class(theta_matroid(), ["abc", "abs"])

    @given(matroids())
    @settings(max_examples=40, deadline=None)
    def test_independents_in_every_ideal(self, m):
        independents = {s for s in powerset(m.ground) if m.is_independent(s)}
        for ideal in all_modular_ideals(m):
            assert independents <= ideal.members

    @given(matroids(max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_lattice_bijection(self, m):
        classes = all_linear_classes(m)
        images = [modular_ideal_from_linear_class(m, c) for c in classes]
        for c, ideal in zip(classes, images):
            assert ideal_circuits(m, ideal) == c
        assert set(images) == set(all_modular_ideals(m))
        assert len(set(images)) == len(classes)


class TestLift:
    def setup_method(self):
        self.m = VectorMatroid(list(range(1, 10)), rank_two_uniform_vectors(9))
        self.ideal = ModularIdeal(frozenset(non_pappus_family()))

    def test_independent(self):
        assert lift_rank(self.m, self.ideal, {4, 9}) == 2

    def test_line_keeps_rank(self):
        assert lift_rank(self.m, self.ideal, {1, 3, 6}) == 2

    def test_non_line_rises(self):
        assert lift_rank(self.m, self.ideal, {1, 2, 3}) == 3

    def test_invalid_ideal(self):
        broken = ModularIdeal(frozenset(s for s in self.ideal if s != frozenset({5})))
        with pytest.raises(InvalidIdeal):
            lift_rank(self.m, broken, {1})

    def test_uniform_rank(self):
        assert is_matroid_rank_function(lambda s: min(len(s), 2), range(5))

    def test_not_rank_function(self):
        assert not is_matroid_rank_function(lambda s: 2 * len(s), range(3))

    @given(matroids())
    @settings(max_examples=30)
    def test_vector_rank_functions(self, m):
        assert is_matroid_rank_function(m.rank, m.ground)

    @given(matroids(max_size=5))
    @settings(max_examples=25, deadline=None)
    def test_every_lift_is_a_matroid(self, m):
        for ideal in all_modular_ideals(m):
            assert is_matroid_rank_function(lift_rank_function(m, ideal), m.ground)


class TestSemimatroids:
    def test_arrangement_central_sets(self):
        t = theta_triple({"a": -6, "b": 0, "c": 2, "s": 2, "t": 6})
        cs = central_sets(build_arrangement(t.configuration, t.graph))
        assert is_semimatroid(cs, cs)

    def test_balanced_sets(self):
        g = theta_triple({"a": -6, "b": 0, "c": 2, "s": 2, "t": 6}).graph
        balanced = [s for s in powerset(g.edge_ids) if is_balanced(g, s)]
        assert is_semimatroid(balanced, lambda s: cycle_rank(g, s))

    def test_bad_rank(self):
        assert not is_semimatroid([frozenset()], {frozenset(): 1})

    def test_iff_check_examples(self):
        m = theta_matroid()
        independents = [s for s in powerset(m.ground) if m.is_independent(s)]
        assert is_modular_ideal(m, independents) and is_semimatroid(independents, m.rank)
        assert modular_ideal_iff_semimatroid_check(m, independents)
        broken = [s for s in independents if s != frozenset("a")]
        assert not is_modular_ideal(m, broken) and not is_semimatroid(broken, m.rank)
        assert modular_ideal_iff_semimatroid_check(m, broken)

    def test_iff_check_non_pappus(self):
        m = VectorMatroid(list(range(1, 10)), rank_two_uniform_vectors(9))
        fam = non_pappus_family()
        assert is_modular_ideal(m, fam) and is_semimatroid(fam, m.rank)
        assert modular_ideal_iff_semimatroid_check(m, fam)

    @given(matroids(max_size=5))
    @settings(max_examples=25, deadline=None)
    def test_ideals_are_semimatroids(self, m):
        for ideal in all_modular_ideals(m):
            assert is_semimatroid(ideal, m.rank)
            assert modular_ideal_iff_semimatroid_check(m, ideal)
