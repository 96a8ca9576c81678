"""Hyperplanes of nongenericity and the derived arrangement in gain space.

For a circuit ``X`` of the matroid at infinity, ``F_X`` is the set of gain
vectors for which the hyperplanes of ``X`` meet.  It is computed from the
square system matrix of a basis ``B`` extended by one element ``x`` with
``X = C_B(x)``: rows are the edge directions and the last column holds the
symbolic entries ``-1/2 (gamma_e + |q_v|^2 - |q_u|^2)``.  Expanding the
determinant along that column gives a linear equation in the gains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence

from .arrangement import LabeledSemilattice, build_arrangement, enumerate_flats
from .errors import (
    ElementInBasis,
    NotABasis,
    NotACircuit,
    NotCentral,
    NotGeneric,
    NotLinearClass,
    UnknownEdge,
    UnrealizableBias,
    UnsupportedDimension,
)
from .exactla import AffineSubspace, Vector, det, dot, intersect, primitive_integer, rref, solve, sub
from .gaingraph import Circle, EdgeId, GainGraph, all_circles, circle_from_edges, is_linear_class_of_circles
from .matroid import VectorMatroid, circuits, fundamental_circuit, is_basis
from .pointconfig import Configuration, direction, matroid_at_infinity


@dataclass(frozen=True)
class EdgeSpaceHyperplane:
    """The equation ``sum(c_e * gamma_e) + constant = 0`` on gain vectors.

    Stored canonically: integer coefficients over ``edges`` (the global edge
    order), coprime together with the constant, first nonzero coefficient
    positive.  Two hyperplanes are equal exactly when they are the same set.
    """

    edges: tuple[EdgeId, ...]
    coefficients: tuple[int, ...]
    constant: int

    @classmethod
    def from_form(cls, edges: Sequence[EdgeId], coefficients: Sequence, constant=0) -> "EdgeSpaceHyperplane":
        values = [Fraction(x) for x in coefficients] + [Fraction(constant)]
        if all(v == 0 for v in values[:-1]):
            raise ValueError("all coefficients vanish")
        ints = primitive_integer(values)
        if next(v for v in ints if v != 0) < 0:
            ints = tuple(-v for v in ints)
        return cls(tuple(edges), tuple(ints[:-1]), ints[-1])

    @property
    def support(self) -> frozenset:
        return frozenset(e for e, c in zip(self.edges, self.coefficients) if c != 0)

    def coefficient(self, e: EdgeId) -> int:
        if e not in self.edges:
            raise UnknownEdge(f"no edge {e!r}")
        return self.coefficients[self.edges.index(e)]

    def evaluate(self, gains: Mapping[EdgeId, object] | Sequence) -> Fraction:
        vals = _as_vector(self.edges, gains)
        return dot(self.coefficients, vals) + self.constant

    def contains(self, gains) -> bool:
        return self.evaluate(gains) == 0

    @property
    def normal(self) -> Vector:
        return tuple(Fraction(c) for c in self.coefficients)

    @property
    def offset(self) -> Fraction:
        return Fraction(-self.constant)

    def format(self, variable: str = "g_") -> str:
        """E.g. ``g_a - 2 g_b + 2 g_c = 0`` with the constant on the right."""
        parts = []
        for e, c in zip(self.edges, self.coefficients):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            if not parts:
                parts.append(("-" if c < 0 else "") + f"{mag}{variable}{e}")
            else:
                parts.append(("- " if c < 0 else "+ ") + f"{mag}{variable}{e}")
        return f"{' '.join(parts)} = {-self.constant}"


def _as_vector(edges: Sequence[EdgeId], gains) -> Vector:
    if isinstance(gains, Mapping):
        return tuple(Fraction(gains[e]) for e in edges)
    vals = tuple(Fraction(x) for x in gains)
    if len(vals) != len(edges):
        raise ValueError(f"expected {len(edges)} gains, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class SymbolicEntry:
    """The entry ``constant - gamma_edge / 2`` of the symbolic column."""

    constant: Fraction
    edge: EdgeId

    def value(self, gain) -> Fraction:
        return self.constant - Fraction(gain) / 2


def _offset_constant(c: Configuration, g: GainGraph, eid: EdgeId) -> Fraction:
    e = g.edge(eid)
    qu, qv = c.point(e.tail), c.point(e.head)
    return dot(qv, qv) - dot(qu, qu)


def system_matrix(c: Configuration, g: GainGraph, s: Iterable[EdgeId]) -> tuple[tuple[Vector, ...], tuple[SymbolicEntry, ...]]:
    """Direction rows and the symbolic last column for the edges ``s`` (in edge order)."""
    if c.dim < 1:
        raise UnsupportedDimension("system matrices need dimension at least 1")
    es = g.ordered(s)
    rows = tuple(direction(c, g, e) for e in es)
    column = tuple(SymbolicEntry(-_offset_constant(c, g, e) / 2, e) for e in es)
    return rows, column


def specialize(rows: Sequence[Vector], column: Sequence[SymbolicEntry], gains: Mapping[EdgeId, object]) -> tuple[Vector, ...]:
    """Substitute gains into the symbolic column, giving the augmented matrix."""
    return tuple(tuple(r) + (entry.value(gains[entry.edge]),) for r, entry in zip(rows, column))


def _span_coordinates(m: VectorMatroid) -> list[int]:
    """Coordinates on which projecting the direction span is injective."""
    return rref(list(m.vectors))[1] if m.vectors else []


def _extend_to_basis(m: VectorMatroid, start: Iterable, avoid) -> frozenset:
    basis = list(start)
    r = m.rank()
    for x in m.ground:
        if len(basis) == r:
            break
        if x == avoid or x in basis:
            continue
        if m.is_independent(basis + [x]):
            basis.append(x)
    return frozenset(basis)


def forbidden_hyperplane(
    c: Configuration,
    g: GainGraph,
    x: Iterable[EdgeId],
    element: EdgeId | None = None,
    basis: Iterable[EdgeId] | None = None,
) -> EdgeSpaceHyperplane:
    """The hyperplane of nongenericity ``F_X`` of the circuit ``x``.

    ``element`` and ``basis`` pick the pair with ``X = C_B(element)``; by
    default the first element of ``X`` and a greedy extension of the rest of
    ``X``.  When the directions do not span the whole space the computation
    runs in the coordinates of their span.
    """
    m = matroid_at_infinity(c, g)
    return _forbidden(c, g, m, frozenset(x), element, basis)


def _forbidden(c, g, m: VectorMatroid, X: frozenset, element=None, basis=None) -> EdgeSpaceHyperplane:
    if X not in set(circuits(m)):
        raise NotACircuit(f"{g.label(X)} is not a circuit of the matroid at infinity")
    x0 = g.ordered(X)[0] if element is None else element
    if x0 not in X:
        raise NotACircuit(f"{x0!r} is not in the circuit {g.label(X)}")
    if basis is None:
        B = _extend_to_basis(m, g.ordered(X - {x0}), x0)
    else:
        B = frozenset(basis)
        if not is_basis(m, B):
            raise NotABasis(f"{g.label(B)} is not a basis")
        if x0 in B:
            raise ElementInBasis(f"{x0!r} lies in the basis")
        if fundamental_circuit(m, B, x0) != X:
            raise NotACircuit(f"{g.label(X)} is not the fundamental circuit of {x0!r} in {g.label(B)}")
    cols = _span_coordinates(m)
    r = len(cols)
    order = [x0] + g.ordered(B)
    rows = [tuple(direction(c, g, e)[j] for j in cols) for e in order]
    coeffs = {e: Fraction(0) for e in g.edge_ids}
    constant = Fraction(0)
    for i, e in enumerate(order):
        minor = rows[:i] + rows[i + 1 :]
        coef = (-1) ** (i + r + 1) * Fraction(1, 2) * det(minor)
        coeffs[e] += coef
        constant += coef * _offset_constant(c, g, e)
    return EdgeSpaceHyperplane.from_form(g.edge_ids, [coeffs[e] for e in g.edge_ids], constant)


def derived_arrangement(c: Configuration, g: GainGraph) -> list[tuple[frozenset, EdgeSpaceHyperplane]]:
    """``(X, F_X)`` for every circuit ``X``, in circuit order."""
    m = matroid_at_infinity(c, g)
    return [(X, _forbidden(c, g, m, X)) for X in circuits(m)]


def central_circuits(c: Configuration, g: GainGraph) -> frozenset:
    """Circuits whose hyperplane of nongenericity contains the current gains."""
    return frozenset(X for X, F in derived_arrangement(c, g) if F.contains(g.gains))


def is_gain_generic(c: Configuration, g: GainGraph) -> bool:
    return not central_circuits(c, g)


@dataclass(frozen=True)
class FlatOfF:
    """A flat of the derived arrangement and its circuit set."""

    circuits: frozenset
    subspace: AffineSubspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def rank(self) -> int:
        return self.subspace.codim


def _cut_all(n: int, hyperplanes: Iterable[EdgeSpaceHyperplane]) -> AffineSubspace:
    out = AffineSubspace.whole(n)
    for h in hyperplanes:
        out = out.cut(h.normal, h.offset)
    return out


def flat_of_gain(c: Configuration, g: GainGraph) -> FlatOfF:
    arr = derived_arrangement(c, g)
    cs = frozenset(X for X, F in arr if F.contains(g.gains))
    return FlatOfF(cs, _cut_all(len(g.edges), [F for X, F in arr if X in cs]))


@dataclass(frozen=True)
class FlatsLattice:
    """Flats of the derived arrangement, by rank; ``covers`` as in the semilattice."""

    edges: tuple[EdgeId, ...]
    hyperplanes: tuple[tuple[frozenset, EdgeSpaceHyperplane], ...]
    flats: tuple[FlatOfF, ...]
    covers: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.flats)

    def by_rank(self, k: int) -> list[FlatOfF]:
        return [f for f in self.flats if f.rank == k]

    def circuit_sets(self) -> set[frozenset]:
        return {f.circuits for f in self.flats}

    def find(self, circuit_set: Iterable) -> FlatOfF:
        key = frozenset(frozenset(x) for x in circuit_set)
        for f in self.flats:
            if f.circuits == key:
                return f
        raise KeyError("no flat with that circuit set")

    def equation(self, circuit: frozenset) -> EdgeSpaceHyperplane:
        return dict(self.hyperplanes)[frozenset(circuit)]

    def representative(self, flat: FlatOfF) -> Vector:
        """A gain vector whose flat is exactly ``flat``."""
        avoid = [F for X, F in self.hyperplanes if X not in flat.circuits]
        return avoiding_point(flat.subspace, avoid)


def _circuit_order(g: GainGraph):
    def key(labels):
        return tuple(sorted(g.sort_key(x) for x in labels))

    return key


def flats_lattice(c: Configuration, g: GainGraph) -> FlatsLattice:
    arr = derived_arrangement(c, g)
    eqs = [(X, F.normal, F.offset) for X, F in arr]
    semi: LabeledSemilattice = enumerate_flats(len(g.edges), eqs, _circuit_order(g))
    flats = tuple(FlatOfF(f.labels, f.subspace) for f in semi.flats)
    return FlatsLattice(g.edge_ids, tuple(arr), flats, semi.covers)


def avoiding_point(space: AffineSubspace, avoid: Sequence[EdgeSpaceHyperplane]) -> Vector:
    """A point of ``space`` on none of the hyperplanes in ``avoid``.

    Walks the moment curve ``base + t d_1 + t^2 d_2 + ...`` for
    ``t = 0, 1, 2, ...``.  Each hyperplane not containing ``space`` meets the
    curve in at most ``dim`` parameters, so the search is finite.
    """
    if space.is_empty:
        raise ValueError("empty subspace")
    bad = [h for h in avoid if space.within_hyperplane(h.normal, h.offset)]
    if bad:
        raise ValueError("a hyperplane to avoid contains the whole subspace")
    limit = len(avoid) * max(space.dim, 1) + 1
    for t in range(limit + 1):
        p = space.sample([Fraction(t) ** (k + 1) for k in range(space.dim)])
        if not any(h.contains(p) for h in avoid):
            return p
    raise AssertionError("moment-curve search exhausted")  # unreachable by the degree bound


def balance_hyperplane(g: GainGraph, x: Circle | Iterable[EdgeId]) -> EdgeSpaceHyperplane:
    """Coherent gain sum around the circle equals zero."""
    circle = x if isinstance(x, Circle) else circle_from_edges(g, x)
    coeffs = {e: 0 for e in g.edge_ids}
    for e, sign in circle.steps:
        coeffs[e] += sign
    return EdgeSpaceHyperplane.from_form(g.edge_ids, [coeffs[e] for e in g.edge_ids], 0)


@dataclass(frozen=True)
class RestrictedFlat:
    """A flat reachable under a prescribed bias.

    ``over_balanced`` is set when every gain vector of the flat meeting the
    bias also balances some circle outside it.  ``witness`` is a gain vector
    of the flat that realizes exactly ``balanced_circles``.
    """

    flat: FlatOfF
    over_balanced: bool
    balanced_circles: frozenset
    witness: Vector


def _normalize_bias(g: GainGraph, bias: Iterable) -> frozenset:
    out = set()
    for item in bias:
        out.add(item if isinstance(item, Circle) else circle_from_edges(g, item))
    return frozenset(out)


def bias_restricted_flats(c: Configuration, g: GainGraph, bias: Iterable) -> list[RestrictedFlat]:
    """Flats of the derived arrangement reachable with the bias ``bias``.

    Let ``K`` be the gains balancing every circle of the bias.  Each gain
    vector in ``K`` lies in a unique flat, namely the smallest flat
    containing ``A & K`` for the flat ``A`` of that vector; those flats are
    returned.  A flat is over-balanced when ``A & K`` lies inside the balance
    hyperplane of a circle outside the bias.
    """
    ball = _normalize_bias(g, bias)
    if not is_linear_class_of_circles(g, ball):
        raise NotLinearClass("the bias is not closed under theta-graph differences")
    n = len(g.edges)
    circles = all_circles(g)
    balance = {circ: balance_hyperplane(g, circ) for circ in circles}
    for circ in ball:
        balance.setdefault(circ, balance_hyperplane(g, circ))
    K = _cut_all(n, [balance[circ] for circ in ball])
    outside = [circ for circ in circles if circ not in ball]
    for circ in outside:
        h = balance[circ]
        if K.within_hyperplane(h.normal, h.offset):
            raise UnrealizableBias(f"balancing the bias forces circle {circ.name()} to balance")
    lattice = flats_lattice(c, g)
    types: dict[frozenset, AffineSubspace] = {}
    for flat in lattice.flats:
        J = intersect(flat.subspace, K)
        if J.is_empty:
            continue
        cs = frozenset(X for X, F in lattice.hyperplanes if J.within_hyperplane(F.normal, F.offset))
        if cs not in types:
            types[cs] = intersect(lattice.find(cs).subspace, K)
    out = []
    for cs, J in types.items():
        flat = lattice.find(cs)
        balanced = frozenset(circ for circ, h in balance.items() if J.within_hyperplane(h.normal, h.offset))
        over = any(circ not in ball for circ in balanced)
        avoid = [F for X, F in lattice.hyperplanes if X not in cs]
        avoid += [h for circ, h in balance.items() if circ not in balanced]
        out.append(RestrictedFlat(flat, over, balanced, avoiding_point(J, avoid)))
    key = _circuit_order(g)
    return sorted(out, key=lambda r: (r.flat.rank, key(r.flat.circuits)))


@dataclass(frozen=True)
class Centres:
    """Points of space against gain vectors making every hyperplane pass through them."""

    configuration: Configuration
    graph: GainGraph
    basis: frozenset

    def gains_at(self, p: Sequence) -> dict[EdgeId, Fraction]:
        """The gains for which every hyperplane contains ``p``."""
        c, g = self.configuration, self.graph
        return {e: 2 * dot(direction(c, g, e), p) - _offset_constant(c, g, e) for e in g.edge_ids}

    def centre(self, gains: Mapping[EdgeId, object]) -> Vector:
        """The common point of the arrangement with gains ``gains``."""
        c, g = self.configuration, self.graph
        es = g.ordered(self.basis)
        rows = [tuple(2 * x for x in direction(c, g, e)) for e in es]
        rhs = [Fraction(gains[e]) + _offset_constant(c, g, e) for e in es]
        point = solve(rows, rhs).base
        if self.gains_at(point) != {e: Fraction(gains[e]) for e in g.edge_ids}:
            raise NotCentral("those gains do not make the arrangement central")
        return point

    def top(self) -> AffineSubspace:
        """The gain vectors of all central arrangements, inside edge space."""
        d = self.configuration.dim
        origin = self.gains_at([0] * d)
        base = tuple(origin[e] for e in self.graph.edge_ids)
        dirs = []
        for i in range(d):
            unit = [Fraction(int(i == j)) for j in range(d)]
            gi = self.gains_at(unit)
            dirs.append(sub(tuple(gi[e] for e in self.graph.edge_ids), base))
        return AffineSubspace(len(base), base, tuple(dirs))


def centres_correspondence(c: Configuration, g: GainGraph, basis: Iterable[EdgeId]) -> Centres:
    m = matroid_at_infinity(c, g)
    B = frozenset(basis)
    if not is_basis(m, B) or len(B) != c.dim:
        raise NotABasis(f"{g.label(B)} is not a basis of {c.dim} directions")
    arrangement = build_arrangement(c, g)
    rows = [h.normal for h in arrangement.hyperplanes]
    if rows and solve(rows, [h.offset for h in arrangement.hyperplanes]).is_empty:
        raise NotCentral("the arrangement is not central for these gains")
    return Centres(c, g, B)


def _sqrt_lower(q: Fraction) -> Fraction:
    """A positive rational not exceeding ``sqrt(q)`` for ``q > 0``."""
    n, d = q.numerator, q.denominator
    k = 0
    while isqrt(n * d * 4**k) == 0:
        k += 1
    return Fraction(isqrt(n * d * 4**k), d * 2**k)


def perturbation_radius(c: Configuration, g: GainGraph) -> Fraction | None:
    """A rational ``eps`` so that gains within distance ``eps`` stay generic.

    ``eps`` is at most the Euclidean distance from the gains to every
    hyperplane of nongenericity.  Returns ``None`` when there are no such
    hyperplanes, in which case every gain vector is generic.
    """
    arr = derived_arrangement(c, g)
    if not arr:
        return None
    best = None
    for X, F in arr:
        value = F.evaluate(g.gains)
        if value == 0:
            raise NotGeneric(f"gains lie on the hyperplane of {g.label(X)}")
        dist2 = value * value / sum(Fraction(a * a) for a in F.coefficients)
        best = dist2 if best is None else min(best, dist2)
    return _sqrt_lower(best)


def sample_perturbations(g: GainGraph, eps: Fraction, count: int, seed: int = 0) -> list[dict[EdgeId, Fraction]]:
    """Rational gain vectors strictly inside the ball of radius ``eps``.

    The offset is scaled in the 1-norm, which bounds the Euclidean norm.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        delta = [Fraction(rng.randint(-100, 100), 100) for _ in g.edge_ids]
        norm1 = sum(abs(x) for x in delta)
        if norm1 == 0:
            continue
        s = eps * Fraction(rng.randint(1, 99), 100) / norm1
        out.append({e: g.gains[e] + s * x for e, x in zip(g.edge_ids, delta)})
    return out
