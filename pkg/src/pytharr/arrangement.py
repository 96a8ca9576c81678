"""Pythagorean arrangements and their labelled intersection semilattices.

Edge ``e = u -> v`` with gain ``g(e)`` gives the hyperplane

    2 (q_v - q_u) . x = g(e) + |q_v|^2 - |q_u|^2,

the points whose squared distances to ``q_u`` and ``q_v`` differ by ``g(e)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import NotCentral, UnknownLabel
from .exactla import AffineSubspace, Vector, dot, primitive_integer, scale, solve
from .gaingraph import EdgeId, GainGraph
from .matroid import circuits
from .pointconfig import Configuration, check_covers, direction, matroid_at_infinity


@dataclass(frozen=True)
class Hyperplane:
    label: Hashable
    normal: Vector
    offset: Fraction

    def contains(self, x: Sequence) -> bool:
        return dot(self.normal, x) == self.offset

    def canonical(self) -> tuple[tuple[int, ...], int]:
        """Primitive integer ``(normal, offset)`` with a positive leading normal entry."""
        ints = primitive_integer(list(self.normal) + [self.offset])
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = tuple(-v for v in ints)
        return ints[:-1], ints[-1]


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    @property
    def labels(self) -> tuple:
        return tuple(h.label for h in self.hyperplanes)

    def hyperplane(self, label) -> Hyperplane:
        for h in self.hyperplanes:
            if h.label == label:
                return h
        raise UnknownLabel(f"no hyperplane labelled {label!r}")

    def order_key(self, labels: Iterable) -> tuple[int, ...]:
        pos = {h.label: i for i, h in enumerate(self.hyperplanes)}
        return tuple(sorted(pos[x] for x in labels))


def edge_hyperplane(c: Configuration, g: GainGraph, eid: EdgeId) -> Hyperplane:
    e = g.edge(eid)
    qu, qv = c.point(e.tail), c.point(e.head)
    normal = scale(2, direction(c, g, e))
    offset = g.gains[eid] + dot(qv, qv) - dot(qu, qu)
    return Hyperplane(eid, normal, offset)


def build_arrangement(c: Configuration, g: GainGraph) -> Arrangement:
    check_covers(c, g)
    return Arrangement(c.dim, tuple(edge_hyperplane(c, g, e.id) for e in g.edges))


def _system(a: Arrangement, labels: Iterable) -> tuple[list, list]:
    hs = [a.hyperplane(x) for x in labels]
    return [h.normal for h in hs], [h.offset for h in hs]


def flat_of(a: Arrangement, s: Iterable) -> AffineSubspace:
    """Common intersection of the hyperplanes in ``s`` (the whole space for ``s`` empty)."""
    s = list(s)
    if not s:
        return AffineSubspace.whole(a.dim)
    rows, rhs = _system(a, s)
    sol = solve(rows, rhs)
    if sol.is_empty:
        raise NotCentral(f"{s} has empty intersection")
    return sol


def is_central(a: Arrangement, s: Iterable) -> bool:
    s = list(s)
    if not s:
        return True
    rows, rhs = _system(a, s)
    return not solve(rows, rhs).is_empty


@dataclass(frozen=True)
class Flat:
    """An intersection flat with the set of all hyperplanes containing it."""

    subspace: AffineSubspace
    labels: frozenset

    @property
    def codim(self) -> int:
        return self.subspace.codim

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass(frozen=True)
class LabeledSemilattice:
    """Flats ordered by reverse inclusion, sorted by codimension then label.

    ``covers`` holds index pairs ``(i, j)`` with flat ``j`` covering flat ``i``.
    """

    ambient: int
    flats: tuple[Flat, ...]
    covers: tuple[tuple[int, int], ...]

    def by_codim(self, k: int) -> list[Flat]:
        return [f for f in self.flats if f.codim == k]

    def label_sets(self) -> set[frozenset]:
        return {f.labels for f in self.flats}

    def atoms(self) -> list[Flat]:
        return self.by_codim(1)

    def points(self) -> list[Flat]:
        """Zero-dimensional flats."""
        return [f for f in self.flats if f.dim == 0]

    def signature(self) -> set[tuple[frozenset, int]]:
        """Labels with codimension: equal signatures mean isomorphic labelled semilattices."""
        return {(f.labels, f.codim) for f in self.flats}


def enumerate_flats(ambient: int, equations: Sequence[tuple[Hashable, Vector, Fraction]], order_key=None) -> LabeledSemilattice:
    """All nonempty intersections of the hyperplanes ``normal . x = offset``.

    Flats are grown one hyperplane at a time from the whole space and
    deduplicated by their full label set, which is recomputed as every
    hyperplane containing the new flat.
    """
    if order_key is None:
        pos = {lab: i for i, (lab, _, _) in enumerate(equations)}

        def order_key(labels):
            return tuple(sorted(pos[x] for x in labels))

    def labels_of(sub: AffineSubspace, known: frozenset = frozenset()) -> frozenset:
        return known | {lab for lab, n, o in equations if lab not in known and sub.within_hyperplane(n, o)}

    whole = AffineSubspace.whole(ambient)
    found: dict[frozenset, AffineSubspace] = {labels_of(whole): whole}
    frontier = list(found.items())
    while frontier:
        nxt = []
        for labs, sub in frontier:
            # A hyperplane already containing one child of ``sub`` cuts out that same child.
            covered = set(labs)
            for lab, n, o in equations:
                if lab in covered:
                    continue
                cut = sub.cut(n, o)
                if cut.is_empty:
                    continue
                key = labels_of(cut, labs | {lab})
                covered |= key
                if key not in found:
                    found[key] = cut
                    nxt.append((key, cut))
        frontier = nxt
    flats = sorted((Flat(sub, labs) for labs, sub in found.items()), key=lambda f: (f.codim, order_key(f.labels)))
    covers = []
    for i, f in enumerate(flats):
        for j, h in enumerate(flats):
            if h.codim == f.codim + 1 and f.labels < h.labels:
                covers.append((i, j))
    return LabeledSemilattice(ambient, tuple(flats), tuple(covers))


def intersection_semilattice(a: Arrangement) -> LabeledSemilattice:
    eqs = [(h.label, h.normal, h.offset) for h in a.hyperplanes]
    return enumerate_flats(a.dim, eqs, a.order_key)


def central_sets(a: Arrangement) -> dict[frozenset, int]:
    """Every central edge subset with the codimension of its flat."""
    out: dict[frozenset, int] = {frozenset(): 0}
    labels = a.labels
    # Central sets are hereditary, so grow them level by level.
    level = [frozenset()]
    while level:
        nxt = set()
        for s in level:
            for x in labels:
                if x in s:
                    continue
                t = s | {x}
                if t in out or t in nxt:
                    continue
                if all(t - {y} in out for y in t):
                    rows, rhs = _system(a, t)
                    sol = solve(rows, rhs)
                    if not sol.is_empty:
                        out[t] = sol.codim
                        nxt.add(t)
        level = list(nxt)
    return out


def central_circuit_criterion(a: Arrangement, c: Configuration, g: GainGraph) -> bool:
    """For every edge subset: central exactly when all its circuits are central."""
    circs = circuits(matroid_at_infinity(c, g))
    central_circs = [x for x in circs if is_central(a, x)]
    for size in range(len(a.labels) + 1):
        for s in combinations(a.labels, size):
            s = frozenset(s)
            inside = [x for x in circs if x <= s]
            if is_central(a, s) != all(x in central_circs for x in inside):
                return False
    return True
