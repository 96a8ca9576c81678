"""Moving gains between equivalent representations.

Two triples (configuration, gain graph with gains) are equivalent when they
produce the same multiset of hyperplanes.  Gains move along pairs of
parallel edges: the pair is a circuit of the combined matroid at infinity,
and its hyperplane of nongenericity pins the new gain.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .arrangement import Arrangement, build_arrangement
from .errors import DimensionMismatch, ImpossibleCorrespondence, NotACircle, NotACircuit, NotParallel
from .exactla import Vector, add, kernel, primitive_integer, scale, vec
from .gaingraph import Edge, EdgeId, GainGraph, circle_from_edges
from .genericity import forbidden_hyperplane
from .matroid import circuits
from .pointconfig import Configuration, check_covers, direction, matroid_at_infinity


@dataclass(frozen=True)
class Triple:
    configuration: Configuration
    graph: GainGraph

    def __post_init__(self):
        check_covers(self.configuration, self.graph)

    @property
    def dim(self) -> int:
        return self.configuration.dim

    @property
    def gains(self) -> dict[EdgeId, Fraction]:
        return dict(self.graph.gains)

    def arrangement(self) -> Arrangement:
        return build_arrangement(self.configuration, self.graph)

    def with_gains(self, gains: Mapping[EdgeId, object]) -> "Triple":
        return Triple(self.configuration, self.graph.with_gains(gains))


def combine(t1: Triple, t2: Triple) -> Triple:
    """Disjoint union; vertex names and edge ids must not overlap."""
    if t1.dim != t2.dim:
        raise DimensionMismatch(f"dimensions {t1.dim} and {t2.dim}")
    shared_v = set(t1.graph.vertices) & set(t2.graph.vertices)
    shared_e = set(t1.graph.edge_ids) & set(t2.graph.edge_ids)
    if shared_v or shared_e:
        raise ImpossibleCorrespondence(f"shared vertex names {sorted(map(str, shared_v))} or edge ids {sorted(shared_e)}")
    points = {**t1.configuration.points, **t2.configuration.points}
    config = Configuration(t1.dim, points, allow_coincident=True)
    graph = GainGraph(
        t1.graph.vertices + t2.graph.vertices,
        t1.graph.edges + t2.graph.edges,
        {**t1.graph.gains, **t2.graph.gains},
    )
    return Triple(config, graph)


def transported_gain(combined: Triple, e: EdgeId, e2: EdgeId, g_e) -> Fraction:
    """The gain on ``e2`` whose hyperplane coincides with that of ``e`` at gain ``g_e``.

    Solves the equation of ``F_{e, e2}`` for the gain of ``e2``.
    """
    c, g = combined.configuration, combined.graph
    if e == e2:
        g.edge(e)
        return Fraction(g_e)
    pair = GainGraph(g.vertices, [g.edge(e), g.edge(e2)])
    m = matroid_at_infinity(c, pair)
    if frozenset([e, e2]) not in circuits(m):
        raise NotParallel(f"edges {e!r} and {e2!r} do not have parallel directions")
    F = forbidden_hyperplane(c, pair, [e, e2])
    a, b = F.coefficient(e), F.coefficient(e2)
    return -(a * Fraction(g_e) + F.constant) / b


def _hyperplane_multiset(t: Triple) -> Counter:
    return Counter(h.canonical() for h in t.arrangement().hyperplanes)


def are_equivalent(t1: Triple, t2: Triple) -> bool:
    """Same hyperplanes with the same multiplicities."""
    if t1.dim != t2.dim:
        raise DimensionMismatch(f"dimensions {t1.dim} and {t2.dim}")
    return _hyperplane_multiset(t1) == _hyperplane_multiset(t2)


_TAG = "→"


def transport_to(t: Triple, target: Configuration, endpoints: Mapping[EdgeId, tuple[Hashable, Hashable]]) -> Triple:
    """Re-seat every edge of ``t`` on new endpoints in ``target``.

    ``endpoints`` maps each edge id to its new ``(tail, head)``; the new edge
    keeps its id and receives the transported gain.
    """
    g = t.graph
    if set(endpoints) != set(g.edge_ids):
        raise ImpossibleCorrespondence("the correspondence must cover exactly the edges of the graph")
    new_edges = [Edge(e, *endpoints[e]) for e in g.edge_ids]
    shape = GainGraph(list(target.points), new_edges)
    check_covers(target, shape)
    # Tag the copy so names cannot clash inside the disjoint union.
    tagged_points = {(_TAG, v): p for v, p in target.points.items()}
    tagged_edges = [Edge(e + _TAG, (_TAG, a), (_TAG, b)) for e, (a, b) in ((e, endpoints[e]) for e in g.edge_ids)]
    tagged = Triple(Configuration(target.dim, tagged_points), GainGraph(list(tagged_points), tagged_edges))
    both = combine(t, tagged)
    gains = {e: transported_gain(both, e, e + _TAG, g.gains[e]) for e in g.edge_ids}
    return Triple(target, shape.with_gains(gains))


def _direction_class(v: Sequence) -> tuple[int, ...]:
    ints = primitive_integer(v)
    if next(x for x in ints if x != 0) < 0:
        ints = tuple(-x for x in ints)
    return ints


def _is_parallel(u: Sequence, v: Sequence) -> bool:
    return _direction_class(u) == _direction_class(v)


def parallelism_canonicalization(t: Triple) -> Triple:
    """An equivalent triple in which parallel hyperplanes come from graph-parallel edges.

    Edges are grouped by direction class.  Points are placed greedily: a
    class reuses an existing pair of new points whose difference has its
    direction, otherwise it gets a fresh point ``root + k v`` with the
    smallest ``k = 1, 2, ...`` avoiding the points already placed.  In
    dimension one the result is the normal form on the points ``0`` and ``1``.
    """
    c, g = t.configuration, t.graph
    if not g.edges:
        return t
    if c.dim == 1:
        target = Configuration(1, {"0": (0,), "1": (1,)})
        return transport_to(t, target, {e: ("0", "1") for e in g.edge_ids})
    classes: dict[tuple[int, ...], list[EdgeId]] = {}
    for e in g.edge_ids:
        classes.setdefault(_direction_class(direction(c, g, e)), []).append(e)
    root = c.point(g.edges[0].tail)
    placed: list[Vector] = [root]
    endpoints: dict[EdgeId, tuple[str, str]] = {}
    for members in classes.values():
        v = direction(c, g, members[0])
        pair = None
        for i, p in enumerate(placed):
            for j, q in enumerate(placed):
                if i < j and _is_parallel(tuple(b - a for a, b in zip(p, q)), v):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            k = 1
            while add(root, scale(k, v)) in placed:
                k += 1
            placed.append(add(root, scale(k, v)))
            pair = (0, len(placed) - 1)
        for e in members:
            endpoints[e] = (f"p{pair[0]}", f"p{pair[1]}")
    target = Configuration(c.dim, {f"p{i}": p for i, p in enumerate(placed)})
    return transport_to(t, target, endpoints)


def _fresh_names(existing: Iterable, count: int, stem: str) -> list[str]:
    taken = {str(v) for v in existing}
    out = []
    i = 0
    while len(out) < count:
        name = f"{stem}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def realize_circuit_as_circle(t: Triple, x: Iterable[EdgeId]) -> Triple:
    """Re-seat the edges of the circuit ``x`` on new points so they form a circle.

    With the dependence ``sum r_i q_{e_i} = 0`` the new points are the
    partial sums ``q'_{i+1} = q'_i + r_i q_{e_i}``; since no proper subfamily
    is dependent these points are distinct.  Other edges keep their points.
    """
    c, g = t.configuration, t.graph
    X = frozenset(x)
    m = matroid_at_infinity(c, g)
    if X not in set(circuits(m)):
        raise NotACircuit(f"{g.label(X)} is not a circuit of the matroid at infinity")
    try:
        circle_from_edges(g, X)
        return t
    except NotACircle:
        pass
    es = g.ordered(X)
    dirs = [direction(c, g, e) for e in es]
    columns = [tuple(d[k] for d in dirs) for k in range(c.dim)]
    (r,) = kernel(columns, len(es))
    steps = [scale(ri, d) for ri, d in zip(r, dirs)]
    names = _fresh_names(g.vertices, len(es), "w")
    existing = set(c.points.values())
    shift = 0
    while True:
        start = tuple(Fraction(shift) for _ in range(c.dim))
        pts = [start]
        for s in steps[:-1]:
            pts.append(add(pts[-1], s))
        if not existing & set(pts):
            break
        shift += 1
    points = dict(c.points)
    points.update(zip(names, pts))
    endpoints = {e.id: (e.tail, e.head) for e in g.edges}
    for i, e in enumerate(es):
        endpoints[e] = (names[i], names[(i + 1) % len(es)])
    return transport_to(t, Configuration(c.dim, points), endpoints)


def tree_representation(t: Triple, tree: Mapping[EdgeId, tuple[Hashable, Hashable]]) -> Triple:
    """Move every edge onto the tree ``tree`` (edge id to ``(tail, head)``).

    The root goes to the origin; each further point is ``q + k v`` for the
    edge direction ``v`` and the least ``k = 1, 2, ...`` giving a new point.
    """
    c, g = t.configuration, t.graph
    if set(tree) != set(g.edge_ids):
        raise ImpossibleCorrespondence("tree edges must correspond one-to-one with graph edges")
    vertices = list(dict.fromkeys(v for e in g.edge_ids for v in tree[e]))
    if len(vertices) != len(tree) + 1 and tree:
        raise ImpossibleCorrespondence("the shape is not a tree")
    if all(tree[e.id] == (e.tail, e.head) for e in g.edges) and len(g.vertices) == len(vertices):
        return t
    if not tree:
        return t
    placed: dict[Hashable, Vector] = {vertices[0]: vec([0] * c.dim)}
    pending = list(g.edge_ids)
    while pending:
        progress = False
        for e in list(pending):
            a, b = tree[e]
            if a in placed and b in placed:
                raise ImpossibleCorrespondence("the shape contains a cycle")
            if a not in placed and b not in placed:
                continue
            v = direction(c, g, e)
            base, sign, new = (placed[a], 1, b) if a in placed else (placed[b], -1, a)
            k = 1
            while add(base, scale(sign * k, v)) in placed.values():
                k += 1
            placed[new] = add(base, scale(sign * k, v))
            pending.remove(e)
            progress = True
        if not progress:
            raise ImpossibleCorrespondence("the shape is disconnected")
    return transport_to(t, Configuration(c.dim, placed), tree)
