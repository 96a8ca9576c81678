"""Reference-point configurations and the matroid at infinity."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .errors import DegenerateEdge, DimensionMismatch, DuplicatePoint, MissingPoint
from .exactla import Vector, rank, sub, vec
from .gaingraph import Edge, EdgeId, GainGraph
from .matroid import VectorMatroid


@dataclass(frozen=True)
class Configuration:
    """Points ``q_v`` in ``Q^dim`` indexed by vertex.

    Points must be pairwise distinct.  ``allow_coincident`` relaxes this for
    the disjoint union of two configurations used while transporting gains,
    where a point of one side may sit on a point of the other.
    """

    dim: int
    points: Mapping[Hashable, Vector]
    allow_coincident: bool = field(default=False, compare=False)

    def __post_init__(self):
        pts = {v: vec(p) for v, p in self.points.items()}
        for v, p in pts.items():
            if len(p) != self.dim:
                raise DimensionMismatch(f"point {v!r} has {len(p)} coordinates, expected {self.dim}")
        if not self.allow_coincident:
            seen: dict[Vector, Hashable] = {}
            for v, p in pts.items():
                if p in seen:
                    raise DuplicatePoint(f"vertices {seen[p]!r} and {v!r} share the point {p}")
                seen[p] = v
        object.__setattr__(self, "points", pts)

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.points.items(), key=repr))))

    def point(self, v: Hashable) -> Vector:
        try:
            return self.points[v]
        except KeyError:
            raise MissingPoint(f"vertex {v!r} has no reference point") from None

    def __contains__(self, v) -> bool:
        return v in self.points


def _edge(g: GainGraph, e) -> Edge:
    if isinstance(e, Edge):
        return e
    return g.edge(e)


def direction(c: Configuration, g: GainGraph, e: EdgeId | Edge) -> Vector:
    """``q_head - q_tail``."""
    edge = _edge(g, e)
    d = sub(c.point(edge.head), c.point(edge.tail))
    if all(x == 0 for x in d):
        raise DegenerateEdge(f"edge {edge.id!r} joins two copies of the same point")
    return d


def directions(c: Configuration, g: GainGraph) -> dict[EdgeId, Vector]:
    return {e.id: direction(c, g, e) for e in g.edges}


def check_covers(c: Configuration, g: GainGraph) -> None:
    for v in g.vertices:
        c.point(v)


def matroid_at_infinity(c: Configuration, g: GainGraph) -> VectorMatroid:
    check_covers(c, g)
    return VectorMatroid(g.edge_ids, tuple(direction(c, g, e) for e in g.edges))


def _span_rank(points: list[Vector]) -> int:
    if not points:
        return -1
    return rank([sub(p, points[0]) for p in points[1:]])


def is_affine_position(c: Configuration, vertices: Iterable[Hashable] | None = None) -> bool:
    """Every ``n <= d+1`` of the chosen points span an ``(n-1)``-flat."""
    vs = list(c.points) if vertices is None else list(vertices)
    pts = [c.point(v) for v in vs]
    for n in range(2, min(len(pts), c.dim + 1) + 1):
        for sub_pts in combinations(pts, n):
            if _span_rank(list(sub_pts)) != n - 1:
                return False
    return True


def _forests(vertices: list, size: int):
    """Edge sets of the complete graph on ``vertices`` that form forests."""
    pairs = list(combinations(range(len(vertices)), 2))
    for chosen in combinations(pairs, size):
        parent = list(range(len(vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in chosen:
            ri, rj = find(i), find(j)
            if ri == rj:
                ok = False
                break
            parent[ri] = rj
        if ok:
            yield chosen


def is_ideal_position(c: Configuration) -> bool:
    """Every ``d``-edge forest on the points has independent directions.

    Requires at least ``d + 1`` points.  The search runs over all forests of
    the complete graph, which is exponential; fine for a dozen points.
    """
    pts = list(c.points.values())
    if len(pts) < c.dim + 1:
        return False
    for forest in _forests(pts, c.dim):
        if rank([sub(pts[j], pts[i]) for i, j in forest]) < c.dim:
            return False
    return True


def affinographic_configuration(g: GainGraph) -> Configuration:
    """``q_v = indicator(v) / 2`` in dimension ``|V|``."""
    n = len(g.vertices)
    half = Fraction(1, 2)
    return Configuration(
        n, {v: tuple(half if j == i else Fraction(0) for j in range(n)) for i, v in enumerate(g.vertices)}
    )

