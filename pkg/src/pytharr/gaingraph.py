"""Additive gain graphs over the rationals.

Each edge has a preferred orientation ``tail -> head`` and a gain; walking the
edge backwards contributes the negated gain.  Loops are rejected, parallel
edges are fine.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    DuplicateEdge,
    InvalidWalk,
    LoopEdge,
    NotACircle,
    UnbalancedInput,
    UnknownEdge,
    UnknownVertex,
)

Vertex = Hashable
EdgeId = str


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    tail: Vertex
    head: Vertex


@dataclass(frozen=True)
class Circle:
    """A circle traced as ``(edge id, direction)`` steps.

    ``direction`` is ``+1`` when the edge is walked from tail to head and
    ``-1`` otherwise.  Circles built by :func:`circle_from_edges` are in
    canonical form, so equal circles compare equal.
    """

    steps: tuple[tuple[EdgeId, int], ...]

    @property
    def edges(self) -> frozenset:
        return frozenset(e for e, _ in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def name(self) -> str:
        return "".join(e for e, _ in self.steps)


class GainGraph:
    """Vertices, oriented edges in insertion order, and a gain per edge."""

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Edge], gains: Mapping[EdgeId, object] | None = None):
        self.vertices: tuple = tuple(dict.fromkeys(vertices))
        vset = set(self.vertices)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._index: dict[EdgeId, int] = {}
        for i, e in enumerate(self.edges):
            if e.id in self._index:
                raise DuplicateEdge(f"edge id {e.id!r} used twice")
            if e.tail == e.head:
                raise LoopEdge(f"edge {e.id!r} is a loop at {e.tail!r}")
            for v in (e.tail, e.head):
                if v not in vset:
                    raise UnknownVertex(f"edge {e.id!r} uses unknown vertex {v!r}")
            self._index[e.id] = i
        gains = dict(gains or {})
        unknown = set(gains) - set(self._index)
        if unknown:
            raise UnknownEdge(f"gains given for unknown edges {sorted(unknown)}")
        self.gains: dict[EdgeId, Fraction] = {e.id: Fraction(gains.get(e.id, 0)) for e in self.edges}

    @classmethod
    def from_edges(cls, edges: Sequence[tuple], vertices: Iterable[Vertex] | None = None) -> "GainGraph":
        """Build from ``(id, tail, head)`` or ``(id, tail, head, gain)`` tuples."""
        es, gains, vs = [], {}, []
        for item in edges:
            eid, tail, head = item[:3]
            es.append(Edge(eid, tail, head))
            if len(item) > 3:
                gains[eid] = item[3]
            vs.extend([tail, head])
        if vertices is not None:
            vs = list(vertices) + vs
        return cls(vs, es, gains)

    def __repr__(self) -> str:
        body = ", ".join(f"{e.id}:{e.tail}->{e.head}[{self.gains[e.id]}]" for e in self.edges)
        return f"GainGraph({body})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return (set(self.vertices), self.edges, self.gains) == (set(other.vertices), other.edges, other.gains)

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: EdgeId) -> Edge:
        try:
            return self.edges[self._index[eid]]
        except KeyError:
            raise UnknownEdge(f"no edge {eid!r}") from None

    def index(self, eid: EdgeId) -> int:
        if eid not in self._index:
            raise UnknownEdge(f"no edge {eid!r}")
        return self._index[eid]

    def gain(self, eid: EdgeId) -> Fraction:
        self.edge(eid)
        return self.gains[eid]

    def with_gains(self, gains: Mapping[EdgeId, object]) -> "GainGraph":
        merged = dict(self.gains)
        for k, v in gains.items():
            self.edge(k)
            merged[k] = Fraction(v)
        return GainGraph(self.vertices, self.edges, merged)

    def sort_key(self, edge_set: Iterable[EdgeId]) -> tuple[int, ...]:
        """Key that orders edge sets lexicographically by edge position."""
        return tuple(sorted(self.index(e) for e in edge_set))

    def ordered(self, edge_set: Iterable[EdgeId]) -> list[EdgeId]:
        return sorted(edge_set, key=self.index)

    def label(self, edge_set: Iterable[EdgeId], sep: str = "") -> str:
        return sep.join(self.ordered(edge_set))


def walk_gain(g: GainGraph, walk: Sequence) -> Fraction:
    """Signed gain sum along an alternating walk ``[v0, e1, v1, ..., ek, vk]``.

    A walk with a single vertex (or no entries at all) has gain 0.
    """
    if len(walk) <= 1:
        return Fraction(0)
    if len(walk) % 2 == 0:
        raise InvalidWalk("a walk alternates vertices and edges and ends at a vertex")
    total = Fraction(0)
    for i in range(1, len(walk), 2):
        u, eid, v = walk[i - 1], walk[i], walk[i + 1]
        try:
            e = g.edge(eid)
        except UnknownEdge as exc:
            raise InvalidWalk(str(exc)) from None
        if (e.tail, e.head) == (u, v):
            total += g.gains[eid]
        elif (e.head, e.tail) == (u, v):
            total -= g.gains[eid]
        else:
            raise InvalidWalk(f"edge {eid!r} does not join {u!r} and {v!r}")
    return total


def circle_gain(g: GainGraph, circle: Circle) -> Fraction:
    return sum((sign * g.gain(e) for e, sign in circle.steps), Fraction(0))


def _canonical_steps(g: GainGraph, steps: list[tuple[EdgeId, int]]) -> tuple[tuple[EdgeId, int], ...]:
    """Least rotation/reflection of the edge sequence, by edge position."""
    n = len(steps)
    candidates = []
    for seq in (steps, [(e, -s) for e, s in reversed(steps)]):
        for r in range(n):
            rot = seq[r:] + seq[:r]
            candidates.append((tuple(g.index(e) for e, _ in rot), tuple(-s for _, s in rot), tuple(rot)))
    return min(candidates)[2]


def circle_from_edges(g: GainGraph, edge_set: Iterable[EdgeId]) -> Circle:
    """The circle whose edge set is ``edge_set``; raises NotACircle otherwise."""
    es = list(dict.fromkeys(edge_set))
    if not es:
        raise NotACircle("empty edge set")
    for e in es:
        g.edge(e)
    incident: dict[Vertex, list[EdgeId]] = defaultdict(list)
    for eid in es:
        e = g.edge(eid)
        incident[e.tail].append(eid)
        incident[e.head].append(eid)
    if any(len(v) != 2 for v in incident.values()):
        raise NotACircle(f"{es} is not 2-regular")
    start = g.edge(es[0])
    steps = [(start.id, 1)]
    at = start.head
    used = {start.id}
    while at != start.tail:
        nxt = next((x for x in incident[at] if x not in used), None)
        if nxt is None:
            raise NotACircle(f"{es} is not connected")
        e = g.edge(nxt)
        if e.tail == at:
            steps.append((nxt, 1))
            at = e.head
        else:
            steps.append((nxt, -1))
            at = e.tail
        used.add(nxt)
    if len(used) != len(es):
        raise NotACircle(f"{es} is not connected")
    return Circle(_canonical_steps(g, steps))


def all_circles(g: GainGraph) -> list[Circle]:
    """Every circle of ``g`` once, sorted by edge positions.

    For each edge ``e0`` we search for paths back from its head to its tail
    that use only later edges, so each circle is found from its first edge.
    """
    adj: dict[Vertex, list[tuple[int, Vertex]]] = defaultdict(list)
    for i, e in enumerate(g.edges):
        adj[e.tail].append((i, e.head))
        adj[e.head].append((i, e.tail))
    found = []
    for i0, e0 in enumerate(g.edges):
        target = e0.tail
        stack = [(e0.head, [i0], {e0.tail, e0.head})]
        while stack:
            at, path, seen = stack.pop()
            for j, w in adj[at]:
                if j <= i0 or j in path:
                    continue
                if w == target:
                    found.append([g.edges[k].id for k in path + [j]])
                elif w not in seen:
                    stack.append((w, path + [j], seen | {w}))
    circles = {circle_from_edges(g, es) for es in found}
    return sorted(circles, key=lambda c: (g.sort_key(c.edges), c.steps))


def _potentials(g: GainGraph, edge_set: Iterable[EdgeId]):
    """Vertex potentials with ``phi(head) - phi(tail) = gain`` on every edge.

    Returns ``(phi, component)`` or ``None`` when the edge set is unbalanced.
    """
    adj: dict[Vertex, list[tuple[Vertex, Fraction]]] = defaultdict(list)
    for eid in edge_set:
        e = g.edge(eid)
        adj[e.tail].append((e.head, g.gains[eid]))
        adj[e.head].append((e.tail, -g.gains[eid]))
    phi: dict[Vertex, Fraction] = {}
    comp: dict[Vertex, int] = {}
    for n, root in enumerate(g.vertices):
        if root in phi:
            continue
        phi[root] = Fraction(0)
        comp[root] = n
        todo = [root]
        while todo:
            u = todo.pop()
            for w, gain in adj[u]:
                value = phi[u] + gain
                if w not in phi:
                    phi[w] = value
                    comp[w] = comp[root]
                    todo.append(w)
                elif phi[w] != value:
                    return None
    return phi, comp


def is_balanced(g: GainGraph, edge_set: Iterable[EdgeId]) -> bool:
    return _potentials(g, edge_set) is not None


def balance_closure(g: GainGraph, edge_set: Iterable[EdgeId]) -> frozenset:
    """The largest balanced edge set containing ``edge_set`` of the same rank."""
    s = frozenset(edge_set)
    result = _potentials(g, s)
    if result is None:
        raise UnbalancedInput(f"{g.label(s)} is not balanced")
    phi, comp = result
    extra = {
        e.id
        for e in g.edges
        if e.id not in s and comp[e.tail] == comp[e.head] and phi[e.head] - phi[e.tail] == g.gains[e.id]
    }
    return s | frozenset(extra)


def _components_of(g: GainGraph, edge_set: Iterable[EdgeId]) -> dict[Vertex, Vertex]:
    parent: dict[Vertex, Vertex] = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for eid in edge_set:
        e = g.edge(eid)
        parent[find(e.tail)] = find(e.head)
    return {v: find(v) for v in list(parent)}


def cycle_rank(g: GainGraph, edge_set: Iterable[EdgeId]) -> int:
    """Rank in the cycle matroid: vertices touched minus components."""
    comps = _components_of(g, edge_set)
    return len(comps) - len(set(comps.values()))


def is_linear_class_of_circles(g: GainGraph, cls: Iterable[Circle]) -> bool:
    """Closed under symmetric difference of pairs whose union is a theta graph."""
    members = set(cls)
    by_edges = {c.edges for c in members}
    items = list(members)
    for i, c1 in enumerate(items):
        for c2 in items[i + 1 :]:
            if is_theta(g, c1.edges | c2.edges):
                if (c1.edges ^ c2.edges) not in by_edges:
                    return False
    return True


def is_theta(g: GainGraph, edge_set: Iterable[EdgeId]) -> bool:
    """Connected, cyclomatic number two, no vertex of degree above three."""
    es = set(edge_set)
    degree: dict[Vertex, int] = defaultdict(int)
    for eid in es:
        e = g.edge(eid)
        degree[e.tail] += 1
        degree[e.head] += 1
    comps = _components_of(g, es)
    if len(set(comps.values())) != 1:
        return False
    return len(es) - len(degree) + 1 == 2 and max(degree.values()) <= 3
