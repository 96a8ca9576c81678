"""Named instances used throughout the tests, scripts and instance files."""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations

from .gaingraph import GainGraph
from .pointconfig import Configuration
from .transport import Triple

# Circuits of the theta instance and their one-letter names.
THETA_LETTERS = {
    "abc": "S",
    "abs": "T",
    "acs": "U",
    "at": "V",
    "bcs": "W",
    "cst": "X",
    "bst": "Y",
    "bct": "Z",
}

GENERIC_THETA_GAINS = {"a": -6, "b": 0, "c": 2, "s": 2, "t": 6}


def theta_triple(gains=None) -> Triple:
    """Four points, five edges: a theta graph with the parallel pair a, t."""
    config = Configuration(2, {1: (0, 0), 2: (4, 0), 3: (3, 2), 4: (1, 2)})
    graph = GainGraph.from_edges([("a", 1, 2), ("b", 1, 3), ("c", 1, 4), ("s", 2, 3), ("t", 3, 4)])
    return Triple(config, graph.with_gains(gains or {}))


def theta_pair_triple(gains=None) -> Triple:
    """The theta instance with edges named by their endpoints, e.g. ``"12"``."""
    config = Configuration(2, {"1": (0, 0), "2": (4, 0), "3": (3, 2), "4": (1, 2)})
    graph = GainGraph.from_edges([("12", "1", "2"), ("13", "1", "3"), ("14", "1", "4"), ("23", "2", "3"), ("34", "3", "4")])
    return Triple(config, graph.with_gains(gains or {}))


def theta_rework_target() -> tuple[Configuration, dict]:
    """Four new points and where each theta edge goes on them."""
    config = Configuration(2, {"5": (1, 0), "6": (2, 2), "7": (3, 0), "8": (4, 2)})
    endpoints = {"12": ("5", "7"), "13": ("5", "8"), "14": ("5", "6"), "23": ("6", "7"), "34": ("5", "7")}
    return config, endpoints


def theta_rework_combined(gains=None) -> Triple:
    """Theta graph together with the reworked graph on the points 5 to 8.

    The two parallel edges from 5 to 7 are ``57`` (partner of ``34``) and
    ``57'`` (partner of ``12``).
    """
    config = Configuration(
        2,
        {"1": (0, 0), "2": (4, 0), "3": (3, 2), "4": (1, 2), "5": (1, 0), "6": (2, 2), "7": (3, 0), "8": (4, 2)},
    )
    graph = GainGraph.from_edges(
        [
            ("12", "1", "2"),
            ("13", "1", "3"),
            ("14", "1", "4"),
            ("23", "2", "3"),
            ("34", "3", "4"),
            ("56", "5", "6"),
            ("57", "5", "7"),
            ("57'", "5", "7"),
            ("58", "5", "8"),
            ("67", "6", "7"),
        ]
    )
    return Triple(config, graph.with_gains(gains or {}))


def triple_point_triple() -> Triple:
    """Five lines in the plane, three of them concurrent."""
    config = Configuration(2, {1: (0, 0), 2: (2, 3), 3: (-1, 7), 4: (9, 2)})
    graph = GainGraph.from_edges(
        [("a", 1, 2, 0), ("b", 1, 3, -3), ("c", 1, 4, -2), ("d", 2, 4, -6), ("e", 3, 4, 1)]
    )
    return Triple(config, graph)


PAPPUS_POINTS = {1: (4, 0), 2: (0, 1), 3: (2, 1), 4: (3, 1), 5: (5, 1), 6: (1, 2), 7: (1, 3), 8: (4, 3)}
PAPPUS_EDGES = ["14", "15", "23", "26", "28", "36", "45", "57", "78"]


def pappus_triple() -> Triple:
    """Eight points and nine edges whose zero-gain arrangement is the Pappus configuration."""
    config = Configuration(2, {str(k): v for k, v in PAPPUS_POINTS.items()})
    graph = GainGraph.from_edges([(e, e[0], e[1], 0) for e in PAPPUS_EDGES])
    return Triple(config, graph)


def pappus_reduced_triple(shift=(0, 0)) -> Triple:
    """Four points carrying the Pappus arrangement on a multigraph.

    With ``shift = (0, 0)`` the points are symmetric about the origin and
    give a translate of the eight-point arrangement.  The shift
    ``(5/2, 1)`` reproduces the eight-point arrangement exactly.
    """
    base = {"1": (Q(-5, 2), Q(0)), "2": (Q(5, 2), Q(0)), "3": (Q(0), Q(5, 4)), "4": (Q(0), Q(-5, 2))}
    dx, dy = Q(shift[0]), Q(shift[1])
    config = Configuration(2, {k: (x + dx, y + dy) for k, (x, y) in base.items()})
    graph = GainGraph.from_edges(
        [
            ("12", "1", "2", 0),
            ("12'", "1", "2", -15),
            ("12''", "1", "2", 15),
            ("13", "1", "3", Q(75, 16)),
            ("14", "1", "4", Q(15, 2)),
            ("14'", "1", "4", Q(-15, 2)),
            ("23", "2", "3", Q(75, 16)),
            ("24", "2", "4", Q(-15, 2)),
            ("24'", "2", "4", Q(15, 2)),
        ]
    )
    return Triple(config, graph)


NON_PAPPUS_LINES = ["136", "178", "239", "258", "267", "348", "456", "479"]


def non_pappus_family() -> list[frozenset]:
    """All sets of size at most two on 1..9 together with the eight lines."""
    ground = range(1, 10)
    fam = [frozenset(s) for k in range(3) for s in combinations(ground, k)]
    fam += [frozenset(int(ch) for ch in line) for line in NON_PAPPUS_LINES]
    return fam


def rank_two_uniform_vectors(n: int = 9) -> dict[int, tuple]:
    """``n`` pairwise independent plane vectors ``(t, 1)``."""
    return {i: (i, 1) for i in range(1, n + 1)}


def sigma_graph() -> GainGraph:
    """Five vertices, seven edges: the graph of the closure counterexample."""
    return GainGraph.from_edges(
        [("a", 1, 2), ("b", 1, 3), ("c", 1, 4), ("d", 2, 3), ("e", 2, 5), ("f", 3, 4), ("g", 4, 5)]
    )


def random_triple(rng, dim: int, max_points: int = 6, max_edges: int = 8, span: int = 3) -> Triple:
    """A small random triple with integer or half-integer data.

    About half the gains are chosen so that their hyperplanes pass through a
    common random point, so central subsets and balanced circles show up
    often.  The rest are small random rationals.
    """
    n = rng.randint(2, max_points)
    pool = [(x, y) for x in range(-span, span + 1) for y in (1, 2)]
    points: dict[int, tuple] = {}
    while len(points) < n:
        p = tuple(Q(*rng.choice(pool)) for _ in range(dim))
        if p not in points.values():
            points[len(points) + 1] = p
    config = Configuration(dim, points)
    centre = tuple(Q(rng.randint(-span, span), rng.choice((1, 2))) for _ in range(dim))
    edges = []
    for i in range(rng.randint(1, max_edges)):
        u, v = rng.sample(sorted(points), 2)
        qu, qv = points[u], points[v]
        if rng.random() < 0.5:
            gain = sum(2 * (b - a) * x for a, b, x in zip(qu, qv, centre)) - sum(b * b - a * a for a, b in zip(qu, qv))
        else:
            gain = Q(rng.randint(-4, 4), rng.choice((1, 2)))
        edges.append((f"e{i}", u, v, gain))
    return Triple(config, GainGraph.from_edges(edges, vertices=sorted(points)))
