"""Recompute the theta reference data with the independent test oracles.

Prints the rank-2 flats of the derived arrangement of the theta instance,
found by brute force: for every set of circuits, solve the F_X equations by
minor ranks and keep the sets that are exactly the circuits vanishing on
their solution space.  Every equation of this instance has constant term 0,
so a flat is labelled by the equations in the row span of its own.  The
output is what tests/theta_data.py freezes.  Takes about a minute.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import minor_rank  # noqa: E402
from pytharr.catalog import THETA_LETTERS, theta_triple  # noqa: E402
from pytharr.genericity import derived_arrangement  # noqa: E402

EDGES = ("a", "b", "c", "s", "t")


def main() -> None:
    t = theta_triple()
    arr = derived_arrangement(t.configuration, t.graph)
    names = [THETA_LETTERS["".join(sorted(X, key=EDGES.index))] for X, _ in arr]
    assert all(F.constant == 0 for _, F in arr)
    rows = [list(F.coefficients) for _, F in arr]
    flats = set()
    for k in range(len(arr) + 1):
        for chosen in combinations(range(len(arr)), k):
            base = [rows[i] for i in chosen]
            r = minor_rank(base) if base else 0
            # the flat of ``chosen`` is labelled by every equation in its row span
            label = frozenset(i for i in range(len(arr)) if (minor_rank(base + [rows[i]]) if base else 1) == r)
            flats.add((r, "".join(sorted(names[i] for i in label))))
    for r, name in sorted(flats, key=lambda x: (x[0], x[1])):
        print(r, name or "(bottom)")
    print(len(flats), "flats")


if __name__ == "__main__":
    main()
