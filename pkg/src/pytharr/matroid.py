"""Vector matroids, circuits, linear classes and modular ideals.

Subsets of the ground set are handled internally as bit masks (bit ``i`` is
the ``i``-th ground element) so that exhaustive checks over the powerset stay
cheap at desk scale.  The public functions accept and return frozensets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import ElementInBasis, InvalidIdeal, NotABasis, NotACircuit, NotLinearClass, UnknownLabel
from .exactla import rank as matrix_rank
from .exactla import vec


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


class VectorMatroid:
    """The matroid of linear dependence among labelled vectors."""

    def __init__(self, ground: Sequence[Hashable], vectors: Sequence[Sequence] | Mapping):
        self.ground: tuple = tuple(ground)
        if isinstance(vectors, Mapping):
            vectors = [vectors[x] for x in self.ground]
        self.vectors: tuple = tuple(vec(v) for v in vectors)
        if len(self.vectors) != len(self.ground):
            raise ValueError("one vector per ground element is required")
        self._pos = {x: i for i, x in enumerate(self.ground)}
        if len(self._pos) != len(self.ground):
            raise ValueError("ground elements must be distinct")
        self._rank: dict[int, int] = {0: 0}

    def __repr__(self) -> str:
        return f"VectorMatroid({list(self.ground)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorMatroid) and (self.ground, self.vectors) == (other.ground, other.vectors)

    def __hash__(self) -> int:
        return hash((self.ground, self.vectors))

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, s: Iterable[Hashable]) -> int:
        m = 0
        for x in s:
            if x not in self._pos:
                raise UnknownLabel(f"{x!r} is not in the ground set")
            m |= 1 << self._pos[x]
        return m

    def subset(self, m: int) -> frozenset:
        return frozenset(self.ground[i] for i in bits(m))

    def key(self, s: Iterable[Hashable]) -> tuple[int, ...]:
        """Sort key: positions of the elements, ascending."""
        return tuple(sorted(self._pos[x] for x in s))

    def rank_mask(self, m: int) -> int:
        r = self._rank.get(m)
        if r is None:
            r = matrix_rank([self.vectors[i] for i in bits(m)])
            self._rank[m] = r
        return r

    def rank(self, s: Iterable[Hashable] | None = None) -> int:
        return self.rank_mask(self.full_mask if s is None else self.mask(s))

    def is_independent(self, s: Iterable[Hashable]) -> bool:
        m = self.mask(s)
        return self.rank_mask(m) == popcount(m)

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        r = self.rank_mask(self.full_mask)
        found = []
        for size in range(1, min(r + 1, self.size) + 1):
            for combo in combinations(range(self.size), size):
                m = sum(1 << i for i in combo)
                if self.rank_mask(m) == size - 1 and all(self.rank_mask(m & ~(1 << i)) == size - 1 for i in combo):
                    found.append(m)
        return tuple(found)

    @cached_property
    def modular_partners(self) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
        """For each circuit: the circuits forming a modular pair with it,
        each with the circuits contained in the pair's union."""
        cs = self.circuit_masks
        out: dict[int, list] = {c: [] for c in cs}
        for a, b in combinations(cs, 2):
            u = a | b
            if self.rank_mask(u) == popcount(u) - 2:
                inside = tuple(c for c in cs if c & ~u == 0)
                out[a].append((b, inside))
                out[b].append((a, inside))
        return out

    def closure_mask(self, m: int) -> int:
        r = self.rank_mask(m)
        out = m
        for i in range(self.size):
            if not m >> i & 1 and self.rank_mask(m | 1 << i) == r:
                out |= 1 << i
        return out


def circuits(m: VectorMatroid) -> list[frozenset]:
    """All circuits, ordered by the positions of their elements."""
    return sorted((m.subset(c) for c in m.circuit_masks), key=m.key)


def bases(m: VectorMatroid, within: Iterable[Hashable] | None = None) -> list[frozenset]:
    """Bases of the restriction to ``within`` (the whole matroid by default)."""
    s = m.full_mask if within is None else m.mask(within)
    return [m.subset(b) for b in _bases_mask(m, s)]


def _bases_mask(m: VectorMatroid, s: int) -> list[int]:
    r = m.rank_mask(s)
    out = []
    for combo in combinations(list(bits(s)), r):
        b = sum(1 << i for i in combo)
        if m.rank_mask(b) == r:
            out.append(b)
    return out


def is_basis(m: VectorMatroid, b: Iterable[Hashable]) -> bool:
    bm = m.mask(b)
    return m.rank_mask(bm) == popcount(bm) == m.rank_mask(m.full_mask)


def _fundamental_mask(m: VectorMatroid, b: int, x: int) -> int:
    """Circuit inside ``b | {x}`` through ``x``; ``b`` must be independent."""
    out = 1 << x
    size = popcount(b)
    for i in bits(b):
        if m.rank_mask((b & ~(1 << i)) | 1 << x) == size:
            out |= 1 << i
    return out


def fundamental_circuit(m: VectorMatroid, basis: Iterable[Hashable], x: Hashable) -> frozenset:
    b = frozenset(basis)
    if not is_basis(m, b):
        raise NotABasis(f"{sorted(map(str, b))} is not a basis")
    if x in b:
        raise ElementInBasis(f"{x!r} lies in the basis")
    return m.subset(_fundamental_mask(m, m.mask(b), m.mask([x]).bit_length() - 1))


def _check_circuit(m: VectorMatroid, c: Iterable[Hashable]) -> int:
    cm = m.mask(c)
    if cm not in set(m.circuit_masks):
        raise NotACircuit(f"{sorted(map(str, c))} is not a circuit")
    return cm


def is_modular_pair_sets(m: VectorMatroid, s: Iterable[Hashable], t: Iterable[Hashable]) -> bool:
    a, b = m.mask(s), m.mask(t)
    return _modular(m, a, b)


def _modular(m: VectorMatroid, a: int, b: int) -> bool:
    return m.rank_mask(a & b) + m.rank_mask(a | b) == m.rank_mask(a) + m.rank_mask(b)


def is_modular_pair(m: VectorMatroid, x: Iterable[Hashable], y: Iterable[Hashable]) -> bool:
    """Two distinct circuits with ``rk(X | Y) = |X | Y| - 2``."""
    a, b = _check_circuit(m, x), _check_circuit(m, y)
    if a == b:
        raise NotACircuit("a modular pair needs two distinct circuits")
    return _modular_circuits(m, a, b)


def _modular_circuits(m: VectorMatroid, a: int, b: int) -> bool:
    u = a | b
    return m.rank_mask(u) == popcount(u) - 2


def _class_masks(m: VectorMatroid, cls: Iterable[Iterable[Hashable]]) -> set[int]:
    return {_check_circuit(m, c) for c in cls}


def _violations(m: VectorMatroid, members: set[int]) -> set[int]:
    """Circuits forced into the class by some modular pair but missing."""
    missing = set()
    for a in members:
        for b, inside in m.modular_partners[a]:
            if b in members:
                missing.update(c for c in inside if c not in members)
    return missing


def is_linear_class(m: VectorMatroid, cls: Iterable[Iterable[Hashable]]) -> bool:
    return not _violations(m, _class_masks(m, cls))


def _closure_masks(m: VectorMatroid, members: set[int], todo: Iterable[int] | None = None) -> set[int]:
    """Close ``members`` under modular pairs.

    ``todo`` lists the members that may still have unprocessed partners;
    by default all of them.  Every pair is examined when the later of its
    two circuits is taken from the work list.
    """
    members = set(members)
    todo = list(members if todo is None else todo)
    while todo:
        a = todo.pop()
        for b, inside in m.modular_partners[a]:
            if b in members:
                for c in inside:
                    if c not in members:
                        members.add(c)
                        todo.append(c)
    return members


def linear_class_closure(m: VectorMatroid, seed: Iterable[Iterable[Hashable]]) -> frozenset:
    """Smallest linear class of circuits containing ``seed``."""
    return frozenset(m.subset(c) for c in _closure_masks(m, _class_masks(m, seed)))


def all_linear_classes(m: VectorMatroid) -> list[frozenset]:
    """Every linear class, found by closing under one extra circuit at a time."""
    start = frozenset()
    seen = {start}
    todo = [start]
    while todo:
        cur = todo.pop()
        for c in m.circuit_masks:
            if c not in cur:
                nxt = frozenset(_closure_masks(m, set(cur) | {c}, [c]))
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return [frozenset(m.subset(c) for c in cls) for cls in sorted(seen, key=lambda s: (len(s), sorted(s)))]


@dataclass(frozen=True)
class ModularIdeal:
    """An explicit family of subsets of the ground set."""

    members: frozenset

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _independent_masks(m: VectorMatroid) -> set[int]:
    return {s for s in range(m.full_mask + 1) if m.rank_mask(s) == popcount(s)}


def _ideal_from_class_masks(m: VectorMatroid, members: set[int]) -> set[int]:
    out = set()
    for s in range(m.full_mask + 1):
        r = m.rank_mask(s)
        if r == popcount(s):
            out.add(s)
            continue
        for b in _bases_mask(m, s):
            if all(_fundamental_mask(m, b, x) in members for x in bits(s & ~b)):
                out.add(s)
                break
    return out


def modular_ideal_from_linear_class(m: VectorMatroid, cls: Iterable[Iterable[Hashable]]) -> ModularIdeal:
    """Independent sets plus every set with a basis whose fundamental circuits lie in ``cls``."""
    members = _class_masks(m, cls)
    if _violations(m, members):
        raise NotLinearClass("the circuit family is not a linear class")
    fam = _ideal_from_class_masks(m, members)
    if not _is_modular_ideal_masks(m, fam):
        raise InvalidIdeal("construction produced a family violating (MI1)/(MI2)")
    return ModularIdeal(frozenset(m.subset(s) for s in fam))


def _is_modular_ideal_masks(m: VectorMatroid, fam: set[int]) -> bool:
    if 0 not in fam:
        return False
    for s in fam:
        for i in bits(s):
            if s & ~(1 << i) not in fam:
                return False
    for i in range(m.size):
        if m.rank_mask(1 << i) == 1 and (1 << i) not in fam:
            return False
    items = sorted(fam)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if (a | b) not in fam and _modular(m, a, b):
                return False
    return True


def is_modular_ideal(m: VectorMatroid, family: Iterable[Iterable[Hashable]]) -> bool:
    """Nonempty order ideal satisfying non-degeneracy and modular extension."""
    return _is_modular_ideal_masks(m, {m.mask(s) for s in family})


def _ideal_closure_masks(m: VectorMatroid, fam: set[int], todo: Iterable[int] | None = None) -> set[int]:
    """Close ``fam`` downwards, add non-loop singletons, and add unions of modular pairs.

    As for linear classes, ``todo`` names the members whose pairs are
    still unchecked; by default all of them.
    """
    base = {0} | {1 << i for i in range(m.size) if m.rank_mask(1 << i) == 1}
    fam = set(fam)
    todo = list((fam | base) if todo is None else set(todo) | (base - fam))
    fam |= base
    while todo:
        x = todo.pop()
        for i in bits(x):
            y = x & ~(1 << i)
            if y not in fam:
                fam.add(y)
                todo.append(y)
        for y in list(fam):
            u = x | y
            if u not in fam and _modular(m, x, y):
                fam.add(u)
                todo.append(u)
    return fam


def modular_ideal_closure(m: VectorMatroid, family: Iterable[Iterable[Hashable]]) -> ModularIdeal:
    """Smallest modular ideal containing ``family``."""
    fam = _ideal_closure_masks(m, {m.mask(s) for s in family})
    return ModularIdeal(frozenset(m.subset(s) for s in fam))


def all_modular_ideals(m: VectorMatroid) -> list[ModularIdeal]:
    """Every modular ideal, grown from the independent sets one set at a time."""
    start = frozenset(_ideal_closure_masks(m, _independent_masks(m)))
    seen = {start}
    todo = [start]
    while todo:
        cur = todo.pop()
        for s in range(m.full_mask + 1):
            if s in cur or any(s & ~(1 << i) not in cur for i in bits(s)):
                continue
            nxt = frozenset(_ideal_closure_masks(m, set(cur) | {s}, [s]))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    out = [ModularIdeal(frozenset(m.subset(s) for s in fam)) for fam in seen]
    return sorted(out, key=lambda i: (len(i), sorted(sorted(m.key(s)) for s in i)))


def ideal_circuits(m: VectorMatroid, ideal: ModularIdeal) -> frozenset:
    """The circuits that belong to the ideal."""
    return frozenset(c for c in circuits(m) if c in ideal)


def _validated(m: VectorMatroid, ideal: ModularIdeal) -> set[int]:
    fam = {m.mask(s) for s in ideal}
    if not _is_modular_ideal_masks(m, fam):
        raise InvalidIdeal("family is not a modular ideal")
    return fam


def lift_rank_function(m: VectorMatroid, ideal: ModularIdeal) -> Callable[[Iterable[Hashable]], int]:
    """Rank function of the elementary lift: ``r_M(S) + [S not in ideal]``."""
    fam = _validated(m, ideal)

    def rk(s: Iterable[Hashable]) -> int:
        sm = m.mask(s)
        return m.rank_mask(sm) + (0 if sm in fam else 1)

    return rk


def lift_rank(m: VectorMatroid, ideal: ModularIdeal, s: Iterable[Hashable]) -> int:
    return lift_rank_function(m, ideal)(s)


def is_matroid_rank_function(f: Callable[[frozenset], int], ground: Sequence[Hashable]) -> bool:
    """Normalization, unit increase and submodularity over the whole powerset.

    Submodularity is checked in its local form
    ``f(S+a) + f(S+b) >= f(S+a+b) + f(S)``, which together with unit increase
    is equivalent to the global inequality.
    """
    ground = tuple(ground)
    n = len(ground)
    table = [f(frozenset(ground[i] for i in bits(s))) for s in range(1 << n)]
    if table[0] != 0:
        return False
    for s in range(1 << n):
        for i in range(n):
            if s >> i & 1:
                continue
            if table[s | 1 << i] - table[s] not in (0, 1):
                return False
            for j in range(i + 1, n):
                if s >> j & 1:
                    continue
                if table[s | 1 << i] + table[s | 1 << j] < table[s | 1 << i | 1 << j] + table[s]:
                    return False
    return True


def is_semimatroid(central: Iterable[Iterable[Hashable]], rk: Callable[[frozenset], int] | Mapping) -> bool:
    """Check the axioms (S0) to (S5) for central sets and their rank."""
    fam = [frozenset(s) for s in central]
    if not fam:
        return False
    ground = sorted({x for s in fam for x in s}, key=repr)
    pos = {x: i for i, x in enumerate(ground)}
    masks = {sum(1 << pos[x] for x in s): s for s in fam}
    r = {k: (rk[s] if isinstance(rk, Mapping) else rk(s)) for k, s in masks.items()}
    # (S0) nonempty and hereditary
    for s in masks:
        if any(s & ~(1 << i) not in masks for i in bits(s)):
            return False
    # (S1) subcardinal, (S2) isotone on covering pairs
    for s, v in r.items():
        if not 0 <= v <= popcount(s):
            return False
        if any(r[s & ~(1 << i)] > v for i in bits(s)):
            return False
    items = sorted(masks)
    for a in items:
        ra = r[a]
        for b in items:
            rb = r[b]
            meet = r[a & b]
            union = a | b
            if union in r:
                # (S3) semimodular where the union is central
                if meet + r[union] > ra + rb:
                    return False
            elif meet == ra:
                # (S4) same rank as the intersection forces the union central
                return False
            if ra < rb and not any((a | 1 << i) in r for i in bits(b & ~a)):
                # (S5) augmentation
                return False
    return True


def modular_ideal_iff_semimatroid_check(m: VectorMatroid, ideal: Iterable[Iterable[Hashable]]) -> bool:
    """Do the (MI1)/(MI2) test and the (S0)-(S5) test with rank ``r_M`` agree?"""
    fam = [frozenset(s) for s in ideal]
    return is_modular_ideal(m, fam) == is_semimatroid(fam, m.rank)
