"""Bases, sub-bases and neutrosophic topologies on a finite universe."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from . import naming
from .core import NSSet, Triple, Universe, nsset_absolute, nsset_empty
from .errors import (
    EmptyArgumentError,
    MissingUniverseError,
    NotATopologyError,
    ResourceLimitError,
)
from .family import NSFamily

DEFAULT_MAX_SIZE = 20


def _check_input(family: NSFamily, max_size: Optional[int]) -> None:
    if family.universe is None:
        raise MissingUniverseError("the family has no universe; set one before generating")
    cap = DEFAULT_MAX_SIZE if max_size is None else max_size
    if len(family) > cap:
        raise ResourceLimitError(
            f"family has {len(family)} members, above the cap of {cap} "
            f"(2^{len(family)} subfamilies would be enumerated)"
        )


def subfamilies(members: Sequence[NSSet]) -> Iterator[tuple[NSSet, ...]]:
    """Non-empty subfamilies by increasing size, lexicographic by index within a size."""
    for size in range(1, len(members) + 1):
        yield from combinations(members, size)


class _Codec:
    """Order-preserving integer codes for the degrees occurring in some sets.

    Min and max never produce a degree that was not already an input, so
    ranks are enough. Non-membership is stored negated, which turns union
    into an elementwise max and intersection into an elementwise min.
    """

    def __init__(self, sets: Iterable[NSSet]):
        self.values = sorted({d for s in sets for t in s.triples for d in t})
        self.rank = {v: i for i, v in enumerate(self.values)}

    def encode(self, s: NSSet) -> tuple[int, ...]:
        r = self.rank
        return tuple(c for t in s.triples for c in (r[t.membership], r[t.indeterminacy], -r[t.nonmembership]))

    def decode(self, universe: Universe, key: tuple[int, ...], name: Optional[str]) -> NSSet:
        v = self.values
        triples = tuple(Triple(v[key[k]], v[key[k + 1]], v[-key[k + 2]]) for k in range(0, len(key), 3))
        return NSSet(universe, triples, name)


def _join(x, y):
    return tuple(map(max, x, y))


def _meet(x, y):
    return tuple(map(min, x, y))


def _fold(keys: Sequence[tuple], op) -> Iterator[tuple[tuple[int, ...], tuple]]:
    """(index combination, folded key) for every non-empty subfamily, in
    :func:`subfamilies` order. Each fold reuses its prefix from the previous size."""
    n = len(keys)
    level = {(i,): keys[i] for i in range(n)}
    yield from level.items()
    for size in range(2, n + 1):
        following = {}
        for combo in combinations(range(n), size):
            key = op(level[combo[:-1]], keys[combo[-1]])
            following[combo] = key
            yield combo, key
        level = following


def _reidentify(result: NSSet, family: NSFamily) -> NSSet:
    match = family.find(result)
    return result.named(match.name) if match is not None else result


def generate_base(subbasis: NSFamily, max_size: Optional[int] = None) -> NSFamily:
    """All finite intersections of the sub-basis members.

    Each intersection is named after its factors ("A1 ∩ A2") unless it equals
    a sub-basis member, in which case it takes that member's name. Only the
    first occurrence of each set is kept. The absolute set is left to
    :func:`topology_from_base`.
    """
    _check_input(subbasis, max_size)
    members = subbasis.members
    codec = _Codec(members)
    seen = set()
    base = []
    for combo, key in _fold([codec.encode(s) for s in members], _meet):
        if key in seen:
            continue
        seen.add(key)
        name = naming.intersection_name(members[i].name for i in combo)
        base.append(_reidentify(codec.decode(subbasis.universe, key, name), subbasis))
    return NSFamily(base, subbasis.universe)


def topology_from_base(base: NSFamily, max_size: Optional[int] = None) -> NSFamily:
    """∅̃, then every finite union of base members, then the absolute set."""
    _check_input(base, max_size)
    universe = base.universe
    members = base.members
    empty, absolute = nsset_empty(universe), nsset_absolute(universe)
    codec = _Codec([*members, empty, absolute])
    topology = [empty]
    seen = {codec.encode(empty)}
    for combo, key in _fold([codec.encode(s) for s in members], _join):
        if key in seen:
            continue
        seen.add(key)
        name = naming.union_name(members[i].name for i in combo)
        topology.append(_reidentify(codec.decode(universe, key, name), base))
    topology.append(absolute)
    return NSFamily(topology, universe)


def topology_from_subbase(subbasis: NSFamily, max_size: Optional[int] = None) -> NSFamily:
    return topology_from_base(generate_base(subbasis, max_size), max_size)


def _first_open_pair(family: NSFamily, op) -> Optional[tuple[NSSet, NSSet]]:
    members = family.members
    codec = _Codec(members)
    keys = [codec.encode(s) for s in members]
    present = set(keys)
    for i, a in enumerate(keys):
        for j in range(i + 1, len(keys)):
            if op(a, keys[j]) not in present:
                return members[i], members[j]
    return None


def is_union_closed(family: NSFamily) -> bool:
    return _first_open_pair(family, _join) is None


def is_intersection_closed(family: NSFamily) -> bool:
    return _first_open_pair(family, _meet) is None


@dataclass(frozen=True)
class Violation:
    """A failed topology axiom, with the offending pair for closure axioms."""

    condition: str
    pair: Optional[tuple[NSSet, NSSet]] = None

    def describe(self) -> str:
        if self.pair is None:
            return self.condition
        a, b = self.pair
        return f"{self.condition}: {a.name or str(a)}, {b.name or str(b)}"


def topology_violations(family: NSFamily, first_only: bool = False) -> list[Violation]:
    """Failed topology axioms in axiom order: ∅̃, absolute set, union, intersection."""
    if family.universe is None:
        raise MissingUniverseError("the family has no universe")
    universe = family.universe
    found = []
    if nsset_empty(universe) not in family:
        found.append(Violation("missing empty set"))
    if nsset_absolute(universe) not in family:
        found.append(Violation("missing absolute set"))
    closure = (("not closed under union", _join), ("not closed under intersection", _meet))
    for condition, op in closure:
        if first_only and found:
            break
        pair = _first_open_pair(family, op)
        if pair is not None:
            found.append(Violation(condition, pair))
    return found[:1] if first_only else found


def is_neutrosophic_topology(family: NSFamily) -> bool:
    return not topology_violations(family, first_only=True)


def _require_topology(t: NSFamily) -> None:
    if not isinstance(t, NSFamily):
        raise TypeError("the argument is not a neutrosophic family")
    if t.universe is None or not is_neutrosophic_topology(t):
        raise NotATopologyError(f"{t.name or 'family'} is not a neutrosophic topology")


def is_coarser(t1: NSFamily, t2: NSFamily) -> bool:
    _require_topology(t1)
    _require_topology(t2)
    return t1.is_subset(t2)


def is_finer(t1: NSFamily, t2: NSFamily) -> bool:
    return is_coarser(t2, t1)


def intersect_topologies(topologies: Iterable[NSFamily]) -> NSFamily:
    topologies = list(topologies)
    if not topologies:
        raise EmptyArgumentError("no topologies to intersect")
    for t in topologies:
        _require_topology(t)
    result = topologies[0]
    for t in topologies[1:]:
        result = result.intersection(t)
    if not is_neutrosophic_topology(result):
        raise AssertionError("intersection of topologies is not a topology")
    return result


def closure_fixpoint(subbasis: NSFamily, max_size: Optional[int] = None) -> NSFamily:
    """Smallest topology containing ``subbasis``, by saturation.

    Starts from the sub-basis plus ∅̃ and the absolute set and keeps adding
    pairwise unions and intersections until nothing new appears. It shares
    no code with the subset enumeration behind :func:`topology_from_subbase`
    and serves as an oracle for it. Members come out unnamed except for the
    starting sets.
    """
    _check_input(subbasis, max_size)
    cap = DEFAULT_MAX_SIZE if max_size is None else max_size
    limit = 2 ** cap + 1
    universe = subbasis.universe

    def union(x, y):
        return tuple((max(a[0], b[0]), max(a[1], b[1]), min(a[2], b[2])) for a, b in zip(x, y))

    def intersection(x, y):
        return tuple((min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2])) for a, b in zip(x, y))

    start = [*subbasis.members, nsset_empty(universe), nsset_absolute(universe)]
    names = {}
    rows: list[tuple] = []
    for s in start:
        row = tuple(tuple(t) for t in s.triples)
        if row not in names:
            names[row] = s.name
            rows.append(row)
    done = 0
    # rows[:done] are closed under both operations among themselves
    while done < len(rows):
        new = rows[done]
        for other in rows[: done + 1]:
            for row in (union(new, other), intersection(new, other)):
                if row not in names:
                    names[row] = None
                    rows.append(row)
                    if len(rows) > limit:
                        raise ResourceLimitError(f"closure exceeded {limit} members")
        done += 1
    return NSFamily([NSSet(universe, tuple(Triple(*t) for t in row), names[row]) for row in rows], universe)
