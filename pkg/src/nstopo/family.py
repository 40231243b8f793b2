"""Families of neutrosophic sets over one universe."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .core import NSSet, Universe, nsset_complement
from .errors import UniverseMismatchError


class NSFamily:
    """Ordered, duplicate-free collection of neutrosophic sets.

    Duplicates (by set equality, names ignored) are dropped on construction
    and the first occurrence wins, so the surviving member keeps its name.
    ``universe`` is None only for an empty family nobody attached one to.
    """

    __slots__ = ("_members", "_keys", "_universe", "_name")

    def __init__(
        self,
        sets: Iterable[NSSet] = (),
        universe: Optional[Universe] = None,
        name: Optional[str] = None,
    ):
        if isinstance(sets, NSFamily):
            universe = universe if universe is not None else sets.universe
            sets = sets.members
        members: list[NSSet] = []
        keys: dict = {}
        for s in sets:
            if not isinstance(s, NSSet):
                raise TypeError(f"family members must be neutrosophic sets, got {type(s).__name__}")
            if universe is None:
                universe = s.universe
            elif s.universe != universe:
                raise UniverseMismatchError("family members are defined on different universes")
            if s.triples not in keys:
                keys[s.triples] = len(members)
                members.append(s)
        self._members = tuple(members)
        self._keys = keys
        self._universe = universe
        self._name = name

    # accessors

    @property
    def members(self) -> tuple[NSSet, ...]:
        return self._members

    @property
    def universe(self) -> Optional[Universe]:
        return self._universe

    @property
    def name(self) -> Optional[str]:
        return self._name

    def get_universe(self) -> Optional[Universe]:
        return self._universe

    def set_universe(self, universe: Universe) -> "NSFamily":
        if not isinstance(universe, Universe):
            raise TypeError("the universe must be a Universe")
        if self._members and universe != self._universe:
            raise UniverseMismatchError("universe differs from the members' universe")
        return NSFamily(self._members, universe, self._name)

    def get_name(self) -> Optional[str]:
        return self._name

    def set_name(self, name: Optional[str]) -> "NSFamily":
        return NSFamily(self._members, self._universe, name)

    named = set_name

    def cardinality(self) -> int:
        return len(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[NSSet]:
        return iter(self._members)

    def __getitem__(self, i: int) -> NSSet:
        return self._members[i]

    def __contains__(self, s: NSSet) -> bool:
        return isinstance(s, NSSet) and s.universe == self._universe and s.triples in self._keys

    def find(self, s: NSSet) -> Optional[NSSet]:
        """The member equal to ``s`` (carrying the member's name), or None."""
        if s not in self:
            return None
        return self._members[self._keys[s.triples]]

    def _compatible(self, other: "NSFamily") -> Optional[Universe]:
        if not isinstance(other, NSFamily):
            raise TypeError("the argument is not a neutrosophic family")
        # A family without a universe is empty and compatible with anything.
        if self._universe is None:
            return other._universe
        if other._universe is None or other._universe == self._universe:
            return self._universe
        raise UniverseMismatchError("the two neutrosophic families are defined on different universes")

    # comparisons

    def is_subset(self, other: "NSFamily") -> bool:
        self._compatible(other)
        return all(s.triples in other._keys for s in self._members)

    def is_superset(self, other: "NSFamily") -> bool:
        return other.is_subset(self)

    def equals(self, other: "NSFamily") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def not_equals(self, other: "NSFamily") -> bool:
        return not self.equals(other)

    def is_disjoint(self, other: "NSFamily") -> bool:
        return self.intersection(other).cardinality() == 0

    def __le__(self, other):
        if not isinstance(other, NSFamily):
            return NotImplemented
        return self.is_subset(other)

    def __ge__(self, other):
        if not isinstance(other, NSFamily):
            return NotImplemented
        return self.is_superset(other)

    def __eq__(self, other):
        if not isinstance(other, NSFamily):
            return NotImplemented
        return self.equals(other)

    def __ne__(self, other):
        if not isinstance(other, NSFamily):
            return NotImplemented
        return not self.equals(other)

    __hash__ = None

    # algebra

    def union(self, other: "NSFamily") -> "NSFamily":
        universe = self._compatible(other)
        return NSFamily(self._members + other._members, universe)

    def intersection(self, other: "NSFamily") -> "NSFamily":
        universe = self._compatible(other)
        return NSFamily([s for s in self._members if s.triples in other._keys], universe)

    def difference(self, other: "NSFamily") -> "NSFamily":
        universe = self._compatible(other)
        return NSFamily([s for s in self._members if s.triples not in other._keys], universe)

    def complement(self) -> "NSFamily":
        return NSFamily([nsset_complement(s) for s in self._members], self._universe)

    __add__ = __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement

    def __str__(self) -> str:
        from .formatting import render_family

        return render_family(self)

    def __format__(self, spec: str) -> str:
        from .formatting import RenderOptions, render_family

        return render_family(self, RenderOptions.from_spec(spec))

    def __repr__(self) -> str:
        names = ", ".join(s.name or "?" for s in self._members)
        return f"NSFamily(name={self._name!r}, members=[{names}])"


def family_new(sets: Iterable[NSSet] = ()) -> NSFamily:
    return NSFamily(sets)
