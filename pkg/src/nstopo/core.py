"""Single-valued neutrosophic sets over a finite universe.

Degrees are ``fractions.Fraction`` values in [0, 1] so that min, max and
``1 - x`` are exact and equality tests never suffer from rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    EmptyArgumentError,
    InvalidDegreeError,
    InvalidUniverseError,
    UniverseMismatchError,
)
from . import naming

DegreeLike = Union[Fraction, int, str, Decimal]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_degree(value: DegreeLike) -> Fraction:
    """Convert ``value`` to an exact degree, checking it lies in [0, 1].

    Strings are read as decimal literals or ``p/q`` fractions, so ``"0.3"``
    becomes exactly 3/10. Floats are refused: their binary value is almost
    never the decimal the caller meant.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidDegreeError(f"degree must be exact, got {value!r}")
    try:
        degree = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidDegreeError(f"not a degree: {value!r}") from exc
    if not ZERO <= degree <= ONE:
        raise InvalidDegreeError(f"degree {value!r} is outside [0, 1]")
    return degree


@dataclass(frozen=True)
class Triple:
    """(membership, indeterminacy, non-membership) of one element."""

    membership: Fraction
    indeterminacy: Fraction
    nonmembership: Fraction

    def __post_init__(self):
        for f in ("membership", "indeterminacy", "nonmembership"):
            object.__setattr__(self, f, to_degree(getattr(self, f)))

    def __iter__(self):
        return iter((self.membership, self.indeterminacy, self.nonmembership))

    @classmethod
    def of(cls, values: Sequence[DegreeLike]) -> "Triple":
        if len(values) != 3:
            raise InvalidDegreeError(f"a triple needs 3 degrees, got {len(values)}")
        return cls(*values)


EMPTY_TRIPLE = Triple(ZERO, ZERO, ONE)
ABSOLUTE_TRIPLE = Triple(ONE, ONE, ZERO)


@dataclass(frozen=True)
class Universe:
    """Ordered, duplicate-free element labels. The name is display metadata."""

    elements: tuple[str, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        seen = set()
        for e in elements:
            if not e:
                raise InvalidUniverseError("universe labels must be non-empty")
            if e in seen:
                raise InvalidUniverseError(f"duplicate universe label {e!r}")
            seen.add(e)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        return self._index[label]

    def named(self, name: Optional[str]) -> "Universe":
        return replace(self, name=name)


@dataclass(frozen=True)
class NSSet:
    """A neutrosophic set: one triple per universe element, in universe order.

    Equality and hashing look at the universe elements and the triples only;
    ``name`` never matters.
    """

    universe: Universe
    triples: tuple[Triple, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        triples = tuple(t if isinstance(t, Triple) else Triple.of(t) for t in self.triples)
        if len(triples) != len(self.universe):
            raise InvalidUniverseError(
                f"{len(triples)} triples given for a universe of {len(self.universe)} elements"
            )
        object.__setattr__(self, "triples", triples)

    @classmethod
    def from_mapping(
        cls, universe: Universe, values: Mapping[str, Sequence[DegreeLike]], name: Optional[str] = None
    ) -> "NSSet":
        missing = [u for u in universe if u not in values]
        extra = [k for k in values if k not in universe]
        if missing or extra:
            raise InvalidUniverseError(f"labels do not match universe: missing {missing}, unknown {extra}")
        return cls(universe, tuple(Triple.of(values[u]) for u in universe), name)

    def __getitem__(self, label: str) -> Triple:
        return self.triples[self.universe.index(label)]

    def items(self):
        return zip(self.universe.elements, self.triples)

    def named(self, name: Optional[str]) -> "NSSet":
        return replace(self, name=name)

    def __le__(self, other: "NSSet") -> bool:
        return nsset_is_subset(self, other)

    def __ge__(self, other: "NSSet") -> bool:
        return nsset_is_subset(other, self)

    def __or__(self, other: "NSSet") -> "NSSet":
        return nsset_union((self, other))

    def __and__(self, other: "NSSet") -> "NSSet":
        return nsset_intersection((self, other))

    def __invert__(self) -> "NSSet":
        return nsset_complement(self)

    def __str__(self) -> str:
        from .formatting import render_set

        return render_set(self)

    def __format__(self, spec: str) -> str:
        from .formatting import RenderOptions, render_set

        return render_set(self, RenderOptions.from_spec(spec))


def _check_universe(universe: Universe) -> None:
    if len(universe) == 0:
        raise InvalidUniverseError("the universe is empty")


def _common_universe(sets: Sequence[NSSet]) -> Universe:
    universe = sets[0].universe
    for s in sets[1:]:
        if s.universe != universe:
            raise UniverseMismatchError("neutrosophic sets are defined on different universes")
    return universe


def nsset_empty(universe: Universe) -> NSSet:
    _check_universe(universe)
    return NSSet(universe, (EMPTY_TRIPLE,) * len(universe), naming.EMPTY_NAME)


def nsset_absolute(universe: Universe) -> NSSet:
    _check_universe(universe)
    return NSSet(universe, (ABSOLUTE_TRIPLE,) * len(universe), naming.absolute_name(universe.name))


def nsset_is_subset(a: NSSet, b: NSSet) -> bool:
    _common_universe((a, b))
    return all(
        x.membership <= y.membership
        and x.indeterminacy <= y.indeterminacy
        and x.nonmembership >= y.nonmembership
        for x, y in zip(a.triples, b.triples)
    )


def nsset_equals(a: NSSet, b: NSSet) -> bool:
    return nsset_is_subset(a, b) and nsset_is_subset(b, a)


def _combine(sets: Iterable[NSSet], up, down) -> NSSet:
    sets = tuple(sets)
    if not sets:
        raise EmptyArgumentError("cannot combine an empty collection of sets")
    universe = _common_universe(sets)
    columns = zip(*(s.triples for s in sets))
    triples = tuple(
        Triple(
            up(t.membership for t in col),
            up(t.indeterminacy for t in col),
            down(t.nonmembership for t in col),
        )
        for col in (tuple(c) for c in columns)
    )
    return NSSet(universe, triples)


def nsset_union(sets: Iterable[NSSet]) -> NSSet:
    """Pointwise (max, max, min) over a non-empty collection; the result is unnamed."""
    return _combine(sets, max, min)


def nsset_intersection(sets: Iterable[NSSet]) -> NSSet:
    """Pointwise (min, min, max) over a non-empty collection; the result is unnamed."""
    return _combine(sets, min, max)


def nsset_complement(a: NSSet) -> NSSet:
    triples = tuple(Triple(t.nonmembership, ONE - t.indeterminacy, t.membership) for t in a.triples)
    return NSSet(a.universe, triples, naming.complement_name(a.name))
