"""Literal parsers and the ``.nst`` declaration script.

Script grammar, one declaration per line (``#`` starts a comment)::

    universe U = a, b, c
    nset A1 over U = (0.4,0.4,0.3), (0.1,0.1,0.1), (0.2,0.2,0.2)
    nset A2 over U = < a/(0.1,0.2,0.9), b/(0.9,0.1,0.3), c/(0.5,0.3,0.4) >
    family L = { A1, A2 }
    family E = {} over U

Declared identifiers become display names. Errors carry 1-based line and
column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .core import NSSet, Triple, Universe, to_degree
from .errors import InvalidDegreeError, ParseError
from .family import NSFamily
from .formatting import render_degree

KEYWORDS = ("universe", "nset", "family", "over")

_DEGREE = re.compile(r"\d+/\d+|\d+(?:\.\d*)?|\.\d+")
_IDENT = re.compile(r"[^\W\d]\w*")
_SPACE = re.compile(r"\s*")


class _Scanner:
    """Cursor over a literal; columns reported 1-based."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        self.pos = _SPACE.match(self.text, self.pos).end()

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos : self.pos + 1]

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, column=(self.pos if pos is None else pos) + 1)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def degree(self):
        self.skip()
        start = self.pos
        m = _DEGREE.match(self.text, self.pos)
        if not m:
            raise self.error("expected a degree")
        self.pos = m.end()
        try:
            return to_degree(m.group())
        except InvalidDegreeError as exc:
            raise self.error(str(exc), start) from None

    def triple(self) -> Triple:
        start = self.pos
        self.expect("(")
        values = [self.degree()]
        while self.accept(","):
            values.append(self.degree())
        if len(values) != 3:
            self.skip()
            raise self.error(f"a triple needs 3 degrees, got {len(values)}", start)
        self.expect(")")
        return Triple(*values)

    def label(self, stop: str) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stop:
            self.pos += 1
        label = self.text[start : self.pos].strip()
        if not label:
            raise self.error("expected an element label", start)
        return label


def parse_universe_literal(text: str, name: Optional[str] = None) -> Universe:
    """``"a,b,c"`` or ``"{ 1, 2, 3 }"``."""
    sc = _Scanner(text)
    braced = sc.accept("{")
    if braced and sc.peek() == "}" or sc.at_end():
        raise sc.error("empty universe")
    labels: list[str] = []
    seen = set()
    while True:
        start = _SPACE.match(text, sc.pos).end()
        label = sc.label(",}" if braced else ",")
        if label in seen:
            raise sc.error(f"duplicate label {label!r}", start)
        seen.add(label)
        labels.append(label)
        if not sc.accept(","):
            break
    if braced:
        sc.expect("}")
    if not sc.at_end():
        raise sc.error("unexpected trailing text")
    return Universe(tuple(labels), name)


def parse_set_literal(text: str, universe: Universe, name: Optional[str] = None) -> NSSet:
    """Positional ``"(m,i,n), ..."`` or keyed ``"< label/(m,i,n), ... >"``."""
    sc = _Scanner(text)
    if sc.accept("<"):
        values: dict[str, Triple] = {}
        while True:
            start = _SPACE.match(text, sc.pos).end()
            label = sc.label("/,>")
            if label not in universe:
                raise sc.error(f"unknown element {label!r}", start)
            if label in values:
                raise sc.error(f"element {label!r} given twice", start)
            sc.expect("/")
            values[label] = sc.triple()
            if not sc.accept(","):
                break
        sc.expect(">")
        if not sc.at_end():
            raise sc.error("unexpected trailing text")
        missing = [u for u in universe if u not in values]
        if missing:
            raise sc.error(f"missing elements: {', '.join(missing)}")
        return NSSet(universe, tuple(values[u] for u in universe), name)

    triples = [sc.triple()]
    while sc.accept(","):
        triples.append(sc.triple())
    if not sc.at_end():
        raise sc.error("unexpected trailing text")
    if len(triples) != len(universe):
        raise sc.error(f"{len(triples)} triples for a universe of {len(universe)} elements", 0)
    return NSSet(universe, tuple(triples), name)


@dataclass(frozen=True)
class Declaration:
    kind: str
    identifier: str
    value: Union[Universe, NSSet, NSFamily]
    line: int


@dataclass
class ScriptDocument:
    declarations: list[Declaration] = field(default_factory=list)

    def __post_init__(self):
        self._by_id = {d.identifier: d for d in self.declarations}

    def __contains__(self, identifier: str) -> bool:
        return identifier in self._by_id

    def get(self, identifier: str, kind: Optional[str] = None):
        decl = self._by_id.get(identifier)
        if decl is None:
            raise KeyError(identifier)
        if kind is not None and decl.kind != kind:
            raise KeyError(f"{identifier} is a {decl.kind}, not a {kind}")
        return decl.value

    def family(self, identifier: str) -> NSFamily:
        return self.get(identifier, "family")

    def ids(self, kind: str) -> list[str]:
        return [d.identifier for d in self.declarations if d.kind == kind]


_HEAD = re.compile(r"\s*(\w+)\s+([^\W\d]\w*)\s*")
_OVER = re.compile(r"over\s+([^\W\d]\w*)\s*")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_script(text: str) -> ScriptDocument:
    decls: list[Declaration] = []
    env: dict[str, Declaration] = {}

    def lookup(ident: str, kind: str, lineno: int, col: int):
        decl = env.get(ident)
        if decl is None:
            raise ParseError(f"unknown identifier {ident!r}", lineno, col)
        if decl.kind != kind:
            raise ParseError(f"{ident!r} is a {decl.kind}, expected a {kind}", lineno, col)
        return decl.value

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        head = _HEAD.match(line)
        if not head or head.group(1) not in ("universe", "nset", "family"):
            col = _SPACE.match(line).end() + 1
            raise ParseError("expected 'universe', 'nset' or 'family' declaration", lineno, col)
        kind, ident = head.group(1), head.group(2)
        if ident in KEYWORDS:
            raise ParseError(f"{ident!r} is a reserved word", lineno, head.start(2) + 1)
        if ident in env:
            raise ParseError(f"duplicate identifier {ident!r}", lineno, head.start(2) + 1)
        pos = head.end()

        if kind == "nset":
            over = _OVER.match(line, pos)
            if not over:
                raise ParseError("expected 'over UNIVERSE'", lineno, pos + 1)
            universe = lookup(over.group(1), "universe", lineno, over.start(1) + 1)
            pos = over.end()

        if line[pos : pos + 1] != "=":
            raise ParseError("expected '='", lineno, pos + 1)
        pos += 1
        body = line[pos:]

        try:
            if kind == "universe":
                value = parse_universe_literal(body, ident)
            elif kind == "nset":
                value = parse_set_literal(body, universe, ident)
            else:
                value = _parse_family(body, pos, lineno, lookup, ident)
        except ParseError as exc:
            if exc.line is not None:
                raise
            raise exc.shifted(lineno, pos) from None

        decl = Declaration(kind, ident, value, lineno)
        env[ident] = decl
        decls.append(decl)
    return ScriptDocument(decls)


_FAMILY_BODY = re.compile(r"\s*\{([^}]*)\}\s*(?:over\s+([^\W\d]\w*))?\s*$")


def _parse_family(body: str, offset: int, lineno: int, lookup, name: str) -> NSFamily:
    m = _FAMILY_BODY.match(body)
    if not m:
        raise ParseError("expected '{ ID, ... }' optionally followed by 'over UNIVERSE'", lineno, offset + 1)
    universe = None
    if m.group(2):
        universe = lookup(m.group(2), "universe", lineno, offset + m.start(2) + 1)
    inner = m.group(1)
    sets = []
    if inner.strip():
        cursor = m.start(1)
        for piece in inner.split(","):
            col = offset + cursor + len(piece) - len(piece.lstrip()) + 1
            ident = piece.strip()
            if not _IDENT.fullmatch(ident):
                raise ParseError(f"expected a set identifier, found {ident!r}", lineno, col)
            sets.append(lookup(ident, "nset", lineno, col))
            cursor += len(piece) + 1
    elif universe is None:
        raise ParseError("an empty family needs 'over UNIVERSE'", lineno, offset + m.end(1) + 2)
    try:
        family = NSFamily(sets, universe, name)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, offset + 1) from None
    return family


# structured (JSON-ready) documents


def family_to_document(family: NSFamily) -> dict[str, Any]:
    universe = family.universe
    return {
        "universe": None
        if universe is None
        else {"name": universe.name, "elements": list(universe.elements)},
        "family": {
            "name": family.name,
            "cardinality": len(family),
            "members": [
                {
                    "name": s.name,
                    "triples": [[render_degree(d) for d in t] for t in s.triples],
                }
                for s in family
            ],
        },
    }


def family_from_document(doc: dict[str, Any]) -> NSFamily:
    try:
        udoc = doc["universe"]
        fdoc = doc["family"]
        universe = None if udoc is None else Universe(tuple(udoc["elements"]), udoc.get("name"))
        members = []
        for m in fdoc["members"]:
            if universe is None:
                raise ParseError("members given without a universe")
            members.append(NSSet(universe, tuple(Triple.of(t) for t in m["triples"]), m.get("name")))
        return NSFamily(members, universe, fdoc.get("name"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed family document: {exc}") from None
