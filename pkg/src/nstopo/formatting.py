"""Text rendering of sets and families in simple and tabular layouts.

Format specs follow the letters ``s`` (simple, default), ``t`` (tabular),
``l`` (prefix the object's name) and ``x`` (extended layout), so
``f"{family:tlx}"`` works on both sets and families.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from fractions import Fraction

from .core import NSSet
from .family import NSFamily

EMPTY_FAMILY = "∅"

NAME_WIDTH = 8
NAME_WIDTH_EXTENDED = 13
VALUE_WIDTH = 16
HEADER = "|   membership   |  indeterminacy | non-membership |"


@dataclass(frozen=True)
class RenderOptions:
    tabular: bool = False
    label: bool = False
    extended: bool = False

    @classmethod
    def from_spec(cls, spec: str) -> "RenderOptions":
        unknown = set(spec) - set("stlx")
        if unknown:
            raise ValueError(f"unknown format flags: {''.join(sorted(unknown))}")
        return cls(tabular="t" in spec, label="l" in spec, extended="x" in spec)


SIMPLE = RenderOptions()


def render_degree(value: Fraction) -> str:
    """Shortest exact decimal ("0", "1", "0.3"), or "p/q" if none exists."""
    value = Fraction(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    digits = value.numerator * 10 ** places // value.denominator
    if places == 0:
        return str(digits)
    whole, frac = divmod(digits, 10 ** places)
    return f"{whole}.{frac:0{places}d}".rstrip("0")


def display_width(text: str) -> int:
    return sum(1 for ch in text if not unicodedata.combining(ch))


def _pad(text: str, width: int) -> str:
    return text + " " * max(0, width - display_width(text))


def _simple_set(s: NSSet) -> str:
    parts = [
        f"{label}/({','.join(render_degree(d) for d in triple)})" for label, triple in s.items()
    ]
    return "< " + ", ".join(parts) + " >"


def _tabular_set(s: NSSet, label: bool, extended: bool) -> str:
    width = NAME_WIDTH_EXTENDED if extended else NAME_WIDTH
    title = s.name if label and s.name else ""
    rule = "-" * (width + 3 * (VALUE_WIDTH + 1) + 2)
    lines = [" " + _pad(title, width) + HEADER, rule]
    for element, triple in s.items():
        cells = "".join("| " + _pad(render_degree(d), VALUE_WIDTH - 1) for d in triple)
        lines.append(" " + _pad(element, width) + cells + "|")
    lines.append(rule)
    return "\n".join(lines) + "\n"


def render_set(s: NSSet, opts: RenderOptions = SIMPLE) -> str:
    if opts.tabular:
        return _tabular_set(s, opts.label, opts.extended)
    prefix = f"{s.name} = " if opts.label and s.name else ""
    return prefix + _simple_set(s)


def render_family(f: NSFamily, opts: RenderOptions = SIMPLE) -> str:
    labelname = f"{f.name} = " if opts.label and f.name else ""
    if not len(f):
        return labelname + EMPTY_FAMILY
    member_opts = RenderOptions(opts.tabular, True, opts.extended)
    items = [render_set(s, member_opts) for s in f]
    if opts.tabular:
        # each table ends with a newline, so separators sit on their own line
        return labelname + "{\n" + ",\n".join(items) + " }\n"
    if opts.extended:
        indentation = " " * (display_width(labelname) + 2)
        return labelname + "{ " + f",\n{indentation}".join(items) + " }\n"
    return labelname + "{ " + ", ".join(items) + " }\n"
