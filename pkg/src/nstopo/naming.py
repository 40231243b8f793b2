"""Names given to derived sets: intersections, unions, complements and the
empty/absolute sets."""

from __future__ import annotations

from typing import Iterable, Optional

EMPTY_NAME = "∅̃"  # ∅̃
ABSOLUTE_FALLBACK_NAME = "1̃"  # 1̃
CAP = " ∩ "
CUP = " ∪ "

# Letters missing from the contiguous double-struck block live in Letterlike Symbols.
_BB_UPPER_EXCEPTIONS = {
    "C": "ℂ",
    "H": "ℍ",
    "N": "ℕ",
    "P": "ℙ",
    "Q": "ℚ",
    "R": "ℝ",
    "Z": "ℤ",
}


def _bb_char(ch: str) -> str:
    if "A" <= ch <= "Z":
        return _BB_UPPER_EXCEPTIONS.get(ch) or chr(0x1D538 + ord(ch) - ord("A"))
    if "a" <= ch <= "z":
        return chr(0x1D552 + ord(ch) - ord("a"))
    if "0" <= ch <= "9":
        return chr(0x1D7D8 + ord(ch) - ord("0"))
    return ch


_BB_CHARS = frozenset(
    _bb_char(c)
    for c in "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
)


def name_to_blackboard(name: str) -> str:
    """Map ASCII letters and digits to their double-struck forms ("U" -> "𝕌")."""
    return "".join(_bb_char(ch) for ch in name)


def is_blackboard(name: str) -> bool:
    return all(ch in _BB_CHARS for ch in name if ch.isalnum())


def absolute_name(universe_name: Optional[str]) -> str:
    if not universe_name:
        return ABSOLUTE_FALLBACK_NAME
    if is_blackboard(universe_name):
        return universe_name
    return name_to_blackboard(universe_name)


def intersection_name(parts: Iterable[Optional[str]]) -> Optional[str]:
    names = [p for p in parts if p]
    return CAP.join(names) if names else None


def union_name(parts: Iterable[Optional[str]]) -> Optional[str]:
    names = [f"({p})" if "∩" in p else p for p in parts if p]
    return CUP.join(names) if names else None


def complement_name(name: Optional[str]) -> Optional[str]:
    return "~" + name if name else None
