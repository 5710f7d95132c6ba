"""Words over a countable alphabet of named letters.

A word is a plain tuple of letter names, e.g. ``("x", "s", "x", "t")``.
The empty tuple is the empty word and renders as ``1``.  Letters are
strings matching ``[a-z][a-z0-9]*``; ``zoo`` is the conventional name for
the "infinity" letter used by a few identity families.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

Word = tuple  # tuple[str, ...]

EMPTY: Word = ()

_TOKEN = re.compile(r"[a-z][a-z0-9]*")


class WordParseError(ValueError):
    """Raised for malformed word text; ``offset`` is the 0-based column."""

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}: {text!r}")
        self.text = text
        self.offset = offset


def parse_word(text: str) -> Word:
    """Parse ``"x s x t"`` into a word.  ``"1"`` is the empty word.

    Tokens are separated by runs of spaces; leading and trailing blanks
    are ignored.
    """
    stripped = text.strip()
    if stripped == "1":
        return EMPTY
    if not stripped:
        raise WordParseError("empty input (write 1 for the empty word)", text, 0)
    letters = []
    pos = len(text) - len(text.lstrip())
    while pos < len(text):
        if text[pos] == " ":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordParseError("expected a letter", text, pos)
        end = m.end()
        if end < len(text) and not text[end].isspace():
            raise WordParseError("unexpected character", text, end)
        letters.append(m.group())
        pos = end
    return tuple(letters)


def is_letter(name: str) -> bool:
    return _TOKEN.fullmatch(name) is not None


def word(*letters: str) -> Word:
    for a in letters:
        if not is_letter(a):
            raise ValueError(f"not a letter name: {a!r}")
    return tuple(letters)


def render(w: Iterable[str]) -> str:
    w = tuple(w)
    return " ".join(w) if w else "1"


def content(w: Word) -> set:
    return set(w)


def classify(w: Word) -> tuple[set, set, set]:
    """Return ``(con, sim, mul)``: all letters, simple letters, multiple letters."""
    counts = Counter(w)
    sim = {a for a, c in counts.items() if c == 1}
    return set(counts), sim, set(counts) - sim


def occ(w: Word, letter: str) -> int:
    return w.count(letter)


@dataclass(frozen=True)
class OccRef:
    """The ``index``-th occurrence (1-based) of ``letter``, found at ``position``."""

    letter: str
    index: int
    position: int

    def __str__(self) -> str:
        return f"{self.index}{self.letter}@{self.position}"


def nth_occ(w: Word, letter: str, n: int) -> OccRef | None:
    if n < 1:
        raise ValueError("occurrence index is 1-based")
    seen = 0
    for pos, a in enumerate(w):
        if a == letter:
            seen += 1
            if seen == n:
                return OccRef(letter, n, pos)
    return None


def occurrence_positions(w: Word) -> dict:
    """Map each letter to the list of its positions in ``w``."""
    where: dict = {}
    for pos, a in enumerate(w):
        where.setdefault(a, []).append(pos)
    return where


def delete(w: Word, letters: Iterable[str]) -> Word:
    drop = set(letters)
    return tuple(a for a in w if a not in drop)


def retain(w: Word, letters: Iterable[str]) -> Word:
    keep = set(letters)
    return tuple(a for a in w if a in keep)


def ini_k(w: Word, k: int) -> Word:
    """Keep only the first ``k`` occurrences of every letter."""
    counts: Counter = Counter()
    out = []
    for a in w:
        if counts[a] < k:
            out.append(a)
        counts[a] += 1
    return tuple(out)


def ini(w: Word) -> Word:
    return ini_k(w, 1)


def ini2(w: Word) -> Word:
    return ini_k(w, 2)


def ini_sq(w: Word) -> Word:
    """``ini(w)`` with every letter doubled in place."""
    return tuple(a for a in ini(w) for _ in range(2))


def is_2_limited(w: Word) -> bool:
    return all(c <= 2 for c in Counter(w).values())


def is_balanced(u: Word, v: Word) -> bool:
    """Every letter occurs equally often in ``u`` and ``v``."""
    return Counter(u) == Counter(v)


def letter_key(letter: str):
    """Sort key that orders ``x2`` before ``x10``."""
    m = re.fullmatch(r"([a-z]+)(\d*)", letter)
    if m is None:
        return (letter, -1, "")
    stem, digits = m.groups()
    return (stem, int(digits) if digits else -1, letter)


def sorted_letters(letters: Iterable[str]) -> list:
    return sorted(set(letters), key=letter_key)
