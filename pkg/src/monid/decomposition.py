"""Layered block decompositions of words and the depth of a letter.

Level 0 splits a word at its simple letters.  Level ``k`` refines every
block of level ``k - 1``: a letter that is simple inside the block and
does not occur anywhere to the left of the block becomes a new divider.
The leftmost divider is always the boundary, rendered ``λ``.

Depth is an ``int`` or ``math.inf``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .words import Word, classify, nth_occ, occurrence_positions, render

INF = math.inf
BOUNDARY_NAME = "λ"


@dataclass(frozen=True)
class Divider:
    """A divider occurrence.  ``letter is None`` marks the boundary."""

    letter: str | None
    position: int

    @property
    def is_boundary(self) -> bool:
        return self.letter is None

    def __str__(self) -> str:
        return BOUNDARY_NAME if self.letter is None else self.letter


BOUNDARY = Divider(None, -1)


@dataclass(frozen=True)
class Decomposition:
    word: Word
    level: int
    dividers: tuple  # Divider, boundary first
    blocks: tuple  # (start, end) spans, one after each divider

    def block_words(self) -> list:
        return [self.word[a:b] for a, b in self.blocks]

    def render(self) -> str:
        parts = []
        for d, (a, b) in zip(self.dividers, self.blocks):
            parts.append(f"[{d}]({' '.join(self.word[a:b])})")
        return "".join(parts)

    __str__ = render


@lru_cache(maxsize=65536)
def divider_levels(w: Word) -> tuple:
    """Sorted divider positions for levels ``0..max_level`` (boundary excluded).

    The last entry is the stationary level: refining it adds nothing.
    """
    first: dict = {}
    for pos, a in enumerate(w):
        first.setdefault(a, pos)
    _, simple, _ = classify(w)
    current = tuple(p for p, a in enumerate(w) if a in simple)
    levels = [current]
    while True:
        new = set(current)
        for start, end in _spans(current, len(w)):
            seen: dict = {}
            for p in range(start, end):
                seen[w[p]] = seen.get(w[p], 0) + 1
            for p in range(start, end):
                a = w[p]
                if seen[a] == 1 and first[a] >= start:
                    new.add(p)
        if len(new) == len(current):
            return tuple(levels)
        current = tuple(sorted(new))
        levels.append(current)


def _spans(divs: tuple, n: int) -> list:
    cuts = [-1, *divs, n]
    return [(cuts[i] + 1, cuts[i + 1]) for i in range(len(cuts) - 1)]


def _positions(w: Word, k: int) -> tuple:
    if k < 0:
        raise ValueError("level must be non-negative")
    levels = divider_levels(w)
    return levels[min(k, len(levels) - 1)]


def max_level(w: Word) -> int:
    """Least ``k`` with ``decompose(w, k) == decompose(w, k + 1)``."""
    return len(divider_levels(w)) - 1


def decompose(w: Word, k: int) -> Decomposition:
    w = tuple(w)
    pos = _positions(w, k)
    dividers = (BOUNDARY, *(Divider(w[p], p) for p in pos))
    return Decomposition(w, k, dividers, tuple(_spans(pos, len(w))))


def dividers(w: Word, k: int) -> list:
    """Divider occurrences of level ``k``, boundary first."""
    return list(decompose(w, k).dividers)


def divider_letters(w: Word, k: int) -> list:
    w = tuple(w)
    return [w[p] for p in _positions(w, k)]


def h(w: Word, x: str, i: int, k: int) -> Divider:
    """Rightmost level-``k`` divider strictly before the ``i``-th occurrence of ``x``."""
    w = tuple(w)
    ref = nth_occ(w, x, i)
    if ref is None:
        raise ValueError(f"{x} has fewer than {i} occurrences in {render(w)}")
    pos = _positions(w, k)
    j = bisect.bisect_left(pos, ref.position)
    return BOUNDARY if j == 0 else Divider(w[pos[j - 1]], pos[j - 1])


def _first_two(w: Word, x: str) -> list:
    where = [p for p, a in enumerate(w) if a == x]
    if not where:
        raise ValueError(f"{x} does not occur in {render(w)}")
    return where[:2]


def depth(w: Word, x: str, method: str = "blocks"):
    """Depth of letter ``x`` in ``w``: ``0`` for simple letters, else ``k >= 1`` or ``INF``.

    ``method="blocks"`` asks when the first two occurrences fall into
    different blocks; ``method="h"`` compares the dividers preceding them.
    Both must agree.
    """
    w = tuple(w)
    where = _first_two(w, x)
    if len(where) == 1:
        return 0
    p1, p2 = where
    levels = divider_levels(w)
    if method == "blocks":
        for j, pos in enumerate(levels):
            lo = bisect.bisect_left(pos, p1)
            if lo < len(pos) and pos[lo] < p2:
                return j + 1
        return INF
    if method == "h":
        for j in range(len(levels)):
            if h(w, x, 1, j) != h(w, x, 2, j):
                return j + 1
        return INF
    raise ValueError(f"unknown depth method {method!r}")


def depths(w: Word) -> dict:
    return {a: depth(w, a) for a in dict.fromkeys(w)}


def format_depth(d) -> str:
    return "inf" if d == INF else str(d)


def _location(w: Word, p: int, k: int):
    pos = _positions(w, k)
    j = bisect.bisect_left(pos, p)
    if j < len(pos) and pos[j] == p:
        return ("divider", j + 1)
    return ("block", j)


def well_balanced(u: Word, v: Word, k: int) -> bool:
    """Same level-``k`` dividers in the same order, and every first and
    second occurrence sits in the block with the same index in both words."""
    u, v = tuple(u), tuple(v)
    if divider_letters(u, k) != divider_letters(v, k):
        return False
    pu, pv = occurrence_positions(u), occurrence_positions(v)
    for a in set(pu) | set(pv):
        for i in range(2):
            if i < len(pu.get(a, ())) and i < len(pv.get(a, ())):
                if _location(u, pu[a][i], k) != _location(v, pv[a][i], k):
                    return False
    return True


def _check_span(w: Word, span: tuple) -> tuple:
    start, end = span
    if not 0 <= start <= end <= len(w):
        raise ValueError(f"span {span} out of range for a word of length {len(w)}")
    return start, end


def subword_depth(w: Word, span: tuple):
    """Least depth of a letter that first appears inside ``w[start:end]``."""
    w = tuple(w)
    start, end = _check_span(w, span)
    before = set(w[:start])
    fresh = set(w[start:end]) - before
    if not fresh:
        return INF
    return min(depth(w, a) for a in fresh)


def strictly_infinite(w: Word, span: tuple) -> bool:
    w = tuple(w)
    start, end = _check_span(w, span)
    if subword_depth(w, span) != INF:
        return False
    first = {}
    for p, a in enumerate(w):
        first.setdefault(a, p)
    _, inner_simple, _ = classify(w[start:end])
    for a in inner_simple - set(w[:start]):
        second = nth_occ(w, a, 2)
        if second is None:
            return False
        if any(first[w[p]] == p for p in range(end, second.position)):
            return False
    return True


@dataclass(frozen=True)
class FormDecomposition:
    """``w = u_{2k+1} ₁x_k u_{2k} ₁x_{k-1} u_{2k-1} ₂x_k ... ₁x_0 u_1 ₂x_1 u_0``.

    ``pivots[s]`` is ``x_s`` and ``segments[j]`` is ``u_j``.
    """

    word: Word
    level: int
    pivots: tuple
    markers: tuple  # (letter, occurrence, position) left to right
    spans: tuple  # spans[j] is the (start, end) of u_j

    @property
    def segments(self) -> tuple:
        return tuple(self.word[a:b] for a, b in self.spans)

    def reassemble(self) -> Word:
        out: list = []
        k = self.level
        order = _segment_order(k)
        for j, seg in enumerate(order):
            out.extend(self.segments[seg])
            if j < len(self.markers):
                out.append(self.markers[j][0])
        return tuple(out)

    def segment_of(self, p: int) -> int | None:
        for j, (a, b) in enumerate(self.spans):
            if a <= p < b:
                return j
        return None

    def render(self) -> str:
        parts = []
        for j, seg in enumerate(_segment_order(self.level)):
            parts.append(f"u{seg}=({render(self.segments[seg])})")
            if j < len(self.markers):
                letter, i, _ = self.markers[j]
                parts.append(f"{i}{letter}")
        return " ".join(parts)


def _segment_order(k: int) -> list:
    return list(range(2 * k + 1, -1, -1))


def _marker_plan(k: int) -> list:
    """(pivot index, occurrence) for the markers, left to right."""
    plan = [(k, 1)]
    for s in range(k - 1, -1, -1):
        plan += [(s, 1), (s + 1, 2)]
    return plan


def _build_form(w: Word, k: int, pivots: tuple) -> FormDecomposition | None:
    where = occurrence_positions(w)
    markers = []
    for s, i in _marker_plan(k):
        letter = pivots[s]
        if len(where.get(letter, ())) < i:
            return None
        markers.append((letter, i, where[letter][i - 1]))
    cuts = [m[2] for m in markers]
    if any(a >= b for a, b in zip(cuts, cuts[1:])):
        return None
    bounds = [-1, *cuts, len(w)]
    spans = {}
    for j, seg in enumerate(_segment_order(k)):
        spans[seg] = (bounds[j] + 1, bounds[j + 1])
    return FormDecomposition(w, k, tuple(pivots), tuple(markers), tuple(spans[j] for j in range(2 * k + 2)))


def validate_form(form: FormDecomposition, strict: bool = True) -> list:
    """Return the list of violated conditions (empty when the form is valid)."""
    w, k = form.word, form.level
    problems = []
    if form.reassemble() != w:
        problems.append("segments do not reassemble the word")
    for s, letter in enumerate(form.pivots):
        if depth(w, letter) != s:
            problems.append(f"depth of pivot {letter} is not {s}")
    if strict:
        for s in range(k):
            a, b = form.spans[2 * s + 2]
            divs = set(_positions(w, s))
            if any(a <= p < b for p in divs):
                problems.append(f"u{2 * s + 2} contains a level-{s} divider")
    return problems


def iter_forms(w: Word, x: str, strict: bool = True) -> Iterator[FormDecomposition]:
    """All pivot choices that put ``w`` into form for ``x``.

    With ``strict`` the segments ``u_{2s+2}`` must avoid level-``s``
    dividers; without it only the order and the pivot depths are checked.
    """
    w = tuple(w)
    k = depth(w, x)
    if k == INF:
        return
    where = occurrence_positions(w)
    first = {a: ps[0] for a, ps in where.items()}
    by_depth: dict = {}
    for a in where:
        by_depth.setdefault(depth(w, a), []).append(a)
    for group in by_depth.values():
        group.sort(key=first.__getitem__)

    def extend(pivots: dict, s: int) -> Iterator[dict]:
        if s < 0:
            yield dict(pivots)
            return
        left = first[pivots[k]] if s == k - 1 else where[pivots[s + 2]][1]
        right = where[pivots[s + 1]][1]
        for a in by_depth.get(s, ()):
            if not left < first[a] < right:
                continue
            if s > 0 and where[a][1] <= right:
                continue
            pivots[s] = a
            yield from extend(pivots, s - 1)
            del pivots[s]

    for choice in extend({k: x}, k - 1):
        form = _build_form(w, k, tuple(choice[s] for s in range(k + 1)))
        if form is not None and not validate_form(form, strict):
            yield form


def canonical_form(w: Word, x: str) -> FormDecomposition:
    """The form of ``w`` for ``x`` with leftmost pivots.

    Each pivot ``x_s`` must be the first level-``s`` divider after the
    previous marker, so the strict form is unique when it exists.
    """
    w = tuple(w)
    k = depth(w, x)
    if k == INF:
        raise ValueError(f"{x} has infinite depth in {render(w)}")
    for form in iter_forms(w, x, strict=True):
        return form
    raise ValueError(f"no form for {x} in {render(w)}")
