"""Identities, substitutions and equational derivations in the free monoid.

A *direct step* rewrites ``a φ(s) b`` into ``a φ(t) b`` for an axiom
``s ≈ t`` (either orientation) and a substitution ``φ`` whose images may
be empty.  A derivation is a chain of words, each obtained from the
previous one by a direct step.

When ``x s x t ≈ x s x t x`` is among the axioms, two words are
interchangeable by such steps exactly when their ``ini2`` agree; the
search then works on ``ini2`` normal forms and only branches on the
remaining axioms.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .words import Word, WordParseError, ini2, is_2_limited, parse_word, render

FORWARD = "forward"
BACKWARD = "backward"


class IdentityParseError(ValueError):
    pass


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word
    name: str | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"

    @property
    def label(self) -> str:
        return self.name or str(self)

    def letters(self) -> set:
        return set(self.lhs) | set(self.rhs)

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def is_balanced(self) -> bool:
        return Counter(self.lhs) == Counter(self.rhs)

    def is_2_limited(self) -> bool:
        return is_2_limited(self.lhs) and is_2_limited(self.rhs)

    def reversed(self) -> "Identity":
        return Identity(self.rhs, self.lhs, self.name)

    def sides(self, direction: str) -> tuple:
        """(source, target) for a step in the given direction."""
        return (self.lhs, self.rhs) if direction == FORWARD else (self.rhs, self.lhs)

    def with_name(self, name: str) -> "Identity":
        return Identity(self.lhs, self.rhs, name)


def parse_identity(text: str, name: str | None = None) -> Identity:
    """Parse ``"u = v"`` (``≈`` is accepted in place of ``=``)."""
    parts = text.replace("≈", "=").split("=")
    if len(parts) != 2:
        raise IdentityParseError(f"expected exactly one '=' in {text!r}")
    try:
        return Identity(parse_word(parts[0]), parse_word(parts[1]), name)
    except WordParseError as err:
        raise IdentityParseError(str(err)) from err


def canonical_renaming(words: Sequence[Word]) -> tuple:
    """Rename letters to ``v0, v1, ...`` by first appearance across ``words``."""
    names: dict = {}
    out = []
    for w in words:
        out.append(tuple(names.setdefault(a, f"v{len(names)}") for a in w))
    return tuple(out)


def is_variant(a: Identity, b: Identity) -> bool:
    """Same identity up to renaming letters and swapping sides."""
    key = canonical_renaming((a.lhs, a.rhs))
    return key in (canonical_renaming((b.lhs, b.rhs)), canonical_renaming((b.rhs, b.lhs)))


# The identity that makes ini2 a complete invariant.
I11 = Identity(("x", "s", "x", "t"), ("x", "s", "x", "t", "x"), "I11")


def apply_subst(phi: dict, w: Word) -> Word:
    """Image of ``w``; letters outside ``phi`` are left unchanged."""
    out: list = []
    for a in w:
        img = phi.get(a)
        if img is None:
            out.append(a)
        else:
            out.extend(img)
    return tuple(out)


def apply_identity(phi: dict, identity: Identity) -> Identity:
    return Identity(apply_subst(phi, identity.lhs), apply_subst(phi, identity.rhs))


@dataclass(frozen=True)
class Witness:
    """``source = a φ(s) b`` and ``target = a φ(t) b`` for the oriented axiom."""

    a: Word
    b: Word
    phi: tuple  # sorted (letter, image) pairs
    axiom: Identity
    direction: str

    @property
    def substitution(self) -> dict:
        return dict(self.phi)

    def source(self) -> Word:
        s, _ = self.axiom.sides(self.direction)
        return self.a + apply_subst(self.substitution, s) + self.b

    def target(self) -> Word:
        _, t = self.axiom.sides(self.direction)
        return self.a + apply_subst(self.substitution, t) + self.b

    def moved_letters(self) -> dict:
        """The non-identity part of the substitution."""
        return {x: img for x, img in self.phi if img != (x,)}


def _witness(a, b, binding, axiom, direction) -> Witness:
    letters = axiom.letters()
    phi = tuple(sorted((x, binding.get(x, (x,))) for x in letters))
    return Witness(tuple(a), tuple(b), phi, axiom, direction)


class BudgetExceeded(Exception):
    pass


class _Counter:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def tick(self):
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded


def _match_exact(pattern, word, binding, cap, counter) -> Iterator[dict]:
    """All extensions of ``binding`` with ``φ(pattern) == word`` exactly."""
    n, size = len(pattern), len(word)

    def rec(j, p):
        counter.tick()
        if j == n:
            if p == size:
                yield dict(binding)
            return
        # lengths forced by letters already bound bound the remaining room
        need = 0
        for x in pattern[j:]:
            img = binding.get(x)
            if img is not None:
                need += len(img)
        if need > size - p:
            return
        x = pattern[j]
        img = binding.get(x)
        if img is not None:
            if word[p:p + len(img)] == img:
                yield from rec(j + 1, p + len(img))
            return
        top = size - p - need
        if cap is not None:
            top = min(top, cap)
        for length in range(top + 1):
            binding[x] = word[p:p + length]
            yield from rec(j + 1, p + length)
            del binding[x]

    yield from rec(0, 0)


def directly_deducible(u: Word, v: Word, axiom: Identity, cap: int | None = None,
                       max_nodes: int | None = 200_000) -> list:
    """Every witness that ``v`` follows from ``u`` in one step of ``axiom``.

    Order: shortest context ``a`` first, then shortest ``b``, then shortest
    images in axiom order.
    """
    u, v = tuple(u), tuple(v)
    found = []
    counter = _Counter(max_nodes)
    prefix = 0
    while prefix < min(len(u), len(v)) and u[prefix] == v[prefix]:
        prefix += 1
    for direction in (FORWARD, BACKWARD):
        src, dst = axiom.sides(direction)
        for i in range(prefix + 1):
            j = 0
            while True:
                if i + j > min(len(u), len(v)):
                    break
                if j and u[len(u) - j] != v[len(v) - j]:
                    break
                U, V = u[i:len(u) - j], v[i:len(v) - j]
                for binding in _match_exact(src, U, {}, cap, counter):
                    for full in _match_exact(dst, V, binding, cap, counter):
                        found.append(_witness(u[:i], u[len(u) - j:], full, axiom, direction))
                j += 1
    found.sort(key=lambda w: (len(w.a), len(w.b), w.direction != FORWARD))
    return found


def first_witness(u: Word, v: Word, axioms: Iterable[Identity], cap: int | None = None) -> Witness | None:
    for axiom in axioms:
        found = directly_deducible(u, v, axiom, cap)
        if found:
            return found[0]
    return None


def _split_core(src: Word, dst: Word) -> tuple:
    n = 0
    while n < min(len(src), len(dst)) and src[n] == dst[n]:
        n += 1
    m = 0
    while m < min(len(src), len(dst)) - n and src[len(src) - 1 - m] == dst[len(dst) - 1 - m]:
        m += 1
    return src[:n], src[n:len(src) - m], dst[n:len(dst) - m], src[len(src) - m:]


def successors(w: Word, axiom: Identity, direction: str = FORWARD, max_len: int | None = None,
               cap: int | None = None, max_nodes: int | None = None) -> Iterator[tuple]:
    """Distinct words reachable from ``w`` by one non-trivial step, with a witness.

    Yields ``(v, witness)``.  The search anchors the part where the two
    sides of the axiom differ and grows the match outwards, always
    preferring a side whose next letter is already bound.
    """
    w = tuple(w)
    src, dst = axiom.sides(direction)
    if not set(dst) <= set(src):
        return
    prefix, core_src, core_dst, suffix = _split_core(src, dst)
    core_fixed = set(core_dst) <= set(core_src)
    counter = _Counter(max_nodes)
    seen = {w}
    size = len(w)
    binding: dict = {}

    def grow(li, ri, lo, hi):
        counter.tick()
        if li == len(prefix) and ri == len(suffix):
            yield lo, hi
            return
        right = suffix[ri] if ri < len(suffix) else None
        left = prefix[len(prefix) - 1 - li] if li < len(prefix) else None
        if left is None or right in binding:
            side, x = "r", right
        elif right is None or left in binding:
            side, x = "l", left
        elif _gap(suffix, ri, 1) <= _gap(prefix, len(prefix) - 1 - li, -1):
            side, x = "r", right
        else:
            side, x = "l", left
        img = binding.get(x)
        if img is not None:
            k = len(img)
            if side == "r":
                if w[hi:hi + k] == img:
                    yield from grow(li, ri + 1, lo, hi + k)
            elif k <= lo and w[lo - k:lo] == img:
                yield from grow(li + 1, ri, lo - k, hi)
            return
        room = size - hi if side == "r" else lo
        rest = suffix[ri + 1:] if side == "r" else prefix[:len(prefix) - 1 - li]
        for y in rest:
            img = binding.get(y)
            if img is not None:
                room -= len(img)
        if cap is not None:
            room = min(room, cap)
        for k in range(room + 1):
            binding[x] = w[hi:hi + k] if side == "r" else w[lo - k:lo]
            if side == "r":
                yield from grow(li, ri + 1, lo, hi + k)
            else:
                yield from grow(li + 1, ri, lo - k, hi)
            del binding[x]

    def _gap(part, i, step):
        """Unbound letters met before the first bound one, walking ``part`` from ``i``."""
        n = 0
        while 0 <= i < len(part):
            if part[i] in binding:
                return n
            n += 1
            i += step
        return n + 1000

    def core(j, p, start):
        counter.tick()
        if j == len(core_src):
            yield from _with_core(start, p)
            return
        x = core_src[j]
        img = binding.get(x)
        if img is not None:
            if w[p:p + len(img)] == img:
                yield from core(j + 1, p + len(img), start)
            return
        top = size - p if cap is None else min(cap, size - p)
        for k in range(top + 1):
            binding[x] = w[p:p + k]
            yield from core(j + 1, p + k, start)
            del binding[x]

    def _with_core(start, end):
        if core_fixed:
            # the new word depends only on the core placement and its
            # images, so one extension to a full match is enough
            v = w[:start] + apply_subst(binding, core_dst) + w[end:]
            if v in seen or (max_len is not None and len(v) > max_len):
                return
            saved = dict(binding)
            extension = grow(0, 0, start, end)
            found = next(extension, None)
            if found is not None:
                wit = _witness(w[:found[0]], w[found[1]:], binding, axiom, direction)
                extension.close()
                binding.clear()
                binding.update(saved)
                seen.add(v)
                yield v, wit
            return
        for lo, hi in grow(0, 0, start, end):
            v = w[:start] + apply_subst(binding, core_dst) + w[end:]
            if v in seen or (max_len is not None and len(v) > max_len):
                continue
            seen.add(v)
            yield v, _witness(w[:lo], w[hi:], binding, axiom, direction)

    for start in range(size + 1):
        yield from core(0, start, start)


@dataclass
class Derivation:
    axioms: list
    chain: list  # words
    steps: list  # Witness, one per consecutive pair

    def __bool__(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def start(self) -> Word:
        return self.chain[0]

    @property
    def end(self) -> Word:
        return self.chain[-1]

    def verify(self) -> None:
        """Raise ``ReplayError`` unless every recorded step checks out."""
        if len(self.steps) != len(self.chain) - 1:
            raise ReplayError(len(self.steps), "chain and step counts disagree")
        for i, (u, v, wit) in enumerate(zip(self.chain, self.chain[1:], self.steps)):
            if u == v:
                raise ReplayError(i, "consecutive words coincide")
            if wit.source() != u or wit.target() != v:
                raise ReplayError(i, "recorded witness does not produce the step")
        if len(set(self.chain)) != len(self.chain):
            raise ReplayError(0, "chain revisits a word")

    def render(self) -> str:
        lines = [render(self.chain[0])]
        for wit, w in zip(self.steps, self.chain[1:]):
            lines.append(f"  ~{wit.axiom.label} {render(w)}")
        return "\n".join(lines)


@dataclass
class Exhausted:
    """A search that ran out of budget without connecting the two words."""

    reason: str
    nodes: int
    frontier: int
    depth: int
    max_steps: int
    max_len: int

    def __bool__(self) -> bool:
        return False

    def render(self) -> str:
        return (f"no derivation found within budget ({self.reason}; nodes={self.nodes}, "
                f"frontier={self.frontier}, depth={self.depth}, max_steps={self.max_steps}, "
                f"max_len={self.max_len})")


class ReplayError(Exception):
    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


def p_normal_chain(w: Word) -> list:
    """Words from ``w`` down to ``ini2(w)``, deleting one surplus occurrence at a time."""
    w = tuple(w)
    chain = [w]
    while True:
        counts = Counter()
        surplus = None
        for p, a in enumerate(w):
            counts[a] += 1
            if counts[a] > 2:
                surplus = p
        if surplus is None:
            return chain
        w = w[:surplus] + w[surplus + 1:]
        chain.append(w)


def p_chain(u: Word, v: Word) -> list:
    """A chain of single deletions/insertions joining words with equal ``ini2``."""
    down = p_normal_chain(u)
    up = p_normal_chain(v)
    if down[-1] != up[-1]:
        raise ValueError("words differ modulo x s x t = x s x t x")
    return _loop_erase(down + up[-2::-1])


def _loop_erase(chain: list, labels: list | None = None):
    out, out_labels, where = [], [], {}
    for i, w in enumerate(chain):
        if w in where:
            cut = where[w] + 1
            for dropped in out[cut:]:
                del where[dropped]
            del out[cut:]
            del out_labels[cut:]
            continue
        where[w] = len(out)
        out.append(w)
        out_labels.append(labels[i] if labels is not None else None)
    return (out, out_labels) if labels is not None else out


def elementary_insertions(w: Word, max_len: int | None = None) -> Iterator[Word]:
    """Words obtained by inserting one occurrence after two earlier ones."""
    if max_len is not None and len(w) >= max_len:
        return
    counts: Counter = Counter()
    seen = set()
    for p in range(len(w) + 1):
        for a in sorted(x for x, c in counts.items() if c >= 2):
            v = w[:p] + (a,) + w[p:]
            if v not in seen:
                seen.add(v)
                yield v
        if p < len(w):
            counts[w[p]] += 1


def has_i11(axioms: Iterable[Identity]) -> bool:
    return any(is_variant(ax, I11) for ax in axioms)


@dataclass
class Budget:
    max_steps: int = 8
    max_len: int | None = None
    max_nodes: int = 5_000
    slack: int = 1
    cap: int | None = None


def derive(axioms: Sequence[Identity], u: Word, v: Word, budget: Budget | None = None):
    """Search for a derivation of ``v`` from ``u``; ``Derivation`` or ``Exhausted``.

    Breadth first from both ends, so the chain found is shortest for the
    chosen search space.  ``max_steps`` counts steps of the other axioms
    when ``x s x t = x s x t x`` is present (those steps are free), and all
    steps otherwise.
    """
    budget = budget or Budget()
    axioms = list(axioms)
    u, v = tuple(u), tuple(v)
    max_len = budget.max_len if budget.max_len is not None else max(len(u), len(v)) + 6
    if u == v:
        return Derivation(axioms, [u], [])
    if has_i11(axioms):
        i11 = next(ax for ax in axioms if is_variant(ax, I11))
        others = [ax for ax in axioms if not is_variant(ax, I11)]
        return _derive_mod_p(axioms, i11, others, u, v, budget, max_len)
    return _derive_raw(axioms, u, v, budget, max_len)


def _bidirectional(start, goal, expand, max_steps, max_nodes, max_len):
    """Generic two-ended BFS.  ``expand(node)`` yields ``(neighbour, edge)``."""
    parents = [{start: None}, {goal: None}]
    frontiers = [[start], [goal]]
    depths = [0, 0]
    nodes = 0
    while frontiers[0] and frontiers[1] and depths[0] + depths[1] < max_steps:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        nxt = []
        for node in frontiers[side]:
            nodes += 1
            if nodes > max_nodes:
                return None, Exhausted("node budget", nodes, len(frontiers[0]) + len(frontiers[1]),
                                       depths[0] + depths[1], max_steps, max_len)
            for nb, edge in expand(node):
                if nb in parents[side]:
                    continue
                parents[side][nb] = (node, edge)
                if nb in parents[1 - side]:
                    return _join(parents, nb), None
                nxt.append(nb)
        frontiers[side] = nxt
        depths[side] += 1
    reason = "search space exhausted" if not (frontiers[0] and frontiers[1]) else "step budget"
    return None, Exhausted(reason, nodes, len(frontiers[0]) + len(frontiers[1]),
                           depths[0] + depths[1], max_steps, max_len)


def _join(parents, meet):
    """Edges from start to goal as ``(from, to, edge, reversed)`` tuples."""
    left = []
    node = meet
    while parents[0][node] is not None:
        prev, edge = parents[0][node]
        left.append((prev, node, edge, False))
        node = prev
    left.reverse()
    node = meet
    right = []
    while parents[1][node] is not None:
        prev, edge = parents[1][node]
        right.append((node, prev, edge, True))
        node = prev
    return left + right


def _finish(axioms, words, labels) -> Derivation:
    words, labels = _loop_erase(words, labels)
    steps = []
    for i, (a, b) in enumerate(zip(words, words[1:])):
        axiom = labels[i + 1]
        found = directly_deducible(a, b, axiom)
        if not found:
            raise ReplayError(i, f"internal: {axiom.label} does not justify the step")
        steps.append(found[0])
    return Derivation(axioms, words, steps)


def _derive_raw(axioms, u, v, budget, max_len):
    def expand(w):
        for ax in axioms:
            for direction in (FORWARD, BACKWARD):
                for nb, wit in successors(w, ax, direction, max_len, budget.cap):
                    yield nb, ax

    path, exhausted = _bidirectional(u, v, expand, budget.max_steps, budget.max_nodes, max_len)
    if path is None:
        return exhausted
    words, labels = [u], [None]
    for a, b, ax, _ in path:
        words.append(b)
        labels.append(ax)
    return _finish(axioms, words, labels)


def _representatives(n: Word, slack: int, max_len: int) -> list:
    reps = [n]
    layer = [n]
    seen = {n}
    for _ in range(slack):
        nxt = []
        for r in layer:
            for s in elementary_insertions(r, max_len):
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        reps.extend(nxt)
        layer = nxt
    return reps


def _derive_mod_p(axioms, i11, others, u, v, budget, max_len):
    nu, nv = ini2(u), ini2(v)
    if nu == nv:
        words = p_chain(u, v)
        return _finish(axioms, words, [None] + [i11] * (len(words) - 1))

    def expand(n):
        for r in _representatives(n, budget.slack, max_len):
            for ax in others:
                for direction in (FORWARD, BACKWARD):
                    for r2, wit in successors(r, ax, direction, max_len, budget.cap):
                        m = ini2(r2)
                        if m != n:
                            yield m, (r, r2, ax)

    path, exhausted = _bidirectional(nu, nv, expand, budget.max_steps, budget.max_nodes, max_len)
    if path is None:
        return exhausted
    words = list(reversed(p_normal_chain(u)))[::-1]
    labels = [None] + [i11] * (len(words) - 1)
    for a, b, (r, r2, ax), flipped in path:
        if flipped:
            r, r2 = r2, r
        seg = list(reversed(p_normal_chain(r)))  # a .. r
        seg += [r2]
        seg += p_normal_chain(r2)[1:]  # r2 .. b
        seg_labels = [i11] * (len(seg) - 1)
        seg_labels[len(p_normal_chain(r)) - 1] = ax
        words.extend(seg[1:])
        labels.extend(seg_labels)
    tail = list(reversed(p_normal_chain(v)))
    words.extend(tail[1:])
    labels.extend([i11] * (len(tail) - 1))
    return _finish(axioms, words, labels)


def replay(axioms: Sequence[Identity], chain: Sequence[Word], rule_hints: Sequence | None = None) -> Derivation:
    """Check that every consecutive pair of ``chain`` is one direct step.

    ``rule_hints[i]`` (an ``Identity`` or its name) restricts the axioms
    tried for step ``i``.  Raises ``ReplayError`` naming the first bad step.
    """
    axioms = list(axioms)
    chain = [tuple(w) for w in chain]
    steps = []
    for i, (u, v) in enumerate(zip(chain, chain[1:])):
        if u == v:
            raise ReplayError(i, "consecutive words coincide")
        candidates = _hinted(axioms, rule_hints[i] if rule_hints else None)
        wit = first_witness(u, v, candidates)
        if wit is None:
            raise ReplayError(i, f"{render(u)} -> {render(v)} is not a direct step")
        steps.append(wit)
    return Derivation(axioms, chain, steps)


def _hinted(axioms, hint):
    if hint is None:
        return axioms
    picked = [ax for ax in axioms if ax == hint or ax.name == hint or (isinstance(hint, Identity) and ax.name == hint.name)]
    if not picked:
        raise ReplayError(-1, f"hint {getattr(hint, 'label', hint)} is not among the axioms")
    return picked


def expand_chain(axioms: Sequence[Identity], displayed: Sequence[Word], hints: Sequence, slack: int = 2,
                 max_nodes: int = 2_000) -> Derivation:
    """Turn a displayed chain, whose steps may bundle several rewrites, into direct steps.

    A displayed step is accepted when it is a direct step of its hinted
    axiom, a ``ini2``-preserving step (bridged by single insertions and
    deletions), or one application of the hinted axiom modulo such steps.
    """
    axioms = list(axioms)
    i11 = next((ax for ax in axioms if is_variant(ax, I11)), None)
    words = [tuple(displayed[0])]
    labels = [None]
    for i, (u, v) in enumerate(zip(displayed, displayed[1:])):
        u, v = tuple(u), tuple(v)
        if u == v:
            continue
        candidates = _hinted(axioms, hints[i])
        wit = first_witness(u, v, candidates)
        if wit is not None:
            words.append(v)
            labels.append(wit.axiom)
            continue
        if i11 is not None and ini2(u) == ini2(v):
            seg = p_chain(u, v)
            words.extend(seg[1:])
            labels.extend([i11] * (len(seg) - 1))
            continue
        if i11 is None:
            raise ReplayError(i, f"{render(u)} -> {render(v)} is not a direct step")
        pool = [i11] + [ax for ax in candidates if ax is not i11]
        found = derive(pool, u, v, Budget(max_steps=1, max_len=max(len(u), len(v)) + slack,
                                           max_nodes=max_nodes, slack=slack))
        if not found:
            raise ReplayError(i, f"{render(u)} -> {render(v)} not bridged by {[ax.label for ax in candidates]}")
        words.extend(found.chain[1:])
        labels.extend(s.axiom for s in found.steps)
    return _finish(axioms, words, labels)


def critical_pairs(identity: Identity) -> list:
    """Adjacent occurrences ``(x, i), (y, j)`` of the lhs that appear in the other order in the rhs."""
    if not identity.is_balanced():
        raise ValueError("critical pairs need a balanced identity")
    u, v = identity.lhs, identity.rhs

    def tagged(w):
        counts: Counter = Counter()
        out = []
        for a in w:
            counts[a] += 1
            out.append((a, counts[a]))
        return out

    tu, tv = tagged(u), tagged(v)
    where = {occ: p for p, occ in enumerate(tv)}
    pairs = []
    for left, right in zip(tu, tu[1:]):
        if where[right] < where[left]:
            pairs.append((left, right))
    return pairs


def swap_pair(w: Word, pair: tuple) -> Word:
    """Swap the adjacent occurrences named by ``pair`` inside ``w``."""
    (x, i), (y, j) = pair
    counts: Counter = Counter()
    for p, a in enumerate(w):
        counts[a] += 1
        if a == x and counts[a] == i:
            if p + 1 < len(w) and w[p + 1] == y and counts[y] + (1 if y != x else 0) == j:
                return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
            raise ValueError(f"occurrences {pair} are not adjacent in {render(w)}")
    raise ValueError(f"occurrence {i}{x} missing in {render(w)}")


def removable(identity: Identity, pair: tuple, delta: Sequence[Identity], budget: Budget | None = None):
    """Can the critical pair be swapped using ``delta``?  Returns the search result."""
    u = identity.lhs
    return derive(delta, u, swap_pair(u, pair), budget)


def witness_to_json(wit: Witness) -> dict:
    return {
        "axiom": wit.axiom.label,
        "direction": wit.direction,
        "a": render(wit.a),
        "b": render(wit.b),
        "phi": {x: render(img) for x, img in wit.phi},
    }


def to_certificate(derivation: Derivation) -> dict:
    axioms = derivation.axioms
    return {
        "axioms": [ax.label for ax in axioms],
        "definitions": {ax.label: str(ax) for ax in axioms},
        "chain": [render(w) for w in derivation.chain],
        "steps": [witness_to_json(s) for s in derivation.steps],
    }


def certificate_json(derivation: Derivation) -> str:
    return json.dumps(to_certificate(derivation), indent=2, ensure_ascii=False)


def from_certificate(data: dict, resolve=None) -> Derivation:
    """Rebuild and verify a certificate.

    Axioms come from ``definitions`` when present, otherwise from
    ``resolve(name)``.  Recorded witnesses are checked exactly; steps
    without one fall back to ``replay``.
    """
    defs = data.get("definitions", {})
    axioms = []
    for name in data["axioms"]:
        if name in defs:
            axioms.append(parse_identity(defs[name], name))
        elif resolve is not None:
            axioms.append(resolve(name).with_name(name))
        else:
            raise ValueError(f"cannot resolve axiom {name!r}")
    by_name = {ax.label: ax for ax in axioms}
    chain = [parse_word(s) for s in data["chain"]]
    recorded = data.get("steps")
    if not recorded:
        return replay(axioms, chain)
    if len(recorded) != len(chain) - 1:
        raise ReplayError(len(recorded), "chain and step counts disagree")
    steps = []
    for i, raw in enumerate(recorded):
        axiom = by_name.get(raw["axiom"])
        if axiom is None:
            raise ReplayError(i, f"unknown axiom {raw['axiom']!r}")
        phi = {x: parse_word(img) for x, img in raw.get("phi", {}).items()}
        wit = _witness(parse_word(raw["a"]), parse_word(raw["b"]), phi, axiom, raw["direction"])
        steps.append(wit)
    derivation = Derivation(axioms, chain, steps)
    derivation.verify()
    return derivation
