"""Finite monoids given by Cayley tables, and identity checking in them.

Identity checking walks every assignment of elements to letters in
odometer order (letters sorted by name, the last letter varying fastest,
elements in table order) and reports the first counterexample.  The walk
is vectorised with numpy over the trailing letters.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .identities import Identity
from .words import Word, render, sorted_letters


class MonoidError(ValueError):
    pass


class NotAssociative(MonoidError):
    def __init__(self, triple):
        super().__init__(f"table is not associative at {triple}")
        self.triple = triple


class DidNotClose(MonoidError):
    pass


@dataclass
class FiniteMonoid:
    elements: list
    one: int
    table: np.ndarray
    name: str = ""
    generators: dict = field(default_factory=dict)  # generator name -> element index

    def __post_init__(self):
        self.index = {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, a: str, b: str) -> str:
        return self.elements[self.table[self.index[a], self.index[b]]]

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "one": self.elements[self.one],
            "table": self.table.tolist(),  # table[i][j] is the index of e_i * e_j
        }

    def render_table(self) -> str:
        width = max(len(e) for e in self.elements)
        head = " " * (width + 1) + " ".join(e.rjust(width) for e in self.elements)
        rows = [head]
        for i, e in enumerate(self.elements):
            rows.append(e.rjust(width) + " " + " ".join(self.elements[c].rjust(width) for c in self.table[i]))
        return "\n".join(rows)

    def reordered(self, names: list) -> "FiniteMonoid":
        """Same monoid with elements listed in the order ``names``."""
        if sorted(names) != sorted(self.elements):
            raise MonoidError(f"{names} is not a relabelling of {self.elements}")
        perm = [self.index[n] for n in names]
        inv = {old: new for new, old in enumerate(perm)}
        table = np.array([[inv[self.table[i, j]] for j in perm] for i in perm], dtype=np.int64)
        gens = {g: inv[i] for g, i in self.generators.items()}
        return FiniteMonoid(list(names), inv[self.one], table, self.name, gens)


def from_table(elements, one, table, name: str = "") -> FiniteMonoid:
    """Validate a Cayley table given by element names (or indices)."""
    elements = [str(e) for e in elements]
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise MonoidError("duplicate element names")
    n = len(elements)
    rows = []
    if len(table) != n:
        raise MonoidError(f"table has {len(table)} rows, expected {n}")
    for row in table:
        if len(row) != n:
            raise MonoidError("table is not square")
        out = []
        for cell in row:
            if isinstance(cell, (int, np.integer)) and not isinstance(cell, bool):
                if not 0 <= cell < n:
                    raise MonoidError(f"entry {cell} out of range")
                out.append(int(cell))
            elif str(cell) in index:
                out.append(index[str(cell)])
            else:
                raise MonoidError(f"unknown element {cell!r} in table")
        rows.append(out)
    t = np.array(rows, dtype=np.int64).reshape(n, n)
    e = index[str(one)] if str(one) in index else int(one)
    if not (np.all(t[e, :] == np.arange(n)) and np.all(t[:, e] == np.arange(n))):
        raise MonoidError(f"{elements[e]} is not a two-sided identity")
    left = t[t, :]  # (ab)c as left[a, b, c]
    right = t[:, t]  # a(bc) as right[a, b, c]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b_, c = bad[0]
        raise NotAssociative((elements[a], elements[b_], elements[c]))
    return FiniteMonoid(elements, e, t, name)


def from_json(data: dict, name: str = "") -> FiniteMonoid:
    return from_table(data["elements"], data["one"], data["table"], name)


def load(path: str) -> FiniteMonoid:
    with open(path) as fh:
        return from_json(json.load(fh), path)


ZERO = "0"


def from_presentation(generators, relations, max_elements: int = 64, max_len: int = 12,
                      name: str = "") -> FiniteMonoid:
    """The monoid ``<generators | relations>``, if it is finite and small.

    Relations are pairs of tuples of generator names; the name ``"0"``
    stands for an adjoined zero.  Words up to length ``L`` are merged when
    one relation application (either direction) links them; ``L`` grows
    until the classes are closed under right multiplication and every
    relation holds from every class.  Each merge is a consequence of the
    relations, and the final check shows the classes form a model, so the
    result is the presented monoid.
    """
    gens = list(generators)
    rels = [(tuple(l), tuple(r)) for l, r in relations]
    if any(ZERO in side for rel in rels for side in rel):
        gens = gens + [ZERO]
        for g in gens:
            rels += [((ZERO, g), (ZERO,)), ((g, ZERO), (ZERO,))]
    for L in range(2, max_len + 1):
        if len(gens) ** L > 400_000:
            break
        result = _close(gens, rels, L, max_elements)
        if result is not None:
            reps, delta = result
            return _assemble(gens, reps, delta, name)
    raise DidNotClose(f"presentation did not close within {max_elements} elements and word length {max_len}")


def _close(gens, rels, L, max_elements):
    words = [()]
    for n in range(1, L + 1):
        words += [tuple(p) for p in itertools.product(gens, repeat=n)]
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if (len(rb), rb) < (len(ra), ra):
                ra, rb = rb, ra
            parent[rb] = ra

    for w in words:
        for l, r in rels:
            for src, dst in ((l, r), (r, l)):
                k = len(src)
                for p in range(len(w) - k + 1):
                    if w[p:p + k] == src:
                        v = w[:p] + dst + w[p + k:]
                        if len(v) <= L:
                            union(w, v)
    # breadth-first closure from the empty word
    rep_of = {}
    reps = []
    queue = deque([()])
    rep_of[find(())] = ()
    reps.append(())
    delta = {}
    while queue:
        r = queue.popleft()
        for g in gens:
            w = r + (g,)
            if len(w) > L:
                return None
            root = find(w)
            if root not in rep_of:
                rep_of[root] = w
                reps.append(w)
                queue.append(w)
                if len(reps) > max_elements:
                    raise DidNotClose(f"more than {max_elements} elements")
            delta[r, g] = rep_of[root]

    def run(state, word):
        for g in word:
            state = delta[state, g]
        return state

    for r in reps:
        for l, rr in rels:
            if run(r, l) != run(r, rr):
                return None
    return reps, delta


def _assemble(gens, reps, delta, name):
    names = ["".join(r) if r else "1" for r in reps]
    if ZERO in gens:
        names = [ZERO if ZERO in r else n for r, n in zip(reps, names)]
    index = {r: i for i, r in enumerate(reps)}
    n = len(reps)
    table = np.zeros((n, n), dtype=np.int64)
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            state = r
            for g in s:
                state = delta[state, g]
            table[i, j] = index[state]
    monoid = from_table(names, "1", table, name)
    monoid.generators = {g: index[delta[(), g]] for g in gens}
    return monoid


def _value(monoid: FiniteMonoid, letter: str, assignment: dict) -> int:
    if letter in assignment:
        val = assignment[letter]
        return monoid.index[val] if isinstance(val, str) else int(val)
    if letter in monoid.generators:
        return monoid.generators[letter]
    if letter in monoid.index:
        return monoid.index[letter]
    raise MonoidError(f"no value for letter {letter}")


def evaluate(monoid: FiniteMonoid, w: Word, assignment: dict | None = None) -> str:
    """Value of ``w``; unassigned letters naming generators or elements denote themselves."""
    assignment = assignment or {}
    acc = monoid.one
    for a in w:
        acc = monoid.table[acc, _value(monoid, a, assignment)]
    return monoid.elements[acc]


@dataclass
class SatResult:
    holds: bool
    counterexample: dict | None
    assignments: int  # number of assignments examined

    def __bool__(self) -> bool:
        return self.holds

    def render(self) -> str:
        if self.holds:
            return "holds"
        return " ".join(f"{k}={v}" for k, v in self.counterexample.items())


def check(monoid: FiniteMonoid, identity: Identity, chunk: int = 1 << 18) -> SatResult:
    """Decide ``monoid ⊨ identity`` and return the first counterexample if any."""
    letters = sorted_letters(identity.letters())
    n = monoid.size
    if not letters:
        ok = identity.lhs == identity.rhs
        return SatResult(ok, None if ok else {}, 1)
    table = monoid.table
    # vectorise the trailing letters, loop over the leading ones
    tail = 0
    while tail < len(letters) and n ** (tail + 1) <= chunk:
        tail += 1
    tail = max(tail, 1)
    lead = letters[:len(letters) - tail]
    vec = letters[len(letters) - tail:]
    grids = np.indices((n,) * len(vec)).reshape(len(vec), -1)
    width = grids.shape[1]
    examined = 0
    for prefix in itertools.product(range(n), repeat=len(lead)):
        values = dict(zip(lead, prefix))
        values.update({a: grids[i] for i, a in enumerate(vec)})

        def run(w):
            acc = np.full(width, monoid.one, dtype=np.int64)
            for a in w:
                acc = table[acc, values[a]]
            return acc

        diff = np.nonzero(run(identity.lhs) != run(identity.rhs))[0]
        if len(diff):
            pos = int(diff[0])
            examined += pos + 1
            example = {a: monoid.elements[prefix[i]] for i, a in enumerate(lead)}
            example.update({a: monoid.elements[int(grids[i, pos])] for i, a in enumerate(vec)})
            return SatResult(False, {a: example[a] for a in letters}, examined)
        examined += width
    return SatResult(True, None, examined)


def satisfies(monoid: FiniteMonoid, identity: Identity) -> bool:
    return check(monoid, identity).holds


def holds_relations(monoid: FiniteMonoid, relations) -> bool:
    """Defining relations as equations between generator constants."""
    return all(evaluate(monoid, tuple(l)) == evaluate(monoid, tuple(r)) for l, r in relations)


def _p21() -> FiniteMonoid:
    m = from_presentation(["a", "b"], P21_RELATIONS, name="p21")
    return m.reordered(["a", "b", "ba", "bb", "1"])


def _b21() -> FiniteMonoid:
    m = from_presentation(["a", "b"], B21_RELATIONS, name="b21")
    return m.reordered(["a", "b", "ab", "ba", "0", "1"])


def _lz2_1() -> FiniteMonoid:
    return from_table(["1", "e", "f"], "1",
                      [["1", "e", "f"], ["e", "e", "e"], ["f", "f", "f"]], "lz2_1")


P21_RELATIONS = [(("a", "a"), ("a",)), (("a", "b"), ("a",)), (("b", "b", "a"), ("b", "b"))]
B21_RELATIONS = [(("a", "b", "a"), ("a",)), (("b", "a", "b"), ("b",)),
                 (("a", "a"), (ZERO,)), (("b", "b"), (ZERO,))]

_BUILTINS = {"p21": _p21, "b21": _b21, "lz2_1": _lz2_1}
_CACHE: dict = {}


def builtin(name: str) -> FiniteMonoid:
    if name not in _BUILTINS:
        raise MonoidError(f"unknown builtin monoid {name!r}; known: {', '.join(_BUILTINS)}")
    if name not in _CACHE:
        _CACHE[name] = _BUILTINS[name]()
    return _CACHE[name]


def builtin_names() -> list:
    return list(_BUILTINS)


def describe_counterexample(result: SatResult) -> str:
    return result.render()


def word_value_table(monoid: FiniteMonoid, w: Word) -> str:
    return f"{render(w)} -> {evaluate(monoid, w)}"
