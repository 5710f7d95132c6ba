"""Monoid varieties with decidable word problems, and invariant sampling.

``invariant_preserved`` is the bounded-evidence side of the
non-deducibility arguments: it walks single direct steps out of words
that share an invariant value with a seed word and reports any step that
changes the value.  Finding none proves nothing beyond the sampled steps.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .decomposition import h
from .identities import BACKWARD, FORWARD, I11, Identity, elementary_insertions, successors
from .words import Word, classify, ini, ini2, render


def holds_in_lrb(identity: Identity) -> bool:
    """Left regular bands: ``ini(u) == ini(v)``."""
    return ini(identity.lhs) == ini(identity.rhs)


def holds_in_p(identity: Identity) -> bool:
    """The variety of ``x s x t = x s x t x``: ``ini2(u) == ini2(v)``."""
    return ini2(identity.lhs) == ini2(identity.rhs)


def holds_in_sl(identity: Identity) -> bool:
    return set(identity.lhs) == set(identity.rhs)


def holds_in_f(k: int, identity: Identity) -> bool:
    """Word problem of ``F_k``: equal simple and multiple letters, and the
    level-``(k-1)`` dividers before first and second occurrences agree."""
    if k < 1:
        raise ValueError("F_k needs k >= 1")
    u, v = identity.lhs, identity.rhs
    if u == v:
        return True
    _, su, mu_ = classify(u)
    _, sv, mv = classify(v)
    if su != sv or mu_ != mv:
        return False
    for x in set(u):
        for i in ((1, 2) if x in mu_ else (1,)):
            if h(u, x, i, k - 1).letter != h(v, x, i, k - 1).letter:
                return False
    return True


@dataclass
class VarietySpec:
    name: str
    axioms: list
    decider: Callable | None = None
    description: str = ""

    def holds(self, identity: Identity) -> bool:
        if self.decider is None:
            raise ValueError(f"no decision procedure for {self.name}")
        return self.decider(identity)


def variety(spec: str) -> VarietySpec:
    """``lrb``, ``p``, ``sl``, ``t`` or ``f:K``."""
    from .families import FIXED, alpha

    key = spec.strip().lower()
    if key == "lrb":
        return VarietySpec("LRB", [FIXED["LRB_AX"]], holds_in_lrb, "left regular band monoids")
    if key == "p":
        return VarietySpec("P", [I11], holds_in_p, "defined by x s x t = x s x t x")
    if key == "sl":
        return VarietySpec("SL", [], holds_in_sl, "semilattice monoids")
    if key == "t":
        return VarietySpec("T", [], lambda _: True, "trivial monoids")
    m = re.fullmatch(r"f:(\d+)", key)
    if m and int(m.group(1)) >= 1:
        k = int(m.group(1))
        xxyy = Identity(("x", "x", "y", "y"), ("y", "y", "x", "x"), "XXYY_COMM")
        return VarietySpec(f"F{k}", [I11, xxyy, alpha(k)], lambda i, k=k: holds_in_f(k, i),
                           f"P with x x y y = y y x x and alpha{k}")
    raise ValueError(f"unknown variety {spec!r} (expected lrb, p, sl, t or f:K)")


def sigma_filter(pool: Iterable[Identity], oracle: Callable[[Identity], bool]) -> list:
    """The members of ``pool`` that ``oracle`` accepts, in pool order."""
    return [sigma for sigma in pool if oracle(sigma)]


@dataclass
class Violation:
    before: Word
    after: Word
    axiom: str
    direction: str

    def render(self) -> str:
        return f"{render(self.before)} -> {render(self.after)} by {self.axiom} ({self.direction})"


@dataclass
class InvariantReport:
    mode: str  # "exhaustive" or "sampled"
    words: int
    steps: int
    violations: list = field(default_factory=list)
    levels: int = 0  # inflation levels fully covered
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.violations:
            return f"violation: {self.violations[0].render()}"
        return (f"no violation found within budget ({self.steps} steps from {self.words} words, "
                f"{self.mode}, inflation levels covered: {self.levels})")


def invariant_preserved(axioms: Sequence[Identity], invariant: Callable[[Word], object],
                        seeds: Sequence[Word], samples: int = 10_000, seed: int = 0,
                        max_inflation: int = 12, cap: int | None = 3, max_len: int | None = None,
                        stop_at_first: bool = True, word_limit: int = 50_000) -> InvariantReport:
    """Check that single direct steps keep ``invariant`` fixed.

    Words are the seeds inflated by up to ``max_inflation`` occurrences
    inserted after two earlier ones (so ``ini2`` is unchanged), taken
    level by level in a seeded random order.  Every non-trivial step of
    every axiom in both directions, with substitution images of length at
    most ``cap``, is examined until ``samples`` steps have been seen.
    """
    rng = random.Random(seed)
    violations: list = []
    steps = words = 0
    levels = 0
    layer = list(dict.fromkeys(tuple(s) for s in seeds))
    seen = set(layer)
    complete = True
    for level in range(max_inflation + 1):
        order = list(layer)
        rng.shuffle(order)
        for w in order:
            target = invariant(w)
            words += 1
            for ax in axioms:
                for direction in (FORWARD, BACKWARD):
                    for v, wit in successors(w, ax, direction, max_len, cap):
                        steps += 1
                        if invariant(v) != target:
                            # re-check by applying the substitution, independently of the matcher
                            if wit.source() == w and wit.target() == v:
                                violations.append(Violation(w, v, ax.label, direction))
                                if stop_at_first:
                                    return InvariantReport("sampled", words, steps, violations, levels, seed)
            if steps >= samples:
                complete = level == max_inflation and w is order[-1]
                mode = "exhaustive" if complete else "sampled"
                return InvariantReport(mode, words, steps, violations, levels + (w is order[-1]), seed)
        levels += 1
        if level == max_inflation:
            break
        nxt = []
        for w in layer:
            for v in elementary_insertions(w, max_len):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if len(nxt) > word_limit:
            nxt = rng.sample(nxt, word_limit)
            complete = False
        layer = nxt
        if not layer:
            break
    return InvariantReport("exhaustive" if complete else "sampled", words, steps, violations, levels, seed)


def ini2_of(letters: Iterable[str] | None = None) -> Callable[[Word], Word]:
    """``w -> ini2(w)`` or, with ``letters``, ``w -> ini2(retain(w, letters))``."""
    if letters is None:
        return ini2
    keep = set(letters)
    return lambda w: ini2(tuple(a for a in w if a in keep))
