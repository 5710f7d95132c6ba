"""Displayed derivation chains and their expansion into direct steps.

Each builder returns a ``ChainFixture``: the axiom names, the chain as it
would be written by hand (steps may bundle several rewrites), and one
rule hint per displayed step.  ``expand`` turns it into a verified
``Derivation`` of direct steps.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources

from ..families import FIXED, X, Y, b, delta, epsilon, gamma, kappa, resolve
from ..identities import (I11, Derivation, apply_subst, expand_chain, from_certificate, to_certificate)
from ..words import Word, classify, ini2, ini_sq, parse_word, render


@dataclass
class ChainFixture:
    id: str
    axioms: list  # canonical identity names
    chain: list  # words
    hints: list  # axiom name per displayed step
    goal: tuple  # (start, end) the chain must connect

    def axiom_set(self) -> list:
        return [resolve(name).with_name(name) for name in self.axioms]

    def expand(self) -> Derivation:
        derivation = expand_chain(self.axiom_set(), self.chain, self.hints)
        derivation.verify()
        if (derivation.start, derivation.end) != tuple(self.goal):
            raise ValueError(f"{self.id}: chain does not connect the goal words")
        return derivation

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "axioms": list(self.axioms),
            "chain": [render(w) for w in self.chain],
            "hints": list(self.hints),
            "goal": [render(w) for w in self.goal],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChainFixture":
        return cls(data["id"], list(data["axioms"]), [parse_word(w) for w in data["chain"]],
                   list(data["hints"]), tuple(parse_word(w) for w in data["goal"]))


def _bb(s: int, q: int) -> Word:
    # b_{s,q} with the empty convention for q = s + 1
    return b(s, q) if s >= 1 else ()


def kappa_delta_chain(k: int) -> ChainFixture:
    """``delta_k^k`` from ``(1.1)`` and ``kappa_k``."""
    yk1, yk, xk, xk1 = Y(k + 1), Y(k), X(k), X(k - 1)
    if k == 1:
        c = d = ()
    else:
        c = (X(k - 2), X(k - 1), X(k)) + b(k - 2)
        d = (X(k - 2), X(k), X(k - 1), X(k)) + b(k - 2)
    chain = [
        (yk1, yk, xk, yk1, xk1, xk, yk) + b(k - 1),
        (yk1, yk, xk, yk1, xk1, xk, yk, xk) + c,
        (yk1, yk1, yk, xk, xk1, xk, yk, xk) + c,
        (yk1, yk1, yk, xk, xk1, xk, yk) + d,
        (yk1, yk, yk1, xk, xk1, xk, yk) + d,
        (yk1, yk, yk1, xk, xk1, xk, yk) + b(k - 1),
    ]
    target = delta(k, k)
    ka = f"kappa{k}"
    return ChainFixture(f"kappa_delta_k{k}", ["I11", ka], chain, ["I11", ka, "I11", ka, "I11"],
                        (target.lhs, target.rhs))


def gamma_inclusion_chain(k: int, m: int) -> ChainFixture:
    """``gamma_{k+1}`` from ``(1.1)``, ``kappa_k``, ``epsilon_0`` and ``delta_k^m``."""
    x1, x0 = X(k + 1), X(k)
    head = ("y1", "y0")
    tail_m = _bb(k, m) + ("y1",) + b(m - 1)
    chain = [
        head + ("y1", x1, x0, x1) + b(k),
        head + ("y1", x1, x1, x0) + b(k),
        head + (x1, "y1", x1, x0) + b(k),
        head + (x1, "y1", x1, x0) + tail_m,
        head + (x1, "y1", x0, x1) + tail_m,
        head + (x1, "y1", x0, x1) + b(k),
    ]
    target = gamma(k + 1)
    names = ["I11", f"kappa{k}", "epsilon0", f"delta{k}_{m}"]
    return ChainFixture(f"gamma_inclusion_k{k}_m{m}", names, chain,
                        [f"kappa{k}", "epsilon0", "I11", f"delta{k}_{m}", "I11"],
                        (target.rhs, target.lhs))


def _d1(m: int) -> Word:
    ym = Y(m)
    if m == 1:
        return (ym,)
    if m == 2:
        return (ym, X(m - 2), X(m - 1))
    return (ym, X(m - 2), X(m - 1), X(m - 3), ym, X(m - 2)) + b(m - 3)


def _d2(k: int, m: int) -> Word:
    ym = Y(m)
    if m == 1:
        return (ym,)
    return (ym, X(m - 2), X(k)) + _bb(k, m) + b(m - 2)


def delta_inclusion_chain(k: int, m: int) -> ChainFixture:
    """``delta_{k+1}^m`` from ``(1.1)``, ``kappa_k``, ``epsilon_m`` and ``delta_k^k``."""
    y1, y0, x1, x0 = Y(m + 1), Y(m), X(k + 1), X(k)
    bkm = _bb(k, m)
    d1, d2 = _d1(m), _d2(k, m)
    mid = (x0,) + _bb(k, k) + (y1,) + _bb(k - 1, m) + d1
    chain = [
        (y1, y0, y1, x1, x0, x1) + bkm + (y0,) + b(m - 1),
        (y1, y0, y1, x1, x0, x1) + bkm + d1,
        (y1, y0, y1, x1, x1, x0) + bkm + d1,
        (y1, y0, y1, x1, x1, x0) + bkm + d2,
        (y1, y0, x1, y1, x1, x0) + bkm + d2,
        (y1, y0, x1, y1, x1) + mid,
        (y1, y0, x1, y1) + mid[:1] + (x1,) + mid[1:],
        (y1, y0, x1, y1, x0, x1) + bkm + (y0,) + b(m - 1),
    ]
    target = delta(k + 1, m)
    names = ["I11", f"kappa{k}", f"epsilon{m}", f"delta{k}_{k}"]
    return ChainFixture(f"delta_inclusion_k{k}_m{m}", names, chain,
                        ["I11", f"kappa{k}", "I11", f"epsilon{m}", "I11", f"delta{k}_{k}", "I11"],
                        (target.rhs, target.lhs))


def _rename(phi: dict) -> dict:
    return {a: tuple(v) for a, v in phi.items()}


def phi1(k: int, m: int) -> dict:
    phi = {X(m - 1): (X(m), X(m + 1), X(m - 1), X(m))}
    for j in range(m, k + 1):
        phi[X(j)] = (X(j + 1),)
    return _rename(phi)


def phi2(k: int, m: int) -> dict:
    phi = {X(m - 1): ("x", X(m - 1))}
    for j in range(m, k):
        phi[X(j)] = ()
    phi[X(k)] = ("x",)
    phi[Y(m)] = (X(m),)
    return _rename(phi)


def phi3(k: int, m: int) -> dict:
    return _rename({X(m - 1): (Y(m + 1), X(m - 1)), Y(m): (Y(m + 1),), Y(m + 1): (Y(m + 2),)})


def substitution_chain(which: int, k: int, m: int) -> ChainFixture:
    """The consequence of ``delta_k^m`` under phi1/phi2/phi3, joined by ``(1.1)``."""
    source = delta(k, m)
    if which == 1:
        phi, target = phi1(k, m), delta(k + 1, m)
    elif which == 2:
        phi, target = phi2(k, m), epsilon(m)
    elif which == 3:
        if not m < k:
            raise ValueError("phi3 needs m < k")
        phi, target = phi3(k, m), delta(k, m + 1)
    else:
        raise ValueError("which is 1, 2 or 3")
    chain = [target.lhs, apply_subst(phi, source.lhs), apply_subst(phi, source.rhs), target.rhs]
    name = f"delta{k}_{m}"
    return ChainFixture(f"phi{which}_k{k}_m{m}", ["I11", name], chain, ["I11", name, "I11"],
                        (target.lhs, target.rhs))


def _non_islands(w: Word) -> list:
    """Letters of a 2-limited word whose two occurrences are not adjacent."""
    out = []
    for a in dict.fromkeys(w):
        p = w.index(a)
        if w.count(a) == 2 and not (p + 1 < len(w) and w[p + 1] == a):
            out.append(a)
    return out


def _sq(letters) -> Word:
    return tuple(a for a in letters for _ in range(2))


def _merge_squares(prefix: Word, letters: Word, suffix: Word) -> list:
    """``y1^2 ... yn^2`` into ``(y1 ... yn)^2``, one ``(xy)^2 = x^2 y^2`` step at a time."""
    n = len(letters)
    out: list = []
    for j in range(n - 2, -1, -1):
        out.append(prefix + _sq(letters[:j]) + letters[j:] * 2 + suffix)
    return out  # ends at prefix + letters*2 + suffix when n >= 2


def island_chain(w: Word) -> tuple:
    """Rewrite a word without simple letters into its squared initial part.

    Follows the induction on non-island letters: pick the non-island
    letter ``x`` whose first occurrence is rightmost, square up the factor
    between its occurrences, merge, swap ``x`` left and unmerge.  Returns
    the displayed chain and hints for ``expand_chain``.
    """
    w = tuple(w)
    if classify(w)[1]:
        raise ValueError("word has simple letters")
    chain, hints = [w], []

    def push(v, hint):
        if v != chain[-1]:
            chain.append(v)
            hints.append(hint)

    push(ini2(w), "I11")
    while True:
        cur = chain[-1]
        todo = _non_islands(cur)
        if not todo:
            break
        x = max(todo, key=cur.index)
        p = cur.index(x)
        q = cur.index(x, p + 1)
        w1, between, w2 = cur[:p], cur[p + 1:q], cur[q + 1:]
        ys = tuple(dict.fromkeys(between))
        sq = _sq(ys)
        push(w1 + (x,) + sq + (x,) + sq + w2, "I11")
        if len(ys) > 1:
            for v in _merge_squares(w1 + (x,), ys, (x,) + sq + w2):
                push(v, "XYXY")
            for v in _merge_squares(w1 + (x,) + ys * 2 + (x,), ys, w2):
                push(v, "XYXY")
        push(w1 + (x, x) + ys * 4 + w2, "XYXY")
        push(w1 + (x, x) + ys * 2 + w2, "I11")
        if len(ys) > 1:
            for v in reversed(_merge_squares(w1 + (x, x), ys, w2)):
                push(v, "XYXY")
            push(w1 + (x, x) + sq + w2, "XYXY")
        push(w1 + (x, x) + between + w2, "I11")
    return chain, hints


def island_fixture(w: Word, ident: str | None = None) -> ChainFixture:
    chain, hints = island_chain(w)
    return ChainFixture(ident or f"island_{'_'.join(w)}", ["I11", "XYXY"], chain, hints,
                        (tuple(w), ini_sq(w)))


def random_square_words(count: int, max_len: int = 10, seed: int = 0, alphabet: int = 4) -> list:
    """Distinct random words of length <= ``max_len`` where every letter occurs at least twice."""
    rng = random.Random(seed)
    letters = ["x", "y", "z", "t"][:alphabet] if alphabet <= 4 else [f"x{i}" for i in range(alphabet)]
    out: dict = {}
    tries = 0
    while len(out) < count and tries < 100 * count:
        tries += 1
        n = rng.randint(4, max_len)
        w = [rng.choice(letters) for _ in range(n)]
        if all(w.count(a) != 1 for a in set(w)):
            out.setdefault(tuple(w), None)
    return list(out)


def printed_fixtures(k_max: int = 3) -> list:
    """All chain fixtures at parameters up to ``k_max`` (the inclusion chains stop at 2)."""
    out = [kappa_delta_chain(k) for k in range(1, k_max + 1)]
    small = min(k_max, 2)
    for k in range(1, small + 1):
        for m in range(1, k + 1):
            out.append(substitution_chain(1, k, m))
            out.append(substitution_chain(2, k, m))
            if m < k:
                out.append(substitution_chain(3, k, m))
    for k in range(1, small + 1):
        for m in range(1, k + 1):
            out.append(gamma_inclusion_chain(k, m))
            out.append(delta_inclusion_chain(k, m))
    return out


DATA_FILE = "chains.json"


def load_data() -> dict:
    text = resources.files(__package__).joinpath("data", DATA_FILE).read_text(encoding="utf-8")
    return json.loads(text)


def build_data(k_max: int = 3) -> dict:
    """The contents of the shipped data file: displayed chains plus expanded certificates."""
    entries = []
    for fx in printed_fixtures(k_max):
        entry = fx.to_json()
        entry["certificate"] = to_certificate(fx.expand())
        entries.append(entry)
    return {"k_max": k_max, "fixtures": entries}


def certificate_from_entry(entry: dict) -> Derivation:
    return from_certificate(entry["certificate"], resolve)
