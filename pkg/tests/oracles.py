"""Slow, literal re-implementations used as independent references in tests.

None of these import the code under test beyond plain data types.
"""

import itertools
import math
from collections import Counter


def all_words(max_len, letters):
    out = [()]
    for n in range(1, max_len + 1):
        out += list(itertools.product(letters, repeat=n))
    return out


def divider_sets(w):
    """Level-by-level divider position sets, until two consecutive levels agree."""
    counts = Counter(w)
    levels = [frozenset(p for p, a in enumerate(w) if counts[a] == 1)]
    while True:
        prev = levels[-1]
        blocks, run = [], []
        for p in range(len(w)):
            if p in prev:
                if run:
                    blocks.append(run)
                run = []
            else:
                run.append(p)
        if run:
            blocks.append(run)
        new = set(prev)
        for block in blocks:
            inside = [w[p] for p in block]
            earlier = set(w[:block[0]])
            for p in block:
                if inside.count(w[p]) == 1 and w[p] not in earlier:
                    new.add(p)
        if new == prev:
            return levels
        levels.append(frozenset(new))


def dividers_at(w, k):
    levels = divider_sets(w)
    return levels[min(k, len(levels) - 1)]


def depth(w, x):
    where = [p for p, a in enumerate(w) if a == x]
    if len(where) == 1:
        return 0
    p1, p2 = where[:2]
    levels = divider_sets(w)
    for k in range(1, len(levels) + 1):
        if any(p1 <= q <= p2 for q in levels[k - 1]):
            return k
    return math.inf


def h_position(w, x, i, k):
    """Position of the rightmost level-k divider before the i-th x, or -1 for the boundary."""
    p = [q for q, a in enumerate(w) if a == x][i - 1]
    before = [q for q in dividers_at(w, k) if q < p]
    return max(before) if before else -1


def form_pivot_choices(w, x):
    """Every pivot tuple (x_0..x_{k-1}) meeting the ordering, depth and
    no-divider constraints, by brute force over all letter tuples."""
    k = depth(w, x)
    letters = sorted(set(w))
    valid = []
    for rest in itertools.product(letters, repeat=k):
        pivots = list(rest) + [x]
        if len(set(pivots)) != k + 1:
            continue
        if any(depth(w, pivots[s]) != s for s in range(k)):
            continue
        pos = {}
        ok = True
        for s, a in enumerate(pivots):
            where = [p for p, b in enumerate(w) if b == a]
            if s >= 1 and len(where) < 2:
                ok = False
                break
            pos[s] = where
        if not ok:
            continue
        plan = [(k, 1)]
        for s in range(k - 1, -1, -1):
            plan += [(s, 1), (s + 1, 2)]
        cuts = [pos[s][i - 1] for s, i in plan]
        if any(a >= b for a, b in zip(cuts, cuts[1:])):
            continue
        # u_{2s+2} lies between the markers at plan indices 2(k-s)-2 and 2(k-s)-1
        for s in range(k):
            lo, hi = cuts[2 * (k - s) - 2], cuts[2 * (k - s) - 1]
            if any(lo < q < hi for q in dividers_at(w, s)):
                ok = False
                break
        if ok:
            valid.append(tuple(pivots))
    return valid


def matches(pattern, word, binding=None):
    """All substitutions (images possibly empty) with phi(pattern) == word."""
    binding = dict(binding or {})
    if not pattern:
        if not word:
            yield binding
        return
    a, rest = pattern[0], pattern[1:]
    if a in binding:
        img = binding[a]
        if word[:len(img)] == img:
            yield from matches(rest, word[len(img):], binding)
        return
    for n in range(len(word) + 1):
        binding[a] = word[:n]
        yield from matches(rest, word[n:], binding)
        del binding[a]


def one_step_words(w, src, dst, cap=None):
    """Words ``a phi(dst) b`` for every factorisation ``w = a phi(src) b``."""
    out = set()
    for i in range(len(w) + 1):
        for j in range(i, len(w) + 1):
            for phi in matches(src, w[i:j]):
                if cap is not None and any(len(img) > cap for img in phi.values()):
                    continue
                img = tuple(c for a in dst for c in phi.get(a, (a,)))
                v = w[:i] + img + w[j:]
                if v != w:
                    out.add(v)
    return out


def satisfies(elements, table, one, lhs, rhs, letters):
    """First counterexample (dict) in odometer order, or None."""
    n = len(elements)
    for values in itertools.product(range(n), repeat=len(letters)):
        asg = dict(zip(letters, values))

        def ev(w):
            acc = one
            for a in w:
                acc = table[acc][asg[a]]
            return acc

        if ev(lhs) != ev(rhs):
            return {a: elements[asg[a]] for a in letters}
    return None
