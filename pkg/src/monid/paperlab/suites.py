"""Verification suites with three-way outcomes.

A case ends as ``pass``, ``fail`` (a counterexample, kept as the witness)
or ``exhausted`` (a bounded search gave up).  Exhaustion is never folded
into pass or fail; the process exit code is 0, 1 or 2 accordingly, with
failures taking precedence.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from ..decomposition import (INF, _positions, canonical_form, decompose, depth, divider_letters, h,
                             iter_forms, max_level, validate_form, well_balanced)
from ..families import (FIXED, delta, epsilon, eta, gamma, kappa, lambda_, mu, nu, omega, phi_pool,
                        resolve, z_pair, zeta)
from ..finite_monoids import B21_RELATIONS, builtin, check, evaluate, from_table, holds_relations
from ..identities import (I11, Budget, Derivation, Identity, directly_deducible, derive, parse_identity,
                          successors)
from ..varieties import holds_in_f, holds_in_lrb, holds_in_sl, ini2_of, invariant_preserved, sigma_filter
from ..words import Word, ini, parse_word, render
from . import fixtures

PASS, FAIL, EXHAUSTED = "pass", "fail", "exhausted"
EXIT_CODES = {PASS: 0, FAIL: 1, EXHAUSTED: 2}


@dataclass
class CaseResult:
    id: str
    status: str
    witness: str | None = None
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def totals(self) -> dict:
        counts = {PASS: 0, FAIL: 0, EXHAUSTED: 0}
        for c in self.cases:
            counts[c.status] += 1
        counts["cases"] = len(self.cases)
        return counts

    @property
    def outcome(self) -> str:
        statuses = {c.status for c in self.cases}
        if FAIL in statuses:
            return FAIL
        if EXHAUSTED in statuses:
            return EXHAUSTED
        return PASS

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def failures(self) -> list:
        return [c for c in self.cases if c.status == FAIL]

    def case(self, ident: str) -> CaseResult:
        for c in self.cases:
            if c.id == ident:
                return c
        raise KeyError(ident)

    def to_json(self) -> dict:
        totals = dict(self.totals)
        totals["wall_time"] = round(self.wall_time, 3)
        return {"suite": self.suite, "cases": [c.to_json() for c in self.cases], "totals": totals}

    def render(self) -> str:
        lines = []
        for c in self.cases:
            line = f"{c.status:9} {c.id}"
            if c.detail:
                line += f"  ({c.detail})"
            if c.witness is not None:
                line += f"  witness: {c.witness}"
            lines.append(line)
        t = self.totals
        lines.append(f"{self.suite}: {t[PASS]} passed, {t[FAIL]} failed, {t[EXHAUSTED]} exhausted "
                     f"in {self.wall_time:.1f}s")
        return "\n".join(lines)


def merge(name: str, reports: list) -> SuiteReport:
    out = SuiteReport(name)
    for r in reports:
        out.cases += [CaseResult(f"{r.suite}/{c.id}", c.status, c.witness, c.detail, c.seconds)
                      for c in r.cases]
        out.wall_time += r.wall_time
    return out


def _timed(ident: str, fn: Callable) -> CaseResult:
    start = time.perf_counter()
    try:
        status, witness, detail = fn()
    except Exception as exc:  # a crash inside a case is a failure of that case
        status, witness, detail = FAIL, None, f"{type(exc).__name__}: {exc}"
    return CaseResult(ident, status, witness, detail, time.perf_counter() - start)


def _run(suite: str, cases: list, jobs: int = 1) -> SuiteReport:
    """Run ``(id, callable)`` cases; results keep the case order whatever ``jobs`` is."""
    start = time.perf_counter()
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_timed, [c[0] for c in cases], [c[1] for c in cases]))
    else:
        results = [_timed(ident, fn) for ident, fn in cases]
    return SuiteReport(suite, results, time.perf_counter() - start)


# ---------------------------------------------------------------- decomposition

ALPHABET = ("x", "y", "z", "t", "s", "r")


def corpus(max_len: int, alphabet: int) -> list:
    """Every word of length ``<= max_len`` over the first ``alphabet`` letters."""
    letters = ALPHABET[:alphabet]
    out = [()]
    for n in range(1, max_len + 1):
        out += list(itertools.product(letters, repeat=n))
    return out


def _first(w: Word, a: str) -> int:
    return w.index(a)


def _second(w: Word, a: str) -> int:
    return w.index(a, w.index(a) + 1)


def _buggy_dividers(words: list) -> Callable:
    """Divider letters with the last level-0 divider of one word dropped."""
    victim = next((w for w in words if divider_letters(w, 0)), None)

    def letters(w, k):
        out = divider_letters(w, k)
        if w == victim and k == 0:
            out = out[:-1]
        return out

    return letters


def check_divider_depth(max_len: int, alphabet: int, inject_bug: bool = False):
    words = corpus(max_len, alphabet)
    letters_of = _buggy_dividers(words) if inject_bug else divider_letters
    checked = 0
    for w in words:
        for k in range(max_level(w) + 2):
            divs = set(letters_of(w, k))
            for t in set(w):
                checked += 1
                if (t in divs) != (depth(w, t, method="h") <= k):
                    return FAIL, f"w={render(w)} k={k} t={t}", ""
    return PASS, None, f"{len(words)} words, {checked} (word, level, letter) triples"


def check_depth_methods(max_len: int, alphabet: int):
    words = corpus(max_len, alphabet)
    for w in words:
        for x in set(w):
            if depth(w, x, "blocks") != depth(w, x, "h"):
                return FAIL, f"w={render(w)} x={x}", ""
    return PASS, None, f"{len(words)} words"


def check_h_order(max_len: int, alphabet: int):
    n = 0
    for w in corpus(max_len, alphabet):
        for x in set(w):
            k = depth(w, x)
            if k == INF or k < 1:
                continue
            t = h(w, x, 2, k - 1)
            if t.is_boundary:
                continue
            n += 1
            if not _first(w, x) < _first(w, t.letter):
                return FAIL, f"w={render(w)} x={x} t={t.letter}", ""
    return PASS, None, f"{n} instances"


def check_between_dividers(max_len: int, alphabet: int):
    n = 0
    for w in corpus(max_len, alphabet):
        for x in set(w):
            k = depth(w, x)
            if k == INF or k < 1:
                continue
            for t in set(divider_letters(w, k - 1)):
                if not _first(w, x) < _first(w, t) < _second(w, x):
                    continue
                n += 1
                if depth(w, t) != k - 1:
                    return FAIL, f"w={render(w)} x={x} t={t}: depth(t) != {k - 1}", ""
                if k > 1 and not _second(w, x) < _second(w, t):
                    return FAIL, f"w={render(w)} x={x} t={t}: second occurrences out of order", ""
    return PASS, None, f"{n} instances"


def check_first_then_second(max_len: int, alphabet: int):
    n = 0
    for w in corpus(max_len, alphabet):
        d = {a: depth(w, a) for a in set(w)}
        for y, z in itertools.permutations(d, 2):
            if d[y] == INF:
                continue
            r = d[y] + 2
            if d[z] >= r and _first(w, z) < _first(w, y):
                n += 1
                if not _second(w, z) < _first(w, y):
                    return FAIL, f"w={render(w)} y={y} z={z}", ""
    return PASS, None, f"{n} instances"


def check_second_occurrence(max_len: int, alphabet: int):
    """``₂y_m`` lands in ``u_{2m}``, ``u_{2m-1}`` or ``u_{2m-2}`` of every form for ``x_k``."""
    n = 0
    for w in corpus(max_len, alphabet):
        d = {a: depth(w, a) for a in set(w)}
        for x, k in d.items():
            if k == INF or k < 1:
                continue
            for form in iter_forms(w, x, strict=False):
                head = _first(w, x)
                for y, m in d.items():
                    if m == INF or m < 1 or not _first(w, y) < head:
                        continue
                    gap = range(_first(w, y) + 1, head)
                    if any(p in gap for p in _positions(w, m - 1)):
                        continue
                    n += 1
                    seg = form.segment_of(_second(w, y))
                    if seg not in (2 * m, 2 * m - 1, 2 * m - 2):
                        return FAIL, f"w={render(w)} x={x} y={y} form: {form.render()}", ""
    return PASS, None, f"{n} instances"


def check_canonical_forms(max_len: int, alphabet: int):
    n = 0
    for w in corpus(max_len, alphabet):
        for x in set(w):
            k = depth(w, x)
            if k == INF or k < 1:
                continue
            n += 1
            form = canonical_form(w, x)
            if form.reassemble() != w or validate_form(form, strict=True):
                return FAIL, f"w={render(w)} x={x}", "; ".join(validate_form(form))
    return PASS, None, f"{n} (word, letter) pairs"


def check_reassembly_and_stationarity(max_len: int, alphabet: int):
    for w in corpus(max_len, alphabet):
        top = max_level(w)
        for k in range(top + 4):
            dec = decompose(w, k)
            rebuilt: list = []
            for dv, (a, b) in zip(dec.dividers, dec.blocks):
                if not dv.is_boundary:
                    rebuilt.append(dv.letter)
                rebuilt.extend(w[a:b])
            if tuple(rebuilt) != w:
                return FAIL, f"w={render(w)} k={k}: parts do not reassemble", ""
            if k > top and dec.dividers != decompose(w, top).dividers:
                return FAIL, f"w={render(w)} k={k}: not stationary past level {top}", ""
    return PASS, None, ""


DECOMPOSITION_CHECKS = {
    "divider_iff_depth": check_divider_depth,
    "depth_two_ways": check_depth_methods,
    "h2_precedes": check_h_order,
    "between_dividers": check_between_dividers,
    "first_then_second": check_first_then_second,
    "second_occurrence_segment": check_second_occurrence,
    "canonical_form": check_canonical_forms,
    "reassembly_stationarity": check_reassembly_and_stationarity,
}


def suite_decomposition(max_len: int = 6, alphabet_size: int = 3, inject_bug: bool = False,
                        jobs: int = 1) -> SuiteReport:
    cases = []
    for name, fn in DECOMPOSITION_CHECKS.items():
        if name == "divider_iff_depth":
            cases.append((name, partial(fn, max_len, alphabet_size, inject_bug)))
        else:
            cases.append((name, partial(fn, max_len, alphabet_size)))
    return _run("decomposition", cases, jobs)


# ---------------------------------------------------------------- chains

def _expand_case(fx: fixtures.ChainFixture):
    derivation = fx.expand()
    return PASS, None, f"{len(derivation.steps)} direct steps"


def _stored_case(entry: dict):
    derivation = fixtures.certificate_from_entry(entry)
    goal = tuple(parse_word(w) for w in entry["goal"])
    if (derivation.start, derivation.end) != goal:
        return FAIL, entry["id"], "stored certificate does not connect the goal"
    return PASS, None, f"{len(derivation.steps)} steps replayed"


def _search_case(axioms: list, target: Identity, extra_len: int = 4):
    longest = max(len(target.lhs), len(target.rhs))
    found = derive(axioms, target.lhs, target.rhs, Budget(max_steps=12, max_len=longest + extra_len))
    if not found:
        return EXHAUSTED, None, found.render()
    found.verify()
    return PASS, None, f"{len(found.steps)} steps found by search"


def _island_case(w: Word):
    fx = fixtures.island_fixture(w)
    derivation = fx.expand()
    return PASS, None, f"{render(w)}: {len(derivation.steps)} steps"


def suite_chains(k_max: int = 3, islands: int = 50, seed: int = 0, jobs: int = 1) -> SuiteReport:
    cases = [(fx.id, partial(_expand_case, fx)) for fx in fixtures.printed_fixtures(k_max)]
    stored = fixtures.load_data()["fixtures"]
    wanted = {fx.id for fx in fixtures.printed_fixtures(k_max)}
    cases += [(f"stored_{e['id']}", partial(_stored_case, e)) for e in stored if e["id"] in wanted]
    cases.append(("search_kappa_delta_k1", partial(_search_case, [I11, kappa(1)], delta(1, 1))))
    for i, w in enumerate(fixtures.random_square_words(islands, 10, seed)):
        cases.append((f"island_{i:02d}", partial(_island_case, w)))
    return _run("chains", cases, jobs)


# ---------------------------------------------------------------- monoids

def ladder_edges(k_max: int = 3) -> list:
    """Conditional implications ``(A, B)``: within the variety of ``(1.1)``, ``A`` implies ``B``."""
    edges = []
    for k in range(1, k_max + 1):
        edges += [(gamma(k), gamma(k + 1)), (gamma(k), epsilon(0)), (gamma(k), delta(k, 1))]
        for m in range(1, k + 1):
            edges += [(delta(k, m), delta(k + 1, m)), (delta(k, m), epsilon(m)), (delta(k, m), epsilon(k))]
            if m < k:
                edges.append((delta(k, m), delta(k, m + 1)))
        edges += [(epsilon(k - 1), epsilon(k)), (epsilon(k - 1), FIXED["XYXY"])]
        edges += [(zeta(k - 1), zeta(k)), (zeta(k - 1), nu(0)), (nu(k - 1), nu(k)),
                  (epsilon(k), zeta(k)), (zeta(k), lambda_(k, 1)), (eta(k - 1), eta(k))]
        for m in range(1, k + 1):
            edges += [(lambda_(k, m), lambda_(k + 1, m)), (mu(k, m), mu(k + 1, m))]
            if m < k:
                edges += [(lambda_(k, m), lambda_(k, m + 1)), (mu(k, m), mu(k, m + 1))]
    return edges


def _model_case(monoid_name: str, identity: Identity, expected_count: int | None = None):
    result = check(builtin(monoid_name), identity)
    if not result.holds:
        return FAIL, result.render(), ""
    detail = f"{result.assignments} assignments"
    if expected_count is not None and result.assignments != expected_count:
        return FAIL, detail, f"expected {expected_count} assignments"
    return PASS, None, detail


def _relations_case(monoid_name: str, relations: list):
    m = builtin(monoid_name)
    if not holds_relations(m, relations):
        return FAIL, monoid_name, "defining relations fail"
    return PASS, None, f"{len(relations)} relations"


def _carrier_case(monoid_name: str, expected: list):
    m = builtin(monoid_name)
    if m.elements != expected:
        return FAIL, " ".join(m.elements), f"expected {' '.join(expected)}"
    return PASS, None, " ".join(m.elements)


def _p21_cube_case():
    m = builtin("p21")
    cube, square = evaluate(m, ("b", "b", "b")), evaluate(m, ("b", "b"))
    if cube != square:
        return FAIL, f"b^3={cube} b^2={square}", ""
    return PASS, None, "b^3 = b^2 follows from the relations"


def _ladder_case(monoid_name: str, k_max: int):
    m = builtin(monoid_name)
    cache: dict = {}

    def sat(ident):
        if ident.label not in cache:
            cache[ident.label] = check(m, ident).holds
        return cache[ident.label]

    edges = ladder_edges(k_max)
    live = 0
    for a, b_ in edges:
        if sat(a):
            live += 1
            if not sat(b_):
                return FAIL, f"{a.label} holds but {b_.label} fails", ""
    return PASS, None, f"{len(edges)} implications, {live} with a true antecedent"


def _sigma_case(k_max: int):
    pool = phi_pool(k_max)
    kept = sigma_filter(pool, lambda s: check(builtin("p21"), s).holds)
    return PASS, None, "kept: " + ", ".join(s.label for s in kept)


def suite_monoid(k_max: int = 3, jobs: int = 1) -> SuiteReport:
    xsyt = parse_identity("x s y t x y = x s y t y x", "xsytxy")
    cases = [
        ("p21_carrier", partial(_carrier_case, "p21", ["a", "b", "ba", "bb", "1"])),
        ("p21_b_cube", _p21_cube_case),
        ("b21_carrier", partial(_carrier_case, "b21", ["a", "b", "ab", "ba", "0", "1"])),
        ("p21_models_xsxt", partial(_model_case, "p21", I11, 125)),
        ("p21_models_xsytxy", partial(_model_case, "p21", xsyt, 5 ** 4)),
        ("b21_relations", partial(_relations_case, "b21", B21_RELATIONS)),
        ("b21_models_x2_x3", partial(_model_case, "b21", parse_identity("x x = x x x"))),
        ("lz2_1_models_lrb", partial(_model_case, "lz2_1", FIXED["LRB_AX"], 9)),
        ("p21_ladder", partial(_ladder_case, "p21", k_max)),
        ("p21_sigma_phi2", partial(_sigma_case, 2)),
    ]
    return _run("monoid", cases, jobs)


# ---------------------------------------------------------------- non-finite-basis evidence

def nfb_claims(n_max: int = 1) -> list:
    """``(id, axioms, invariant, seeds, expect_violation)`` for the bounded checks."""
    p = parse_word
    xytxy, eta_seed = p("x y t x y"), p("x x1 y x y x0 x1")
    xsytxy, xtyxy = p("x s y t x y"), p("x t y x y")
    z_seed = z_pair(n_max + 1).lhs
    return [
        ("kappa1_xytxy", [I11, kappa(1)], ini2_of(set(xytxy)), [xytxy], False),
        ("eta1_xx1yxyx0x1", [I11, eta(1)], ini2_of(set(eta_seed)), [eta_seed], False),
        (f"omega1_n{n_max}_xsytxy", omega(1, n_max), ini2_of(set(xsytxy)), [xsytxy], False),
        (f"omega2_n{n_max}_xtyxy", omega(2, n_max), ini2_of(set(xtyxy)), [xtyxy], False),
        (f"omega2_n{n_max}_z{n_max + 1}", omega(2, n_max), ini2_of({"x", "y"}), [z_seed], False),
        ("control_xytxy_XYTXY", [I11, FIXED["XYTXY"]], ini2_of(set(xytxy)), [xytxy], True),
    ]


def _nfb_case(axioms, invariant, seeds, expect_violation, samples, seed):
    report = invariant_preserved(axioms, invariant, seeds, samples=samples, seed=seed)
    for v in report.violations:
        ax = next(a for a in axioms if a.label == v.axiom)
        if not directly_deducible(v.before, v.after, ax, cap=None, max_nodes=10_000_000):
            return FAIL, v.render(), "reported violation does not re-verify"
    if expect_violation:
        if report.violations:
            return PASS, report.violations[0].render(), "violation found as expected"
        return FAIL, None, "expected a violating step, found none: " + report.summary()
    if report.violations:
        return FAIL, report.violations[0].render(), "invariant changed"
    return PASS, None, report.summary()


def suite_nfb(n_max: int = 1, samples: int = 10_000, seed: int = 42, jobs: int = 1) -> SuiteReport:
    cases = [(ident, partial(_nfb_case, axioms, inv, seeds, expect, samples, seed))
             for ident, axioms, inv, seeds, expect in nfb_claims(n_max)]
    return _run("nfb", cases, jobs)


# ---------------------------------------------------------------- word problems

def random_word(rng: random.Random, letters, min_len: int = 1, max_len: int = 6) -> Word:
    return tuple(rng.choice(letters) for _ in range(rng.randint(min_len, max_len)))


def random_identity(rng: random.Random, letters=("x", "y", "z", "t"), max_len: int = 6) -> Identity:
    """Random pairs biased towards sharing structure, so implications are exercised."""
    u = random_word(rng, letters, 1, max_len)
    mode = rng.randrange(4)
    if mode == 0:
        v = random_word(rng, letters, 1, max_len)
    elif mode == 1:
        v = tuple(rng.sample(u, len(u)))
    elif mode == 2:
        # same initial part, extra late occurrences
        v = list(ini(u))
        for a in u[len(v):]:
            v.insert(rng.randint(v.index(a) + 1, len(v)), a)
        v = tuple(v)
    else:
        v = list(u)
        i = rng.randrange(len(v))
        j = min(len(v) - 1, i + 1)
        v[i], v[j] = v[j], v[i]
        v = tuple(v)
    return Identity(u, v)


def _implication_case(pairs: list, count: int, seed: int, label: str):
    """For random identities, every ``(antecedent, consequent)`` pair must hold as an implication."""
    rng = random.Random(seed)
    live = 0
    for _ in range(count):
        ident = random_identity(rng)
        for ante, cons in pairs:
            if ante(ident):
                live += 1
                if not cons(ident):
                    return FAIL, str(ident), label
    return PASS, None, f"{count} identities, {live} true antecedents"


def _lrb_model(ident):
    return check(builtin("lz2_1"), ident).holds


def _f(k, ident):
    return holds_in_f(k, ident)


def _wb(k, ident):
    return well_balanced(ident.lhs, ident.rhs, k)


def _reflexive_case(count: int, seed: int, k_max: int):
    rng = random.Random(seed)
    for _ in range(count):
        w = random_word(rng, ("x", "y", "z", "t"))
        ident = Identity(w, w)
        if not (holds_in_lrb(ident) and all(holds_in_f(k, ident) for k in range(1, k_max + 1))):
            return FAIL, str(ident), "reflexive identity rejected"
    return PASS, None, f"{count} identities"


def _error_path_case(count: int, seed: int):
    """A false implication (semilattice => LZ2) must be caught."""
    status, witness, _ = _implication_case([(holds_in_sl, _lrb_model)], count, seed, "")
    if status == FAIL:
        return PASS, witness, "false implication detected"
    return FAIL, None, "checker missed a false implication"


EXTRA_MONOIDS = {
    "sl2": (["1", "0"], "1", [["1", "0"], ["0", "0"]]),
    "z2": (["1", "g"], "1", [["1", "g"], ["g", "1"]]),
    "z3": (["1", "g", "h"], "1", [["1", "g", "h"], ["g", "h", "1"], ["h", "1", "g"]]),
    "rz2_1": (["1", "e", "f"], "1", [["1", "e", "f"], ["e", "e", "f"], ["f", "e", "f"]]),
    "n2_1": (["1", "a", "0"], "1", [["1", "a", "0"], ["a", "0", "0"], ["0", "0", "0"]]),
}

SOUNDNESS_AXIOMS = [
    I11, FIXED["LRB_AX"], FIXED["XYXY"], kappa(1), FIXED["XYTXY"],
    parse_identity("x x = x", "IDEMP"), parse_identity("x y = y x", "COMM"),
    parse_identity("x x = x x x", "X2X3"), parse_identity("x y x = x x y", "XYX_XXY"),
]


def soundness_monoids() -> dict:
    out = {name: builtin(name) for name in ("p21", "b21", "lz2_1")}
    for name, (els, one, table) in EXTRA_MONOIDS.items():
        out[name] = from_table(els, one, table, name)
    return out


def random_derivation(rng: random.Random, axioms: list, steps: int = 3) -> Derivation | None:
    """A random walk of direct steps from a random word."""
    w = random_word(rng, ("x", "y", "z", "t"), 2, 7)
    chain, wits = [w], []
    for _ in range(steps):
        options = []
        for ax in axioms:
            for d in ("forward", "backward"):
                options += list(itertools.islice(successors(chain[-1], ax, d, len(chain[-1]) + 4, 2), 20))
        options = [(v, wit) for v, wit in options if v not in chain]
        if not options:
            break
        v, wit = rng.choice(options)
        chain.append(v)
        wits.append(wit)
    if len(chain) < 2:
        return None
    return Derivation(list(axioms), chain, wits)


def _soundness_case(count: int, seed: int):
    rng = random.Random(seed)
    monoids = soundness_monoids()
    done = live = 0
    while done < count:
        axioms = rng.sample(SOUNDNESS_AXIOMS, rng.randint(1, 2))
        derivation = random_derivation(rng, axioms)
        if derivation is None:
            continue
        derivation.verify()
        name = rng.choice(sorted(monoids))
        m = monoids[name]
        done += 1
        if all(check(m, ax).holds for ax in axioms):
            live += 1
            conclusion = Identity(derivation.start, derivation.end)
            result = check(m, conclusion)
            if not result.holds:
                return FAIL, f"{name}: {conclusion} fails at {result.render()}", ""
    return PASS, None, f"{count} triples, {live} with a model of the axioms"


def suite_word_problems(samples: int = 1000, seed: int = 0, k_max: int = 3, soundness: int = 500,
                        jobs: int = 1) -> SuiteReport:
    chain = [(partial(_f, k + 1), partial(_f, k)) for k in range(1, k_max + 1)]
    balanced = [(partial(_f, k), partial(_wb, k - 1)) for k in range(1, k_max + 1)]
    cases = [
        ("lrb_implies_lz2_1", partial(_implication_case, [(holds_in_lrb, _lrb_model)], samples, seed,
                                      "LRB identity fails in LZ2^1")),
        ("f_chain", partial(_implication_case, chain, samples, seed + 1, "F_{k+1} identity fails in F_k")),
        ("f_well_balanced", partial(_implication_case, balanced, samples, seed + 2,
                                    "F_k identity not (k-1)-well-balanced")),
        ("reflexive", partial(_reflexive_case, 50, seed, k_max)),
        ("error_path", partial(_error_path_case, samples, seed + 3)),
        ("birkhoff_soundness", partial(_soundness_case, soundness, seed + 4)),
    ]
    return _run("word_problems", cases, jobs)


SUITES = {
    "decomposition": suite_decomposition,
    "chains": suite_chains,
    "monoid": suite_monoid,
    "nfb": suite_nfb,
    "word_problems": suite_word_problems,
}


def run_suite(name: str, k_max: int | None = None, samples: int | None = None, seed: int | None = None,
              jobs: int = 1) -> SuiteReport:
    """Run one suite or ``all`` with the CLI's parameter names."""
    if name == "all":
        reports = [run_suite(n, k_max, samples, seed, jobs) for n in SUITES]
        return merge("all", reports)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    kwargs: dict = {"jobs": jobs}
    if name == "chains":
        if k_max is not None:
            kwargs["k_max"] = k_max
        if seed is not None:
            kwargs["seed"] = seed
    elif name == "monoid":
        if k_max is not None:
            kwargs["k_max"] = k_max
    elif name == "nfb":
        if samples is not None:
            kwargs["samples"] = samples
        if seed is not None:
            kwargs["seed"] = seed
    elif name == "word_problems":
        if seed is not None:
            kwargs["seed"] = seed
        if k_max is not None:
            kwargs["k_max"] = k_max
    return SUITES[name](**kwargs)


def report_json(report: SuiteReport) -> str:
    return json.dumps(report.to_json(), indent=2, ensure_ascii=False)
