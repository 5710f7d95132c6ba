"""Acceptance criteria, each run at its stated budget and time limit."""

import time

import pytest

from monid.decomposition import INF, canonical_form, depth, validate_form
from monid.families import FIXED
from monid.finite_monoids import B21_RELATIONS, builtin, check, holds_relations
from monid.identities import I11, directly_deducible, parse_identity
from monid.paperlab import fixtures, suites
from monid.varieties import invariant_preserved


@pytest.fixture(scope="module")
def decomposition_report():
    return suites.suite_decomposition(max_len=6, alphabet_size=3)


def summarize(report, ids):
    cases = [report.case(i) for i in ids]
    ok = all(c.status == suites.PASS for c in cases)
    seconds = sum(c.seconds for c in cases)
    bad = [f"{c.id}: {c.witness or c.detail}" for c in cases if c.status != suites.PASS]
    return ok, seconds, bad


def test_criterion_1_divider_depth_equivalence(verdict, decomposition_report):
    ok, seconds, bad = summarize(decomposition_report, ["divider_iff_depth", "depth_two_ways"])
    words = len(suites.corpus(6, 3))
    detail = f"{words} words, {seconds:.1f}s" + (f", {bad}" if bad else "")
    verdict(1, "dividers agree with depth, depth agrees two ways", ok and seconds < 60, detail)


def test_criterion_2_ordering_statements(verdict, decomposition_report):
    ids = ["h2_precedes", "between_dividers", "first_then_second", "second_occurrence_segment"]
    ok, seconds, bad = summarize(decomposition_report, ids)
    detail = f"{len(ids)} statements, {seconds:.1f}s" + (f", {bad}" if bad else "")
    verdict(2, "divider ordering statements hold on the corpus", ok and seconds < 60, detail)


def test_criterion_3_canonical_form(verdict):
    total, failures = 0, []
    for w in suites.corpus(6, 3):
        for x in sorted(set(w)):
            if depth(w, x) in (0, INF):
                continue
            total += 1
            try:
                form = canonical_form(w, x)
                problems = validate_form(form)
                if form.reassemble() != w or problems:
                    failures.append((w, x, problems))
            except ValueError as err:
                failures.append((w, x, str(err)))
    verdict(3, "every finite positive depth pair has a valid form", total > 0 and not failures,
            f"{total - len(failures)}/{total} (word, letter) pairs" + (f", first bad {failures[0]}" if failures else ""))


def test_criterion_4_derivation_chains(verdict):
    start = time.perf_counter()
    report = suites.suite_chains(k_max=3, islands=50, seed=0)
    seconds = time.perf_counter() - start
    wanted = ([f"kappa_delta_k{k}" for k in (1, 2, 3)]
              + [fx.id for fx in fixtures.printed_fixtures(2) if fx.id.startswith("phi")]
              + [f"{kind}_inclusion_k{k}_m{m}" for kind in ("gamma", "delta") for k in (1, 2)
                 for m in range(1, k + 1)]
              + [f"island_{i:02d}" for i in range(50)])
    missing = [i for i in wanted if i not in {c.id for c in report.cases}]
    bad = [f"{c.id}: {c.detail}" for c in report.cases if c.status != suites.PASS]
    ok = not missing and not bad and seconds < 300
    verdict(4, "printed chains, substitution consequences and island elimination replay", ok,
            f"{len(report.cases)} cases incl. stored certificates, {seconds:.1f}s"
            + (f", missing {missing}" if missing else "") + (f", {bad}" if bad else ""))


def test_criterion_5_model_checks(verdict):
    start = time.perf_counter()
    p21, b21, lz = builtin("p21"), builtin("b21"), builtin("lz2_1")
    r11 = check(p21, I11)
    r51 = check(p21, parse_identity("x s y t x y = x s y t y x"))
    rel = holds_relations(b21, B21_RELATIONS)
    rlz = check(lz, parse_identity("x y = x y x"))
    seconds = time.perf_counter() - start
    # every assignment is visited: |M| to the number of distinct letters
    ok = (r11.holds and r11.assignments == 5 ** 3 and r51.holds and r51.assignments == 5 ** 4
          and rel and rlz.holds and rlz.assignments == 3 ** 2 and seconds < 1)
    verdict(5, "P21 models (1.1) and xsytxy = xsytyx, B21 its relations, LZ2^1 xy = xyx", ok,
            f"{r11.assignments} + {r51.assignments} + {rlz.assignments} assignments, {seconds:.2f}s")


def test_criterion_6_ladder(verdict):
    start = time.perf_counter()
    status, witness, detail = suites._ladder_case("p21", 3)
    seconds = time.perf_counter() - start
    verdict(6, "ladder implications on P21 for k <= 3", status == suites.PASS and seconds < 30,
            f"{detail or witness}, {seconds:.1f}s")


def test_criterion_7_soundness(verdict):
    status, witness, detail = suites._soundness_case(500, seed=4)
    verdict(7, "derived identities hold in every model of the axioms", status == suites.PASS,
            detail if status == suites.PASS else f"{witness}")


def test_criterion_8_nfb_evidence(verdict):
    start = time.perf_counter()
    lines, ok = [], True
    claims = [c for c in suites.nfb_claims(1) if not c[4]]
    for ident, axioms, invariant, seeds, _ in claims:
        report = invariant_preserved(axioms, invariant, seeds, samples=10_000, seed=42)
        for v in report.violations:
            ax = next(a for a in axioms if a.label == v.axiom)
            assert directly_deducible(v.before, v.after, ax, max_nodes=None), v.render()
        ok &= report.ok and report.steps >= 10_000
        lines.append(f"{ident}: {report.steps} steps, {len(report.violations)} violations")
    seconds = time.perf_counter() - start
    ok &= len(claims) == 5 and seconds < 300
    verdict(8, "no invariant-breaking step in the sampled space", ok, "; ".join(lines) + f"; {seconds:.0f}s")


def test_criterion_9_word_problem_deciders(verdict):
    report = suites.suite_word_problems(samples=1000, seed=0, soundness=0)
    ids = ["lrb_implies_lz2_1", "f_chain", "f_well_balanced"]
    ok, seconds, bad = summarize(report, ids)
    details = "; ".join(report.case(i).detail for i in ids)
    verdict(9, "LRB => LZ2^1, F_(k+1) => F_k, F_k => (k-1)-well-balanced", ok,
            details + (f", {bad}" if bad else ""))


def test_control_identity_breaks_the_invariant():
    # guards criterion 8 against a sampler that never finds anything
    ident, axioms, invariant, seeds, expect = suites.nfb_claims(1)[-1]
    assert expect and FIXED["XYTXY"] in axioms
    report = invariant_preserved(axioms, invariant, seeds, samples=10_000, seed=42)
    assert not report.ok
