"""Command-line entry point: ``monid <command> ...``.

Exit codes: 0 success or "holds", 1 failure or counterexample, 2 a
bounded search ran out of budget, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import decomposition as dec
from . import families as fam
from . import finite_monoids as fm
from . import identities as ids
from . import varieties as var
from . import words as wd

EXIT_OK, EXIT_FAIL, EXIT_EXHAUSTED, EXIT_USAGE = 0, 1, 2, 64

GRAMMAR = """\
text grammar (each word or identity is one shell argument):
  word      := "1" | token (WS token)*      "1" is the empty word
  token     := [a-z][a-z0-9]*                e.g. x, x1, y0, zoo
  WS        := one or more spaces
  identity  := word "=" word                 "≈" is accepted for "="
identity names: I11 XYXY XYTXY XTYXY XZYT XSYTXY ETA1T LRB_AX, kappa1,
  delta2_1, epsilon0, w_pair1_12_21 (permutations as image strings);
  axiom lists are comma separated and accept omega1_N / omega2_N.

exit codes: 0 ok/holds, 1 fails/counterexample, 2 search budget exhausted,
  64 usage error
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _word(text: str) -> wd.Word:
    try:
        return wd.parse_word(text)
    except wd.WordParseError as err:
        raise UsageError(str(err)) from err


def _identity(text: str) -> ids.Identity:
    try:
        return ids.parse_identity(text)
    except ids.IdentityParseError as err:
        raise UsageError(str(err)) from err


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _axioms(text: str) -> list:
    try:
        return fam.resolve_set(text)
    except ValueError as err:
        raise UsageError(str(err)) from err


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


# ---------------------------------------------------------------- word

def cmd_word(args) -> int:
    w = _word(args.word)
    op = args.op
    rest = args.args
    if op == "depth":
        if len(rest) != 1:
            raise UsageError("word depth WORD LETTER")
        x = rest[0]
        if x not in w:
            raise UsageError(f"{x} does not occur in {wd.render(w)}")
        d = dec.depth(w, x)
        _emit(args, {"word": wd.render(w), "letter": x, "depth": dec.format_depth(d)}, dec.format_depth(d))
    elif op == "classify":
        con, sim, mul = wd.classify(w)
        data = {"con": wd.sorted_letters(con), "sim": wd.sorted_letters(sim), "mul": wd.sorted_letters(mul)}
        _emit(args, data, "\n".join(f"{k}: {' '.join(v) or '-'}" for k, v in data.items()))
    elif op in ("ini", "ini2", "inisq"):
        fn = {"ini": wd.ini, "ini2": wd.ini2, "inisq": wd.ini_sq}[op]
        out = wd.render(fn(w))
        _emit(args, {op: out}, out)
    elif op == "decompose":
        levels = [_int(rest[0], 'level')] if rest else list(range(dec.max_level(w) + 1))
        lines = [dec.decompose(w, k).render() for k in levels]
        _emit(args, {"levels": dict(zip(map(str, levels), lines))}, "\n".join(lines))
    elif op == "dividers":
        if len(rest) != 1:
            raise UsageError("word dividers WORD LEVEL")
        names = [str(d) for d in dec.dividers(w, _int(rest[0], 'level'))]
        _emit(args, {"dividers": names}, " ".join(names))
    elif op == "max-level":
        m = dec.max_level(w)
        _emit(args, {"max_level": m}, str(m))
    elif op == "h":
        if len(rest) != 3:
            raise UsageError("word h WORD LETTER OCCURRENCE LEVEL")
        x, i, k = rest[0], _int(rest[1], 'occurrence'), _int(rest[2], 'level')
        if wd.occ(w, x) < i or i < 1:
            raise UsageError(f"{x} has no occurrence {i} in {wd.render(w)}")
        d = dec.h(w, x, i, k)
        _emit(args, {"h": str(d), "position": d.position}, str(d))
    elif op == "form":
        if len(rest) != 1:
            raise UsageError("word form WORD LETTER")
        try:
            form = dec.canonical_form(w, rest[0])
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_FAIL
        data = {"level": form.level, "pivots": list(form.pivots),
                "segments": [wd.render(s) for s in form.segments]}
        _emit(args, data, form.render())
    else:
        raise UsageError(f"unknown word operation {op!r}")
    return EXIT_OK


# ---------------------------------------------------------------- id

def cmd_id(args) -> int:
    ident = _identity(args.identity)
    if args.op == "check":
        try:
            spec = var.variety(args.variety)
        except ValueError as err:
            raise UsageError(str(err)) from err
        holds = spec.holds(ident)
        _emit(args, {"identity": str(ident), "variety": spec.name, "holds": holds}, str(holds).lower())
        return EXIT_OK if holds else EXIT_FAIL
    if args.op == "critical":
        if not ident.is_balanced():
            raise UsageError("critical pairs need a balanced identity")
        pairs = ids.critical_pairs(ident)
        text = [f"{i}{x} {j}{y}" for (x, i), (y, j) in pairs]
        _emit(args, {"pairs": [[[x, i], [y, j]] for (x, i), (y, j) in pairs]}, "\n".join(text) or "none")
        return EXIT_OK
    if args.op == "wb":
        ok = dec.well_balanced(ident.lhs, ident.rhs, args.level)
        _emit(args, {"well_balanced": ok, "level": args.level}, str(ok).lower())
        return EXIT_OK if ok else EXIT_FAIL
    raise UsageError(f"unknown id operation {args.op!r}")


# ---------------------------------------------------------------- fam

def cmd_fam(args) -> int:
    if args.op == "list":
        lines = [f"{name} (fixed)" for name in fam.FIXED]
        lines += [f"{name} {arity}" for name, (_, arity) in fam.FAMILIES.items()]
        lines += [f"{name} {arity} (word)" for name, (_, arity) in fam.WORD_FAMILIES.items()]
        _emit(args, {"families": lines}, "\n".join(lines))
        return EXIT_OK
    if not args.name:
        raise UsageError("fam gen NAME [PARAMS...]")
    name, raw = args.name, args.params
    try:
        if name in fam.WORD_FAMILIES:
            params = _family_params(name, raw)
            w = fam.WORD_FAMILIES[name][0](*params)
            _emit(args, {"word": wd.render(w)}, wd.render(w))
            return EXIT_OK
        ident = fam.family(name, *_family_params(name, raw))
    except (ValueError, TypeError) as err:
        raise UsageError(str(err)) from err
    _emit(args, {"name": ident.label, "identity": str(ident)}, str(ident))
    return EXIT_OK


def _family_params(name: str, raw: list) -> list:
    out: list = []
    for i, p in enumerate(raw):
        if name in ("w_pair", "z_pair", "z_theta") and i > 0:
            out.append(p if p in ("xy", "yx") else fam.parse_perm(p))
        else:
            out.append(_int(p, "parameter"))
    return out


# ---------------------------------------------------------------- monoid

def _monoid(name: str) -> fm.FiniteMonoid:
    if name in fm.builtin_names():
        return fm.builtin(name)
    if os.path.exists(name):
        return fm.load(name)
    raise UsageError(f"unknown monoid {name!r}: not a builtin ({', '.join(fm.builtin_names())}) or a file")


def cmd_monoid(args) -> int:
    m = _monoid(args.monoid)
    if args.op == "show":
        _emit(args, m.to_json(), m.render_table())
        return EXIT_OK
    if args.identity is None:
        raise UsageError("monoid check MONOID IDENTITY")
    result = fm.check(m, _identity(args.identity))
    data = {"holds": result.holds, "counterexample": result.counterexample, "assignments": result.assignments}
    _emit(args, data, result.render())
    return EXIT_OK if result.holds else EXIT_FAIL


# ---------------------------------------------------------------- prove / replay

def cmd_prove(args) -> int:
    axioms = _axioms(args.axioms)
    ident = _identity(args.identity)
    budget = ids.Budget(args.max_steps, args.max_len, args.max_nodes, args.slack, args.cap)
    found = ids.derive(axioms, ident.lhs, ident.rhs, budget)
    if not found:
        _emit(args, {"status": "exhausted", "message": found.render()}, found.render())
        return EXIT_EXHAUSTED
    found.verify()
    cert = ids.to_certificate(found)
    if args.cert:
        with open(args.cert, "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2, ensure_ascii=False)
    _emit(args, cert, found.render())
    return EXIT_OK


def cmd_replay(args) -> int:
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read certificate: {err}") from err
    try:
        derivation = ids.from_certificate(data, fam.resolve)
    except (ids.ReplayError, ValueError, KeyError) as err:
        _emit(args, {"verified": False, "error": str(err)}, f"rejected: {err}")
        return EXIT_FAIL
    text = f"verified: {len(derivation.steps)} steps, {wd.render(derivation.start)} = {wd.render(derivation.end)}"
    _emit(args, {"verified": True, "steps": len(derivation.steps)}, text)
    return EXIT_OK


# ---------------------------------------------------------------- nfb

def cmd_nfb(args) -> int:
    axioms = _axioms(args.axioms)
    if not ids.has_i11(axioms):
        axioms = [ids.I11] + axioms
    pattern = _word(args.pattern)
    letters = args.letters.split(",") if args.letters else sorted(set(pattern))
    invariant = var.ini2_of(letters)
    seeds = [pattern]
    report = var.invariant_preserved(axioms, invariant, seeds, samples=args.samples, seed=args.seed,
                                     max_inflation=args.max_inflation, cap=args.cap)
    data = {
        "axioms": [ax.label for ax in axioms],
        "pattern": wd.render(pattern),
        "mode": report.mode,
        "words": report.words,
        "steps": report.steps,
        "levels": report.levels,
        "seed": report.seed,
        "violations": [v.render() for v in report.violations],
    }
    _emit(args, data, report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- paperlab

def cmd_paperlab(args) -> int:
    from .paperlab import suites

    try:
        report = suites.run_suite(args.suite, args.k_max, args.samples, args.seed, args.jobs)
    except ValueError as err:
        raise UsageError(str(err)) from err
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(suites.report_json(report) + "\n")
    if args.json:
        print(suites.report_json(report))
    else:
        print(report.render())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    # the same flags after the subcommand must not reset values given before it
    local = _Parser(add_help=False)
    local.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    local.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")

    parser = _Parser(prog="monid", description="Monoid identities: words, deduction, finite models.",
                     epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter, parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[local], epilog=GRAMMAR,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = add("word", "word operations")
    p.add_argument("op", choices=["depth", "classify", "ini", "ini2", "inisq", "decompose", "dividers",
                                  "max-level", "h", "form"])
    p.add_argument("word")
    p.add_argument("args", nargs="*", help="letter / occurrence / level, depending on op")
    p.set_defaults(func=cmd_word)

    p = add("id", "identity operations")
    p.add_argument("op", choices=["check", "critical", "wb"])
    p.add_argument("identity")
    p.add_argument("--variety", default="p", help="lrb, p, sl, t or f:K (for check)")
    p.add_argument("--level", type=int, default=0, help="level for wb")
    p.set_defaults(func=cmd_id)

    p = add("fam", "identity families")
    p.add_argument("op", choices=["gen", "list"])
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_fam)

    p = add("monoid", "finite monoids")
    p.add_argument("op", choices=["check", "show"])
    p.add_argument("monoid", help="p21, b21, lz2_1 or a JSON table file")
    p.add_argument("identity", nargs="?")
    p.set_defaults(func=cmd_monoid)

    p = add("prove", "search for a derivation")
    p.add_argument("identity")
    p.add_argument("--axioms", required=True)
    p.add_argument("--max-steps", type=int, default=8)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=5000)
    p.add_argument("--slack", type=int, default=1)
    p.add_argument("--cap", type=int, default=None, help="longest substitution image")
    p.add_argument("--cert", help="write the proof certificate here")
    p.set_defaults(func=cmd_prove)

    p = add("replay", "re-verify a proof certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_replay)

    p = add("nfb", "bounded invariant-preservation evidence")
    p.add_argument("op", choices=["check"])
    p.add_argument("--axioms", required=True, help="x s x t = x s x t x is always added")
    p.add_argument("--pattern", required=True)
    p.add_argument("--letters", help="comma-separated letters to project on (default: the pattern's)")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-inflation", type=int, default=12)
    p.add_argument("--cap", type=int, default=3)
    p.set_defaults(func=cmd_nfb)

    p = add("paperlab", "verification suites")
    p.add_argument("op", choices=["run"])
    p.add_argument("suite", help="all, decomposition, chains, monoid, nfb or word_problems")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_paperlab)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as err:
        print(f"monid: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
