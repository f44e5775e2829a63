"""Command-line front end for reproduction runs, queries, and table export."""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as V
from .dynamics import UpdateWord, apply_word, periodic_set, pi_independent, transition_map
from .rules import Rule, decode, equivalence_class, static_profile
from .states import MAX_VERTICES, MIN_VERTICES, parse_state


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_rule(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise ValueError(f"rule argument {text!r} is not an integer") from None
    decode(k)
    return k


def _parse_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ValueError(f"ring size argument {text!r} is not an integer") from None
    if not MIN_VERTICES <= n <= MAX_VERTICES:
        raise ValueError(
            f"ring size argument {n} out of range {MIN_VERTICES}..{MAX_VERTICES}"
        )
    return n


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# Query commands
# ---------------------------------------------------------------------------

def cmd_rule(args: argparse.Namespace) -> int:
    k = _parse_rule(args.k)
    rule = Rule(k)
    if args.json:
        _emit_json(rule.to_json())
        return 0
    profile = static_profile(k)
    cls = equivalence_class(k)
    print(f"rule {k}")
    print(f"bits {rule.bits}")
    print(f"tag  {rule.tag}")
    print("grid:")
    for line in rule.grid_lines():
        print(f"  {line}")
    members = ", ".join(str(m) for m in cls.members)
    print(f"class {{{members}}} representative {cls.representative}")
    print(
        f"profile: bijective={str(profile.bijective).lower()} "
        f"symmetric={str(profile.symmetric).lower()} "
        f"quasi_symmetric={str(profile.quasi_symmetric).lower()} "
        f"flips={profile.flip_count}"
    )
    strategy = profile.proof_strategy.value
    if profile.equivalence_rep is not None:
        strategy += f" (rule {profile.equivalence_rep})"
    print(f"proof strategy: {strategy}")
    return 0


def cmd_apply(args: argparse.Namespace) -> int:
    k = _parse_rule(args.k)
    state = parse_state(args.state)
    word = UpdateWord.from_text(args.word, state.n)
    print(apply_word(k, state, word))
    return 0


def cmd_per(args: argparse.Namespace) -> int:
    k = _parse_rule(args.k)
    n = _parse_n(args.n)
    word = (
        UpdateWord.from_text(args.word, n) if args.word else UpdateWord.identity(n)
    )
    per = periodic_set(transition_map(k, n, word))
    if args.json:
        _emit_json({"k": k, "n": n, "word": list(word.seq), "per": per.to_json()})
        return 0
    if n <= 16:
        print(" ".join(per.strings()))
    else:
        print(hex(per.mask))
    return 0


def cmd_indep(args: argparse.Namespace) -> int:
    k = _parse_rule(args.k)
    n = _parse_n(args.n)
    verdict = pi_independent(k, n, reduced=args.rotation_reduced)
    if args.json:
        _emit_json(verdict.to_json())
        return 0
    if verdict.independent:
        print(f"rule {k}, n={n}: independent ({len(verdict.per)} periodic states)")
    else:
        w = verdict.witness
        print(f"rule {k}, n={n}: not independent")
        print(f"  order {w.order_a}: {len(w.per_a)} periodic states")
        print(f"  order {w.order_b}: {len(w.per_b)} periodic states")
    return 0


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

def _verify_theorem104(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    n_max = args.n_max if args.n_max is not None else 7
    if not 4 <= n_max <= 9:
        raise ValueError(f"--n-max for theorem104 must be in 4..9, got {n_max}")
    if n_max > 7 and not args.slow:
        raise ValueError("--n-max above 7 requires --slow")
    report = V.verify_theorem_104(n_max=n_max, reduced=True, progress=_progress)
    passed = report.matches_expected if n_max >= 9 else report.contains_expected
    lines = [
        f"computed {len(report.computed)} independent rules over n=4..{n_max}",
        f"contains the 104 expected rules: {report.contains_expected}",
        f"equals the 104 expected rules: {report.matches_expected}",
    ]
    if report.extras:
        lines.append(f"not yet excluded at this range: {list(report.extras)}")
    if report.missing:
        lines.append(f"MISSING expected rules: {list(report.missing)}")
    return passed, report.to_json(), lines


def _verify_potentials(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    n_max = args.n_max if args.n_max is not None else 10
    if not 4 <= n_max <= 12:
        raise ValueError(f"--n-max for potentials must be in 4..12, got {n_max}")
    reports = V.verify_potentials(n_max=n_max, progress=_progress)
    bad = [r for r in reports if not r.ok]
    payload = {
        "suite": "potentials",
        "n_max": n_max,
        "pairs_checked": len(reports),
        "ok": not bad,
        "reports": [r.to_json() for r in reports if not r.ok],
    }
    lines = [f"checked {len(reports)} (family, rule, n) combinations"]
    for r in bad:
        lines.append(
            f"FAIL family {r.family.value} rule {r.k} n={r.n}: {r.violations[0]}"
        )
    return not bad, payload, lines


def _verify_characterizations(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    sampled_max = args.n_max if args.n_max is not None else 12
    if not 4 <= sampled_max <= 12:
        raise ValueError(
            f"--n-max for characterizations must be in 4..12, got {sampled_max}"
        )
    exhaustive_max = min(7, sampled_max)
    samples = args.samples if args.samples is not None else 1000
    report = V.verify_characterizations(
        exhaustive_max=exhaustive_max,
        sampled_max=sampled_max,
        samples=samples,
        progress=_progress,
    )
    lines = [
        f"checked {report.orders_checked} (rule, n, order) sweeps "
        f"(exhaustive to n={exhaustive_max}, sampled to n={sampled_max})"
    ]
    lines += [f"FAIL {m}" for m in report.mismatches]
    return report.ok, report.to_json(), lines


def _verify_transport(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    report = V.transport_suite(count=args.count, seed=args.seed)
    lines = [f"seed {args.seed}", f"checked {report.count} random (k, n, word) triples"]
    lines += [f"FAIL {f}" for f in report.failures]
    return report.ok, report.to_json(), lines


def _verify_reidys(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    samples = args.samples if args.samples is not None else 100
    suite = V.reidys_suite(samples=samples, seed=args.seed, progress=_progress)
    checked = len(suite.reports)
    lines = [
        f"seed {args.seed}",
        f"checked {checked} (rule, n) cells x {samples} non-simple words",
    ]
    lines += [f"FAIL {f}" for r in suite.reports if not r.ok for f in r.failures]
    return suite.ok, suite.to_json(), lines


def _verify_tables(args: argparse.Namespace) -> tuple[bool, dict, list[str]]:
    tables = V.emit_reference_tables()
    summary = V.equivalence_summary()
    histogram = V.flips_histogram()
    ok = (
        tables.ok
        and summary["class_count"] == summary["expected_class_count"]
        and summary["independent_class_count"]
        == summary["expected_independent_class_count"]
        and summary["independent_union_matches"]
        and histogram.matches_expected
    )
    payload = {
        **tables.to_json(),
        "equivalence": summary,
        "flip_histogram_matches": histogram.matches_expected,
        "ok": ok,
    }
    lines = [
        f"tag grid regeneration matches: {tables.table2_matches}",
        f"representative grids match: {tables.fig41_matches}",
        f"equivalence classes: {summary['class_count']} "
        f"(expected {summary['expected_class_count']})",
        f"independent classes: {summary['independent_class_count']} "
        f"(expected {summary['expected_independent_class_count']})",
        f"flip histogram matches: {histogram.matches_expected}",
    ]
    return ok, payload, lines


_SUITES = {
    "theorem104": _verify_theorem104,
    "potentials": _verify_potentials,
    "characterizations": _verify_characterizations,
    "transport": _verify_transport,
    "reidys": _verify_reidys,
    "tables": _verify_tables,
}


def cmd_verify(args: argparse.Namespace) -> int:
    passed, payload, lines = _SUITES[args.suite](args)
    if args.json:
        _emit_json(payload)
    else:
        for line in lines:
            print(line)
        print(f"{args.suite}: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# Table export
# ---------------------------------------------------------------------------

def _export_grid(grid: V.TagGrid, fmt: str, corner: str) -> str:
    if fmt == "text":
        return V.render_grid_text(grid, corner)
    if fmt == "json":
        return json.dumps(V.grid_to_json(grid), indent=2, sort_keys=True)
    lines = [
        ",".join([corner] + [f"{sym}({val})" for sym, val in grid.cols])
    ]
    for (sym, val), row in zip(grid.rows, grid.cells):
        cells = ["" if v is None else str(v) for v in row]
        lines.append(",".join([f"{sym}({val})"] + cells))
    return "\n".join(lines)


def cmd_export(args: argparse.Namespace) -> int:
    fmt = args.format
    if args.table == "table2":
        tables = V.emit_reference_tables()
        if not tables.table2_matches:
            print("error: regenerated tag grid differs from the embedded table", file=sys.stderr)
            return 1
        print(_export_grid(tables.table2, fmt, "sym\\asym"))
        return 0
    if args.table == "fig41":
        tables = V.emit_reference_tables()
        if not tables.fig41_matches:
            print("error: regenerated representative grids differ from the embedded tables", file=sys.stderr)
            return 1
        if fmt == "json":
            _emit_json(
                {
                    "left": V.grid_to_json(tables.fig41_left),
                    "right": V.grid_to_json(tables.fig41_right),
                }
            )
        elif fmt == "text":
            print("left:")
            print(V.render_grid_text(tables.fig41_left))
            print("right:")
            print(V.render_grid_text(tables.fig41_right))
        else:
            print("section,row,row_value,col,col_value,k")
            for name, grid in (("left", tables.fig41_left), ("right", tables.fig41_right)):
                for (rsym, rval), row in zip(grid.rows, grid.cells):
                    for (csym, cval), cell in zip(grid.cols, row):
                        if cell is not None:
                            print(f"{name},{rsym},{rval},{csym},{cval},{cell}")
        return 0
    # table3
    histogram = V.flips_histogram()
    if not histogram.matches_expected:
        print("error: flip histogram differs from the embedded rows", file=sys.stderr)
        return 1
    if fmt == "json":
        _emit_json(histogram.to_json())
    elif fmt == "text":
        print("flips:       " + " ".join(f"{i:>6}" for i in range(9)))
        print("independent: " + " ".join(f"{v:>6}" for v in histogram.independent))
        print("total:       " + " ".join(f"{v:>6}" for v in histogram.total))
        print("fraction:    " + " ".join(f"{v:>6}" for v in histogram.fractions))
    else:
        print("flips,independent_rules,total_rules")
        for i in range(9):
            print(f"{i},{histogram.independent[i]},{histogram.total[i]}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aca",
        description="Verification engine for asynchronous elementary cellular automata on rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rule = sub.add_parser("rule", help="show a rule in every notation")
    p_rule.add_argument("k")
    p_rule.add_argument("--json", action="store_true")
    p_rule.set_defaults(func=cmd_rule)

    p_apply = sub.add_parser("apply", help="apply an update word to a state")
    p_apply.add_argument("k")
    p_apply.add_argument("state")
    p_apply.add_argument("word", help="comma-separated vertex list, e.g. 1,3,2,4")
    p_apply.set_defaults(func=cmd_apply)

    p_per = sub.add_parser("per", help="periodic set of a rule under a word")
    p_per.add_argument("k")
    p_per.add_argument("n")
    p_per.add_argument("--word", help="comma-separated vertex list (default: 1,2,...,n)")
    p_per.add_argument("--json", action="store_true")
    p_per.set_defaults(func=cmd_per)

    p_indep = sub.add_parser("indep", help="decide order independence at one ring size")
    p_indep.add_argument("k")
    p_indep.add_argument("n")
    mode = p_indep.add_mutually_exclusive_group()
    mode.add_argument(
        "--full-sweep", dest="rotation_reduced", action="store_false",
        help="sweep all n! simple orders (default)",
    )
    mode.add_argument(
        "--rotation-reduced", dest="rotation_reduced", action="store_true",
        help="sweep (n-1)! orders ending at vertex n plus a rotation check",
    )
    p_indep.add_argument("--json", action="store_true")
    p_indep.set_defaults(func=cmd_indep, rotation_reduced=False)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(_SUITES))
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--slow", action="store_true",
                          help="allow the full n = 8, 9 sweeps")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--count", type=int, default=200)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="emit a reference table")
    p_export.add_argument("table", choices=["table2", "table3", "fig41"])
    p_export.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
