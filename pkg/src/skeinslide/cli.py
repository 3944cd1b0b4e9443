"""Command-line front end: ``skeinslide <command> [options]``.

Exit codes: 0 success, 1 a check or ``--expect`` failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .expr import ParseError, parse_expr, print_element
from .relmod import conjecture_evidence, generator_matrix, ideal_generators, span_membership, z_span_decision
from .sliding import U_ASSUMPTION, parse_variants, relation_set, u_id, w_id
from .surface import ScenarioError, load_scenario, rho_star, shipped_scenarios

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Bad configuration detected after argument parsing."""


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _need(args, *fields: str) -> None:
    missing = [f for f in fields if getattr(args, f, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _k_from(args, default: int | None = None) -> int | None:
    k = args.k if args.k is not None else default
    if k is not None and k < 1:
        raise UsageError("--k must be positive")
    return k


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _drop_timing(d: dict) -> dict:
    # wall-clock times would break byte-stable json
    return {k: v for k, v in d.items() if k != "seconds"}


def cmd_verify(args) -> int:
    try:
        results = checks.run_checks(args.only)
    except KeyError as exc:
        raise UsageError(f"unknown check {exc.args[0]!r}; known: {', '.join(checks.check_names())}") from None
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        alias = f" ({', '.join(r.aliases)})" if r.aliases else ""
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}{alias}: {r.summary}")
        for key, v in r.details.items():
            if not r.passed or key in ("unit", "denominators"):
                lines.append(f"      {key}: {v}")
        for n in r.notes:
            lines.append(f"      note: {n}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(args, {"passed": ok, "checks": [_drop_timing(r.to_dict()) for r in results]}, "\n".join(lines))
    return 0 if ok else 1


def cmd_eval(args) -> int:
    x = parse_expr(args.expression, _k_from(args))
    out = print_element(x, raw=args.raw)
    _emit(args, {"k": x.m, "result": out}, out)
    return 0


def cmd_w(args) -> int:
    _need(args, "k")
    k = _k_from(args)
    w = w_id(k)
    u = u_id(k)
    text = f"w(Id{k}) = {w}\nu(Id{k}) = {u}\nnote: {U_ASSUMPTION}"
    _emit(args, {"k": k, "w": str(w), "u": str(u), "assumption": U_ASSUMPTION}, text)
    return 0


def cmd_relations(args) -> int:
    _need(args, "k")
    k = _k_from(args)
    if k < 2:
        raise UsageError("relations need --k >= 2")
    variants = parse_variants(args.variants)
    rels = relation_set(k, variants, args.min_through)
    items = [
        {"source": str(r.source), "variant": r.variant.code, "through_degree": r.through_degree, "vector": str(r.vector)}
        for r in rels
    ]
    text = "\n".join(f"[{it['variant']}] {it['source']}: 0 == {it['vector']}" for it in items)
    text += f"\n{len(items)} relations"
    _emit(args, {"k": k, "variants": [v.code for v in variants], "relations": items, "assumption": U_ASSUMPTION}, text)
    return 0


def cmd_glue(args) -> int:
    _need(args, "scenario", "expr")
    s = load_scenario(args.scenario)
    x = parse_expr(args.expr, s.k)
    v = rho_star(s, x)
    terms = {s.format(mc): str(c) for mc, c in sorted(v.terms.items())}
    _emit(args, {"scenario": s.name, "expression": args.expr, "result": s.format(v), "terms": terms}, s.format(v))
    return 0


def _check_expect(args, verdict: str) -> int:
    if args.expect is not None and args.expect != verdict:
        print(f"expected verdict {args.expect}, got {verdict}", file=sys.stderr)
        return 1
    return 0


def cmd_conjecture(args) -> int:
    _need(args, "k")
    k = _k_from(args)
    if k % 2 or k < 2:
        raise UsageError("conjecture needs an even --k >= 2")
    names = args.scenario or ([f"h1h1-k{k}"] if f"h1h1-k{k}" in shipped_scenarios() else [])
    scenarios = [load_scenario(n) for n in names]
    report = conjecture_evidence(k, scenarios)
    lines = [f"level k={k}"]
    for lv in report.levels:
        where = "TL box" if lv.level == "tl" else f"glued into {lv.scenario}"
        lines.append(f"{where}: {lv.rows_all} relations vs {lv.rows_reduced} (top slide + lower levels)")
        for ring, rep in lv.reports.items():
            c = rep.summary()
            lines.append(
                f"  {ring}: {rep.verdict}  (all->reduced: {c['left_in_right']}, reduced->all: {c['right_in_left']})"
            )
    lines += [f"note: {n}" for n in report.notes]
    _emit(args, report.to_dict(certificates=args.certificates), "\n".join(lines))
    ring = args.ring.upper()
    level = "glued" if any(lv.level == "glued" for lv in report.levels) else "tl"
    return _check_expect(args, report.verdict(level, ring))


def cmd_ideal_check(args) -> int:
    _need(args, "scenario", "kmax")
    s = load_scenario(args.scenario)
    if args.kmax % 2 or args.kmax < 2:
        raise UsageError("--kmax must be even and at least 2")
    expr = args.expr or checks.PUBLISHED["final"]
    target = rho_star(s, parse_expr(expr, s.k))
    gens = ideal_generators(s, args.kmax, minimal_position=not args.all_positions)
    m = generator_matrix(s, gens, extra=[target])
    cert = span_membership(target, m)
    qa = "member" if cert.is_member else "non_member"
    za = z_span_decision(target, m)
    verdict = qa if args.ring == "qa" else za.verdict
    gen_items = [
        {"source": str(g.source), "top": s.format(g.top), "top_coefficient": str(g.top_coefficient), "row": s.format(g.row)}
        for g in gens
    ]
    lines = [f"target: {s.format(target)}", f"generators ({len(gens)}, bounded by kmax={args.kmax}):"]
    lines += [f"  {it['source']}: {it['row']}" for it in gen_items]
    lines.append(f"Q(A): {qa}; certificate {cert.format()}")
    lines.append(f"Z[A^+-1]: {za.verdict} ({za.reason})")
    lines.append(f"verdict ({args.ring}): {verdict}  [relative to the bounded generator list]")
    payload = {
        "scenario": s.name,
        "kmax": args.kmax,
        "target": s.format(target),
        "generators": gen_items,
        "independent": m.independent,
        "qa": {"verdict": qa, "certificate": cert.to_dict()},
        "za": za.to_dict(),
        "ring": args.ring,
        "verdict": verdict,
    }
    _emit(args, payload, "\n".join(lines))
    return _check_expect(args, verdict)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skeinslide", description="Handle-slide relations in Temperley-Lieb boxes.")
    p.add_argument("--list-scenarios", action="store_true", help="list bundled scenarios and exit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--k", type=int, help="strand count")
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("verify", parents=[common], help="reproduce the published identities")
    v.add_argument("--only", nargs="+", metavar="CHECK", help="check names or aliases (eq1..eq10, ...)")

    e = sub.add_parser("eval", parents=[common], help="evaluate a TL expression")
    e.add_argument("expression")
    e.add_argument("--raw", action="store_true", help="print diagrams as explicit pairings")

    sub.add_parser("w", parents=[common], help="print w(Id_k) and u(Id_k)")

    r = sub.add_parser("relations", parents=[common], help="list sliding relations")
    r.add_argument("--variants", default="all", help="comma list of lower+,upper+,lower-,upper- or 'all'")
    r.add_argument("--min-through", type=int, default=2)

    g = sub.add_parser("glue", parents=[common], help="glue a TL expression into a scenario")
    g.add_argument("--scenario")
    g.add_argument("--expr")

    c = sub.add_parser("conjecture", parents=[common], help="compare level-k slides with lower levels")
    c.add_argument("--scenario", action="append", help="scenario name or path (repeatable)")
    c.add_argument("--ring", choices=("qa", "za"), default="qa", help="ring used for --expect")
    c.add_argument("--expect", help="expected glued-level verdict")
    c.add_argument("--certificates", action="store_true", help="include per-row certificates in json")

    i = sub.add_parser("ideal-check", parents=[common], help="test a glued relation against the bounded ideal")
    i.add_argument("--scenario")
    i.add_argument("--kmax", type=int)
    i.add_argument("--expr", help="TL expression to glue (default: the final relation)")
    i.add_argument("--ring", choices=("qa", "za"), default="za")
    i.add_argument("--expect", help="expected verdict")
    i.add_argument("--all-positions", action="store_true", help="do not require minimal position of generator tops")
    return p


COMMANDS = {
    "verify": cmd_verify,
    "eval": cmd_eval,
    "w": cmd_w,
    "relations": cmd_relations,
    "glue": cmd_glue,
    "conjecture": cmd_conjecture,
    "ideal-check": cmd_ideal_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_scenarios:
        for name, desc in shipped_scenarios().items():
            print(f"{name}: {desc}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
