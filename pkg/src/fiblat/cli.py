"""Command line surface: reproducible character tables and verifications.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 invalid input.  JSON output carries "schema": 1 and echoes the full
parameter set (including the seed), so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .configs import fib_character, fib_type_for
from .dual import verify_annihilator
from .modes import (
    heisenberg_vertex_commutator_check,
    sl2_bracket_check,
    verify_relations,
)
from .series import base_exponent, char_basic_subspace, char_lattice, check_lattice
from .straighten import (
    evaluate_fib_polynomial,
    expand_in_fib_basis,
    independence_and_span_check,
    straighten_monomial,
)

SCHEMA = 1


class UsageError(Exception):
    pass


def _parse_charge_window(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad charge window {text!r}; expected lo..hi") from exc
    if lo > hi:
        raise UsageError(f"empty charge window {text!r}")
    return lo, hi


def _default_window(D: int, cutoff: int):
    """Smallest window covering every charge with base(m) <= cutoff."""
    lo = 0
    while base_exponent(D, lo - 1) <= cutoff:
        lo -= 1
    hi = 0
    while base_exponent(D, hi + 1) <= cutoff:
        hi += 1
    return lo, hi


def _emit_json(payload: dict):
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _char_table(series, window, cutoff) -> str:
    lo, hi = window
    lines = []
    header = "m\\d " + " ".join(f"{d:>4}" for d in range(cutoff + 1))
    lines.append(header)
    for m in range(lo, hi + 1):
        row = [f"{m:>4}"] + [f"{series.coefficient(m, d):>4}" for d in range(cutoff + 1)]
        lines.append(" ".join(row))
    return "\n".join(lines)


def cmd_char(args) -> int:
    D = args.D
    check_lattice(D)
    cutoff = args.cutoff
    window = _parse_charge_window(args.charge) if args.charge else _default_window(D, cutoff)
    source = args.source
    params = {
        "D": D,
        "charge_window": list(window),
        "cutoff": cutoff,
        "source": source,
        "seed": args.seed,
    }
    if source == "formula":
        series = char_lattice(D, window, cutoff)
    elif source == "enumeration":
        series = fib_character(fib_type_for(D), D, window, cutoff)
    elif source.startswith("basic"):
        j = int(source.split(":")[1]) if ":" in source else 0
        params["j"] = j
        series = char_basic_subspace(D, j, window, cutoff)
    elif source == "both":
        formula = char_lattice(D, window, cutoff)
        enumerated = fib_character(fib_type_for(D), D, window, cutoff)
        match = formula.agrees_with(enumerated)
        diff = []
        for m in range(window[0], window[1] + 1):
            for d in range(cutoff + 1):
                a, b = formula.coefficient(m, d), enumerated.coefficient(m, d)
                if a != b:
                    diff.append({"m": m, "d": d, "formula": a, "enumeration": b})
        if args.format == "json":
            _emit_json(
                {
                    "schema": SCHEMA,
                    "command": "char",
                    "params": params,
                    "match": match,
                    "diff": diff,
                    "series": formula.to_json_dict(),
                }
            )
        else:
            print("MATCH" if match else "MISMATCH")
            for entry in diff:
                print(
                    f"  (m={entry['m']}, d={entry['d']}): "
                    f"formula {entry['formula']} vs enumeration {entry['enumeration']}"
                )
        return 0 if match else 1
    else:
        raise UsageError(f"unknown source {source!r}")
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "char",
                "params": params,
                "series": series.to_json_dict(),
            }
        )
    else:
        print(_char_table(series, window, cutoff))
    return 0


def cmd_verify(args) -> int:
    D = args.D
    check_lattice(D)
    cutoff = args.cutoff
    suite = args.suite
    window = _parse_charge_window(args.charge) if args.charge else (-1, 1)
    charge_list = list(range(window[0], window[1] + 1))
    params = {
        "D": D,
        "suite": suite,
        "cutoff": cutoff,
        "charges": charge_list,
        "seed": args.seed,
    }
    if suite == "relations":
        report = verify_relations(D, charge_list, cutoff)
        entries = report.entries
        passed = report.passed
    elif suite == "sl2":
        if D != 2:
            raise UsageError("the sl2 suite is defined at D=2 only")
        report = sl2_bracket_check(cutoff)
        entries = report.entries
        passed = report.passed
    elif suite == "heisenberg":
        report = heisenberg_vertex_commutator_check(D, cutoff)
        entries = report.entries
        passed = report.passed
    elif suite == "annihilator":
        entries = []
        for m in range(0, args.max_charge + 1):
            entries.extend(verify_annihilator(D, m, (0, cutoff)))
        passed = all(e["annihilator_ok"] for e in entries)
    elif suite == "rank":
        entries = []
        for j in (-1, 0):
            for m in range(j, args.max_charge + 1):
                for d in range(cutoff + 1):
                    entries.append(independence_and_span_check(D, j, m, d))
        passed = all(e["status"] == "pass" for e in entries)
    else:
        raise UsageError(f"unknown suite {suite!r}")
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "verify",
                "params": params,
                "passed": passed,
                "entries": entries,
            }
        )
    else:
        n = len(entries)
        print(f"suite {suite}: {'PASS' if passed else 'FAIL'} ({n} checks)")
        if not passed:
            for e in entries:
                status = e.get("status", "pass" if e.get("annihilator_ok") else "fail")
                if status != "pass":
                    print(f"  FAIL {e}", file=sys.stderr)
    return 0 if passed else 1


def cmd_straighten(args) -> int:
    D = args.D
    check_lattice(D)
    j = args.j
    try:
        monomial = [int(x) for x in args.monomial.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad monomial {args.monomial!r}") from exc
    if not monomial:
        raise UsageError("empty monomial")
    params = {
        "D": D,
        "j": j,
        "monomial": monomial,
        "cutoff": args.cutoff,
        "seed": args.seed,
    }
    poly = straighten_monomial(D, j, monomial)
    checked = None
    if args.check:
        from .modes import apply_monomial
        from .monomials import sort_with_sign

        if D % 2 == 0:
            direct = apply_monomial(D, j, sorted(monomial))
        else:
            idx, sign = sort_with_sign(monomial)
            direct = (
                apply_monomial(D, j, idx).scale(sign)
                if sign
                else apply_monomial(D, j, idx).scale(0)
            )
        via_normal_form = evaluate_fib_polynomial(poly, D, j)
        checked = direct == via_normal_form
        if checked and not direct.is_zero():
            m, d = direct.homogeneous_bidegree()
            oracle = expand_in_fib_basis(D, j, direct, m, d)
            checked = oracle == poly
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "straighten",
            "params": params,
            "polynomial": poly.to_json(),
        }
        if checked is not None:
            payload["check"] = checked
        _emit_json(payload)
    else:
        print(repr(poly))
        if checked is not None:
            print(f"check: {'OK' if checked else 'MISMATCH'}")
    if checked is False:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiblat",
        description="Exact semi-infinite Fibonacci bases of lattice vertex superalgebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--D", type=int, required=True, help="lattice parameter, D >= 2")
        p.add_argument("--cutoff", type=int, default=8, help="degree cutoff")
        p.add_argument("--charge", type=str, default=None, help="charge window lo..hi")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--seed", type=int, default=0, help="seed recorded in outputs")

    p_char = sub.add_parser("char", help="character tables")
    common(p_char)
    p_char.add_argument(
        "--source",
        default="formula",
        help="formula | enumeration | basic[:j] | both",
    )
    p_char.set_defaults(fn=cmd_char)

    p_verify = sub.add_parser("verify", help="verification suites")
    common(p_verify)
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=("relations", "sl2", "heisenberg", "annihilator", "rank"),
    )
    p_verify.add_argument("--max-charge", type=int, default=3)
    p_verify.set_defaults(fn=cmd_verify)

    p_str = sub.add_parser("straighten", help="Fibonacci normal form of a monomial")
    common(p_str)
    p_str.add_argument("--j", type=int, default=0, help="highest weight charge")
    p_str.add_argument("--monomial", required=True, help="comma-separated mode indices")
    p_str.add_argument("--check", action="store_true", help="cross-check in the Fock model")
    p_str.set_defaults(fn=cmd_straighten)
    return parser


_NEGATIVE_OK = ("--monomial", "--charge", "--j")


def _merge_negative_values(argv):
    """Let ``--monomial -2,-2`` or ``--j -1`` parse: glue values that begin
    with '-' followed by a digit onto their option."""
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _NEGATIVE_OK and len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
            out.append(f"{tok}={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
