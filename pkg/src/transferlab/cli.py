"""Command-line front end.

Subcommands: analyze, verify, scan, witness, builtin.
Exit codes: 0 pass, 1 violation or witness failure, 2 input error,
3 cap-limited results under --strict-caps.
"""

from __future__ import annotations

import argparse
import sys

from .caps import Caps, CapExceeded
from .catalog import (
    CatalogEntry,
    builtin_group,
    builtin_names,
    default_corpus,
    load_catalog,
)
from .checkers import (
    CHECKERS,
    run_checker,
    scan_corpus,
    verify_paper_witnesses,
)
from .group import PermGroup, is_maximal, normalizer
from .iso import abelian_invariants
from .series import (
    a_p,
    center,
    frattini_p,
    is_p_nilpotent,
    norm,
    norm_length,
    o_p,
    o_upper_p,
    omega,
    z_k,
)
from .sylow import all_sylow_subgroups, max_intersection_order, tame_intersections_between
from .transfer import controls_p_transfer, focal_subgroup

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPPED = 3


def _entries(args) -> list[CatalogEntry]:
    if getattr(args, "catalog", None):
        return load_catalog(args.catalog)
    return default_corpus()


def _resolve_group(selector: str, args) -> PermGroup:
    """A catalog label, or a builtin spec like "psl2:17" or "symmetric:4"."""
    for entry in _entries(args):
        if entry.label == selector:
            return entry.build()
    if ":" in selector:
        name, _, rest = selector.partition(":")
        params = [int(tok) for tok in rest.split(",") if tok]
        return builtin_group(name, *params)
    raise ValueError(f"unknown group selector: {selector!r}")


def _caps(args) -> Caps:
    return Caps.default()


def cmd_analyze(args) -> int:
    group = _resolve_group(args.group, args)
    p = args.prime
    if p is None or group.order() % p:
        print(f"error: --prime must divide the group order {group.order()}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    caps = _caps(args)
    fam = all_sylow_subgroups(group, p, caps)
    p_syl = fam.base_member
    ngp = normalizer(group, p_syl, caps)
    zn = norm(p_syl, caps)
    report = controls_p_transfer(group, ngp, p, caps)
    tame = tame_intersections_between(
        group, p, PermGroup(group.degree, []), True, caps, fam, strict_lower=False
    )
    lines = [
        f"group: {group.name}  order {group.order()}  degree {group.degree}",
        f"prime: {p}",
        f"sylow order: {p_syl.order()}  count: {len(fam)}",
        f"|Z(P)| = {center(p_syl, caps).order()}",
        f"|Z_{p - 1}(P)| = {z_k(p_syl, p - 1, caps).order()}",
        f"|Z*(P)| = {zn.order()}  norm_length(P) = {norm_length(p_syl, caps)}",
        f"|Phi(P)| = {frattini_p(p_syl, p, caps).order()}",
        f"|Omega(P)| = {omega(p_syl, p, 1, caps).order()}",
        f"|O_p(G)| = {o_p(group, p, caps).order()}",
        f"|O^p(G)| = {o_upper_p(group, p, caps).order()}",
        f"|A^p(G)| = {a_p(group, p, caps).order()}",
        f"p-nilpotent: {is_p_nilpotent(group, p, caps)}",
        f"focal subgroup order: {focal_subgroup(group, p_syl, caps).order()}",
        f"max Sylow intersection: {max_intersection_order(group, p, caps, fam)}",
        f"tame intersections below P: {len(tame)}"
        + (f" (orders {sorted(r.d.order() for r in tame)})" if tame else ""),
        f"N_G(P) order: {ngp.order()}  N_G(P) maximal: "
        + str(ngp.order() < group.order() and is_maximal(group, ngp, caps)),
        f"controls: {report.controls}",
        f"G/A^p(G) invariants: {list(report.quotient_invariants_g)}",
    ]
    print("\n".join(lines))
    return EXIT_PASS


def cmd_verify(args) -> int:
    if args.checker not in CHECKERS:
        print(f"error: unknown checker {args.checker!r}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    group = _resolve_group(args.group, args)
    p = args.prime
    if p is None or group.order() % p:
        print(f"error: --prime must divide the group order {group.order()}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    params = {}
    if args.reading:
        params["reading"] = args.reading
    verdict = run_checker(args.checker, group, p, params, _caps(args))
    if args.format == "records":
        print(verdict.to_json())
    else:
        print(
            f"{verdict.checker_id} on {verdict.group_label} at p={verdict.prime}: "
            f"{verdict.verdict}"
        )
        for k, v in sorted(verdict.witnesses.items()):
            print(f"  {k}: {v}")
        if verdict.interpretation_notes:
            print(f"  notes: {verdict.interpretation_notes}")
    if verdict.verdict == "VIOLATION":
        return EXIT_VIOLATION
    if verdict.verdict == "skipped:cap" and args.strict_caps:
        return EXIT_CAPPED
    return EXIT_PASS


def cmd_scan(args) -> int:
    entries = _entries(args)
    params = {}
    if args.reading:
        params["reading"] = args.reading
    if args.corrupt_checker:
        params["corrupt_checker"] = args.corrupt_checker
    checker_ids = args.checker or None
    report = scan_corpus(entries, checker_ids, params, _caps(args), jobs=args.jobs)
    if args.format == "records":
        for line in report.record_lines():
            print(line)
    else:
        print(f"corpus: {report.corpus_description}")
        for key in ("implication_ok", "vacuous", "VIOLATION", "skipped:cap"):
            print(f"  {key}: {report.summary[key]}")
        for v in report.violations:
            print(f"VIOLATION: {v.checker_id} {v.group_label} p={v.prime} {v.witnesses}")
        for v in report.interpretation_discrepancies:
            print(
                f"interpretation discrepancy: {v.checker_id} {v.group_label} "
                f"p={v.prime} (strict reading fails, p'-length reading passes)"
            )
    if report.violations:
        return EXIT_VIOLATION
    if report.summary["skipped:cap"] and args.strict_caps:
        return EXIT_CAPPED
    return EXIT_PASS


def cmd_witness(args) -> int:
    facts = verify_paper_witnesses(_caps(args))
    failed = False
    for fact_id, ok in facts:
        print(f"{fact_id}: {'pass' if ok else 'FAIL'}")
        failed = failed or not ok
    return EXIT_VIOLATION if failed else EXIT_PASS


def cmd_builtin(args) -> int:
    if args.list:
        for name, desc in builtin_names():
            print(f"{name}: {desc}")
        return EXIT_PASS
    print("error: nothing to do (use --list)", file=sys.stderr)
    return EXIT_INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transferlab",
        description="Transfer-map machinery and theorem verification for finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p_cmd, prime=False):
        p_cmd.add_argument("--catalog", help="path to a JSONL catalog file")
        p_cmd.add_argument(
            "--format", choices=("text", "records"), default="text", dest="format"
        )
        p_cmd.add_argument("--strict-caps", action="store_true", dest="strict_caps")
        if prime:
            p_cmd.add_argument("--prime", type=int, required=True)

    p_an = sub.add_parser("analyze", help="structural summary of one group at a prime")
    p_an.add_argument("group")
    common(p_an, prime=True)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run one checker on one group")
    p_ver.add_argument("checker")
    p_ver.add_argument("group")
    p_ver.add_argument("--reading", choices=("strict",), default=None)
    common(p_ver, prime=True)
    p_ver.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="run checkers over the corpus")
    p_scan.add_argument(
        "--checker", action="append", help="checker id (repeatable; default all)"
    )
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--reading", choices=("strict",), default=None)
    p_scan.add_argument(
        "--corrupt-checker",
        dest="corrupt_checker",
        help="test mode: force the named checker's conclusions to fail",
    )
    common(p_scan)
    p_scan.set_defaults(func=cmd_scan)

    p_wit = sub.add_parser("witness", help="verify the named-group witness facts")
    common(p_wit)
    p_wit.set_defaults(func=cmd_witness)

    p_b = sub.add_parser("builtin", help="built-in group constructors")
    p_b.add_argument("--list", action="store_true")
    p_b.set_defaults(func=cmd_builtin)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPPED if getattr(args, "strict_caps", False) else EXIT_PASS
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
