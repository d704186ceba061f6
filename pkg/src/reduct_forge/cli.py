"""Command-line surface: load a table, run one pipeline stage, print a report.

Exit codes: 0 success, 2 input/dataset error, 3 resource cap exceeded.
Machine output (``--json``) has a stable key schema; rationals are emitted as
``{"num", "den", "decimal"}`` and only the ``elapsed_ms`` field varies between
identical runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .dataset import (
    InformationSystem,
    builtin_names,
    conditional_attributes,
    load_builtin,
    load_csv,
)
from .errors import ReductForgeError, TooManyAttributes
from .partition import ObjectSet, ind_partition
from .reduct import DEFAULT_MAX_ATTRS, eliminate, exhaustive_reducts
from .significance import CountSplit, GroupPolicy, ThresholdSplit, rank_attributes
from .topology import (
    base_from_indiscernibility_matrix,
    family_equal,
    minimal_neighborhoods,
    subbase_of,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3


def _fraction_json(value: Fraction) -> dict:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": str(float(value)),
    }


def _set_json(s: ObjectSet) -> list[int]:
    return list(s)


def _load_table(args: argparse.Namespace) -> InformationSystem:
    decision = args.decision
    if decision == "identity":
        decision = None
    if args.builtin:
        table = load_builtin(args.builtin)
        if decision is not None:
            table = InformationSystem(
                object_ids=table.object_ids,
                attributes=table.attributes,
                rows=table.rows,
                decision=decision,
            )
        return table
    try:
        with open(args.input, "rb") as handle:
            return load_csv(handle, has_header=True, decision=decision)
    except OSError as exc:
        raise ReductForgeError(f"cannot read {args.input}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ReductForgeError(f"{args.input} is not UTF-8 text") from exc


def _dataset_summary(table: InformationSystem) -> dict:
    return {
        "objects": table.object_count,
        "conditional_attributes": list(conditional_attributes(table)),
        "decision": table.decision if table.decision is not None else "identity",
    }


def _parse_group_policy(text: str) -> GroupPolicy:
    if text == "threshold":
        return ThresholdSplit()
    if text.startswith("count:"):
        try:
            return CountSplit(int(text.split(":", 1)[1]))
        except ValueError:
            raise ReductForgeError(f"bad --group value: {text!r}") from None
    raise ReductForgeError(f"bad --group value: {text!r} (use threshold or count:N)")


def _parse_attrs(table: InformationSystem, text: str | None) -> list[str]:
    if text is None:
        return list(conditional_attributes(table))
    return [name.strip() for name in text.split(",") if name.strip()]


def _emit(report: dict, args: argparse.Namespace, render_text) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        render_text(report)


def _cmd_significance(args: argparse.Namespace) -> int:
    table = _load_table(args)
    start = time.perf_counter()
    ranked = rank_attributes(table)
    elapsed = (time.perf_counter() - start) * 1000.0
    report = {
        "command": "significance",
        "dataset": _dataset_summary(table),
        "ranked": [
            {"attribute": a, "significance": _fraction_json(v)} for a, v in ranked.ranked
        ],
        "elapsed_ms": round(elapsed, 3),
    }

    def render(rep: dict) -> None:
        print(f"significance ({rep['dataset']['objects']} objects, "
              f"{len(rep['dataset']['conditional_attributes'])} attributes)")
        for row in rep["ranked"]:
            frac = row["significance"]
            print(f"  {row['attribute']:<12} {frac['num']}/{frac['den']}"
                  f"  ({frac['decimal']})")

    _emit(report, args, render)
    return EXIT_OK


def _cmd_reduct(args: argparse.Namespace) -> int:
    table = _load_table(args)
    policy = _parse_group_policy(args.group)
    start = time.perf_counter()
    result = eliminate(table, policy)
    payload: dict = {
        "command": "reduct",
        "dataset": _dataset_summary(table),
        "reduct": list(result.reduct),
        "removed": list(result.removed),
        "verified_minimal": result.verified_minimal,
    }
    if args.trace:
        payload["trace"] = [
            {
                "attribute": entry.attribute,
                "significance": _fraction_json(entry.significance),
                "group": entry.group,
                "verdict": entry.verdict,
                "base_size_before": entry.base_size_before,
                "base_size_after": entry.base_size_after,
            }
            for entry in result.trace
        ]
    if args.exhaustive:
        cap = int(os.environ.get("REDUCT_FORGE_MAX_ATTRS", DEFAULT_MAX_ATTRS))
        all_reducts = exhaustive_reducts(table, cap)
        ordered = sorted(sorted(r) for r in all_reducts)
        payload["all_reducts"] = ordered
        payload["heuristic_is_minimal"] = result.reduct_set in all_reducts
    payload["elapsed_ms"] = round((time.perf_counter() - start) * 1000.0, 3)

    def render(rep: dict) -> None:
        print(f"reduct:  {{{', '.join(rep['reduct'])}}}")
        print(f"removed: [{', '.join(rep['removed'])}]")
        print(f"verified minimal: {rep['verified_minimal']}")
        if "trace" in rep:
            print("trace:")
            for entry in rep["trace"]:
                frac = entry["significance"]
                print(f"  {entry['attribute']:<8} sig={frac['num']}/{frac['den']}"
                      f" group={entry['group']} -> {entry['verdict']}"
                      f" (base {entry['base_size_before']} -> {entry['base_size_after']})")
        if "all_reducts" in rep:
            print("all minimal reducts:")
            for r in rep["all_reducts"]:
                print(f"  {{{', '.join(r)}}}")
            print(f"heuristic result is minimal: {rep['heuristic_is_minimal']}")

    _emit(payload, args, render)
    return EXIT_OK


def _cmd_partition(args: argparse.Namespace) -> int:
    table = _load_table(args)
    attrs = _parse_attrs(table, args.attrs)
    start = time.perf_counter()
    part = ind_partition(table, attrs)
    report = {
        "command": "partition",
        "dataset": _dataset_summary(table),
        "attributes": attrs,
        "blocks": [_set_json(b) for b in part.blocks],
        "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
    }

    def render(rep: dict) -> None:
        print(f"partition over {{{', '.join(rep['attributes'])}}}: "
              f"{len(rep['blocks'])} blocks")
        for block in rep["blocks"]:
            print("  {" + ",".join(str(i) for i in block) + "}")

    _emit(report, args, render)
    return EXIT_OK


def _cmd_base(args: argparse.Namespace) -> int:
    table = _load_table(args)
    attrs = _parse_attrs(table, args.attrs)
    start = time.perf_counter()
    subbase = subbase_of(table, attrs)
    direct = minimal_neighborhoods(subbase)
    iterated = base_from_indiscernibility_matrix(subbase)
    report = {
        "command": "base",
        "dataset": _dataset_summary(table),
        "attributes": attrs,
        "subbase_size": len(subbase),
        "base": [_set_json(m) for m in direct.members],
        "base_from_matrix": [_set_json(m) for m in iterated.members],
        "methods_agree": family_equal(direct, iterated),
        "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
    }

    def render(rep: dict) -> None:
        print(f"sub-base over {{{', '.join(rep['attributes'])}}}: "
              f"{rep['subbase_size']} members")
        print(f"base ({len(rep['base'])} members):")
        for member in rep["base"]:
            print("  {" + ",".join(str(i) for i in member) + "}")
        print(f"matrix method agrees: {rep['methods_agree']}")

    _emit(report, args, render)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reduct-forge",
        description="Attribute reduction for categorical decision tables.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="CSV file with a header row")
        p.add_argument("--builtin", choices=builtin_names(),
                       help="use a bundled dataset instead of a file")
        p.add_argument("--decision", default="identity", metavar="NAME|identity",
                       help="decision column (default: identity policy)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_sig = sub.add_parser("significance", help="rank attributes by significance")
    add_common(p_sig)
    p_sig.set_defaults(func=_cmd_significance)

    p_red = sub.add_parser("reduct", help="eliminate redundant attributes")
    add_common(p_red)
    p_red.add_argument("--group", default="threshold", metavar="threshold|count:N",
                       help="low/high grouping policy (default: threshold)")
    p_red.add_argument("--exhaustive", action="store_true",
                       help="also enumerate all minimal reducts")
    p_red.add_argument("--trace", action="store_true",
                       help="include the per-attribute verdict log")
    p_red.set_defaults(func=_cmd_reduct)

    p_part = sub.add_parser("partition", help="indiscernibility partition")
    add_common(p_part)
    p_part.add_argument("--attrs", metavar="a,b,c",
                        help="attribute subset (default: all conditional)")
    p_part.set_defaults(func=_cmd_partition)

    p_base = sub.add_parser("base", help="topology base from a sub-base")
    add_common(p_base)
    p_base.add_argument("--attrs", metavar="a,b,c",
                        help="attribute subset (default: all conditional)")
    p_base.set_defaults(func=_cmd_base)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if bool(args.input) == bool(args.builtin):
        print("error: give exactly one of INPUT.csv or --builtin", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except TooManyAttributes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ReductForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
