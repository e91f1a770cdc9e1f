"""Command-line interface.

One subcommand per capability; each prints to stdout in the selected
--format (text, json, csv) and can additionally drop its JSON artifact
into a directory given with --out.  Exit codes: 0 success, 1 domain error
or failed verification, 2 usage error.

Partitions on the command line are space-separated positive integers and
must already be nonincreasing — the library never sorts silently, so the
CLI does not either.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import TnSpecError
from .families import WitnessRecord
from .oracle import (
    EnumerationConstraints,
    cayley_spectrum,
    contains,
    spectrum,
)
from .partitions import conjugate, eigenvalue, make_partition
from .segments import (
    conjecture_scan,
    linear_segment_cover,
    linear_segment_witness,
    quadratic_segment_bounds,
    quadratic_segment_cover,
    quadratic_segment_witness,
)
from .verify import DEFAULT_CHECKS, format_table, run_checks, summary_dict


def _write_artifact(args: argparse.Namespace, name: str, payload: dict) -> None:
    if args.out is None:
        return
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.json"
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit(
    args: argparse.Namespace,
    payload: dict,
    text_lines: list[str],
    csv_rows: list[list[str]],
    artifact_name: str,
) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(csv_rows)
        sys.stdout.write(buffer.getvalue())
    else:
        for line in text_lines:
            print(line)
    _write_artifact(args, artifact_name, payload)


def _witness_output(record: WitnessRecord) -> tuple[dict, list[str], list[list[str]]]:
    payload = record.to_json_dict()
    text = [
        str(record.partition),
        f"family: {record.family}",
        f"verified: {str(record.verified).lower()}",
    ]
    rows = [
        ["n", "target", "family", "partition", "verified"],
        [
            str(record.n),
            str(record.target),
            record.family,
            str(record.partition),
            str(record.verified).lower(),
        ],
    ]
    return payload, text, rows


def _cmd_eig(args: argparse.Namespace) -> int:
    partition = make_partition(args.parts)
    value = eigenvalue(partition)
    _emit(
        args,
        {"partition": list(partition.parts), "eigenvalue": value},
        [str(value)],
        [["partition", "eigenvalue"], [str(partition), str(value)]],
        "eig",
    )
    return 0


def _cmd_conj(args: argparse.Namespace) -> int:
    partition = make_partition(args.parts)
    transposed = conjugate(partition)
    _emit(
        args,
        {"partition": list(partition.parts), "conjugate": list(transposed.parts)},
        [str(transposed)],
        [["partition", "conjugate"], [str(partition), str(transposed)]],
        "conj",
    )
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    constraints = EnumerationConstraints(args.max_first_part, args.max_length)
    result = spectrum(
        args.n, constraints, limit=args.oracle_limit, witnesses=args.witnesses
    )
    payload = result.to_json_dict()
    text = [" ".join(str(value) for value in result.values)]
    rows: list[list[str]] = [["value", "witness"]]
    if args.witnesses and result.witnesses is not None:
        for value in result.values:
            witness = result.witnesses[value]
            text.append(f"{value}: {witness}")
            rows.append([str(value), str(witness)])
    else:
        payload.pop("witnesses", None)
        rows.extend([str(value), ""] for value in result.values)
    _emit(args, payload, text, rows, f"spectrum_{args.n}")
    return 0


def _cmd_contains(args: argparse.Namespace) -> int:
    answer, witness = contains(args.n, args.k, limit=args.oracle_limit)
    payload = {
        "n": args.n,
        "k": args.k,
        "contained": answer,
        "witness": list(witness.parts) if witness else None,
    }
    text = [str(answer).lower()]
    if witness is not None:
        text.append(f"witness: {witness}")
    rows = [
        ["n", "k", "contained", "witness"],
        [str(args.n), str(args.k), str(answer).lower(), str(witness) if witness else ""],
    ]
    _emit(args, payload, text, rows, f"contains_{args.n}_{args.k}")
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    if args.theorem == 5:
        record = quadratic_segment_witness(args.n, args.k, limit=args.oracle_limit)
    else:
        record = linear_segment_witness(
            args.n,
            args.k,
            oracle_fallback=args.oracle_fallback,
            limit=args.oracle_limit,
        )
    payload, text, rows = _witness_output(record)
    _emit(args, payload, text, rows, f"witness_{args.n}_{args.k}")
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    if args.theorem == 5:
        report = quadratic_segment_cover(args.n, limit=args.oracle_limit)
        name = f"cover_quadratic_{args.n}"
    else:
        report = linear_segment_cover(args.n)
        name = f"cover_linear_{args.n}"
    payload = report.to_json_dict()
    text = [
        f"n={report.n} segment=[{report.segment[0]}, {report.segment[1]}] "
        f"covered={report.covered} failures={len(report.failures)} "
        f"max_first_part={report.max_first_part}"
    ]
    for family, count in report.histogram.items():
        text.append(f"  {family}: {count}")
    for target, message in report.failures:
        text.append(f"  FAILED {target}: {message}")
    _emit(args, payload, text, report.to_csv_rows(), name)
    return 0 if not report.failures else 1


def _cmd_bounds(args: argparse.Namespace) -> int:
    bounds = quadratic_segment_bounds(args.n)
    _emit(
        args,
        bounds.to_json_dict(),
        [f"y1={bounds.y1} y2={bounds.y2}"],
        [["n", "y1", "y2"], [str(bounds.n), str(bounds.y1), str(bounds.y2)]],
        f"bounds_{args.n}",
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    check_ids = args.checks.split(",") if args.checks else None
    reports = run_checks(check_ids, args.n_min, args.n_max)
    summary = summary_dict(reports)
    rows = [["check_id", "n_low", "n_high", "cases_run", "cases_failed"]]
    rows.extend(
        [
            report.check_id,
            str(report.n_range[0]),
            str(report.n_range[1]),
            str(report.cases_run),
            str(report.cases_failed),
        ]
        for report in reports
    )
    _emit(args, summary, format_table(reports).split("\n"), rows, "verify_summary")
    if args.out is not None:
        for report in reports:
            safe = report.check_id.replace(":", "_").replace("-", "_")
            _write_artifact(args, f"verify_{safe}", report.to_json_dict())
    return 0 if summary["ok"] else 1


def _cmd_conjecture(args: argparse.Namespace) -> int:
    report = conjecture_scan(args.n, limit=args.oracle_limit)
    payload = report.to_json_dict(with_witnesses=True)
    absent = [target for target, _ in report.failures]
    text = [
        f"n={report.n} gap=[{report.segment[0]}, {report.segment[1]}] "
        f"present={report.covered} absent={len(absent)}"
    ]
    for record in report.records:
        text.append(f"  {record.target}: {record.partition}")
    if absent:
        text.append("  absent: " + " ".join(str(target) for target in absent))
    _emit(args, payload, text, report.to_csv_rows(), f"conjecture_{args.n}")
    return 0


def _cmd_cayley(args: argparse.Namespace) -> int:
    result = cayley_spectrum(args.n)
    _emit(
        args,
        result.to_json_dict(),
        [" ".join(str(value) for value in result.values)],
        [["value"], *([str(value)] for value in result.values)],
        f"cayley_{args.n}",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--out",
        metavar="DIR",
        default=None,
        help="also write the JSON artifact(s) into this directory",
    )
    common.add_argument(
        "--oracle-limit",
        type=int,
        metavar="N",
        default=None,
        help="max n for exhaustive enumeration "
        "(default 50, or the TNSPEC_ORACLE_LIMIT environment variable)",
    )

    parser = argparse.ArgumentParser(
        prog="tnspec",
        description="Exact integer spectra of transposition graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eig", parents=[common], help="eigenvalue of a partition")
    p.add_argument("parts", nargs="+", type=int, help="nonincreasing positive parts")
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("conj", parents=[common], help="conjugate of a partition")
    p.add_argument("parts", nargs="+", type=int)
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser(
        "spectrum", parents=[common], help="exhaustive spectrum of T_n"
    )
    p.add_argument("n", type=int)
    p.add_argument("--max-first-part", type=int, default=None, metavar="M")
    p.add_argument("--max-length", type=int, default=None, metavar="L")
    p.add_argument(
        "--witnesses", action="store_true", help="include one witness per value"
    )
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser(
        "contains", parents=[common], help="is k an eigenvalue of T_n?"
    )
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_contains)

    p = sub.add_parser(
        "witness", parents=[common], help="explicit partition with eigenvalue k"
    )
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument(
        "--theorem",
        type=int,
        choices=(3, 5),
        default=3,
        help="3: linear segment [-n, n]; 5: quadratic segment [y1, y2]",
    )
    p.add_argument(
        "--oracle-fallback",
        action="store_true",
        help="for n below 31, search exhaustively instead of failing",
    )
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser(
        "cover", parents=[common], help="witness every target in a segment"
    )
    p.add_argument("n", type=int)
    p.add_argument("--theorem", type=int, choices=(3, 5), default=3)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser(
        "bounds", parents=[common], help="quadratic segment endpoints y1, y2"
    )
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser(
        "verify", parents=[common], help="run re-verification sweeps"
    )
    p.add_argument(
        "--checks",
        default=None,
        metavar="LIST",
        help="comma-separated check ids (default: all); "
        f"known: {', '.join(DEFAULT_CHECKS)}",
    )
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "conjecture",
        parents=[common],
        help="oracle scan of the unproven gap above the linear segment",
    )
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser(
        "cayley", parents=[common], help="spectrum from the dense Cayley matrix (n <= 6)"
    )
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_cayley)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except TnSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
