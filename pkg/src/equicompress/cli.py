"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (irregular action, invalid
triple, roundtrip mismatch), 2 malformed input.  All JSON output uses sorted
keys so files are byte-deterministic given the inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .actions import (
    action_from_doc,
    action_to_doc,
    check_regularity,
    induced_action_on_subdivision,
    quotient,
)
from .bench import FAMILIES, growth_exponents, rows_to_csv, run_bench
from .cog import triple_from_doc, triple_to_doc, validate_triple
from .complexes import barycentric_subdivision, complex_from_doc, complex_to_doc
from .compress import LIFT_POLICIES, compress, compression_ratio
from .errors import EquicompressError, FormatError, RegularityViolationError, TripleValidationError
from .reconstruct import reconstruct
from .verify import verify_roundtrip

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


def _dump(doc, path):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc


def _load_complex(path):
    return complex_from_doc(_load_json(path))


def _load_action(complex_path, action_path):
    doc = _load_json(action_path)
    if "complex" in doc:
        complex_ = complex_from_doc(doc["complex"], "$.complex")
    elif complex_path:
        complex_ = _load_complex(complex_path)
    else:
        raise FormatError("action file has no inline complex and --complex not given")
    return action_from_doc(doc, complex_)


def _load_triple(path):
    return triple_from_doc(_load_json(path))


def cmd_check_regular(args):
    action = _load_action(args.complex, args.action)
    report = check_regularity(action)
    _dump(report.to_doc(), args.out)
    return EXIT_OK if report.regular else EXIT_MATH


def cmd_subdivide(args):
    if args.action:
        action = _load_action(args.complex, args.action)
        for _ in range(args.times):
            action = induced_action_on_subdivision(
                action, barycentric_subdivision(action.complex)
            )
        _dump(action_to_doc(action), args.out)
    else:
        complex_ = _load_complex(args.complex)
        for _ in range(args.times):
            complex_ = barycentric_subdivision(complex_).target
        _dump(complex_to_doc(complex_), args.out)
    return EXIT_OK


def cmd_quotient(args):
    action = _load_action(args.complex, args.action)
    try:
        quotient_complex, orbit_map = quotient(action)
    except RegularityViolationError as exc:
        _dump(exc.report.to_doc(), args.out)
        return EXIT_MATH
    _dump({"quotient": complex_to_doc(quotient_complex), "p": orbit_map}, args.out)
    return EXIT_OK


def cmd_compress(args):
    action = _load_action(args.complex, args.action)
    try:
        triple, certificate = compress(
            action, lift_policy=args.lift_policy, threads=args.threads
        )
    except RegularityViolationError as exc:
        _dump(exc.report.to_doc(), args.out)
        return EXIT_MATH
    _dump(triple_to_doc(triple, certificate), args.out)
    total_index = sum(
        action.group.order // len(s) for s in triple.stabilizers
    )
    print(
        f"simplices {len(action.complex)} -> classes {len(triple.quotient)}, "
        f"sum of stabilizer indices {total_index}, "
        f"ratio {compression_ratio(action, triple):.3f}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_reconstruct(args):
    triple, _ = _load_triple(args.triple)
    try:
        rc = reconstruct(triple, threads=args.threads)
    except TripleValidationError as exc:
        _dump(exc.report.to_doc(), args.out)
        return EXIT_MATH
    _dump(
        {
            "complex": complex_to_doc(rc.complex),
            "labels": [[y, g] for y, g in rc.labels],
        },
        args.out,
    )
    return EXIT_OK


def cmd_roundtrip(args):
    action = _load_action(args.complex, args.action)
    try:
        triple, certificate = compress(
            action, lift_policy=args.lift_policy, threads=args.threads
        )
    except RegularityViolationError as exc:
        _dump(exc.report.to_doc(), args.out)
        return EXIT_MATH
    try:
        rc = reconstruct(triple, threads=args.threads)
    except TripleValidationError as exc:
        _dump(exc.report.to_doc(), args.out)
        return EXIT_MATH
    report = verify_roundtrip(action, certificate, rc)
    _dump(report.to_doc(), args.out)
    return EXIT_OK if report.passed else EXIT_MATH


def cmd_validate_triple(args):
    triple, _ = _load_triple(args.triple)
    report = validate_triple(triple)
    _dump(report.to_doc(), args.out)
    return EXIT_OK if report.valid else EXIT_MATH


def cmd_bench(args):
    rows = []
    for w in args.threads_list:
        rows.extend(run_bench(args.family, args.orders, workers=(w,), repeats=args.repeats))
    exponents = growth_exponents(rows) if len(args.orders) > 1 and 1 in args.threads_list else None
    text = rows_to_csv(rows, exponents)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _int_list(text):
    return [int(v) for v in text.split(",") if v]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="equicompress",
        description="Compress simplicial complexes with regular finite group actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        if flags.get("complex"):
            p.add_argument("--complex", help="complex JSON file")
        if flags.get("action"):
            p.add_argument(
                "--action",
                required=flags["action"] == "required",
                help="action JSON file (generators, optional inline complex)",
            )
        if flags.get("triple"):
            p.add_argument("--triple", required=True, help="compressed triple JSON file")
        p.add_argument("--out", help="output file (default: stdout)")
        if flags.get("threads"):
            p.add_argument("--threads", type=int, default=1)
        if flags.get("policy"):
            p.add_argument("--lift-policy", choices=LIFT_POLICIES, default="lex-min")
        if flags.get("times"):
            p.add_argument("--times", type=int, default=2)
        p.set_defaults(fn=fn)
        return p

    add("check-regular", cmd_check_regular, complex=True, action="required")
    add("subdivide", cmd_subdivide, complex=True, action="optional", times=True)
    add("quotient", cmd_quotient, complex=True, action="required")
    add("compress", cmd_compress, complex=True, action="required", threads=True, policy=True)
    add("reconstruct", cmd_reconstruct, triple=True, threads=True)
    add("roundtrip", cmd_roundtrip, complex=True, action="required", threads=True, policy=True)
    add("validate-triple", cmd_validate_triple, triple=True)

    bench = sub.add_parser("bench")
    bench.add_argument("--family", choices=sorted(FAMILIES), default="cycle")
    bench.add_argument("--orders", type=_int_list, default=[2, 3, 4, 6, 8, 12])
    bench.add_argument(
        "--threads", dest="threads_list", type=_int_list, default=[1]
    )
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--out")
    bench.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EquicompressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
