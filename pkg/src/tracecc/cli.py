"""Batch command line frontend.

Commands: build, verify-sweep, gauss-check, fibers. JSON is the machine
interface (written to --out, or to stdout when --out is omitted); CSV is
available for weight and fiber tables only. Exit codes: 0 all checks pass,
1 verification mismatch, 2 invalid parameters.

Reports are byte-identical across identical invocations once the volatile
fields (timestamp, timings) are excluded with --no-timestamp.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .ccc import ccc_json, extract_subcode_first, extract_subcode_second
from .codes import (
    build_defining_set_D,
    build_defining_set_E,
    build_trace_code,
    minimum_distance,
    trace_code_json,
    weight_distribution,
    weight_table_csv,
)
from .errors import (
    DegenerateSet,
    EvenCharacteristic,
    NotPrime,
    OddDegree,
    PredictionMismatch,
    ReducibleModulus,
    TraceCCError,
    UnsupportedDegree,
)
from .gfpm import make_field
from .sweep import SweepSpec, fiber_check, gauss_check, run_sweep

_PARAMETER_ERRORS = (
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    OddDegree,
    DegenerateSet,
    UnsupportedDegree,
    ValueError,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_PARAMS = 2


def _parse_modulus(text):
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse modulus {text!r}: {exc}") from None


def _emit(doc: dict, args, human_lines=None) -> None:
    """Write the JSON document to --out or stdout; human lines go wherever is free."""
    payload = json.dumps(doc, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
        for line in human_lines or []:
            print(line)
    else:
        if human_lines:
            for line in human_lines:
                print(line, file=sys.stderr)
        sys.stdout.write(payload)


def _stamp(doc: dict, args) -> dict:
    if not args.no_timestamp:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return doc


def _write_text(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_build(args) -> int:
    modulus = _parse_modulus(args.modulus)
    field = make_field(args.p, args.m, modulus)
    if args.construction == "first":
        if args.alpha is None:
            raise ValueError("--alpha is required for the first construction")
        ds = build_defining_set_D(field, args.alpha)
        code = build_trace_code(ds)
        sub = extract_subcode_first(code)
    else:
        if args.alpha is not None:
            raise ValueError("--alpha applies to the first construction only")
        ds = build_defining_set_E(field)
        code = build_trace_code(ds)
        which = "S" if args.construction == "second-S" else "complement"
        sub = extract_subcode_second(code, which)

    if args.format == "csv":
        _write_text(weight_table_csv(weight_distribution(code)), args)
        return EXIT_OK

    doc = {"command": "build"}
    _stamp(doc, args)
    doc["code"] = trace_code_json(code, emit_codewords=args.emit_codewords)
    doc["ccc"] = ccc_json(sub, emit_codewords=args.emit_codewords)
    report = sub.lfvc()
    lines = [
        f"construction   {sub.construction}"
        + (f" (alpha={sub.alpha})" if sub.alpha is not None else ""),
        f"field          {field!r}, modulus {','.join(str(c) for c in field.modulus)}",
        f"ambient code   [{code.length}, {code.dimension}] over GF({field.p}),"
        f" min distance {minimum_distance(code)}",
        f"ccc            n={sub.n} M={sub.M} d={sub.d} omega={sub.composition}",
        f"lfvc           denominator={report.denominator}"
        + (f" bound={report.bound}" if report.bound is not None else "")
        + f" verdict={report.verdict}",
    ]
    checks = doc["ccc"]["checks"]
    ok = all(v is not False for v in checks.values())
    lines.append(f"checks         {'all ok' if ok else 'FAILED: ' + str(checks)}")
    _emit(doc, args, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_verify_sweep(args) -> int:
    if args.format == "csv":
        raise ValueError("verify-sweep reports are JSON only")
    alphas = "all"
    if args.alphas != "all":
        alphas = tuple(int(part) for part in args.alphas.split(","))
    spec = SweepSpec(
        p_list=tuple(args.p),
        m_min=args.m[0],
        m_max=args.m[1],
        q_cap=args.q_cap,
        constructions=tuple(args.constructions),
        alphas=alphas,
    )
    report = run_sweep(spec)
    lines = []
    for inst in report.instances:
        if inst.status == "skip":
            lines.append(f"skip  {inst.label()}  ({inst.reason})")
        elif inst.status == "ok":
            lines.append(f"ok    {inst.label()}  ({inst.seconds:.3f}s)")
        else:
            failed = [k for k, v in inst.checks.items() if v is False]
            lines.append(f"FAIL  {inst.label()}  {failed}")
    summary = report.summary()
    lines.append(
        f"summary: pass={summary['pass']} fail={summary['fail']} skip={summary['skip']}"
    )
    doc = {"command": "verify-sweep"}
    _stamp(doc, args)
    doc.update(report.to_json_dict(include_timing=not args.no_timestamp))
    _emit(doc, args, lines)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_gauss_check(args) -> int:
    if args.format == "csv":
        raise ValueError("gauss-check reports are JSON only")
    field = make_field(args.p, args.m, _parse_modulus(args.modulus))
    result = gauss_check(field)
    doc = {"command": "gauss-check"}
    _stamp(doc, args)
    doc.update(result)
    lines = [
        f"G over {field!r}: deviation {result['gauss_fq']['deviation']:.3e}",
        f"G over GF({field.p}): deviation {result['gauss_fp']['deviation']:.3e}",
        f"quadratic sums ({result['quadratic']['mode']}, {result['quadratic']['count']}):"
        f" max deviation {result['quadratic']['max_deviation']:.3e}",
        "all within tolerance" if result["ok"] else "TOLERANCE EXCEEDED",
    ]
    _emit(doc, args, lines)
    return EXIT_OK if result["ok"] else EXIT_MISMATCH


def _cmd_fibers(args) -> int:
    field = make_field(args.p, args.m, _parse_modulus(args.modulus))
    result = fiber_check(field)
    if args.format == "csv":
        lines = ["kind,alpha,enumerated,predicted"]
        for row in result["rows"]:
            if "error" in row:
                raise PredictionMismatch(row["error"])
            lines.append(f"{row['kind']},{row['alpha']},{row['enumerated']},{row['predicted']}")
        _write_text("\n".join(lines) + "\n", args)
        return EXIT_OK if result["ok"] else EXIT_MISMATCH
    doc = {"command": "fibers"}
    _stamp(doc, args)
    doc.update(result)
    lines = [
        f"{row['kind']:<16} alpha={row['alpha']}  enumerated={row.get('enumerated')}"
        f"  predicted={row.get('predicted')}"
        for row in result["rows"]
    ]
    lines.append("all counts match" if result["ok"] else "COUNT MISMATCH")
    _emit(doc, args, lines)
    return EXIT_OK if result["ok"] else EXIT_MISMATCH


def _add_common(parser, with_modulus=True):
    parser.add_argument("--out", metavar="PATH", help="write the report to this file")
    parser.add_argument(
        "--format", choices=("json", "csv"), default="json", help="report format"
    )
    parser.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit volatile fields (timestamp, timings) for byte-identical output",
    )
    if with_modulus:
        parser.add_argument(
            "--modulus",
            metavar="C0,C1,...",
            help="modulus coefficients, constant term first (default: smallest irreducible)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracecc",
        description="Build and verify constant composition codes from trace codes over GF(p).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build one construction and report it")
    p_build.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    p_build.add_argument("--m", type=int, required=True, help="extension degree")
    p_build.add_argument(
        "--construction",
        choices=("first", "second-S", "second-complement"),
        required=True,
    )
    p_build.add_argument("--alpha", type=int, help="trace value (first construction)")
    p_build.add_argument(
        "--emit-codewords", action="store_true", help="include codeword digit strings"
    )
    _add_common(p_build)
    p_build.set_defaults(handler=_cmd_build)

    p_sweep = sub.add_parser("verify-sweep", help="verify closed forms over a parameter sweep")
    p_sweep.add_argument("--p", type=int, nargs="*", default=[3, 5, 7], help="primes to sweep")
    p_sweep.add_argument(
        "--m", type=int, nargs=2, default=[2, 5], metavar=("MIN", "MAX"),
        help="inclusive extension degree range",
    )
    p_sweep.add_argument("--q-cap", type=int, default=100_000, help="skip fields above this size")
    p_sweep.add_argument(
        "--constructions",
        nargs="*",
        choices=("first", "second-S", "second-complement"),
        default=["first", "second-S", "second-complement"],
    )
    p_sweep.add_argument(
        "--alphas", default="all", help="'all' or comma-separated residues, e.g. 0,1"
    )
    _add_common(p_sweep, with_modulus=False)
    p_sweep.set_defaults(handler=_cmd_verify_sweep)

    p_gauss = sub.add_parser("gauss-check", help="check Gauss and quadratic sum closed forms")
    p_gauss.add_argument("--p", type=int, required=True)
    p_gauss.add_argument("--m", type=int, required=True)
    _add_common(p_gauss)
    p_gauss.set_defaults(handler=_cmd_gauss_check)

    p_fibers = sub.add_parser("fibers", help="tabulate trace fiber counts vs closed forms")
    p_fibers.add_argument("--p", type=int, required=True)
    p_fibers.add_argument("--m", type=int, required=True)
    _add_common(p_fibers)
    p_fibers.set_defaults(handler=_cmd_fibers)
    return parser


def _error_doc(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _PARAMETER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        if getattr(args, "format", "json") == "json":
            sys.stdout.write(json.dumps(_error_doc(exc), indent=2) + "\n")
        return EXIT_BAD_PARAMS
    except TraceCCError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        if getattr(args, "format", "json") == "json":
            sys.stdout.write(json.dumps(_error_doc(exc), indent=2) + "\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
