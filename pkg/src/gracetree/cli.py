"""Command-line interface: label, invert, verify, oracle-compare, bench.

Exit status contract, stable for scripting: 0 success/pass, 1 verification
failure, 2 usage or input error, 3 capacity overflow, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from contextlib import contextmanager

from .errors import (
    CapacityError,
    DegreeSequenceError,
    InvalidVertexError,
    LabelRangeError,
    SearchCapError,
)
from .inverse import DecodeState, invert_label, trace_inversion
from .labelling import label_all
from .shape import TreeShape, build_shape, format_vertex, parse_degree_sequence
from .verification import (
    auxiliary_bitmap_bytes,
    brute_force_graceful,
    canonical_path_labelling,
    verify_graceful,
    verify_with_weak_alpha,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_IO = 4

PATH_ORACLE_MAX_VERTICES = 64


def _shape_from(args: argparse.Namespace) -> TreeShape:
    if args.degrees is not None and args.degrees_flag is not None:
        raise DegreeSequenceError(
            "degree sequence given both positionally and with --degrees"
        )
    text = args.degrees if args.degrees is not None else args.degrees_flag
    if text is None:
        raise DegreeSequenceError(
            "no degree sequence given (pass it positionally or with --degrees)"
        )
    return build_shape(parse_degree_sequence(text))


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _fmt_tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _print_counterexamples(report, limit: int = 10) -> None:
    for ce in report.counterexamples[:limit]:
        print(f"  counterexample: {ce.kind} at {format_vertex(ce.vertex)}, value {ce.value}")
    hidden = len(report.counterexamples) - limit
    if hidden > 0:
        print(f"  ... and {hidden} more")


def _write_table(shape: TreeShape, out) -> None:
    deepest = tuple(k - 1 for k in shape.degrees)
    vw = max(len("vertex"), len(format_vertex(deepest)))
    lw = max(len("label"), len(str(shape.edge_count)))
    rw = max(len("level"), len(str(shape.levels)))
    pw = max(len("parent_label"), lw)
    ew = max(len("edge_label"), lw)
    out.write(
        f"{'vertex':<{vw}}  {'level':>{rw}}  {'label':>{lw}}  "
        f"{'parent_label':>{pw}}  {'edge_label':>{ew}}\n"
    )
    for rec in label_all(shape):
        parent = "-" if rec.parent_label is None else str(rec.parent_label)
        edge = "-" if rec.edge_label is None else str(rec.edge_label)
        out.write(
            f"{format_vertex(rec.vertex):<{vw}}  {len(rec.vertex) + 1:>{rw}}  "
            f"{rec.label:>{lw}}  {parent:>{pw}}  {edge:>{ew}}\n"
        )


def _write_csv(shape: TreeShape, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["vertex", "level", "label", "parent_label", "edge_label"])
    for rec in label_all(shape):
        writer.writerow(
            [
                format_vertex(rec.vertex),
                len(rec.vertex) + 1,
                rec.label,
                "" if rec.parent_label is None else rec.parent_label,
                "" if rec.edge_label is None else rec.edge_label,
            ]
        )


def _write_json(shape: TreeShape, out) -> None:
    # Records are written one by one so huge trees never materialise.
    out.write(
        '{"degree_sequence": %s, "level_sizes": %s, '
        '"vertex_count": %d, "edge_count": %d, "records": ['
        % (
            json.dumps(list(shape.degrees)),
            json.dumps(list(shape.level_sizes)),
            shape.vertex_count,
            shape.edge_count,
        )
    )
    first = True
    for rec in label_all(shape):
        out.write("\n" if first else ",\n")
        first = False
        out.write(
            json.dumps(
                {
                    "vertex": format_vertex(rec.vertex),
                    "level": len(rec.vertex) + 1,
                    "label": rec.label,
                    "parent_label": rec.parent_label,
                    "edge_label": rec.edge_label,
                }
            )
        )
    out.write("\n]}\n")


def _write_dot(shape: TreeShape, out) -> None:
    out.write("digraph labelled_tree {\n")
    for rec in label_all(shape):
        name = format_vertex(rec.vertex)
        out.write(f'  "{name}" [label="{rec.label}"];\n')
        if rec.parent_label is not None:
            parent_name = format_vertex(rec.vertex[:-1])
            out.write(f'  "{parent_name}" -> "{name}" [label="{rec.edge_label}"];\n')
    out.write("}\n")


_WRITERS = {
    "table": _write_table,
    "csv": _write_csv,
    "json": _write_json,
    "dot": _write_dot,
}


def cmd_label(args: argparse.Namespace) -> int:
    shape = _shape_from(args)
    if args.verify_only:
        report = verify_graceful(shape, label_all(shape))
        print(f"streamed {shape.vertex_count} vertices, {shape.edge_count} edges")
        print(f"graceful: {'pass' if report.passed else 'FAIL'}")
        if not report.passed:
            _print_counterexamples(report)
            return EXIT_VERIFY_FAILED
        return EXIT_OK
    with _open_out(args.out) as out:
        _WRITERS[args.format](shape, out)
    return EXIT_OK


def _describe_state(state: DecodeState) -> str:
    if state.chain == "root":
        return "level 1: label 0 is the root"
    digits = format_vertex(state.digits)
    rem = state.even_remainder if state.chain == "even" else state.odd_remainder
    status = "resolved" if state.found else f"remainder {rem}"
    return f"level {state.level} [{state.chain} chain] digits {digits}: {status}"


def cmd_invert(args: argparse.Namespace) -> int:
    shape = _shape_from(args)
    if args.trace:
        states = trace_inversion(shape, args.label)
        for state in states:
            print(_describe_state(state))
        final = states[-1]
        print(f"{format_vertex(final.digits)} level {final.level}")
    else:
        vertex = invert_label(shape, args.label)
        print(f"{format_vertex(vertex)} level {len(vertex) + 1}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    shape = _shape_from(args)
    report, weak = verify_with_weak_alpha(shape, label_all(shape))
    print(f"degree sequence: {_fmt_tuple(shape.degrees)}")
    print(f"level sizes:     {_fmt_tuple(shape.level_sizes)}")
    print(f"vertices: {shape.vertex_count}  edges: {shape.edge_count}")
    print(f"vertex labels distinct:        {'yes' if report.vertex_labels_distinct else 'NO'}")
    print(f"vertex labels within range:    {'yes' if report.labels_in_range else 'NO'}")
    print(f"edge labels exactly 1..|E|:    {'yes' if report.edge_label_multiset_complete else 'NO'}")
    if not report.passed:
        _print_counterexamples(report)
        print("result: FAIL")
        return EXIT_VERIFY_FAILED
    assert weak is not None
    if weak.feasible_k_range is None:
        print("weak separator interval: empty")
    else:
        lo, hi = weak.feasible_k_range
        print(f"weak separator interval: [{lo}, {hi}]")
    if weak.claimed_k is not None:
        print(f"second-level subtree size {weak.claimed_k} lies in the interval")
    print(f"strict separator feasible: {'yes' if weak.strict_alpha_feasible else 'no'}")
    print("result: PASS")
    return EXIT_OK


def cmd_oracle_compare(args: argparse.Namespace) -> int:
    shape = _shape_from(args)
    n = shape.vertex_count
    is_path = all(k == 1 for k in shape.degrees)
    ran_any = False
    failures = 0
    if is_path and n <= PATH_ORACLE_MAX_VERTICES:
        ran_any = True
        closed = [rec.label for rec in label_all(shape)]
        zigzag = canonical_path_labelling(n)
        if closed == zigzag:
            print(f"path oracle: exact match across {n} labels")
        else:
            failures += 1
            print(f"path oracle: MISMATCH (closed form {closed}, zig-zag {zigzag})")
    if n <= args.cap:
        ran_any = True
        report = verify_graceful(shape, label_all(shape))
        print(f"closed form: {'graceful' if report.passed else 'NOT graceful'}")
        if not report.passed:
            failures += 1
            _print_counterexamples(report)
        found = brute_force_graceful(shape, cap=args.cap)
        if found is None:
            failures += 1
            print("search oracle: exhausted without a graceful labelling")
        else:
            found_report = verify_graceful(shape, found.records())
            if not found_report.passed:
                failures += 1
                print("search oracle: produced an invalid labelling")
                _print_counterexamples(found_report)
            elif all(found.label(rec.vertex) == rec.label for rec in label_all(shape)):
                print("search oracle: found the same labelling")
            else:
                print("search oracle: found a different valid labelling")
    if not ran_any:
        print(
            f"error: {n} vertices exceeds the search cap ({args.cap}) "
            "and the shape is not a path of at most "
            f"{PATH_ORACLE_MAX_VERTICES} vertices",
            file=sys.stderr,
        )
        return EXIT_USAGE
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        print("error: --reps must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    shape = _shape_from(args)
    times = []
    for _ in range(args.reps):
        start = time.perf_counter()
        report = verify_graceful(shape, label_all(shape))
        times.append(time.perf_counter() - start)
        if not report.passed:
            print("verification FAILED during bench", file=sys.stderr)
            _print_counterexamples(report)
            return EXIT_VERIFY_FAILED
    best = min(times)
    mean = sum(times) / len(times)
    print(f"vertices: {shape.vertex_count}  edges: {shape.edge_count}  reps: {args.reps}")
    print(f"per pass: best {best:.6f} s, mean {mean:.6f} s")
    print(f"throughput: {shape.vertex_count / best:.0f} vertices/s")
    print(f"auxiliary bitmap memory: {auxiliary_bitmap_bytes(shape)} bytes")
    return EXIT_OK


def _add_degrees_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "degrees",
        nargs="?",
        default=None,
        help='comma-separated daughter degrees, e.g. "2,3,4"; empty for the single vertex',
    )
    parser.add_argument(
        "--degrees",
        dest="degrees_flag",
        default=None,
        metavar="TEXT",
        help="alternative to the positional degree sequence",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gracetree",
        description=(
            "Graceful labelling of rooted symmetric trees: closed-form labels, "
            "label decoding, and streaming verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="emit every vertex record in breadth-first order")
    _add_degrees_arguments(p)
    p.add_argument("--format", choices=sorted(_WRITERS), default="table")
    p.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    p.add_argument(
        "--verify-only",
        action="store_true",
        help="stream into the verifier without writing records",
    )
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("invert", help="decode a label back to its vertex")
    _add_degrees_arguments(p)
    p.add_argument("label", type=int, help="label to decode")
    p.add_argument("--trace", action="store_true", help="print every decoder step")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("verify", help="check gracefulness and separator feasibility")
    _add_degrees_arguments(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "oracle-compare",
        help="cross-check the closed form against independent oracles",
    )
    _add_degrees_arguments(p)
    p.add_argument("--cap", type=int, default=14, help="search oracle vertex cap")
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("bench", help="time a full labelling + verification pass")
    _add_degrees_arguments(p)
    p.add_argument("--reps", type=int, default=1, help="repetitions (>= 1)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (DegreeSequenceError, LabelRangeError, SearchCapError, InvalidVertexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
