"""Command line front end.

Subcommands: ``table`` renders a counting family, ``count`` evaluates
one pair count, ``sequence`` emits a sequence, ``verify`` drives the
identity suite and ``words`` lists matching lattice words.

Exit codes: 0 success, 1 usage or resource error, 2 verification
mismatch.  All values are printed as decimal strings; tables print with
the row index decreasing downward so they can be compared against
printed references directly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import dp, oracle, verify
from .core import Cell, CountMatrix, TableDims, row_trace

CAP_ENV_VAR = "TABLEPATHS_ORACLE_CAP"
FORMATS = ("csv", "json", "markdown")
TABLE_KINDS = ("d1", "d", "a", "h")
SEQUENCE_TARGETS = ("imn-fixed-m", "d1-bottom-row")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad usage, not argparse's 2
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Table rendering and parsing
# ---------------------------------------------------------------------------


def render_table_csv(matrix: CountMatrix) -> str:
    lines = ["s,t,value"]
    lines += [f"{s},{t},{v}" for s, t, v in matrix.entries()]
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str) -> CountMatrix:
    rows = [line.split(",") for line in text.strip().splitlines()[1:]]
    cells = {(int(s), int(t)): int(v) for s, t, v in rows}
    cols = max(s for s, _ in cells)
    height = max(t for _, t in cells)
    dims = TableDims(height, cols)
    columns = [[cells[(s, t)] for t in range(1, height + 1)]
               for s in range(1, cols + 1)]
    return CountMatrix(dims, columns)


def render_table_json(matrix: CountMatrix, kind: str) -> str:
    payload = {
        "dims": {"rows": matrix.dims.rows, "cols": matrix.dims.cols},
        "kind": kind,
        "entries": [[s, t, str(v)] for s, t, v in matrix.entries()],
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_table_json(text: str) -> CountMatrix:
    payload = json.loads(text)
    dims = TableDims(payload["dims"]["rows"], payload["dims"]["cols"])
    columns = [[0] * dims.rows for _ in range(dims.cols)]
    for s, t, v in payload["entries"]:
        columns[s - 1][t - 1] = int(v)
    return CountMatrix(dims, columns)


def render_table_markdown(
    matrix: CountMatrix, kind: str, footer: Optional[list[int]] = None
) -> str:
    # Triangular families leave the unreachable upper wedge blank, the
    # way the reference tables print them.
    blank_wedge = kind in ("d1", "a")
    cols = matrix.dims.cols
    lines = ["| t\\s | " + " | ".join(str(s) for s in range(1, cols + 1)) + " |"]
    lines.append("|" + " --- |" * (cols + 1))
    for t in range(matrix.dims.rows, 0, -1):
        cells = []
        for s in range(1, cols + 1):
            if blank_wedge and t > s:
                cells.append("")
            else:
                cells.append(str(matrix.get(s, t)))
        lines.append(f"| {t} | " + " | ".join(cells) + " |")
    if footer is not None:
        lines.append("| H(s,s) | " + " | ".join(str(v) for v in footer) + " |")
    return "\n".join(lines) + "\n"


def _build_table(kind: str, rows: int, cols: int) -> CountMatrix:
    dims = TableDims(rows, cols)
    if kind == "d1":
        return dp.di_table(dims, 1)
    if kind == "d":
        return dp.d_table(dims)
    if kind == "a":
        if rows != cols:
            raise UsageError("kind 'a' is a square family; use --rows == --cols")
        return dp.a_table(cols)
    if kind == "h":
        return dp.h_table(dims)
    raise UsageError(f"unknown table kind {kind!r}")


def _cmd_table(args) -> int:
    matrix = _build_table(args.kind, args.rows, args.cols)
    footer = None
    if args.hss_footer:
        if args.kind != "d1" or args.format != "markdown":
            raise UsageError("--hss-footer requires --kind d1 and markdown format")
        footer = dp.hss_values(TableDims(args.rows, args.cols))
    if args.format == "csv":
        out = render_table_csv(matrix)
    elif args.format == "json":
        out = render_table_json(matrix, args.kind)
    else:
        out = render_table_markdown(matrix, args.kind, footer)
    sys.stdout.write(out)
    return 0


def _cmd_count(args) -> int:
    dims = TableDims(args.rows, args.cols)
    count = dp.bounded_pair_count(
        dims, Cell(args.from_col, args.from_row), Cell(args.to_col, args.to_row)
    )
    sys.stdout.write(f"{count}\n")
    return 0


def _cmd_sequence(args) -> int:
    if args.target == "imn-fixed-m":
        values = dp.imn_sequence(args.rows, args.max_n)
    else:
        values = dp.d1_bottom_row(args.rows, args.max_n)
    if args.format == "csv":
        lines = ["n,value"] + [f"{n},{v}" for n, v in enumerate(values, start=1)]
        sys.stdout.write("\n".join(lines) + "\n")
    elif args.format == "json":
        payload = {
            "target": args.target,
            "rows": args.rows,
            "values": [[n, str(v)] for n, v in enumerate(values, start=1)],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(str(v) for v in values) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _render_verify_markdown(reports) -> str:
    lines = [
        "| identity | expected | cases | failures | verdict | first counterexample |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    for rep in reports:
        ce = rep.first_counterexample
        if ce is None:
            ce_text = "-"
        else:
            params = ",".join(f"{k}={v}" for k, v in ce.params)
            ce_text = f"{params}: lhs={ce.lhs} rhs={ce.rhs}"
        lines.append(
            f"| {rep.spec.identity} | {rep.spec.expected} | {rep.cases_checked}"
            f" | {rep.failures} | {rep.verdict} | {ce_text} |"
        )
    return "\n".join(lines) + "\n"


def _render_verify_csv(reports) -> str:
    lines = ["identity,expected,cases_checked,failures,verdict,counterexample"]
    for rep in reports:
        ce = rep.first_counterexample
        if ce is None:
            ce_text = ""
        else:
            params = " ".join(f"{k}={v}" for k, v in ce.params)
            ce_text = f"{params} lhs={ce.lhs} rhs={ce.rhs}"
        lines.append(
            f"{rep.spec.identity},{rep.spec.expected},{rep.cases_checked},"
            f"{rep.failures},{rep.verdict},{ce_text}"
        )
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    overrides = {}
    for axis, value in (
        ("m", args.max_m),
        ("n", args.max_n),
        ("s", args.max_s),
        ("y", args.max_y),
        ("k", args.max_k),
    ):
        if value is not None:
            overrides[axis] = value
    if args.identity == "all":
        specs = verify.default_suite(overrides)
    else:
        if args.identity not in verify.IDENTITY_IDS:
            raise UsageError(f"unknown identity id {args.identity!r}")
        specs = [verify.default_spec(args.identity, overrides)]
    reports, all_ok = verify.run_suite(specs)
    if args.format == "json":
        sys.stdout.write(verify.reports_to_json(reports) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_render_verify_csv(reports))
    else:
        sys.stdout.write(_render_verify_markdown(reports))
    return 0 if all_ok else 2


# ---------------------------------------------------------------------------
# Word listing
# ---------------------------------------------------------------------------


def format_trace(trace: Sequence[int]) -> str:
    """Digit string like 121 when unambiguous, comma-joined otherwise."""
    if all(0 <= r <= 9 for r in trace):
        return "".join(str(r) for r in trace)
    return ",".join(str(r) for r in trace)


def _resolve_cap(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from exc
    return oracle.DEFAULT_CAP


def _cmd_words(args) -> int:
    floor, ceiling = args.floor, args.ceiling
    if args.rows is not None:
        if floor is not None or ceiling is not None:
            raise UsageError("--rows conflicts with --floor/--ceiling")
        floor, ceiling = 1, args.rows
    length = args.length
    if length is None:
        if args.cols is None:
            raise UsageError("either --length or --cols is required")
        length = args.cols - 1
    start = args.start
    if start is None and (floor is None or ceiling is None):
        start = 1  # unbounded enumerations need an anchor row
    filt = oracle.WordFilter(
        alphabet=args.alphabet,
        start_row=start,
        floor=floor,
        ceiling=ceiling,
        end_row=args.end,
        net_displacement=args.net,
    )
    cap = _resolve_cap(args.cap)
    words = list(oracle.enumerate_words(length, filt, cap=cap))
    if args.format == "json":
        payload = {
            "words": [
                {
                    "letters": w.letters,
                    "start_row": w.start_row,
                    "trace": list(row_trace(w)),
                }
                for w in words
            ]
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0
    lines = []
    for w in words:
        letters = w.letters if w.letters else "ε"
        lines.append((letters, format_trace(row_trace(w))))
    if args.format == "csv":
        out = ["word,trace"] + [f"{a},{b}" for a, b in lines]
    else:
        out = [f"{a} {b}" for a, b in lines]
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="tablepaths", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="render one counting family")
    p_table.add_argument("--kind", choices=TABLE_KINDS, required=True)
    p_table.add_argument("-m", "--rows", type=int, required=True)
    p_table.add_argument("-n", "--cols", type=int, required=True)
    p_table.add_argument("--format", choices=FORMATS, default="markdown")
    p_table.add_argument(
        "--hss-footer",
        action="store_true",
        help="append the diagonal footer row (kind d1, markdown only)",
    )
    p_table.set_defaults(func=_cmd_table)

    p_count = sub.add_parser("count", help="count paths between two cells")
    p_count.add_argument("-m", "--rows", type=int, required=True)
    p_count.add_argument("-n", "--cols", type=int, required=True)
    p_count.add_argument("--from-col", type=int, required=True)
    p_count.add_argument("--from-row", type=int, required=True)
    p_count.add_argument("--to-col", type=int, required=True)
    p_count.add_argument("--to-row", type=int, required=True)
    p_count.set_defaults(func=_cmd_count)

    p_seq = sub.add_parser("sequence", help="emit a counting sequence")
    p_seq.add_argument("--target", choices=SEQUENCE_TARGETS, required=True)
    p_seq.add_argument("-m", "--rows", type=int, required=True)
    p_seq.add_argument("--max-n", type=int, required=True)
    p_seq.add_argument("--format", choices=("plain",) + FORMATS, default="plain")
    p_seq.set_defaults(func=_cmd_sequence)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--identity", default="all")
    p_verify.add_argument("--max-m", type=int)
    p_verify.add_argument("--max-n", type=int)
    p_verify.add_argument("--max-s", type=int)
    p_verify.add_argument("--max-y", type=int)
    p_verify.add_argument("--max-k", type=int)
    p_verify.add_argument("--format", choices=FORMATS, default="markdown")
    p_verify.set_defaults(func=_cmd_verify)

    p_words = sub.add_parser("words", help="list matching lattice words")
    p_words.add_argument("--length", type=int)
    p_words.add_argument("-m", "--rows", type=int, help="confine rows to [1, M]")
    p_words.add_argument(
        "-n", "--cols", type=int, help="implies --length = cols - 1"
    )
    p_words.add_argument("--start", type=int, help="single start row")
    p_words.add_argument("--end", type=int, help="required end row")
    p_words.add_argument("--net", type=int, help="required net rise")
    p_words.add_argument("--floor", type=int)
    p_words.add_argument("--ceiling", type=int)
    p_words.add_argument("--alphabet", choices=("urd", "ud"), default="urd")
    p_words.add_argument("--cap", type=int, help="enumeration cap override")
    p_words.add_argument("--format", choices=("plain",) + FORMATS, default="plain")
    p_words.set_defaults(func=_cmd_words)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except oracle.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
