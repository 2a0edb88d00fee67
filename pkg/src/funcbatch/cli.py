"""Command-line front end: counting, bound solvers, table emission, matrix I/O, verification."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from funcbatch import bounds, codecheck, counting
from funcbatch.gf2 import BitVec, GeneratorMatrix

EX_OK = 0
EX_FALSIFIED = 1
EX_UNDECIDED = 2
EX_USAGE = 64
EX_DATA = 65
EX_IO = 74

BUDGET_ENV_VAR = "FBC_BUDGET_SECONDS"


class UsageError(Exception):
    pass


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_matrix(text: str) -> GeneratorMatrix:
    """Parse the text matrix format: a 'k n' header, then k rows of n 0/1 digits.

    Lines starting with '#' and blank lines are skipped.
    """
    header: Optional[tuple[int, int]] = None
    rows: list[list[int]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if header is None:
            if len(parts) != 2:
                raise MatrixFormatError("header must be 'k n'", line_no)
            try:
                k, n = int(parts[0]), int(parts[1])
            except ValueError:
                raise MatrixFormatError("header must hold two integers", line_no) from None
            if k < 1 or n < 1:
                raise MatrixFormatError("k and n must be positive", line_no)
            header = (k, n)
            continue
        if len(rows) == header[0]:
            raise MatrixFormatError("unexpected extra row", line_no)
        if len(parts) != header[1]:
            raise MatrixFormatError(f"expected {header[1]} entries, got {len(parts)}", line_no)
        row = []
        for p in parts:
            if p not in ("0", "1"):
                raise MatrixFormatError(f"entries must be 0 or 1, got {p!r}", line_no)
            row.append(int(p))
        rows.append(row)
    if header is None:
        raise MatrixFormatError("missing 'k n' header")
    if len(rows) != header[0]:
        raise MatrixFormatError(f"expected {header[0]} rows, got {len(rows)}")
    try:
        return GeneratorMatrix.from_rows(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def format_matrix(matrix: GeneratorMatrix) -> str:
    lines = [f"{matrix.k} {matrix.n}"]
    for row in matrix.rows():
        lines.append(" ".join(str(b) for b in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CsvTable:
    """Comma-separated table with a header row and trailing '#' comment lines."""

    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    comments: tuple[str, ...] = ()


def render_csv(table: CsvTable) -> str:
    lines = [",".join(table.header)]
    for row in table.rows:
        lines.append(",".join(row))
    for comment in table.comments:
        lines.append(f"# {comment}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> CsvTable:
    header: Optional[tuple[str, ...]] = None
    rows: list[tuple[str, ...]] = []
    comments: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped[1:].strip())
            continue
        cells = tuple(stripped.split(","))
        if header is None:
            header = cells
        else:
            rows.append(cells)
    if header is None:
        raise ValueError("CSV is empty")
    return CsvTable(header=header, rows=tuple(rows), comments=tuple(comments))


def _cell_text(outcome: bounds.BoundOutcome) -> str:
    if outcome.vacuous:
        return "-"
    if outcome.clamped:
        return f"{outcome.min_n}*"
    return str(outcome.min_n)


def r2_table_csv(k_max: int = 7) -> CsvTable:
    rows = []
    for row in bounds.r2_comparison_table(k_max):
        rows.append(tuple(str(v) for v in (row.k, row.t, row.sqrt_min, row.exact_min, row.construction)))
    return CsvTable(header=("k", "t", "sqrt", "exact", "construction"), rows=tuple(rows))


def chain_table_csv() -> CsvTable:
    configs = bounds.DEFAULT_CHAIN_CONFIGS
    header = ("k", "baseline_t2") + tuple(f"chain_t{t}_r{r}" for (t, r) in configs)
    rows = []
    notes = []
    for row in bounds.chain_bound_table():
        cells = [str(row.k), str(row.baseline_min)]
        for (t, r), outcome in zip(configs, row.cells):
            cells.append(_cell_text(outcome))
            if outcome.clamped or outcome.vacuous:
                kind = "vacuous" if outcome.vacuous else "clamped"
                notes.append(
                    f"k={row.k} t={t} r={r}: raw {outcome.raw_min_n}, "
                    f"floor {outcome.applicability_floor}, {kind}"
                )
        rows.append(tuple(cells))
    notes.append("check: k=8 t=2 r=5 cell is exactly certified at 9 (not 10)")
    return CsvTable(header=header, rows=tuple(rows), comments=tuple(notes))


_COUNT_METHODS = {
    "direct": counting.labelling_count_direct,
    "rec": counting.labelling_count,
    "egf": counting.labelling_count_egf,
}


def _cmd_count(args: argparse.Namespace) -> int:
    try:
        value = _COUNT_METHODS[args.method](args.n, args.t, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return EX_OK


def _cmd_minn(args: argparse.Namespace) -> int:
    k, t, r = args.k, args.t, args.r
    try:
        if args.bound == bounds.EXACT:
            print(bounds.min_n_exact(k, t, r))
            return EX_OK
        if args.bound == bounds.SQRT:
            if r != 2:
                print(f"warning: sqrt bound assumes cap 2; ignoring --r {r}", file=sys.stderr)
            outcome = bounds.min_n_sqrt(k, t)
        elif args.bound == bounds.BASELINE:
            outcome = bounds.min_n_baseline(k, t)
        elif args.bound == bounds.PRODUCT:
            outcome = bounds.min_n_product(k, t, r)
        elif args.bound == bounds.AMGM:
            outcome = bounds.min_n_amgm(k, t, r)
        else:
            outcome = bounds.min_n_chain(k, t, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(_cell_text(outcome))
    if outcome.clamped or outcome.vacuous:
        print(f"floor={outcome.applicability_floor} raw={outcome.raw_min_n}")
    return EX_OK


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_table(args: argparse.Namespace) -> int:
    table = r2_table_csv() if args.which == 2 else chain_table_csv()
    _write_text(args.out, render_csv(table))
    return EX_OK


def _load_matrix(args: argparse.Namespace) -> GeneratorMatrix:
    if args.matrix is not None:
        with open(args.matrix, "r", encoding="utf-8") as handle:
            return parse_matrix(handle.read())
    name, _, num = args.construct.partition(":")
    try:
        k = int(num)
    except ValueError:
        raise UsageError("--construct expects simplex:K or double:K") from None
    try:
        if name == "simplex":
            return codecheck.simplex(k)
        if name == "double":
            return codecheck.double_simplex(k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown constructor {name!r}; use simplex:K or double:K")


def _format_query(word: int, k: int, pretty: bool) -> str:
    if not pretty:
        return str(word)
    return "".join(str(b) for b in BitVec(word, k).bits())


def _cmd_verify(args: argparse.Namespace) -> int:
    matrix = _load_matrix(args)
    budget_seconds = args.budget_seconds
    if budget_seconds is None:
        env = os.environ.get(BUDGET_ENV_VAR)
        if env:
            try:
                budget_seconds = float(env)
            except ValueError:
                raise UsageError(f"{BUDGET_ENV_VAR} must be a number, got {env!r}") from None
    try:
        verdict = codecheck.verify(
            matrix, args.t, args.r,
            deterministic=args.deterministic,
            jobs=args.jobs,
            budget_seconds=budget_seconds,
            budget_batches=args.budget_batches,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(verdict.status)
    if verdict.counterexample is not None:
        queries = (_format_query(w, matrix.k, args.pretty) for w in verdict.counterexample)
        print(" ".join(queries))
    print(
        f"checked {verdict.assignments_checked} batches in {verdict.wall_time:.3f}s",
        file=sys.stderr,
    )
    if verdict.status == codecheck.HOLDS:
        return EX_OK
    if verdict.status == codecheck.FAILS:
        return EX_FALSIFIED
    return EX_UNDECIDED


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.which == "simplex":
            matrix = codecheck.simplex(args.k)
        else:
            matrix = codecheck.double_simplex(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_text(args.out, format_matrix(matrix))
    return EX_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="funcbatch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="exact bounded-multiplicity labelling count")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--t", type=int, required=True)
    p_count.add_argument("--r", type=int, required=True)
    p_count.add_argument("--method", choices=sorted(_COUNT_METHODS), default="rec")
    p_count.set_defaults(func=_cmd_count)

    p_minn = sub.add_parser("minn", help="minimal length under a chosen lower bound")
    p_minn.add_argument("--k", type=int, required=True)
    p_minn.add_argument("--t", type=int, required=True)
    p_minn.add_argument("--r", type=int, default=2)
    p_minn.add_argument("--bound", choices=bounds.BOUND_IDS, required=True)
    p_minn.set_defaults(func=_cmd_minn)

    p_table = sub.add_parser("table", help="emit a bound comparison table as CSV")
    p_table.add_argument("--which", type=int, choices=(2, 3), required=True)
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="exhaustively check the disjoint-recovery property")
    source = p_verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--matrix", default=None, help="matrix file path")
    source.add_argument("--construct", default=None, help="simplex:K or double:K")
    p_verify.add_argument("--t", type=int, required=True)
    p_verify.add_argument("--r", type=int, required=True)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--budget-seconds", type=float, default=None)
    p_verify.add_argument("--budget-batches", type=int, default=None)
    p_verify.add_argument("--deterministic", action="store_true",
                          help="pure lex sweep; reports the least counterexample")
    p_verify.add_argument("--pretty", action="store_true",
                          help="print counterexample queries as bit strings")
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = sub.add_parser("construct", help="write a generator matrix file")
    p_construct.add_argument("--which", choices=("simplex", "double"), required=True)
    p_construct.add_argument("--k", type=int, required=True)
    p_construct.add_argument("--out", default=None)
    p_construct.set_defaults(func=_cmd_construct)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
