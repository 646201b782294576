"""
Command-line front end: ``python -m simulcores <command> ...``.

Exit codes: 0 on success, 1 when ``verify`` finds a mismatch, 2 for usage
errors and violated preconditions.
"""

import argparse
import csv
import json
import logging
import sys
from typing import IO, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from .abacus import CCoords, c_to_partition, c_to_x, partition_to_c, size_from_c
from .config import configure_logging, get_settings
from .counting import (
    average_size_formula,
    cat,
    count_cores_by_lattice,
    count_ssd,
    count_ssd3,
)
from .errors import BudgetExceededError, PreconditionError, SimulcoreError
from .extremal import construct_largest_selfconj_sss, largest_size_ab, largest_size_sss, largest_size_selfconj_sss
from .oracle import EnumerationBudget, enumerate_cores, oracle_stats, write_csv, write_jsonl
from .partitions import CoreSpec, Partition, parse_partition
from .schemas import (
    AverageResult,
    BijectionResult,
    CountResult,
    LargestResult,
    SequenceResult,
    as_decimal,
    as_rational,
)
from .sweeps import THEOREMS, SweepRanges, verify_sweep
from .zcoords import x_to_z

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "plain")

SEQUENCES: Dict[str, Callable[[int, int], int]] = {
    "catalan": lambda n, d: cat(n, n + d),
    "sss-count": lambda n, d: count_ssd(n, d),
    "ssd3-count": lambda n, d: count_ssd3(n, d),
    "sss-largest": lambda n, d: largest_size_sss(n),
    "selfconj-largest": lambda n, d: largest_size_selfconj_sss(n),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so run() can route the message."""

    def error(self, message: str) -> None:
        raise _UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.replace(" ", "").split(",") if token]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    common.add_argument("--threads", type=int, default=None, help="Worker processes (default: SIMULCORES_THREADS or 1)")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    common.add_argument(
        "--max-oracle-size", type=int, default=None,
        help="Ceiling on any enumeration bound (default: SIMULCORES_MAX_ORACLE_SIZE)",
    )

    parser = _Parser(prog="simulcores", description="Simultaneous core partitions: counts, extremes and bijections.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = commands.add_parser("count", parents=[common], help="Count the simultaneous cores of a set of moduli")
    count.add_argument("--moduli", type=_int_list, required=True, help="e.g. 3,4,5")
    count.add_argument("--method", choices=("oracle", "lattice"), default="oracle")

    enum = commands.add_parser("enumerate", parents=[common], help="List the simultaneous cores")
    enum.add_argument("--moduli", type=_int_list, required=True)
    enum.add_argument("--max-size", type=int, default=None, help="Explicit size bound; default is the Tripathi bound")

    largest = commands.add_parser("largest", parents=[common], help="Largest size of a core")
    largest.add_argument("--s", type=int, default=None, help="s for (s, s+1, s+2)")
    largest.add_argument("--selfconj", action="store_true", help="Restrict to self-conjugate cores and build the maximizer")
    largest.add_argument("--a", type=int, default=None)
    largest.add_argument("--b", type=int, default=None)

    average = commands.add_parser("average", parents=[common], help="Mean size of an (a, b)-core")
    average.add_argument("--a", type=int, required=True)
    average.add_argument("--b", type=int, required=True)
    average.add_argument("--check", action="store_true", help="Compare against the enumerated cores")

    biject = commands.add_parser("biject", parents=[common], help="Abacus coordinates of an a-core")
    biject.add_argument("--a", type=int, required=True)
    source = biject.add_mutually_exclusive_group(required=True)
    source.add_argument("--partition", type=parse_partition)
    source.add_argument("--c", type=_int_list)
    biject.add_argument("--b0", type=int, default=None, help="Also report z-coordinates for this modulus")

    verify = commands.add_parser("verify", parents=[common], help="Check the closed forms against brute force")
    verify.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    for name, field in SweepRanges.model_fields.items():
        verify.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=field.default, help=field.description)

    table = commands.add_parser("table", parents=[common], help="Print an integer sequence")
    table.add_argument("--sequence", choices=tuple(SEQUENCES), required=True)
    table.add_argument("--n", type=int, required=True, help="Number of terms")
    table.add_argument("--d", type=int, default=1, help="Step d for catalan, sss-count and ssd3-count")

    return parser


def _dump(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", exclude_none=True), separators=(",", ":"), sort_keys=True)


def _write_csv(stdout: IO[str], header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    writer = csv.writer(stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _csv_cell(value: object) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return "" if value is None else str(value)


def _emit(model: BaseModel, fmt: str, stdout: IO[str], plain: str) -> None:
    if fmt == "json":
        stdout.write(_dump(model) + "\n")
    elif fmt == "csv":
        data = model.model_dump(mode="json", exclude_none=True)
        _write_csv(stdout, list(data), [[_csv_cell(v) for v in data.values()]])
    else:
        stdout.write(plain + "\n")


def oracle_budget(spec: CoreSpec, max_size: Optional[int], ceiling: int) -> EnumerationBudget:
    """The enumeration budget for ``spec``, refused when it is larger than ``ceiling``."""
    budget = EnumerationBudget.explicit(max_size) if max_size is not None else EnumerationBudget.tripathi(spec)
    if budget.max_size > ceiling:
        raise BudgetExceededError(spec.moduli, budget.max_size, ceiling)
    return budget


def _cmd_count(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    spec = CoreSpec(moduli=tuple(args.moduli))
    if args.method == "lattice":
        count = count_cores_by_lattice(spec, workers=workers)
    else:
        count = len(enumerate_cores(spec, oracle_budget(spec, None, ceiling), workers=workers))
    result = CountResult(moduli=list(spec.moduli), method=args.method, count=as_decimal(count))
    _emit(result, args.format, stdout, result.count)
    return 0


def _cmd_enumerate(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    spec = CoreSpec(moduli=tuple(args.moduli))
    budget = oracle_budget(spec, args.max_size, ceiling)
    cores = enumerate_cores(spec, budget, workers=workers)
    if args.format == "json":
        write_jsonl(cores, stdout)
    elif args.format == "csv":
        write_csv(cores, stdout)
    else:
        for p in cores:
            stdout.write(f"{p}\n")
    return 0


def largest_result(s: Optional[int], selfconj: bool, a: Optional[int], b: Optional[int]) -> LargestResult:
    """Shared by the CLI and the HTTP route."""
    if s is not None:
        if selfconj:
            partition, size = construct_largest_selfconj_sss(s)
            return LargestResult(s=s, size=as_decimal(size), partition=partition, self_conjugate=True)
        size = largest_size_sss(s)
        if s % 2 == 0:
            # even s: the unique maximizer is self-conjugate
            partition, _ = construct_largest_selfconj_sss(s)
            return LargestResult(s=s, size=as_decimal(size), partition=partition, self_conjugate=False)
        return LargestResult(s=s, size=as_decimal(size), self_conjugate=False)
    if a is not None and b is not None:
        if selfconj:
            raise PreconditionError("selfconj applies only with s")
        return LargestResult(a=a, b=b, size=as_decimal(largest_size_ab(a, b)))
    raise PreconditionError("either s or both a and b are required")


def _cmd_largest(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    result = largest_result(args.s, args.selfconj, args.a, args.b)
    _emit(result, args.format, stdout, result.size)
    return 0


def _cmd_average(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    mean = average_size_formula(args.a, args.b)
    result = AverageResult(a=args.a, b=args.b, mean=as_rational(mean))
    if args.check:
        spec = CoreSpec.of(args.a, args.b)
        stats = oracle_stats(spec, oracle_budget(spec, None, ceiling), workers=workers)
        result.oracle_mean = as_rational(stats.mean)
        result.match = stats.mean == mean
    _emit(result, args.format, stdout, result.mean)
    return 0


def bijection_result(a: int, partition: Optional[Partition], c: Optional[List[int]], b0: Optional[int]) -> BijectionResult:
    """Shared by the CLI and the HTTP route."""
    if partition is not None:
        coords = partition_to_c(partition, a)
    elif c is not None:
        coords = CCoords(a=a, c=tuple(c))
        partition = c_to_partition(coords)
    else:
        raise PreconditionError("either a partition or c-coordinates are required")
    x = c_to_x(coords)
    z = list(x_to_z(x, b0).z) if b0 is not None else None
    return BijectionResult(
        a=a,
        partition=partition,
        c=list(coords.c),
        num2a=list(x.num2a),
        size=as_decimal(size_from_c(coords)),
        b0=b0,
        z=z,
    )


def _cmd_biject(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    result = bijection_result(args.a, args.partition, args.c, args.b0)
    _emit(result, args.format, stdout, ",".join(str(v) for v in result.c))
    return 0


def _cmd_verify(args: argparse.Namespace, stdout: IO[str], stderr: IO[str], workers: int, ceiling: int) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    ranges = SweepRanges(**{name: getattr(args, name) for name in SweepRanges.model_fields})
    report = verify_sweep(theorems, ranges, ceiling=ceiling, workers=workers)

    if args.format == "json":
        stdout.write(json.dumps(
            {"ok": report.ok, "rows": [row.model_dump() for row in report.rows]},
            separators=(",", ":"),
            sort_keys=True,
        ) + "\n")
    elif args.format == "csv":
        _write_csv(
            stdout,
            ["theorem", "params", "formula", "oracle", "match"],
            [[r.theorem, r.params, r.formula, r.oracle, "true" if r.match else "false"] for r in report.rows],
        )
    else:
        failed = sum(1 for row in report.rows if not row.match)
        stdout.write(f"{len(report.rows)} comparisons, {failed} mismatches\n")

    mismatch = report.first_mismatch
    if mismatch is not None:
        stderr.write(
            f"mismatch: {mismatch.theorem} {mismatch.params}: formula {mismatch.formula}, oracle {mismatch.oracle}\n"
        )
        return 1
    return 0


def _cmd_table(args: argparse.Namespace, stdout: IO[str], workers: int, ceiling: int) -> int:
    if args.n < 1:
        raise PreconditionError("n must be at least 1", f"got {args.n}")
    term = SEQUENCES[args.sequence]
    values = [term(n, args.d) for n in range(1, args.n + 1)]
    uses_d = args.sequence in ("catalan", "sss-count", "ssd3-count")
    result = SequenceResult(sequence=args.sequence, d=args.d if uses_d else None, values=[as_decimal(v) for v in values])
    if args.format == "csv":
        _write_csv(stdout, ["n", "value"], [[n, v] for n, v in enumerate(result.values, start=1)])
    else:
        _emit(result, args.format, stdout, ",".join(result.values))
    return 0


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    """
    Parse ``argv``, execute the command and write its result.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        stdout: Stream for results
        stderr: Stream for error messages

    Returns:
        The process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)

    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        stderr.write(f"{e}\n")
        return 2
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    try:
        settings = get_settings()
    except SimulcoreError as e:
        stderr.write(f"error: {e}\n")
        return 2
    configure_logging("DEBUG" if args.verbose else settings.log_level, settings.log_file)
    workers = args.threads if args.threads is not None else settings.threads
    ceiling = args.max_oracle_size if args.max_oracle_size is not None else settings.max_oracle_size
    logger.debug(f"Running {args.command} with {workers} worker(s), oracle ceiling {ceiling}")

    try:
        if workers < 1:
            raise PreconditionError("threads must be at least 1", f"got {workers}")
        if args.command == "verify":
            return _cmd_verify(args, stdout, stderr, workers, ceiling)
        handler = {
            "count": _cmd_count,
            "enumerate": _cmd_enumerate,
            "largest": _cmd_largest,
            "average": _cmd_average,
            "biject": _cmd_biject,
            "table": _cmd_table,
        }[args.command]
        return handler(args, stdout, workers, ceiling)
    except SimulcoreError as e:
        stderr.write(f"error: {e}\n")
        return 2
    except ValidationError as e:
        first = e.errors()[0]
        stderr.write(f"error: {first['msg']}\n")
        return 2


def main() -> int:
    return run(sys.argv[1:], sys.stdout, sys.stderr)
