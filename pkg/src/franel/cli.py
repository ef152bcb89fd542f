"""Command-line front end.

Every subcommand writes JSON lines to stdout (``sweep --csv`` writes CSV)
with exact rationals as ``num/den`` strings. Exit codes: 0 ok, 2 usage
error, 3 a sweep found an integrality violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Optional

from . import certificates
from .arith import DomainError, UsageError, format_rational, poly_denominator
from .bernoulli import bernoulli_numbers, bernoulli_polynomial, dedekind_sum
from .certificates import DISPLAYED_K3_CONSTANT, TheoremKind
from .integrals import IntegralSpec, franel_integral
from .lattice import convergence_report

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed integer list {text!r}") from None
    return values


def _positive_list(text: str) -> list[int]:
    values = _int_list(text)
    if any(v < 1 for v in values):
        raise UsageError(f"entries must be positive, got {text!r}")
    return values


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


# -- sweep machinery --------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    kind: TheoremKind
    max_entry: int
    tuple_length: int
    sample: Optional[int] = None
    seed: int = 0
    parallelism: int = 1
    dedup: bool = True

    def __post_init__(self):
        if self.tuple_length != self.kind.tuple_length:
            raise UsageError(
                f"{self.kind} needs --len {self.kind.tuple_length}, got {self.tuple_length}"
            )
        if self.max_entry < 1:
            raise UsageError(f"--max must be positive, got {self.max_entry}")
        if self.sample is not None and self.sample < 1:
            raise UsageError(f"--sample must be positive, got {self.sample}")
        if self.seed < 0:
            raise UsageError(f"--seed must be nonnegative, got {self.seed}")
        if self.parallelism < 1:
            raise UsageError(f"--parallelism must be positive, got {self.parallelism}")


def _permutation_count(tup) -> int:
    count = math.factorial(len(tup))
    for c in Counter(tup).values():
        count //= math.factorial(c)
    return count


def sweep_tuples(config: SweepConfig) -> list[tuple[tuple[int, ...], int]]:
    """Work list of ``(tuple, covered)`` pairs in lexicographic order.

    ``covered`` is how many raw tuples the entry stands for: permutations
    of a multiset when deduplicating, repeated draws when sampling.
    """
    entries = range(1, config.max_entry + 1)
    size = config.tuple_length
    if config.sample is None:
        if config.dedup:
            return [(t, _permutation_count(t)) for t in combinations_with_replacement(entries, size)]
        return [(t, 1) for t in product(entries, repeat=size)]
    rng = random.Random(config.seed)
    draws = Counter()
    for _ in range(config.sample):
        t = tuple(rng.randint(1, config.max_entry) for _ in range(size))
        draws[tuple(sorted(t)) if config.dedup else t] += 1
    return sorted(draws.items())


def evaluate_tuple(kind: TheoremKind, tup, timing: bool = False) -> dict:
    start = time.perf_counter()
    report = certificates.certificate(kind, tup)
    record = {
        "tuple": list(tup),
        "integral": format_rational(report.integral),
        "multiplier": format_rational(report.multiplier),
        "product": format_rational(report.product),
        "is_integer": report.is_integer,
        "constant": report.constant_part,
        "gcd_part": format_rational(Fraction(report.gcd_part_num, report.gcd_part_den)),
    }
    if kind.name == "general_even" and kind.k == 3:
        alt = DISPLAYED_K3_CONSTANT * Fraction(report.gcd_part_num, report.gcd_part_den)
        record["displayed_constant_integer"] = (alt * report.integral).denominator == 1
    if timing:
        record["ms"] = round((time.perf_counter() - start) * 1000, 3)
    return record


def _evaluate_task(task):
    kind, tup, timing = task
    return evaluate_tuple(kind, tup, timing)


def run_sweep(config: SweepConfig, out, csv_mode=False, timing=False, progress=False) -> int:
    work = sweep_tuples(config)
    tasks = [(config.kind, t, timing) for t, _ in work]
    if config.parallelism > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (config.parallelism * 8))
        pool = ProcessPoolExecutor(max_workers=config.parallelism)
        results = pool.map(_evaluate_task, tasks, chunksize=chunk)
    else:
        pool = None
        results = map(_evaluate_task, tasks)

    writer = None
    violations = []
    displayed_failures = 0
    checked = 0
    try:
        # pool.map yields in submission order, so output order is canonical
        for i, ((tup, covered), record) in enumerate(zip(work, results), 1):
            record["count"] = covered
            checked += covered
            if not record["is_integer"]:
                violations.append(list(tup))
            if record.get("displayed_constant_integer") is False:
                displayed_failures += 1
            if csv_mode:
                if writer is None:
                    writer = csv.DictWriter(out, fieldnames=list(record), lineterminator="\n")
                    writer.writeheader()
                row = {k: str(v).lower() if isinstance(v, bool) else v for k, v in record.items()}
                row["tuple"] = " ".join(map(str, tup))
                writer.writerow(row)
            else:
                _emit(record, out)
            if progress and i % 100 == 0:
                print(f"sweep: {i}/{len(work)} evaluated", file=sys.stderr)
    finally:
        if pool is not None:
            pool.shutdown()

    summary = {
        "summary": True,
        "theorem": str(config.kind),
        "checked": checked,
        "evaluated": len(work),
        "violations": len(violations),
        "violating_tuples": sorted(violations),
    }
    if config.kind.name == "general_even" and config.kind.k == 3:
        summary["displayed_constant"] = DISPLAYED_K3_CONSTANT
        summary["displayed_constant_failures"] = displayed_failures
    if csv_mode:
        out.write("# " + json.dumps(summary, separators=(",", ":")) + "\n")
    else:
        _emit(summary, out)
    return EXIT_VIOLATION if violations else EXIT_OK


# -- subcommands ------------------------------------------------------------


def _kind_from_args(args, length: Optional[int] = None) -> TheoremKind:
    if args.theorem == "mcintosh":
        return TheoremKind.mcintosh4()
    if args.theorem == "general":
        k = args.k
        if k is None:
            if length is None or length % 2:
                raise UsageError("general theorem needs --k or an even tuple length")
            k = length // 2
        return TheoremKind.general_even(k)
    k = 1 if args.k is None else args.k
    n = args.n
    if n is None:
        if length is None or length % 2:
            raise UsageError("higher theorem needs --n or an even tuple length")
        n = length // 2
    return TheoremKind.higher(k, n)


def _cmd_integral(args, out) -> int:
    spec = IntegralSpec(args.k, _positive_list(args.tuple))
    value = franel_integral(spec, method=args.method)
    _emit({"k": spec.index, "tuple": list(spec.multipliers), "value": format_rational(value)}, out)
    return EXIT_OK


def _cmd_certificate(args, out) -> int:
    tup = _positive_list(args.tuple)
    kind = _kind_from_args(args, len(tup))
    report = certificates.certificate(kind, tup)
    _emit(
        {
            "theorem": str(kind),
            "tuple": tup,
            "index": report.spec.index,
            "integral": format_rational(report.integral),
            "multiplier": format_rational(report.multiplier),
            "product": format_rational(report.product),
            "is_integer": report.is_integer,
            "constant_part": report.constant_part,
            "gcd_part_num": report.gcd_part_num,
            "gcd_part_den": report.gcd_part_den,
        },
        out,
    )
    return EXIT_OK


def _cmd_sweep(args, out) -> int:
    if args.seed is not None and args.sample is None:
        raise UsageError("--seed only applies together with --sample")
    config = SweepConfig(
        kind=_kind_from_args(args, args.len),
        max_entry=args.max,
        tuple_length=args.len,
        sample=args.sample,
        seed=args.seed or 0,
        parallelism=args.parallelism or os.cpu_count() or 1,
        dedup=not args.no_dedup,
    )
    return run_sweep(config, out, csv_mode=args.csv, timing=args.timing, progress=args.progress)


def _cmd_lattice(args, out) -> int:
    exp = args.exp
    if exp < 1 or exp % 2 == 0:
        raise UsageError(f"--exp must be an odd positive integer, got {exp}")
    spec = IntegralSpec(exp, _positive_list(args.tuple))
    for res in convergence_report(spec, _positive_list(args.bounds)):
        _emit(
            {
                "bound": res.bound,
                "truncated": format_rational(res.truncated),
                "truncated_float": float(res.truncated),
                "predicted_coefficient": format_rational(res.predicted_coefficient),
                "pi_power": res.pi_power,
                "float_discrepancy": res.float_discrepancy,
            },
            out,
        )
    return EXIT_OK


def _cmd_bernoulli(args, out) -> int:
    if args.numbers is not None:
        if args.numbers < 0:
            raise UsageError("--numbers must be nonnegative")
        _emit({"numbers": [format_rational(b) for b in bernoulli_numbers(args.numbers)]}, out)
    elif args.poly is not None:
        if args.poly < 0:
            raise UsageError("--poly must be nonnegative")
        poly = bernoulli_polynomial(args.poly)
        _emit({"n": args.poly, "coefficients": [format_rational(c) for c in poly.coeffs]}, out)
    elif args.denominator is not None:
        if args.denominator < 0:
            raise UsageError("--denominator must be nonnegative")
        d = poly_denominator(bernoulli_polynomial(args.denominator))
        _emit({"n": args.denominator, "denominator": d}, out)
    else:
        pair = _int_list(args.dedekind)
        if len(pair) != 2:
            raise UsageError("--dedekind expects h,k")
        h, k = pair
        _emit({"h": h, "k": k, "value": format_rational(dedekind_sum(h, k))}, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="franel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("integral", help="exact integral of a product of Bernoulli functions")
    p.add_argument("--k", type=int, required=True, help="Bernoulli index of every factor")
    p.add_argument("--tuple", required=True, help="comma-separated multipliers")
    p.add_argument("--method", choices=("kernel", "rational"), default="kernel")
    p.set_defaults(func=_cmd_integral)

    def theorem_args(p):
        p.add_argument("--theorem", choices=("mcintosh", "general", "higher"), required=True)
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int)

    p = sub.add_parser("certificate", help="integrality certificate for one tuple")
    theorem_args(p)
    p.add_argument("--tuple", required=True)
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("sweep", help="certificates over a range of tuples")
    theorem_args(p)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--parallelism", type=int)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--timing", action="store_true", help="add per-record milliseconds")
    p.add_argument("--progress", action="store_true", help="progress lines on stderr")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("lattice", help="truncated reciprocal lattice sums")
    p.add_argument("--tuple", required=True)
    p.add_argument("--exp", type=int, required=True)
    p.add_argument("--bounds", required=True)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("bernoulli", help="Bernoulli numbers, polynomials, Dedekind sums")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--numbers", type=int, metavar="N")
    group.add_argument("--poly", type=int, metavar="n")
    group.add_argument("--denominator", type=int, metavar="n")
    group.add_argument("--dedekind", metavar="h,k")
    p.set_defaults(func=_cmd_bernoulli)
    return parser


def run_command(argv, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, DomainError) as exc:
        print(f"franel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
