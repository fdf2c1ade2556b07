"""Command-line surface: analyze datasets, generate series, simulate
processes, and print the expected-law reference tables.

Exit status contract: 0 = accept (or plain success), 2 = reject at the
chosen significance level, 1 = error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import law, report, sequences
from .errors import BenfordError, DomainError
from .gof import DigitCensus
from .ingest import ScanPolicy, census_from_table, census_from_text
from .simulate import (
    NoiseSpec,
    ProcessSpec,
    convergence_curve,
    curve_as_csv,
    curve_as_json,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REJECT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benford",
        description="Significant-digit law analysis: screening, generation, simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="screen a dataset against the first-digit law")
    p.add_argument("path", help="input file (.csv/.tsv are read as tables, else text)")
    p.add_argument("--column", action="append", help="table column to read (repeatable)")
    p.add_argument("--position", type=int, default=1, help="significant-digit position")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--level", type=int, choices=(5, 1), default=5,
                   help="significance level driving the exit status")
    p.add_argument("--separators", action="store_true",
                   help="treat comma-grouped digits (2,300) as one token")
    p.add_argument("--skip-shape", action="append", default=[], metavar="PATTERN",
                   help="regex for token shapes to exclude (repeatable)")

    p = sub.add_parser("generate", help="emit a mathematical series")
    p.add_argument("kind", nargs="?",
                   choices=("fibonacci", "primes", "power-alpha", "factorial",
                            "power-n", "pascal"))
    p.add_argument("--config", help="read the sequence spec from a config file")
    p.add_argument("--a1", type=int, default=1, help="fibonacci: first seed")
    p.add_argument("--a2", type=int, default=1, help="fibonacci: second seed")
    p.add_argument("--terms", type=int, help="fibonacci: number of terms")
    p.add_argument("--below", type=int, help="primes: exclusive upper bound")
    p.add_argument("--alpha", help="power-alpha: ratio > 1, e.g. 1007/1000 or 1.007")
    p.add_argument("--n", type=int, help="power-alpha/factorial/power-n: term count")
    p.add_argument("--k", type=int, help="power-n: exponent")
    p.add_argument("--rows", type=int, help="pascal: number of rows")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--census", action="store_true",
                   help="emit the first-digit census instead of the stream")
    p.add_argument("--values", action="store_true",
                   help="emit exact values instead of digits")

    p = sub.add_parser("simulate", help="run a random-process ensemble")
    p.add_argument("--kind", choices=("mult", "add"), default="mult")
    p.add_argument("--noise", default="lognormal:0,1",
                   help="FAMILY:PARAMS, e.g. lognormal:0,1 uniform:0.5,2 constant:10")
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--walkers", type=int, default=10000)
    p.add_argument("--initial", type=float, default=1.0)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("expected", help="print expected-law reference tables")
    p.add_argument("--table", choices=("probs", "moments", "tvd", "corr"),
                   default="probs")
    p.add_argument("--k", default="1", help="position or range, e.g. 3 or 1..7")
    p.add_argument("--base", type=int, default=10, help="base (probs, position 1 only)")
    p.add_argument("--max-j", type=int, default=5, help="corr: largest position")
    p.add_argument("--sample-size", type=int,
                   help="probs: also print expected counts for this sample size")
    return parser


def _parse_k_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _fmt(x: float) -> str:
    return f"{report.round12(x):.12g}"


def cmd_analyze(args: argparse.Namespace) -> int:
    policy = ScanPolicy(
        thousands_separators=args.separators,
        skip_patterns=tuple(args.skip_shape),
        columns=tuple(args.column) if args.column else None,
    )
    path = Path(args.path)
    data = path.read_bytes()
    suffix = path.suffix.lower()
    try:
        if suffix in (".csv", ".tsv"):
            census = census_from_table(
                data, fmt=suffix[1:], policy=policy,
                position=args.position, base=args.base,
            )
        else:
            census = census_from_text(
                data, policy=policy, position=args.position, base=args.base
            )
    except BenfordError as exc:
        raise type(exc)(f"{path}: {exc}") from exc
    if census.sample_size == 0:
        print(
            f"error: empty census: no usable numeric values in {path}"
            f" ({census.exclusions} excluded)",
            file=sys.stderr,
        )
        return EXIT_ERROR
    doc = report.build_report(
        census,
        input_descriptor=str(path),
        policy_description={
            "thousands_separators": policy.thousands_separators,
            "skip_patterns": list(policy.skip_patterns),
            "columns": list(policy.columns) if policy.columns else None,
        },
    )
    sys.stdout.write(report.render(doc, args.format))
    if doc.gof is None:
        return EXIT_OK
    return EXIT_OK if doc.gof.accepted(args.level) else EXIT_REJECT


def _sequence_spec(args: argparse.Namespace) -> sequences.SequenceSpec:
    if args.config:
        return sequences.SequenceSpec.from_config(Path(args.config).read_text())
    if not args.kind:
        raise DomainError("generate needs a sequence kind or --config FILE")
    kind = args.kind.replace("-", "_")
    params: dict = {}
    if kind == "fibonacci":
        if args.terms is None:
            raise DomainError("fibonacci requires --terms")
        params = {"a1": args.a1, "a2": args.a2, "terms": args.terms}
    elif kind == "primes":
        if args.below is None:
            raise DomainError("primes requires --below")
        params = {"below": args.below}
    elif kind == "power_alpha":
        if args.alpha is None or args.n is None:
            raise DomainError("power-alpha requires --alpha and --n")
        params = {"alpha": Fraction(args.alpha), "n": args.n}
    elif kind == "factorial":
        if args.n is None:
            raise DomainError("factorial requires --n")
        params = {"n": args.n}
    elif kind == "power_n":
        if args.k is None or args.n is None:
            raise DomainError("power-n requires --k and --n")
        params = {"k": args.k, "n": args.n}
    elif kind == "pascal":
        if args.rows is None:
            raise DomainError("pascal requires --rows")
        params = {"rows": args.rows}
    return sequences.SequenceSpec(kind=kind, params=params, base=args.base)


def cmd_generate(args: argparse.Namespace) -> int:
    spec = _sequence_spec(args)
    if args.census:
        census = DigitCensus.from_digits(spec.digit_stream(), 1, spec.base)
        print("digit,count")
        for digit, count in zip(census.support, census.counts):
            print(f"{digit},{count}")
        return EXIT_OK
    if args.values:
        for value in spec.value_stream():
            print(value)
        return EXIT_OK
    for digit in spec.digit_stream():
        print(digit)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    spec = ProcessSpec(
        kind="multiplicative" if args.kind == "mult" else "additive",
        noise=NoiseSpec.parse(args.noise),
        steps=args.steps,
        walkers=args.walkers,
        initial_value=args.initial,
        base=args.base,
        seed=args.seed,
    )
    curve = convergence_curve(spec)
    if args.format == "json":
        print(curve_as_json(spec, curve))
    else:
        sys.stdout.write(curve_as_csv(spec, curve))
    return EXIT_OK


def cmd_expected(args: argparse.Namespace) -> int:
    table = args.table
    if table == "probs":
        ks = _parse_k_range(args.k)
        if len(ks) != 1:
            raise DomainError("probs takes a single position")
        k = ks[0]
        if k == 1:
            dist = law.first_digit_distribution(args.base)
        else:
            if args.base != 10:
                raise DomainError("deep-position tables are base 10 only")
            dist = law.marginal_distribution(k)
        if args.sample_size:
            print("digit,probability,expected_count")
            for d, p in zip(dist.support, dist.probabilities):
                print(f"{d},{_fmt(p)},{_fmt(p * args.sample_size)}")
        else:
            print("digit,probability")
            for d, p in zip(dist.support, dist.probabilities):
                print(f"{d},{_fmt(p)}")
    elif table == "moments":
        print("k,mean,variance")
        for k in _parse_k_range(args.k):
            mean, variance = law.moments(k)
            print(f"{k},{_fmt(mean)},{_fmt(variance)}")
    elif table == "tvd":
        print("k,tvd_from_uniform")
        for k in _parse_k_range(args.k):
            print(f"{k},{_fmt(law.tvd_from_uniform(k))}")
    else:
        print("i,j,correlation")
        for i in range(1, args.max_j):
            for j in range(i + 1, args.max_j + 1):
                print(f"{i},{j},{_fmt(law.digit_correlation(i, j))}")
    return EXIT_OK


_COMMANDS = {
    "analyze": cmd_analyze,
    "generate": cmd_generate,
    "simulate": cmd_simulate,
    "expected": cmd_expected,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BenfordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
