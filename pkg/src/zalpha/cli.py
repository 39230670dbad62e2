"""Command-line surface: classify | digits | expand | attractor | coverage | audit.

All structured output is JSON with sorted keys, so identical inputs give
byte-identical bytes; human summaries go to stderr.  Coefficients on the
command line are ascending and comma-separated, matching the JSON schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .corering import IntPoly, MinPoly
from .digitset import DigitSet, build_digit_set
from .errors import (
    BudgetExhausted,
    GuardExceeded,
    InputError,
    PrecisionExhausted,
    SearchExhausted,
    ZalphaError,
)
from .expander import Expander, Status, trace_to_json
from .places import AlgebraicNumber, Kind, analyze, classify
from .rationals import format_decimal_up
from .verify import (
    audit_trace,
    coeff_box,
    coverage,
    integer_range,
    normalize_alphabet,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_SEARCH = 3
EXIT_BUDGET = 4
EXIT_AUDIT = 5


@dataclass(frozen=True)
class RunConfig:
    precision: int = 128
    max_steps: int = 10_000
    budget: int = 32
    seed_box: int = 20
    tolerance: Fraction = Fraction(1, 10**9)
    out: str | None = None

    def __post_init__(self):
        if self.precision <= 0 or self.max_steps <= 0 or self.budget <= 0:
            raise InputError("precision, max-steps and budget must be positive")
        if not 0 < self.tolerance <= Fraction(1, 10**6):
            raise InputError("tolerance must be positive and at most 1e-6")


def _parse_tolerance(text: str) -> Fraction:
    try:
        if "/" in text:
            return Fraction(text)
        from decimal import Decimal

        return Fraction(Decimal(text))
    except Exception as exc:  # noqa: BLE001 - normalized to InputError
        raise InputError(f"cannot parse tolerance {text!r}") from exc


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse coefficient list {text!r}") from exc


def _emit(obj: dict, out: str | None) -> None:
    payload = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _config(args) -> RunConfig:
    return RunConfig(
        precision=args.precision,
        max_steps=args.max_steps,
        budget=args.budget,
        seed_box=args.seed_box,
        tolerance=_parse_tolerance(args.tolerance),
        out=args.out,
    )


def _load_digits(args, a: AlgebraicNumber, cfg: RunConfig) -> DigitSet:
    if args.digits_file:
        with open(args.digits_file) as fh:
            return DigitSet.from_json(json.load(fh), a)
    return build_digit_set(a, budget=cfg.budget)


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    cls = classify(a)
    _emit(cls.to_json(), cfg.out)
    return EXIT_OK if cls.kind != Kind.SOME_INSIDE else EXIT_NEGATIVE


def cmd_digits(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    if classify(a).kind == Kind.SOME_INSIDE:
        print("alpha has a conjugate inside the unit circle; no digit set",
              file=sys.stderr)
        return EXIT_NEGATIVE
    F = build_digit_set(a, budget=cfg.budget)
    _emit(F.to_json(), cfg.out)
    bound = 2**m.degree * abs(m.a0)
    print(
        f"Card(F) = {len(F)}  bound = {bound}  c = {format_decimal_up(F.c, 12)}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_expand(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    if classify(a).kind == Kind.SOME_INSIDE:
        print("alpha has a conjugate inside the unit circle", file=sys.stderr)
        return EXIT_NEGATIVE
    beta = IntPoly(_parse_coeffs(args.beta))
    F = _load_digits(args, a, cfg)
    ex = Expander(F, a)
    trace = ex.expand(beta, max_steps=cfg.max_steps, audit=True)
    recomposed = ex.recomposition_holds(trace)
    report = audit_trace(trace, F, a, cfg.tolerance)
    _emit(
        trace_to_json(trace, F, recomposed, report.entries, report.passed),
        cfg.out,
    )
    print(
        f"status = {trace.status.value}  digits = {len(trace.digits_out)}  "
        f"recomposition = {'exact' if recomposed else 'BROKEN'}  "
        f"audit = {'pass' if report.passed else 'FAIL'}",
        file=sys.stderr,
    )
    if trace.status is Status.BUDGET:
        return EXIT_BUDGET
    if not recomposed or not report.passed:
        return EXIT_AUDIT
    return EXIT_OK


def cmd_attractor(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    if classify(a).kind == Kind.SOME_INSIDE:
        print("alpha has a conjugate inside the unit circle", file=sys.stderr)
        return EXIT_NEGATIVE
    F = _load_digits(args, a, cfg)
    ex = Expander(F, a)
    A = ex.attractor(seed_box=cfg.seed_box, max_steps=cfg.max_steps)
    _emit(A.to_json(), cfg.out)
    print(
        f"|A| = {len(A.states)}  cycles = {len(A.cycles)}  "
        f"periods = {[len(orbit) for orbit in A.cycles]}  "
        f"budget_seeds = {len(A.budget_seeds)}",
        file=sys.stderr,
    )
    return EXIT_BUDGET if A.budget_seeds else EXIT_OK


def cmd_coverage(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    if args.alphabet:
        alphabet: list = [int(t) for t in args.alphabet.split(",")]
    elif args.digits_file:
        with open(args.digits_file) as fh:
            alphabet = list(normalize_alphabet(DigitSet.from_json(json.load(fh), a), m))
    else:
        alphabet = list(normalize_alphabet(build_digit_set(a, cfg.budget), m))
    alphabet = normalize_alphabet(alphabet, m)
    if args.include_attractor:
        F = _load_digits(args, a, cfg)
        A = Expander(F, a).attractor(cfg.seed_box, cfg.max_steps)
        alphabet.extend(IntPoly(s) for s in A.states)
    if args.ints:
        lo, hi = (int(t) for t in args.ints.split(":"))
        region = integer_range(lo, hi)
    else:
        region = coeff_box(m, args.box)
    report = coverage(alphabet, a, region, args.word_len)
    _emit(report.to_json(), cfg.out)
    print(
        f"covered = {report.covered}  misses = {len(report.misses)}",
        file=sys.stderr,
    )
    return EXIT_OK if report.covered else EXIT_NEGATIVE


def cmd_audit(args) -> int:
    cfg = _config(args)
    m = MinPoly(_parse_coeffs(args.minpoly))
    a = analyze(m, cfg.precision)
    F = _load_digits(args, a, cfg)
    with open(args.trace_file) as fh:
        obj = json.load(fh)
    beta0 = IntPoly(tuple(int(c) for c in obj["beta0"]))
    digit_ids = [int(d) for d in obj["digits"]]
    tail = IntPoly(tuple(int(c) for c in obj["tail"]))
    trace = _replay(beta0, digit_ids, tail, F, a, m)
    ex = Expander(F, a)
    recomposed = ex.recomposition_holds(trace)
    report = audit_trace(trace, F, a, cfg.tolerance)
    _emit(
        {
            "recomposition_exact": recomposed,
            "audit": report.to_json(),
        },
        cfg.out,
    )
    return EXIT_OK if (recomposed and report.passed) else EXIT_NEGATIVE


def _replay(beta0, digit_ids, tail, F: DigitSet, a, m):
    """Rebuild per-step states of a stored word for re-auditing."""
    from .corering import div_by_alpha
    from .expander import ExpansionTrace, TraceStep

    steps = []
    beta = beta0
    for d in digit_ids:
        steps.append(TraceStep(beta, d, None))
        beta = div_by_alpha(beta - F.digits[d].rep, m)
    steps.append(TraceStep(beta, None, None))
    status = Status.ZERO if tail.is_zero else Status.CYCLE
    return ExpansionTrace(
        beta0, tuple(steps), status, tuple(digit_ids), tail, None, None
    )


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zalpha",
        description="Exact digit systems over Z[alpha]: classification, "
        "Lemma-style digit sets, height-reducing expansions, and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--minpoly", required=True,
                       help="ascending integer coefficients, e.g. '5,-6,5'")
        p.add_argument("--precision", type=int, default=128)
        p.add_argument("--max-steps", type=int, default=10_000, dest="max_steps")
        p.add_argument("--budget", type=int, default=32)
        p.add_argument("--seed-box", type=int, default=20, dest="seed_box")
        p.add_argument("--tolerance", default="0.000000001")
        p.add_argument("--out", default=None)
        p.add_argument("--digits-file", default=None, dest="digits_file")

    p = sub.add_parser("classify", help="decide the conjugate trichotomy")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("digits", help="build the digit set")
    common(p)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("expand", help="expand beta over the digit set")
    common(p)
    p.add_argument("--beta", required=True,
                   help="ascending integer coefficients of beta")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("attractor", help="collect expansion cycles from a seed box")
    common(p)
    p.set_defaults(func=cmd_attractor)

    p = sub.add_parser("coverage", help="BFS word-coverage oracle")
    common(p)
    p.add_argument("--alphabet", default=None,
                   help="comma-separated integer digits, e.g. '0,1,-1'")
    p.add_argument("--include-attractor", action="store_true",
                   dest="include_attractor")
    p.add_argument("--box", type=int, default=4,
                   help="canonical coefficient box radius for the region")
    p.add_argument("--ints", default=None,
                   help="integer region lo:hi instead of a box")
    p.add_argument("--word-len", type=int, default=32, dest="word_len")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("audit", help="re-audit a stored trace file")
    common(p)
    p.add_argument("--trace-file", required=True, dest="trace_file")
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ZalphaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
