"""Command-line front door.

Subcommands map one-to-one onto the library surface: ratio comparison with
witnesses, integral multiples, fourth proportionals, products, quotients,
powers, embedding checks, and law-suite runs.

Exit codes are a total function of the outcome: 0 success, 1 domain error
(bad operands for the operation), 2 honest indecision (Unknown verdicts,
comparisons undecided at the precision policy), 3 usage errors.  Results go
to stdout, diagnostics to stderr, and domain errors never dump a stack.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import hom, laws, power, ratio
from .embed import (
    ApproxPolicy,
    check_homomorphism,
    embedding_from_json,
    embedding_to_json,
    fourth_proportional,
)
from .core import multiple
from .errors import MagnitudeError, NotAboveOneError, UndecidedError
from .models import (
    PosRat,
    PosRealValue,
    model_by_id,
    parse_element,
    real_from_rat,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3

PRECISION_ENV = "MAGNITUDES_PRECISION"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 30
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}")
    if value < 0:
        raise _UsageError(f"{PRECISION_ENV} must be >= 0")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="magnitudes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, model_default="rat"):
        p.add_argument("--model", default=model_default, choices=["nat", "rat", "real"])
        p.add_argument("-p", "--precision", type=int, default=None)
        p.add_argument("--format", default="text", choices=["text", "json"])

    p_ratio = sub.add_parser("ratio", help="compare two ratios")
    ratio_sub = p_ratio.add_subparsers(dest="ratio_command", required=True)
    p_cmp = ratio_sub.add_parser("cmp", help="ratio comparison with witness")
    p_cmp.add_argument("values", nargs="+", help="A B A2 B2, or two a/b ratio literals")
    p_cmp.add_argument("--model2", default=None, choices=["nat", "rat", "real"])
    p_cmp.add_argument("--fuel", type=int, default=64)
    add_common(p_cmp)

    p_multiple = sub.add_parser("multiple", help="n-fold sum of an element")
    p_multiple.add_argument("n")
    p_multiple.add_argument("a")
    add_common(p_multiple)

    p_fourth = sub.add_parser("fourth", help="fourth proportional to a, b, a'")
    p_fourth.add_argument("a")
    p_fourth.add_argument("b")
    p_fourth.add_argument("aprime")
    add_common(p_fourth)

    p_mul = sub.add_parser("mul", help="product a * b")
    p_mul.add_argument("a")
    p_mul.add_argument("b")
    add_common(p_mul)

    p_quot = sub.add_parser("quot", help="quotient b / a")
    p_quot.add_argument("b")
    p_quot.add_argument("a")
    add_common(p_quot)

    p_pow = sub.add_parser("pow", help="x^y for x > 1")
    p_pow.add_argument("x")
    p_pow.add_argument("y")
    add_common(p_pow, model_default="real")

    p_embed = sub.add_parser("embed-check", help="verify a serialized embedding")
    p_embed.add_argument("tree", help="embedding as JSON")
    p_embed.add_argument("--samples", type=int, default=100)
    p_embed.add_argument("--seed", type=int, default=0)
    add_common(p_embed)

    p_laws = sub.add_parser("laws", help="run a registered law set")
    laws_sub = p_laws.add_subparsers(dest="laws_command", required=True)
    p_run = laws_sub.add_parser("run", help="run one law set")
    p_run.add_argument("law_set")
    p_run.add_argument("--trials", type=int, default=100)
    p_run.add_argument("--seed", type=int, default=0)
    add_common(p_run)
    laws_sub.add_parser("list", help="list registered laws")

    return parser


def _real_payload(x: PosRealValue, p: int) -> dict:
    iv = x.approx(p)
    digits = max(1, p * 30103 // 100000)
    return {
        "mid": f"{iv.midpoint().decimal(digits)} ± 2^-{p}",
        "precision": p,
        "lo": str(iv.lo),
        "hi": str(iv.hi),
    }


def _emit_element(x, p: int, fmt: str, out) -> None:
    if isinstance(x, PosRealValue):
        payload = _real_payload(x, p)
        if fmt == "json":
            print(json.dumps({"result": payload}, sort_keys=True), file=out)
        else:
            print(payload["mid"], file=out)
    else:
        if fmt == "json":
            print(json.dumps({"result": str(x)}, sort_keys=True), file=out)
        else:
            print(str(x), file=out)


def _parse_ratio_args(args) -> tuple:
    model1 = model_by_id(args.model)
    model2 = model_by_id(args.model2) if args.model2 else model1
    vals = args.values
    if len(vals) == 4:
        a = parse_element(model1, vals[0])
        b = parse_element(model1, vals[1])
        a2 = parse_element(model2, vals[2])
        b2 = parse_element(model2, vals[3])
    elif len(vals) == 2:
        def split(text, model):
            left, sep, right = text.partition("/")
            if not sep:
                raise _UsageError(f"ratio literal needs a slash: {text!r}")
            return parse_element(model, left), parse_element(model, right)

        a, b = split(vals[0], model1)
        a2, b2 = split(vals[1], model2)
    else:
        raise _UsageError("ratio cmp takes A B A2 B2 or two a/b literals")
    return a, b, a2, b2


def _cmd_ratio(args, out) -> int:
    a, b, a2, b2 = _parse_ratio_args(args)
    verdict = ratio.ratio_compare(a, b, a2, b2, fuel=args.fuel)
    if args.format == "json":
        payload = {"verdict": verdict.kind, "fuelSpent": verdict.fuel_spent}
        if verdict.witness is not None:
            payload["witness"] = verdict.witness.as_json()
        if verdict.is_unknown:
            payload["precisionCap"] = verdict.precision_cap
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        if verdict.witness is not None:
            print(f"{verdict.kind} (witness {verdict.witness})", file=out)
        elif verdict.is_unknown:
            print(f"unknown (fuel spent {verdict.fuel_spent})", file=out)
        else:
            print(verdict.kind, file=out)
    return EXIT_UNDECIDED if verdict.is_unknown else EXIT_OK


def _cmd_multiple(args, p, out) -> int:
    model = model_by_id(args.model)
    n = int(args.n)
    a = parse_element(model, args.a)
    _emit_element(multiple(n, a, model), p, args.format, out)
    return EXIT_OK


def _cmd_fourth(args, p, out) -> int:
    model = model_by_id(args.model)
    a = parse_element(model, args.a)
    b = parse_element(model, args.b)
    aprime = real_from_rat(PosRat.from_text(args.aprime))
    _emit_element(fourth_proportional(a, b, aprime, p), p, args.format, out)
    return EXIT_OK


def _cmd_mul(args, p, out) -> int:
    model = model_by_id(args.model)
    a = parse_element(model, args.a)
    b = parse_element(model, args.b)
    _emit_element(hom.product(a, b, ApproxPolicy(precision=p)), p, args.format, out)
    return EXIT_OK


def _cmd_quot(args, p, out) -> int:
    model = model_by_id(args.model)
    b = parse_element(model, args.b)
    a = parse_element(model, args.a)
    _emit_element(hom.quotient(b, a, ApproxPolicy(precision=p)), p, args.format, out)
    return EXIT_OK


def _cmd_pow(args, p, out) -> int:
    base = power.into_mul(real_from_rat(PosRat.from_text(args.x)))
    exponent = PosRat.from_text(args.y)
    result = power.pow(base, exponent, p)
    _emit_element(result.value, p, args.format, out)
    return EXIT_OK


def _cmd_embed_check(args, out) -> int:
    try:
        tree = json.loads(args.tree)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"embedding JSON malformed: {exc}")
    phi = embedding_from_json(tree)
    report = check_homomorphism(phi, samples=args.samples, seed=args.seed)
    if args.format == "json":
        payload = {
            "embedding": embedding_to_json(phi),
            "passed": report.passed,
            "samples": report.samples,
            "counterexample": report.counterexample,
        }
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        if report.passed:
            print(f"pass ({report.samples} samples)", file=out)
        else:
            print(f"fail: {report.counterexample}", file=out)
    return EXIT_OK if report.passed else EXIT_DOMAIN


def _cmd_laws(args, p, out) -> int:
    if args.laws_command == "list":
        for entry in laws.list_laws():
            print(f"{entry['lawId']}  [{entry['set']}]  {entry['statement']}", file=out)
        return EXIT_OK
    model = model_by_id(args.model)
    tolerance = None if model.descriptor.exact_order else p
    reports = laws.run_suite(
        model, args.law_set, trials=args.trials, seed=args.seed, tolerance=tolerance
    )
    if args.format == "json":
        print(laws.reports_to_json(reports), file=out)
    else:
        for report in reports:
            mark = "PASS" if report.passed else "FAIL"
            print(f"{mark}  {report.law_id}", file=out)
            for failure in report.failures:
                print(f"      inputs={failure['inputs']}", file=out)
                print(
                    f"      observed={failure['observed']} expected={failure['expected']}",
                    file=out,
                )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_DOMAIN


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        raw_precision = getattr(args, "precision", None)
        precision = raw_precision if raw_precision is not None else _default_precision()
        if precision < 0:
            raise _UsageError("precision must be >= 0")
        if args.command == "ratio":
            return _cmd_ratio(args, out)
        if args.command == "multiple":
            return _cmd_multiple(args, precision, out)
        if args.command == "fourth":
            return _cmd_fourth(args, precision, out)
        if args.command == "mul":
            return _cmd_mul(args, precision, out)
        if args.command == "quot":
            return _cmd_quot(args, precision, out)
        if args.command == "pow":
            return _cmd_pow(args, precision, out)
        if args.command == "embed-check":
            return _cmd_embed_check(args, out)
        if args.command == "laws":
            return _cmd_laws(args, precision, out)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except UndecidedError as exc:
        print(f"undecided: {exc}", file=err)
        return EXIT_UNDECIDED
    except NotAboveOneError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN
    except MagnitudeError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
