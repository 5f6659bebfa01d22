"""Command-line front end.

Four verbs: ``series`` prints the exact coefficients of one named series,
``numbers`` prints a family's value table, ``stirling`` prints a Stirling
triangle, and ``verify`` runs one identity check (or a whole sweep with
``--all``).  Output is JSON by default; CSV is available for the flat
tables only (numbers, stirling).  The POLYBERN_FORMAT environment variable
changes the default format.

All rational-valued flags take "p/q" or "p".  Truncation defaults (order
16, m-truncation 32) are echoed into every output so results are
self-describing.

Exit codes: 0 success or verification pass (diagnostic runs count as
success once they complete), 1 verification fail, 2 usage error, 3
internal invariant violation (a valuation guard tripping means a bug in
the math, not in the invocation).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .families import (
    carlitz_degenerate,
    degenerate_multi_poly_bernoulli,
    multi_poly_bernoulli,
    poly_bernoulli,
    type2_poly_bernoulli,
)
from .rationals import format_rational, parse_rational
from .series import ValuationError
from .special import (
    degenerate_exp,
    log1p_series,
    multi_polylog,
    one_minus_exp_neg,
    polyexp,
    stirling_table,
)
from .verify import (
    verify_addition,
    verify_chain_stirling,
    verify_deriv_recurrences,
    verify_difference,
    verify_li_ones,
    verify_polynomial_expansion,
    verify_resummation,
)

DEFAULT_ORDER = 16
DEFAULT_M_TRUNCATION = 32

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Bad invocation (missing or inconsistent flags)."""


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ks_flag(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"ks must be comma-separated integers, got {text!r}") from None
    if not parts:
        raise argparse.ArgumentTypeError("ks must be non-empty")
    return parts


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polybern",
        description="Exact Bernoulli-type sequence tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default=None,
                       help="output format (default from POLYBERN_FORMAT, else json)")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p_series = sub.add_parser("series", help="coefficients of one named series")
    p_series.add_argument("--name", required=True,
                          choices=("multi-polylog", "polyexp", "one-minus-exp-neg",
                                   "log1p", "degenerate-exp"))
    p_series.add_argument("--ks", type=_ks_flag, default=None)
    p_series.add_argument("--k", type=int, default=None)
    p_series.add_argument("--x", type=_rational_flag, default=None)
    p_series.add_argument("--lambda", dest="lam", type=_rational_flag, default=None)
    p_series.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p_series)

    p_numbers = sub.add_parser("numbers", help="value table of one family")
    p_numbers.add_argument("--family", required=True,
                           choices=("degen-multi-poly", "multi-poly", "poly",
                                    "type2-poly", "carlitz"))
    p_numbers.add_argument("--ks", type=_ks_flag, default=None)
    p_numbers.add_argument("--k", type=int, default=None)
    p_numbers.add_argument("--r", type=int, default=None)
    p_numbers.add_argument("--lambda", dest="lam", type=_rational_flag, default=None)
    p_numbers.add_argument("--x", type=_rational_flag, default=Fraction(0))
    p_numbers.add_argument("--order", type=int, default=DEFAULT_ORDER)
    common(p_numbers)

    p_stirling = sub.add_parser("stirling", help="Stirling triangle")
    p_stirling.add_argument("--kind", required=True,
                            choices=("second", "first-unsigned", "first-signed"))
    p_stirling.add_argument("--max-n", type=int, required=True)
    common(p_stirling)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--identity",
                          choices=("expansion", "li-ones", "deriv", "chain-stirling",
                                   "resummation", "difference", "addition"))
    p_verify.add_argument("--all", action="store_true", help="run the default sweep")
    p_verify.add_argument("--ks", type=_ks_flag, default=None)
    p_verify.add_argument("--r", type=int, default=None)
    p_verify.add_argument("--lambda", dest="lam", type=_rational_flag, default=None)
    p_verify.add_argument("--x", type=_rational_flag, default=None)
    p_verify.add_argument("--y", type=_rational_flag, default=None)
    p_verify.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_verify.add_argument("--truncate", type=int, default=DEFAULT_M_TRUNCATION,
                          help="m-sum truncation for the diagnostic identities")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="parallel workers for --all (results stay deterministic)")
    common(p_verify)

    return parser


def _require(condition: bool, message: str):
    if not condition:
        raise UsageError(message)


def _cmd_series(args) -> tuple[dict, str | None]:
    name = args.name
    order = args.order
    _require(order >= 0, "order must be non-negative")
    params: dict = {"order": order}
    if name == "multi-polylog":
        _require(args.ks is not None, "multi-polylog needs --ks")
        series = multi_polylog(args.ks, order)
        params["ks"] = list(args.ks)
    elif name == "polyexp":
        _require(args.k is not None, "polyexp needs --k")
        series = polyexp(args.k, order)
        params["k"] = args.k
    elif name == "one-minus-exp-neg":
        series = one_minus_exp_neg(order)
    elif name == "log1p":
        series = log1p_series(order)
    else:  # degenerate-exp
        _require(args.x is not None and args.lam is not None,
                 "degenerate-exp needs --x and --lambda")
        series = degenerate_exp(args.x, args.lam, order)
        params["x"] = format_rational(args.x)
        params["lambda"] = format_rational(args.lam)
    payload = {"series": name, "params": params}
    payload.update(series.to_json_dict())
    return payload, None


def _cmd_numbers(args) -> tuple[dict, str | None]:
    fam = args.family
    order = args.order
    _require(order >= 0, "order must be non-negative")
    if fam == "degen-multi-poly":
        _require(args.ks is not None and args.lam is not None,
                 "degen-multi-poly needs --ks and --lambda")
        result = degenerate_multi_poly_bernoulli(args.ks, args.lam, args.x, order)
    elif fam == "multi-poly":
        _require(args.ks is not None, "multi-poly needs --ks")
        result = multi_poly_bernoulli(args.ks, args.x, order)
    elif fam == "poly":
        _require(args.k is not None, "poly needs --k")
        result = poly_bernoulli(args.k, args.x, order)
    elif fam == "type2-poly":
        _require(args.k is not None, "type2-poly needs --k")
        result = type2_poly_bernoulli(args.k, args.x, order)
    else:  # carlitz
        _require(args.r is not None and args.lam is not None,
                 "carlitz needs --r and --lambda")
        result = carlitz_degenerate(args.r, args.lam, args.x, order)
    return result.to_json_dict(), result.to_csv()


def _cmd_stirling(args) -> tuple[dict, str | None]:
    kind = args.kind.replace("-", "_")
    table = stirling_table(kind, args.max_n)
    return table.to_json_dict(), table.to_csv()


_VERIFY_NEEDS = {
    "expansion": ("ks", "lam", "x"),
    "li-ones": ("r",),
    "deriv": ("ks",),
    "chain-stirling": ("ks", "lam", "x"),
    "resummation": ("ks", "lam", "x"),
    "difference": ("ks", "lam", "x"),
    "addition": ("ks", "lam", "x", "y"),
}


def _run_verify(identity: str, kwargs: dict):
    if identity == "expansion":
        return verify_polynomial_expansion(kwargs["ks"], kwargs["lam"], kwargs["x"], kwargs["order"])
    if identity == "li-ones":
        return verify_li_ones(kwargs["r"], kwargs["order"])
    if identity == "deriv":
        return verify_deriv_recurrences(kwargs["ks"], kwargs["order"])
    if identity == "chain-stirling":
        return verify_chain_stirling(kwargs["ks"], kwargs["lam"], kwargs["x"], kwargs["order"])
    if identity == "resummation":
        return verify_resummation(kwargs["ks"], kwargs["lam"], kwargs["x"], kwargs["order"],
                                  kwargs["m_truncation"])
    if identity == "difference":
        return verify_difference(kwargs["ks"], kwargs["lam"], kwargs["x"], kwargs["order"],
                                 kwargs["m_truncation"])
    if identity == "addition":
        return verify_addition(kwargs["ks"], kwargs["lam"], kwargs["x"], kwargs["y"], kwargs["order"])
    raise UsageError(f"unknown identity {identity!r}")


def _sweep_tasks(order: int, m_truncation: int) -> list[tuple[str, dict]]:
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    tasks: list[tuple[str, dict]] = []
    for r in (1, 2, 3, 4):
        tasks.append(("li-ones", {"r": r, "order": order}))
    for ks in ((1, 2), (2, 1), (1, 1, 1)):
        tasks.append(("expansion", {"ks": ks, "lam": third, "x": Fraction(2, 3), "order": order}))
    for ks in ((2,), (2, 1), (3, 2)):
        tasks.append(("deriv", {"ks": ks, "order": order}))
    for ks in ((1, 1), (2, 1)):
        tasks.append(("chain-stirling", {"ks": ks, "lam": half, "x": Fraction(0), "order": min(order, 10)}))
    tasks.append(("resummation", {"ks": (2, 1), "lam": third, "x": Fraction(0),
                                  "order": min(order, 6), "m_truncation": m_truncation}))
    tasks.append(("resummation", {"ks": (1, -2), "lam": third, "x": Fraction(0),
                                  "order": min(order, 8), "m_truncation": m_truncation}))
    tasks.append(("difference", {"ks": (1, 1), "lam": half, "x": Fraction(0),
                                 "order": min(order, 6), "m_truncation": m_truncation}))
    tasks.append(("difference", {"ks": (1, -1), "lam": Fraction(1, 4), "x": Fraction(0),
                                 "order": min(order, 8), "m_truncation": m_truncation}))
    tasks.append(("addition", {"ks": (2, 1), "lam": third, "x": half, "y": third, "order": order}))
    return tasks


def _sweep_worker(task: tuple[str, dict]) -> dict:
    identity, kwargs = task
    return _run_verify(identity, kwargs).to_json_dict()


def _cmd_verify(args) -> tuple[object, str | None, int]:
    if args.all:
        _require(args.identity is None, "--all and --identity are mutually exclusive")
        tasks = _sweep_tasks(args.order, args.truncate)
        jobs = max(1, args.jobs)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(_sweep_worker, tasks))
        else:
            reports = [_sweep_worker(t) for t in tasks]
        reports.sort(key=lambda rep: (rep["identity"], json.dumps(rep["params"], sort_keys=True)))
        code = EXIT_VERIFY_FAIL if any(rep["status"] == "fail" for rep in reports) else EXIT_OK
        return reports, None, code

    _require(args.identity is not None, "verify needs --identity or --all")
    identity = args.identity
    kwargs = {"order": args.order, "m_truncation": args.truncate}
    for field in _VERIFY_NEEDS[identity]:
        value = getattr(args, field)
        _require(value is not None, f"{identity} needs --{'lambda' if field == 'lam' else field}")
        kwargs[field] = value
    report = _run_verify(identity, kwargs)
    code = EXIT_VERIFY_FAIL if report.status == "fail" else EXIT_OK
    return report.to_json_dict(), None, code


def _emit(payload, csv_text: str | None, fmt: str, output: str | None):
    if fmt == "csv":
        if csv_text is None:
            raise UsageError("CSV output is only available for flat tables (numbers, stirling)")
        text = csv_text
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 for --help; pass both through
        return int(exc.code or 0)

    env_format = os.environ.get("POLYBERN_FORMAT")
    try:
        fmt = args.format
        if fmt is None:
            if env_format is not None and env_format not in ("json", "csv"):
                raise UsageError(f"POLYBERN_FORMAT must be json or csv, got {env_format!r}")
            fmt = env_format or "json"

        code = EXIT_OK
        if args.verb == "series":
            payload, csv_text = _cmd_series(args)
        elif args.verb == "numbers":
            payload, csv_text = _cmd_numbers(args)
        elif args.verb == "stirling":
            payload, csv_text = _cmd_stirling(args)
        else:
            payload, csv_text, code = _cmd_verify(args)
        _emit(payload, csv_text, fmt, args.output)
        return code
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except ValuationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
