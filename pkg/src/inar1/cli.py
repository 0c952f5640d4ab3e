"""Command-line front end: ``inar1 {pmf,moments,simulate,transition,validate}``.

A model is given either as a JSON document (``--model`` with a file path or
inline JSON, ``{"innovation": {...}, "alpha": ...}``), as a named preset
(``--preset``), or with shorthand flags whose names match the JSON fields::

    inar1 pmf --innovation bernoulli --p 0.2 --alpha 0.5
    inar1 simulate --preset heine --steps 1000 --seed 42 --out path.csv

Exit codes: 0 success, 1 a validation check failed, 2 usage or parameter error.
Data goes to standard output (or ``--out``); diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import innovations as inn
from . import marginal as mg
from . import process
from .errors import DomainError, NumericalError
from .marginal import StationaryModel
from .presets import PRESETS
from .validation import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
DEFAULT_TOL = 1e-10


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """12 significant digits, '.' as decimal separator."""
    return format(float(x), ".12g")


# --------------------------------------------------------------------------
# model parsing


def _load_model_json(text: str) -> StationaryModel:
    path = Path(text)
    source = "inline JSON"
    if not text.lstrip().startswith("{"):
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"--model: cannot read {path}: {exc.strerror}") from None
        source = str(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--model ({source}): line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return StationaryModel.from_dict(doc)
    except DomainError as exc:
        raise UsageError(f"--model ({source}): {exc}") from None


def _model_from_flags(args) -> StationaryModel:
    if args.innovation is None:
        raise UsageError("a model is required: use --model, --preset or --innovation with its parameters")
    doc = {"family": args.innovation}
    for flag, key in (("p", "p"), ("m", "m"), ("q", "q"), ("c", "c"), ("lam", "lambda")):
        value = getattr(args, flag)
        if value is not None:
            doc[key] = value
    if args.alpha is None:
        raise UsageError("--alpha is required with --innovation")
    try:
        return StationaryModel.from_dict({"innovation": doc, "alpha": args.alpha})
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def resolve_model(args) -> StationaryModel:
    given = [args.model is not None, args.preset is not None, args.innovation is not None]
    if sum(given) > 1:
        raise UsageError("give only one of --model, --preset, --innovation")
    if args.model is not None:
        return _load_model_json(args.model)
    if args.preset is not None:
        model = PRESETS[args.preset]
        if args.alpha is not None:
            model = StationaryModel(model.innovation, args.alpha)
        return model
    return _model_from_flags(args)


def _check_tol(tol: float) -> float:
    if not 0.0 < tol <= 1e-6:
        raise UsageError(f"--tol must lie in (0, 1e-6], got {tol!r}")
    return tol


# --------------------------------------------------------------------------
# output


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="\n", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"--out: cannot write {out}: {exc.strerror}") from None


def _pmf_table(probs, fmt_name: str, max_k: int | None, extra: dict | None = None) -> str:
    probs = list(probs)
    if max_k is not None:
        probs = probs[: max_k + 1]
    if fmt_name == "json":
        doc = dict(extra or {})
        doc["probabilities"] = [[k, float(fmt(p))] for k, p in enumerate(probs)]
        return json.dumps(doc) + "\n"
    lines = ["k,probability"] + [f"{k},{fmt(p)}" for k, p in enumerate(probs)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# commands


def cmd_pmf(args) -> int:
    model = resolve_model(args)
    dist = mg.marginal_pmf(model, _check_tol(args.tol))
    extra = {"model": model.to_dict(), "method": dist.method, "tail_bound": dist.pmf.tail_bound}
    _emit(_pmf_table(dist.probs, args.format, args.max_k, extra), args.out)
    return EXIT_OK


def cmd_moments(args) -> int:
    model = resolve_model(args)
    if not 1 <= args.orders <= 25:
        raise UsageError("--orders must lie in 1..25")
    report = mg.marginal_moments(model, args.orders).to_dict()
    doc = {"model": model.to_dict(), **{k: _round(v) for k, v in report.items()}}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _round(v):
    if isinstance(v, (list, tuple)):
        return [_round(x) for x in v]
    return float(fmt(v))


def cmd_simulate(args) -> int:
    model = resolve_model(args)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    try:
        init = process.parse_init(args.init)
    except DomainError as exc:
        raise UsageError(f"--init: {exc}") from None
    path = process.simulate(model, args.steps, seed=args.seed, init=init)
    body = "\n".join(f"{t},{x}" for t, x in enumerate(path.values.tolist(), start=1))
    _emit("t,x\n" + body + "\n", args.out)
    return EXIT_OK


def cmd_transition(args) -> int:
    model = resolve_model(args)
    tol = _check_tol(args.tol)
    if args.from_state < 0:
        raise UsageError("--from must be >= 0")
    if not 1 <= args.steps <= process.MAX_K_STEP:
        raise UsageError(f"--steps must lie in 1..{process.MAX_K_STEP}")
    if args.steps == 1:
        row = process.transition_row(model, args.from_state, tol).probs
    else:
        row = process.k_step_conditional(model, args.from_state, args.steps, tol)
    extra = {"model": model.to_dict(), "from": args.from_state, "steps": args.steps}
    _emit(_pmf_table(row.probs, args.format, args.max_k, extra), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    tol = args.tol if args.tol is not None else 1e-8
    _check_tol(tol)
    failed = 0
    lines = []
    for report in run_suite(args.suite, tol):
        failed += not report.passed
        line = report.to_json()
        if args.out is None:
            print(line, flush=True)
        else:
            lines.append(line)
        if not report.passed:
            print(f"FAILED: {report.name} ({report.max_abs_error:.3e} > {report.tolerance:.1e})", file=sys.stderr)
    if args.out is not None:
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILED if failed else EXIT_OK


# --------------------------------------------------------------------------
# parser


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("model")
    g.add_argument("--model", help="model JSON: a file path or an inline document")
    g.add_argument("--preset", choices=sorted(PRESETS), help="named model (alpha may be overridden)")
    g.add_argument("--innovation", choices=[f for f in inn.FAMILY_NAMES if f != "convolution"],
                   help="innovation family for the shorthand flags")
    g.add_argument("--p", type=float)
    g.add_argument("--m", type=int)
    g.add_argument("--q", type=float)
    g.add_argument("--c", type=float)
    g.add_argument("--lambda", dest="lam", type=float)
    g.add_argument("--alpha", type=float)
    p.add_argument("--out", help="write output to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inar1", description="Stationary INAR(1) models under binomial thinning.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pmf", help="stationary marginal pmf table")
    _add_model_flags(p)
    p.add_argument("--max-k", type=int, help="print rows k = 0..max-k only")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_pmf)

    p = sub.add_parser("moments", help="moment report of the stationary marginal (JSON)")
    _add_model_flags(p)
    p.add_argument("--orders", type=int, default=4)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("simulate", help="simulate a sample path (CSV t,x)")
    _add_model_flags(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--init", default="stationary", help="'stationary' or 'fixed:<n>'")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("transition", help="k-step conditional distribution from a given state")
    _add_model_flags(p)
    p.add_argument("--from", dest="from_state", type=int, required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--max-k", type=int)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("validate", help="run a validation suite; JSON-lines reports")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--tol", type=float, default=None, help="oracle tolerance (default 1e-8)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "max_k", None) is not None and args.max_k < 0:
        print("inar1: error: --max-k must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"inar1 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"inar1 {args.command}: numerical error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
