"""Command-line experiment runner.

Every subcommand accepts its parameters as flags, or the whole experiment
can come from a config file (``psbv run --config exp.ini``).  Reports go to
``--out`` as a JSON envelope or a CSV table; stdout gets a one-line summary.

Exit codes: 0 success, 2 validation error, 3 budget error, 1 other failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .arith import PsGamma, count_ps_primes
from .config import SCHEMAS, SUBCOMMANDS, ExperimentConfig, fraction_param, sum_spec, theta_value
from .engine import A_FORM, B_FORM, C_FORM, DEFAULT_TABLE, admissible_theta, chain_max_exponent
from .errors import BudgetError, PsbvError, ValidationError
from .exact import format_rational
from .expsum import bv_statistic, lemma7_check, ndelta_counts, truncation_experiment
from .pairs import ExponentPair, apply_word, word_trace

EXIT_OK, EXIT_FAIL, EXIT_VALIDATION, EXIT_BUDGET = 0, 1, 2, 3


class Result:
    """Payload plus its CSV rendering and the stdout summary."""

    def __init__(self, payload: dict, header: list[str], rows: list[list[Any]], summary: str):
        self.payload = payload
        self.header = header
        self.rows = rows
        self.summary = summary


def run_pairs(cfg: ExperimentConfig) -> Result:
    start = ExponentPair.parse(cfg["start"])
    result = apply_word(cfg["word"], start)
    trace = word_trace(cfg["word"], start)
    payload = {
        "word": cfg["word"],
        "start": str(start),
        "kappa": format_rational(result.kappa),
        "lambda": format_rational(result.lam),
        "result": str(result),
        "trace": [[w, format_rational(p.kappa), format_rational(p.lam)] for w, p in trace],
    }
    rows = [[w, format_rational(p.kappa), format_rational(p.lam)] for w, p in trace]
    return Result(payload, ["suffix", "kappa", "lambda"], rows, f"pairs {cfg['word']}({start}) = {result}")


def run_theta(cfg: ExperimentConfig) -> Result:
    gamma = PsGamma.parse(cfg["gamma"])
    report = admissible_theta(gamma.fraction)
    payload = report.to_dict()
    rows = [[name, format_rational(s)] for name, s in report.slacks]
    tm = payload["theta_max"] or "empty"
    return Result(payload, ["constraint", "slack"], rows, f"theta gamma={gamma} theta_max={tm} binding={payload['binding']}")


def run_chain(cfg: ExperimentConfig) -> Result:
    gamma = PsGamma.parse(cfg["gamma"])
    g = gamma.fraction
    theta = theta_value(cfg, gamma)
    key = cfg["mu"]
    named = {
        "a": lambda: A_FORM(g, theta),
        "b": lambda: B_FORM(g, theta),
        "c": lambda: C_FORM(g, theta),
        "mid": lambda: (B_FORM(g, theta) + C_FORM(g, theta)) / 2,
    }
    mu = named[key]() if key in named else fraction_param(cfg, "mu")
    result = chain_max_exponent(DEFAULT_TABLE, cfg["which"], g, theta, mu)
    payload = result.to_dict() | {"gamma": str(gamma), "theta": format_rational(theta), "mu": format_rational(mu)}
    rows = [[i, lab, format_rational(e)] for i, (lab, e) in enumerate(zip(result.labels, result.exponents))]
    return Result(
        payload,
        ["index", "term", "exponent"],
        rows,
        f"chain {result.which} max_exponent={payload['max_exponent']} argmax={result.argmax}",
    )


def run_psprimes(cfg: ExperimentConfig) -> Result:
    gamma = PsGamma.parse(cfg["gamma"])
    res = count_ps_primes(int(cfg["X"]), gamma, workers=cfg.workers, cache_dir=cfg.sieve_cache or None)
    payload = res.to_dict()
    row = [payload[k] for k in ("X", "gamma", "count", "smooth", "relative_gap")]
    return Result(
        payload,
        ["X", "gamma", "count", "smooth", "relative_gap"],
        [row],
        f"psprimes X={res.X} gamma={gamma} count={res.count} smooth={res.smooth:.6f}",
    )


BV_COLUMNS = ["d", "phi_d", "sum_re", "sum_im", "main_re", "main_im", "abs_err"]


def run_bvstat(cfg: ExperimentConfig) -> Result:
    spec = sum_spec(cfg)
    report = bv_statistic(spec, workers=cfg.workers)
    payload = report.to_dict()
    rows = [[r[k] for k in BV_COLUMNS] for r in payload["rows"]]
    return Result(
        payload,
        BV_COLUMNS,
        rows,
        f"bvstat X={spec.X} D={report.D} moduli={len(report.rows)} total={report.total!r} total/X={report.total_over_X!r}",
    )


def run_psicheck(cfg: ExperimentConfig) -> Result:
    samples = int(cfg["samples"])
    reports = [truncation_experiment(int(h), samples, cfg.seed) for h in cfg["H"].split(",")]
    payload = {"seed": cfg.seed, "results": [r.to_dict() for r in reports]}
    header = ["H", "samples", "sup_ratio", "argmax_t", "integer_error"]
    rows = [[r.to_dict()[k] for k in header] for r in reports]
    worst = max(r.sup_ratio for r in reports)
    return Result(payload, header, rows, f"psicheck H={cfg['H']} sup_ratio={worst!r}")


def run_ndelta(cfg: ExperimentConfig) -> Result:
    gamma = PsGamma.parse(cfg["gamma"])
    H, N, delta = int(cfg["H"]), int(cfg["N"]), float(fraction_param(cfg, "delta"))
    res = ndelta_counts(H, N, gamma, [delta])[0]
    payload = {"H": H, "N": N, "gamma": str(gamma), "delta": delta} | res.to_dict()
    header = ["H", "N", "gamma", "delta", "count", "envelope", "ratio"]
    return Result(payload, header, [[payload[k] for k in header]], f"ndelta count={res.count} ratio={res.ratio!r}")


def run_lemma7(cfg: ExperimentConfig) -> Result:
    gamma = PsGamma.parse(cfg["gamma"])
    pair = ExponentPair.parse(cfg["pair"])
    res = lemma7_check(
        pair,
        int(cfg["d"]),
        int(cfg["a"]),
        int(cfg["X"]),
        float(fraction_param(cfg, "h1")),
        float(fraction_param(cfg, "h2")),
        float(fraction_param(cfg, "c")),
        float(gamma),
    )
    payload = dict(cfg.params) | res.to_dict()
    header = ["direct_abs", "bound", "ratio", "terms"]
    return Result(payload, header, [[payload[k] for k in header]], f"lemma7 direct={res.direct!r} bound={res.bound!r} ratio={res.ratio!r}")


RUNNERS: dict[str, Callable[[ExperimentConfig], Result]] = {
    "pairs": run_pairs,
    "theta": run_theta,
    "chain": run_chain,
    "psprimes": run_psprimes,
    "bvstat": run_bvstat,
    "psicheck": run_psicheck,
    "ndelta": run_ndelta,
    "lemma7": run_lemma7,
}


def _cell(v: Any) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def render_csv(result: Result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(result.header)
    for row in result.rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def payload_bytes(payload: dict) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def envelope(cfg: ExperimentConfig, result: Result, wall_clock: float) -> dict:
    return {
        "tool": "psbv",
        "version": __version__,
        "config": cfg.to_dict(),
        "wall_clock_s": wall_clock,
        "payload": result.payload,
    }


def emit_json(path: Path, env: dict) -> None:
    Path(path).write_text(json.dumps(env, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n")


def emit_csv(path: Path, result: Result) -> None:
    Path(path).write_text(render_csv(result), encoding="utf-8", newline="\n")


def run(cfg: ExperimentConfig) -> tuple[Result, dict]:
    """Execute an experiment and write its report if an output path is set."""
    t0 = time.perf_counter()
    result = RUNNERS[cfg.subcommand](cfg)
    env = envelope(cfg, result, time.perf_counter() - t0)
    if cfg.output:
        try:
            if cfg.fmt == "csv":
                emit_csv(Path(cfg.output), result)
            else:
                emit_json(Path(cfg.output), env)
        except OSError as exc:
            raise ValidationError(f"cannot write {cfg.output}: {exc.strerror}") from None
    return result, env


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ValidationError(message.replace("\n", " "))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", dest="output", default="")
    p.add_argument("--format", dest="fmt", default=None, choices=["json", "csv"])
    p.add_argument("--precision", type=int, default=128)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sieve-cache", dest="sieve_cache", default="")
    p.add_argument("--dump-config", action="store_true", help="print the resolved config file and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="psbv", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"psbv {__version__}")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, allow_abbrev=False)
        for key in SCHEMAS[name]:
            p.add_argument(f"--{key.replace('_', '-')}", dest=f"param_{key}", default=None)
        _add_common(p)
    p = sub.add_parser("run", allow_abbrev=False, help="run an experiment from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", dest="output", default=None)
    p.add_argument("--format", dest="fmt", default=None, choices=["json", "csv"])
    return parser


def _format_from(output: str, fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "csv" if output.endswith(".csv") else "json"


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    if args.subcommand == "run":
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"cannot read config {args.config}: {exc.strerror}") from None
        cfg = ExperimentConfig.from_text(text)
        if args.output is not None:
            cfg = replace(cfg, output=args.output, fmt=_format_from(args.output, args.fmt))
        elif args.fmt is not None:
            cfg = replace(cfg, fmt=args.fmt)
        return cfg
    params = tuple(
        (key, getattr(args, f"param_{key}")) for key in SCHEMAS[args.subcommand] if getattr(args, f"param_{key}") is not None
    )
    return ExperimentConfig(
        args.subcommand,
        params,
        args.precision,
        args.output,
        _format_from(args.output, args.fmt),
        args.workers,
        args.seed,
        args.sieve_cache,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.subcommand is None:
            raise ValidationError("missing subcommand; choose from " + ", ".join(SUBCOMMANDS + ("run",)))
        cfg = config_from_args(args)
        if getattr(args, "dump_config", False):
            sys.stdout.write(cfg.to_text())
            return EXIT_OK
        result, _ = run(cfg)
    except ValidationError as exc:
        print(f"psbv: error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetError as exc:
        print(f"psbv: error: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PsbvError as exc:
        print(f"psbv: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(result.summary)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
