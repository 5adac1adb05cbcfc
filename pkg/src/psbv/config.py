"""Experiment configuration: parsing, validation and the key = value file format.

Parameters are kept as canonical strings so a config round-trips exactly
through :meth:`ExperimentConfig.to_text` and :meth:`ExperimentConfig.from_text`.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .arith import PsGamma
from .engine import admissible_theta
from .errors import ValidationError
from .exact import format_rational, parse_rational
from .expsum import SumSpec
from .pairs import ExponentPair, parse_word

SUBCOMMANDS = ("pairs", "theta", "psprimes", "bvstat", "psicheck", "ndelta", "lemma7", "chain")
FORMATS = ("json", "csv")


def _rational(text: str) -> str:
    return format_rational(parse_rational(text))


def _decimal(text: str) -> str:
    # validated as an exact rational, but kept as written
    parse_rational(text)
    return str(text).strip()


def _gamma(text: str) -> str:
    return str(PsGamma.parse(text))


def _int(lo: Optional[int] = None) -> Callable[[str], str]:
    def parse(text: str) -> str:
        try:
            value = int(str(text).strip())
        except ValueError:
            raise ValidationError(f"expected an integer, got {text!r}") from None
        if lo is not None and value < lo:
            raise ValidationError(f"expected an integer >= {lo}, got {value}")
        return str(value)

    return parse


def _int_list(text: str) -> str:
    items = [s for s in str(text).replace(" ", "").split(",") if s]
    if not items:
        raise ValidationError("expected a comma-separated list of integers")
    return ",".join(_int(1)(s) for s in items)


def _pair(text: str) -> str:
    p = ExponentPair.parse(text)
    return f"{format_rational(p.kappa)},{format_rational(p.lam)}"


def _word(text: str) -> str:
    return parse_word(text)


def _which(text: str) -> str:
    key = str(text).strip().upper()
    if key not in ("S1", "S2"):
        raise ValidationError(f"chain must be S1 or S2, got {text!r}")
    return key


def _theta_or_max(text: str) -> str:
    return "max" if str(text).strip().lower() == "max" else _rational(text)


def _mu(text: str) -> str:
    key = str(text).strip().lower()
    return key if key in ("a", "b", "c", "mid") else _rational(text)


# name -> (parser, default); default None means required
SCHEMAS: dict[str, dict[str, tuple[Callable[[str], str], Optional[str]]]] = {
    "pairs": {"word": (_word, "AAAAB"), "start": (_pair, "0/1,1/1")},
    "theta": {"gamma": (_gamma, None)},
    "chain": {
        "which": (_which, "S1"),
        "gamma": (_gamma, None),
        "theta": (_theta_or_max, None),
        "mu": (_mu, None),
    },
    "psprimes": {"X": (_int(2), None), "gamma": (_gamma, None)},
    "bvstat": {
        "X": (_int(3), None),
        "gamma": (_gamma, None),
        "c": (_decimal, None),
        "t": (_decimal, "0"),
        "t_rel": (_decimal, ""),
        "D": (_int(1), ""),
        "theta": (_theta_or_max, ""),
        "a": (_int(), "1"),
        "A": (_decimal, "1"),
    },
    "psicheck": {"H": (_int_list, "8,64,512"), "samples": (_int(1), "10000")},
    "ndelta": {
        "H": (_int(1), None),
        "N": (_int(1), None),
        "delta": (_decimal, None),
        "gamma": (_gamma, None),
    },
    "lemma7": {
        "pair": (_pair, "13/194,152/194"),
        "d": (_int(1), "1"),
        "a": (_int(), "1"),
        "X": (_int(1), None),
        "h1": (_decimal, "0"),
        "h2": (_decimal, "0"),
        "c": (_decimal, "3/2"),
        "gamma": (_gamma, None),
    },
}


@dataclass(frozen=True)
class ExperimentConfig:
    subcommand: str
    params: tuple[tuple[str, str], ...] = ()
    precision: int = 128
    output: str = ""
    fmt: str = "json"
    workers: int = 1
    seed: int = 0
    sieve_cache: str = ""

    def __post_init__(self):
        if self.subcommand not in SCHEMAS:
            raise ValidationError(f"unknown subcommand {self.subcommand!r}")
        if self.fmt not in FORMATS:
            raise ValidationError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.precision < 53:
            raise ValidationError("precision must be at least 53 bits")
        if self.workers < 1:
            raise ValidationError("workers must be >= 1")
        object.__setattr__(self, "params", _normalize(self.subcommand, dict(self.params)))
        if self.subcommand == "bvstat":
            sum_spec(self)  # range checks of the statistic, raised at parse time

    def __getitem__(self, key: str) -> str:
        return dict(self.params)[key]

    def get(self, key: str) -> Optional[str]:
        value = dict(self.params).get(key, "")
        return value or None

    def to_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "params": dict(self.params),
            "precision": self.precision,
            "output": self.output,
            "format": self.fmt,
            "workers": self.workers,
            "seed": self.seed,
            "sieve_cache": self.sieve_cache,
        }

    def to_text(self) -> str:
        lines = ["[experiment]"]
        for key in ("subcommand", "precision", "output", "format", "workers", "seed", "sieve_cache"):
            lines.append(f"{key} = {self.to_dict()[key]}")
        lines += ["", f"[{self.subcommand}]"]
        lines += [f"{k} = {v}" for k, v in self.params]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExperimentConfig":
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str  # keys are case-sensitive (X vs x, a vs A)
        try:
            parser.read_string(text)
        except configparser.Error as exc:
            raise ValidationError(f"malformed config: {str(exc).splitlines()[0]}") from None
        if "experiment" not in parser:
            raise ValidationError("config lacks an [experiment] section")
        exp = parser["experiment"]
        sub = exp.get("subcommand", "").strip()
        params = tuple(parser[sub].items()) if sub in parser else ()
        try:
            return cls(
                subcommand=sub,
                params=params,
                precision=int(exp.get("precision", "128")),
                output=exp.get("output", ""),
                fmt=exp.get("format", "json"),
                workers=int(exp.get("workers", "1")),
                seed=int(exp.get("seed", "0")),
                sieve_cache=exp.get("sieve_cache", ""),
            )
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed config value: {exc}") from None


def _normalize(sub: str, raw: dict[str, str]) -> tuple[tuple[str, str], ...]:
    schema = SCHEMAS[sub]
    unknown = set(raw) - set(schema)
    if unknown:
        raise ValidationError(f"unknown parameter(s) for {sub}: {', '.join(sorted(unknown))}")
    out = []
    for name, (parse, default) in schema.items():
        value = raw.get(name)
        if value is None or str(value).strip() == "":
            if default is None:
                raise ValidationError(f"{sub} requires parameter {name!r}")
            value = default
        out.append((name, parse(value) if value != "" else ""))
    return tuple(out)


def fraction_param(cfg: ExperimentConfig, key: str) -> Fraction:
    return parse_rational(cfg[key])


def theta_value(cfg: ExperimentConfig, gamma: PsGamma) -> Fraction:
    """The theta parameter, resolving the keyword "max" to theta_max(gamma)."""
    if cfg["theta"] == "max":
        report = admissible_theta(gamma.fraction)
        if report.theta_max is None:
            raise ValidationError(f"no admissible theta > 0 at gamma = {gamma}")
        return report.theta_max
    return fraction_param(cfg, "theta")


def sum_spec(cfg: ExperimentConfig) -> SumSpec:
    """Build the validated SumSpec of a bvstat config."""
    gamma = PsGamma.parse(cfg["gamma"])
    if cfg.get("t_rel") is not None and cfg["t"] not in ("0", ""):
        raise ValidationError("give at most one of t and t_rel")
    if (cfg.get("D") is None) == (cfg.get("theta") is None):
        raise ValidationError("bvstat needs exactly one of D and theta")
    relative = cfg.get("t_rel") is not None
    return SumSpec(
        X=int(cfg["X"]),
        gamma=gamma,
        c=fraction_param(cfg, "c"),
        t=fraction_param(cfg, "t_rel" if relative else "t"),
        t_relative=relative,
        a=int(cfg["a"]),
        D=int(cfg["D"]) if cfg.get("D") else None,
        theta=theta_value(cfg, gamma) if cfg.get("theta") else None,
        A=fraction_param(cfg, "A"),
        precision=cfg.precision,
    )
