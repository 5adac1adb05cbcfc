import csv
import io
import json
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psbv import cli
from psbv.cli import BV_COLUMNS, Result, main, payload_bytes, render_csv, run
from psbv.config import SCHEMAS, ExperimentConfig
from psbv.errors import ValidationError

# --- random valid configs ----------------------------------------------------


def rationals(lo, hi, max_den=50):
    return st.builds(F, st.integers(1, 10**4), st.integers(1, max_den)).filter(lambda x: lo < x < hi)


def as_text(x):
    return f"{x.numerator}/{x.denominator}"


gammas = st.integers(51, 100).map(lambda k: as_text(F(k, 100)))
common = dict(
    precision=st.integers(53, 512),
    output=st.sampled_from(["", "out.json", "r.csv"]),
    fmt=st.sampled_from(["json", "csv"]),
    workers=st.integers(1, 16),
    seed=st.integers(0, 2**32),
    sieve_cache=st.sampled_from(["", "cache"]),
)

param_strategies = {
    "pairs": st.fixed_dictionaries({"word": st.text("AB", min_size=1, max_size=6), "start": st.just("0/1,1/1")}),
    "theta": st.fixed_dictionaries({"gamma": gammas}),
    "chain": st.fixed_dictionaries(
        {
            "which": st.sampled_from(["S1", "s2"]),
            "gamma": gammas,
            "theta": st.one_of(st.just("max"), rationals(0, 1).map(as_text)),
            "mu": st.one_of(st.sampled_from(["a", "b", "c", "mid"]), rationals(0, 1).map(as_text)),
        }
    ),
    "psprimes": st.fixed_dictionaries({"X": st.integers(2, 10**9).map(str), "gamma": gammas}),
    "bvstat": st.fixed_dictionaries(
        {
            "X": st.integers(3, 10**8).map(str),
            "gamma": gammas,
            "c": rationals(1, 3).filter(lambda c: c != 2).map(as_text),
            "t_rel": rationals(0, 1).map(as_text),
            "D": st.integers(1, 100).map(str),
            "a": st.integers(1, 50).map(str),
            "A": st.sampled_from(["1", "2", "1/2"]),
        }
    ),
    "psicheck": st.fixed_dictionaries({"H": st.lists(st.integers(1, 600), min_size=1, max_size=4).map(lambda h: ",".join(map(str, h))), "samples": st.integers(1, 10**5).map(str)}),
    "ndelta": st.fixed_dictionaries(
        {"H": st.integers(1, 8).map(str), "N": st.integers(1, 64).map(str), "delta": st.sampled_from(["0.001", "0.1", "1", "10"]), "gamma": gammas}
    ),
    "lemma7": st.fixed_dictionaries({"X": st.integers(1, 10**5).map(str), "d": st.integers(1, 9).map(str), "gamma": gammas, "h1": st.sampled_from(["0", "1.3", "1/7"])}),
}

configs = st.sampled_from(sorted(param_strategies)).flatmap(
    lambda sub: st.builds(
        ExperimentConfig,
        subcommand=st.just(sub),
        params=param_strategies[sub].map(lambda d: tuple(d.items())),
        **common,
    )
)


@settings(max_examples=1000, deadline=None)
@given(configs)
def test_config_round_trip(cfg):
    again = ExperimentConfig.from_text(cfg.to_text())
    assert again == cfg
    assert again.to_text() == cfg.to_text()


def test_schemas_cover_subcommands():
    assert set(param_strategies) == set(SCHEMAS)


def test_config_normalizes():
    cfg = ExperimentConfig("theta", (("gamma", "0.99"),))
    assert cfg["gamma"] == "99/100"
    cfg = ExperimentConfig("pairs", (("word", "A^4B"),))
    assert cfg["word"] == "AAAAB"


@pytest.mark.parametrize(
    "sub,params",
    [
        ("theta", {}),
        ("theta", {"gamma": "2/5"}),
        ("theta", {"gamma": "x"}),
        ("theta", {"gamma": "9/10", "bogus": "1"}),
        ("bvstat", {"X": "1000", "gamma": "9/10", "c": "2", "D": "3"}),
        ("bvstat", {"X": "1000", "gamma": "9/10", "c": "3/2"}),
        ("bvstat", {"X": "1000", "gamma": "9/10", "c": "3/2", "D": "3", "t": "0.01"}),
        ("bvstat", {"X": "1000", "gamma": "9/10", "c": "3/2", "D": "3", "t_rel": "1"}),
        ("ndelta", {"H": "0", "N": "2", "delta": "1", "gamma": "9/10"}),
    ],
)
def test_invalid_configs(sub, params):
    with pytest.raises(ValidationError):
        ExperimentConfig(sub, tuple(params.items()))


def test_malformed_config_text():
    with pytest.raises(ValidationError):
        ExperimentConfig.from_text("no sections here")
    with pytest.raises(ValidationError):
        ExperimentConfig.from_text("[experiment]\nsubcommand = nope\n")
    with pytest.raises(ValidationError):
        ExperimentConfig.from_text("[experiment]\nsubcommand = theta\nworkers = many\n[theta]\ngamma = 9/10\n")


# --- CLI ------------------------------------------------------------------------


def test_cli_theta_json(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["theta", "--gamma", "99/100", "--out", str(out)]) == 0
    env = json.loads(out.read_text())
    assert env["payload"]["theta_max"] == "607/5500"
    assert env["payload"]["binding"] == "(37)"
    assert set(env) == {"tool", "version", "config", "wall_clock_s", "payload"}
    assert env["config"]["params"] == {"gamma": "99/100"}
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1


def test_cli_pairs(capsys):
    assert main(["pairs", "--word", "AAAAB", "--start", "0/1,1/1"]) == 0
    assert "1/62, 57/62" in capsys.readouterr().out


def test_rationals_are_strings(tmp_path):
    out = tmp_path / "p.json"
    main(["chain", "--gamma", "49/50", "--theta", "max", "--mu", "a", "--out", str(out)])
    payload = json.loads(out.read_text())["payload"]
    assert payload["max_exponent"] == "1/1"
    assert all(isinstance(e, str) and "/" in e for _, e in payload["terms"])
    assert isinstance(payload["theta"], str) and "/" in payload["theta"]


def test_cli_bvstat_csv(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code = main(["bvstat", "--X", "1000", "--gamma", "1/1", "--c", "3/2", "--t", "0", "--D", "5", "--a", "1", "--out", str(out)])
    assert code == 0
    raw = out.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(io.StringIO(raw.decode("utf-8"))))
    assert rows[0] == BV_COLUMNS
    assert len(rows) == 6
    summary = capsys.readouterr().out.strip()
    total = float(summary.split("total=")[1].split()[0])
    assert math.fsum(float(r[6]) for r in rows[1:]) == pytest.approx(total, rel=1e-12)


def test_bvstat_csv_matches_json_total(tmp_path):
    args = ["bvstat", "--X", "20000", "--gamma", "99/100", "--c", "5/2", "--t-rel", "1/3", "--theta", "max"]
    main(args + ["--out", str(tmp_path / "r.csv")])
    main(args + ["--out", str(tmp_path / "r.json")])
    total = json.loads((tmp_path / "r.json").read_text())["payload"]["total"]
    rows = list(csv.DictReader(io.StringIO((tmp_path / "r.csv").read_text())))
    assert math.fsum(float(r["abs_err"]) for r in rows) == pytest.approx(total, rel=1e-12)


def test_empty_table_is_header_only():
    text = render_csv(Result({}, BV_COLUMNS, [], ""))
    assert text == ",".join(BV_COLUMNS) + "\n"


def test_csv_17_digits():
    text = render_csv(Result({}, ["x"], [[1 / 3]], ""))
    assert text.splitlines()[1] == "0.33333333333333331"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["theta", "--gamma", "1/3"], 2),
        (["theta", "--gamma", "abc"], 2),
        (["nosuch"], 2),
        ([], 2),
        (["theta"], 2),
        (["theta", "--gamma", "9/10", "--precision", "10"], 2),
        (["psprimes", "--X", "1"], 2),
        (["ndelta", "--H", "500", "--N", "500", "--delta", "1", "--gamma", "9/10"], 3),
        (["lemma7", "--X", "5000000", "--d", "7", "--gamma", "9/10"], 3),
        (["run", "--config", "/nonexistent/x.ini"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    err = capsys.readouterr().err.strip()
    assert len(err.splitlines()) == 1
    assert err.startswith("psbv: error: " + ("validation" if code == 2 else "budget"))


def test_unwritable_output(capsys):
    assert main(["theta", "--gamma", "9/10", "--out", "/nonexistent/dir/x.json"]) == 2


def test_dump_config_and_run(tmp_path, capsys):
    assert main(["ndelta", "--H", "3", "--N", "5", "--delta", "0.5", "--gamma", "9/10", "--dump-config"]) == 0
    text = capsys.readouterr().out
    cfg_path = tmp_path / "e.ini"
    cfg_path.write_text(text)
    out = tmp_path / "o.json"
    assert main(["run", "--config", str(cfg_path), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["payload"]["count"] > 0


def test_run_returns_envelope(tmp_path):
    cfg = ExperimentConfig("psicheck", (("H", "8"), ("samples", "100")), seed=5)
    result, env = run(cfg)
    assert env["payload"] is result.payload
    assert payload_bytes(run(cfg)[1]["payload"]) == payload_bytes(env["payload"])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("psbv ")
