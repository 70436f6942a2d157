import json
import logging
from fractions import Fraction

import pytest

from config.settings import Config
from dualdeg.cli import RunConfig, load_acceptance, run
from dualdeg.errors import PreconditionError
from dualdeg.version import __version__

TINY_TABLE = {
    "thresholds": {
        "and2_degree": 2,
        "and2_best_eps": "1/2",
        "one_third": "1/3",
        "duality_slack": "1/1000",
        "maj_ratio": "3/13",
        "general_ratio": "1/14",
        "general_tail": "2/5",
        "spalek_ratio": "1/14",
    },
    "ranges": {
        key: {
            "random_n3": 2,
            "composition": [[2, 2]],
            "noise_alphas": ["1/4"],
            "noise_and_max": 2,
            "noise_random": 2,
            "noise_random_arity": 3,
            "maj_middle_max": 8,
            "maj_all_max": 6,
            "general_max": 12,
            "spalek_max": 10,
            "lift_max": 5,
            "zero_max": 7,
            "one_max": 6,
            "higher_max": 4,
            "vandermonde_max": 3,
            "trig_max": 6,
        }
        for key in ("full", "quick")
    },
}


@pytest.fixture(autouse=True)
def fresh_config():
    Config.reset()
    yield
    Config.reset()


@pytest.fixture
def tiny_acceptance(tmp_path, monkeypatch):
    path = tmp_path / "acceptance.json"
    path.write_text(json.dumps(TINY_TABLE), encoding="utf-8")
    monkeypatch.setenv("DUALDEG_ACCEPTANCE_PATH", str(path))
    return path


def test_degree_prints_only_the_degree(capsys):
    assert run(["degree", "--fn", "AND", "--n", "2", "--eps", "1/3"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_even_arity_at_zero_is_a_usage_error():
    assert run(["markov", "--at", "zero", "--n", "4"]) == 2


def test_unknown_flag_is_a_usage_error():
    assert run(["degree", "--fn", "AND", "--n", "2", "--colour"]) == 2


def test_float_eps_is_rejected():
    assert run(["degree", "--fn", "OR", "--n", "3", "--eps", "0.33"]) == 2


def test_help_exits_cleanly():
    assert run(["--help"]) == 0


def test_fn_describes_majority(capsys):
    assert run(["fn", "--fn", "maj", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "bs=2" in out
    assert "symmetric=yes" in out


def test_dual_exit_codes():
    assert run(["dual", "--fn", "AND", "--n", "2", "--d", "1", "--eps", "1/3"]) == 0
    assert run(["dual", "--fn", "AND", "--n", "2", "--d", "1", "--eps", "1/2"]) == 1


def test_symdual_report(tmp_path):
    path = tmp_path / "maj.json"
    assert run(["symdual", "--n", "20", "--t", "10", "--report", str(path)]) == 0
    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["command"] == "symdual"
    assert report["version"] == __version__
    assert "report_path" not in report["config"]
    names = {check["name"] for check in report["checks"]}
    assert {"ratio", "structural_phd", "normalization", "tail"} <= names


def test_symdual_cannot_beat_one():
    assert run(["symdual", "--n", "20", "--t", "10", "--eps", "1"]) == 1


def test_markov_report_has_run_tolerance(tmp_path):
    path = tmp_path / "one.json"
    assert run(["markov", "--at", "one", "--n", "6", "--report", str(path)]) == 0
    checks = json.loads(path.read_text(encoding="utf-8"))["checks"]
    assert [check["name"] for check in checks][-1] == "run_tolerance"
    assert all(check["pass"] for check in checks)


def test_markov_higher_and_grid():
    assert run(["markov", "--higher", "--n", "5", "--k", "3"]) == 0
    assert run(["markov", "--n", "3", "--x0", "1/4", "--grid", "12"]) == 0


def test_csv_report(tmp_path):
    path = tmp_path / "trig.csv"
    assert run(["trig", "--nmax", "6", "--prec", "128", "--report", str(path), "--format", "csv"]) == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "subject,name,paper_ref,claim,pass,measured,expected,tolerance"
    assert all(",true," in line for line in lines[1:])


def test_andor_subcommand(capsys):
    assert run(["andor", "--M", "2", "--N", "2"]) == 0
    assert "eps=1/2" in capsys.readouterr().out


def test_precision_floor():
    with pytest.raises(PreconditionError):
        RunConfig(precision=32, tolerance_exponent=-16)
    assert run(["trig", "--nmax", "5", "--prec", "16"]) == 2


def test_shipped_acceptance_table():
    acceptance = load_acceptance()
    assert acceptance.thresholds.maj_ratio == Fraction(3, 13)
    assert acceptance.full.composition == ((2, 2), (2, 3), (3, 2), (2, 4))
    assert acceptance.quick.noise_alphas == (Fraction(1, 8), Fraction(1, 2))
    assert acceptance.full.spalek_max == 200


def test_suite_is_deterministic(tiny_acceptance, tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert run(["suite", "--quick", "--report", str(first)]) == 0
    assert run(["suite", "--quick", "--report", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    subjects = {check["subject"] for check in json.loads(first.read_text(encoding="utf-8"))["checks"]}
    assert "LP duality on small cubes" in subjects
    assert "trigonometric identities up to n=6" in subjects


def test_missing_acceptance_table(tmp_path, monkeypatch):
    monkeypatch.setenv("DUALDEG_ACCEPTANCE_PATH", str(tmp_path / "absent.json"))
    assert run(["suite", "--quick"]) == 2


def test_report_checks_carry_an_anchor(tmp_path):
    path = tmp_path / "one.json"
    assert run(["markov", "--at", "one", "--n", "6", "--report", str(path)]) == 0
    checks = json.loads(path.read_text(encoding="utf-8"))["checks"]
    for check in checks:
        assert set(check) == {"subject", "name", "paper_ref", "claim", "pass", "measured", "expected", "tolerance"}
    anchors = {check["name"]: check["paper_ref"] for check in checks}
    assert anchors["residual"] == "certificate_at_one.residual"
    assert anchors["dual_value_absolute"] == "certificate_at_one.dual_value_absolute"


def test_symdual_report_anchors(tmp_path):
    path = tmp_path / "maj.json"
    assert run(["symdual", "--n", "20", "--t", "10", "--report", str(path)]) == 0
    anchors = {check["paper_ref"] for check in json.loads(path.read_text(encoding="utf-8"))["checks"]}
    assert {"verify_sym_witness.ratio", "verify_construction.maj.sign_pattern"} <= anchors


def test_log_level_flag():
    package = logging.getLogger("dualdeg")
    previous = package.level
    try:
        assert run(["trig", "--nmax", "5", "--prec", "128", "--log-level", "WARNING"]) == 0
        assert package.level == logging.WARNING
    finally:
        package.setLevel(previous)


def test_unknown_log_level_is_a_usage_error():
    assert run(["trig", "--nmax", "5", "--log-level", "LOUD"]) == 2
