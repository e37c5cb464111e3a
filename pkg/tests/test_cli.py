import json
from pathlib import Path

import jsonschema
import pytest

from schur_isotropy.cli import run

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "schemas" / "output.schema.json").read_text()
)


def run_json(capsys, argv):
    code = run(argv + ["--json"])
    captured = capsys.readouterr()
    envelope = json.loads(captured.out)
    jsonschema.validate(envelope, SCHEMA)
    return code, envelope


def test_dim_json(capsys):
    code, envelope = run_json(capsys, ["dim", "--lambda", "2,1", "--n", "3"])
    assert code == 0
    assert envelope["command"] == "dim"
    assert envelope["result"] == {"lambda": [2, 1], "n": 3, "dim": "8"}
    assert envelope["timing_ms"] == 0


def test_decide_json_matches_published_shape(capsys):
    code, envelope = run_json(capsys, ["decide", "--lambda", "2,1", "--k", "3", "--n", "6"])
    assert code == 0
    result = envelope["result"]
    assert result["isotropic"] is True
    assert result["rule"] == "main-theorem"
    assert result["threshold_n"] == 6


def test_decide_json_omits_threshold_for_k_rules(capsys):
    code, envelope = run_json(
        capsys, ["decide", "--lambda", "1,1,1", "--k", "5", "--n", "7"]
    )
    assert code == 0
    result = envelope["result"]
    assert result["isotropic"] is False
    assert result["rule"] == "exception-skew-3-n7"
    assert "threshold_n" not in result


def test_oracle_json(capsys):
    code, envelope = run_json(
        capsys, ["oracle", "--lambda", "1,1,1", "--k", "5", "--n", "7"]
    )
    assert code == 0
    result = envelope["result"]
    assert result == {
        "nonzero": False,
        "degree": "10",
        "shortcut": "none",
        "surviving": [],
    }


def test_oracle_json_survivors(capsys):
    code, envelope = run_json(
        capsys, ["oracle", "--lambda", "2,1", "--k", "3", "--n", "6"]
    )
    assert code == 0
    assert envelope["result"]["surviving"] == [{"mu": [3, 3, 2], "coeff": "105"}]


def test_min_n_json(capsys):
    code, envelope = run_json(capsys, ["min-n", "--lambda", "2,1", "--k", "3"])
    assert code == 0
    result = envelope["result"]
    assert result["threshold_n"] == 6
    assert result["min_isotropic_n"] == 6
    assert result["rule_at_min_n"] == "main-theorem"
    assert result["dim"] == "8"


def test_min_n_trivial_shape(capsys):
    code, envelope = run_json(capsys, ["min-n", "--lambda", "2,2,2", "--k", "2"])
    assert code == 0
    result = envelope["result"]
    assert "threshold_n" not in result
    assert result["min_isotropic_n"] == 2
    assert result["rule_at_min_n"] == "trivial-zero-module"


def test_check_lemma36_json(capsys):
    code, envelope = run_json(
        capsys, ["check-lemma36", "--lambda", "2,1", "--k", "3", "--n", "6"]
    )
    assert code == 0
    result = envelope["result"]
    assert result["all_hold"] is True
    assert result["rows"][0] == {"i": 0, "lhs": "8", "rhs": "9", "holds": True}
    assert len(result["rows"]) == 4


def test_proof_chain_json(capsys):
    code, envelope = run_json(
        capsys, ["proof-chain", "--lambda", "2,1", "--k", "3", "--n", "6"]
    )
    assert code == 0
    assert envelope["result"]["all_verified"] is True
    assert envelope["result"]["steps"][0]["name"] == "hypothesis"


def test_self_check_json(capsys):
    code, envelope = run_json(capsys, ["self-check"])
    assert code == 0
    result = envelope["result"]
    assert result["ok"] is True
    names = [suite["name"] for suite in result["suites"]]
    assert "dimension-triple-agreement" in names
    assert all(suite["violations"] == 0 for suite in result["suites"])


def test_sweep_json_small_grid_agrees(capsys):
    # size-1 grid: only the linear shape, where rule and oracle always agree
    code, envelope = run_json(
        capsys,
        ["sweep", "--max-size", "1", "--max-k", "3", "--max-n", "5", "--with-oracle"],
    )
    assert code == 0
    result = envelope["result"]
    assert result["disagreements"] == 0
    assert result["total"] == result["compared"] > 0


def test_sweep_exit_code_on_disagreement(capsys):
    # the skew two-form family disagrees with the oracle at n = 2k-1, and the
    # sweep reports it through the dedicated exit code
    code, envelope = run_json(
        capsys,
        ["sweep", "--max-size", "2", "--max-k", "2", "--max-n", "4", "--with-oracle"],
    )
    assert code == 3
    result = envelope["result"]
    assert result["disagreements"] == 1
    bad = [case for case in result["cases"] if case["agree"] is False]
    assert bad == [
        {
            "lambda": [1, 1], "k": 2, "n": 3, "isotropic": False,
            "rule": "exception-degree-2", "oracle_nonzero": True, "agree": False,
        }
    ]


def test_usage_errors_exit_2(capsys):
    assert run(["dim", "--lambda", "0"]) == 2
    capsys.readouterr()
    assert run(["decide", "--lambda", "2,1", "--k", "3"]) == 2
    capsys.readouterr()
    assert run(["no-such-command"]) == 2
    capsys.readouterr()
    assert run(["dim", "--lambda", "1,2", "--n", "3"]) == 2
    err = capsys.readouterr().err
    assert "increase" in err


def test_domain_errors_exit_1(capsys):
    assert run(["decide", "--lambda", "", "--k", "2", "--n", "4"]) == 1
    captured = capsys.readouterr()
    assert "error:" in captured.err

    assert run(["oracle", "--lambda", "1,1,1", "--k", "2", "--n", "5"]) == 1
    assert run(["decide", "--lambda", "2,1", "--k", "3", "--n", "2"]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_byte_determinism(capsys):
    outputs = []
    for _ in range(2):
        code = run(["decide", "--lambda", "2,2", "--k", "4", "--n", "9", "--json"])
        assert code == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]

    outputs = []
    for _ in range(2):
        run(["self-check"])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_human_tables(capsys):
    assert run(["decide", "--lambda", "2,1", "--k", "3", "--n", "6"]) == 0
    out = capsys.readouterr().out
    assert "main-theorem" in out
    assert "lambda" in out

    assert run(["dim", "--lambda", "2,1", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "8" in out


def test_timing_flag_reports_measured_time(capsys):
    code = run(["dim", "--lambda", "2,1", "--n", "3", "--json", "--timing"])
    assert code == 0
    envelope = json.loads(capsys.readouterr().out)
    assert isinstance(envelope["timing_ms"], int)
    assert envelope["timing_ms"] >= 0


def test_enumeration_cap_flag(capsys):
    code = run(
        ["oracle", "--lambda", "2,1", "--k", "3", "--n", "6",
         "--max-tableaux", "7"]
    )
    assert code == 1
    assert "cap" in capsys.readouterr().err
