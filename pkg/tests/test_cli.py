"""The maclab command: output schema, exit codes, determinism."""

import json

import pytest

from maclab.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


# ---------------------------------------------------------------------------
# query subcommands
# ---------------------------------------------------------------------------

def test_decompose_worked_example(capsys):
    rc, out, _ = run(capsys, "decompose", "--parts", "4,4,3,2", "--t", "3",
                     "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["core"] == [1]
    assert payload["quotient"] == [[1, 1], [], [2]]
    assert payload["t"] == 3
    assert payload["schema"] == "1"


def test_vcoding_worked_example(capsys):
    rc, out, _ = run(capsys, "vcoding", "--parts", "11,6,4,2,2,1,1,1,1,1",
                     "--g", "6", "--t", "2", "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["v"] == [16, 7]


def test_hooks_worked_example(capsys):
    rc, out, _ = run(capsys, "hooks", "--parts", "4,3,3,2", "--t", "3",
                     "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["hooks_mod_t"] == [3, 6]
    assert sorted(payload["hooks"]) == payload["hooks"]


def test_empty_parts_allowed(capsys):
    rc, out, _ = run(capsys, "decompose", "--parts", "", "--t", "2",
                     "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["core"] == [] and payload["quotient"] == [[], []]


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------

def test_invalid_parts_exit_two(capsys):
    rc, _, err = run(capsys, "decompose", "--parts", "2,3", "--t", "2")
    assert rc == 2
    assert "InvalidParts" in err


def test_unknown_identity_exit_two(capsys):
    rc, _, err = run(capsys, "verify", "--id", "NOPE", "--order", "2")
    assert rc == 2
    assert "UnknownIdentity" in err


def test_missing_rank_exit_two(capsys):
    rc, _, err = run(capsys, "verify", "--id", "MACDONALD_A", "--order", "2")
    assert rc == 2
    assert "UsageError" in err


def test_argparse_usage_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose"])  # missing required options
    assert exc.value.code == 2
    capsys.readouterr()


def test_mutation_exit_one(capsys):
    rc, out, _ = run(capsys, "verify", "--id", "QNO_A", "--order", "1",
                     "--mutate", "--format", "json")
    assert rc == 1
    payload, = json_lines(out)
    assert payload["ok"] is False
    assert payload["first_mismatch"] is not None
    assert "power" in payload["first_mismatch"]


# ---------------------------------------------------------------------------
# verification output
# ---------------------------------------------------------------------------

def test_verify_pass_json(capsys):
    rc, out, _ = run(capsys, "verify", "--id", "NO_CLASSICAL", "--order", "3",
                     "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["ok"] is True
    assert payload["identity"] == "NO_CLASSICAL"
    assert "seconds" not in payload  # byte-stable output


def test_verify_macdonald_with_rank(capsys):
    rc, out, _ = run(capsys, "verify", "--id", "MACDONALD_A", "--order", "2",
                     "--t", "2", "--format", "json")
    assert rc == 0
    payload, = json_lines(out)
    assert payload["identity"] == "MACDONALD_A"


def test_multi_id_sorted_and_parallel_identical(capsys):
    args = ("verify", "--id", "QNO_C,QNO_A", "--order", "1",
            "--format", "json")
    rc, serial, _ = run(capsys, *args)
    assert rc == 0
    ids = [p["identity"] for p in json_lines(serial)]
    assert ids == ["QNO_A", "QNO_C"]
    rc, parallel, _ = run(capsys, *args, "--workers", "2")
    assert rc == 0
    assert parallel == serial


def test_deterministic_output(capsys):
    args = ("verify", "--id", "NO_C", "--order", "2", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_pretty_format_summary_line(capsys):
    rc, out, _ = run(capsys, "verify", "--id", "NO_CLASSICAL", "--order", "2")
    assert rc == 0
    assert "NO_CLASSICAL: PASS" in out


def test_tsv_format(capsys):
    rc, out, _ = run(capsys, "hooks", "--parts", "2,1", "--format", "tsv")
    assert rc == 0
    header, values = out.splitlines()
    keys = header.split("\t")
    assert keys == sorted(keys)
    row = dict(zip(keys, values.split("\t")))
    assert json.loads(row["hooks"]) == [1, 1, 3]


def test_report_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc, _, _ = run(capsys, "verify", "--id", "NO_CLASSICAL", "--order", "2",
                   "--report", str(target))
    assert rc == 0
    payload = json.loads(target.read_text())
    assert payload["identity"] == "NO_CLASSICAL"
    assert payload["ok"] is True


def test_config_defaults_and_overrides(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"order": 2, "format": "json"}))
    rc, out, _ = run(capsys, "verify", "--id", "NO_CLASSICAL",
                     "--config", str(cfg))
    assert rc == 0
    payload, = json_lines(out)
    assert payload["order"] == 2
    # explicit flags beat config values
    rc, out, _ = run(capsys, "verify", "--id", "NO_CLASSICAL",
                     "--config", str(cfg), "--format", "pretty")
    assert rc == 0
    assert "NO_CLASSICAL: PASS" in out


def test_bad_config_exit_two(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("[1, 2]")
    rc, _, err = run(capsys, "verify", "--id", "NO_CLASSICAL", "--order", "2",
                     "--config", str(cfg))
    assert rc == 2
    assert "UsageError" in err
