"""Command-line behavior: exit codes, outputs, determinism."""

import json
import subprocess
import sys

import pytest

from cropgate.cli import EXIT_DOMAIN, EXIT_INPUT, EXIT_OK, main

GASES_ONLY = """
[flow.diesel]
unit = L
gwp100 = 0.5866
pe_renewable = 0.75
pe_nonrenewable = 49.3
"""

BROKEN_FARM = """
[farm
name = "x"
"""

UNBALANCED_FARM = """
[farm]
name = "x"
total_area = 50 ha
marginal_area = 10 ha
marginal_pair = a, b

[crop.a]
land_class = marginal
soc_equilibrium = true

[crop.b]
land_class = marginal
soc_equilibrium = true
"""


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_shipped_farm_is_ok(self, farm_path, capsys):
        code, out, err = run(["validate", "--farm", farm_path], capsys)
        assert code == EXIT_OK
        assert "ok: 7 crops on 302 ha" in out

    def test_semantic_problems_exit_1(self, tmp_path, capsys):
        farm = tmp_path / "farm.cg"
        farm.write_text(UNBALANCED_FARM, encoding="utf-8")
        code, out, err = run(["validate", "--farm", str(farm)], capsys)
        assert code == EXIT_DOMAIN
        assert "invalid:" in out
        assert "total_area" in out

    def test_grammar_problems_exit_2(self, tmp_path, capsys):
        farm = tmp_path / "farm.cg"
        farm.write_text(BROKEN_FARM, encoding="utf-8")
        code, out, err = run(["validate", "--farm", str(farm)], capsys)
        assert code == EXIT_INPUT
        assert "syntax error:" in err

    def test_unreadable_file_exit_2(self, tmp_path, capsys):
        code, out, err = run(
            ["validate", "--farm", str(tmp_path / "absent.cg")], capsys)
        assert code == EXIT_INPUT
        assert "cannot read" in err


class TestAssess:
    def test_writes_the_four_files(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["assess", "--farm", farm_path, "--crop", "tall_wheatgrass",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_OK
        listed = out.strip().splitlines()
        assert [p.rsplit("/", 1)[-1] for p in listed] == [
            "balance.csv", "gwp_phases.csv", "energy_phases.csv",
            "result.json"]
        payload = json.loads((tmp_path / "result.json").read_text())
        assert payload["manifest"]["flags"]["command"] == "assess"
        assert payload["manifest"]["flags"]["crop"] == "tall_wheatgrass"

    def test_json_format_writes_only_json(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["assess", "--farm", farm_path, "--crop", "rye",
             "--out", str(tmp_path), "--format", "json"], capsys)
        assert code == EXIT_OK
        assert [p.name for p in sorted(tmp_path.iterdir())] == ["result.json"]

    def test_crop_flag_is_mandatory_and_single(self, farm_path, tmp_path,
                                               capsys):
        code, _, err = run(
            ["assess", "--farm", farm_path, "--out", str(tmp_path)], capsys)
        assert code == EXIT_INPUT
        assert "exactly one --crop" in err
        code, _, err = run(
            ["assess", "--farm", farm_path, "--crop", "rye", "--crop",
             "wheat", "--out", str(tmp_path)], capsys)
        assert code == EXIT_INPUT

    def test_unknown_crop_exit_1(self, farm_path, tmp_path, capsys):
        code, _, err = run(
            ["assess", "--farm", farm_path, "--crop", "miscanthus",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_DOMAIN
        assert "no crop named" in err

    def test_missing_factor_record_exit_1(self, farm_path, tmp_path, capsys):
        factors = tmp_path / "thin.cg"
        factors.write_text(GASES_ONLY, encoding="utf-8")
        code, _, err = run(
            ["assess", "--farm", farm_path, "--factors", str(factors),
             "--crop", "rye", "--out", str(tmp_path)], capsys)
        assert code == EXIT_DOMAIN
        assert "no factor record" in err

    def test_cutoff_missing_downgrades_to_notes(self, farm_path, tmp_path,
                                                capsys):
        factors = tmp_path / "thin.cg"
        factors.write_text(GASES_ONLY, encoding="utf-8")
        code, out, err = run(
            ["assess", "--farm", farm_path, "--factors", str(factors),
             "--crop", "rye", "--out", str(tmp_path), "--cutoff-missing"],
            capsys)
        assert code == EXIT_OK
        assert "cut off at zero burden" in err
        payload = json.loads((tmp_path / "result.json").read_text())
        assert "npk_8_24_8" in payload["gwp"]["missing_flows"]

    def test_horizon_flag_reaches_manifest_and_model(self, farm_path,
                                                     tmp_path, capsys):
        code, out, err = run(
            ["assess", "--farm", farm_path, "--crop", "tall_wheatgrass",
             "--out", str(tmp_path), "--horizon", "8"], capsys)
        assert code == EXIT_OK
        payload = json.loads((tmp_path / "result.json").read_text())
        assert payload["manifest"]["flags"]["horizon"] == "8"

    def test_byte_identical_reruns(self, farm_path, tmp_path, capsys):
        for sub in ("one", "two"):
            code, _, _ = run(
                ["assess", "--farm", farm_path, "--crop", "rye",
                 "--out", str(tmp_path / sub)], capsys)
            assert code == EXIT_OK
        for name in ("balance.csv", "gwp_phases.csv", "energy_phases.csv",
                     "result.json"):
            assert (tmp_path / "one" / name).read_bytes() \
                == (tmp_path / "two" / name).read_bytes(), name


class TestCompare:
    def test_defaults_to_the_farm_pair(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["compare", "--farm", farm_path, "--out", str(tmp_path)], capsys)
        assert code == EXIT_OK
        lines = (tmp_path / "comparison.csv").read_text().splitlines()
        assert lines[1] == "metric,tall_wheatgrass,rye,difference"
        assert "balance_with_cap_eur_ha,156.19,145.13,11.05" in lines

    def test_explicit_pair_keeps_order(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["compare", "--farm", farm_path, "--crop", "rye", "--crop",
             "tall_wheatgrass", "--out", str(tmp_path)], capsys)
        assert code == EXIT_OK
        lines = (tmp_path / "comparison.csv").read_text().splitlines()
        assert lines[1] == "metric,rye,tall_wheatgrass,difference"

    def test_single_crop_is_a_usage_error(self, farm_path, tmp_path, capsys):
        code, _, err = run(
            ["compare", "--farm", farm_path, "--crop", "rye",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_INPUT
        assert "compare takes" in err


class TestSweep:
    def test_fraction_and_plain_shares(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["sweep", "--farm", farm_path, "--shares", "40/302,0.5",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_OK
        lines = (tmp_path / "sweep.csv").read_text().splitlines()
        assert lines[2].startswith("0.132450,")
        assert lines[2].endswith(",0.5")
        assert lines[3].startswith("0.500000,")
        assert lines[3].endswith(",2.3")

    def test_range_is_inclusive(self, farm_path, tmp_path, capsys):
        code, out, err = run(
            ["sweep", "--farm", farm_path, "--range", "0.1:0.5:0.2",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_OK
        lines = (tmp_path / "sweep.csv").read_text().splitlines()
        assert [line.split(",")[0] for line in lines[2:]] \
            == ["0.100000", "0.300000", "0.500000"]

    @pytest.mark.parametrize("argv_tail", [
        ["--shares", ""],
        ["--shares", "abc"],
        ["--shares", "1/0"],
        ["--range", "0.1:0.5"],
        ["--range", "0.1:0.5:0"],
        ["--range", "0.6:0.5:0.1"],
    ])
    def test_malformed_share_specs_exit_2(self, farm_path, tmp_path, capsys,
                                          argv_tail):
        code, _, err = run(
            ["sweep", "--farm", farm_path, "--out", str(tmp_path)]
            + argv_tail, capsys)
        assert code == EXIT_INPUT
        assert err.startswith("error:")

    def test_share_beyond_the_farm_exit_1(self, farm_path, tmp_path, capsys):
        code, _, err = run(
            ["sweep", "--farm", farm_path, "--shares", "1.5",
             "--out", str(tmp_path)], capsys)
        assert code == EXIT_DOMAIN
        assert "outside [0, 1]" in err


class TestParser:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exit_info:
            main(["--version"])
        assert exit_info.value.code == 0
        assert "cropgate 1.0.0" in capsys.readouterr().out

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exit_info:
            main(["harvest"])
        assert exit_info.value.code == 2

    def test_module_entry_point(self, farm_path):
        proc = subprocess.run(
            [sys.executable, "-m", "cropgate.cli", "validate", "--farm",
             farm_path], capture_output=True, text=True)
        assert proc.returncode == 0
        assert "ok: 7 crops" in proc.stdout
