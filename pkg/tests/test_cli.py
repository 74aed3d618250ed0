import json

import pytest

import ppvlab
from ppvlab.cli import EXIT_DOMAIN, EXIT_MODEL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDiagnose:
    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "diagnose", "--pi", "0.05", "--alpha", "0.05",
                           "--power", "0.5", "--tau", "0.95")
        assert code == EXIT_OK
        assert "psi               36.1" in out
        assert "regime            majority-false" in out

    def test_json_matches_library_exactly(self, capsys):
        code, out, _ = run(capsys, "diagnose", "--pi", "0.1", "--alpha", "0.05",
                           "--power", "0.35", "--tau", "0.95", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        d = ppvlab.diagnose(ppvlab.StudyContext(0.1, 0.95), ppvlab.OperatingPoint(0.05, 0.35))
        assert payload == d.to_dict()

    def test_json_byte_stable(self, capsys):
        argv = ["diagnose", "--pi", "0.1", "--alpha", "0.05", "--power", "0.35",
                "--tau", "0.95", "--json"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestBridge:
    def test_predict(self, capsys):
        code, out, _ = run(capsys, "bridge", "predict", "--ppv", "0.44",
                           "--alpha-r", "0.05", "--power-r", "0.75", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["rate"] == pytest.approx(0.358)

    def test_invert(self, capsys):
        code, out, _ = run(capsys, "bridge", "invert", "--rate", "0.36",
                           "--alpha-r", "0.05", "--power-r", "0.75", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["ppv"] == pytest.approx(0.443, abs=5e-4)

    def test_out_of_model_exit_code(self, capsys):
        code, _, err = run(capsys, "bridge", "invert", "--rate", "0.9",
                           "--alpha-r", "0.05", "--power-r", "0.75")
        assert code == EXIT_MODEL
        assert "outside" in err


class TestPipeline:
    def test_depth_fixture(self, capsys):
        code, out, _ = run(capsys, "pipeline", "--pi", "0.10", "--alpha", "0.05",
                           "--power", "0.80", "--tau", "0.95", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["k_star"] == 2
        assert payload["rows"][0]["regime"] == "infeasible"
        assert payload["rows"][1]["regime"] == "feasible"

    def test_no_finite_depth_is_model_violation(self, capsys):
        code, _, err = run(capsys, "pipeline", "--pi", "0.10", "--alpha", "0.05",
                           "--power", "0.05", "--tau", "0.95")
        assert code == EXIT_MODEL


class TestExitCodes:
    def test_usage_error_on_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == EXIT_USAGE

    def test_usage_error_on_missing_flags(self, capsys):
        code, _, err = run(capsys, "diagnose", "--pi", "0.1")
        assert code == EXIT_USAGE
        assert "--alpha" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "diagnose", "--pi", "0", "--alpha", "0.05",
                           "--power", "0.5", "--tau", "0.95")
        assert code == EXIT_DOMAIN
        assert "strictly inside (0, 1)" in err


class TestConfigFile:
    def test_config_supplies_defaults_and_flags_override(self, capsys, tmp_path):
        cfg = tmp_path / "design.json"
        cfg.write_text(json.dumps({"pi": 0.1, "alpha": 0.05, "power": 0.35, "tau": 0.95}))
        code, out, _ = run(capsys, "diagnose", "--config", str(cfg), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["leverage"] == pytest.approx(7.0)
        # explicit flag wins over the file value
        code, out, _ = run(capsys, "diagnose", "--config", str(cfg),
                           "--power", "0.80", "--json")
        assert json.loads(out)["leverage"] == pytest.approx(16.0)

    def test_dashed_keys_accepted(self, capsys, tmp_path):
        cfg = tmp_path / "plan.json"
        cfg.write_text(json.dumps({"pi-c": 0.1, "leverage": 7.0, "ppv0": 0.125,
                                   "k-max": 3}))
        code, out, _ = run(capsys, "generations", "--config", str(cfg), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["classification"] == "degenerative"

    def test_missing_file_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "diagnose", "--config", "/nonexistent.json")
        assert code == EXIT_USAGE


class TestLandscape:
    def test_csv_export(self, capsys, tmp_path):
        out_csv = tmp_path / "grid.csv"
        code, out, _ = run(capsys, "landscape", "--tau", "0.95",
                           "--lambda-min", "1", "--lambda-max", "100",
                           "--pi-min", "0.01", "--pi-max", "0.5",
                           "--resolution", "4", "--csv", str(out_csv))
        assert code == EXIT_OK
        lines = out_csv.read_text().splitlines()
        assert lines[0] == "lambda,pi,ppv,regime"
        assert len(lines) == 17
        assert lines[1].split(",")[3] in {"feasible", "infeasible", "majority_false"}


class TestSearchAndConfound:
    def test_search_values(self, capsys):
        code, out, _ = run(capsys, "search", "--alpha", "0.05", "--power", "0.8",
                           "--m", "3", "--q", "0.5", "--json")
        payload = json.loads(out)
        assert payload["alpha_eff"] == pytest.approx(0.0850, abs=5e-5)
        assert payload["discrimination_loss"] == pytest.approx(0.653, abs=5e-4)

    def test_confound_table(self, capsys):
        code, out, _ = run(capsys, "confound", "--pi", "0.1", "--alpha", "0.05",
                           "--bias", "0.1", "--theta1", "0.3",
                           "--n", "100", "--n", "1000000", "--json")
        payload = json.loads(out)
        assert payload["points"][0]["alpha_eff"] == pytest.approx(0.2595, abs=5e-5)
        assert payload["points"][1]["ppv"] == pytest.approx(0.10, abs=0.01)


class TestLifetimeFlags:
    def test_combined_rate(self, capsys):
        code, out, _ = run(capsys, "lifetime", "--pi0", "0.7", "--decay-rate", "0.05",
                           "--tau", "0.95", "--alpha", "0.05", "--power", "0.8", "--json")
        assert json.loads(out)["lifetime_years"] == pytest.approx(5.08, abs=0.01)

    def test_split_rates(self, capsys):
        code, out, _ = run(capsys, "lifetime", "--pi0", "0.7", "--gamma", "0.03",
                           "--delta", "0.02", "--tau", "0.95", "--alpha", "0.05",
                           "--power", "0.8", "--json")
        assert json.loads(out)["lifetime_years"] == pytest.approx(5.08, abs=0.01)

    def test_neither_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "lifetime", "--pi0", "0.7", "--tau", "0.95",
                         "--alpha", "0.05", "--power", "0.8")
        assert code == EXIT_USAGE


class TestReportCommand:
    ALZ = ["report", "--tau", "0.95", "--pi-low", "0.05", "--pi-high", "0.05",
           "--alpha", "0.05", "--power", "0.5", "--depth", "1",
           "--identification", "randomized", "--json"]

    def test_flagged_design(self, capsys):
        code, out, _ = run(capsys, *self.ALZ)
        payload = json.loads(out)
        assert payload["verdict"] == "flag"
        assert payload["ceiling_high"] == pytest.approx(0.513, abs=1e-3)

    def test_repaired_design_passes(self, capsys):
        code, out, _ = run(capsys, "report", "--tau", "0.95", "--pi-low", "0.05",
                           "--pi-high", "0.05", "--alpha", "0.005", "--power", "0.5",
                           "--depth", "2", "--identification", "randomized", "--json")
        payload = json.loads(out)
        assert payload["verdict"] == "pass"
        assert payload["pipeline_leverage"] == pytest.approx(10_000.0)
        assert payload["pipeline_ppv_high"] > 0.99

    def test_high_prior_single_study_passes(self, capsys):
        code, out, _ = run(capsys, "report", "--tau", "0.95", "--pi-low", "0.55",
                           "--pi-high", "0.6", "--alpha", "0.05", "--power", "0.8",
                           "--depth", "1", "--identification", "randomized", "--json")
        assert json.loads(out)["verdict"] == "pass"

    def test_observational_adjusted_is_flagged(self, capsys):
        code, out, _ = run(capsys, "report", "--tau", "0.95", "--pi-low", "0.55",
                           "--pi-high", "0.6", "--alpha", "0.05", "--power", "0.8",
                           "--depth", "1", "--identification", "observational-adjusted",
                           "--json")
        payload = json.loads(out)
        assert payload["verdict"] == "flag"
        assert any("identification" in f or "confounding" in f for f in payload["flags"])


class TestSimulateCommands:
    def test_ppv(self, capsys):
        code, out, _ = run(capsys, "simulate", "ppv", "--seed", "5", "--trials",
                           "50000", "--pi", "0.1", "--alpha", "0.05", "--power",
                           "0.35", "--json")
        payload = json.loads(out)
        assert abs(payload["estimate"] - 0.4375) <= 4 * payload["standard_error"]

    def test_spec_search(self, capsys):
        code, out, _ = run(capsys, "simulate", "spec-search", "--seed", "6",
                           "--trials", "50000", "--alpha", "0.05", "--power", "0.8",
                           "--m", "3", "--q", "0.5", "--json")
        payload = json.loads(out)
        assert abs(payload["alpha_eff"]["estimate"] - 0.0850) <= \
            4 * payload["alpha_eff"]["standard_error"]

    def test_generations(self, capsys):
        code, out, _ = run(capsys, "simulate", "generations", "--seed", "7",
                           "--cohort", "200000", "--k-max", "2", "--pi-c", "0.1",
                           "--leverage", "7", "--ppv0", "0.125", "--json")
        payload = json.loads(out)
        assert len(payload["rows"]) == 3
        assert payload["extinct"] is False

    def test_replication(self, capsys):
        code, out, _ = run(capsys, "simulate", "replication", "--seed", "8",
                           "--trials", "50000", "--pi", "0.1", "--alpha", "0.05",
                           "--power", "0.35", "--alpha-r", "0.05", "--power-r",
                           "0.75", "--json")
        payload = json.loads(out)
        assert abs(payload["estimate"] - 0.35625) <= 4 * payload["standard_error"]


def test_presets_listing(capsys):
    code = main(["presets", "--json"])
    out, _ = capsys.readouterr()
    payload = json.loads(out)
    assert len(payload["presets"]) == 7
    names = [p["name"] for p in payload["presets"]]
    assert "GWAS" in names and "Particle physics" in names
