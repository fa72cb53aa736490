"""CLI surface: exit codes, formats, file flows, figures, and report
round-trips."""

import json

import pytest

from contextlab.cli import main
from contextlab.reporting import CheckResult, ReportDocument, checks_to_csv


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestDemo:
    def test_pigeonhole_passes(self, capsys):
        code, out = run(capsys, "demo", "pigeonhole-original")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] is True
        assert doc["kind"] == "scenario"

    def test_unknown_scenario_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["demo", "nosuch"])
        assert exc.value.code == 2

    def test_si_parameters(self, capsys):
        code, out = run(capsys, "demo", "pigeonhole-si", "--s", "+,+,-", "--t", "+,-,+")
        assert code == 0
        doc = json.loads(out)
        assert doc["inputs"] == {"s": [1, 1, -1], "t": [1, -1, 1]}

    def test_bad_signs_usage_error(self, capsys):
        code, _ = run(capsys, "demo", "pigeonhole-si", "--s", "bogus")
        assert code == 2

    def test_expect_contract(self, capsys):
        code, _ = run(
            capsys, "demo", "ghz-pentagram", "--s", "+,+,+", "--t", "+,+,+",
            "--expect", "infeasible",
        )
        assert code == 0
        code, _ = run(
            capsys, "demo", "ghz-pentagram", "--s", "+,+,+", "--t", "+,+,+",
            "--expect", "feasible",
        )
        assert code == 1

    def test_markdown_format(self, capsys):
        code, out = run(capsys, "demo", "cheshire-cat", "--format", "md")
        assert code == 0
        assert "Verdict: PASS" in out

    def test_success_probability(self, capsys):
        code, out = run(capsys, "demo", "success-probability")
        assert code == 0
        doc = json.loads(out)
        assert abs(doc["data"]["gain_percent"] - 300.0) < 1e-6

    def test_qudit_demo_defaults(self, capsys):
        code, out = run(capsys, "demo", "qudit-pigeonhole")
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["feasible"] is True

    def test_figures_written(self, capsys, tmp_path):
        figdir = tmp_path / "figs"
        code, _ = run(
            capsys, "demo", "cheshire-cat", "--figures", str(figdir),
            "--out", str(tmp_path / "r.json"),
        )
        assert code == 0
        assert (figdir / "cheshire-cat.png").stat().st_size > 0


class TestSweep:
    def test_cheshire_sweep(self, capsys):
        code, out = run(capsys, "sweep", "cheshire-cat-si")
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["count"] == 16

    def test_pentagram_sweep_feasible_half(self, capsys):
        code, out = run(capsys, "sweep", "ghz-pentagram")
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["feasible"] == 32


class TestFileFlows:
    @pytest.fixture()
    def exported(self, capsys, tmp_path):
        code, _ = run(capsys, "export-builtins", "--dir", str(tmp_path))
        assert code == 0
        return tmp_path

    def test_ks_search_file(self, capsys, exported):
        code, out = run(
            capsys, "ks-search", str(exported / "rays34.json"),
            "--preassign", "psi_i=1,psi_f=1", "--expect", "unsat",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["satisfiable"] is False

    def test_ks_search_expect_violated(self, capsys, exported):
        code, _ = run(
            capsys, "ks-search", str(exported / "rays34.json"),
            "--preassign", "psi_i=1,psi_f=1", "--expect", "sat",
        )
        assert code == 1

    def test_ks_search_unknown_label(self, capsys, exported):
        code, _ = run(
            capsys, "ks-search", str(exported / "rays34.json"),
            "--preassign", "nolabel=1",
        )
        assert code == 2

    def test_verify_config_file(self, capsys, exported):
        code, out = run(capsys, "verify-config", str(exported / "pm_square_2q.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["grand_phase"] == 2
        assert doc["data"]["contradiction"] is True

    def test_verify_config_qudit_d4(self, capsys, exported):
        code, out = run(
            capsys, "verify-config", str(exported / "qudit_triangle_d4.json")
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["grand_phase"] == 4

    def test_ghz_check_file(self, capsys, exported):
        code, out = run(capsys, "ghz-check", str(exported / "triangle_d2.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["data"]["is_ghz"] is True
        assert doc["data"]["vertex_sums"] == [0, 0, 0]

    def test_missing_file_usage_error(self, capsys):
        code, _ = run(capsys, "ks-search", "missing.json")
        assert code == 2
        code, _ = run(capsys, "verify-config", "missing.json")
        assert code == 2
        code, _ = run(capsys, "ghz-check", "missing.json")
        assert code == 2

    def test_malformed_json_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json", encoding="utf-8")
        code = main(["ghz-check", str(bad)])
        captured = capsys.readouterr()
        assert code == 2
        assert "line" in captured.err  # position diagnostics


class TestReportBattery:
    def test_full_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        figdir = tmp_path / "figures"
        code, _ = run(
            capsys, "report", "--out", str(out_path), "--figures", str(figdir),
        )
        assert code == 0
        doc = ReportDocument.from_json(out_path.read_text())
        assert doc.verdict
        assert any("48-ray" in c.name for c in doc.checks)
        csv_path = tmp_path / "report.csv"
        assert csv_path.exists()
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0].startswith("report,check,passed")
        assert len(lines) == len(doc.checks) + 1
        pngs = list(figdir.glob("*.png"))
        assert len(pngs) >= 6


class TestReporting:
    def test_json_round_trip_exact(self):
        doc = ReportDocument(
            kind="demo",
            identifier="x",
            inputs={"s": [1, -1]},
            checks=[CheckResult("c", True, 1e-12, 1e-10, "d")],
            trace=["step"],
            data={"k": [0.5, -0.25]},
        )
        again = ReportDocument.from_json(doc.to_json())
        assert again.to_dict() == doc.to_dict()
        assert again == doc

    def test_verdict_is_conjunction(self):
        doc = ReportDocument(kind="demo", identifier="x")
        doc.checks.append(CheckResult("a", True))
        assert doc.verdict
        doc.checks.append(CheckResult("b", False))
        assert not doc.verdict

    def test_csv_has_residual_and_tolerance(self):
        doc = ReportDocument(kind="demo", identifier="x")
        doc.checks.append(CheckResult("a", True, 3.5e-12, 1e-10))
        text = checks_to_csv([doc])
        assert "3.5e-12" in text and "1e-10" in text
