# tests/cli/test_job_runner.py
import json
import os

import pytest

from hecke_spectra.cli.job_runner import build_parser, main_cli, run
from hecke_spectra.cli.report_logger import ReportLogger
from hecke_spectra.errors import NotResidual

# --- Test Fixtures / Mock Data ---

SHIPPED_JOBS = [
    (["residual"], "c1_residual.json"),
    (["fdeg"], "a2_iwahori.json"),
    (["match"], "g2_match.json"),
    (["gamma"], "a2_gamma.json"),
    (["stm", "verify"], "a2_cuspidal_stm.json"),
    (["stm", "discover"], "a1_discover.json"),
    (["stm", "compose"], "a1_compose.json"),
]

NOT_SPECTRAL_JOB = {
    "command": "stm verify",
    "algebras": {
        "plain": {"preset": "T0", "normalization": "unit"},
        "iwahori": {"preset": "A1-adj"},
    },
    "maps": {"point": {"source": "plain", "target": "iwahori", "parabolic": [0], "point": {"s": ["0"], "y": ["1"]}}},
}

NOT_UTF8_JOB = b'{"version": "1", "algebras": {"c1": {"preset": "C1\xff"}}}'


def run_to_json(command, jobfile, out_path, *extra) -> dict:
    status = main_cli([*command, jobfile, "--quiet", "--json", out_path, *extra])
    with open(out_path, "r", encoding="utf-8") as f:
        report = json.load(f)
    assert report["exit_status"] == status
    return report


class TestParser:
    def test_stm_subcommands(self):
        args = build_parser().parse_args(["stm", "discover", "job.json", "--bound", "1"])
        assert (args.command, args.stm_command, args.bound) == ("stm", "discover", 1)

    def test_flags(self):
        args = build_parser().parse_args(["mu", "job.json", "--threads", "4", "--ledger", "--quiet"])
        assert args.threads == 4 and args.ledger and args.quiet
        assert args.json is None

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["plancherel", "job.json"])


class TestShippedJobs:
    @pytest.mark.parametrize("command, name", SHIPPED_JOBS, ids=[name for _, name in SHIPPED_JOBS])
    def test_runs_and_is_deterministic(self, command, name, jobs_dir, tmp_path):
        jobfile = os.path.join(jobs_dir, name)
        first = run_to_json(command, jobfile, str(tmp_path / "first.json"))
        assert first["status"] == "ok", first["error"]
        assert first["rows"]
        run_to_json(command, jobfile, str(tmp_path / "second.json"))
        assert (tmp_path / "first.json").read_text() == (tmp_path / "second.json").read_text()

    @pytest.mark.parametrize("command, name", SHIPPED_JOBS, ids=[name for _, name in SHIPPED_JOBS])
    def test_report_does_not_depend_on_threads(self, command, name, jobs_dir, tmp_path):
        jobfile = os.path.join(jobs_dir, name)
        single = run_to_json(command, jobfile, str(tmp_path / "single.json"), "--threads", "1")
        assert "threads" not in single
        run_to_json(command, jobfile, str(tmp_path / "pooled.json"), "--threads", "4")
        assert (tmp_path / "single.json").read_bytes() == (tmp_path / "pooled.json").read_bytes()

    def test_cuspidal_map_is_verified(self, jobs_dir, tmp_path):
        report = run_to_json(["stm", "verify"], os.path.join(jobs_dir, "a2_cuspidal_stm.json"),
                             str(tmp_path / "out.json"))
        verification = report["rows"][0]["verification"]
        assert verification["status"] == "verified"
        assert verification["D"] in ("3", "-3")
        assert len(verification["diagnostics"]["weyl_witnesses"]) == 0

    def test_compose_multiplies_constants(self, jobs_dir, tmp_path):
        report = run_to_json(["stm", "compose"], os.path.join(jobs_dir, "a1_compose.json"),
                             str(tmp_path / "out.json"))
        row = report["rows"][0]
        assert row["verification"]["D"] == row["outer"]["D"]
        assert row["inner"]["D"] == "1"

    def test_discovery_bound_flag(self, jobs_dir, tmp_path):
        report = run_to_json(["stm", "discover"], os.path.join(jobs_dir, "a1_discover.json"),
                             str(tmp_path / "out.json"), "--bound", "0")
        assert report["status"] == "ok"
        assert [row["kind"] for row in report["rows"]].count("stm") == 2

    def test_ledger_flag(self, jobs_dir, tmp_path):
        report = run_to_json(["mu"], os.path.join(jobs_dir, "c1_residual.json"), str(tmp_path / "out.json"),
                             "--ledger")
        assert report["ledger"]["q_w0"] == "longest"
        assert report["sections"]["algebras.c1"]["preset"] == "C1"

    def test_text_output(self, jobs_dir, capsys):
        assert main_cli(["fdeg", os.path.join(jobs_dir, "a2_iwahori.json"), "--quiet"]) == 0
        assert "fdeg at" in capsys.readouterr().out


class TestFailures:
    def test_missing_jobfile(self, tmp_path):
        report = run_to_json(["mu"], str(tmp_path / "absent.json"), str(tmp_path / "out.json"))
        assert report["exit_status"] == 2
        assert report["status"] == "input_error"
        assert report["error"]["error"] == "JobFileError"

    def test_mathematical_failure(self, tmp_path):
        jobfile = tmp_path / "job.json"
        jobfile.write_text(json.dumps(NOT_SPECTRAL_JOB))
        report = run_to_json(["stm", "verify"], str(jobfile), str(tmp_path / "out.json"))
        assert report["exit_status"] == 1
        assert report["status"] == "mathematical_failure"
        assert report["error"]["error"] == "NonConstantRatio"

    def test_errors_go_to_stderr(self, tmp_path, capsys):
        assert main_cli(["mu", str(tmp_path / "absent.json"), "--quiet"]) == 2
        assert "error: JobFileError" in capsys.readouterr().err

    def test_jobfile_that_is_not_utf8(self, tmp_path):
        jobfile = tmp_path / "job.json"
        jobfile.write_bytes(NOT_UTF8_JOB)
        report = run_to_json(["mu"], str(jobfile), str(tmp_path / "out.json"))
        assert report["exit_status"] == 2
        assert report["error"]["error"] == "JobFileError"

    def test_nonpositive_thread_count(self, jobs_dir, tmp_path):
        report = run_to_json(["residual"], os.path.join(jobs_dir, "c1_residual.json"), str(tmp_path / "out.json"),
                             "--threads", "0")
        assert report["exit_status"] == 2
        assert report["error"]["error"] == "InvalidParameter"

    def test_logger_records_errors(self):
        log = ReportLogger("fdeg", "job.json")
        log.log_error(NotResidual("not residual", order=0))
        results = log.get_results()
        assert log.exit_status == 1
        assert results["error"]["order"] == 0

    def test_run_without_the_cli(self, jobs_dir):
        log = ReportLogger("residual", "c1_residual.json")
        assert run("residual", os.path.join(jobs_dir, "c1_residual.json"), log) == 0
        assert all(row["kind"] == "residual_coset" for row in log.rows)
