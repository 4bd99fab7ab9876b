# tests/models/test_job_spec.py
import json
import os

import pytest
from pydantic import ValidationError

from hecke_spectra.errors import InvalidParameter, JobFileError, UnknownPreset
from hecke_spectra.models.job_spec import (AlgebraSection, JobSpec, MapSection, PointModel, load_job,
                                           resolve_cuspidal)
from hecke_spectra.spectral.presets import iwahori_spec

# --- Test Fixtures / Mock Data ---

A1_JOB = {
    "version": "1",
    "command": "stm verify",
    "algebras": {
        "cuspidal": {"preset": "T0", "normalization": "unit", "cuspidal": "PGL2[aniso]"},
        "iwahori": {"preset": "A1-adj"},
    },
    "maps": {
        "point": {"source": "cuspidal", "target": "iwahori", "parabolic": [0], "point": {"s": [0], "y": [1]}},
    },
    "options": {"map": "point"},
}


def write_job(tmp_path, data, name="job.json") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


class TestJobSpec:
    def test_valid_job(self):
        job = JobSpec.model_validate(A1_JOB)
        assert job.command == "stm verify"
        assert job.maps["point"].point.s == ["0"]
        assert job.options.bound == 2

    def test_unknown_keys_are_rejected(self):
        for patch in ({"extra": 1}, {"options": {"bounds": 3}}):
            with pytest.raises(ValidationError):
                JobSpec.model_validate({**A1_JOB, **patch})
        broken = json.loads(json.dumps(A1_JOB))
        broken["algebras"]["iwahori"]["kplus"] = "2"
        with pytest.raises(ValidationError):
            JobSpec.model_validate(broken)

    def test_unknown_command(self):
        with pytest.raises(ValidationError):
            JobSpec.model_validate({**A1_JOB, "command": "plancherel"})

    def test_references_must_resolve(self):
        broken = json.loads(json.dumps(A1_JOB))
        broken["maps"]["point"]["target"] = "missing"
        with pytest.raises(ValidationError):
            JobSpec.model_validate(broken)
        with pytest.raises(ValidationError):
            JobSpec.model_validate({**A1_JOB, "options": {"map": "nowhere"}})

    def test_rationals(self):
        assert PointModel(s=[0, "1/2"], y=[1]).s == ["0", "1/2"]
        with pytest.raises(ValidationError):
            PointModel(s=["one half"], y=["1"])
        with pytest.raises(ValidationError):
            PointModel(s=["1/0"], y=["1"])

    def test_algebra_name(self):
        job = JobSpec.model_validate(A1_JOB)
        with pytest.raises(JobFileError):
            job.algebra_name()
        single = JobSpec.model_validate({"algebras": {"a": {"preset": "G2"}}})
        assert single.algebra_name() == "a"


class TestSections:
    def test_iwahori_algebra(self):
        spec = AlgebraSection(preset="A1-adj").build()
        assert spec == iwahori_spec("A1-adj")
        assert spec.omega_order == 2

    def test_cuspidal_algebra(self, cuspidal_value):
        spec = AlgebraSection(preset="T0", normalization="unit", cuspidal="PGL2[aniso]").build()
        assert spec.d == cuspidal_value(1)

    def test_explicit_d_overrides(self, cuspidal_value):
        text = str(cuspidal_value(2))
        spec = AlgebraSection(preset="T0", d=text).build()
        assert spec.d == cuspidal_value(2)

    def test_unequal_parameters(self):
        spec = AlgebraSection(preset="C1", k_plus={"0": "3"}, k_minus={"0": 1}).build()
        assert spec.params.minus(0) == 1

    def test_unknown_preset(self):
        with pytest.raises(UnknownPreset):
            AlgebraSection(preset="E9").build()

    def test_map_coset(self, a1_iwahori):
        section = MapSection(source="s", target="t", parabolic=[0], point=PointModel(s=["0"], y=["1"]))
        coset = section.coset(a1_iwahori)
        assert coset.certificate.residual
        assert coset.dim == 0

    def test_resolve_cuspidal(self):
        assert resolve_cuspidal("PGL4[aniso]").omega_p == 4
        assert resolve_cuspidal("G2[1]").label == "G2[1]"
        with pytest.raises(InvalidParameter):
            resolve_cuspidal("PGL1[aniso]")


class TestLoadJob:
    def test_round_trip_through_a_file(self, tmp_path):
        assert load_job(write_job(tmp_path, A1_JOB)) == JobSpec.model_validate(A1_JOB)

    def test_shipped_jobs_load(self, jobs_dir):
        names = sorted(os.listdir(jobs_dir))
        assert names
        for name in names:
            assert load_job(os.path.join(jobs_dir, name)).command is not None

    def test_missing_file(self, tmp_path):
        with pytest.raises(JobFileError):
            load_job(str(tmp_path / "absent.json"))

    def test_bad_json(self, tmp_path):
        with pytest.raises(JobFileError):
            load_job(write_job(tmp_path, "{"))

    def test_bad_encoding(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes('{"version": "1", "command": "mu", "algebras": {"ä": {"preset": "A1-adj"}}}'.encode("latin-1"))
        with pytest.raises(JobFileError) as excinfo:
            load_job(str(path))
        assert excinfo.value.context["path"] == str(path)

    def test_not_an_object(self, tmp_path):
        with pytest.raises(JobFileError):
            load_job(write_job(tmp_path, "[1, 2]"))

    def test_validation_errors_name_the_section(self, tmp_path):
        broken = json.loads(json.dumps(A1_JOB))
        broken["algebras"]["iwahori"]["omega"] = 0
        with pytest.raises(JobFileError) as excinfo:
            load_job(write_job(tmp_path, broken))
        assert "algebras" in excinfo.value.context["section"]
