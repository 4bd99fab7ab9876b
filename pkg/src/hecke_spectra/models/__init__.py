# src/hecke_spectra/models/__init__.py
from .job_spec import (COMMANDS, JOB_SCHEMA_VERSION, AlgebraSection, JobOptions, JobSpec, MapSection,
                       ParameterSection, PointModel, load_job, resolve_cuspidal)
from .report import REPORT_SCHEMA_VERSION, Report

__all__ = [
    "COMMANDS", "JOB_SCHEMA_VERSION", "AlgebraSection", "JobOptions", "JobSpec", "MapSection",
    "ParameterSection", "PointModel", "load_job", "resolve_cuspidal", "REPORT_SCHEMA_VERSION", "Report",
]
