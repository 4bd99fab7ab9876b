# src/hecke_spectra/models/report.py
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

REPORT_SCHEMA_VERSION = "1"


class Report(BaseModel):
    """The machine-readable result of one CLI run; exact values are strings."""
    model_config = ConfigDict(extra="forbid")
    schema_version: str = REPORT_SCHEMA_VERSION
    command: str
    jobfile: str
    status: str = Field("ok", description="'ok', 'mathematical_failure' or 'input_error'")
    exit_status: int = 0
    ledger: Optional[Dict[str, Any]] = None
    sections: Dict[str, Any] = Field(default_factory=dict, description="Jobfile sections used, as parsed")
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    error: Optional[Dict[str, Any]] = None
