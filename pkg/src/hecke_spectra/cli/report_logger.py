# src/hecke_spectra/cli/report_logger.py
import json
import logging
from typing import Any, Dict, List, Optional

from ..errors import HeckeSpectraError, InputError
from ..models.report import Report

_logger = logging.getLogger(__name__)


class ReportLogger:
    """Collects the rows and text lines of one command run."""

    def __init__(self, command: str, jobfile: str):
        self.command = command
        self.jobfile = jobfile
        self.rows: List[Dict[str, Any]] = []
        self.lines: List[str] = []
        self.sections: Dict[str, Any] = {}
        self.ledger: Optional[Dict[str, Any]] = None
        self.error: Optional[HeckeSpectraError] = None

    def log_text(self, line: str):
        self.lines.append(line)

    def log_row(self, kind: str, text: Optional[str] = None, **fields: Any):
        """Records one result row; ``text`` is its human-readable line."""
        self.rows.append({"kind": kind, **fields})
        if text is not None:
            self.lines.append(text)

    def log_section(self, name: str, data: Dict[str, Any]):
        self.sections[name] = data

    def log_ledger(self, ledger: Dict[str, Any]):
        self.ledger = ledger

    def log_error(self, error: HeckeSpectraError):
        self.error = error
        self.lines.append(f"error: {type(error).__name__}: {error}")

    @property
    def exit_status(self) -> int:
        return 0 if self.error is None else self.error.exit_status

    def get_results(self) -> Dict[str, Any]:
        status = "ok"
        if self.error is not None:
            status = "input_error" if isinstance(self.error, InputError) else "mathematical_failure"
        report = Report(
            command=self.command,
            jobfile=self.jobfile,
            status=status,
            exit_status=self.exit_status,
            ledger=self.ledger,
            sections=self.sections,
            rows=self.rows,
            error=None if self.error is None else self.error.to_dict(),
        )
        return report.model_dump()

    def write_json(self, file_path: str):
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(self.get_results(), f, indent=2, sort_keys=True)
            f.write("\n")
        _logger.info("Report written to %s", file_path)
