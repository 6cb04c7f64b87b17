"""Report and configuration models."""

from .reports import (
    COMMANDS, STATUSES, RunConfig, SeriesReport, CellDims, CellReport, CertificateReport,
    CheckResult, VerifyReport, AmbiguityRecordModel, CompletionLogReport,
)
from .convert import completion_log, series_report, certificate_report

__all__ = [
    "COMMANDS", "STATUSES", "RunConfig", "SeriesReport", "CellDims", "CellReport",
    "CertificateReport", "CheckResult", "VerifyReport", "AmbiguityRecordModel",
    "CompletionLogReport", "completion_log", "series_report", "certificate_report",
]
