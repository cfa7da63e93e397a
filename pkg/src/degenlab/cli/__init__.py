"""Command line entry point, suites and reports."""

from .main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, main, run
from .report import REPORT_FORMAT, Record, Report, ReportFormatError, Summary, parse_report, summarise

__all__ = [
    "EXIT_FAIL",
    "EXIT_OK",
    "EXIT_USAGE",
    "REPORT_FORMAT",
    "Record",
    "Report",
    "ReportFormatError",
    "Summary",
    "build_parser",
    "main",
    "parse_report",
    "run",
    "summarise",
]
