from .engine import (
    REGISTRY,
    SUITES,
    Gen,
    Law,
    LawReport,
    Reject,
    law,
    reports_json,
    run_law,
    run_laws,
    select,
    summarize,
)

__all__ = ["REGISTRY", "SUITES", "Gen", "Law", "LawReport", "Reject", "law", "reports_json", "run_law", "run_laws", "select", "summarize"]
