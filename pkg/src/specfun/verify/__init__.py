"""Identity registry: each formula of the text checked by two independent routes."""

from .core import (
    IdentityCase,
    VerificationReport,
    case,
    format_report,
    format_reports,
    registry,
    run_identity,
    run_suite,
    unexpected,
)
from .manifest import MANIFEST, UNLABELLED, uncovered

__all__ = [
    "IdentityCase",
    "VerificationReport",
    "case",
    "format_report",
    "format_reports",
    "registry",
    "run_identity",
    "run_suite",
    "unexpected",
    "MANIFEST",
    "UNLABELLED",
    "uncovered",
]
