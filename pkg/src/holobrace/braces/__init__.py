"""정칙 부분군에서 brace 만들기."""

from holobrace.braces.brace import (
    Brace,
    brace_from_regular,
    format_brace,
    is_regular,
    verify_brace,
)
from holobrace.braces.fingerprint import brace_summary, fingerprint, group_fingerprint
from holobrace.braces.oracle import oracle_regular_classes

__all__ = [
    "Brace",
    "brace_from_regular",
    "brace_summary",
    "fingerprint",
    "format_brace",
    "group_fingerprint",
    "is_regular",
    "oracle_regular_classes",
    "verify_brace",
]
