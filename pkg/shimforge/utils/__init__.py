"""
Utility functions for shimforge.
"""
from .helpers import (
    ensure_dir,
    write_text,
    parse_int_list,
    parse_signatures,
)
from .logger import log, setup_logger

__all__ = [
    # Helpers
    "ensure_dir",
    "write_text",
    "parse_int_list",
    "parse_signatures",
    # Logger
    "log",
    "setup_logger",
]
