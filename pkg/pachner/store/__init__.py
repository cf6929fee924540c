"""Signature files and the sphere level directory."""

from pachner.store.cache import LevelCache, default_cache_dir
from pachner.store.files import (
    SignatureFile,
    format_signature_file,
    parse_signature_file,
    read_signatures,
    write_signatures,
)

__all__ = [
    "LevelCache",
    "SignatureFile",
    "default_cache_dir",
    "format_signature_file",
    "parse_signature_file",
    "read_signatures",
    "write_signatures",
]
