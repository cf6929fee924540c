"""Signature files: one signature per line, sorted, with ``#`` header comments."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

import aiofiles

from pachner.errors import MalformedSignature
from pachner.isosig.signature import ALPHABET

_ALLOWED = frozenset(ALPHABET)


@dataclass(frozen=True)
class SignatureFile:
    """Parsed contents of a signature file."""

    signatures: tuple[str, ...]
    header: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        """:return:"""
        return len(self.signatures)


def format_signature_file(
    signatures: Iterable[str], header: Mapping[str, str] | None = None
) -> str:
    """Render sorted, deduplicated signatures below ``# key=value`` header lines."""
    lines = [f"# {key}={value}" for key, value in (header or {}).items()]
    lines.extend(sorted(set(signatures)))
    return "\n".join(lines) + "\n" if lines else ""


def parse_signature_file(text: str) -> SignatureFile:
    """Parse a signature file.

    Comment lines of the form ``# key=value`` populate the header; other
    comments and blank lines are ignored.

    Raises:
        MalformedSignature: A line contains characters outside the alphabet.

    """
    header: dict[str, str] = {}
    signatures: list[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                header[key.strip()] = value.strip()
            continue
        if not _ALLOWED.issuperset(line):
            raise MalformedSignature(f"Line {number}: not a signature: {line!r}")
        signatures.append(line)
    return SignatureFile(tuple(sorted(set(signatures))), header)


async def write_signatures(
    path: Path, signatures: Iterable[str], header: Mapping[str, str] | None = None
) -> Path:
    """Write a signature file atomically and return its path."""
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_file = path.with_suffix(path.suffix + ".tmp")
    async with aiofiles.open(temp_file, "w") as f:
        await f.write(format_signature_file(signatures, header))
    temp_file.replace(path)
    return path


async def read_signatures(path: Path) -> SignatureFile:
    """Read and parse a signature file."""
    async with aiofiles.open(path) as f:
        content = await f.read()
    return parse_signature_file(content)
