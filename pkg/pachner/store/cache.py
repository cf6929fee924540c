"""Directory of sphere level files, defaulting to a per-user cache."""

import asyncio
import logging
import re
from collections.abc import Iterable, Mapping
from datetime import datetime
from pathlib import Path
from typing import Any

import platformdirs

from pachner.errors import EmptyLevel, MalformedSignature
from pachner.store.files import SignatureFile, read_signatures, write_signatures

logger = logging.getLogger(__name__)

_LEVEL_FILE = re.compile(r"^level-(\d+)\.sigs$")


def default_cache_dir() -> Path:
    """Per-user directory holding sphere levels."""
    return Path(platformdirs.user_cache_dir("pachner", "pachner")) / "spheres"


class LevelCache:
    """Async store of one-vertex sphere levels, one ``level-N.sigs`` file each."""

    def __init__(self, cache_dir: Path | None = None):
        """:param cache_dir: directory to use instead of the per-user cache"""
        self.cache_dir = cache_dir if cache_dir is not None else default_cache_dir()
        self._locks: dict[int, asyncio.Lock] = {}

    def level_file(self, n: int) -> Path:
        """Path of the level ``n`` file."""
        return self.cache_dir / f"level-{n}.sigs"

    def _get_lock(self, n: int) -> asyncio.Lock:
        if n not in self._locks:
            self._locks[n] = asyncio.Lock()
        return self._locks[n]

    def levels(self) -> list[int]:
        """Levels with a file present, ascending."""
        if not self.cache_dir.is_dir():
            return []
        found = (_LEVEL_FILE.match(p.name) for p in self.cache_dir.iterdir())
        return sorted(int(m.group(1)) for m in found if m)

    async def load_level(self, n: int) -> SignatureFile:
        """Read level ``n``.

        Raises:
            EmptyLevel: No file for the level exists.
            MalformedSignature: The file is corrupted.

        """
        path = self.level_file(n)
        if not path.exists():
            raise EmptyLevel(f"No level {n} file in {self.cache_dir}")
        async with self._get_lock(n):
            return await read_signatures(path)

    async def store_level(
        self, n: int, signatures: Iterable[str], header: Mapping[str, str] | None = None
    ) -> Path:
        """Write level ``n`` atomically."""
        async with self._get_lock(n):
            path = await write_signatures(self.level_file(n), signatures, header)
        logger.debug("Stored level %d at %s", n, path)
        return path

    async def clear_cache(self, level: int | None = None) -> int:
        """Delete one level file, or all of them. Returns the number deleted."""
        targets = [level] if level is not None else self.levels()
        cleared = 0
        for n in targets:
            path = self.level_file(n)
            if not path.exists():
                continue
            try:
                path.unlink()
                cleared += 1
            except OSError as e:
                logger.warning("Failed to delete %s: %s", path, e)
        return cleared

    async def get_cache_info(self) -> dict[int, dict[str, Any]]:
        """Per-level status: signature count, header, file size and age."""
        info: dict[int, dict[str, Any]] = {}
        for n in self.levels():
            path = self.level_file(n)
            try:
                contents = await self.load_level(n)
                stat = path.stat()
            except (MalformedSignature, OSError) as e:
                info[n] = {"error": str(e), "status": "corrupted"}
                continue
            modified = datetime.fromtimestamp(stat.st_mtime)
            info[n] = {
                "count": len(contents),
                "height": contents.header.get("height", "-"),
                "timestamp": modified.strftime("%Y-%m-%d %H:%M:%S"),
                "file_size": stat.st_size,
            }
        return info
