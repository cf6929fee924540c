import asyncio
from pathlib import Path

import pytest

from pachner.errors import EmptyLevel
from pachner.store import LevelCache, default_cache_dir


def test_default_directory(monkeypatch, tmp_path):
    monkeypatch.setattr("platformdirs.user_cache_dir", lambda *args: str(tmp_path))
    assert default_cache_dir() == tmp_path / "spheres"
    assert LevelCache().cache_dir == tmp_path / "spheres"


def test_store_and_load_levels(tmp_path):
    cache = LevelCache(tmp_path)

    async def _run():
        await cache.store_level(2, ["c", "a", "b"], {"height": "2"})
        await cache.store_level(10, ["d"])
        return await cache.load_level(2)

    contents = asyncio.run(_run())
    assert contents.signatures == ("a", "b", "c")
    assert contents.header["height"] == "2"
    assert cache.levels() == [2, 10]
    assert cache.level_file(2) == tmp_path / "level-2.sigs"


def test_missing_level(tmp_path):
    with pytest.raises(EmptyLevel):
        asyncio.run(LevelCache(tmp_path).load_level(3))


def test_missing_directory_has_no_levels(tmp_path):
    assert LevelCache(tmp_path / "nowhere").levels() == []


def test_cache_info_and_clear(tmp_path):
    cache = LevelCache(tmp_path)
    (tmp_path / "level-5.sigs").write_text("not a signature\n")
    (tmp_path / "notes.txt").write_text("ignored")

    async def _run():
        await cache.store_level(3, ["a", "b"], {"height": "2"})
        info = await cache.get_cache_info()
        cleared_one = await cache.clear_cache(3)
        cleared_rest = await cache.clear_cache()
        return info, cleared_one, cleared_rest

    info, cleared_one, cleared_rest = asyncio.run(_run())
    assert info[3]["count"] == 2
    assert info[3]["height"] == "2"
    assert info[5]["status"] == "corrupted"
    assert cleared_one == 1
    assert cleared_rest == 1
    assert Path(tmp_path / "notes.txt").exists()
    assert cache.levels() == []
